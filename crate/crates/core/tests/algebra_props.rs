//! Group-algebra, matrix and Fourier-transform properties on random inputs.

mod common;

use gainswitch::gg_matrix::GAMatrix;
use gainswitch::group_algebra::GAElement;
use gainswitch::groups::Group;
use gainswitch::representations::Representation;
use gainswitch::{max_abs, max_abs_diff, C64};
use proptest::prelude::*;
use rand::Rng;

const D8: Group = Group::Dihedral(4);
const S3: Group = Group::Symmetric(3);

/// Up to `max` terms `(element index, re, im)` with small integer parts.
fn terms(max: usize) -> impl Strategy<Value = Vec<(usize, i8, i8)>> {
    prop::collection::vec((0usize..64, -4i8..=4, -4i8..=4), 0..=max)
}

fn build(group: Group, t: &[(usize, i8, i8)]) -> GAElement {
    let elems = group.elements().unwrap();
    let mut x = GAElement::zero(group).unwrap();
    for &(idx, re, im) in t {
        x.add_term(C64::new(re as f64, im as f64), &elems[idx % elems.len()]).unwrap();
    }
    x
}

/// Convolution computed directly from the multiplication table.
fn convolve(f: &GAElement, h: &GAElement) -> Vec<C64> {
    let group = f.group();
    let elems = group.elements().unwrap();
    let mut out = vec![C64::new(0.0, 0.0); elems.len()];
    for x in &elems {
        for y in &elems {
            let z = group.index_of(&x.compose(y)).unwrap();
            out[z] += f.coeff(x) * h.coeff(y);
        }
    }
    out
}

proptest! {
    #[test]
    fn multiplication_is_associative(a in terms(4), b in terms(4), c in terms(4), s3 in any::<bool>()) {
        let g = if s3 { S3 } else { D8 };
        let (a, b, c) = (build(g, &a), build(g, &b), build(g, &c));
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn product_matches_convolution(a in terms(5), b in terms(5)) {
        let (a, b) = (build(D8, &a), build(D8, &b));
        let p = a.mul(&b).unwrap();
        for (idx, x) in D8.elements().unwrap().iter().enumerate() {
            prop_assert!((p.coeff(x) - convolve(&a, &b)[idx]).norm() <= 1e-12);
        }
    }

    #[test]
    fn star_is_an_anti_involution(a in terms(4), b in terms(4), s3 in any::<bool>()) {
        let g = if s3 { S3 } else { D8 };
        let (a, b) = (build(g, &a), build(g, &b));
        prop_assert_eq!(a.star().star(), a.clone());
        prop_assert_eq!(a.mul(&b).unwrap().star(), b.star().mul(&a.star()).unwrap());
    }

    #[test]
    fn mu_is_multiplicative_on_abelian_groups(a in terms(4), b in terms(4), n in 2u32..7) {
        let g = Group::Cyclic(n);
        let (a, b) = (build(g, &a), build(g, &b));
        let mu = a.mul(&b).unwrap().mu().unwrap();
        let conv = convolve(&a, &b);
        for (idx, x) in g.elements().unwrap().iter().enumerate() {
            prop_assert!((mu.value_at(x).unwrap() - conv[idx]).norm() <= 1e-12);
        }
    }

    #[test]
    fn mu_sums_over_classes(a in terms(6)) {
        let a = build(D8, &a);
        let mu = a.mu().unwrap();
        for class in D8.conjugacy_classes().unwrap() {
            let total: C64 = class.iter().map(|x| a.coeff(x)).sum();
            for x in &class {
                prop_assert!((mu.value_at(x).unwrap() - total).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn element_fourier_is_multiplicative(a in terms(4), b in terms(4)) {
        let (a, b) = (build(D8, &a), build(D8, &b));
        for rep in Representation::complete_system(D8).unwrap() {
            let lhs = rep.apply_cg(&a.mul(&b).unwrap()).unwrap();
            let rhs = rep.apply_cg(&a).unwrap() * rep.apply_cg(&b).unwrap();
            prop_assert!(max_abs_diff(&lhs, &rhs) <= 1e-9);
        }
    }
}

fn random_matrix(rng: &mut impl Rng, group: Group, rows: usize, cols: usize, max_terms: usize) -> GAMatrix {
    let elems = group.elements().unwrap();
    GAMatrix::from_fn(group, rows, cols, |_, _| {
        let mut x = GAElement::zero(group)?;
        for _ in 0..rng.gen_range(0..=max_terms) {
            let c = C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            x.add_term(c, &elems[rng.gen_range(0..elems.len())])?;
        }
        Ok(x)
    })
    .unwrap()
}

#[test]
fn fourier_is_an_algebra_homomorphism() {
    let mut rng = common::rng(101);
    let mut reps = Representation::complete_system(D8).unwrap();
    reps.push(Representation::regular(D8).unwrap());
    for _ in 0..30 {
        let m = random_matrix(&mut rng, D8, 3, 3, 3);
        let n = random_matrix(&mut rng, D8, 3, 3, 3);
        for rep in &reps {
            let lhs = rep.fourier(&m.mul(&n).unwrap()).unwrap();
            let rhs = rep.fourier(&m).unwrap() * rep.fourier(&n).unwrap();
            assert!(max_abs_diff(&lhs, &rhs) <= 1e-9, "{}", rep.name());
            let star = rep.fourier(&m.star()).unwrap();
            assert!(max_abs_diff(&star, &rep.fourier(&m).unwrap().adjoint()) <= 1e-9);
            let sum = rep.fourier(&m.add(&n).unwrap()).unwrap();
            assert!(max_abs_diff(&sum, &(rep.fourier(&m).unwrap() + rep.fourier(&n).unwrap())) <= 1e-9);
        }
    }
}

#[test]
fn regular_fourier_is_injective() {
    let mut rng = common::rng(102);
    let lambda = Representation::regular(D8).unwrap();
    let mut seen = 0;
    while seen < 20 {
        let m = random_matrix(&mut rng, D8, 3, 3, 2);
        if m.is_zero() {
            continue;
        }
        seen += 1;
        assert!(max_abs(&lambda.fourier(&m).unwrap()) > 1e-9);
    }
    let zero = GAMatrix::zeros(D8, 3, 3).unwrap();
    assert_eq!(max_abs(&lambda.fourier(&zero).unwrap()), 0.0);
}

#[test]
fn trivial_rep_fourier_of_adjacency_is_underlying() {
    for id in ["t-example", "s4-example", "d8-example"] {
        let ex = gainswitch::catalog::by_name(id).unwrap().unwrap();
        let pi0 = Representation::trivial(ex.graph.group());
        let a = pi0.fourier(&ex.graph.adjacency().unwrap()).unwrap();
        let u = pi0.fourier(&ex.graph.underlying().adjacency().unwrap()).unwrap();
        assert_eq!(a, u, "{id}");
        for r in 0..a.nrows() {
            for c in 0..a.ncols() {
                let expect = if ex.graph.are_adjacent(r, c) { 1.0 } else { 0.0 };
                assert_eq!(a[(r, c)], C64::new(expect, 0.0));
            }
        }
    }
}

#[test]
fn matrix_star_reverses_products() {
    let mut rng = common::rng(103);
    for _ in 0..20 {
        let m = random_matrix(&mut rng, S3, 2, 3, 3);
        let n = random_matrix(&mut rng, S3, 3, 4, 3);
        assert_eq!(m.mul(&n).unwrap().star(), n.star().mul(&m.star()).unwrap());
        assert_eq!(m.star().star(), m);
        let i2 = GAMatrix::identity(S3, 2).unwrap();
        assert_eq!(i2.mul(&m).unwrap(), m);
    }
}

#[test]
fn trace_is_cyclic_against_scalar_matrices() {
    let mut rng = common::rng(104);
    for _ in 0..20 {
        let n = rng.gen_range(1..=5);
        let diag: Vec<f64> = (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let mut d = GAMatrix::scalar_diag(D8, &diag).unwrap();
        for r in 0..n {
            for c in 0..n {
                if r != c && rng.gen_bool(0.5) {
                    let s = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    d[(r, c)] = GAElement::scalar(D8, s).unwrap();
                }
            }
        }
        let s = random_matrix(&mut rng, D8, n, n, 3);
        let ds = d.mul(&s).unwrap().trace().unwrap();
        let sd = s.mul(&d).unwrap().trace().unwrap();
        assert!(ds.max_diff(&sd) <= 1e-12);
    }
}

#[test]
fn adjacency_power_counts_walk_gains() {
    let mut rng = common::rng(105);
    for _ in 0..10 {
        let (g, _) = common::planted_g_gm(&mut rng, S3);
        let a = g.adjacency().unwrap();
        let a2 = a.pow(2).unwrap();
        for u in 0..g.order() {
            for w in 0..g.order() {
                let mut walks = GAElement::zero(S3).unwrap();
                for v in g.neighbors(u) {
                    if g.are_adjacent(v, w) {
                        walks.add_term(C64::new(1.0, 0.0), &g.walk_gain(&[u, v, w]).unwrap()).unwrap();
                    }
                }
                assert_eq!(a2[(u, w)], walks);
            }
        }
    }
}

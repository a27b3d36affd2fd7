//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use gainswitch::gain_graph::{GainGraph, Partition};
use gainswitch::groups::{Group, GroupElement};
use gainswitch::quaternions::{QuatMatrix, Quaternion};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_element(rng: &mut impl Rng, group: Group) -> GroupElement {
    *group.elements().unwrap().choose(rng).unwrap()
}

pub fn involutions(group: Group) -> Vec<GroupElement> {
    group
        .elements()
        .unwrap()
        .into_iter()
        .filter(|g| g.compose(g).is_identity())
        .collect()
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Edge map under construction, keyed by oriented pair.
#[derive(Default)]
pub struct EdgeSet(BTreeMap<(usize, usize), GroupElement>);

impl EdgeSet {
    pub fn put(&mut self, u: usize, v: usize, g: GroupElement) {
        self.0.remove(&(v, u));
        self.0.insert((u, v), g);
    }

    pub fn graph(&self, group: Group, n: usize) -> GainGraph {
        let mut g = GainGraph::with_numbered_vertices(group, "x", 0, n).unwrap();
        for (&(u, v), &gain) in &self.0 {
            g.set_gain(u, v, gain).unwrap();
        }
        g
    }
}

/// A random graph with a G-GM partition planted by construction: circulant
/// cells, biregular blocks between cells, and `C0` rows that are empty,
/// constant, or half/half.
pub fn planted_g_gm(rng: &mut impl Rng, group: Group) -> (GainGraph, Partition) {
    let elems = group.elements().unwrap();
    let invs = involutions(group);
    let k = rng.gen_range(1..=3);
    let c0_size = rng.gen_range(0..=2);
    let mut sizes = vec![c0_size];
    for _ in 0..k {
        sizes.push(rng.gen_range(1..=4));
    }
    let n: usize = sizes.iter().sum();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut cells = Vec::new();
    let mut at = 0;
    for &s in &sizes {
        cells.push(perm[at..at + s].to_vec());
        at += s;
    }
    let mut edges = EdgeSet::default();
    for cell in cells.iter().skip(1) {
        let s = cell.len();
        for d in 1..=s / 2 {
            if !rng.gen_bool(0.6) {
                continue;
            }
            if 2 * d == s {
                let g = *invs.choose(rng).unwrap();
                for j in 0..d {
                    edges.put(cell[j], cell[j + d], g);
                }
            } else {
                let g = *elems.choose(rng).unwrap();
                for j in 0..s {
                    edges.put(cell[j], cell[(j + d) % s], g);
                }
            }
        }
    }
    for i in 1..cells.len() {
        for j in i + 1..cells.len() {
            let (ci, cj) = (&cells[i], &cells[j]);
            let d = gcd(ci.len(), cj.len());
            let mut shifts: Vec<usize> = (0..d).collect();
            shifts.shuffle(rng);
            let layers = rng.gen_range(0..=d.min(2));
            for &t in &shifts[..layers] {
                let g = *elems.choose(rng).unwrap();
                for (a, &u) in ci.iter().enumerate() {
                    for (b, &w) in cj.iter().enumerate() {
                        if a % d == (b + t) % d {
                            edges.put(u, w, g);
                        }
                    }
                }
            }
        }
    }
    for &v in &cells[0] {
        for cell in cells.iter().skip(1) {
            let s = cell.len();
            match rng.gen_range(0..3) {
                0 => {}
                1 => {
                    let g = *elems.choose(rng).unwrap();
                    for &w in cell {
                        edges.put(v, w, g);
                    }
                }
                _ if s % 2 == 0 => {
                    let g1 = *elems.choose(rng).unwrap();
                    let g2 = if rng.gen_bool(0.5) {
                        None
                    } else {
                        Some(*elems.choose(rng).unwrap())
                    };
                    let mut order = cell.clone();
                    order.shuffle(rng);
                    for (idx, &w) in order.iter().enumerate() {
                        match (idx < s / 2, g2) {
                            (true, _) => edges.put(v, w, g1),
                            (false, Some(g)) => edges.put(v, w, g),
                            (false, None) => {}
                        }
                    }
                }
                _ => {}
            }
        }
    }
    let c0 = cells[0].clone();
    for (idx, &u) in c0.iter().enumerate() {
        for &w in &c0[idx + 1..] {
            if rng.gen_bool(0.5) {
                edges.put(u, w, *elems.choose(rng).unwrap());
            }
        }
    }
    let g = edges.graph(group, n);
    let alpha = Partition::from_indices(n, cells).unwrap();
    (g, alpha)
}

/// Multiplies random edges inside `∪_{i≥1} C_i` by kernel elements.
pub fn kernel_perturb(
    rng: &mut impl Rng,
    g: &GainGraph,
    alpha: &Partition,
    kernel: &[GroupElement],
) -> GainGraph {
    let c0 = &alpha.cells()[0];
    let mut out = g.clone();
    let edges: Vec<(usize, usize)> = g
        .oriented_edges()
        .filter(|(u, v, _)| !c0.contains(u) && !c0.contains(v))
        .map(|(u, v, _)| (u, v))
        .collect();
    for (u, v) in edges {
        if rng.gen_bool(0.5) {
            let k = kernel.choose(rng).unwrap();
            out = out.multiply_gain(u, v, k).unwrap();
        }
    }
    out
}

/// Rewrites one `C0` row into a cell as pairs `{g, s·g}` on a random even
/// subset, so that its image under any `π` with `π(s) = -I` vanishes.
pub fn central_row(rng: &mut impl Rng, g: &GainGraph, alpha: &Partition, s: GroupElement) -> GainGraph {
    let cells = alpha.cells();
    let mut out = g.clone();
    let Some(&v) = cells[0].first() else {
        return out;
    };
    let targets: Vec<usize> = (1..cells.len()).filter(|&i| cells[i].len() >= 2).collect();
    let Some(&i) = targets.choose(rng) else {
        return out;
    };
    let mut cell = cells[i].clone();
    cell.shuffle(rng);
    for &w in &cell {
        out.remove_edge(v, w);
    }
    let pairs = rng.gen_range(1..=cell.len() / 2);
    for p in 0..pairs {
        let x = random_element(rng, g.group());
        out.set_gain(v, cell[2 * p], x).unwrap();
        out.set_gain(v, cell[2 * p + 1], s.compose(&x)).unwrap();
    }
    out
}

/// Changes one random edge gain, or toggles one random vertex pair.
pub fn perturb(rng: &mut impl Rng, g: &GainGraph) -> GainGraph {
    let n = g.order();
    let mut out = g.clone();
    if n < 2 {
        return out;
    }
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    if out.are_adjacent(u, v) && rng.gen_bool(0.5) {
        out.remove_edge(u, v);
    } else {
        out.set_gain(u, v, random_element(rng, g.group())).unwrap();
    }
    out
}

/// A random vertex permutation and switching function applied to `g`.
pub fn random_gauge_perm(rng: &mut impl Rng, g: &GainGraph) -> (GainGraph, Vec<usize>, Vec<GroupElement>) {
    let n = g.order();
    let mut phi: Vec<usize> = (0..n).collect();
    phi.shuffle(rng);
    let f: Vec<GroupElement> = (0..n).map(|_| random_element(rng, g.group())).collect();
    (g.transport(&phi, &f).unwrap(), phi, f)
}

pub fn random_quaternion(rng: &mut impl Rng) -> Quaternion {
    Quaternion::new(
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    )
}

pub fn random_unit_quaternion(rng: &mut impl Rng) -> Quaternion {
    loop {
        let q = random_quaternion(rng);
        let n = q.norm();
        if n > 0.1 {
            return q * (1.0 / n);
        }
    }
}

pub fn random_quat_matrix(rng: &mut impl Rng, n: usize) -> QuatMatrix {
    QuatMatrix::from_fn(n, |_, _| random_quaternion(rng))
}

pub fn random_hermitian_quat_matrix(rng: &mut impl Rng, n: usize) -> QuatMatrix {
    let a = random_quat_matrix(rng, n);
    let mut h = a.add(&a.adjoint()).unwrap();
    for i in 0..n {
        let d = h[(i, i)].a;
        h[(i, i)] = Quaternion::real(d);
    }
    h
}

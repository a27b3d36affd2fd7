//! Gain-graph invariants, switching isomorphism cross-checks and the worked
//! examples' intermediate values.

mod common;

use gainswitch::catalog;
use gainswitch::gain_graph::GainGraph;
use gainswitch::group_algebra::GAElement;
use gainswitch::groups::{Group, GroupElement};
use gainswitch::switching;
use gainswitch::C64;
use rand::Rng;

const GROUPS: [Group; 5] = [
    Group::Cyclic(5),
    Group::RootsOfUnity(4),
    Group::Dihedral(4),
    Group::Symmetric(3),
    Group::Symmetric(4),
];

fn random_graph(rng: &mut impl Rng, group: Group, n: usize, p: f64) -> GainGraph {
    let mut g = GainGraph::with_numbered_vertices(group, "v", 1, n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v, common::random_element(rng, group)).unwrap();
            }
        }
    }
    g
}

#[test]
fn adjacency_is_star_invariant() {
    let mut rng = common::rng(201);
    for group in GROUPS {
        for _ in 0..100 {
            let n = rng.gen_range(1..=7);
            let g = random_graph(&mut rng, group, n, 0.5);
            let a = g.adjacency().unwrap();
            assert_eq!(a.star(), a);
            for u in 0..n {
                for v in 0..n {
                    match g.gain(u, v) {
                        Some(x) => assert_eq!(g.gain(v, u), Some(x.inv())),
                        None => assert!(!g.are_adjacent(v, u)),
                    }
                }
            }
        }
    }
}

/// Balance by brute force: every cycle closed from a spanning forest has
/// trivial gain iff the potential built along the forest is consistent.
fn balanced_oracle(g: &GainGraph) -> bool {
    let n = g.order();
    let mut pot: Vec<Option<GroupElement>> = vec![None; n];
    for root in 0..n {
        if pot[root].is_some() {
            continue;
        }
        pot[root] = Some(g.group().identity());
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for v in g.neighbors(u) {
                let via = pot[u].unwrap().compose(&g.gain(u, v).unwrap());
                match pot[v] {
                    None => {
                        pot[v] = Some(via);
                        stack.push(v);
                    }
                    Some(p) if p != via => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

#[test]
fn balance_agrees_with_switching_to_trivial_gains() {
    let mut rng = common::rng(202);
    let mut counts = [0, 0];
    for group in GROUPS {
        for trial in 0..40 {
            let n = rng.gen_range(1..=8);
            let g = if trial % 3 == 0 {
                let base = random_graph(&mut rng, group, n, 0.4).underlying();
                let (h, _, _) = common::random_gauge_perm(&mut rng, &base);
                h
            } else {
                random_graph(&mut rng, group, n, 0.4)
            };
            let trivial = g.underlying();
            let balanced = g.is_balanced();
            assert_eq!(balanced, balanced_oracle(&g));
            let iso = g.switching_isomorphic(&trivial).unwrap();
            assert_eq!(balanced, iso.is_some(), "{group}, n = {n}");
            counts[balanced as usize] += 1;
        }
    }
    assert!(counts[0] > 10 && counts[1] > 10, "{counts:?}");
}

#[test]
fn trees_are_balanced() {
    let mut rng = common::rng(203);
    for group in GROUPS {
        for _ in 0..20 {
            let n = rng.gen_range(1..=9);
            let mut g = GainGraph::with_numbered_vertices(group, "t", 0, n).unwrap();
            for v in 1..n {
                let parent = rng.gen_range(0..v);
                g.add_edge(parent, v, common::random_element(&mut rng, group)).unwrap();
            }
            assert!(g.is_balanced());
        }
    }
}

#[test]
fn four_cycle_with_one_i_is_unbalanced() {
    let group = Group::RootsOfUnity(4);
    let mut g = GainGraph::with_numbered_vertices(group, "c", 1, 4).unwrap();
    for (u, v) in [(0, 1), (1, 2), (2, 3)] {
        g.add_edge(u, v, GroupElement::root(4, 0)).unwrap();
    }
    g.add_edge(3, 0, GroupElement::root(4, 1)).unwrap();
    assert_eq!(g.walk_gain(&[0, 1, 2, 3, 0]).unwrap(), GroupElement::root(4, 1));
    assert!(!g.is_balanced());
}

#[test]
fn found_witnesses_compose_to_identity() {
    let mut rng = common::rng(204);
    for group in [Group::Dihedral(4), Group::Symmetric(3), Group::RootsOfUnity(4)] {
        for _ in 0..20 {
            let n = rng.gen_range(2..=7);
            let g = random_graph(&mut rng, group, n, 0.5);
            let self_w = g.switching_isomorphic(&g).unwrap().expect("reflexive");
            assert_eq!(g.transport(&self_w.phi, &self_w.f).unwrap(), g);
            let (h, _, _) = common::random_gauge_perm(&mut rng, &g);
            let w = g.switching_isomorphic(&h).unwrap().expect("gauge copy detected");
            let moved = g.transport(&w.phi, &w.f).unwrap();
            assert_eq!(moved, h);
            let again = moved.switching_isomorphic(&h).unwrap().expect("reflexive after transport");
            assert_eq!(h.transport(&again.phi, &again.f).unwrap(), h);
        }
    }
}

#[test]
fn t_example_hub_row_and_sums() {
    let ex = catalog::t_example().unwrap();
    let g = &ex.graph;
    let v0 = g.require_vertex("v0").unwrap();
    let i = GroupElement::root(4, 1);
    let one = GroupElement::root(4, 0);
    let row: Vec<GroupElement> = (1..=8).map(|j| g.gain(v0, j).unwrap()).collect();
    assert_eq!(row.iter().filter(|x| **x == i).count(), 4);
    assert_eq!(row.iter().filter(|x| **x == one).count(), 4);
    assert!(g.switching_isomorphic(&ex.switched).unwrap().is_none());
}

#[test]
fn s4_psi_sum_at_v6() {
    let ex = catalog::s4_example().unwrap();
    let g = &ex.graph;
    let v6 = g.require_vertex("v6").unwrap();
    let sum = switching::psi_sum(g, v6, &ex.partition.cells()[1]).unwrap();
    let expected = GAElement::from_terms(
        g.group(),
        &[
            (C64::new(1.0, 0.0), GroupElement::perm(4, "(1 2)")),
            (C64::new(1.0, 0.0), GroupElement::perm(4, "(3 4)")),
        ],
    )
    .unwrap();
    assert_eq!(sum, expected);
}

#[test]
fn star_of_psi_sum_is_sum_of_inverse_gains() {
    for id in ["t-example", "s4-example", "d8-example"] {
        let ex = catalog::by_name(id).unwrap().unwrap();
        let g = &ex.graph;
        let all: Vec<usize> = (0..g.order()).collect();
        for v in 0..g.order() {
            let mut inverse = GAElement::zero(g.group()).unwrap();
            for w in g.neighbors(v) {
                inverse.add_term(C64::new(1.0, 0.0), &g.gain(v, w).unwrap().inv()).unwrap();
            }
            assert_eq!(switching::psi_sum(g, v, &all).unwrap().star(), inverse, "{id}");
        }
    }
}

#[test]
fn kernel_multiplication_keeps_represented_adjacency() {
    let mut rng = common::rng(205);
    let d8 = Group::Dihedral(4);
    for name in ["dlin:10", "dlin:01", "dlin:11", "trivial"] {
        let rep = gainswitch::Representation::builtin(d8, name).unwrap();
        let kernel = rep.kernel_elements().unwrap();
        for _ in 0..10 {
            let (g, alpha) = common::planted_g_gm(&mut rng, d8);
            let h = common::kernel_perturb(&mut rng, &g, &alpha, &kernel);
            let a = gainswitch::representations::represented_adjacency(&g, &rep).unwrap();
            let b = gainswitch::representations::represented_adjacency(&h, &rep).unwrap();
            assert_eq!(a, b, "{name}");
        }
    }
}

#[test]
fn multiply_by_identity_is_a_no_op() {
    let ex = catalog::d8_example().unwrap();
    let g = &ex.graph;
    for (u, v, _) in g.oriented_edges() {
        assert_eq!(g.multiply_gain(u, v, &g.group().identity()).unwrap(), *g);
    }
}

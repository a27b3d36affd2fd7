//! GM predicates across representations, switching involutions and the
//! conjugation identity on examples and planted instances.

mod common;

use gainswitch::catalog;
use gainswitch::gain_graph::{GainGraph, Partition};
use gainswitch::groups::{Group, GroupElement};
use gainswitch::representations::{represented_adjacency, Representation};
use gainswitch::switching::{self, CellAction, Violation};
use gainswitch::max_abs_diff;
use rand::Rng;

fn builtins(group: Group) -> Vec<Representation> {
    let mut reps = Representation::complete_system(group).unwrap();
    reps.push(Representation::regular(group).unwrap());
    let extra: &[&str] = match group {
        Group::Symmetric(_) => &["permutation"],
        Group::RootsOfUnity(_) => &["identical"],
        _ => &[],
    };
    for name in extra {
        reps.push(Representation::builtin(group, name).unwrap());
    }
    reps
}

fn example_cases() -> Vec<(&'static str, GainGraph, Partition)> {
    let mut out = Vec::new();
    for id in catalog::EXAMPLE_IDS {
        let ex = catalog::by_name(id).unwrap().unwrap();
        if ex.graph.group().is_finite() {
            out.push((id, ex.graph, ex.partition.clone()));
            out.push((id, ex.switched, ex.partition));
        }
    }
    let k = catalog::s4_kernel_chain().unwrap();
    for g in [k.psi1, k.psi2, k.psi2_switched, k.psi3] {
        out.push(("s4-kernel", g, k.partition.clone()));
    }
    out
}

fn random_cases(seed: u64, group: Group, count: usize) -> Vec<(GainGraph, Partition)> {
    let mut rng = common::rng(seed);
    (0..count)
        .map(|idx| {
            let (g, alpha) = common::planted_g_gm(&mut rng, group);
            let g = if idx % 2 == 1 { common::perturb(&mut rng, &g) } else { g };
            (g, alpha)
        })
        .collect()
}

#[test]
fn g_gm_implies_pi_gm_for_every_builtin() {
    let mut cases: Vec<(String, GainGraph, Partition)> =
        example_cases().into_iter().map(|(id, g, a)| (id.to_string(), g, a)).collect();
    for (seed, group) in [(301, Group::Dihedral(4)), (302, Group::Symmetric(3)), (303, Group::RootsOfUnity(4))] {
        for (g, a) in random_cases(seed, group, 10) {
            cases.push((format!("random {group}"), g, a));
        }
    }
    let mut positives = 0;
    for (name, g, alpha) in &cases {
        if switching::check_g_gm(g, alpha).is_err() {
            continue;
        }
        positives += 1;
        for rep in builtins(g.group()) {
            assert!(
                switching::check_pi_gm(g, alpha, &rep, false).is_ok(),
                "{name}: G-GM but not {}-GM",
                rep.name()
            );
        }
    }
    assert!(positives >= 10);
}

#[test]
fn direct_sum_coherence() {
    let mut cases: Vec<(GainGraph, Partition)> = Vec::new();
    for id in ["s4-example", "d8-example"] {
        let ex = catalog::by_name(id).unwrap().unwrap();
        cases.push((ex.graph, ex.partition.clone()));
        cases.push((ex.switched, ex.partition));
    }
    cases.extend(random_cases(304, Group::Dihedral(4), 10));
    let mut rng = common::rng(305);
    for _ in 0..10 {
        let (g, alpha) = common::planted_g_gm(&mut rng, Group::Symmetric(4));
        let sign = Representation::builtin(Group::Symmetric(4), "sign").unwrap();
        let g = common::kernel_perturb(&mut rng, &g, &alpha, &sign.kernel_elements().unwrap());
        cases.push((g, alpha));
    }
    let mut mixed = 0;
    for (g, alpha) in &cases {
        let reps = builtins(g.group());
        for (i, p1) in reps.iter().enumerate() {
            for p2 in &reps[i..] {
                if p1.degree() + p2.degree() > 30 {
                    continue;
                }
                let sum = Representation::direct_sum(p1, p2).unwrap();
                let a = switching::check_pi_gm(g, alpha, p1, false).is_ok();
                let b = switching::check_pi_gm(g, alpha, p2, false).is_ok();
                let s = switching::check_pi_gm(g, alpha, &sum, false).is_ok();
                assert_eq!(a && b, s, "{} + {}", p1.name(), p2.name());
                mixed += (a != b) as usize;
            }
        }
    }
    assert!(mixed > 0, "no case separated two representations");
}

#[test]
fn direct_sum_of_dihedral2_keeps_central_case() {
    let ex = catalog::d8_example().unwrap();
    let pi2 = Representation::builtin(ex.graph.group(), "dihedral2").unwrap();
    let sum = Representation::direct_sum(&pi2, &pi2).unwrap();
    let plan = switching::check_pi_gm(&ex.graph, &ex.partition, &sum, true).unwrap();
    assert!(!plan.is_swap_only());
    let sign_like = Representation::builtin(ex.graph.group(), "dlin:01").unwrap();
    let mixed = Representation::direct_sum(&pi2, &sign_like).unwrap();
    assert!(switching::check_pi_gm(&ex.graph, &ex.partition, &mixed, true).is_err());
}

#[test]
fn swap_plans_are_involutive() {
    let mut rng = common::rng(306);
    for group in [Group::Dihedral(4), Group::Symmetric(3), Group::Cyclic(6)] {
        for _ in 0..30 {
            let (g, alpha) = common::planted_g_gm(&mut rng, group);
            let plan = switching::check_g_gm(&g, &alpha).unwrap();
            assert!(plan.is_swap_only());
            let once = switching::apply_switch(&g, &alpha, &plan).unwrap();
            assert_eq!(switching::apply_switch(&once, &alpha, &plan).unwrap(), g);
        }
    }
}

#[test]
fn central_multiply_twice_is_invisible_to_pi() {
    let mut rng = common::rng(307);
    let d8 = Group::Dihedral(4);
    let pi2 = Representation::builtin(d8, "dihedral2").unwrap();
    let a2 = GroupElement::dihedral(4, 2, false);
    let ex = catalog::d8_example().unwrap();
    let mut cases = vec![(ex.graph, ex.partition)];
    while cases.len() < 20 {
        let (g, alpha) = common::planted_g_gm(&mut rng, d8);
        if alpha.cells()[0].is_empty() {
            continue;
        }
        cases.push((common::central_row(&mut rng, &g, &alpha, a2), alpha));
    }
    let mut central = 0;
    for (g, alpha) in &cases {
        let plan = switching::check_pi_gm(g, alpha, &pi2, true).unwrap();
        central += (!plan.is_swap_only()) as usize;
        let twice = switching::apply_switch(&switching::apply_switch(g, alpha, &plan).unwrap(), alpha, &plan).unwrap();
        let d = max_abs_diff(
            &represented_adjacency(&twice, &pi2).unwrap(),
            &represented_adjacency(g, &pi2).unwrap(),
        );
        assert!(d <= 1e-9);
    }
    assert!(central >= 5, "{central}");
}

#[test]
fn conjugation_identity_on_examples() {
    let t = catalog::t_example().unwrap();
    let plan = switching::check_g_gm(&t.graph, &t.partition).unwrap();
    assert!(switching::verify_conjugation(&t.graph, &t.partition, &plan, None).unwrap());

    let s = catalog::s4_example().unwrap();
    let group = s.graph.group();
    let pi_p = Representation::builtin(group, "permutation").unwrap();
    let pi_s = Representation::builtin(group, "sign").unwrap();
    let plan = switching::check_pi_gm(&s.graph, &s.partition, &pi_p, false).unwrap();
    assert!(switching::verify_conjugation(&s.graph, &s.partition, &plan, Some(&pi_p)).unwrap());
    assert!(!switching::verify_conjugation(&s.graph, &s.partition, &plan, Some(&pi_s)).unwrap());
    assert!(!switching::verify_conjugation(&s.graph, &s.partition, &plan, None).unwrap());

    let d = catalog::d8_example().unwrap();
    let pi2 = Representation::builtin(d.graph.group(), "dihedral2").unwrap();
    let plan = switching::check_pi_gm(&d.graph, &d.partition, &pi2, true).unwrap();
    assert!(switching::verify_conjugation(&d.graph, &d.partition, &plan, Some(&pi2)).unwrap());
}

#[test]
fn odd_cells_accept_full_rows_only() {
    let group = Group::Symmetric(3);
    let mut g = GainGraph::with_numbered_vertices(group, "v", 0, 4).unwrap();
    let t = GroupElement::perm(3, "(1 2)");
    for w in 1..4 {
        g.add_edge(0, w, t).unwrap();
    }
    let alpha = Partition::from_indices(4, vec![vec![0], vec![1, 2, 3]]).unwrap();
    let plan = switching::check_g_gm(&g, &alpha).unwrap();
    assert_eq!(plan.get(0, 1), Some(CellAction::Swap(Some(t), Some(t))));
    g.remove_edge(0, 3);
    match switching::check_g_gm(&g, &alpha) {
        Err(Violation::HalfHalf { cell, vertex, reason }) => {
            assert_eq!((cell, vertex.as_str()), (1, "v0"));
            assert!(reason.contains("odd size 3"), "{reason}");
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn edgeless_singletons_give_skips() {
    let mut rng = common::rng(308);
    for _ in 0..5 {
        let n = rng.gen_range(2..=8);
        let g = GainGraph::with_numbered_vertices(Group::Dihedral(4), "v", 0, n).unwrap();
        let cells: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        let alpha = Partition::from_indices(n, cells).unwrap();
        let plan = switching::check_g_gm(&g, &alpha).unwrap();
        assert_eq!(plan.entries().len(), n - 1);
        assert!(plan.entries().iter().all(|e| e.action == CellAction::Skip));
        assert_eq!(switching::apply_switch(&g, &alpha, &plan).unwrap(), g);
        let empty_c0 = Partition::singletons(n);
        assert!(switching::check_g_gm(&g, &empty_c0).unwrap().entries().is_empty());
    }
}

#[test]
fn s4_switch_moves_hub_edges() {
    let s = catalog::s4_example().unwrap();
    let pi_p = Representation::builtin(s.graph.group(), "permutation").unwrap();
    let plan = switching::check_pi_gm(&s.graph, &s.partition, &pi_p, false).unwrap();
    let v1 = s.graph.require_vertex("v1").unwrap();
    assert_eq!(plan.get(v1, 1), Some(CellAction::Swap(Some(s.graph.group().identity()), None)));
    let out = switching::apply_switch(&s.graph, &s.partition, &plan).unwrap();
    let hub: Vec<&str> = out.neighbors(v1).into_iter().map(|w| out.label(w)).collect();
    assert_eq!(hub, ["v2", "v7", "v8", "v9"]);
}

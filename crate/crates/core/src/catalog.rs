//! Worked example graphs with known switching behaviour.

use crate::error::Result;
use crate::gain_graph::{GainGraph, Partition};
use crate::groups::Group;

/// A graph, a partition of it, and the switched graph expected from it.
#[derive(Clone, Debug)]
pub struct Example {
    pub graph: GainGraph,
    pub partition: Partition,
    pub switched: GainGraph,
}

fn build(group: Group, labels: &[&str], edges: &[(&str, &str, &str)]) -> Result<GainGraph> {
    let mut g = GainGraph::new(group, labels.iter().copied())?;
    for (u, v, gain) in edges {
        g.add_edge_parsed(u, v, gain)?;
    }
    Ok(g)
}

fn labels(prefix: &str, range: std::ops::RangeInclusive<usize>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn as_refs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

/// Octagon `v1..v8` with a hub `v0` over the fourth roots of unity. The hub
/// sees gain `i` on four rim vertices and `1` on the other four; switching
/// exchanges the two sets.
pub fn t_example() -> Result<Example> {
    let group = Group::RootsOfUnity(4);
    let names = labels("v", 0..=8);
    let rim: Vec<(&str, &str, &str)> = (1..=8)
        .map(|j| (names[j].as_str(), names[j % 8 + 1].as_str(), "0"))
        .collect();
    let hub = |i_side: [usize; 4]| -> Vec<(&str, &str, &str)> {
        (1..=8)
            .map(|j| {
                let gain = if i_side.contains(&j) { "i" } else { "0" };
                (names[0].as_str(), names[j].as_str(), gain)
            })
            .collect()
    };
    let mut e1 = rim.clone();
    e1.extend(hub([2, 3, 7, 8]));
    let mut e2 = rim;
    e2.extend(hub([1, 4, 5, 6]));
    let graph = build(group, &as_refs(&names), &e1)?;
    let switched = build(group, &as_refs(&names), &e2)?;
    let partition = Partition::from_labels(&graph, &[vec!["v0".to_string()], names[1..].to_vec()])?;
    Ok(Example {
        graph,
        partition,
        switched,
    })
}

/// Nine vertices over `S4`; `v1` is joined to half of the rest and the
/// partition is `π_p`-GM but neither `S4`-GM nor `π_s`-GM.
pub fn s4_example() -> Result<Example> {
    let group = Group::Symmetric(4);
    let names = labels("v", 1..=9);
    let common = [
        ("v2", "v3", "(1 2)(3 4)"),
        ("v4", "v5", "(1 2)(3 4)"),
        ("v4", "v3", "e"),
        ("v2", "v5", "e"),
        ("v6", "v7", "(1 2)"),
        ("v8", "v9", "(1 2)"),
        ("v8", "v7", "(3 4)"),
        ("v6", "v9", "(3 4)"),
    ];
    let mut e1 = common.to_vec();
    e1.extend(["v3", "v4", "v5", "v6"].iter().map(|w| ("v1", *w, "e")));
    let mut e2 = common.to_vec();
    e2.extend(["v2", "v7", "v8", "v9"].iter().map(|w| ("v1", *w, "e")));
    let graph = build(group, &as_refs(&names), &e1)?;
    let switched = build(group, &as_refs(&names), &e2)?;
    let partition = Partition::from_labels(&graph, &[vec!["v1".to_string()], names[1..].to_vec()])?;
    Ok(Example {
        graph,
        partition,
        switched,
    })
}

/// The kernel-multiplication chain over `S4` under the sign representation.
#[derive(Clone, Debug)]
pub struct KernelChain {
    /// Starting graph; the partition is not `π_s`-GM for it.
    pub psi1: GainGraph,
    /// `psi1` with edge `v1`–`v7` multiplied by `(1 2)(3 4)`.
    pub psi2: GainGraph,
    /// Switch of `psi2`.
    pub psi2_switched: GainGraph,
    /// `psi2_switched` with some gains multiplied by kernel elements.
    pub psi3: GainGraph,
    pub partition: Partition,
}

pub fn s4_kernel_chain() -> Result<KernelChain> {
    let group = Group::Symmetric(4);
    let names = labels("v", 1..=7);
    let refs = as_refs(&names);
    let square = |top: &'static str| {
        vec![
            ("v4", "v3", top),
            ("v1", "v2", "e"),
            ("v2", "v3", "(1 2)"),
            ("v4", "v1", "(1 3)"),
        ]
    };
    let mut e1 = square("(1 2 3)");
    e1.extend([("v1", "v7", "(1 2)(3 4)"), ("v7", "v5", "e"), ("v7", "v6", "e")]);
    let mut e2 = square("(1 2 3)");
    e2.extend([("v1", "v7", "e"), ("v7", "v5", "e"), ("v7", "v6", "e")]);
    let mut e2a = square("(1 2 3)");
    e2a.extend([("v7", "v2", "e"), ("v7", "v3", "e"), ("v7", "v4", "e")]);
    let mut e3 = square("(1 4 3)");
    e3.extend([("v7", "v2", "(1 2)(3 4)"), ("v7", "v3", "e"), ("v7", "v4", "(1 2)(3 4)")]);
    let psi1 = build(group, &refs, &e1)?;
    let partition = Partition::from_labels(&psi1, &[vec!["v7".to_string()], names[..6].to_vec()])?;
    Ok(KernelChain {
        psi2: build(group, &refs, &e2)?,
        psi2_switched: build(group, &refs, &e2a)?,
        psi3: build(group, &refs, &e3)?,
        psi1,
        partition,
    })
}

/// Eight vertices over the dihedral group of order 8, switched with the
/// central element `a²` under the degree-2 representation.
pub fn d8_example() -> Result<Example> {
    let group = Group::Dihedral(4);
    let names = labels("v", 1..=8);
    let common = [
        ("v1", "v2", "e"),
        ("v2", "v3", "e"),
        ("v4", "v3", "e"),
        ("v1", "v4", "e"),
        ("v2", "v5", "a"),
        ("v6", "v2", "a"),
        ("v4", "v6", "a"),
        ("v5", "v4", "a"),
        ("v8", "v7", "b"),
    ];
    let mut e1 = common.to_vec();
    e1.extend([("v7", "v3", "a"), ("v4", "v7", "a"), ("v8", "v3", "e"), ("v8", "v2", "e")]);
    let mut e2 = common.to_vec();
    e2.extend([("v3", "v7", "a"), ("v7", "v4", "a"), ("v8", "v4", "e"), ("v8", "v1", "e")]);
    let graph = build(group, &as_refs(&names), &e1)?;
    let switched = build(group, &as_refs(&names), &e2)?;
    let partition = Partition::from_labels(
        &graph,
        &[vec!["v7", "v8"], vec!["v1", "v2", "v3", "v4"], vec!["v5", "v6"]],
    )?;
    Ok(Example {
        graph,
        partition,
        switched,
    })
}

/// Eight vertices over the unit quaternions; `v7`'s gains cancel and are
/// negated by the switch.
pub fn quat_example() -> Result<Example> {
    let group = Group::UnitQuaternion;
    let names = labels("v", 1..=8);
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let q = |a: f64, b: f64, c: f64, d: f64| format!("[{a:?},{b:?},{c:?},{d:?}]");
    let q_plus = q(h, 0.0, h, 0.0);
    let r_plus = q(-h, 0.0, 0.0, h);
    let q_minus = q(-h, 0.0, -h, 0.0);
    let r_minus = q(h, 0.0, 0.0, -h);
    let square = [("v1", "v2", "i"), ("v2", "v3", "i"), ("v3", "v4", "i"), ("v4", "v1", "i")];
    let mut e1: Vec<(&str, &str, &str)> = square.to_vec();
    e1.extend([("v8", "v1", "1"), ("v8", "v2", "1"), ("v8", "v4", "1")]);
    e1.extend([
        ("v7", "v4", q_plus.as_str()),
        ("v3", "v7", q_plus.as_str()),
        ("v7", "v5", r_plus.as_str()),
        ("v6", "v7", r_plus.as_str()),
    ]);
    let mut e2: Vec<(&str, &str, &str)> = square.to_vec();
    e2.extend([("v8", "v3", "1"), ("v8", "v5", "1"), ("v8", "v6", "1")]);
    e2.extend([
        ("v7", "v4", q_minus.as_str()),
        ("v3", "v7", q_minus.as_str()),
        ("v7", "v5", r_minus.as_str()),
        ("v6", "v7", r_minus.as_str()),
    ]);
    let graph = build(group, &as_refs(&names), &e1)?;
    let switched = build(group, &as_refs(&names), &e2)?;
    let partition = Partition::from_labels(&graph, &[names[6..].to_vec(), names[..6].to_vec()])?;
    Ok(Example {
        graph,
        partition,
        switched,
    })
}

/// Names accepted by [`by_name`].
pub const EXAMPLE_IDS: [&str; 4] = ["t-example", "s4-example", "d8-example", "quat-example"];

/// Graph/partition/switched triples by identifier.
pub fn by_name(id: &str) -> Option<Result<Example>> {
    match id {
        "t-example" => Some(t_example()),
        "s4-example" => Some(s4_example()),
        "d8-example" => Some(d8_example()),
        "quat-example" => Some(quat_example()),
        _ => None,
    }
}

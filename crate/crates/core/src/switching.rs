//! GM partitions: the three predicates, the switched graphs they license,
//! and verification of the conjugation identity `A' = Q_α A Q_α`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gain_graph::{GainGraph, Partition};
use crate::gg_matrix::GAMatrix;
use crate::group_algebra::GAElement;
use crate::groups::GroupElement;
use crate::quaternions::Quaternion;
use crate::representations::{represented_adjacency, Representation, REP_TOL};
use crate::{CMatrix, C64};

/// What happens to the edges between a `C0` vertex and a cell `C_i`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CellAction {
    /// No edges into the cell.
    Skip,
    /// Exchange the two gains; `None` stands for non-adjacency.
    Swap(Option<GroupElement>, Option<GroupElement>),
    /// Left-multiply every gain into the cell by `s`.
    CentralMultiply(GroupElement),
}

impl fmt::Display for CellAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |g: &Option<GroupElement>| g.map_or_else(|| "0".to_string(), |g| g.pretty());
        match self {
            CellAction::Skip => write!(f, "Skip"),
            CellAction::Swap(a, b) => write!(f, "Swap({}, {})", show(a), show(b)),
            CellAction::CentralMultiply(s) => write!(f, "CentralMultiply({})", s.pretty()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlanEntry {
    pub vertex: usize,
    pub cell: usize,
    pub action: CellAction,
}

/// One action per `(v ∈ C0, i ∈ 1..k)`, in that order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CellPlan {
    entries: Vec<PlanEntry>,
    /// Remarks such as "both cases applied; Swap taken".
    pub notices: Vec<String>,
}

impl CellPlan {
    pub fn push(&mut self, vertex: usize, cell: usize, action: CellAction) {
        self.entries.push(PlanEntry { vertex, cell, action });
    }

    pub fn entries(&self) -> &[PlanEntry] {
        &self.entries
    }

    pub fn get(&self, vertex: usize, cell: usize) -> Option<CellAction> {
        self.entries
            .iter()
            .find(|e| e.vertex == vertex && e.cell == cell)
            .map(|e| e.action)
    }

    pub fn is_swap_only(&self) -> bool {
        self.entries
            .iter()
            .all(|e| !matches!(e.action, CellAction::CentralMultiply(_)))
    }

    /// One line per entry, `v -> C_i: action`.
    pub fn render(&self, g: &GainGraph) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!("{} -> C{}: {}\n", g.label(e.vertex), e.cell, e.action));
        }
        for n in &self.notices {
            out.push_str(&format!("notice: {n}\n"));
        }
        out
    }
}

/// The value compared in a failed regularity test.
#[derive(Clone, Debug)]
pub enum ViolationValue {
    Algebra(GAElement),
    Matrix(CMatrix),
    Quaternion(Quaternion),
}

impl fmt::Display for ViolationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViolationValue::Algebra(x) => write!(f, "{}", x.render(true)),
            ViolationValue::Matrix(m) => write!(f, "{}", render_matrix(m)),
            ViolationValue::Quaternion(q) => write!(f, "{q}"),
        }
    }
}

/// Compact rendering of a small complex matrix; a 1×1 matrix prints as its
/// entry.
pub fn render_matrix(m: &CMatrix) -> String {
    let entry = |z: &C64| crate::group_algebra::format_coeff(clean(*z));
    if m.nrows() == 1 && m.ncols() == 1 {
        return entry(&m[(0, 0)]);
    }
    let rows: Vec<String> = m
        .row_iter()
        .map(|r| format!("[{}]", r.iter().map(entry).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn clean(z: C64) -> C64 {
    let snap = |x: f64| {
        let r = x.round();
        if (x - r).abs() < 1e-12 {
            r + 0.0
        } else {
            x
        }
    };
    C64::new(snap(z.re), snap(z.im))
}

/// Why a partition is not a GM partition.
#[derive(Clone, Debug)]
pub enum Violation {
    /// `Ψ_target(vertex) ≠ Ψ_target(reference_vertex)` inside cell `C_cell`.
    CellRegularity {
        cell: usize,
        target: usize,
        vertex: String,
        reference_vertex: String,
        value: ViolationValue,
        reference: ViolationValue,
    },
    /// The gains from a `C0` vertex into `C_cell` fit neither the half/half
    /// rule nor a vanishing sum.
    ZeroCondition { cell: usize, vertex: String, reason: String },
    /// The gains from a `C0` vertex into `C_cell` break the half/half rule.
    HalfHalf { cell: usize, vertex: String, reason: String },
    Unsupported(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CellRegularity {
                cell,
                target,
                vertex,
                reference_vertex,
                value,
                reference,
            } => write!(
                f,
                "cell C{cell}: sum into C{target} is {value} at {vertex} but {reference} at {reference_vertex}"
            ),
            Violation::ZeroCondition { cell, vertex, reason } => {
                write!(f, "vertex {vertex} of C0, cell C{cell}: {reason}")
            }
            Violation::HalfHalf { cell, vertex, reason } => {
                write!(f, "vertex {vertex} of C0, cell C{cell}: {reason}")
            }
            Violation::Unsupported(msg) => write!(f, "unsupported: {msg}"),
        }
    }
}

impl std::error::Error for Violation {}

/// `Ψ_i(v) = Σ_{w ∈ C_i, w ∼ v} ψ(v,w)` in the group algebra.
pub fn psi_sum(g: &GainGraph, v: usize, cell: &[usize]) -> Result<GAElement> {
    let mut acc = GAElement::zero(g.group())?;
    for &w in cell {
        if let Some(x) = g.gain(v, w) {
            acc.add_term(C64::new(1.0, 0.0), &x)?;
        }
    }
    Ok(acc)
}

/// `π(Ψ_i(v))`, computed from the gains directly.
pub fn pi_psi_sum(g: &GainGraph, v: usize, cell: &[usize], rep: &Representation) -> Result<CMatrix> {
    let mut acc = CMatrix::zeros(rep.degree(), rep.degree());
    for &w in cell {
        if let Some(x) = g.gain(v, w) {
            acc += rep.image(&x)?;
        }
    }
    Ok(acc)
}

/// Classifies the gains from `v` into `cell` (non-adjacency counting as a
/// formal zero): no edges gives `Skip`; one gain on every vertex, or two
/// values on exactly half the vertices each, gives a `Swap`. Nonzero gains
/// come first in the `Swap`, then the smaller element.
pub fn half_half_rule(g: &GainGraph, v: usize, cell: &[usize]) -> std::result::Result<CellAction, String> {
    let mut values: Vec<(Option<GroupElement>, usize)> = Vec::new();
    for &w in cell {
        let x = g.gain(v, w);
        match values.iter_mut().find(|(y, _)| *y == x) {
            Some((_, count)) => *count += 1,
            None => values.push((x, 1)),
        }
    }
    let show = |x: &Option<GroupElement>| x.map_or_else(|| "0".to_string(), |g| g.pretty());
    let n = cell.len();
    match values.as_slice() {
        [] | [(None, _)] => Ok(CellAction::Skip),
        [(Some(x), _)] => Ok(CellAction::Swap(Some(*x), Some(*x))),
        [(x, cx), (y, cy)] => {
            if n % 2 == 1 {
                return Err(format!(
                    "two gain values {} and {} on a cell of odd size {n}",
                    show(x),
                    show(y)
                ));
            }
            if *cx != *cy {
                return Err(format!(
                    "gain {} on {cx} and {} on {cy} of {n} vertices, not half and half",
                    show(x),
                    show(y)
                ));
            }
            let (a, b) = match (x, y) {
                (None, _) => (*y, *x),
                (_, None) => (*x, *y),
                (Some(p), Some(q)) if q < p => (*y, *x),
                _ => (*x, *y),
            };
            Ok(CellAction::Swap(a, b))
        }
        many => Err(format!(
            "{} distinct gain values ({}) into a cell of size {n}",
            many.len(),
            many.iter().map(|(x, _)| show(x)).collect::<Vec<_>>().join(", ")
        )),
    }
}

/// `G`-GM predicate: cell regularity and the half/half rule hold exactly in
/// the group algebra. The plan contains only `Skip` and `Swap`.
pub fn check_g_gm(g: &GainGraph, alpha: &Partition) -> std::result::Result<CellPlan, Violation> {
    if !g.group().is_finite() {
        return Err(Violation::Unsupported(format!(
            "group-algebra GM check over the infinite group {}",
            g.group()
        )));
    }
    let psi = |v: usize, cell: &[usize]| psi_sum(g, v, cell).expect("finite group");
    let cells = alpha.cells();
    for (i, ci) in cells.iter().enumerate().skip(1) {
        for (j, cj) in cells.iter().enumerate().skip(1) {
            let (first, rest) = ci.split_first().expect("nonempty cell");
            let reference = psi(*first, cj);
            for &v in rest {
                let value = psi(v, cj);
                if value != reference {
                    return Err(Violation::CellRegularity {
                        cell: i,
                        target: j,
                        vertex: g.label(v).to_string(),
                        reference_vertex: g.label(*first).to_string(),
                        value: ViolationValue::Algebra(value),
                        reference: ViolationValue::Algebra(reference),
                    });
                }
            }
        }
    }
    let mut plan = CellPlan::default();
    for &v in &cells[0] {
        for (i, ci) in cells.iter().enumerate().skip(1) {
            match half_half_rule(g, v, ci) {
                Ok(action) => plan.push(v, i, action),
                Err(reason) => {
                    return Err(Violation::HalfHalf {
                        cell: i,
                        vertex: g.label(v).to_string(),
                        reason,
                    })
                }
            }
        }
    }
    Ok(plan)
}

/// `π`-GM predicate: cell regularity on `π`-images within [`REP_TOL`]. With
/// `allow_central`, a `C0` row failing the half/half rule may instead use
/// `CentralMultiply(s)` when `π(Ψ_i(v)) = 0` and `π(s) = -I`; `Swap` wins
/// when both apply.
pub fn check_pi_gm(
    g: &GainGraph,
    alpha: &Partition,
    rep: &Representation,
    allow_central: bool,
) -> std::result::Result<CellPlan, Violation> {
    if rep.group() != g.group() {
        return Err(Violation::Unsupported(format!(
            "representation over {} for a graph over {}",
            rep.group(),
            g.group()
        )));
    }
    let unsupported = |e: Error| Violation::Unsupported(e.to_string());
    let cells = alpha.cells();
    for (i, ci) in cells.iter().enumerate().skip(1) {
        for (j, cj) in cells.iter().enumerate().skip(1) {
            let (first, rest) = ci.split_first().expect("nonempty cell");
            let reference = pi_psi_sum(g, *first, cj, rep).map_err(unsupported)?;
            for &v in rest {
                let value = pi_psi_sum(g, v, cj, rep).map_err(unsupported)?;
                if crate::max_abs_diff(&value, &reference) > REP_TOL {
                    return Err(Violation::CellRegularity {
                        cell: i,
                        target: j,
                        vertex: g.label(v).to_string(),
                        reference_vertex: g.label(*first).to_string(),
                        value: ViolationValue::Matrix(value),
                        reference: ViolationValue::Matrix(reference),
                    });
                }
            }
        }
    }
    let central = if allow_central {
        g.group().find_minus_identity(rep).map_err(unsupported)?
    } else {
        None
    };
    let mut plan = CellPlan::default();
    for &v in &cells[0] {
        for (i, ci) in cells.iter().enumerate().skip(1) {
            let image = pi_psi_sum(g, v, ci, rep).map_err(unsupported)?;
            let vanishes = crate::max_abs(&image) <= REP_TOL;
            match half_half_rule(g, v, ci) {
                Ok(action) => {
                    if matches!(action, CellAction::Swap(..)) && vanishes && central.is_some() {
                        plan.notices.push(format!(
                            "{}: both half/half and vanishing-image cases hold into C{i}; Swap applied",
                            g.label(v)
                        ));
                    }
                    plan.push(v, i, action);
                }
                Err(reason) => match central {
                    Some(s) if vanishes => plan.push(v, i, CellAction::CentralMultiply(s)),
                    Some(_) => {
                        return Err(Violation::ZeroCondition {
                            cell: i,
                            vertex: g.label(v).to_string(),
                            reason: format!("{reason}; image {} is nonzero", render_matrix(&image)),
                        })
                    }
                    None if allow_central => {
                        return Err(Violation::ZeroCondition {
                            cell: i,
                            vertex: g.label(v).to_string(),
                            reason: format!("{reason}; no element maps to -I under {}", rep.name()),
                        })
                    }
                    None => {
                        return Err(Violation::HalfHalf {
                            cell: i,
                            vertex: g.label(v).to_string(),
                            reason,
                        })
                    }
                },
            }
        }
    }
    Ok(plan)
}

/// Builds the switched graph. Edges inside `∪_{i≥1} C_i` and inside `C0`
/// are kept; the `C0`–`C_i` edges follow the plan.
pub fn apply_switch(g: &GainGraph, alpha: &Partition, plan: &CellPlan) -> Result<GainGraph> {
    let cells = alpha.cells();
    if alpha.vertex_count() != g.order() {
        return Err(Error::InconsistentPlan(format!(
            "partition covers {} vertices, graph has {}",
            alpha.vertex_count(),
            g.order()
        )));
    }
    for e in plan.entries() {
        if e.cell == 0 || e.cell >= cells.len() || !cells[0].contains(&e.vertex) {
            return Err(Error::InconsistentPlan(format!(
                "entry for vertex {} and cell C{} does not match the partition",
                g.label(e.vertex),
                e.cell
            )));
        }
    }
    let mut out = g.clone();
    for &v in &cells[0] {
        for (i, ci) in cells.iter().enumerate().skip(1) {
            let action = plan.get(v, i).ok_or_else(|| {
                Error::InconsistentPlan(format!("no action for {} into C{i}", g.label(v)))
            })?;
            let mismatch = |why: &str| {
                Error::InconsistentPlan(format!("{} into C{i}: {action} but {why}", g.label(v)))
            };
            match action {
                CellAction::Skip => {
                    if ci.iter().any(|&w| g.are_adjacent(v, w)) {
                        return Err(mismatch("edges are present"));
                    }
                }
                CellAction::Swap(x, y) => {
                    for &w in ci {
                        let cur = g.gain(v, w);
                        let new = if cur == x {
                            y
                        } else if cur == y {
                            x
                        } else {
                            return Err(mismatch("another gain is present"));
                        };
                        match new {
                            Some(h) => out.set_gain(v, w, h)?,
                            None => {
                                out.remove_edge(v, w);
                            }
                        }
                    }
                }
                CellAction::CentralMultiply(s) => {
                    if s.group() != g.group() {
                        return Err(Error::GroupMismatch(g.group(), s.group()));
                    }
                    for &w in ci {
                        if let Some(x) = g.gain(v, w) {
                            out.set_gain(v, w, s.compose(&x))?;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Checks `A(switched) = Q_α A Q_α` in partition order: exactly in the
/// group algebra when `rep` is `None`, on `π`-images within [`REP_TOL`]
/// otherwise.
pub fn verify_conjugation(
    g: &GainGraph,
    alpha: &Partition,
    plan: &CellPlan,
    rep: Option<&Representation>,
) -> Result<bool> {
    let switched = apply_switch(g, alpha, plan)?;
    let order = alpha.order();
    match rep {
        None => {
            let a = g.adjacency()?.permuted(&order)?;
            let b = switched.adjacency()?.permuted(&order)?;
            let q = GAMatrix::qalpha(alpha, g.group())?;
            let qaq = q.mul(&a)?.mul(&q)?;
            Ok(qaq == b)
        }
        Some(rep) => {
            let k = rep.degree();
            let a = permute_blocks(&represented_adjacency(g, rep)?, &order, k);
            let b = permute_blocks(&represented_adjacency(&switched, rep)?, &order, k);
            let q = qalpha_complex(alpha, k);
            Ok(crate::max_abs_diff(&(&q * a * &q), &b) <= REP_TOL)
        }
    }
}

/// `Q_α ⊗ I_k` as a complex matrix.
pub fn qalpha_complex(alpha: &Partition, k: usize) -> CMatrix {
    let n = alpha.vertex_count();
    let mut q = CMatrix::zeros(n * k, n * k);
    let mut start = 0;
    for (i, cell) in alpha.cells().iter().enumerate() {
        let m = cell.len();
        for r in 0..m {
            for c in 0..m {
                let v = if i == 0 {
                    if r == c {
                        1.0
                    } else {
                        0.0
                    }
                } else {
                    2.0 / m as f64 - if r == c { 1.0 } else { 0.0 }
                };
                for t in 0..k {
                    q[((start + r) * k + t, (start + c) * k + t)] = C64::new(v, 0.0);
                }
            }
        }
        start += m;
    }
    q
}

/// Reorders `k × k` blocks so that new block `i` is old block `order[i]`.
pub fn permute_blocks(m: &CMatrix, order: &[usize], k: usize) -> CMatrix {
    let n = order.len();
    CMatrix::from_fn(n * k, n * k, |r, c| {
        m[(order[r / k] * k + r % k, order[c / k] * k + c % k)]
    })
}

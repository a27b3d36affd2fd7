//! Human and JSON renderings of command results.

use gainswitch::gain_graph::GainGraph;
use gainswitch::spectra::Spectrum;
use gainswitch::switching::{CellAction, CellPlan, Violation};
use serde_json::{json, Value};

pub struct Report {
    /// Affirmative verdict; decides between exit codes 0 and 1.
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(ok: bool, text: String, json: Value) -> Self {
        Report { ok, text, json }
    }
}

pub fn action_json(action: &CellAction) -> Value {
    let gain = |g: &Option<gainswitch::GroupElement>| g.map(|g| g.to_string());
    match action {
        CellAction::Skip => json!({"kind": "skip"}),
        CellAction::Swap(a, b) => json!({"kind": "swap", "gains": [gain(a), gain(b)]}),
        CellAction::CentralMultiply(s) => json!({"kind": "central_multiply", "element": s.to_string()}),
    }
}

pub fn plan_json(plan: &CellPlan, g: &GainGraph) -> Value {
    let entries: Vec<Value> = plan
        .entries()
        .iter()
        .map(|e| json!({"vertex": g.label(e.vertex), "cell": e.cell, "action": action_json(&e.action)}))
        .collect();
    json!({"entries": entries, "notices": plan.notices})
}

pub fn violation_json(v: &Violation) -> Value {
    let message = v.to_string();
    match v {
        Violation::CellRegularity {
            cell,
            target,
            vertex,
            reference_vertex,
            value,
            reference,
        } => json!({
            "kind": "cell_regularity", "cell": cell, "target": target,
            "vertex": vertex, "reference_vertex": reference_vertex,
            "value": value.to_string(), "reference": reference.to_string(), "message": message,
        }),
        Violation::ZeroCondition { cell, vertex, .. } => {
            json!({"kind": "zero_condition", "cell": cell, "vertex": vertex, "message": message})
        }
        Violation::HalfHalf { cell, vertex, .. } => {
            json!({"kind": "half_half", "cell": cell, "vertex": vertex, "message": message})
        }
        Violation::Unsupported(_) => json!({"kind": "unsupported", "message": message}),
    }
}

pub fn spectrum_json(s: &Spectrum) -> Value {
    json!(s.values())
}

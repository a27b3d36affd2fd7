//! JSON graph and partition files.
//!
//! Graph file:
//!
//! ```json
//! {
//!   "group": {"kind": "dihedral", "n": 4},
//!   "vertices": ["v1", "v2"],
//!   "edges": [{"u": "v1", "v": "v2", "gain": "a^3 b"}]
//! }
//! ```
//!
//! `kind` is one of `cyclic`, `roots_of_unity`, `dihedral` (`n` rotations,
//! order `2n`), `symmetric`, `unit_quaternion` (no `n`). Each gain is
//! `ψ(u,v)` in the group's element grammar. Partition file:
//! `{"cells": [["v7", "v8"], ["v1", "v2", "v3", "v4"]]}`, first cell `C0`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gain_graph::{GainGraph, Partition};
use crate::groups::Group;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    group: Group,
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<EdgeFile>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    u: String,
    v: String,
    gain: String,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionFile {
    cells: Vec<Vec<String>>,
}

pub fn graph_from_json(text: &str) -> Result<GainGraph> {
    let file: GraphFile = serde_json::from_str(text)?;
    let mut g = GainGraph::new(file.group, file.vertices)?;
    for (idx, e) in file.edges.iter().enumerate() {
        g.add_edge_parsed(&e.u, &e.v, &e.gain).map_err(|err| {
            Error::InvalidGraph(format!("edge {idx} (`{}`-`{}`): {err}", e.u, e.v))
        })?;
    }
    Ok(g)
}

/// Pretty JSON; edges oriented from the earlier to the later vertex.
pub fn graph_to_json(g: &GainGraph) -> String {
    let file = GraphFile {
        group: g.group(),
        vertices: g.labels().to_vec(),
        edges: g
            .oriented_edges()
            .map(|(u, v, gain)| EdgeFile {
                u: g.label(u).to_string(),
                v: g.label(v).to_string(),
                gain: gain.to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("graph serializes") + "\n"
}

pub fn partition_from_json(text: &str, g: &GainGraph) -> Result<Partition> {
    let file: PartitionFile = serde_json::from_str(text)?;
    Partition::from_labels(g, &file.cells)
}

pub fn partition_to_json(p: &Partition, g: &GainGraph) -> String {
    let file = PartitionFile { cells: p.labelled(g) };
    serde_json::to_string_pretty(&file).expect("partition serializes") + "\n"
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Json(j) => Error::Parse(format!("{}: {j}", path.display())),
        Error::InvalidGraph(m) => Error::InvalidGraph(format!("{}: {m}", path.display())),
        Error::InvalidPartition(m) => Error::InvalidPartition(format!("{}: {m}", path.display())),
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

pub fn read_graph(path: &Path) -> Result<GainGraph> {
    let text = read(path)?;
    in_file(path, graph_from_json(&text))
}

pub fn write_graph(path: &Path, g: &GainGraph) -> Result<()> {
    std::fs::write(path, graph_to_json(g))?;
    Ok(())
}

pub fn read_partition(path: &Path, g: &GainGraph) -> Result<Partition> {
    let text = read(path)?;
    in_file(path, partition_from_json(&text, g))
}

pub fn write_partition(path: &Path, p: &Partition, g: &GainGraph) -> Result<()> {
    std::fs::write(path, partition_to_json(p, g))?;
    Ok(())
}

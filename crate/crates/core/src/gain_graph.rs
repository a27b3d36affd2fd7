//! Gain graphs, vertex partitions and switching isomorphism.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::gg_matrix::GAMatrix;
use crate::group_algebra::GAElement;
use crate::groups::{Group, GroupElement};

/// Largest vertex count accepted by [`GainGraph::switching_isomorphic`].
pub const MAX_SWISO_VERTICES: usize = 12;

/// A simple graph whose oriented edges carry gains, with
/// `ψ(v,u) = ψ(u,v)⁻¹`. Each edge is stored once, oriented from the smaller
/// to the larger vertex index.
#[derive(Clone, Debug, PartialEq)]
pub struct GainGraph {
    group: Group,
    labels: Vec<String>,
    gains: BTreeMap<(usize, usize), GroupElement>,
}

/// A switching-isomorphism witness: `ψ2(φu, φv) = f(u)⁻¹ ψ1(u,v) f(v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub phi: Vec<usize>,
    pub f: Vec<GroupElement>,
}

impl GainGraph {
    pub fn new<S: Into<String>>(group: Group, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::InvalidGraph(format!("vertex {i} has an empty label")));
            }
            if seen.insert(l.as_str(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex label `{l}`")));
            }
        }
        Ok(GainGraph {
            group: group.validate()?,
            labels,
            gains: BTreeMap::new(),
        })
    }

    /// Vertices labelled `prefix0 .. prefix{n-1}` offset by `start`.
    pub fn with_numbered_vertices(group: Group, prefix: &str, start: usize, n: usize) -> Result<Self> {
        Self::new(group, (start..start + n).map(|i| format!("{prefix}{i}")))
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require_vertex(&self, label: &str) -> Result<usize> {
        self.vertex(label)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex `{label}`")))
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!("vertex index out of range ({u}, {v})")));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at `{}`", self.labels[u])));
        }
        Ok(())
    }

    /// Adds the edge with `ψ(u,v) = gain`.
    pub fn add_edge(&mut self, u: usize, v: usize, gain: GroupElement) -> Result<()> {
        self.check_pair(u, v)?;
        if self.gain(u, v).is_some() {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge `{}`-`{}`",
                self.labels[u], self.labels[v]
            )));
        }
        self.set_gain(u, v, gain)
    }

    /// Label-based [`GainGraph::add_edge`].
    pub fn add_edge_by_label(&mut self, u: &str, v: &str, gain: GroupElement) -> Result<()> {
        let (u, v) = (self.require_vertex(u)?, self.require_vertex(v)?);
        self.add_edge(u, v, gain)
    }

    /// Label-based edge with the gain parsed in the group's element grammar.
    pub fn add_edge_parsed(&mut self, u: &str, v: &str, gain: &str) -> Result<()> {
        let g = self.group.parse_element(gain)?;
        self.add_edge_by_label(u, v, g)
    }

    /// Inserts or replaces the edge so that `ψ(u,v) = gain`.
    pub fn set_gain(&mut self, u: usize, v: usize, gain: GroupElement) -> Result<()> {
        self.check_pair(u, v)?;
        if gain.group() != self.group {
            return Err(Error::GroupMismatch(self.group, gain.group()));
        }
        if u < v {
            self.gains.insert((u, v), gain);
        } else {
            self.gains.insert((v, u), gain.inv());
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Option<GroupElement> {
        let stored = self.gains.remove(&(u.min(v), u.max(v)))?;
        Some(if u < v { stored } else { stored.inv() })
    }

    /// `ψ(v,w)`, or `None` when `v` and `w` are not adjacent.
    pub fn gain(&self, v: usize, w: usize) -> Option<GroupElement> {
        if v < w {
            self.gains.get(&(v, w)).copied()
        } else {
            self.gains.get(&(w, v)).map(GroupElement::inv)
        }
    }

    pub fn are_adjacent(&self, v: usize, w: usize) -> bool {
        self.gains.contains_key(&(v.min(w), v.max(w)))
    }

    /// Edges as `(u, v, ψ(u,v))` with `u < v`, in lexicographic order.
    pub fn oriented_edges(&self) -> impl Iterator<Item = (usize, usize, GroupElement)> + '_ {
        self.gains.iter().map(|(&(u, v), &g)| (u, v, g))
    }

    pub fn edge_count(&self) -> usize {
        self.gains.len()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.order()).filter(|&w| w != v && self.are_adjacent(v, w)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// Adjacency matrix over the group algebra, in vertex order.
    pub fn adjacency(&self) -> Result<GAMatrix> {
        let n = self.order();
        let mut m = GAMatrix::zeros(self.group, n, n)?;
        for (u, v, g) in self.oriented_edges() {
            m[(u, v)] = GAElement::from_element(&g)?;
            m[(v, u)] = GAElement::from_element(&g.inv())?;
        }
        Ok(m)
    }

    /// `ψ(w0,w1) ψ(w1,w2) ⋯ ψ(w_{h-1},w_h)`; the identity for walks of
    /// length zero.
    pub fn walk_gain(&self, walk: &[usize]) -> Result<GroupElement> {
        let mut acc = self.group.identity();
        for pair in walk.windows(2) {
            let g = self.gain(pair[0], pair[1]).ok_or_else(|| {
                Error::InvalidGraph(format!(
                    "not a walk: `{}` and `{}` are not adjacent",
                    self.label(pair[0]),
                    self.label(pair[1])
                ))
            })?;
            acc = acc.compose(&g);
        }
        Ok(acc)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                for w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// BFS spanning forest: `(parent, vertex)` tree edges in discovery order
    /// plus the root of each component.
    fn spanning_forest(&self, component: &[usize]) -> Vec<(usize, usize)> {
        let root = component[0];
        let mut seen = vec![false; self.order()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut tree = Vec::new();
        while let Some(u) = queue.pop_front() {
            for w in self.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    tree.push((u, w));
                    queue.push_back(w);
                }
            }
        }
        tree
    }

    /// Every closed walk has trivial gain. Checked with potentials along a
    /// spanning forest.
    pub fn is_balanced(&self) -> bool {
        let mut pot: Vec<Option<GroupElement>> = vec![None; self.order()];
        for comp in self.components() {
            pot[comp[0]] = Some(self.group.identity());
            for (u, w) in self.spanning_forest(&comp) {
                let pu = pot[u].expect("parent visited first");
                pot[w] = Some(pu.compose(&self.gain(u, w).expect("tree edge")));
            }
        }
        self.oriented_edges().all(|(u, v, g)| {
            let pu = pot[u].expect("all vertices reached");
            let pv = pot[v].expect("all vertices reached");
            pu.compose(&g) == pv
        })
    }

    /// Same graph with `ψ(u,v)` replaced by `left · ψ(u,v)`.
    pub fn multiply_gain(&self, u: usize, v: usize, left: &GroupElement) -> Result<GainGraph> {
        let g = self.gain(u, v).ok_or_else(|| {
            Error::InvalidGraph(format!(
                "no edge `{}`-`{}`",
                self.labels.get(u).map_or("?", String::as_str),
                self.labels.get(v).map_or("?", String::as_str)
            ))
        })?;
        let mut out = self.clone();
        out.set_gain(u, v, left.mul(&g)?)?;
        Ok(out)
    }

    /// Same graph with trivial gains.
    pub fn underlying(&self) -> GainGraph {
        let id = self.group.identity();
        GainGraph {
            group: self.group,
            labels: self.labels.clone(),
            gains: self.gains.keys().map(|&k| (k, id)).collect(),
        }
    }

    /// Gauge and relabel: the result has `ψ'(φu, φv) = f(u)⁻¹ ψ(u,v) f(v)`
    /// and keeps the vertex labels in index order.
    pub fn transport(&self, phi: &[usize], f: &[GroupElement]) -> Result<GainGraph> {
        let n = self.order();
        if phi.len() != n || f.len() != n {
            return Err(Error::Shape(format!("witness length mismatch for {n} vertices")));
        }
        let mut seen = vec![false; n];
        for &p in phi {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidGraph(format!("{phi:?} is not a bijection")));
            }
        }
        let mut out = GainGraph {
            group: self.group,
            labels: self.labels.clone(),
            gains: BTreeMap::new(),
        };
        for (u, v, g) in self.oriented_edges() {
            let h = f[u].inv().mul(&g)?.mul(&f[v])?;
            out.set_gain(phi[u], phi[v], h)?;
        }
        Ok(out)
    }

    /// Searches for `(φ, f)` with `ψ2(φu, φv) = f(u)⁻¹ ψ1(u,v) f(v)`.
    ///
    /// Bijections are enumerated in lexicographic order with degree and
    /// adjacency pruning; the first witness found is returned, with the
    /// smallest switching function for that bijection.
    pub fn switching_isomorphic(&self, other: &GainGraph) -> Result<Option<Witness>> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(self.group, other.group));
        }
        if !self.group.is_finite() {
            return Err(Error::Unsupported(format!(
                "switching isomorphism over the infinite non-abelian group {}",
                self.group
            )));
        }
        let n = self.order();
        if n > MAX_SWISO_VERTICES {
            return Err(Error::Unsupported(format!(
                "switching isomorphism is limited to {MAX_SWISO_VERTICES} vertices, got {n}"
            )));
        }
        if n != other.order() || self.edge_count() != other.edge_count() {
            return Ok(None);
        }
        let deg1: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let deg2: Vec<usize> = (0..n).map(|v| other.degree(v)).collect();
        let mut s1 = deg1.clone();
        let mut s2 = deg2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        if s1 != s2 {
            return Ok(None);
        }
        let candidates = if self.group.is_abelian() {
            vec![self.group.identity()]
        } else {
            self.group.elements()?
        };
        let components = self.components();
        let forests: Vec<Vec<(usize, usize)>> =
            components.iter().map(|c| self.spanning_forest(c)).collect();
        let search = SwisoSearch {
            g1: self,
            g2: other,
            deg1,
            deg2,
            candidates,
            components,
            forests,
        };
        let mut phi = vec![usize::MAX; n];
        let mut used = vec![false; n];
        Ok(search.extend(0, &mut phi, &mut used))
    }
}

struct SwisoSearch<'a> {
    g1: &'a GainGraph,
    g2: &'a GainGraph,
    deg1: Vec<usize>,
    deg2: Vec<usize>,
    candidates: Vec<GroupElement>,
    components: Vec<Vec<usize>>,
    forests: Vec<Vec<(usize, usize)>>,
}

impl SwisoSearch<'_> {
    fn extend(&self, u: usize, phi: &mut [usize], used: &mut [bool]) -> Option<Witness> {
        let n = phi.len();
        if u == n {
            return self.gauge(phi).map(|f| Witness { phi: phi.to_vec(), f });
        }
        for x in 0..n {
            if used[x] || self.deg1[u] != self.deg2[x] {
                continue;
            }
            let consistent = (0..u).all(|w| self.g1.are_adjacent(u, w) == self.g2.are_adjacent(x, phi[w]));
            if !consistent {
                continue;
            }
            phi[u] = x;
            used[x] = true;
            if let Some(w) = self.extend(u + 1, phi, used) {
                return Some(w);
            }
            used[x] = false;
            phi[u] = usize::MAX;
        }
        None
    }

    /// Solves for the switching function once `phi` preserves adjacency.
    fn gauge(&self, phi: &[usize]) -> Option<Vec<GroupElement>> {
        let group = self.g1.group;
        let n = phi.len();
        let mut f = vec![group.identity(); n];
        for (comp, tree) in self.components.iter().zip(&self.forests) {
            let mut left = vec![group.identity(); n];
            let mut right = vec![group.identity(); n];
            let mut is_tree = std::collections::BTreeSet::new();
            for &(u, v) in tree {
                let p1 = self.g1.gain(u, v).expect("tree edge");
                let p2 = self.g2.gain(phi[u], phi[v]).expect("adjacency preserved");
                left[v] = p1.inv().compose(&left[u]);
                right[v] = right[u].compose(&p2);
                is_tree.insert((u.min(v), u.max(v)));
            }
            let mut constraints = Vec::new();
            for (i, &u) in comp.iter().enumerate() {
                for &v in &comp[i + 1..] {
                    if !self.g1.are_adjacent(u, v) || is_tree.contains(&(u, v)) {
                        continue;
                    }
                    let p1 = self.g1.gain(u, v).expect("edge");
                    let p2 = self.g2.gain(phi[u], phi[v]).expect("adjacency preserved");
                    let c1 = left[u].inv().compose(&p1).compose(&left[v]);
                    let c2 = right[u].compose(&p2).compose(&right[v].inv());
                    constraints.push((c1, c2));
                }
            }
            let g0 = self
                .candidates
                .iter()
                .find(|g0| constraints.iter().all(|(c1, c2)| g0.inv().compose(c1).compose(g0) == *c2))?;
            for &v in comp {
                f[v] = left[v].compose(g0).compose(&right[v]);
            }
        }
        Some(f)
    }
}

/// An ordered vertex partition `{C0, C1, ..., Ck}`. `C0` may be empty; the
/// other cells may not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl Partition {
    pub fn from_indices(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidPartition("no cells given".into()));
        }
        let mut owner = vec![None; n];
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 && cell.is_empty() {
                return Err(Error::InvalidPartition(format!("cell C{i} is empty")));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex index {v} out of range")));
                }
                if let Some(j) = owner[v] {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in C{j} and C{i}"
                    )));
                }
                owner[v] = Some(i);
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(Error::InvalidPartition(format!("vertex {v} is in no cell")));
        }
        Ok(Partition { n, cells })
    }

    pub fn from_labels<S: AsRef<str>>(g: &GainGraph, cells: &[Vec<S>]) -> Result<Self> {
        let idx = cells
            .iter()
            .map(|cell| {
                cell.iter()
                    .map(|l| {
                        g.vertex(l.as_ref()).ok_or_else(|| {
                            Error::InvalidPartition(format!("unknown vertex `{}`", l.as_ref()))
                        })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(g.order(), idx)
            .map_err(|e| match e {
                Error::InvalidPartition(msg) => Error::InvalidPartition(relabel(g, &msg)),
                other => other,
            })
    }

    /// Every vertex in its own cell, with `C0` empty.
    pub fn singletons(n: usize) -> Self {
        let mut cells = vec![Vec::new()];
        cells.extend((0..n).map(|v| vec![v]));
        Partition { n, cells }
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    /// Number of non-distinguished cells `k`.
    pub fn k(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Vertices in cell order `C0, C1, ..., Ck`.
    pub fn order(&self) -> Vec<usize> {
        self.cells.iter().flatten().copied().collect()
    }

    pub fn cell_of(&self, v: usize) -> Option<usize> {
        self.cells.iter().position(|c| c.contains(&v))
    }

    /// Cells as vertex labels.
    pub fn labelled(&self, g: &GainGraph) -> Vec<Vec<String>> {
        self.cells
            .iter()
            .map(|c| c.iter().map(|&v| g.label(v).to_string()).collect())
            .collect()
    }
}

fn relabel(g: &GainGraph, msg: &str) -> String {
    // replace "vertex <index>" by the label
    let mut out = msg.to_string();
    if let Some(rest) = msg.strip_prefix("vertex ") {
        let digits: String = rest.chars().take_while(char::is_ascii_digit).collect();
        if let Ok(v) = digits.parse::<usize>() {
            if v < g.order() {
                out = format!("vertex `{}`{}", g.label(v), &rest[digits.len()..]);
            }
        }
    }
    out
}

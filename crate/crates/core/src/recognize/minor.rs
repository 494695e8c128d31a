use std::collections::VecDeque;

use serde::Serialize;

use crate::error::Result;
use crate::generate::minors::gen_forbidden_minor;
use crate::graph::{EdgeId, Vertex, WeightedGraph};

/// A model of `F_index` in a graph: one connected vertex set per minor vertex
/// and one graph edge per minor edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorModel {
    pub index: usize,
    /// Branch set of each minor vertex (`a, b, ...` in order).
    pub branch_sets: Vec<Vec<Vertex>>,
    /// For each edge of the minor (in its edge order), a graph edge joining the two branch sets.
    pub edge_witnesses: Vec<EdgeId>,
}

impl MinorModel {
    /// Builds a model from branch sets, picking a witness edge for every minor edge.
    pub(crate) fn from_sets(g: &WeightedGraph, index: usize, branch_sets: Vec<Vec<Vertex>>) -> Self {
        let pattern = gen_forbidden_minor(index).expect("index in range");
        let mut owner = vec![usize::MAX; g.n()];
        for (i, set) in branch_sets.iter().enumerate() {
            for &v in set {
                owner[v] = i;
            }
        }
        let edge_witnesses = pattern
            .edges()
            .iter()
            .map(|pe| {
                (0..g.m())
                    .find(|&e| {
                        let (a, b) = (owner[g.edge(e).u], owner[g.edge(e).v]);
                        (a, b) == (pe.u, pe.v) || (a, b) == (pe.v, pe.u)
                    })
                    .unwrap_or(usize::MAX)
            })
            .collect();
        MinorModel { index, branch_sets, edge_witnesses }
    }

    /// Renames vertices and edges through the given maps.
    pub(crate) fn mapped(&self, vmap: &[Vertex], emap: &[EdgeId]) -> Self {
        MinorModel {
            index: self.index,
            branch_sets: self.branch_sets.iter().map(|s| s.iter().map(|&v| vmap[v]).collect()).collect(),
            edge_witnesses: self
                .edge_witnesses
                .iter()
                .map(|&e| if e == usize::MAX { e } else { emap[e] })
                .collect(),
        }
    }
}

/// Checks a minor model of `pattern` in `g`: branch sets are nonempty,
/// pairwise disjoint and connected, and each pattern edge has a witness edge
/// of `g` between the right branch sets. Returns a description of the first
/// defect.
pub fn check_minor_model(
    g: &WeightedGraph,
    pattern: &WeightedGraph,
    branch_sets: &[Vec<Vertex>],
    edge_witnesses: &[EdgeId],
) -> std::result::Result<(), String> {
    if branch_sets.len() != pattern.n() {
        return Err(format!("{} branch sets for {} pattern vertices", branch_sets.len(), pattern.n()));
    }
    let mut owner = vec![usize::MAX; g.n()];
    for (i, set) in branch_sets.iter().enumerate() {
        if set.is_empty() {
            return Err(format!("branch set {i} is empty"));
        }
        for &v in set {
            if v >= g.n() {
                return Err(format!("branch set {i} names vertex {v} outside the graph"));
            }
            if owner[v] != usize::MAX {
                return Err(format!("vertex {v} lies in branch sets {} and {i}", owner[v]));
            }
            owner[v] = i;
        }
    }
    for (i, set) in branch_sets.iter().enumerate() {
        let mut seen = vec![false; g.n()];
        seen[set[0]] = true;
        let mut queue = VecDeque::from([set[0]]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &(y, _) in g.neighbors(x) {
                if owner[y] == i && !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        if count != set.len() {
            return Err(format!("branch set {i} is not connected"));
        }
    }
    if edge_witnesses.len() != pattern.m() {
        return Err(format!("{} witnesses for {} pattern edges", edge_witnesses.len(), pattern.m()));
    }
    for (pe, &e) in pattern.edges().iter().zip(edge_witnesses) {
        if e >= g.m() {
            return Err(format!("pattern edge {}-{} has no witness", pe.u, pe.v));
        }
        let (a, b) = (owner[g.edge(e).u], owner[g.edge(e).v]);
        if !((a, b) == (pe.u, pe.v) || (a, b) == (pe.v, pe.u)) {
            return Err(format!("edge {e} does not join branch sets {} and {}", pe.u, pe.v));
        }
    }
    Ok(())
}

/// Checks `model` against the pattern `F_index`.
pub fn verify_minor_model(g: &WeightedGraph, model: &MinorModel) -> Result<(), String> {
    let pattern = gen_forbidden_minor(model.index).map_err(|e| e.to_string())?;
    check_minor_model(g, &pattern, &model.branch_sets, &model.edge_witnesses)
}

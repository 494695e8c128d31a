use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::weight::{dense_ranks, Weight};

pub type Vertex = usize;
pub type EdgeId = usize;

/// An undirected weighted edge, stored with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub w: Weight,
}

impl Edge {
    pub fn other(&self, x: Vertex) -> Vertex {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

/// A simple undirected graph on vertices `0..n` with exact rational edge weights.
///
/// Edges keep the order in which they were given; that order defines edge ids.
#[derive(Clone, Debug)]
pub struct WeightedGraph {
    n: usize,
    labels: Option<Vec<String>>,
    edges: Vec<Edge>,
    index: HashMap<(Vertex, Vertex), EdgeId>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
}

impl PartialEq for WeightedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for WeightedGraph {}

fn key(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl WeightedGraph {
    /// Builds a graph, rejecting self-loops, parallel edges and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex, Weight)>) -> Result<Self> {
        let mut g = WeightedGraph {
            n,
            labels: None,
            edges: Vec::new(),
            index: HashMap::new(),
            adj: vec![Vec::new(); n],
        };
        for (i, (a, b, w)) in edges.into_iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::Graph(format!("edge {i} ({a},{b}) has an endpoint outside 0..{n}")));
            }
            if a == b {
                return Err(Error::Graph(format!("edge {i} is a self-loop at {a}")));
            }
            let k = key(a, b);
            if g.index.contains_key(&k) {
                return Err(Error::Graph(format!("edge {i} duplicates {{{},{}}}", k.0, k.1)));
            }
            let id = g.edges.len();
            g.index.insert(k, id);
            g.adj[a].push((b, id));
            g.adj[b].push((a, id));
            g.edges.push(Edge { u: k.0, v: k.1, w });
        }
        for list in &mut g.adj {
            list.sort_unstable();
        }
        Ok(g)
    }

    /// Convenience constructor from integer weights.
    pub fn from_int_edges(n: usize, edges: &[(Vertex, Vertex, i64)]) -> Result<Self> {
        WeightedGraph::new(n, edges.iter().map(|&(a, b, w)| (a, b, Weight::int(w))))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::Graph(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn weight(&self, e: EdgeId) -> &Weight {
        &self.edges[e].w
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.edges.iter().map(|e| e.w.clone()).collect()
    }

    /// Dense weight ranks indexed by edge id.
    pub fn ranks(&self) -> Vec<u32> {
        dense_ranks(&self.weights())
    }

    pub fn edge_id(&self, a: Vertex, b: Vertex) -> Option<EdgeId> {
        self.index.get(&key(a, b)).copied()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.index.contains_key(&key(a, b))
    }

    /// Neighbors of `v` with the connecting edge ids, sorted by neighbor.
    pub fn neighbors(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    /// The same graph with new weights (indexed by edge id).
    pub fn with_weights(&self, weights: Vec<Weight>) -> Result<Self> {
        if weights.len() != self.m() {
            return Err(Error::Graph(format!(
                "{} weights given for {} edges",
                weights.len(),
                self.m()
            )));
        }
        let mut g = self.clone();
        for (e, w) in g.edges.iter_mut().zip(weights) {
            e.w = w;
        }
        Ok(g)
    }

    /// Spanning subgraph keeping the listed edges (in the listed order).
    pub fn edge_subgraph(&self, keep: &[EdgeId]) -> Self {
        let mut g = WeightedGraph::new(
            self.n,
            keep.iter().map(|&e| (self.edges[e].u, self.edges[e].v, self.edges[e].w.clone())),
        )
        .expect("subgraph of a simple graph is simple");
        g.labels = self.labels.clone();
        g
    }

    /// Induced subgraph on `verts`; returns the graph and the old id of each new vertex.
    pub fn induced(&self, verts: &[Vertex]) -> (Self, Vec<Vertex>) {
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| map[e.u] != usize::MAX && map[e.v] != usize::MAX)
            .map(|e| (map[e.u], map[e.v], e.w.clone()));
        let mut g = WeightedGraph::new(verts.len(), edges).expect("induced subgraph is simple");
        if let Some(l) = &self.labels {
            g.labels = Some(verts.iter().map(|&v| l[v].clone()).collect());
        }
        (g, verts.to_vec())
    }

    /// Connected components, each sorted, listed by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() + 1 == self.n && self.is_connected()
    }

    /// Cyclomatic number `m - n + c`.
    pub fn cyclomatic(&self) -> usize {
        self.m() + self.components().len() - self.n
    }

    /// Vertices of a simple cycle in cyclic order starting at the smallest vertex,
    /// if the graph is a single cycle on all its vertices.
    pub fn cycle_order(&self) -> Option<Vec<Vertex>> {
        if self.n < 3 || self.m() != self.n || !self.is_connected() {
            return None;
        }
        if (0..self.n).any(|v| self.degree(v) != 2) {
            return None;
        }
        let mut order = vec![0];
        let mut prev = 0;
        let mut cur = self.adj[0][0].0;
        while cur != 0 {
            order.push(cur);
            let next = if self.adj[cur][0].0 == prev {
                self.adj[cur][1].0
            } else {
                self.adj[cur][0].0
            };
            prev = cur;
            cur = next;
        }
        Some(order)
    }

    /// Breadth-first parent pointers from `root`, restricted to `allowed` vertices.
    /// Returns `(parent vertex, parent edge)` per vertex; unreached vertices get `None`.
    pub fn bfs_parents(&self, root: Vertex, allowed: &[bool]) -> Vec<Option<(Vertex, EdgeId)>> {
        let mut par = vec![None; self.n];
        let mut seen = vec![false; self.n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(y, e) in &self.adj[x] {
                if allowed[y] && !seen[y] {
                    seen[y] = true;
                    par[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        par
    }
}

/// One pair of parallel edges merged by a contraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergedParallel {
    /// Neighbor (new id) reached by both parallel edges.
    pub neighbor: Vertex,
    pub kept: Weight,
    pub dropped: Weight,
}

/// Result of contracting one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: WeightedGraph,
    /// New id of the merged vertex.
    pub merged: Vertex,
    /// New id of every old vertex.
    pub vertex_map: Vec<Vertex>,
    pub parallel: Vec<MergedParallel>,
}

/// Contracts edge `{a, b}`.
///
/// The merged vertex takes id `min(a, b)`; the larger id disappears and the
/// ids above it shift down by one. When both endpoints see a common neighbor,
/// the edge at `a` (the first named endpoint) keeps its weight. Edge order
/// follows the original edge ids with the contracted and dropped edges removed.
pub fn contract_edge(g: &WeightedGraph, a: Vertex, b: Vertex) -> Result<Contraction> {
    if g.edge_id(a, b).is_none() {
        return Err(Error::Structure(format!("{{{a},{b}}} is not an edge")));
    }
    let (keep, gone) = (a.min(b), a.max(b));
    let vertex_map: Vec<Vertex> = (0..g.n())
        .map(|v| match v {
            v if v == gone => keep,
            v if v > gone => v - 1,
            v => v,
        })
        .collect();
    let mut kept_at: BTreeMap<Vertex, EdgeId> = BTreeMap::new();
    let mut parallel = Vec::new();
    // Edges at `a` win against edges at `b`, so visit them first.
    let mut order: Vec<EdgeId> = (0..g.m()).collect();
    order.sort_by_key(|&e| !g.edge(e).touches(a));
    for e in order {
        let ed = g.edge(e);
        if (ed.u == a && ed.v == b) || (ed.u == b && ed.v == a) {
            continue;
        }
        let (x, y) = (vertex_map[ed.u], vertex_map[ed.v]);
        if x == keep || y == keep {
            let nb = if x == keep { y } else { x };
            if let Some(&first) = kept_at.get(&nb) {
                parallel.push(MergedParallel {
                    neighbor: nb,
                    kept: g.weight(first).clone(),
                    dropped: ed.w.clone(),
                });
                continue;
            }
            kept_at.insert(nb, e);
        }
    }
    let skip: Vec<bool> = {
        let mut s = vec![false; g.m()];
        s[g.edge_id(a, b).unwrap()] = true;
        for ed_id in 0..g.m() {
            let ed = g.edge(ed_id);
            let (x, y) = (vertex_map[ed.u], vertex_map[ed.v]);
            if (x == keep) != (y == keep) {
                let nb = if x == keep { y } else { x };
                if kept_at.get(&nb) != Some(&ed_id) {
                    s[ed_id] = true;
                }
            }
        }
        s
    };
    let edges = (0..g.m())
        .filter(|&e| !skip[e])
        .map(|e| {
            let ed = g.edge(e);
            (vertex_map[ed.u], vertex_map[ed.v], ed.w.clone())
        });
    let mut graph = WeightedGraph::new(g.n() - 1, edges)?;
    if let Some(l) = g.labels() {
        let labels = (0..g.n()).filter(|&v| v != gone).map(|v| l[v].clone()).collect();
        graph = graph.with_labels(labels)?;
    }
    parallel.sort_by_key(|p| p.neighbor);
    Ok(Contraction {
        graph,
        merged: keep,
        vertex_map,
        parallel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert!(WeightedGraph::from_int_edges(2, &[(0, 0, 1)]).is_err());
        assert!(WeightedGraph::from_int_edges(2, &[(0, 1, 1), (1, 0, 2)]).is_err());
        assert!(WeightedGraph::from_int_edges(2, &[(0, 2, 1)]).is_err());
    }

    #[test]
    fn contraction_of_path() {
        let g = WeightedGraph::from_int_edges(3, &[(0, 1, 1), (1, 2, 5)]).unwrap();
        let c = contract_edge(&g, 0, 1).unwrap();
        assert_eq!(c.graph, WeightedGraph::from_int_edges(2, &[(0, 1, 5)]).unwrap());
        assert!(c.parallel.is_empty());
        assert_eq!(c.vertex_map, vec![0, 0, 1]);
    }

    #[test]
    fn contraction_of_triangle_merges_parallel_edges() {
        let g = WeightedGraph::from_int_edges(3, &[(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        let c = contract_edge(&g, 0, 1).unwrap();
        assert_eq!(c.graph.m(), 1);
        assert_eq!(c.graph.weight(0), &Weight::int(3));
        assert_eq!(
            c.parallel,
            vec![MergedParallel { neighbor: 1, kept: Weight::int(3), dropped: Weight::int(2) }]
        );
        let c = contract_edge(&g, 1, 0).unwrap();
        assert_eq!(c.graph.weight(0), &Weight::int(2));
    }

    #[test]
    fn cycle_detection() {
        let g = WeightedGraph::from_int_edges(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
        assert_eq!(g.cycle_order().unwrap().len(), 4);
        assert_eq!(g.cyclomatic(), 1);
        let p = WeightedGraph::from_int_edges(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert!(p.cycle_order().is_none());
        assert!(p.is_tree());
    }
}

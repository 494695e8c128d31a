use crate::error::{Error, Result};
use crate::graph::{EdgeId, Vertex, WeightedGraph};
use crate::ordering::VertexOrdering;

/// A vertex ordering together with a page for every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    graph: WeightedGraph,
    ordering: VertexOrdering,
    pages: Vec<usize>,
    k: usize,
}

impl Layout {
    /// Pairs a graph with an ordering and a page assignment (indexed by edge id).
    /// Every page must lie in `0..k`.
    pub fn new(graph: WeightedGraph, ordering: VertexOrdering, pages: Vec<usize>, k: usize) -> Result<Self> {
        if ordering.len() != graph.n() {
            return Err(Error::Layout(format!(
                "ordering has {} vertices, graph has {}",
                ordering.len(),
                graph.n()
            )));
        }
        if pages.len() != graph.m() {
            return Err(Error::Layout(format!(
                "{} page entries for {} edges",
                pages.len(),
                graph.m()
            )));
        }
        if let Some((e, &p)) = pages.iter().enumerate().find(|(_, &p)| p >= k) {
            return Err(Error::Layout(format!("edge {e} on page {p}, but k = {k}")));
        }
        Ok(Layout {
            graph,
            ordering,
            pages,
            k,
        })
    }

    /// Every edge on page 0 with `k = 1`.
    pub fn one_page(graph: WeightedGraph, ordering: VertexOrdering) -> Result<Self> {
        let m = graph.m();
        Layout::new(graph, ordering, vec![0; m], 1)
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn ordering(&self) -> &VertexOrdering {
        &self.ordering
    }

    pub fn pages(&self) -> &[usize] {
        &self.pages
    }

    pub fn page(&self, e: EdgeId) -> usize {
        self.pages[e]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Endpoints of `e` as (left, right) under the ordering.
    pub fn ends(&self, e: EdgeId) -> (Vertex, Vertex) {
        let ed = self.graph.edge(e);
        if self.ordering.precedes(ed.u, ed.v) {
            (ed.u, ed.v)
        } else {
            (ed.v, ed.u)
        }
    }

    pub fn into_parts(self) -> (WeightedGraph, VertexOrdering, Vec<usize>, usize) {
        (self.graph, self.ordering, self.pages, self.k)
    }
}

/// Positions (left, right) of every edge's endpoints under `ord`.
pub fn spans(g: &WeightedGraph, ord: &VertexOrdering) -> Vec<(usize, usize)> {
    g.edges()
        .iter()
        .map(|e| {
            let (a, b) = (ord.position(e.u), ord.position(e.v));
            (a.min(b), a.max(b))
        })
        .collect()
}

use super::{exact_coloring, LowerBoundCertificate, SolveConfig, SolveResult};
use crate::graph::WeightedGraph;
use crate::layout::Layout;
use crate::ordering::VertexOrdering;
use crate::validate::{build_conflict_graph, longest_inversion};

pub fn solve_fixed_order(g: &WeightedGraph, ord: &VertexOrdering) -> SolveResult {
    solve_fixed_order_with(g, ord, &SolveConfig::default())
}

/// Minimum pages for `g` under `ord`.
///
/// Panics if `ord` does not cover the vertices of `g`.
pub fn solve_fixed_order_with(g: &WeightedGraph, ord: &VertexOrdering, cfg: &SolveConfig) -> SolveResult {
    assert_eq!(ord.len(), g.n(), "ordering does not match graph");
    let h = build_conflict_graph(g, ord);
    let inv = longest_inversion(g, ord);
    let adj: Vec<Vec<usize>> = (0..h.node_count()).map(|e| h.neighbors(e).to_vec()).collect();
    let col = exact_coloring(&adj, inv.len(), cfg.node_budget);
    let witness = Layout::new(g.clone(), ord.clone(), col.colors, col.k)
        .expect("coloring yields a page assignment");
    let certificate = (col.k > 0 && inv.len() == col.k)
        .then(|| LowerBoundCertificate::Inversion { edges: inv.edges.clone() });
    SolveResult {
        k: col.k,
        witness,
        lower: col.lower,
        optimal: col.optimal,
        clique: inv.len(),
        lower_bound_certificate: certificate,
        nodes: col.nodes,
    }
}

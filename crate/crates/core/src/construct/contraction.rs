use super::cycles::layout_quadrangle;
use super::k23::layout_k23;
use super::{Anchor, ConstructionReport, Family};
use crate::error::{Error, Result};
use crate::graph::{contract_edge, Vertex, WeightedGraph};
use crate::layout::Layout;
use crate::ordering::VertexOrdering;
use crate::structures::{Quadrangle, TriangleCaterpillars};
use crate::validate::simulate_sweep;
use crate::weight::Weight;

/// Carries a valid one-page layout over to `G / e0`, where `e0 = {a, b}` is
/// strictly the lightest edge.
///
/// With `u` before `v`, no vertex strictly between them has an edge to its
/// left. The merged vertex `x` takes the place of `u`; the in-between
/// neighbors of `x` follow in increasing weight of their edge to `x`, then
/// the other in-between vertices in their old order. If an edge from `v` to
/// the right of `v` is lighter than one of those edges, that placement
/// fails; neighbors whose right-going edges are all at least as heavy as
/// every edge from `u` to its left are then moved in front of `x`.
/// Candidates are validated and the first valid one is returned. When no
/// placement between the old neighbors works, the contracted graph is laid
/// out from scratch through its recognized family.
///
/// The result lays out `contract_edge(g, u, v)` with `u` the endpoint placed
/// first, so on merged parallel edges the weight at `u` survives.
pub fn transfer_by_contraction(layout: &Layout, a: Vertex, b: Vertex) -> Result<Layout> {
    transfer_by_contraction_traced(layout, a, b).map(|(l, _)| l)
}

/// How [`transfer_by_contraction`] obtained its layout.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransferStrategy {
    /// Merged vertex first, then its in-between neighbors by weight.
    MergedFirst,
    /// Some in-between neighbors moved in front of the merged vertex.
    Split,
    /// Laid out from scratch.
    Rebuilt,
}

pub fn transfer_by_contraction_traced(layout: &Layout, a: Vertex, b: Vertex) -> Result<(Layout, TransferStrategy)> {
    match transfer_local(layout, a, b) {
        Err(Error::Structure(_)) => {
            let (u, v) = if layout.ordering().precedes(a, b) { (a, b) } else { (b, a) };
            let h = contract_edge(layout.graph(), u, v)?.graph;
            Ok((crate::recognize::layout_one_page(&h)?, TransferStrategy::Rebuilt))
        }
        other => other,
    }
}

fn transfer_local(layout: &Layout, a: Vertex, b: Vertex) -> Result<(Layout, TransferStrategy)> {
    let g = layout.graph();
    let e0 = g
        .edge_id(a, b)
        .ok_or_else(|| Error::Precondition(format!("{{{a},{b}}} is not an edge")))?;
    if layout.k() != 1 {
        return Err(Error::Precondition(format!("layout has {} pages, expected 1", layout.k())));
    }
    if !simulate_sweep(layout).is_valid() {
        return Err(Error::Precondition("input layout is not valid".into()));
    }
    if (0..g.m()).any(|e| e != e0 && g.weight(e) <= g.weight(e0)) {
        return Err(Error::Precondition("contracted edge is not strictly the lightest".into()));
    }
    let ord = layout.ordering();
    let (u, v) = if ord.precedes(a, b) { (a, b) } else { (b, a) };
    let c = contract_edge(g, u, v)?;
    let h = &c.graph;
    let x = c.merged;
    let (pu, pv) = (ord.position(u), ord.position(v));
    let map = |y: Vertex| c.vertex_map[y];
    let left: Vec<Vertex> = ord.order()[..pu].iter().map(|&y| map(y)).collect();
    let right: Vec<Vertex> = ord.order()[pv + 1..].iter().map(|&y| map(y)).collect();
    let middle: Vec<Vertex> = ord.order()[pu + 1..pv].iter().map(|&y| map(y)).collect();
    let mut adjacent: Vec<(&Weight, Vertex)> = middle
        .iter()
        .filter_map(|&y| h.edge_id(x, y).map(|e| (h.weight(e), y)))
        .collect();
    adjacent.sort();
    let rest: Vec<Vertex> = middle.iter().copied().filter(|&y| !h.has_edge(x, y)).collect();
    let assemble = |before: &[Vertex], after: &[Vertex]| -> Vec<Vertex> {
        let mut order = left.clone();
        order.extend_from_slice(before);
        order.push(x);
        order.extend_from_slice(after);
        order.extend_from_slice(&rest);
        order.extend_from_slice(&right);
        order
    };
    let mut candidates = vec![assemble(&[], &adjacent.iter().map(|&(_, y)| y).collect::<Vec<_>>())];
    let in_right = {
        let mut r = vec![false; h.n()];
        for &y in &right {
            r[y] = true;
        }
        r
    };
    let heaviest_left = left.iter().filter_map(|&y| h.edge_id(x, y)).map(|e| h.weight(e)).max();
    let lightest_right = right.iter().filter_map(|&y| h.edge_id(x, y)).map(|e| h.weight(e)).min();
    let (mut before, mut after) = (Vec::new(), Vec::new());
    for &(w, y) in &adjacent {
        let fits_after = lightest_right.is_none_or(|r| w <= r);
        let fits_before = h
            .neighbors(y)
            .iter()
            .filter(|&&(z, _)| in_right[z])
            .all(|&(_, e)| heaviest_left.is_none_or(|l| h.weight(e) >= l));
        if fits_after {
            after.push(y);
        } else if fits_before {
            before.push(y);
        } else {
            after.push(y);
        }
    }
    candidates.push(assemble(&before, &after));
    for (order, how) in candidates.into_iter().zip([TransferStrategy::MergedFirst, TransferStrategy::Split]) {
        let out = Layout::one_page(h.clone(), VertexOrdering::new(order)?)?;
        if simulate_sweep(&out).is_valid() {
            return Ok((out, how));
        }
    }
    Err(Error::Structure(
        "no placement of the merged vertex between its old neighbors is valid".into(),
    ))
}

/// Weight strictly below every weight of `g`.
fn below_all(g: &WeightedGraph) -> Weight {
    let min = g.edges().iter().map(|e| &e.w).min().cloned().unwrap_or_else(Weight::zero);
    &min - 1
}

/// Rebinds a one-page layout of a graph equal to `g` up to edge order.
fn rebind(g: &WeightedGraph, l: Layout) -> Result<Layout> {
    let h = l.graph();
    let same = h.n() == g.n()
        && h.m() == g.m()
        && g.edges().iter().all(|e| h.edge_id(e.u, e.v).is_some_and(|f| h.weight(f) == &e.w));
    if !same {
        return Err(Error::Structure("contracted parent does not reproduce the graph".into()));
    }
    Layout::one_page(g.clone(), l.ordering().clone())
}

/// Parent graph: `g` with edge `{p, q}` subdivided by a new vertex `x = n`;
/// `x q` keeps the weight of `p q` and `p x` gets a weight below all others.
fn subdivide(g: &WeightedGraph, p: Vertex, q: Vertex) -> Result<WeightedGraph> {
    let pq = g
        .edge_id(p, q)
        .ok_or_else(|| Error::Structure(format!("{{{p},{q}}} is not an edge")))?;
    let x = g.n();
    let mut edges: Vec<(Vertex, Vertex, Weight)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pq)
        .map(|(_, e)| (e.u, e.v, e.w.clone()))
        .collect();
    edges.push((x, q, g.weight(pq).clone()));
    edges.push((p, x, below_all(g)));
    WeightedGraph::new(g.n() + 1, edges)
}

/// One-page layout of a triangle `abc` with caterpillars at `a` and `b`,
/// obtained by contracting a quadrangle `a x b c`.
pub fn layout_triangle_case(t: &TriangleCaterpillars) -> Result<ConstructionReport> {
    let g = t.graph();
    let [a, b, c] = t.cycle();
    let x = g.n();
    let mut last_err = None;
    let mut found = None;
    for (p, q) in [(a, b), (b, a)] {
        let parent = subdivide(g, p, q)?;
        let quad = Quadrangle::new(parent, [a, x, b, c], t.spine_a().to_vec(), t.spine_b().to_vec())?;
        let parent_report = layout_quadrangle(&quad)?;
        match transfer_local(&parent_report.layout, p, x) {
            Ok((l, _)) => {
                found = Some(l);
                break;
            }
            Err(e) => last_err = Some(e),
        }
    }
    let contracted = found.ok_or_else(|| last_err.unwrap())?;
    Ok(ConstructionReport {
        layout: rebind(g, contracted)?,
        family: Family::Triangle,
        anchors: Default::default(),
    }
    .anchor("a", Anchor::Vertex(a))
    .anchor("b", Anchor::Vertex(b))
    .anchor("c", Anchor::Vertex(c)))
}

/// One-page layout of `K_4` minus an edge, obtained by contracting a `K_{2,3}`.
pub fn layout_k4_minus_e(g: &WeightedGraph) -> Result<ConstructionReport> {
    let not = || Error::Structure("graph is not K4 minus an edge".into());
    if g.n() != 4 || g.m() != 5 {
        return Err(not());
    }
    let deg3: Vec<Vertex> = (0..4).filter(|&v| g.degree(v) == 3).collect();
    if deg3.len() != 2 {
        return Err(not());
    }
    let (p, q) = (deg3[0], deg3[1]);
    let x = g.n();
    let mut last_err = None;
    let mut found = None;
    for (s, t) in [(p, q), (q, p)] {
        let parent = subdivide(g, s, t)?;
        match transfer_local(&layout_k23(&parent)?.layout, s, x) {
            Ok((l, _)) => {
                found = Some(l);
                break;
            }
            Err(e) => last_err = Some(e),
        }
    }
    let contracted = found.ok_or_else(|| last_err.unwrap())?;
    Ok(ConstructionReport {
        layout: rebind(g, contracted)?,
        family: Family::K4MinusE,
        anchors: Default::default(),
    }
    .anchor("p", Anchor::Vertex(p))
    .anchor("q", Anchor::Vertex(q)))
}

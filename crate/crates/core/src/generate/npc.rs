//! Reduction from circular-arc coloring to fixed-order page assignment.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Vertex, WeightedGraph};
use crate::ordering::VertexOrdering;
use crate::weight::Weight;

/// Arcs run clockwise from `start` to `end`; an arc with `start > end`
/// passes the cut at position 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircularArcInstance {
    pub arcs: Vec<(i64, i64)>,
    pub k: usize,
}

impl CircularArcInstance {
    pub fn new(arcs: Vec<(i64, i64)>, k: usize) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::Precondition("no arcs".into()));
        }
        let mut ends: Vec<i64> = arcs.iter().flat_map(|&(a, b)| [a, b]).collect();
        ends.sort_unstable();
        if let Some(w) = ends.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!("arc endpoint {} is used twice", w[0])));
        }
        if ends[0] < 0 {
            return Err(Error::Precondition("arc positions must be non-negative".into()));
        }
        Ok(CircularArcInstance { arcs, k })
    }

    pub fn wraps(&self, i: usize) -> bool {
        self.arcs[i].0 > self.arcs[i].1
    }

    /// Whether arcs `i` and `j` share a point of the circle.
    pub fn intersect(&self, i: usize, j: usize) -> bool {
        let pieces = |x: usize| -> Vec<(i64, i64)> {
            let (a, b) = self.arcs[x];
            if a < b {
                vec![(a, b)]
            } else {
                vec![(i64::MIN, b), (a, i64::MAX)]
            }
        };
        pieces(i)
            .iter()
            .any(|p| pieces(j).iter().any(|q| p.0 < q.1 && q.0 < p.1))
    }

    /// Adjacency lists of the circular-arc graph.
    pub fn arc_graph(&self) -> Vec<Vec<usize>> {
        let n = self.arcs.len();
        (0..n)
            .map(|i| (0..n).filter(|&j| j != i && self.intersect(i, j)).collect())
            .collect()
    }
}

/// `n` arcs on a circle of circumference `4n` with distinct endpoints.
pub fn random_arc_instance<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<CircularArcInstance> {
    let mut pts: Vec<i64> = (0..4 * n as i64).collect();
    pts.shuffle(rng);
    CircularArcInstance::new(pts.chunks(2).take(n).map(|c| (c[0], c[1])).collect(), k)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub graph: WeightedGraph,
    pub ordering: VertexOrdering,
    pub k: usize,
    /// Arcs passing the cut, in the order of their left pieces.
    pub cut_arcs: Vec<usize>,
    /// Interval edges of every arc: one, or two (left piece first) for cut arcs.
    pub arc_edges: Vec<Vec<EdgeId>>,
    /// One per cut arc, in `cut_arcs` order.
    pub sync_edges: Vec<EdgeId>,
    pub heavy_edges: Vec<EdgeId>,
}

impl ReductionOutput {
    /// Arc colors read off a page assignment (page of each arc's first piece).
    pub fn arc_colors(&self, pages: &[usize]) -> Vec<usize> {
        self.arc_edges.iter().map(|es| pages[es[0]]).collect()
    }
}

/// Builds the weighted graph and spine for `inst`, cut at position 0.
///
/// Spine, left to right: the left ends `L_1..L_s` of the cut arcs' left
/// pieces, each followed by a gap holding `k - j` nested heavy edges; the
/// interior interval endpoints in circular order; the right ends `R_s..R_1`
/// of the right pieces, each preceded by a gap of `k - j` heavy edges.
/// Interval edges get weights `1..m` by decreasing right endpoint, the
/// synchronization edges `L_j-R_j` get `m+1..m+s` the same way, and heavy
/// edges get weights above that, decreasing from left to right.
pub fn gen_npc_reduction(inst: &CircularArcInstance) -> Result<ReductionOutput> {
    let n_arcs = inst.arcs.len();
    let cut: Vec<usize> = (0..n_arcs).filter(|&i| inst.wraps(i)).collect();
    let s = cut.len();
    let k = inst.k;
    if k < s {
        return Err(Error::Precondition(format!(
            "{s} arcs pass the cut but k = {k}; this is a no-instance"
        )));
    }
    let mut labels: Vec<String> = Vec::new();
    let mut seq: Vec<Vertex> = Vec::new();
    let vertex = |labels: &mut Vec<String>, seq: &mut Vec<Vertex>, name: String| {
        labels.push(name);
        seq.push(labels.len() - 1);
        labels.len() - 1
    };
    // (u, v, class) with class 0 = interval, 1 = sync, 2 = heavy
    let mut raw: Vec<(Vertex, Vertex, u8)> = Vec::new();
    let mut arc_raw: Vec<Vec<usize>> = vec![Vec::new(); n_arcs];
    let heavy_gap = |labels: &mut Vec<String>, seq: &mut Vec<Vertex>, raw: &mut Vec<(Vertex, Vertex, u8)>, tag: String, t: usize| {
        let ls: Vec<Vertex> = (0..t).map(|i| vertex(labels, seq, format!("{tag}.{i}l"))).collect();
        let rs: Vec<Vertex> = (0..t).map(|i| vertex(labels, seq, format!("{tag}.{i}r"))).collect();
        for i in 0..t {
            raw.push((ls[i], rs[t - 1 - i], 2));
        }
    };
    let mut left_end = vec![usize::MAX; n_arcs];
    for (j, &a) in cut.iter().enumerate() {
        left_end[a] = vertex(&mut labels, &mut seq, format!("a{a}.L"));
        heavy_gap(&mut labels, &mut seq, &mut raw, format!("hL{j}"), k - j - 1);
    }
    let mut points: Vec<(i64, usize, bool)> = Vec::new();
    for (i, &(a, b)) in inst.arcs.iter().enumerate() {
        if !inst.wraps(i) {
            points.push((a, i, true));
        }
        points.push((b, i, false));
        if inst.wraps(i) {
            points.push((a, i, true));
        }
    }
    points.sort_unstable();
    let mut open_at = vec![usize::MAX; n_arcs];
    let mut right_start = vec![usize::MAX; n_arcs];
    for &(pos, i, is_start) in &points {
        let v = vertex(&mut labels, &mut seq, format!("a{i}@{pos}"));
        match (is_start, inst.wraps(i)) {
            (true, false) => open_at[i] = v,
            (false, false) => {
                arc_raw[i].push(raw.len());
                raw.push((open_at[i], v, 0));
            }
            (false, true) => {
                arc_raw[i].push(raw.len());
                raw.push((left_end[i], v, 0));
            }
            (true, true) => right_start[i] = v,
        }
    }
    let mut sync_raw = vec![usize::MAX; s];
    for (j, &a) in cut.iter().enumerate().rev() {
        heavy_gap(&mut labels, &mut seq, &mut raw, format!("hR{j}"), k - j - 1);
        let r = vertex(&mut labels, &mut seq, format!("a{a}.R"));
        arc_raw[a].push(raw.len());
        raw.push((right_start[a], r, 0));
        sync_raw[j] = raw.len();
        raw.push((left_end[a], r, 1));
    }
    // Spine positions equal vertex ids: vertices were created left to right.
    let mut w = vec![0i64; raw.len()];
    let mut next = 1i64;
    for class in 0..3u8 {
        let mut ids: Vec<usize> = (0..raw.len()).filter(|&e| raw[e].2 == class).collect();
        ids.sort_by_key(|&e| std::cmp::Reverse(raw[e].0.max(raw[e].1)));
        for e in ids {
            w[e] = next;
            next += 1;
        }
    }
    let n = labels.len();
    let graph = WeightedGraph::new(n, raw.iter().zip(&w).map(|(&(u, v, _), &x)| (u, v, Weight::int(x))))?
        .with_labels(labels)?;
    let id = |r: usize| graph.edge_id(raw[r].0, raw[r].1).unwrap();
    let heavy_edges = (0..raw.len()).filter(|&e| raw[e].2 == 2).map(id).collect();
    Ok(ReductionOutput {
        ordering: VertexOrdering::new(seq)?,
        k,
        cut_arcs: cut,
        arc_edges: arc_raw.iter().map(|es| es.iter().map(|&r| id(r)).collect()).collect(),
        sync_edges: sync_raw.iter().map(|&r| id(r)).collect(),
        heavy_edges,
        graph,
    })
}

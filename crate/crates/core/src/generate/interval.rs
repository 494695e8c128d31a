//! Layouts of interval graphs with one page per color class.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::layout::Layout;
use crate::ordering::VertexOrdering;
use crate::weight::Weight;

fn check_intervals(intervals: &[(i64, i64)]) -> Result<()> {
    let mut ends: Vec<i64> = Vec::with_capacity(2 * intervals.len());
    for (i, &(a, b)) in intervals.iter().enumerate() {
        if a >= b {
            return Err(Error::Precondition(format!("interval {i} = [{a},{b}] is empty or reversed")));
        }
        ends.push(a);
        ends.push(b);
    }
    ends.sort_unstable();
    if let Some(w) = ends.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Precondition(format!("endpoint {} is used twice", w[0])));
    }
    Ok(())
}

/// `n` intervals with distinct endpoints drawn from `0..4n`.
pub fn random_intervals<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<(i64, i64)> {
    let mut pts: Vec<i64> = (0..4 * n as i64).collect();
    pts.shuffle(rng);
    pts.chunks(2).take(n).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect()
}

/// Intersection graph of the intervals, vertex `i` for interval `i`, all weights 0.
pub fn interval_graph(intervals: &[(i64, i64)]) -> Result<WeightedGraph> {
    check_intervals(intervals)?;
    let mut es = Vec::new();
    for i in 0..intervals.len() {
        for j in i + 1..intervals.len() {
            let (a, b) = (intervals[i], intervals[j]);
            if a.0 < b.1 && b.0 < a.1 {
                es.push((i, j, Weight::zero()));
            }
        }
    }
    WeightedGraph::new(intervals.len(), es)
}

/// Layout of the interval graph that stays valid under every weighting.
///
/// Vertices are ordered by right endpoint and colored greedily by left
/// endpoint (optimal on interval graphs); each edge goes to the page of the
/// color of its right endpoint. Two edges on one page have non-adjacent right
/// endpoints, which rules out every forbidden pair. `k` is the number of
/// colors, at least 1 when there is an interval.
pub fn gen_interval_layout(intervals: &[(i64, i64)]) -> Result<Layout> {
    let g = interval_graph(intervals)?;
    let n = intervals.len();
    let mut by_right: Vec<usize> = (0..n).collect();
    by_right.sort_by_key(|&i| intervals[i].1);
    let mut by_left: Vec<usize> = (0..n).collect();
    by_left.sort_by_key(|&i| intervals[i].0);
    let mut color = vec![usize::MAX; n];
    for &i in &by_left {
        let taken: Vec<usize> = g.neighbors(i).iter().map(|&(j, _)| color[j]).collect();
        color[i] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    let k = color.iter().map(|&c| c + 1).max().unwrap_or(0);
    let ord = VertexOrdering::new(by_right)?;
    let pages = g
        .edges()
        .iter()
        .map(|e| {
            let right = if ord.precedes(e.u, e.v) { e.v } else { e.u };
            color[right]
        })
        .collect();
    Layout::new(g, ord, pages, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::simulate_sweep;

    #[test]
    fn disjoint_intervals_use_one_color() {
        let l = gen_interval_layout(&[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!((l.k(), l.graph().m()), (1, 0));
    }

    #[test]
    fn clique_needs_one_page_per_interval() {
        let l = gen_interval_layout(&[(0, 10), (1, 11), (2, 12), (3, 13)]).unwrap();
        assert_eq!(l.k(), 4);
        assert!(simulate_sweep(&l).is_valid());
    }

    #[test]
    fn shared_endpoints_rejected() {
        assert!(gen_interval_layout(&[(0, 2), (2, 3)]).is_err());
        assert!(gen_interval_layout(&[(3, 3)]).is_err());
    }
}

use serde::{Deserialize, Serialize};

use super::{solve_fixed_order_with, SolveConfig, SolveResult};
use crate::error::{Error, Result};
use crate::graph::{Vertex, WeightedGraph};
use crate::layout::Layout;
use crate::ordering::VertexOrdering;

/// Which part of the bipartition comes first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    A,
    B,
}

fn check_parts(g: &WeightedGraph, a: &[Vertex], b: &[Vertex]) -> Result<Vec<u8>> {
    let mut side = vec![0u8; g.n()];
    for (tag, part) in [(1u8, a), (2u8, b)] {
        for &v in part {
            if v >= g.n() {
                return Err(Error::Precondition(format!("vertex {v} out of range")));
            }
            if side[v] != 0 {
                return Err(Error::Precondition(format!("vertex {v} listed twice")));
            }
            side[v] = tag;
        }
    }
    if let Some(v) = side.iter().position(|&s| s == 0) {
        return Err(Error::Precondition(format!("vertex {v} is in neither part")));
    }
    if let Some(e) = g.edges().iter().find(|e| side[e.u] == side[e.v]) {
        return Err(Error::Precondition(format!(
            "edge {}-{} lies inside one part",
            e.u, e.v
        )));
    }
    Ok(side)
}

pub fn solve_separated(g: &WeightedGraph, a: &[Vertex], b: &[Vertex], first: Side) -> Result<SolveResult> {
    solve_separated_with(g, a, b, first, &SolveConfig::default())
}

/// Minimum pages over orderings that put one whole part before the other.
///
/// Both within-part orders are enumerated; ties keep the lexicographically
/// first ordering.
pub fn solve_separated_with(
    g: &WeightedGraph,
    a: &[Vertex],
    b: &[Vertex],
    first: Side,
    cfg: &SolveConfig,
) -> Result<SolveResult> {
    check_parts(g, a, b)?;
    let (mut left, mut right) = match first {
        Side::A => (a.to_vec(), b.to_vec()),
        Side::B => (b.to_vec(), a.to_vec()),
    };
    left.sort_unstable();
    right.sort_unstable();
    let floor = usize::from(g.m() > 0);
    let mut best: Option<SolveResult> = None;
    let mut nodes = 0u64;
    let mut complete = true;
    let right_start = right.clone();
    'outer: loop {
        loop {
            let order: Vec<Vertex> = left.iter().chain(&right).copied().collect();
            let r = solve_fixed_order_with(g, &VertexOrdering::new(order)?, cfg);
            nodes += r.nodes;
            complete &= r.optimal;
            if best.as_ref().map_or(true, |b| r.k < b.k) {
                best = Some(r);
            }
            if best.as_ref().unwrap().k <= floor {
                break 'outer;
            }
            if !next_permutation(&mut right) {
                break;
            }
        }
        right.clone_from(&right_start);
        if !next_permutation(&mut left) {
            break;
        }
    }
    let mut best = best.expect("at least one ordering");
    best.nodes = nodes;
    best.optimal = complete || best.k <= floor;
    best.lower = if best.optimal { best.k } else { floor };
    Ok(best)
}

/// The larger part first and one page per vertex of the smaller part: every
/// page is a star whose edges all end together, so any weights fit.
pub fn larger_part_first_layout(g: &WeightedGraph, a: &[Vertex], b: &[Vertex]) -> Result<Layout> {
    check_parts(g, a, b)?;
    let (mut left, mut right) = if a.len() >= b.len() { (a.to_vec(), b.to_vec()) } else { (b.to_vec(), a.to_vec()) };
    left.sort_unstable();
    right.sort_unstable();
    let order: Vec<Vertex> = left.iter().chain(&right).copied().collect();
    let pages = g
        .edges()
        .iter()
        .map(|e| {
            let r = if right.binary_search(&e.u).is_ok() { e.u } else { e.v };
            right.binary_search(&r).unwrap()
        })
        .collect();
    Layout::new(g.clone(), VertexOrdering::new(order)?, pages, right.len())
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::simulate_sweep;

    fn latin(s: usize, t: usize) -> WeightedGraph {
        let mut es = Vec::new();
        for i in 0..s {
            for j in 0..t {
                es.push((i, s + j, ((i + j) % s.min(t) + 1) as i64));
            }
        }
        WeightedGraph::from_int_edges(s + t, &es).unwrap()
    }

    #[test]
    fn star_needs_one_page() {
        let g = latin(4, 1);
        let r = solve_separated(&g, &[0, 1, 2, 3], &[4], Side::A).unwrap();
        assert_eq!(r.k, 1);
    }

    #[test]
    fn adversarial_complete_bipartite() {
        for (s, t) in [(2, 2), (3, 2), (3, 3)] {
            let g = latin(s, t);
            let a: Vec<_> = (0..s).collect();
            let b: Vec<_> = (s..s + t).collect();
            let r = solve_separated(&g, &a, &b, Side::A).unwrap();
            assert_eq!(r.k, s.min(t), "K{s},{t}");
            assert!(r.optimal);
            let l = larger_part_first_layout(&g, &a, &b).unwrap();
            assert_eq!(l.k(), s.min(t));
            assert!(simulate_sweep(&l).is_valid());
        }
    }

    #[test]
    fn rejects_edges_inside_a_part() {
        let g = WeightedGraph::from_int_edges(3, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        assert!(solve_separated(&g, &[0, 1], &[2], Side::A).is_err());
    }
}

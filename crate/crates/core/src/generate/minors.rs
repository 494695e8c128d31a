//! The eight excluded minors of the one-page graphs, with weights that force two pages.

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::weight::Weight;

const NAMES: [&str; 7] = ["a", "b", "c", "d", "e", "f", "g"];

/// `(vertex count, edges as (u, v, weight))` with vertices `a..g = 0..6`.
fn table(i: usize) -> Option<(usize, &'static [(usize, usize, i64)])> {
    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;
    const E: usize = 4;
    const F: usize = 5;
    const G: usize = 6;
    Some(match i {
        1 => (4, &[(A, B, 6), (C, D, 5), (A, C, 1), (A, D, 2), (B, C, 3), (B, D, 4)]),
        2 => (5, &[(A, B, 2), (D, E, 2), (B, C, 1), (C, A, 1), (C, D, 1), (E, C, 1)]),
        3 => (5, &[(B, E, 7), (C, D, 6), (A, B, 1), (B, C, 2), (D, E, 3), (E, A, 4)]),
        4 => (7, &[(A, B, 1), (A, C, 1), (B, C, 6), (A, F, 2), (D, E, 3), (A, D, 4), (F, G, 5)]),
        5 => (7, &[(A, B, 1), (A, C, 1), (B, C, 6), (D, E, 2), (A, D, 3), (B, F, 4), (C, G, 4)]),
        6 => (5, &[(C, D, 1), (A, B, 2), (D, A, 3), (B, C, 4), (D, E, 5), (A, C, 6)]),
        7 => (5, &[(C, D, 1), (D, A, 2), (A, B, 3), (B, C, 4), (A, E, 5), (A, C, 6)]),
        8 => (7, &[(D, F, 1), (D, A, 2), (B, C, 3), (C, D, 4), (F, G, 5), (A, E, 6), (A, B, 7)]),
        _ => return None,
    })
}

/// `F_i` for `i` in `1..=8`, weighted so that no vertex ordering admits a
/// single priority queue. Vertices are labeled `a, b, ...`.
pub fn gen_forbidden_minor(i: usize) -> Result<WeightedGraph> {
    let (n, edges) = table(i).ok_or_else(|| Error::Precondition(format!("minor index {i} outside 1..=8")))?;
    WeightedGraph::from_int_edges(n, edges)?.with_labels(NAMES[..n].iter().map(|s| s.to_string()).collect())
}

/// `F_i` with every edge of weight 1.
pub fn forbidden_minor_uniform(i: usize) -> Result<WeightedGraph> {
    let g = gen_forbidden_minor(i)?;
    let m = g.m();
    g.with_weights(vec![Weight::int(1); m])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let sizes: Vec<(usize, usize)> = (1..=8).map(|i| {
            let g = gen_forbidden_minor(i).unwrap();
            (g.n(), g.m())
        }).collect();
        assert_eq!(sizes, vec![(4, 6), (5, 6), (5, 6), (7, 7), (7, 7), (5, 6), (5, 6), (7, 7)]);
        assert!(gen_forbidden_minor(0).is_err() && gen_forbidden_minor(9).is_err());
        assert!((1..=8).all(|i| gen_forbidden_minor(i).unwrap().is_connected()));
    }
}

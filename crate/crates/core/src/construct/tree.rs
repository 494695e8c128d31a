use std::collections::BTreeSet;

use super::{Anchor, ConstructionReport, Family};
use crate::error::{Error, Result};
use crate::graph::{Vertex, WeightedGraph};
use crate::structures::{Caterpillar, RootedTree};

/// Children lists of the tree spanned from `root` inside `allowed`, with the rank of
/// each child's parent edge.
fn children(g: &WeightedGraph, rk: &[u32], root: Vertex, allowed: &[bool]) -> Vec<Vec<(u32, Vertex)>> {
    let par = g.bfs_parents(root, allowed);
    let mut ch = vec![Vec::new(); g.n()];
    for (y, p) in par.iter().enumerate() {
        if let Some((x, e)) = *p {
            ch[x].push((rk[e], y));
        }
    }
    ch
}

/// Tree order: repeatedly append the waiting vertex with the lightest parent edge.
pub(crate) fn tree_sequence(g: &WeightedGraph, rk: &[u32], root: Vertex, allowed: &[bool]) -> Vec<Vertex> {
    let ch = children(g, rk, root, allowed);
    let mut waiting: BTreeSet<(u32, Vertex)> = ch[root].iter().copied().collect();
    let mut order = vec![root];
    while let Some((_, v)) = waiting.pop_first() {
        order.push(v);
        waiting.extend(ch[v].iter().copied());
    }
    order
}

/// Snapshot after one expansion of the incremental tree construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeStep {
    /// Vertex whose children were just inserted.
    pub expanded: Vertex,
    /// Unexpanded suffix of the current ordering, left to right.
    pub suffix: Vec<Vertex>,
    /// Parent-edge rank of each suffix vertex.
    pub suffix_ranks: Vec<u32>,
}

/// One-page layout of a rooted tree: the root comes first and every vertex
/// follows its parent. O(n log n).
pub fn layout_tree(t: &RootedTree) -> Result<ConstructionReport> {
    let g = t.graph();
    let order = tree_sequence(g, &g.ranks(), t.root(), &vec![true; g.n()]);
    let last = *order.last().unwrap();
    Ok(ConstructionReport::new(g, order, Family::Tree)?
        .anchor("r", Anchor::Vertex(t.root()))
        .anchor("v*", Anchor::Vertex(last)))
}

/// The tree construction carried out on an explicit ordering: the leftmost
/// unexpanded vertex is expanded by inserting its children into the
/// unexpanded suffix by weight. Records the suffix after every step.
pub fn layout_tree_traced(t: &RootedTree) -> Result<(ConstructionReport, Vec<TreeStep>)> {
    let g = t.graph();
    let rk = g.ranks();
    let ch = children(g, &rk, t.root(), &vec![true; g.n()]);
    let par_rank: Vec<u32> = {
        let mut pr = vec![0; g.n()];
        for list in &ch {
            for &(r, y) in list {
                pr[y] = r;
            }
        }
        pr
    };
    let mut order = vec![t.root()];
    let mut steps = Vec::new();
    let mut next = 0;
    while next < order.len() {
        let v = order[next];
        for &(r, c) in &ch[v] {
            let suffix = &order[next + 1..];
            let at = suffix.partition_point(|&x| (par_rank[x], x) < (r, c));
            order.insert(next + 1 + at, c);
        }
        next += 1;
        let suffix = order[next..].to_vec();
        steps.push(TreeStep {
            expanded: v,
            suffix_ranks: suffix.iter().map(|&x| par_rank[x]).collect(),
            suffix,
        });
    }
    let last = *order.last().unwrap();
    let report = ConstructionReport::new(g, order, Family::Tree)?
        .anchor("r", Anchor::Vertex(t.root()))
        .anchor("v*", Anchor::Vertex(last));
    Ok((report, steps))
}

/// Caterpillar order with `spine` running left to right (its last vertex
/// rightmost): the leaves of each spine vertex directly before it.
pub(crate) fn caterpillar_sequence(
    g: &WeightedGraph,
    rk: &[u32],
    spine: &[Vertex],
    allowed: &[bool],
    arrange: &mut dyn FnMut(Vertex, &mut Vec<Vertex>),
) -> Vec<Vertex> {
    let mut on_spine = vec![false; g.n()];
    for &p in spine {
        on_spine[p] = true;
    }
    let mut order = Vec::with_capacity(g.n());
    for &p in spine {
        let mut leaves: Vec<(u32, Vertex)> = g
            .neighbors(p)
            .iter()
            .filter(|&&(y, _)| allowed[y] && !on_spine[y])
            .map(|&(y, e)| (rk[e], y))
            .collect();
        leaves.sort_unstable();
        let mut leaves: Vec<Vertex> = leaves.into_iter().map(|(_, y)| y).collect();
        arrange(p, &mut leaves);
        order.extend(leaves);
        order.push(p);
    }
    order
}

fn oriented_spine(c: &Caterpillar, r: Vertex) -> Result<Vec<Vertex>> {
    let sp = c.spine();
    if *sp.last().unwrap() == r {
        Ok(sp.to_vec())
    } else if sp[0] == r {
        Ok(sp.iter().rev().copied().collect())
    } else {
        Err(Error::Structure(format!("{r} is not an end of the spine")))
    }
}

/// One-page layout of a caterpillar with the spine end `r` rightmost; leaves
/// of each spine vertex sit directly before it in increasing weight.
pub fn layout_caterpillar(c: &Caterpillar, r: Vertex) -> Result<ConstructionReport> {
    caterpillar_ordering_with(c, r, &mut |_, _| {})
}

/// Like [`layout_caterpillar`], but `arrange` may reorder the leaves of each
/// spine vertex (given in increasing weight) before they are placed.
pub fn caterpillar_ordering_with(
    c: &Caterpillar,
    r: Vertex,
    arrange: &mut dyn FnMut(Vertex, &mut Vec<Vertex>),
) -> Result<ConstructionReport> {
    let spine = oriented_spine(c, r)?;
    let g = c.graph();
    let order = caterpillar_sequence(g, &g.ranks(), &spine, &vec![true; g.n()], arrange);
    Ok(ConstructionReport::new(g, order, Family::Caterpillar)?
        .anchor("r", Anchor::Vertex(r))
        .anchor("spine", Anchor::Vertices(spine)))
}

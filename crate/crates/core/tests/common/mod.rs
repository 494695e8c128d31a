//! Independent oracles shared by the integration tests. They work from the
//! definitions directly and use none of the library's validation code.
#![allow(dead_code)]

use pql_core::{Layout, VertexOrdering, Weight, WeightedGraph};
use rand::seq::SliceRandom;
use rand::Rng;

/// `e` and `f` on one page fail: the heavier one ends strictly first while
/// the other is already open.
pub fn conflict(g: &WeightedGraph, ord: &VertexOrdering, e: usize, f: usize) -> bool {
    let span = |x: usize| {
        let (a, b) = (ord.position(g.edge(x).u), ord.position(g.edge(x).v));
        (a.min(b), a.max(b))
    };
    let (se, sf) = (span(e), span(f));
    let blocks = |s: (usize, usize), ws: &Weight, t: (usize, usize), wt: &Weight| ws > wt && s.1 < t.1 && t.0 < s.1;
    blocks(se, g.weight(e), sf, g.weight(f)) || blocks(sf, g.weight(f), se, g.weight(e))
}

pub fn layout_ok(l: &Layout) -> bool {
    let g = l.graph();
    (0..g.m()).all(|e| (e + 1..g.m()).all(|f| l.page(e) != l.page(f) || !conflict(g, l.ordering(), e, f)))
}

/// Fewest pages under `ord`, by exhaustive search over set partitions of the edges.
pub fn min_pages(g: &WeightedGraph, ord: &VertexOrdering) -> usize {
    let m = g.m();
    let c: Vec<Vec<bool>> = (0..m).map(|e| (0..m).map(|f| e != f && conflict(g, ord, e, f)).collect()).collect();
    fn go(c: &[Vec<bool>], blocks: &mut Vec<Vec<usize>>, e: usize, best: &mut usize) {
        if blocks.len() >= *best {
            return;
        }
        if e == c.len() {
            *best = blocks.len();
            return;
        }
        for b in 0..blocks.len() {
            if blocks[b].iter().all(|&f| !c[e][f]) {
                blocks[b].push(e);
                go(c, blocks, e + 1, best);
                blocks[b].pop();
            }
        }
        blocks.push(vec![e]);
        go(c, blocks, e + 1, best);
        blocks.pop();
    }
    let mut best = m + 1;
    go(&c, &mut Vec::new(), 0, &mut best);
    best.min(m)
}

pub fn all_orderings(n: usize) -> Vec<VertexOrdering> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<VertexOrdering>) {
        if cur.len() == used.len() {
            out.push(VertexOrdering::new(cur.clone()).unwrap());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// One edge set per isomorphism class of graphs on `n` vertices.
pub fn graphs_up_to_iso(n: usize, connected_only: bool) -> Vec<Vec<(usize, usize)>> {
    let pairs = pair_index(n);
    let slot = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let perms: Vec<Vec<usize>> = all_orderings(n).into_iter().map(|o| o.order().to_vec()).collect();
    let remap: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(a, b)| slot(p[a], p[b])).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let canonical = remap.iter().all(|r| {
            let mut img = 0u32;
            for (i, &j) in r.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    img |= 1 << j;
                }
            }
            img >= mask
        });
        if !canonical {
            continue;
        }
        let es: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if connected_only && !is_connected(n, &es) {
            continue;
        }
        out.push(es);
    }
    out
}

pub fn is_connected(n: usize, es: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in es {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

pub fn random_weight<R: Rng>(rng: &mut R) -> Weight {
    Weight::new(rng.gen_range(-6..=6), rng.gen_range(1..=3)).unwrap()
}

pub fn weighted<R: Rng>(n: usize, es: &[(usize, usize)], rng: &mut R) -> WeightedGraph {
    WeightedGraph::new(n, es.iter().map(|&(a, b)| (a, b, random_weight(rng)))).unwrap()
}

/// A random simple graph on `n` vertices with at most `max_m` edges.
pub fn random_graph<R: Rng>(n: usize, max_m: usize, rng: &mut R) -> WeightedGraph {
    let mut pairs = pair_index(n);
    pairs.shuffle(rng);
    let m = rng.gen_range(0..=max_m.min(pairs.len()));
    weighted(n, &pairs[..m], rng)
}

pub fn random_ordering<R: Rng>(n: usize, rng: &mut R) -> VertexOrdering {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    VertexOrdering::new(p).unwrap()
}

/// Chromatic number by trying every coloring with increasing color counts.
pub fn chromatic_number(adj: &[Vec<usize>]) -> usize {
    let n = adj.len();
    fn fits(adj: &[Vec<usize>], colors: &mut Vec<usize>, v: usize, k: usize) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 0..k {
            if adj[v].iter().all(|&u| u >= v || colors[u] != c) {
                colors[v] = c;
                if fits(adj, colors, v + 1, k) {
                    return true;
                }
            }
        }
        false
    }
    (0..=n).find(|&k| fits(adj, &mut vec![0; n], 0, k)).unwrap()
}

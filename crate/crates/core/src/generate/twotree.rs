//! Rooted 2-trees whose left-growing orderings force long inversions.

use std::collections::HashMap;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Vertex, WeightedGraph};
use crate::ordering::VertexOrdering;
use crate::weight::Weight;

/// A 2-tree with its construction: `root` is the root edge and `parents[t]`
/// the edge `t` was stacked onto (`None` for the two root vertices). Every
/// stacked vertex has a larger id than both of its parents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTwoTree {
    pub graph: WeightedGraph,
    pub root: (Vertex, Vertex),
    pub parents: Vec<Option<(Vertex, Vertex)>>,
}

impl RootedTwoTree {
    /// Checks that the annotation describes `graph` exactly.
    pub fn check(&self) -> Result<()> {
        let g = &self.graph;
        let bad = |msg: String| Err(Error::Structure(msg));
        if self.parents.len() != g.n() || !g.has_edge(self.root.0, self.root.1) {
            return bad("construction does not match the graph".into());
        }
        let mut expected = 1;
        for (t, p) in self.parents.iter().enumerate() {
            let is_root = t == self.root.0 || t == self.root.1;
            match (p, is_root) {
                (None, true) => {}
                (Some((u, v)), false) => {
                    if *u >= t || *v >= t || !g.has_edge(*u, *v) || !g.has_edge(*u, t) || !g.has_edge(*v, t) {
                        return bad(format!("vertex {t} is not stacked onto an earlier edge"));
                    }
                    expected += 2;
                }
                _ => return bad(format!("vertex {t} has an inconsistent parent entry")),
            }
        }
        if expected != g.m() {
            return bad("graph has edges outside the construction".into());
        }
        Ok(())
    }

    /// No stacked vertex lies to the right of both of its parents.
    pub fn is_left_growing(&self, ord: &VertexOrdering) -> bool {
        self.parents.iter().enumerate().all(|(t, p)| match p {
            None => true,
            Some((u, v)) => ord.position(t) < ord.position(*u).max(ord.position(*v)),
        })
    }

    /// A random left-growing ordering: vertices are inserted in construction
    /// order, each somewhere before its later parent.
    pub fn sample_left_growing<R: Rng + ?Sized>(&self, rng: &mut R) -> VertexOrdering {
        let (r0, r1) = self.root;
        let mut seq = if rng.gen_bool(0.5) { vec![r0, r1] } else { vec![r1, r0] };
        for (t, p) in self.parents.iter().enumerate() {
            if let Some((u, v)) = p {
                let iu = seq.iter().position(|x| x == u).unwrap();
                let iv = seq.iter().position(|x| x == v).unwrap();
                let at = rng.gen_range(0..=iu.max(iv));
                seq.insert(at, t);
            }
        }
        VertexOrdering::new(seq).expect("insertion builds a permutation")
    }
}

/// One recursive copy of `H_j` inside `H_k`: every edge it adds (all edges
/// at its stacked vertices) has weight in `[lo, hi)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkCopy {
    pub level: usize,
    pub root: (Vertex, Vertex),
    pub lo: Weight,
    pub hi: Weight,
    pub stacked: Vec<Vertex>,
}

/// `H_k` with its recursive copies (the outermost first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HkInstance {
    pub tree: RootedTwoTree,
    pub copies: Vec<HkCopy>,
}

struct Builder {
    parents: Vec<Option<(Vertex, Vertex)>>,
    edges: Vec<(Vertex, Vertex, Weight)>,
    d_override: Option<usize>,
    copies: Vec<HkCopy>,
}

impl Builder {
    fn stack(&mut self, u: Vertex, v: Vertex, wu: Weight, wv: Weight) -> Vertex {
        let t = self.parents.len();
        self.parents.push(Some((u, v)));
        self.edges.push((u, t, wu));
        self.edges.push((v, t, wv));
        t
    }

    /// Adds `H_k` on the root edge `(r0, r1)`, non-root weights in `[x, y)`.
    fn hk(&mut self, k: usize, (r0, r1): (Vertex, Vertex), x: &Weight, y: &Weight) {
        let slot = self.copies.len();
        let first = self.parents.len();
        self.copies.push(HkCopy { level: k, root: (r0, r1), lo: x.clone(), hi: y.clone(), stacked: Vec::new() });
        self.hk_body(k, (r0, r1), x, y);
        self.copies[slot].stacked = (first..self.parents.len()).collect();
    }

    fn hk_body(&mut self, k: usize, (r0, r1): (Vertex, Vertex), x: &Weight, y: &Weight) {
        if k == 1 {
            self.stack(r0, r1, x.clone(), x.clone());
            return;
        }
        let d = self.d_override.unwrap_or(2 * k * k);
        let scale = &(y - x) / &Weight::int(d as i64 + 1);
        let at = |z: i64| x + &(&scale * z);
        let a: Vec<Vertex> = (0..d).map(|_| self.stack(r0, r1, at(0), at(0))).collect();
        for (i, &ai) in a.iter().enumerate() {
            let i = i as i64 + 1;
            let d = d as i64;
            for parent in [r0, r1] {
                let b = self.stack(ai, parent, at(0), at(0));
                self.hk(k - 1, (ai, b), &at(i), &at(i + 1));
                self.hk(k - 1, (ai, b), &at(d + 1 - i), &at(d + 2 - i));
            }
        }
    }
}

/// `H_k` rooted at the edge `0-1` of weight 0, with all other weights in
/// `[0, d + 1)` for `d = 2k^2` (or `d_override`, applied at every level).
pub fn gen_hk(k: usize, d_override: Option<usize>) -> Result<HkInstance> {
    if k == 0 {
        return Err(Error::Precondition("H_k needs k >= 1".into()));
    }
    if d_override == Some(0) {
        return Err(Error::Precondition("d must be positive".into()));
    }
    let mut b = Builder {
        parents: vec![None, None],
        edges: vec![(0, 1, Weight::zero())],
        d_override,
        copies: Vec::new(),
    };
    let d = d_override.unwrap_or(2 * k * k);
    let top = if k == 1 { Weight::int(1) } else { Weight::int(d as i64 + 1) };
    b.hk(k, (0, 1), &Weight::zero(), &top);
    let graph = WeightedGraph::new(b.parents.len(), b.edges)?;
    Ok(HkInstance {
        tree: RootedTwoTree { graph, root: (0, 1), parents: b.parents },
        copies: b.copies,
    })
}

/// Result of replacing every stacked vertex by `p^2` perturbed copies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CopyInfo {
    /// Original vertex of every new vertex.
    pub copy_of: Vec<Vertex>,
    /// Copy index `i` in `1..=p^2`; 0 for the root vertices.
    pub index: Vec<usize>,
    /// The perturbation unit `eps / (2 p^2)` as a rational string.
    pub unit: String,
}

/// Half the smallest positive difference between two weights (1 if all are equal).
pub fn weight_gap_epsilon(g: &WeightedGraph) -> Weight {
    let mut ws = g.weights();
    ws.sort();
    ws.dedup();
    ws.windows(2)
        .map(|w| &w[1] - &w[0])
        .min()
        .map_or(Weight::int(1), |gap| &gap / &Weight::int(2))
}

/// Stacks `p^2` copies `t_1..t_{p^2}` wherever the construction stacks `t`
/// onto an edge `uv`, for every copy of `uv`, with weights
/// `w(ut) + i eps / (2p^2)` and `w(vt) - i eps / (2p^2)`.
pub fn gen_left_growing_transform(tree: &RootedTwoTree, p: usize) -> Result<(RootedTwoTree, CopyInfo)> {
    tree.check()?;
    if p == 0 {
        return Err(Error::Precondition("p must be positive".into()));
    }
    let g = &tree.graph;
    let pp = p * p;
    let unit = &weight_gap_epsilon(g) / &Weight::int(2 * pp as i64);
    let (r0, r1) = tree.root;
    let mut copies: HashMap<(Vertex, Vertex), Vec<(Vertex, Vertex)>> = HashMap::new();
    let add_copy = |c: &mut HashMap<_, Vec<_>>, a: Vertex, b: Vertex, ca: Vertex, cb: Vertex| {
        c.entry((a, b)).or_insert_with(Vec::new).push((ca, cb));
        c.entry((b, a)).or_insert_with(Vec::new).push((cb, ca));
    };
    let mut copy_of = Vec::new();
    let mut index = Vec::new();
    let mut parents = Vec::new();
    let mut edges = Vec::new();
    let mut fresh = |orig: Vertex, i: usize, par: Option<(Vertex, Vertex)>| {
        copy_of.push(orig);
        index.push(i);
        parents.push(par);
        copy_of.len() - 1
    };
    let (c0, c1) = (fresh(r0, 0, None), fresh(r1, 0, None));
    edges.push((c0, c1, g.weight(g.edge_id(r0, r1).unwrap()).clone()));
    add_copy(&mut copies, r0, r1, c0, c1);
    for (t, par) in tree.parents.iter().enumerate() {
        let Some((u, v)) = *par else { continue };
        let wut = g.weight(g.edge_id(u, t).unwrap()).clone();
        let wvt = g.weight(g.edge_id(v, t).unwrap()).clone();
        for (cu, cv) in copies[&(u, v)].clone() {
            for i in 1..=pp {
                let ti = fresh(t, i, Some((cu, cv)));
                let shift = &unit * i as i64;
                edges.push((cu, ti, &wut + &shift));
                edges.push((cv, ti, &wvt - &shift));
                add_copy(&mut copies, u, t, cu, ti);
                add_copy(&mut copies, v, t, cv, ti);
            }
        }
    }
    let graph = WeightedGraph::new(parents.len(), edges)?;
    Ok((
        RootedTwoTree { graph, root: (c0, c1), parents },
        CopyInfo { copy_of, index, unit: unit.to_string() },
    ))
}

use std::sync::atomic::{AtomicUsize, Ordering};

use super::{solve_fixed_order_with, LowerBoundCertificate, SolveConfig, SolveResult};
use crate::graph::{EdgeId, Vertex, WeightedGraph};
use crate::layout::Layout;
use crate::ordering::VertexOrdering;

pub fn solve_free_order(g: &WeightedGraph) -> SolveResult {
    solve_free_order_with(g, &SolveConfig::default())
}

/// Minimum pages over all vertex orderings.
///
/// Orderings are built left to right. An edge gets its page when its right
/// endpoint is placed, and a heavier edge closing while a lighter one is open
/// removes its page from the lighter edge's domain, so dead branches are cut
/// before the ordering is complete. The first vertex ranges over one
/// representative per automorphism orbit. Page counts are tried in increasing
/// order and the reported witness is the lexicographically first ordering (with
/// its first page assignment) found at the optimum, whatever the worker count.
pub fn solve_free_order_with(g: &WeightedGraph, cfg: &SolveConfig) -> SolveResult {
    let n = g.n();
    let m = g.m();
    let ident = VertexOrdering::identity(n);
    let upper = solve_fixed_order_with(g, &ident, cfg);
    let floor = usize::from(m > 0);
    if n > cfg.free_max_n || upper.k > 64 {
        return SolveResult {
            lower: floor,
            optimal: false,
            lower_bound_certificate: None,
            ..upper
        };
    }
    if upper.k <= floor && upper.optimal {
        return upper;
    }
    let orbits = weighted_automorphism_orbits(g);
    let starts: Vec<Vertex> = (0..n).filter(|&v| orbits[v] == v).collect();
    let search = Searcher::new(g);
    let mut nodes = 0u64;
    for k in floor..=upper.k {
        let outcomes = run_branches(&starts, cfg, |s, stop| search.run(s, k, cfg.node_budget, stop));
        nodes += outcomes.iter().map(|o| o.nodes).sum::<u64>();
        // Branches before the first success decide everything; later ones may have been cancelled.
        let mut aborted = false;
        for o in &outcomes {
            match &o.found {
                Some((order, pages)) if !aborted => {
                    let ord = VertexOrdering::new(order.clone()).expect("search builds permutations");
                    let witness = Layout::new(g.clone(), ord.clone(), pages.clone(), k).expect("pages below k");
                    let clique = crate::validate::longest_inversion(g, &ord).len();
                    return SolveResult {
                        k,
                        witness,
                        lower: k,
                        optimal: true,
                        clique,
                        lower_bound_certificate: (k > 1).then_some(LowerBoundCertificate::Exhaustive),
                        nodes,
                    };
                }
                _ => aborted |= o.aborted,
            }
        }
        if aborted {
            return SolveResult {
                lower: k,
                optimal: false,
                lower_bound_certificate: None,
                nodes,
                ..upper
            };
        }
    }
    unreachable!("the identity ordering fits in its own page count")
}

struct Outcome {
    found: Option<(Vec<Vertex>, Vec<usize>)>,
    aborted: bool,
    nodes: u64,
}

#[cfg(feature = "parallel")]
fn run_branches<F>(starts: &[Vertex], cfg: &SolveConfig, f: F) -> Vec<Outcome>
where
    F: Fn(Vertex, &dyn Fn() -> bool) -> Outcome + Sync,
{
    use rayon::prelude::*;
    let best = AtomicUsize::new(usize::MAX);
    let work = || {
        starts
            .par_iter()
            .enumerate()
            .map(|(i, &s)| {
                let stop = || best.load(Ordering::Relaxed) < i;
                let o = f(s, &stop);
                if o.found.is_some() || o.aborted {
                    best.fetch_min(i, Ordering::Relaxed);
                }
                o
            })
            .collect()
    };
    match rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads.unwrap_or(0))
        .build()
    {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

#[cfg(not(feature = "parallel"))]
fn run_branches<F>(starts: &[Vertex], _cfg: &SolveConfig, f: F) -> Vec<Outcome>
where
    F: Fn(Vertex, &dyn Fn() -> bool) -> Outcome,
{
    let best = AtomicUsize::new(usize::MAX);
    let mut out = Vec::new();
    for (i, &s) in starts.iter().enumerate() {
        let stop = || best.load(Ordering::Relaxed) < i;
        let o = f(s, &stop);
        let done = o.found.is_some() || o.aborted;
        out.push(o);
        if done {
            best.store(i, Ordering::Relaxed);
            break;
        }
    }
    out
}

struct Searcher<'a> {
    g: &'a WeightedGraph,
    rk: Vec<u32>,
}

struct State {
    k: usize,
    placed: Vec<bool>,
    order: Vec<Vertex>,
    pages: Vec<usize>,
    domain: Vec<u64>,
    open: Vec<EdgeId>,
    trail: Vec<(EdgeId, u64)>,
    used: usize,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

const UNSET: usize = usize::MAX;

impl<'a> Searcher<'a> {
    fn new(g: &'a WeightedGraph) -> Self {
        Searcher { g, rk: g.ranks() }
    }

    fn run(&self, start: Vertex, k: usize, budget: u64, stop: &dyn Fn() -> bool) -> Outcome {
        let g = self.g;
        let mut st = State {
            k,
            placed: vec![false; g.n()],
            order: Vec::with_capacity(g.n()),
            pages: vec![UNSET; g.m()],
            domain: vec![0; g.m()],
            open: Vec::new(),
            trail: Vec::new(),
            used: 0,
            nodes: 0,
            budget,
            aborted: false,
        };
        let ok = self.place(&mut st, start, stop);
        Outcome {
            found: ok.then(|| (st.order.clone(), st.pages.clone())),
            aborted: st.aborted,
            nodes: st.nodes,
        }
    }

    fn tick(&self, st: &mut State, stop: &dyn Fn() -> bool) -> bool {
        st.nodes += 1;
        if st.nodes > st.budget {
            st.aborted = true;
        }
        !st.aborted && !(st.nodes % 1024 == 0 && stop())
    }

    /// Places `v` next and tries every way to finish the ordering.
    fn place(&self, st: &mut State, v: Vertex, stop: &dyn Fn() -> bool) -> bool {
        if !self.tick(st, stop) {
            return false;
        }
        let closing: Vec<EdgeId> = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&&(u, _)| st.placed[u])
            .map(|&(_, e)| e)
            .collect();
        let open_before = st.open.clone();
        st.open.retain(|e| !closing.contains(e));
        let ok = self.assign(st, v, &closing, 0, stop);
        st.open = open_before;
        ok
    }

    fn assign(&self, st: &mut State, v: Vertex, closing: &[EdgeId], i: usize, stop: &dyn Fn() -> bool) -> bool {
        if i == closing.len() {
            return self.advance(st, v, stop);
        }
        let e = closing[i];
        let limit = (st.used + 1).min(st.k);
        for c in 0..limit {
            if st.domain[e] & (1 << c) == 0 {
                continue;
            }
            let mark = st.trail.len();
            let bit = 1u64 << c;
            let mut dead = false;
            for &f in &st.open {
                if self.rk[f] < self.rk[e] && st.domain[f] & bit != 0 {
                    st.trail.push((f, st.domain[f]));
                    st.domain[f] &= !bit;
                    if st.domain[f] == 0 {
                        dead = true;
                        break;
                    }
                }
            }
            if !dead {
                let used = st.used;
                st.pages[e] = c;
                st.used = used.max(c + 1);
                if self.assign(st, v, closing, i + 1, stop) {
                    return true;
                }
                st.pages[e] = UNSET;
                st.used = used;
            }
            while st.trail.len() > mark {
                let (f, d) = st.trail.pop().unwrap();
                st.domain[f] = d;
            }
            if st.aborted {
                return false;
            }
        }
        false
    }

    fn advance(&self, st: &mut State, v: Vertex, stop: &dyn Fn() -> bool) -> bool {
        let g = self.g;
        st.placed[v] = true;
        st.order.push(v);
        let full = if st.k == 64 { u64::MAX } else { (1u64 << st.k) - 1 };
        let opened: Vec<EdgeId> = g
            .neighbors(v)
            .iter()
            .filter(|&&(u, _)| !st.placed[u])
            .map(|&(_, e)| e)
            .collect();
        if !opened.is_empty() && st.k == 0 {
            st.placed[v] = false;
            st.order.pop();
            return false;
        }
        for &e in &opened {
            st.domain[e] = full;
            st.open.push(e);
        }
        let ok = if st.order.len() == g.n() {
            true
        } else {
            let mut ok = false;
            for u in 0..g.n() {
                if !st.placed[u] && self.place(st, u, stop) {
                    ok = true;
                    break;
                }
                if st.aborted {
                    break;
                }
            }
            ok
        };
        if !ok {
            st.open.truncate(st.open.len() - opened.len());
            st.placed[v] = false;
            st.order.pop();
        }
        ok
    }
}

/// Orbit of every vertex under weight-preserving automorphisms, named by its smallest member.
pub fn weighted_automorphism_orbits(g: &WeightedGraph) -> Vec<Vertex> {
    let n = g.n();
    let mut parent: Vec<Vertex> = (0..n).collect();
    fn find(p: &mut [Vertex], x: Vertex) -> Vertex {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    let rk = g.ranks();
    let sig: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let mut s: Vec<u32> = g.neighbors(v).iter().map(|&(_, e)| rk[e]).collect();
            s.sort_unstable();
            s
        })
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if find(&mut parent, u) == find(&mut parent, v) || sig[u] != sig[v] {
                continue;
            }
            if let Some(phi) = automorphism_mapping(g, &rk, &sig, u, v) {
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, phi[x]));
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

fn automorphism_mapping(g: &WeightedGraph, rk: &[u32], sig: &[Vec<u32>], u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut seq = vec![u];
    seq.extend((0..n).filter(|&x| x != u));
    let mut phi = vec![UNSET; n];
    let mut taken = vec![false; n];
    fn extend(
        g: &WeightedGraph,
        rk: &[u32],
        sig: &[Vec<u32>],
        seq: &[Vertex],
        i: usize,
        phi: &mut [Vertex],
        taken: &mut [bool],
        first: Vertex,
    ) -> bool {
        if i == seq.len() {
            return true;
        }
        let x = seq[i];
        let cands: Vec<Vertex> = if i == 0 { vec![first] } else { (0..phi.len()).collect() };
        for y in cands {
            if taken[y] || sig[x] != sig[y] {
                continue;
            }
            let fits = seq[..i].iter().all(|&z| match (g.edge_id(x, z), g.edge_id(y, phi[z])) {
                (None, None) => true,
                (Some(a), Some(b)) => rk[a] == rk[b],
                _ => false,
            });
            if !fits {
                continue;
            }
            phi[x] = y;
            taken[y] = true;
            if extend(g, rk, sig, seq, i + 1, phi, taken, first) {
                return true;
            }
            phi[x] = UNSET;
            taken[y] = false;
        }
        false
    }
    extend(g, rk, sig, &seq, 0, &mut phi, &mut taken, v).then_some(phi)
}

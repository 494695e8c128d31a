//! Exact graph coloring by saturation-degree branch and bound.

/// Result of an exact coloring run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub k: usize,
    /// Whether `k` was proven optimal within the node budget.
    pub optimal: bool,
    pub lower: usize,
    pub nodes: u64,
}

/// Greedy saturation-degree coloring; deterministic.
pub fn dsatur_greedy(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut colors = vec![usize::MAX; n];
    let mut sat: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat_count = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (sat_count[v], adj[v].len(), std::cmp::Reverse(v)))
            .unwrap();
        let c = (0..).find(|&c| !sat[v].get(c).copied().unwrap_or(false)).unwrap();
        colors[v] = c;
        for &u in &adj[v] {
            if sat[u].len() <= c {
                sat[u].resize(c + 1, false);
            }
            if !sat[u][c] {
                sat[u][c] = true;
                sat_count[u] += 1;
            }
        }
    }
    colors
}

struct Search<'a> {
    adj: &'a [Vec<usize>],
    colors: Vec<usize>,
    /// `counts[v * cap + c]`: colored neighbors of `v` with color `c`.
    counts: Vec<u32>,
    sat: Vec<usize>,
    cap: usize,
    best: Vec<usize>,
    best_k: usize,
    lower: usize,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

impl Search<'_> {
    fn set(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        let adj = self.adj;
        for &u in &adj[v] {
            let slot = &mut self.counts[u * self.cap + c];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] += 1;
            }
        }
    }

    fn unset(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = usize::MAX;
        let adj = self.adj;
        for &u in &adj[v] {
            let slot = &mut self.counts[u * self.cap + c];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] -= 1;
            }
        }
    }

    fn run(&mut self, colored: usize, used: usize) {
        if self.aborted || self.best_k <= self.lower {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let n = self.adj.len();
        if colored == n {
            self.best = self.colors.clone();
            self.best_k = used;
            return;
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by_key(|&v| (self.sat[v], self.adj[v].len(), std::cmp::Reverse(v)))
            .unwrap();
        let limit = (used + 1).min(self.best_k - 1);
        for c in 0..limit {
            if self.counts[v * self.cap + c] != 0 {
                continue;
            }
            self.set(v, c);
            self.run(colored + 1, used.max(c + 1));
            self.unset(v);
            if self.aborted || self.best_k <= self.lower {
                return;
            }
        }
    }
}

/// Minimum coloring of the graph given by adjacency lists.
///
/// `clique_lower` is a known lower bound (for example the size of a clique).
/// The search stops after `node_budget` nodes; the result then carries the
/// best coloring found and `optimal = false`.
pub fn exact_coloring(adj: &[Vec<usize>], clique_lower: usize, node_budget: u64) -> Coloring {
    let n = adj.len();
    if n == 0 {
        return Coloring { colors: Vec::new(), k: 0, optimal: true, lower: 0, nodes: 0 };
    }
    let greedy = dsatur_greedy(adj);
    let ub = greedy.iter().max().unwrap() + 1;
    let lower = clique_lower.max(1);
    if ub <= lower {
        return Coloring { colors: greedy, k: ub, optimal: true, lower: ub, nodes: 0 };
    }
    let mut s = Search {
        adj,
        colors: vec![usize::MAX; n],
        counts: vec![0; n * ub],
        sat: vec![0; n],
        cap: ub,
        best: greedy,
        best_k: ub,
        lower,
        nodes: 0,
        budget: node_budget,
        aborted: false,
    };
    s.run(0, 0);
    let optimal = !s.aborted;
    Coloring {
        k: s.best_k,
        lower: if optimal { s.best_k } else { lower },
        colors: s.best,
        optimal,
        nodes: s.nodes,
    }
}

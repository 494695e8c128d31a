//! Annotated graph families consumed by the constructors.
//!
//! Each descriptor checks on construction that its annotations describe the
//! graph: roots exist, spines are paths whose removal leaves only leaves,
//! cycles are the unique cycle of the graph.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Vertex, WeightedGraph};

/// A tree with a designated root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    graph: WeightedGraph,
    root: Vertex,
}

impl RootedTree {
    pub fn new(graph: WeightedGraph, root: Vertex) -> Result<Self> {
        if !graph.is_tree() {
            return Err(Error::Structure("graph is not a tree".into()));
        }
        if root >= graph.n() {
            return Err(Error::Structure(format!("root {root} not in graph")));
        }
        Ok(RootedTree { graph, root })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    /// Parent and parent edge of every vertex (`None` at the root).
    pub fn parents(&self) -> Vec<Option<(Vertex, EdgeId)>> {
        self.graph.bfs_parents(self.root, &vec![true; self.graph.n()])
    }
}

/// Checks that `spine` is a path of `g` and that every vertex of `part`
/// outside the spine is a leaf hanging off the spine.
fn check_caterpillar(g: &WeightedGraph, part: &[Vertex], spine: &[Vertex]) -> Result<()> {
    if spine.is_empty() {
        return Err(Error::Structure("empty spine".into()));
    }
    let mut on_spine = vec![false; g.n()];
    for (i, &p) in spine.iter().enumerate() {
        if p >= g.n() || on_spine[p] {
            return Err(Error::Structure(format!("spine vertex {p} invalid or repeated")));
        }
        on_spine[p] = true;
        if i > 0 && !g.has_edge(spine[i - 1], p) {
            return Err(Error::Structure(format!("spine step {}-{p} is not an edge", spine[i - 1])));
        }
    }
    let mut in_part = vec![false; g.n()];
    for &v in part {
        in_part[v] = true;
    }
    if let Some(&p) = spine.iter().find(|&&p| !in_part[p]) {
        return Err(Error::Structure(format!("spine vertex {p} outside its caterpillar")));
    }
    for &v in part {
        if on_spine[v] {
            continue;
        }
        let ok = g.degree(v) == 1 && on_spine[g.neighbors(v)[0].0];
        if !ok {
            return Err(Error::Structure(format!("vertex {v} is neither on the spine nor a leaf at the spine")));
        }
    }
    Ok(())
}

/// A caterpillar: a tree whose non-spine vertices are leaves attached to the spine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caterpillar {
    graph: WeightedGraph,
    spine: Vec<Vertex>,
}

impl Caterpillar {
    pub fn new(graph: WeightedGraph, spine: Vec<Vertex>) -> Result<Self> {
        if !graph.is_tree() {
            return Err(Error::Structure("caterpillar must be a tree".into()));
        }
        let all: Vec<Vertex> = (0..graph.n()).collect();
        check_caterpillar(&graph, &all, &spine)?;
        Ok(Caterpillar { graph, spine })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn spine(&self) -> &[Vertex] {
        &self.spine
    }
}

/// What may hang off a vertex of the cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Hanging {
    Nothing,
    Legs,
    Caterpillar(Vec<Vertex>),
}

/// Validates a unicyclic graph with the given cycle and hanging parts.
/// Returns the component of `G - E(C)` at each cycle position.
pub(crate) fn check_unicyclic(
    g: &WeightedGraph,
    cycle: &[Vertex],
    hanging: &dyn Fn(Vertex) -> Hanging,
) -> Result<Vec<Vec<Vertex>>> {
    let n = g.n();
    if cycle.len() < 3 {
        return Err(Error::Structure("cycle needs at least 3 vertices".into()));
    }
    if !g.is_connected() || g.m() != n {
        return Err(Error::Structure("graph must be connected with exactly one cycle".into()));
    }
    let mut on_cycle = vec![false; n];
    for (i, &c) in cycle.iter().enumerate() {
        if c >= n || on_cycle[c] {
            return Err(Error::Structure(format!("cycle vertex {c} invalid or repeated")));
        }
        on_cycle[c] = true;
        let next = cycle[(i + 1) % cycle.len()];
        if !g.has_edge(c, next) {
            return Err(Error::Structure(format!("cycle step {c}-{next} is not an edge")));
        }
    }
    let mut parts = Vec::with_capacity(cycle.len());
    for &w in cycle {
        let part = off_cycle_component(g, &on_cycle, w);
        match hanging(w) {
            Hanging::Nothing if part.len() > 1 => {
                return Err(Error::Structure(format!("vertex {w} must carry nothing outside the cycle")))
            }
            Hanging::Legs => {
                if let Some(&x) = part.iter().find(|&&x| x != w && (g.degree(x) != 1 || !g.has_edge(x, w))) {
                    return Err(Error::Structure(format!("vertex {x} is not a leg at {w}")));
                }
            }
            Hanging::Caterpillar(spine) => {
                if spine.first() != Some(&w) {
                    return Err(Error::Structure(format!("caterpillar at {w} must have its spine start at {w}")));
                }
                check_caterpillar(g, &part, &spine)?;
            }
            Hanging::Nothing => {}
        }
        parts.push(part);
    }
    Ok(parts)
}

/// Vertices reachable from cycle vertex `w` without passing through other cycle vertices.
pub(crate) fn off_cycle_component(g: &WeightedGraph, on_cycle: &[bool], w: Vertex) -> Vec<Vertex> {
    let mut seen = vec![false; g.n()];
    seen[w] = true;
    let mut out = vec![w];
    let mut queue = VecDeque::from([w]);
    while let Some(x) = queue.pop_front() {
        for &(y, _) in g.neighbors(x) {
            if !seen[y] && !on_cycle[y] {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out
}

/// A cycle whose vertices may carry leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeggedCycle {
    graph: WeightedGraph,
    cycle: Vec<Vertex>,
}

impl LeggedCycle {
    /// `cycle` lists the cycle vertices in cyclic order.
    pub fn new(graph: WeightedGraph, cycle: Vec<Vertex>) -> Result<Self> {
        check_unicyclic(&graph, &cycle, &|_| Hanging::Legs)?;
        Ok(LeggedCycle { graph, cycle })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn cycle(&self) -> &[Vertex] {
        &self.cycle
    }
}

/// A cycle and a caterpillar sharing exactly one vertex `r`, an end of the spine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclePlusCaterpillar {
    graph: WeightedGraph,
    cycle: Vec<Vertex>,
    spine: Vec<Vertex>,
}

impl CyclePlusCaterpillar {
    /// `spine[0]` is the shared vertex `r` and must lie on `cycle`.
    pub fn new(graph: WeightedGraph, cycle: Vec<Vertex>, spine: Vec<Vertex>) -> Result<Self> {
        let r = *spine.first().ok_or_else(|| Error::Structure("empty spine".into()))?;
        if !cycle.contains(&r) {
            return Err(Error::Structure(format!("spine start {r} is not on the cycle")));
        }
        let sp = spine.clone();
        check_unicyclic(&graph, &cycle, &|w| {
            if w == r {
                Hanging::Caterpillar(sp.clone())
            } else {
                Hanging::Nothing
            }
        })?;
        Ok(CyclePlusCaterpillar { graph, cycle, spine })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn cycle(&self) -> &[Vertex] {
        &self.cycle
    }

    pub fn spine(&self) -> &[Vertex] {
        &self.spine
    }

    pub fn root(&self) -> Vertex {
        self.spine[0]
    }
}

/// A 4-cycle `abcd` with caterpillars rooted at the opposite vertices `a` and `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadrangle {
    graph: WeightedGraph,
    cycle: [Vertex; 4],
    spine_a: Vec<Vertex>,
    spine_c: Vec<Vertex>,
}

impl Quadrangle {
    /// Spines start at `a` and `c` respectively; a spine `[a]` is a star or a lone vertex.
    pub fn new(graph: WeightedGraph, cycle: [Vertex; 4], spine_a: Vec<Vertex>, spine_c: Vec<Vertex>) -> Result<Self> {
        let (sa, sc) = (spine_a.clone(), spine_c.clone());
        check_unicyclic(&graph, &cycle, &|w| {
            if w == cycle[0] {
                Hanging::Caterpillar(sa.clone())
            } else if w == cycle[2] {
                Hanging::Caterpillar(sc.clone())
            } else {
                Hanging::Nothing
            }
        })?;
        Ok(Quadrangle { graph, cycle, spine_a, spine_c })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn cycle(&self) -> [Vertex; 4] {
        self.cycle
    }

    pub fn spine_a(&self) -> &[Vertex] {
        &self.spine_a
    }

    pub fn spine_c(&self) -> &[Vertex] {
        &self.spine_c
    }
}

/// A triangle `abc` with caterpillars rooted at `a` and `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCaterpillars {
    graph: WeightedGraph,
    cycle: [Vertex; 3],
    spine_a: Vec<Vertex>,
    spine_b: Vec<Vertex>,
}

impl TriangleCaterpillars {
    pub fn new(graph: WeightedGraph, cycle: [Vertex; 3], spine_a: Vec<Vertex>, spine_b: Vec<Vertex>) -> Result<Self> {
        let (sa, sb) = (spine_a.clone(), spine_b.clone());
        check_unicyclic(&graph, &cycle, &|w| {
            if w == cycle[0] {
                Hanging::Caterpillar(sa.clone())
            } else if w == cycle[1] {
                Hanging::Caterpillar(sb.clone())
            } else {
                Hanging::Nothing
            }
        })?;
        Ok(TriangleCaterpillars { graph, cycle, spine_a, spine_b })
    }

    pub fn graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn cycle(&self) -> [Vertex; 3] {
        self.cycle
    }

    pub fn spine_a(&self) -> &[Vertex] {
        &self.spine_a
    }

    pub fn spine_b(&self) -> &[Vertex] {
        &self.spine_b
    }
}

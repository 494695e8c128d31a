//! Random instances of the one-page families, with their annotations.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::construct::{Family, FamilyInstance};
use crate::graph::{Vertex, WeightedGraph};
use crate::structures::{Caterpillar, CyclePlusCaterpillar, LeggedCycle, Quadrangle, RootedTree, TriangleCaterpillars};
use crate::weight::Weight;

/// A random rational in `[-9, 9]` with denominator at most 4; ties are common.
pub fn random_weight<R: Rng + ?Sized>(rng: &mut R) -> Weight {
    Weight::new(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4)).expect("nonzero denominator")
}

/// Graph under construction with structured ids, relabeled at the end.
struct Draft {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Draft {
    fn new(n: usize) -> Self {
        Draft { n, edges: Vec::new() }
    }

    fn vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, a: Vertex, b: Vertex) {
        self.edges.push((a, b));
    }

    /// Grows a caterpillar at `w` with `extra` new vertices; returns its spine from `w`.
    fn caterpillar<R: Rng + ?Sized>(&mut self, rng: &mut R, w: Vertex, extra: usize) -> Vec<Vertex> {
        let spine_len = rng.gen_range(0..=extra);
        let mut spine = vec![w];
        for _ in 0..spine_len {
            let x = self.vertex();
            self.edge(*spine.last().unwrap(), x);
            spine.push(x);
        }
        for _ in spine_len..extra {
            let p = spine[rng.gen_range(0..spine.len())];
            let x = self.vertex();
            self.edge(p, x);
        }
        spine
    }

    /// Random relabeling and weights; returns the graph and the relabeling.
    fn finish<R: Rng + ?Sized>(mut self, rng: &mut R) -> (WeightedGraph, Vec<Vertex>) {
        let mut perm: Vec<Vertex> = (0..self.n).collect();
        perm.shuffle(rng);
        self.edges.shuffle(rng);
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(a, b)| (perm[a], perm[b], random_weight(rng)))
            .collect();
        (WeightedGraph::new(self.n, edges).expect("draft is simple"), perm)
    }
}

fn map(perm: &[Vertex], xs: &[Vertex]) -> Vec<Vertex> {
    xs.iter().map(|&x| perm[x]).collect()
}

/// Samples an instance of `family` with at most `n_max` vertices (sizes are
/// raised to the family minimum where needed).
pub fn sample_family<R: Rng + ?Sized>(family: Family, n_max: usize, rng: &mut R) -> FamilyInstance {
    match family {
        Family::Tree => {
            let n = rng.gen_range(1..=n_max.max(1));
            let mut d = Draft::new(1);
            for _ in 1..n {
                let p = rng.gen_range(0..d.n);
                let x = d.vertex();
                d.edge(p, x);
            }
            let (g, perm) = d.finish(rng);
            FamilyInstance::Tree(RootedTree::new(g, perm[rng.gen_range(0..n)]).unwrap())
        }
        Family::Caterpillar => {
            let n = rng.gen_range(1..=n_max.max(1));
            let mut d = Draft::new(1);
            let spine = d.caterpillar(rng, 0, n - 1);
            let (g, perm) = d.finish(rng);
            let spine = map(&perm, &spine);
            let r = if rng.gen_bool(0.5) { spine[0] } else { *spine.last().unwrap() };
            FamilyInstance::Caterpillar(Caterpillar::new(g, spine).unwrap(), r)
        }
        Family::Cycle => {
            let n = rng.gen_range(3..=n_max.max(3));
            let mut d = Draft::new(n);
            for i in 0..n {
                d.edge(i, (i + 1) % n);
            }
            let (g, _) = d.finish(rng);
            let v = rng.gen_range(0..n);
            FamilyInstance::Cycle(g, v)
        }
        Family::LeggedCycle => {
            let n = rng.gen_range(3..=n_max.max(3));
            let len = rng.gen_range(3..=n);
            let mut d = Draft::new(len);
            for i in 0..len {
                d.edge(i, (i + 1) % len);
            }
            for _ in len..n {
                let p = rng.gen_range(0..len);
                let x = d.vertex();
                d.edge(p, x);
            }
            let (g, perm) = d.finish(rng);
            let cyc = map(&perm, &(0..len).collect::<Vec<_>>());
            FamilyInstance::LeggedCycle(LeggedCycle::new(g, cyc).unwrap())
        }
        Family::CyclePlusCaterpillar => {
            let n = rng.gen_range(3..=n_max.max(3));
            let len = rng.gen_range(3..=n);
            let mut d = Draft::new(len);
            for i in 0..len {
                d.edge(i, (i + 1) % len);
            }
            let spine = d.caterpillar(rng, 0, n - len);
            let (g, perm) = d.finish(rng);
            let cyc = map(&perm, &(0..len).collect::<Vec<_>>());
            FamilyInstance::CyclePlusCaterpillar(CyclePlusCaterpillar::new(g, cyc, map(&perm, &spine)).unwrap())
        }
        Family::Quadrangle => {
            let n = rng.gen_range(4..=n_max.max(4));
            let mut d = Draft::new(4);
            for i in 0..4 {
                d.edge(i, (i + 1) % 4);
            }
            let extra = n - 4;
            let at_a = rng.gen_range(0..=extra);
            let sa = d.caterpillar(rng, 0, at_a);
            let sc = d.caterpillar(rng, 2, extra - at_a);
            let (g, perm) = d.finish(rng);
            let cyc = [perm[0], perm[1], perm[2], perm[3]];
            FamilyInstance::Quadrangle(Quadrangle::new(g, cyc, map(&perm, &sa), map(&perm, &sc)).unwrap())
        }
        Family::Triangle => {
            let n = rng.gen_range(3..=n_max.max(3));
            let mut d = Draft::new(3);
            for i in 0..3 {
                d.edge(i, (i + 1) % 3);
            }
            let extra = n - 3;
            let at_a = rng.gen_range(0..=extra);
            let sa = d.caterpillar(rng, 0, at_a);
            let sb = d.caterpillar(rng, 1, extra - at_a);
            let (g, perm) = d.finish(rng);
            let cyc = [perm[0], perm[1], perm[2]];
            FamilyInstance::Triangle(TriangleCaterpillars::new(g, cyc, map(&perm, &sa), map(&perm, &sb)).unwrap())
        }
        Family::K23 => {
            let mut d = Draft::new(5);
            for u in 0..2 {
                for v in 2..5 {
                    d.edge(u, v);
                }
            }
            FamilyInstance::K23(d.finish(rng).0)
        }
        Family::K4MinusE => {
            let mut d = Draft::new(4);
            for (a, b) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)] {
                d.edge(a, b);
            }
            FamilyInstance::K4MinusE(d.finish(rng).0)
        }
    }
}

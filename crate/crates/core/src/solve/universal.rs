use super::SolveConfig;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Vertex, WeightedGraph};
use crate::weight::Weight;

/// Answer of the weight-universal one-page test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniversalVerdict {
    /// Every weighting admits a one-page layout.
    Yes,
    /// The given weighting admits none. `order` lists the edges lightest first
    /// and `graph` carries the weights `1..=m` in that order.
    No { order: Vec<EdgeId>, graph: WeightedGraph },
}

impl UniversalVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, UniversalVerdict::Yes)
    }

    /// `{"answer":"yes"}`, or the refuting weighting as a graph document
    /// with the edge order (lightest first) as `"u-v"` keys.
    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        match self {
            UniversalVerdict::Yes => json!({"answer": "yes"}),
            UniversalVerdict::No { order, graph } => json!({
                "answer": "no",
                "lightest_first": order
                    .iter()
                    .map(|&e| crate::io::page_key(graph.edge(e).u, graph.edge(e).v))
                    .collect::<Vec<_>>(),
                "graph": crate::io::graph_to_value(graph),
            }),
        }
    }
}

pub fn universal_pqn1_oracle(g: &WeightedGraph) -> Result<UniversalVerdict> {
    universal_pqn1_oracle_with(g, &SolveConfig::default())
}

/// Decides whether `g` has a one-page layout for every edge weighting.
///
/// Only the relative order of weights matters and ties can only remove
/// forbidden pairs, so it suffices to range over strict orders of the edges.
/// For every vertex ordering the set of pairs `(e, f)` with `e` ending while
/// `f` is open is collected; an ordering works for a weight order exactly when
/// each such `e` is lighter than its `f`. Components are handled separately.
/// A component with more than `cfg.universal_max_m` edges is probed through
/// its subgraphs of that size: a weighting without a one-page layout of a
/// subgraph has none for the whole graph either. If every probe is positive
/// the call fails with a budget error.
pub fn universal_pqn1_oracle_with(g: &WeightedGraph, cfg: &SolveConfig) -> Result<UniversalVerdict> {
    if cfg.universal_max_m == 0 || cfg.universal_max_m > 11 {
        return Err(Error::Precondition("universal edge budget must lie in 1..=11".into()));
    }
    for comp in g.components() {
        let ids = component_edges(g, &comp);
        if ids.is_empty() {
            continue;
        }
        let found = if ids.len() <= cfg.universal_max_m {
            refute(g, &ids)
        } else {
            probe_subsets(g, &ids, cfg.universal_max_m)?
        };
        if let Some(light_first) = found {
            return Ok(no_verdict(g, light_first));
        }
    }
    Ok(UniversalVerdict::Yes)
}

fn component_edges(g: &WeightedGraph, comp: &[Vertex]) -> Vec<EdgeId> {
    let mut ids: Vec<EdgeId> = comp
        .iter()
        .flat_map(|&v| g.neighbors(v).iter().map(|&(_, e)| e))
        .collect();
    ids.sort_unstable();
    ids.dedup();
    ids
}

fn no_verdict(g: &WeightedGraph, light_first: Vec<EdgeId>) -> UniversalVerdict {
    let mut order = light_first;
    let mut rest: Vec<EdgeId> = (0..g.m()).filter(|e| !order.contains(e)).collect();
    order.append(&mut rest);
    let mut w = vec![Weight::zero(); g.m()];
    for (i, &e) in order.iter().enumerate() {
        w[e] = Weight::int(i as i64 + 1);
    }
    let graph = g.with_weights(w).expect("one weight per edge");
    UniversalVerdict::No { order, graph }
}

fn probe_subsets(g: &WeightedGraph, ids: &[EdgeId], size: usize) -> Result<Option<Vec<EdgeId>>> {
    let mut pick: Vec<usize> = (0..size).collect();
    loop {
        let sub: Vec<EdgeId> = pick.iter().map(|&i| ids[i]).collect();
        let h = g.edge_subgraph(&sub);
        for comp in h.components() {
            let local = component_edges(&h, &comp);
            if local.is_empty() {
                continue;
            }
            if let Some(order) = refute(&h, &local) {
                // edge_subgraph keeps the listed order, so local ids index `sub`.
                return Ok(Some(order.into_iter().map(|e| sub[e]).collect()));
            }
        }
        let Some(i) = (0..size).rev().find(|&i| pick[i] < ids.len() - size + i) else {
            return Err(Error::Budget(format!(
                "{} edges exceed the universal budget of {} and no subgraph of that size refutes",
                ids.len(),
                size
            )));
        };
        pick[i] += 1;
        for j in i + 1..size {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

/// Pair sets `R` (bit `a * s + b`: local edge `a` ends while `b` is open)
/// over all orderings of the vertices touched by `ids`, keeping only the
/// inclusion-minimal ones.
pub(crate) fn ordering_pair_sets(g: &WeightedGraph, ids: &[EdgeId]) -> Vec<u128> {
    let s = ids.len();
    assert!(s * s <= 128, "too many edges for pair masks");
    let mut verts: Vec<Vertex> = ids.iter().flat_map(|&e| [g.edge(e).u, g.edge(e).v]).collect();
    verts.sort_unstable();
    verts.dedup();
    let local = |v: Vertex| verts.binary_search(&v).unwrap();
    let ends: Vec<(usize, usize)> = ids.iter().map(|&e| (local(g.edge(e).u), local(g.edge(e).v))).collect();
    let mut perm: Vec<usize> = (0..verts.len()).collect();
    let mut pos = vec![0usize; verts.len()];
    let mut sets = Vec::new();
    loop {
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = i;
        }
        let span: Vec<(usize, usize)> = ends
            .iter()
            .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
            .collect();
        let mut r = 0u128;
        for a in 0..s {
            for b in 0..s {
                if span[a].1 < span[b].1 && span[b].0 < span[a].1 {
                    r |= 1 << (a * s + b);
                }
            }
        }
        sets.push(r);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    sets.sort_unstable_by_key(|r| (r.count_ones(), *r));
    sets.dedup();
    let mut minimal: Vec<u128> = Vec::new();
    for r in sets {
        if !minimal.iter().any(|&q| q & r == q) {
            minimal.push(r);
        }
    }
    minimal
}

/// Pairs `(a, b)` with `a` strictly heavier than `b` under the local ranks.
pub(crate) fn heavier_pairs(rank: &[usize]) -> u128 {
    let s = rank.len();
    let mut bad = 0u128;
    for a in 0..s {
        for b in 0..s {
            if rank[a] > rank[b] {
                bad |= 1 << (a * s + b);
            }
        }
    }
    bad
}

pub(crate) fn covered(sets: &[u128], rank: &[usize]) -> bool {
    let bad = heavier_pairs(rank);
    sets.iter().any(|&r| r & bad == 0)
}

/// First strict weight order (as local edges lightest first) with no one-page
/// ordering, mapped back to graph edge ids.
fn refute(g: &WeightedGraph, ids: &[EdgeId]) -> Option<Vec<EdgeId>> {
    let sets = ordering_pair_sets(g, ids);
    let s = ids.len();
    let mut light_first: Vec<usize> = (0..s).collect();
    let mut rank = vec![0usize; s];
    loop {
        for (i, &e) in light_first.iter().enumerate() {
            rank[e] = i;
        }
        if !covered(&sets, &rank) {
            return Some(light_first.iter().map(|&i| ids[i]).collect());
        }
        if !next_permutation(&mut light_first) {
            return None;
        }
    }
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
    use crate::generate::minors::gen_forbidden_minor;
    use crate::layout::Layout;
    use crate::recognize::recognize_pqn1;
    use crate::validate::simulate_sweep;

    fn g(n: usize, es: &[(usize, usize)]) -> WeightedGraph {
        let es: Vec<_> = es.iter().map(|&(a, b)| (a, b, 1)).collect();
        WeightedGraph::from_int_edges(n, &es).unwrap()
    }

    #[test]
    fn four_cycle_is_universal() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(universal_pqn1_oracle(&c4).unwrap().is_yes());
    }

    #[test]
    fn forbidden_minors_are_refuted() {
        for i in 1..=8 {
            let f = gen_forbidden_minor(i).unwrap();
            match universal_pqn1_oracle(&f).unwrap() {
                UniversalVerdict::Yes => panic!("F{i} accepted"),
                UniversalVerdict::No { graph, .. } => {
                    assert!(!recognize_one_page_exists(&graph), "F{i} witness has a layout");
                }
            }
        }
    }

    fn recognize_one_page_exists(h: &WeightedGraph) -> bool {
        let mut perm: Vec<usize> = (0..h.n()).collect();
        loop {
            let ord = crate::ordering::VertexOrdering::new(perm.clone()).unwrap();
            if simulate_sweep(&Layout::one_page(h.clone(), ord).unwrap()).is_valid() {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
    }

    #[test]
    fn large_components_are_probed_by_subgraphs() {
        let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        let h = g(5, &k5);
        let cfg = SolveConfig { universal_max_m: 6, ..SolveConfig::default() };
        let v = universal_pqn1_oracle_with(&h, &cfg).unwrap();
        assert!(!v.is_yes());
        assert!(!recognize_pqn1(&h).is_yes());
    }

    #[test]
    fn budget_error_when_probes_cannot_refute() {
        let path: Vec<(usize, usize)> = (0..6).map(|i| (i, i + 1)).collect();
        let cfg = SolveConfig { universal_max_m: 3, ..SolveConfig::default() };
        assert!(matches!(
            universal_pqn1_oracle_with(&g(7, &path), &cfg),
            Err(Error::Budget(_))
        ));
    }

    /// Every weak order (ties allowed) of up to five edges: whenever all strict
    /// orders are covered, so is the weak one.
    #[test]
    fn ties_never_help_the_adversary() {
        let graphs = [
            g(3, &[(0, 1), (1, 2), (0, 2)]),
            g(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
            g(5, &[(0, 1), (0, 2), (0, 3), (3, 4), (1, 2)]),
            g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]),
            g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
        ];
        for h in &graphs {
            let ids: Vec<EdgeId> = (0..h.m()).collect();
            let sets = ordering_pair_sets(h, &ids);
            let strict_yes = refute(h, &ids).is_none();
            let s = ids.len();
            let mut rank = vec![0usize; s];
            let mut weak_yes = true;
            loop {
                weak_yes &= covered(&sets, &rank);
                // Odometer over all rank vectors in 0..s; those with gaps are weak orders too.
                let Some(i) = (0..s).find(|&i| rank[i] + 1 < s) else { break };
                rank[i] += 1;
                rank[..i].iter_mut().for_each(|r| *r = 0);
            }
            assert_eq!(strict_yes, weak_yes);
        }
    }
}

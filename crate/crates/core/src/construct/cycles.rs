use super::tree::{caterpillar_sequence, tree_sequence};
use super::{edge_anchor, heaviest, Anchor, ConstructionReport, Family};
use crate::error::{Error, Result};
use crate::graph::{Vertex, WeightedGraph};
use crate::structures::{off_cycle_component, CyclePlusCaterpillar, LeggedCycle, Quadrangle};

/// Two-candidate greedy on the cycle `cyc` (cyclic order) starting at `start`:
/// the candidate whose edge to its placed neighbor is lighter goes next
/// (ties to the smaller vertex id).
pub(crate) fn cycle_sequence(g: &WeightedGraph, rk: &[u32], cyc: &[Vertex], start: Vertex) -> Vec<Vertex> {
    let len = cyc.len();
    let s = cyc.iter().position(|&x| x == start).expect("start on cycle");
    let w = |a: Vertex, b: Vertex| rk[g.edge_id(a, b).expect("cycle edge")];
    let (mut i, mut j) = (1usize, len - 1);
    let at = |k: usize| cyc[(s + k) % len];
    let mut order = vec![start];
    while i < j {
        let (a, b) = (at(i), at(j));
        let (wa, wb) = (w(at(i - 1), a), w(at((j + 1) % len), b));
        if (wa, a) < (wb, b) {
            order.push(a);
            i += 1;
        } else {
            order.push(b);
            j -= 1;
        }
    }
    order.push(at(i));
    order
}

/// One-page layout of a cycle with `v` leftmost.
pub fn layout_cycle(g: &WeightedGraph, v: Vertex) -> Result<ConstructionReport> {
    let cyc = g
        .cycle_order()
        .ok_or_else(|| Error::Structure("graph is not a single cycle".into()))?;
    if v >= g.n() {
        return Err(Error::Structure(format!("vertex {v} not in graph")));
    }
    let order = cycle_sequence(g, &g.ranks(), &cyc, v);
    Ok(ConstructionReport::new(g, order, Family::Cycle)?.anchor("v", Anchor::Vertex(v)))
}

/// One-page layout of a legged cycle.
///
/// The heaviest cycle edge `e*` is removed along with every leg heavier than
/// it; the remaining caterpillar is laid out with an end of `e*` rightmost,
/// and the removed legs follow in increasing weight.
pub fn layout_legged_cycle(l: &LeggedCycle) -> Result<ConstructionReport> {
    let g = l.graph();
    let rk = g.ranks();
    let cyc = l.cycle();
    let len = cyc.len();
    let cyc_edges = (0..len).map(|i| g.edge_id(cyc[i], cyc[(i + 1) % len]).unwrap());
    let star = heaviest(&rk, cyc_edges).unwrap();
    let (p1, r) = (g.edge(star).u, g.edge(star).v);
    // Walk from p1 away from r.
    let s = cyc.iter().position(|&x| x == p1).unwrap();
    let dir = if cyc[(s + 1) % len] == r { len - 1 } else { 1 };
    let path: Vec<Vertex> = (0..len).map(|k| cyc[(s + k * dir) % len]).collect();
    let mut on_cycle = vec![false; g.n()];
    for &c in cyc {
        on_cycle[c] = true;
    }
    let mut removed: Vec<(u32, Vertex)> = Vec::new();
    let mut allowed = vec![true; g.n()];
    for (x, &oc) in on_cycle.iter().enumerate() {
        if !oc {
            let e = g.neighbors(x)[0].1;
            if rk[e] > rk[star] {
                removed.push((rk[e], x));
                allowed[x] = false;
            }
        }
    }
    removed.sort_unstable();
    let mut order = caterpillar_sequence(g, &rk, &path, &allowed, &mut |_, _| {});
    order.extend(removed.iter().map(|&(_, x)| x));
    Ok(ConstructionReport::new(g, order, Family::LeggedCycle)?
        .anchor("e*", edge_anchor(g, star))
        .anchor("r", Anchor::Vertex(r))
        .anchor("S", Anchor::Vertices(removed.into_iter().map(|(_, x)| x).collect())))
}

/// One-page layout of a cycle and a caterpillar glued at `r`: the caterpillar
/// with `r` rightmost, then the cycle with `r` leftmost.
pub fn layout_cycle_plus_caterpillar(c: &CyclePlusCaterpillar) -> Result<ConstructionReport> {
    let g = c.graph();
    let rk = g.ranks();
    let r = c.root();
    let mut on_cycle = vec![false; g.n()];
    for &x in c.cycle() {
        on_cycle[x] = true;
    }
    let mut allowed = vec![false; g.n()];
    for x in off_cycle_component(g, &on_cycle, r) {
        allowed[x] = true;
    }
    let spine: Vec<Vertex> = c.spine().iter().rev().copied().collect();
    let mut order = caterpillar_sequence(g, &rk, &spine, &allowed, &mut |_, _| {});
    order.extend(cycle_sequence(g, &rk, c.cycle(), r).into_iter().skip(1));
    Ok(ConstructionReport::new(g, order, Family::CyclePlusCaterpillar)?.anchor("r", Anchor::Vertex(r)))
}

/// One-page layout of a 4-cycle with caterpillars at two opposite corners.
///
/// The corners are renamed so that `ad` is a heaviest cycle edge. With `e_c`
/// the spine edge at `c`, the cycle goes `d c b a` if `w(e_c) <= w(ad)` and
/// `a b c d` otherwise; the leaves at `c` are inserted last.
pub fn layout_quadrangle(q: &Quadrangle) -> Result<ConstructionReport> {
    let g = q.graph();
    let rk = g.ranks();
    let cyc = q.cycle();
    let mut on_cycle = vec![false; g.n()];
    for &x in &cyc {
        on_cycle[x] = true;
    }
    let cyc_edges: Vec<_> = (0..4).map(|i| g.edge_id(cyc[i], cyc[(i + 1) % 4]).unwrap()).collect();
    let ad = heaviest(&rk, cyc_edges.iter().copied()).unwrap();
    let touches_a = g.edge(ad).touches(cyc[0]);
    let (a, c, spine_a, spine_c) = if touches_a {
        (cyc[0], cyc[2], q.spine_a(), q.spine_c())
    } else {
        (cyc[2], cyc[0], q.spine_c(), q.spine_a())
    };
    let d = g.edge(ad).other(a);
    let b = cyc.iter().copied().find(|&x| x != a && x != c && x != d).unwrap();
    let comp_a = off_cycle_component(g, &on_cycle, a);
    let comp_c = off_cycle_component(g, &on_cycle, c);
    let e_c = spine_c.get(1).map(|&s| g.edge_id(c, s).unwrap());
    let mut leaves_c: Vec<(u32, Vertex)> = g
        .neighbors(c)
        .iter()
        .filter(|&&(y, _)| !on_cycle[y] && Some(y) != spine_c.get(1).copied())
        .map(|&(y, e)| (rk[e], y))
        .collect();
    leaves_c.sort_unstable();
    let mut mask_a = vec![false; g.n()];
    for &x in &comp_a {
        mask_a[x] = true;
    }
    let mut mask_c = vec![false; g.n()];
    for &x in &comp_c {
        mask_c[x] = true;
    }
    for &(_, y) in &leaves_c {
        mask_c[y] = false;
    }
    let case1 = e_c.is_none_or(|e| rk[e] <= rk[ad]);
    let (mut order, right_root, right_mask) = if case1 {
        let mut order = caterpillar_sequence(g, &rk, &rev(spine_c), &mask_c, &mut |_, _| {});
        order.pop();
        order.extend([d, c, b, a]);
        order.extend(tree_sequence(g, &rk, a, &mask_a).into_iter().skip(1));
        (order, a, mask_a)
    } else {
        let mut order = caterpillar_sequence(g, &rk, &rev(spine_a), &mask_a, &mut |_, _| {});
        order.extend([b, c, d]);
        order.extend(tree_sequence(g, &rk, c, &mask_c).into_iter().skip(1));
        (order, c, mask_c)
    };
    let par = g.bfs_parents(right_root, &right_mask);
    for &(wl, l) in &leaves_c {
        let at = if wl <= rk[ad] {
            order.iter().position(|&x| x == c).unwrap()
        } else {
            order
                .iter()
                .position(|&x| right_mask[x] && par[x].is_some_and(|(_, e)| rk[e] > wl))
                .unwrap_or(order.len())
        };
        order.insert(at, l);
    }
    let report = ConstructionReport::new(g, order, Family::Quadrangle)?
        .anchor("a", Anchor::Vertex(a))
        .anchor("b", Anchor::Vertex(b))
        .anchor("c", Anchor::Vertex(c))
        .anchor("d", Anchor::Vertex(d))
        .anchor("case", Anchor::Label(if case1 { "1" } else { "2" }.into()));
    Ok(match e_c {
        Some(e) => report.anchor("e_c", edge_anchor(g, e)),
        None => report,
    })
}

fn rev(s: &[Vertex]) -> Vec<Vertex> {
    s.iter().rev().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::simulate_sweep;

    #[test]
    fn triangle_greedy() {
        // v=0, a=1, b=2 with w(va)=1, w(vb)=2, w(ab)=5
        let g = WeightedGraph::from_int_edges(3, &[(0, 1, 1), (0, 2, 2), (1, 2, 5)]).unwrap();
        let rep = layout_cycle(&g, 0).unwrap();
        assert_eq!(rep.layout.ordering().order(), &[0, 1, 2]);
        assert!(simulate_sweep(&rep.layout).is_valid());
    }

    #[test]
    fn heavy_leg_goes_right_of_r() {
        // C4 0-1-2-3 with e* = 2-3 (weight 5) and a leg 4 at 0 of weight 9
        let g = WeightedGraph::from_int_edges(5, &[(0, 1, 1), (1, 2, 2), (2, 3, 5), (3, 0, 3), (0, 4, 9)]).unwrap();
        let l = LeggedCycle::new(g, vec![0, 1, 2, 3]).unwrap();
        let rep = layout_legged_cycle(&l).unwrap();
        let order = rep.layout.ordering().order();
        assert_eq!(order.last(), Some(&4));
        assert_eq!(order[order.len() - 2], 3);
        assert!(simulate_sweep(&rep.layout).is_valid());
    }

    #[test]
    fn quadrangle_second_case() {
        // a=0 b=1 c=2 d=3, ad heaviest cycle edge (4), c's spine edge 2-4 weighs 7
        let g = WeightedGraph::from_int_edges(
            6,
            &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 0, 4), (2, 4, 7), (4, 5, 1)],
        )
        .unwrap();
        let q = Quadrangle::new(g, [0, 1, 2, 3], vec![0], vec![2, 4]).unwrap();
        let rep = layout_quadrangle(&q).unwrap();
        let ord = rep.layout.ordering();
        assert!(ord.precedes(0, 1) && ord.precedes(1, 2) && ord.precedes(2, 3));
        assert!(simulate_sweep(&rep.layout).is_valid());
    }
}

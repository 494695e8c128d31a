use super::{edge_anchor, Anchor, ConstructionReport, Family};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Vertex, WeightedGraph};

/// The two degree-3 vertices and the three degree-2 vertices of a `K_{2,3}`.
pub fn k23_parts(g: &WeightedGraph) -> Result<([Vertex; 2], [Vertex; 3])> {
    let not = || Error::Structure("graph is not K2,3".into());
    if g.n() != 5 || g.m() != 6 {
        return Err(not());
    }
    let us: Vec<Vertex> = (0..5).filter(|&v| g.degree(v) == 3).collect();
    let vs: Vec<Vertex> = (0..5).filter(|&v| g.degree(v) == 2).collect();
    if us.len() != 2 || vs.len() != 3 || g.has_edge(us[0], us[1]) {
        return Err(not());
    }
    if !vs.iter().all(|&v| g.has_edge(v, us[0]) && g.has_edge(v, us[1])) {
        return Err(not());
    }
    Ok(([us[0], us[1]], [vs[0], vs[1], vs[2]]))
}

/// One-page layout of `K_{2,3}`, chosen by how the two heaviest edges meet.
pub fn layout_k23(g: &WeightedGraph) -> Result<ConstructionReport> {
    let (us, vs) = k23_parts(g)?;
    let rk = g.ranks();
    let mut by_weight: Vec<EdgeId> = (0..6).collect();
    by_weight.sort_by_key(|&e| (std::cmp::Reverse(rk[e]), e));
    let (e1, e2, e3) = (by_weight[0], by_weight[1], by_weight[2]);
    let is_u = |x: Vertex| us.contains(&x);
    // (u, v) endpoints of an edge.
    let uv = |e: EdgeId| {
        let ed = g.edge(e);
        if is_u(ed.u) {
            (ed.u, ed.v)
        } else {
            (ed.v, ed.u)
        }
    };
    let other_u = |u: Vertex| if us[0] == u { us[1] } else { us[0] };
    let third_v = |a: Vertex, b: Vertex| vs.iter().copied().find(|&x| x != a && x != b).unwrap();
    let ((u1, v1), (x2, y2)) = (uv(e1), uv(e2));
    let (case, order, names) = if u1 != x2 && v1 != y2 {
        let (u2, v3) = (x2, y2);
        let v2 = third_v(v1, v3);
        ("1", vec![v3, u1, v2, u2, v1], [u1, u2, v1, v2, v3])
    } else if v1 == y2 {
        let v3 = v1;
        let (u1, u2) = (u1, x2);
        let (x3, v1) = uv(e3);
        let v2 = third_v(v1, v3);
        if x3 == u1 {
            ("2.1", vec![v1, u2, v2, u1, v3], [u1, u2, v1, v2, v3])
        } else {
            ("2.2", vec![v1, u1, v2, u2, v3], [u1, u2, v1, v2, v3])
        }
    } else {
        let (v3, v1) = (v1, y2);
        let u2 = other_u(u1);
        let v2 = third_v(v1, v3);
        ("3", vec![v3, v1, u2, v2, u1], [u1, u2, v1, v2, v3])
    };
    let mut report = ConstructionReport::new(g, order, Family::K23)?
        .anchor("case", Anchor::Label(case.into()))
        .anchor("e1", edge_anchor(g, e1))
        .anchor("e2", edge_anchor(g, e2));
    for (name, v) in ["u1", "u2", "v1", "v2", "v3"].iter().zip(names) {
        report = report.anchor(name, Anchor::Vertex(v));
    }
    Ok(report)
}

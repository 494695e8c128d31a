//! JSON interchange for graphs and layouts.
//!
//! Graph: `{"n": int, "labels"?: [string], "edges": [[u, v, w], ...]}` where `w`
//! is an integer or a `"p/q"` string. Layout: `{"order": [...], "k": int,
//! "pages": {"u-v": page}}`; a layout document may also embed its graph under
//! `"graph"`.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::layout::Layout;
use crate::ordering::VertexOrdering;
use crate::weight::Weight;

fn weight_from_json(v: &Value, at: &str) -> Result<Weight> {
    match v {
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(Weight::int(i))
            } else if let Some(u) = num.as_u64() {
                Weight::parse(&u.to_string()).map_err(|_| Error::parse(at, "bad integer"))
            } else {
                Err(Error::parse(at, format!("non-rational weight {num}; use an integer or a \"p/q\" string")))
            }
        }
        Value::String(s) => Weight::parse(s).map_err(|_| Error::parse(at, format!("non-rational weight {s:?}"))),
        other => Err(Error::parse(at, format!("weight must be an integer or string, got {other}"))),
    }
}

pub fn weight_to_json(w: &Weight) -> Value {
    match w.to_i64() {
        Some(i) => json!(i),
        None => json!(w.to_string()),
    }
}

fn as_index(v: &Value, at: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::parse(at, format!("expected a non-negative integer, got {v}")))
}

pub fn graph_from_value(doc: &Value) -> Result<WeightedGraph> {
    let obj = doc.as_object().ok_or_else(|| Error::parse("$", "graph must be a JSON object"))?;
    let n = as_index(obj.get("n").ok_or_else(|| Error::parse("n", "missing"))?, "n")?;
    let edges_v = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("edges", "missing or not an array"))?;
    let mut edges = Vec::with_capacity(edges_v.len());
    for (i, e) in edges_v.iter().enumerate() {
        let at = format!("edges[{i}]");
        let arr = e
            .as_array()
            .filter(|a| a.len() == 3)
            .ok_or_else(|| Error::parse(&at, "edge must be [u, v, w]"))?;
        let u = as_index(&arr[0], &format!("{at}[0]"))?;
        let v = as_index(&arr[1], &format!("{at}[1]"))?;
        let w = weight_from_json(&arr[2], &format!("{at}[2]"))?;
        if u == v {
            return Err(Error::parse(&at, format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::parse(&at, format!("endpoint outside 0..{n}")));
        }
        edges.push((u, v, w));
    }
    let g = WeightedGraph::new(n, edges).map_err(|e| match e {
        Error::Graph(msg) => Error::parse("edges", msg),
        other => other,
    })?;
    match obj.get("labels") {
        None | Some(Value::Null) => Ok(g),
        Some(Value::Array(ls)) => {
            let labels = ls
                .iter()
                .enumerate()
                .map(|(i, l)| {
                    l.as_str()
                        .map(str::to_owned)
                        .ok_or_else(|| Error::parse(format!("labels[{i}]"), "label must be a string"))
                })
                .collect::<Result<Vec<_>>>()?;
            g.with_labels(labels).map_err(|e| Error::parse("labels", e.to_string()))
        }
        Some(_) => Err(Error::parse("labels", "must be an array of strings")),
    }
}

pub fn parse_graph(text: &str) -> Result<WeightedGraph> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::parse("$", format!("malformed JSON: {e}")))?;
    graph_from_value(&doc)
}

pub fn graph_to_value(g: &WeightedGraph) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(g.n()));
    if let Some(l) = g.labels() {
        obj.insert("labels".into(), json!(l));
    }
    let edges: Vec<Value> = g.edges().iter().map(|e| json!([e.u, e.v, weight_to_json(&e.w)])).collect();
    obj.insert("edges".into(), Value::Array(edges));
    Value::Object(obj)
}

pub fn serialize_graph(g: &WeightedGraph) -> String {
    graph_to_value(g).to_string()
}

/// Page key of an edge: `"u-v"` with `u < v`.
pub fn page_key(u: usize, v: usize) -> String {
    format!("{}-{}", u.min(v), u.max(v))
}

pub fn layout_to_value(layout: &Layout) -> Value {
    let mut pages = Map::new();
    for (id, e) in layout.graph().edges().iter().enumerate() {
        pages.insert(page_key(e.u, e.v), json!(layout.page(id)));
    }
    json!({
        "order": layout.ordering().order(),
        "pages": Value::Object(pages),
        "k": layout.k(),
    })
}

/// Layout document without the graph.
pub fn serialize_layout(layout: &Layout) -> String {
    layout_to_value(layout).to_string()
}

/// Layout document that also carries its graph under `"graph"`.
pub fn serialize_layout_with_graph(layout: &Layout) -> String {
    let mut v = layout_to_value(layout);
    v.as_object_mut()
        .unwrap()
        .insert("graph".into(), graph_to_value(layout.graph()));
    v.to_string()
}

pub fn ordering_from_value(v: &Value, at: &str) -> Result<VertexOrdering> {
    let arr = v.as_array().ok_or_else(|| Error::parse(at, "order must be an array"))?;
    let order = arr
        .iter()
        .enumerate()
        .map(|(i, x)| as_index(x, &format!("{at}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    VertexOrdering::new(order).map_err(|e| Error::parse(at, e.to_string()))
}

/// Parses an ordering given either as a JSON array or as a layout document.
pub fn parse_ordering(text: &str) -> Result<VertexOrdering> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::parse("$", format!("malformed JSON: {e}")))?;
    match &doc {
        Value::Array(_) => ordering_from_value(&doc, "$"),
        Value::Object(o) => ordering_from_value(o.get("order").ok_or_else(|| Error::parse("order", "missing"))?, "order"),
        _ => Err(Error::parse("$", "ordering must be an array or an object with \"order\"")),
    }
}

/// Parses a layout document against `graph`, or against the embedded
/// `"graph"` when `graph` is `None`. A solver result is read through its
/// `"witness"`.
pub fn parse_layout(text: &str, graph: Option<&WeightedGraph>) -> Result<Layout> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::parse("$", format!("malformed JSON: {e}")))?;
    let mut obj = doc.as_object().ok_or_else(|| Error::parse("$", "layout must be a JSON object"))?;
    if !obj.contains_key("order") {
        if let Some(w) = obj.get("witness").and_then(Value::as_object) {
            obj = w;
        }
    }
    let g = match (graph, obj.get("graph")) {
        (Some(g), _) => g.clone(),
        (None, Some(gv)) => graph_from_value(gv)?,
        (None, None) => return Err(Error::parse("graph", "layout has no embedded graph and none was given")),
    };
    let ordering = ordering_from_value(obj.get("order").ok_or_else(|| Error::parse("order", "missing"))?, "order")?;
    if ordering.len() != g.n() {
        return Err(Error::parse("order", format!("{} vertices listed, graph has {}", ordering.len(), g.n())));
    }
    let k = as_index(obj.get("k").ok_or_else(|| Error::parse("k", "missing"))?, "k")?;
    let pages_v = obj
        .get("pages")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::parse("pages", "missing or not an object"))?;
    let mut pages = vec![usize::MAX; g.m()];
    for (key, p) in pages_v {
        let at = format!("pages[{key:?}]");
        let (a, b) = key
            .split_once('-')
            .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
            .ok_or_else(|| Error::parse(&at, "key must be \"u-v\""))?;
        let e = g
            .edge_id(a, b)
            .filter(|_| a < g.n() && b < g.n())
            .ok_or_else(|| Error::parse(&at, "not an edge of the graph"))?;
        if pages[e] != usize::MAX {
            return Err(Error::parse(&at, "edge listed twice"));
        }
        pages[e] = as_index(p, &at)?;
    }
    if let Some(e) = pages.iter().position(|&p| p == usize::MAX) {
        let ed = g.edge(e);
        return Err(Error::parse("pages", format!("edge {} has no page", page_key(ed.u, ed.v))));
    }
    Layout::new(g, ordering, pages, k).map_err(|e| Error::parse("pages", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rational_weights() {
        let g = parse_graph(r#"{"n":2,"edges":[[0,1,"3/2"]]}"#).unwrap();
        assert_eq!(g.weight(0), &Weight::new(3, 2).unwrap());
        let t = parse_graph(r#"{"n":3,"edges":[[0,1,1],[1,2,2],[0,2,3]]}"#).unwrap();
        assert_eq!(t.m(), 3);
    }

    #[test]
    fn parse_errors_name_the_element() {
        let e = parse_graph(r#"{"n":2,"edges":[[0,0,1]]}"#).unwrap_err();
        assert!(e.to_string().contains("edges[0]") && e.to_string().contains("self-loop"), "{e}");
        let e = parse_graph(r#"{"n":2,"edges":[[0,1,1.5]]}"#).unwrap_err();
        assert!(e.to_string().contains("edges[0][2]"), "{e}");
        let e = parse_graph(r#"{"n":2,"edges":[[0,1,1],[1,0,2]]}"#).unwrap_err();
        assert!(e.to_string().contains("duplicates"), "{e}");
        assert!(parse_graph("{").is_err());
    }

    #[test]
    fn empty_layout_document() {
        let g = WeightedGraph::new(1, []).unwrap();
        let l = Layout::new(g, VertexOrdering::identity(1), vec![], 0).unwrap();
        assert_eq!(serialize_layout(&l), r#"{"order":[0],"pages":{},"k":0}"#);
        let back = parse_layout(&serialize_layout(&l), Some(l.graph())).unwrap();
        assert_eq!(back, l);
    }

    #[test]
    fn layout_round_trip_with_embedded_graph() {
        let g = parse_graph(r#"{"n":3,"labels":["a","b","c"],"edges":[[0,1,"1/3"],[1,2,2]]}"#).unwrap();
        let l = Layout::new(g, VertexOrdering::new(vec![2, 0, 1]).unwrap(), vec![1, 0], 2).unwrap();
        let text = serialize_layout_with_graph(&l);
        assert_eq!(parse_layout(&text, None).unwrap(), l);
    }
}

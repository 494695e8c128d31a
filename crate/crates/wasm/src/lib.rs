//! wasm-bindgen entry points for the static demo page in `web/`.
//!
//! Every export takes JSON text and returns JSON or SVG text. The plain
//! functions in [`api`] do the work so they can be tested natively.

use wasm_bindgen::prelude::*;

pub mod api {
    use pql_core::io::{graph_to_value, layout_to_value, parse_graph, parse_layout};
    use pql_core::recognize::recognize_pqn1;
    use pql_core::render::{render_arc_diagram, RenderSpec};
    use pql_core::solve::{solve_fixed_order, solve_free_order};
    use pql_core::validate::validation_report;
    use pql_core::{Layout, VertexOrdering, WeightedGraph};
    use serde_json::Value;

    fn graph(text: &str) -> Result<WeightedGraph, String> {
        parse_graph(text).map_err(|e| e.to_string())
    }

    /// Graph text may be empty when the layout embeds its graph.
    fn layout(layout_text: &str, graph_text: &str) -> Result<Layout, String> {
        let g = if graph_text.trim().is_empty() { None } else { Some(graph(graph_text)?) };
        parse_layout(layout_text, g.as_ref()).map_err(|e| e.to_string())
    }

    fn with_graph(mut v: Value, g: &WeightedGraph) -> String {
        v["graph"] = graph_to_value(g);
        v.to_string()
    }

    pub fn validate(layout_text: &str, graph_text: &str) -> Result<String, String> {
        Ok(validation_report(&layout(layout_text, graph_text)?).to_string())
    }

    /// Verdict JSON; a yes verdict carries a one-page `"layout"` with its graph.
    pub fn recognize(graph_text: &str) -> Result<String, String> {
        let g = graph(graph_text)?;
        let verdict = recognize_pqn1(&g);
        let mut v = verdict.to_json(&g);
        if verdict.is_yes() {
            let l = verdict.layout(&g).map_err(|e| e.to_string())?;
            v["layout"] = serde_json::from_str(&with_graph(layout_to_value(&l), &g)).expect("valid JSON");
        }
        Ok(v.to_string())
    }

    /// Minimum pages for the identity ordering, or over all orderings when `free`.
    pub fn solve(graph_text: &str, free: bool) -> Result<String, String> {
        let g = graph(graph_text)?;
        let r = if free { solve_free_order(&g) } else { solve_fixed_order(&g, &VertexOrdering::identity(g.n())) };
        let mut v = r.to_json();
        v["witness"]["graph"] = graph_to_value(&g);
        Ok(v.to_string())
    }

    pub fn render(layout_text: &str, graph_text: &str, weights: bool) -> Result<String, String> {
        let l = layout(layout_text, graph_text)?;
        Ok(render_arc_diagram(&l, &RenderSpec { show_weights: weights, ..RenderSpec::default() }))
    }
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn validate(layout: &str, graph: &str) -> Result<String, JsError> {
    js(api::validate(layout, graph))
}

#[wasm_bindgen]
pub fn recognize(graph: &str) -> Result<String, JsError> {
    js(api::recognize(graph))
}

#[wasm_bindgen]
pub fn solve(graph: &str, free: bool) -> Result<String, JsError> {
    js(api::solve(graph, free))
}

#[wasm_bindgen]
pub fn render_svg(layout: &str, graph: &str, weights: bool) -> Result<String, JsError> {
    js(api::render(layout, graph, weights))
}

#[cfg(test)]
mod tests {
    use super::api;

    const K4E: &str = r#"{"n":4,"edges":[[0,1,1],[1,2,2],[2,3,3],[3,0,4],[0,2,5]]}"#;

    #[test]
    fn recognized_layout_validates_and_renders() {
        let v: serde_json::Value = serde_json::from_str(&api::recognize(K4E).unwrap()).unwrap();
        assert_eq!(v["answer"], "yes");
        let l = v["layout"].to_string();
        assert_eq!(api::validate(&l, "").unwrap(), r#"{"valid":true}"#);
        let svg = api::render(&l, "", true).unwrap();
        assert_eq!(svg.matches("<path").count(), 5);
    }

    #[test]
    fn invalid_layout_is_reported() {
        let g = r#"{"n":4,"edges":[[0,2,2],[1,3,1]]}"#;
        let l = r#"{"order":[0,1,2,3],"k":1,"pages":{"0-2":0,"1-3":0}}"#;
        let v: serde_json::Value = serde_json::from_str(&api::validate(l, g).unwrap()).unwrap();
        assert_eq!(v["valid"], false);
        assert!(api::validate("{", g).is_err());
    }

    #[test]
    fn solver_witness_round_trips() {
        let k4 = r#"{"n":4,"edges":[[0,1,6],[0,2,5],[0,3,4],[1,2,3],[1,3,2],[2,3,1]]}"#;
        let v: serde_json::Value = serde_json::from_str(&api::solve(k4, true).unwrap()).unwrap();
        assert!(v["k"].as_u64().unwrap() >= 1);
        assert_eq!(api::validate(&v["witness"].to_string(), "").unwrap(), r#"{"valid":true}"#);
    }
}

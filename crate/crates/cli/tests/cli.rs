use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use pql_core::io::{parse_graph, parse_layout, parse_ordering};
use pql_core::render::{render_arc_diagram, RenderSpec};
use pql_core::solve::solve_fixed_order;
use pql_core::validate::simulate_sweep;
use serde_json::{json, Value};
use tempfile::TempDir;

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn pql(args: &[&str]) -> Output {
    pql_env(args, &[])
}

fn pql_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_pql"));
    cmd.args(args).env_remove("PQL_THREADS");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("pql runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&o.stdout))
    })
}

fn put(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn g(name: &str) -> String {
    golden(name).to_str().unwrap().to_string()
}

const K4E: &str = r#"{"n":4,"edges":[[0,1,1],[1,2,2],[2,3,3],[3,0,4],[0,2,5]]}"#;

#[test]
fn validate_valid_layout() {
    let d = TempDir::new().unwrap();
    let gr = put(&d, "g.json", r#"{"n":3,"edges":[[0,1,2],[1,2,1],[0,2,3]]}"#);
    let l = put(&d, "l.json", r#"{"order":[0,1,2],"k":1,"pages":{"0-1":0,"1-2":0,"0-2":0}}"#);
    let o = pql(&["validate", "--layout", &l, "--graph", &gr]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o), json!({"valid": true}));
}

#[test]
fn validate_empty_layout() {
    let d = TempDir::new().unwrap();
    let gr = put(&d, "g.json", r#"{"n":1,"edges":[]}"#);
    let l = put(&d, "l.json", r#"{"order":[0],"pages":{},"k":0}"#);
    let o = pql(&["validate", "--graph", &gr, "--layout", &l]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout_json(&o), json!({"valid": true}));
}

#[test]
fn validate_invalid_layout_is_a_domain_error() {
    let d = TempDir::new().unwrap();
    let gr = put(&d, "g.json", r#"{"n":4,"edges":[[0,2,2],[1,3,1]]}"#);
    let l = put(&d, "l.json", r#"{"order":[0,1,2,3],"k":1,"pages":{"0-2":0,"1-3":0}}"#);
    let o = pql(&["validate", "--graph", &gr, "--layout", &l]);
    assert_eq!(code(&o), 1);
    let v = stdout_json(&o);
    assert_eq!(v["valid"], false);
    assert_eq!(v["violation"]["edge"], "0-2");
    assert_eq!(v["violation"]["blocking"], "1-3");
    assert_eq!(v["forbidden_pairs"].as_array().unwrap().len(), 1);
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let d = TempDir::new().unwrap();
    let bad = put(&d, "bad.json", "{\"n\":2,\"edges\":[[0,5,1]]}");
    let broken = put(&d, "broken.json", "{");
    assert_eq!(code(&pql(&["bogus"])), 2);
    assert_eq!(code(&pql(&["validate"])), 2);
    assert_eq!(code(&pql(&["recognize", "--graph", &bad])), 2);
    assert_eq!(code(&pql(&["recognize", "--graph", &broken])), 2);
    assert_eq!(code(&pql(&["solve", "--mode", "sideways", "--graph", &g("k33.json")])), 2);
    assert_eq!(code(&pql(&["construct", "--family", "blob", "--graph", &g("k33.json")])), 2);
    assert_eq!(code(&pql_env(&["solve", "--mode", "free", "--graph", &g("k33.json")], &[("PQL_THREADS", "0")])), 2);
}

#[test]
fn solve_fixed_matches_golden_and_library() {
    let o = pql(&["solve", "--mode", "fixed", "--graph", &g("k33.json"), "--order", &g("k33_order.json")]);
    assert_eq!(code(&o), 0);
    let expected = std::fs::read(golden("k33_solve.json")).unwrap();
    assert_eq!(o.stdout, expected);

    let graph = parse_graph(&std::fs::read_to_string(golden("k33.json")).unwrap()).unwrap();
    let ord = parse_ordering(&std::fs::read_to_string(golden("k33_order.json")).unwrap()).unwrap();
    let direct = solve_fixed_order(&graph, &ord);
    assert_eq!(stdout_json(&o), direct.to_json());
    assert_eq!(direct.k, 3);
}

#[test]
fn render_is_byte_identical_and_matches_golden() {
    let d = TempDir::new().unwrap();
    let out = d.path().join("d.svg");
    let args = ["render", "--graph", &g("k33.json"), "--layout", &g("k33_solve.json"), "--weights"];
    let mut with_out = args.to_vec();
    let out_s = out.to_str().unwrap();
    with_out.extend(["--out", out_s]);
    assert_eq!(code(&pql(&with_out)), 0);
    let first = std::fs::read(&out).unwrap();
    let second = pql(&args).stdout;
    assert_eq!(first, second);
    assert_eq!(first, std::fs::read(golden("k33.svg")).unwrap());

    let svg = String::from_utf8(first).unwrap();
    assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\"") && svg.ends_with("</svg>\n"));
    assert_eq!(svg.matches("<path").count(), 9);
    for c in &pql_core::render::DEFAULT_PALETTE[..3] {
        assert!(svg.contains(&format!("stroke=\"{c}\"")));
    }
    assert!(!svg.contains(&format!("stroke=\"{}\"", pql_core::render::DEFAULT_PALETTE[3])));

    let graph = parse_graph(&std::fs::read_to_string(golden("k33.json")).unwrap()).unwrap();
    let l = parse_layout(&std::fs::read_to_string(golden("k33_solve.json")).unwrap(), Some(&graph)).unwrap();
    let spec = RenderSpec { show_weights: true, ..RenderSpec::default() };
    assert_eq!(svg, render_arc_diagram(&l, &spec));
}

#[test]
fn render_dot() {
    let o = pql(&["render", "--format", "dot", "--graph", &g("k33.json"), "--layout", &g("k33_solve.json")]);
    assert_eq!(code(&o), 0);
    let dot = String::from_utf8(o.stdout).unwrap();
    assert!(dot.starts_with("graph layout {"));
    assert_eq!(dot.matches(" -- ").count(), 9);
}

#[test]
fn construct_then_validate_and_render() {
    let d = TempDir::new().unwrap();
    let gr = put(&d, "g.json", K4E);
    let out = d.path().join("c.json");
    let o = pql(&["construct", "--family", "K4-e", "--graph", &gr, "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["k"], 1);
    assert_eq!(v["family"], "K4-e");
    assert!(v["anchors"].is_object());
    let o = pql(&["validate", "--layout", out.to_str().unwrap()]);
    assert_eq!((code(&o), stdout_json(&o)), (0, json!({"valid": true})));
    assert_eq!(code(&pql(&["render", "--layout", out.to_str().unwrap()])), 0);
}

#[test]
fn construct_rejects_wrong_family() {
    let d = TempDir::new().unwrap();
    let gr = put(&d, "g.json", K4E);
    let o = pql(&["construct", "--family", "tree", "--graph", &gr]);
    assert_eq!(code(&o), 1);
}

#[test]
fn construct_tree_family() {
    let d = TempDir::new().unwrap();
    let gr = put(&d, "g.json", r#"{"n":5,"edges":[[0,1,"1/2"],[0,2,3],[2,3,1],[2,4,-2]]}"#);
    let o = pql(&["construct", "--family", "tree", "--graph", &gr]);
    assert_eq!(code(&o), 0);
    let l = parse_layout(&String::from_utf8(o.stdout).unwrap(), None).unwrap();
    assert!(simulate_sweep(&l).is_valid());
}

#[test]
fn recognize_yes_and_no() {
    let d = TempDir::new().unwrap();
    let yes = put(&d, "yes.json", K4E);
    let no = put(&d, "no.json", r#"{"n":4,"edges":[[0,1,1],[0,2,1],[0,3,1],[1,2,1],[1,3,1],[2,3,1]]}"#);
    let o = pql(&["recognize", "--graph", &yes]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["answer"], "yes");
    assert_eq!(v["layout"]["k"], 1);
    let o = pql(&["recognize", "--graph", &no]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!((v["answer"].clone(), v["minor"].clone()), (json!("no"), json!("F1")));
}

#[test]
fn solve_free_is_deterministic_across_thread_counts() {
    let d = TempDir::new().unwrap();
    let gr = put(&d, "g.json", r#"{"n":6,"edges":[[0,1,5],[1,2,1],[2,3,4],[3,4,2],[4,5,6],[5,0,3],[0,3,7],[1,4,8]]}"#);
    let one = pql_env(&["solve", "--mode", "free", "--graph", &gr], &[("PQL_THREADS", "1")]);
    let four = pql_env(&["solve", "--mode", "free", "--graph", &gr], &[("PQL_THREADS", "4")]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(stdout_json(&one)["optimal"], true);
}

#[test]
fn budget_exceeded_is_a_domain_error() {
    let d = TempDir::new().unwrap();
    let out = d.path().join("knn.json");
    assert_eq!(code(&pql(&["gen", "knn", "--n", "5", "--out", out.to_str().unwrap()])), 0);
    let o = pql(&["solve", "--mode", "free", "--graph", out.to_str().unwrap(), "--budget", "50"]);
    assert_eq!(code(&o), 1);
    let v = stdout_json(&o);
    assert_eq!(v["optimal"], false);
    assert!(v["lower_bound"].as_u64().unwrap() <= v["k"].as_u64().unwrap());

    let k5 = put(&d, "k5.json", r#"{"n":5,"edges":[[0,1,1],[0,2,2],[0,3,3],[0,4,4],[1,2,5],[1,3,6],[1,4,7],[2,3,8],[2,4,9],[3,4,10]]}"#);
    let path = put(&d, "p.json", r#"{"n":4,"edges":[[0,1,1],[1,2,2],[2,3,3]]}"#);
    assert_eq!(code(&pql(&["solve", "--mode", "universal", "--graph", &path, "--budget", "2"])), 1);
    let o = pql(&["solve", "--mode", "universal", "--graph", &k5, "--budget", "6"]);
    assert_eq!((code(&o), stdout_json(&o)["answer"].clone()), (0, json!("no")));
}

#[test]
fn solve_universal_and_separated() {
    let o = pql(&["solve", "--mode", "universal", "--graph", &g("k33.json")]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    assert_eq!(v["answer"], "no");
    let witness = v["graph"].to_string();
    let d = TempDir::new().unwrap();
    let w = put(&d, "w.json", &witness);
    let free = stdout_json(&pql(&["solve", "--mode", "free", "--graph", &w]));
    assert_eq!(free["k"], 2);

    let o = pql(&["solve", "--mode", "separated", "--graph", &g("k33.json"), "--part-a", "0,1,2", "--first", "b"]);
    assert_eq!(code(&o), 0);
    let v = stdout_json(&o);
    let order: Vec<u64> = v["witness"]["order"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert!(order[..3].iter().all(|&x| x >= 3));
    let o = pql(&["solve", "--mode", "separated", "--graph", &g("k33.json"), "--part-a", "0,3"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn gen_writes_graph_and_recipe() {
    let d = TempDir::new().unwrap();
    let cases: [&[&str]; 8] = [
        &["knn", "--n", "3"],
        &["grid", "--n", "4", "--seed", "7"],
        &["interval", "--n", "6", "--seed", "3"],
        &["interval", "--spec", "0:4,1:2,3:6"],
        &["hk", "--k", "2"],
        &["minor", "--index", "5"],
        &["npc", "--n", "4", "--k", "3", "--seed", "1"],
        &["npc", "--spec", "8:1,0:3,2:5,4:7", "--k", "2"],
    ];
    for (i, args) in cases.iter().enumerate() {
        let out = d.path().join(format!("g{i}.json"));
        let mut full = vec!["gen"];
        full.extend_from_slice(args);
        full.extend(["--out", out.to_str().unwrap()]);
        let o = pql(&full);
        assert_eq!(code(&o), 0, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let text = std::fs::read_to_string(&out).unwrap();
        parse_graph(&text).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        let recipe: Value =
            serde_json::from_str(&std::fs::read_to_string(d.path().join(format!("g{i}.json.recipe.json"))).unwrap()).unwrap();
        assert_eq!(recipe["generator"], args[0]);
        // Same invocation, same bytes.
        let again = pql(&full[..full.len() - 2]);
        assert_eq!(again.stdout, text.as_bytes(), "{args:?}");
    }
    let hk: Value = serde_json::from_str(&std::fs::read_to_string(d.path().join("g4.json")).unwrap()).unwrap();
    assert_eq!((hk["n"].as_u64(), hk["edges"].as_array().unwrap().len()), (Some(58), 113));
}

#[test]
fn gen_npc_instance_solves_on_its_ordering() {
    let d = TempDir::new().unwrap();
    let out = d.path().join("npc.json");
    // Arcs 0-1, 1-2, 2-3, 3-0 intersect cyclically: a 4-cycle, 2-colorable.
    let o = pql(&["gen", "npc", "--spec", "8:1,0:3,2:5,4:7", "--k", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let order = serde_json::from_str::<Value>(&text).unwrap()["order"].to_string();
    let ord = put(&d, "o.json", &order);
    let v = stdout_json(&pql(&["solve", "--mode", "fixed", "--graph", out.to_str().unwrap(), "--order", &ord]));
    assert_eq!(v["k"], 2);
}

#[test]
fn gen_bad_parameters_exit_2() {
    assert_eq!(code(&pql(&["gen", "knn"])), 2);
    assert_eq!(code(&pql(&["gen", "minor", "--index", "9"])), 2);
    assert_eq!(code(&pql(&["gen", "npc", "--spec", "0:1,1:2", "--k", "1"])), 2);
}

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pql_core::construct::Family;
use pql_core::generate::{self, CircularArcInstance, InstanceRecipe};
use pql_core::io::{graph_to_value, layout_to_value, parse_graph, parse_layout, parse_ordering};
use pql_core::recognize::{annotate, recognize_pqn1};
use pql_core::render::{render_arc_diagram, render_dot, RenderSpec};
use pql_core::solve::{self, Side, SolveConfig};
use pql_core::validate::validation_report;
use pql_core::{Error, Layout, VertexOrdering, WeightedGraph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "pql", version, about = "Priority-queue linear layouts of edge-weighted graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args)]
struct Common {
    /// Graph document.
    #[arg(long, global = true, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Layout document (may embed its graph under "graph").
    #[arg(long, global = true, value_name = "FILE")]
    layout: Option<PathBuf>,
    /// Vertex ordering: a JSON array or a layout document.
    #[arg(long, global = true, value_name = "FILE")]
    order: Option<PathBuf>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,
    /// Search budget: nodes for fixed/free/separated, edges per exact check for universal.
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a layout with the priority-queue sweep.
    Validate,
    /// One-page layout of a graph from a named family.
    Construct {
        #[arg(long)]
        family: String,
    },
    /// Decide whether every weighting of the graph fits on one page.
    Recognize,
    /// Minimize the number of pages.
    Solve(SolveArgs),
    /// Generate an instance; writes graph JSON and a recipe sidecar.
    Gen(GenArgs),
    /// Draw a layout as an arc diagram.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Fixed,
    Free,
    Universal,
    Separated,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    /// Separated mode: comma-separated vertices of part A; the rest form B.
    #[arg(long, value_name = "LIST")]
    part_a: Option<String>,
    /// Separated mode: the part placed first.
    #[arg(long, value_enum, default_value = "a")]
    first: FirstPart,
    /// Free mode: largest n searched exactly.
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FirstPart {
    A,
    B,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Knn,
    Grid,
    Interval,
    Hk,
    Minor,
    Npc,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GenKind,
    /// Size: part size (knn, grid), interval count (interval), arc count (npc).
    #[arg(long)]
    n: Option<usize>,
    /// Depth for hk, page bound for npc.
    #[arg(long)]
    k: Option<usize>,
    /// hk: branching override.
    #[arg(long)]
    d: Option<usize>,
    /// minor: index 1..=8.
    #[arg(long)]
    index: Option<usize>,
    /// minor: all weights equal.
    #[arg(long)]
    uniform: bool,
    /// interval: "a:b,a:b,..". npc: arcs "start:end,..".
    #[arg(long)]
    spec: Option<String>,
    /// Recipe sidecar path; defaults to `<out>.recipe.json`, or stderr without --out.
    #[arg(long, value_name = "FILE")]
    recipe: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Dot,
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
    /// Label arcs with their weights.
    #[arg(long)]
    weights: bool,
    #[arg(long, default_value_t = 60)]
    spacing: u32,
}

/// Failure with its exit code: 1 for domain errors, 2 for usage and parse errors.
enum Fail {
    Domain(String),
    Usage(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Layout(_) | Error::Structure(_) | Error::Budget(_) => Fail::Domain(e.to_string()),
            _ => Fail::Usage(e.to_string()),
        }
    }
}

type Res<T> = Result<T, Fail>;

/// What a subcommand produced, and whether it is a domain failure.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn json(v: &Value) -> Self {
        Output { text: pretty(v), failed: false }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON serializes");
    s.push('\n');
    s
}

fn read(path: &Path) -> Res<String> {
    fs::read_to_string(path).map_err(|e| Fail::Usage(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Res<()> {
    fs::write(path, text).map_err(|e| Fail::Usage(format!("cannot write {}: {e}", path.display())))
}

impl Common {
    fn graph(&self) -> Res<WeightedGraph> {
        let p = self.graph.as_ref().ok_or_else(|| Fail::Usage("--graph is required".into()))?;
        Ok(parse_graph(&read(p)?)?)
    }

    fn layout(&self) -> Res<Layout> {
        let p = self.layout.as_ref().ok_or_else(|| Fail::Usage("--layout is required".into()))?;
        let g = self.graph.as_ref().map(|_| self.graph()).transpose()?;
        Ok(parse_layout(&read(p)?, g.as_ref())?)
    }

    fn config(&self) -> Res<SolveConfig> {
        let mut cfg = SolveConfig::default();
        if let Some(b) = self.budget {
            cfg.node_budget = b;
        }
        if let Ok(t) = std::env::var("PQL_THREADS") {
            let t: usize = t
                .trim()
                .parse()
                .ok()
                .filter(|&t| t > 0)
                .ok_or_else(|| Fail::Usage(format!("PQL_THREADS must be a positive integer, got {t:?}")))?;
            cfg.threads = Some(t);
        }
        Ok(cfg)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.unwrap_or(0))
    }
}

fn validate(c: &Common) -> Res<Output> {
    let report = validation_report(&c.layout()?);
    let failed = report["valid"] != json!(true);
    Ok(Output { text: pretty(&report), failed })
}

fn construct(c: &Common, family: &str) -> Res<Output> {
    let family: Family = family.parse()?;
    let g = c.graph()?;
    let rep = annotate(&g, family)?.construct()?;
    let mut v = layout_to_value(&rep.layout);
    let obj = v.as_object_mut().expect("layout is an object");
    obj.insert("family".into(), json!(family.tag()));
    obj.insert("anchors".into(), rep.anchors_json());
    obj.insert("graph".into(), graph_to_value(&g));
    Ok(Output::json(&v))
}

fn recognize(c: &Common) -> Res<Output> {
    let g = c.graph()?;
    let verdict = recognize_pqn1(&g);
    let mut v = verdict.to_json(&g);
    if verdict.is_yes() {
        v["layout"] = layout_to_value(&verdict.layout(&g)?);
    }
    Ok(Output::json(&v))
}

fn parse_list(s: &str) -> Res<Vec<usize>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| Fail::Usage(format!("bad vertex {t:?} in list"))))
        .collect()
}

fn solve_cmd(c: &Common, a: &SolveArgs) -> Res<Output> {
    let g = c.graph()?;
    let mut cfg = c.config()?;
    if let Some(n) = a.max_n {
        cfg.free_max_n = n;
    }
    let result = match a.mode {
        Mode::Fixed => {
            let ord = match &c.order {
                Some(p) => parse_ordering(&read(p)?)?,
                None => VertexOrdering::identity(g.n()),
            };
            if ord.len() != g.n() {
                return Err(Fail::Usage(format!("ordering has {} vertices, graph has {}", ord.len(), g.n())));
            }
            solve::solve_fixed_order_with(&g, &ord, &cfg)
        }
        Mode::Free => solve::solve_free_order_with(&g, &cfg),
        Mode::Separated => {
            let part_a = parse_list(a.part_a.as_deref().ok_or_else(|| Fail::Usage("--part-a is required".into()))?)?;
            let part_b: Vec<usize> = (0..g.n()).filter(|v| !part_a.contains(v)).collect();
            let first = match a.first {
                FirstPart::A => Side::A,
                FirstPart::B => Side::B,
            };
            solve::solve_separated_with(&g, &part_a, &part_b, first, &cfg)?
        }
        Mode::Universal => {
            if let Some(b) = c.budget {
                cfg.universal_max_m = usize::try_from(b).unwrap_or(usize::MAX);
            }
            return Ok(Output::json(&solve::universal_pqn1_oracle_with(&g, &cfg)?.to_json()));
        }
    };
    Ok(Output { text: pretty(&result.to_json()), failed: result.budget_exceeded() })
}

fn need(v: Option<usize>, flag: &str) -> Res<usize> {
    v.ok_or_else(|| Fail::Usage(format!("--{flag} is required")))
}

fn parse_pairs(s: &str) -> Res<Vec<(i64, i64)>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.split_once(':')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| Fail::Usage(format!("bad pair {t:?}, expected a:b")))
        })
        .collect()
}

fn gen(c: &Common, a: &GenArgs) -> Res<(Value, InstanceRecipe)> {
    Ok(match a.kind {
        GenKind::Knn => {
            let n = need(a.n, "n")?;
            let g = generate::gen_knn_weights(n)?;
            let recipe = InstanceRecipe::new("knn", json!({"n": n}))
                .note("vertices 0..n form part A, n..2n part B; a_j-b_(j+i mod n) has weight i")
                .note(&format!("page lower bound for any ordering: {}", generate::knn_lower_bound(n)));
            (graph_to_value(&g), recipe)
        }
        GenKind::Grid => {
            let n = need(a.n, "n")?;
            let mut order: Vec<usize> = (0..2 * n).collect();
            rand::seq::SliceRandom::shuffle(&mut order[..], &mut c.rng());
            let ord = VertexOrdering::new(order)?;
            let (h, sub, grid) = generate::knn_grid(n, &ord)?;
            let peel = generate::grid_peel(&grid);
            let recipe = InstanceRecipe::new("grid", json!({"n": n, "ordering": ord.order()}))
                .with_seed(c.seed.unwrap_or(0))
                .note("separated sub-layout of the weighted K_{n,n} under a random ordering")
                .note(&format!("left {:?}, right {:?} (graph vertices follow this order)", sub.left, sub.right))
                .note(&format!("grid peel: {} steps along path {:?}", peel.k, peel.path));
            (graph_to_value(&h), recipe)
        }
        GenKind::Interval => {
            let ivs = match &a.spec {
                Some(s) => parse_pairs(s)?,
                None => generate::random_intervals(need(a.n, "n")?, &mut c.rng()),
            };
            let l = generate::gen_interval_layout(&ivs)?;
            let mut recipe = InstanceRecipe::new("interval", json!({"intervals": ivs}))
                .note(&format!("a {}-page layout valid for every weighting: {}", l.k(), layout_to_value(&l)));
            if a.spec.is_none() {
                recipe = recipe.with_seed(c.seed.unwrap_or(0));
            }
            (graph_to_value(l.graph()), recipe)
        }
        GenKind::Hk => {
            let k = need(a.k, "k")?;
            let h = generate::gen_hk(k, a.d)?;
            let recipe = InstanceRecipe::new("hk", json!({"k": k, "d": a.d}))
                .note(&format!("root edge {:?}, {} stacked copies", h.tree.root, h.copies.len()))
                .note("every left-growing ordering is claimed to contain a k-inversion");
            (graph_to_value(&h.tree.graph), recipe)
        }
        GenKind::Minor => {
            let i = need(a.index, "index")?;
            let g = if a.uniform { generate::forbidden_minor_uniform(i)? } else { generate::gen_forbidden_minor(i)? };
            let recipe = InstanceRecipe::new("minor", json!({"index": i, "uniform": a.uniform})).note(if a.uniform {
                "all weights equal: one page suffices"
            } else {
                "integer weights derived from the refutation's inequalities, certified by exhaustive search"
            });
            (graph_to_value(&g), recipe)
        }
        GenKind::Npc => {
            let k = need(a.k, "k")?;
            let inst = match &a.spec {
                Some(s) => CircularArcInstance::new(parse_pairs(s)?, k)?,
                None => generate::random_arc_instance(need(a.n, "n")?, k, &mut c.rng())?,
            };
            let out = generate::gen_npc_reduction(&inst)?;
            let mut recipe = InstanceRecipe::new("npc", json!({"arcs": inst.arcs, "k": k}))
                .note(&format!("fixed ordering: {:?}", out.ordering.order()))
                .note(&format!("cut arcs: {:?}", out.cut_arcs))
                .note("the graph fits k pages on this ordering iff the arcs are k-colorable");
            if a.spec.is_none() {
                recipe = recipe.with_seed(c.seed.unwrap_or(0));
            }
            let mut v = graph_to_value(&out.graph);
            v["order"] = json!(out.ordering.order());
            (v, recipe)
        }
    })
}

fn gen_cmd(c: &Common, a: &GenArgs) -> Res<Output> {
    let (graph, recipe) = gen(c, a)?;
    let recipe_text = pretty(&serde_json::to_value(&recipe).expect("recipe serializes"));
    let sidecar = a.recipe.clone().or_else(|| {
        c.out.as_ref().map(|o| {
            let mut p = o.clone().into_os_string();
            p.push(".recipe.json");
            PathBuf::from(p)
        })
    });
    match sidecar {
        Some(p) => write(&p, &recipe_text)?,
        None => eprint!("{recipe_text}"),
    }
    Ok(Output::json(&graph))
}

fn render(c: &Common, a: &RenderArgs) -> Res<Output> {
    let l = c.layout()?;
    let spec = RenderSpec { show_weights: a.weights, spacing: a.spacing, ..RenderSpec::default() };
    let text = match a.format {
        Format::Svg => render_arc_diagram(&l, &spec),
        Format::Dot => render_dot(&l, &spec),
    };
    Ok(Output { text, failed: false })
}

fn run(cli: &Cli) -> Res<Output> {
    let c = &cli.common;
    match &cli.cmd {
        Command::Validate => validate(c),
        Command::Construct { family } => construct(c, family),
        Command::Recognize => recognize(c),
        Command::Solve(a) => solve_cmd(c, a),
        Command::Gen(a) => gen_cmd(c, a),
        Command::Render(a) => render(c, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        match &cli.common.out {
            Some(p) => write(p, &out.text)?,
            None => {
                let mut so = std::io::stdout().lock();
                let _ = so.write_all(out.text.as_bytes());
            }
        }
        Ok(out.failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Fail::Domain(msg)) => {
            eprintln!("pql: {msg}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("pql: {msg}");
            ExitCode::from(2)
        }
    }
}

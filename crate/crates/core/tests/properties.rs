mod common;

use common::{conflict, layout_ok};
use pql_core::construct::{transfer_by_contraction, Family};
use pql_core::generate::families::sample_family;
use pql_core::io::{parse_graph, parse_layout, serialize_graph, serialize_layout, serialize_layout_with_graph};
use pql_core::recognize::{recognize_pqn1, verify_minor_model, RecognitionVerdict};
use pql_core::solve::{solve_fixed_order, solve_free_order, solve_free_order_with, SolveConfig};
use pql_core::validate::{build_conflict_graph, find_forbidden_pairs, longest_inversion, simulate_sweep};
use pql_core::{contract_edge, Layout, VertexOrdering, Weight, WeightedGraph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn weight() -> impl Strategy<Value = Weight> {
    (-8i64..=8, 1i64..=4).prop_map(|(p, q)| Weight::new(p, q).unwrap())
}

/// Simple graph on `1..=max_n` vertices with up to `max_m` edges.
fn graph(max_n: usize, max_m: usize) -> impl Strategy<Value = WeightedGraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let cap = max_m.min(pairs.len());
        (Just(n), proptest::sample::subsequence(pairs, 0..=cap))
            .prop_flat_map(|(n, es)| {
                let m = es.len();
                (Just(n), Just(es), proptest::collection::vec(weight(), m))
            })
            .prop_map(|(n, es, ws)| {
                WeightedGraph::new(n, es.into_iter().zip(ws).map(|((a, b), w)| (a, b, w))).unwrap()
            })
    })
}

fn ordering(n: usize) -> impl Strategy<Value = VertexOrdering> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(|o| VertexOrdering::new(o).unwrap())
}

fn graph_and_order(max_n: usize, max_m: usize) -> impl Strategy<Value = (WeightedGraph, VertexOrdering)> {
    graph(max_n, max_m).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), ordering(n))
    })
}

fn layout(max_n: usize, max_m: usize, max_k: usize) -> impl Strategy<Value = Layout> {
    graph_and_order(max_n, max_m).prop_flat_map(move |(g, o)| {
        let m = g.m();
        proptest::collection::vec(0..max_k, m).prop_map(move |pages| Layout::new(g.clone(), o.clone(), pages, max_k).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph_json_round_trip(g in graph(8, 12)) {
        prop_assert_eq!(parse_graph(&serialize_graph(&g)).unwrap(), g);
    }

    #[test]
    fn layout_json_round_trip(l in layout(7, 10, 3)) {
        prop_assert_eq!(&parse_layout(&serialize_layout(&l), Some(l.graph())).unwrap(), &l);
        prop_assert_eq!(&parse_layout(&serialize_layout_with_graph(&l), None).unwrap(), &l);
    }

    #[test]
    fn weight_text_round_trip(w in weight()) {
        prop_assert_eq!(Weight::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn sweep_agrees_with_pairs(l in layout(7, 12, 3)) {
        let sweep = simulate_sweep(&l).is_valid();
        prop_assert_eq!(sweep, find_forbidden_pairs(&l).is_empty());
        prop_assert_eq!(sweep, layout_ok(&l));
    }

    #[test]
    fn colorings_are_page_assignments(l in layout(6, 10, 3)) {
        let h = build_conflict_graph(l.graph(), l.ordering());
        prop_assert_eq!(h.is_proper_coloring(l.pages()), simulate_sweep(&l).is_valid());
        for e in 0..l.graph().m() {
            for f in 0..l.graph().m() {
                if e != f {
                    prop_assert_eq!(h.adjacent(e, f), conflict(l.graph(), l.ordering(), e, f));
                }
            }
        }
    }

    #[test]
    fn inversion_is_a_clique_below_the_optimum((g, o) in graph_and_order(7, 11)) {
        let inv = longest_inversion(&g, &o);
        prop_assert!(inv.holds(&g, &o));
        let h = build_conflict_graph(&g, &o);
        for (i, &a) in inv.edges.iter().enumerate() {
            for &b in &inv.edges[i + 1..] {
                prop_assert!(h.adjacent(a, b));
            }
        }
        let r = solve_fixed_order(&g, &o);
        prop_assert!(inv.len() <= r.k);
        prop_assert!(simulate_sweep(&r.witness).is_valid());
    }

    #[test]
    fn contraction_counts((g, pick) in graph(7, 12).prop_flat_map(|g| { let m = g.m(); (Just(g), 0..m.max(1)) })) {
        prop_assume!(g.m() > 0);
        let e = g.edge(pick).clone();
        let c = contract_edge(&g, e.u, e.v).unwrap();
        prop_assert_eq!(c.graph.n(), g.n() - 1);
        prop_assert_eq!(c.graph.m(), g.m() - 1 - c.parallel.len());
        for p in &c.parallel {
            prop_assert!(c.graph.has_edge(c.merged, p.neighbor));
        }
        for f in g.edges() {
            let (a, b) = (c.vertex_map[f.u], c.vertex_map[f.v]);
            if a != b {
                prop_assert!(c.graph.has_edge(a, b));
            }
        }
    }

    #[test]
    fn recognition_verdicts_check_out(g in graph(8, 11)) {
        match recognize_pqn1(&g) {
            RecognitionVerdict::Yes(_) => {
                let l = recognize_pqn1(&g).layout(&g).unwrap();
                prop_assert!(l.k() <= 1 && layout_ok(&l));
            }
            RecognitionVerdict::No(model) => prop_assert!(verify_minor_model(&g, &model).is_ok()),
        }
    }

    #[test]
    fn removing_an_edge_never_costs_pages((g, o) in graph_and_order(6, 9), drop in 0usize..9) {
        prop_assume!(g.m() > 0);
        let drop = drop % g.m();
        let keep: Vec<usize> = (0..g.m()).filter(|&e| e != drop).collect();
        let h = g.edge_subgraph(&keep);
        prop_assert!(solve_fixed_order(&h, &o).k <= solve_fixed_order(&g, &o).k);
        prop_assert!(solve_free_order(&h).k <= solve_free_order(&g).k);
    }

    #[test]
    fn free_order_is_the_minimum_over_orderings(g in graph(5, 8)) {
        let free = solve_free_order(&g);
        prop_assert!(free.optimal);
        prop_assert!(simulate_sweep(&free.witness).is_valid());
        let best = common::all_orderings(g.n()).iter().map(|o| common::min_pages(&g, o)).min().unwrap();
        prop_assert_eq!(free.k, best);
    }

    #[test]
    fn worker_count_does_not_change_witness(g in graph(6, 10)) {
        let one = solve_free_order_with(&g, &SolveConfig { threads: Some(1), ..SolveConfig::default() });
        let four = solve_free_order_with(&g, &SolveConfig { threads: Some(4), ..SolveConfig::default() });
        prop_assert_eq!(one, four);
    }
}

#[test]
fn contraction_transfer_keeps_one_page() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for family in Family::ALL {
        for _ in 0..200 {
            let inst = sample_family(family, 10, &mut rng);
            let l = inst.construct().unwrap().layout;
            let g = l.graph();
            let rk = g.ranks();
            let Some(min) = rk.iter().min() else { continue };
            let lightest: Vec<usize> = (0..g.m()).filter(|&e| rk[e] == *min).collect();
            if lightest.len() != 1 {
                continue;
            }
            let e = g.edge(lightest[0]);
            let t = transfer_by_contraction(&l, e.v, e.u).unwrap();
            let (first, second) = if l.ordering().precedes(e.u, e.v) { (e.u, e.v) } else { (e.v, e.u) };
            assert_eq!(t.graph(), &contract_edge(g, first, second).unwrap().graph);
            assert!(t.k() <= 1 && layout_ok(&t), "{family}");
        }
    }
}

mod common;

use common::*;
use pql_core::generate::gen_forbidden_minor;
use pql_core::solve::{
    solve_fixed_order, solve_free_order, solve_separated, universal_pqn1_oracle, LowerBoundCertificate, Side,
};
use pql_core::validate::simulate_sweep;
use pql_core::{VertexOrdering, WeightedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random bipartite graph on parts `0..s` and `s..s+t`, at most `max_m` edges.
fn random_bipartite<R: Rng>(s: usize, t: usize, max_m: usize, rng: &mut R) -> WeightedGraph {
    let mut pairs: Vec<(usize, usize)> = (0..s).flat_map(|a| (s..s + t).map(move |b| (a, b))).collect();
    rand::seq::SliceRandom::shuffle(&mut pairs[..], rng);
    let m = rng.gen_range(0..=max_m.min(pairs.len()));
    weighted(s + t, &pairs[..m], rng)
}

#[test]
fn separated_matches_brute_force_and_bounds_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..150 {
        let s = rng.gen_range(1..=3);
        let t = rng.gen_range(1..=3);
        let g = random_bipartite(s, t, 8, &mut rng);
        let a: Vec<usize> = (0..s).collect();
        let b: Vec<usize> = (s..s + t).collect();
        let r = solve_separated(&g, &a, &b, Side::A).unwrap();
        let brute = all_orderings(s + t)
            .into_iter()
            .filter(|o| o.order()[..s].iter().all(|&v| v < s))
            .map(|o| min_pages(&g, &o))
            .min()
            .unwrap();
        assert_eq!(r.k, brute);
        assert!(layout_ok(&r.witness));
        assert!(r.k >= solve_free_order(&g).k);
    }
}

#[test]
fn free_never_exceeds_fixed() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..200 {
        let n = rng.gen_range(2..=6);
        let g = random_graph(n, 9, &mut rng);
        let free = solve_free_order(&g);
        for _ in 0..5 {
            assert!(free.k <= solve_fixed_order(&g, &random_ordering(n, &mut rng)).k);
        }
        assert_eq!(free.k, solve_fixed_order(&g, free.witness.ordering()).k);
    }
}

#[test]
fn inversion_certificate_matches_k() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..300 {
        let n = rng.gen_range(2..=7);
        let g = random_graph(n, 10, &mut rng);
        let o = random_ordering(n, &mut rng);
        let r = solve_fixed_order(&g, &o);
        if let Some(LowerBoundCertificate::Inversion { edges }) = &r.lower_bound_certificate {
            assert_eq!(edges.len(), r.k);
        }
        assert!(r.clique <= r.k);
    }
}

#[test]
fn universal_yes_means_every_weighting_fits_one_page() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..60 {
        let n = rng.gen_range(3..=6);
        let g = random_graph(n, 7, &mut rng);
        let v = universal_pqn1_oracle(&g).unwrap();
        for _ in 0..3 {
            let ws = (0..g.m()).map(|_| random_weight(&mut rng)).collect();
            let h = g.with_weights(ws).unwrap();
            let k = solve_free_order(&h).k;
            if v.is_yes() {
                assert!(k <= 1);
            }
        }
        if let pql_core::solve::UniversalVerdict::No { graph, .. } = v {
            assert!(solve_free_order(&graph).k >= 2);
        }
    }
}

#[test]
fn forbidden_minor_witnesses_are_sound() {
    for i in 1..=8 {
        let f = gen_forbidden_minor(i).unwrap();
        let r = solve_free_order(&f);
        assert!(simulate_sweep(&r.witness).is_valid());
        assert!(all_orderings(f.n()).iter().all(|o| min_pages(&f, o) >= 2), "F{i}");
    }
}

#[test]
fn fixed_edgeless_and_single_vertex() {
    let g = WeightedGraph::from_int_edges(3, &[]).unwrap();
    let r = solve_fixed_order(&g, &VertexOrdering::identity(3));
    assert_eq!((r.k, r.witness.k()), (0, 0));
    assert_eq!(solve_free_order(&g).k, 0);
}

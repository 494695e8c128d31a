use pql_core::construct::{caterpillar_ordering_with, layout_tree_traced, Family};
use pql_core::construct::FamilyInstance;
use pql_core::generate::families::sample_family;
use pql_core::structures::RootedTree;
use pql_core::validate::{find_forbidden_pairs, simulate_sweep};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn every_family_yields_valid_one_page_layouts() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for family in Family::ALL {
        for _ in 0..300 {
            let inst = sample_family(family, 12, &mut rng);
            let rep = inst.construct().unwrap();
            assert_eq!(rep.family, family);
            assert_eq!(rep.layout.k(), 1);
            assert_eq!(rep.layout.graph(), inst.graph());
            assert!(
                simulate_sweep(&rep.layout).is_valid(),
                "{family}: {:?} on {}",
                rep.layout.ordering().order(),
                pql_core::io::serialize_graph(inst.graph())
            );
            assert!(find_forbidden_pairs(&rep.layout).is_empty());
        }
    }
}

#[test]
fn caterpillar_leaves_in_any_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let FamilyInstance::Caterpillar(c, r) = sample_family(Family::Caterpillar, 12, &mut rng) else {
            unreachable!()
        };
        let mut shuffler = ChaCha8Rng::seed_from_u64(rand::Rng::gen(&mut rng));
        let rep = caterpillar_ordering_with(&c, r, &mut |_, leaves| leaves.shuffle(&mut shuffler)).unwrap();
        assert_eq!(*rep.layout.ordering().order().last().unwrap(), r);
        assert!(simulate_sweep(&rep.layout).is_valid());
    }
}

#[test]
fn tree_parents_first_and_suffix_sorted() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let FamilyInstance::Tree(t) = sample_family(Family::Tree, 14, &mut rng) else { unreachable!() };
        let (rep, steps) = layout_tree_traced(&t).unwrap();
        let ord = rep.layout.ordering();
        assert_eq!(ord.at(0), t.root());
        for (v, p) in t.parents().iter().enumerate() {
            if let Some((p, _)) = p {
                assert!(ord.precedes(*p, v));
            }
        }
        for s in steps {
            assert!(s.suffix_ranks.windows(2).all(|w| w[0] <= w[1]));
        }
        let direct = pql_core::construct::layout_tree(&RootedTree::new(t.graph().clone(), t.root()).unwrap()).unwrap();
        assert_eq!(direct.layout, rep.layout);
    }
}

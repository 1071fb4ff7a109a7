use proptest::prelude::*;

use odd_colouring::classes::{bounded_degree_budget, bounded_degree_colouring};
use odd_colouring::exact::{chi_odd_exact, is_odd_colourable};
use odd_colouring::gallai::{even_even_partition, odd_even_partition};
use odd_colouring::generators::{random_gnp, random_gnp_raw, random_interval};
use odd_colouring::gf2::{solve, BitMatrix, BitVector};
use odd_colouring::interval::interval_colouring_traced;
use odd_colouring::io::{parse_edge_list, write_edge_list};
use odd_colouring::modular::{colour_modular, naive_module_partition};
use odd_colouring::verify::{is_even_set, is_odd_set, verify_colouring};
use odd_colouring::{Graph, VertexSet};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in u + 1..n {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gallai_partitions_meet_their_contracts(g in graph_strategy(24)) {
        let (a, b) = even_even_partition(&g).unwrap();
        prop_assert!(is_even_set(&g, &a) && is_even_set(&g, &b));
        prop_assert_eq!(a.union(&b), g.vertices());
        prop_assert!(!a.intersects(&b));
        let (o, e) = odd_even_partition(&g).unwrap();
        prop_assert!(is_odd_set(&g, &o) && is_even_set(&g, &e));
        prop_assert_eq!(o.union(&e), g.vertices());
    }

    #[test]
    fn feasibility_matches_component_parity(g in graph_strategy(20)) {
        let even = g.components().iter().all(|c| c.len() % 2 == 0);
        prop_assert_eq!(is_odd_colourable(&g), even);
    }

    #[test]
    fn exact_witness_verifies(g in graph_strategy(12)) {
        prop_assume!(g.odd_component().is_none());
        let (k, c) = chi_odd_exact(&g).unwrap();
        prop_assert!(verify_colouring(&g, &c).valid);
        prop_assert_eq!(c.num_classes(), k);
        let bigger = g.disjoint_union(&Graph::from_edges(2, [(0, 1)]).unwrap());
        prop_assert!(chi_odd_exact(&bigger).unwrap().0 <= k.max(1));
    }

    #[test]
    fn bounded_degree_stays_in_budget(n in 1usize..30, p in 0.05f64..0.6, seed in any::<u64>()) {
        let g = random_gnp(2 * n, p, seed).unwrap();
        let c = bounded_degree_colouring(&g).unwrap();
        prop_assert!(verify_colouring(&g, &c).valid);
        prop_assert!(c.num_classes() < bounded_degree_budget(&g));
    }

    #[test]
    fn modular_on_naive_partitions(n in 1usize..12, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_gnp(2 * n, p, seed).unwrap();
        prop_assume!(g.n() >= 2);
        let m = naive_module_partition(&g).unwrap();
        let c = colour_modular(&g, &m).unwrap();
        prop_assert!(verify_colouring(&g, &c).valid);
    }

    #[test]
    fn interval_colouring_holds_invariants(n in 1usize..30, extra in 0u64..60, seed in any::<u64>()) {
        let (g, rep) = random_interval(2 * n, 4 * n as u64 - 1 + extra, seed).unwrap();
        let (c, trace) = interval_colouring_traced(&g, &rep).unwrap();
        prop_assert!(trace.violations.is_empty(), "{:?}", trace.violations);
        prop_assert!(c.num_classes() <= 6);
    }

    #[test]
    fn edge_list_round_trip(n in 1usize..40, p in 0.0f64..1.0, seed in any::<u64>()) {
        let g = random_gnp_raw(n, p, seed).unwrap();
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn gf2_solutions_satisfy_the_system(rows in 1usize..20, cols in 1usize..20, seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let a = BitMatrix::from_rows(
            cols,
            (0..rows).map(|_| BitVector::from_bits(&(0..cols).map(|_| rng.gen()).collect::<Vec<bool>>())).collect(),
        )
        .unwrap();
        let x = BitVector::from_bits(&(0..cols).map(|_| rng.gen()).collect::<Vec<bool>>());
        let b = a.mul_vec(&x).unwrap();
        let y = solve(&a, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn vertex_sets_behave_like_sets(xs in proptest::collection::btree_set(0usize..150, 0..60),
                                    ys in proptest::collection::btree_set(0usize..150, 0..60)) {
        let a = VertexSet::from_iter(150, xs.iter().copied());
        let b = VertexSet::from_iter(150, ys.iter().copied());
        prop_assert_eq!(a.union(&b).to_vec(), xs.union(&ys).copied().collect::<Vec<_>>());
        prop_assert_eq!(a.intersection(&b).len(), xs.intersection(&ys).count());
        prop_assert_eq!(a.difference(&b).to_vec(), xs.difference(&ys).copied().collect::<Vec<_>>());
    }
}

use num::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use recon_core::canon::{brute_force_code, factorial, for_each_permutation};
use recon_core::graph::pair_count;
use recon_core::invariant::{
    all_orbit_sums, count_subgraphs_brute, count_subgraphs_orbit, expand_product, orbit_monomials, orbit_sum_eval,
    orbit_sum_eval_by_group,
};
use recon_core::io::{emit_graph6, parse_graph6};
use recon_core::linalg::rational_rank;
use recon_core::recognize::{deleted_vertex_degrees, edge_count};
use recon_core::{
    are_isomorphic, automorphism_count, canonical_code, deck, orbit_size, reconstruct_from_three_cards, Digraph,
    Genericity, InvariantLimits, InvariantPolynomial, LabeledGraph, Multigraph, OrbitSum, Permutation, Rational,
    Relabel, WeightedGraph,
};

fn graph_from_bits(n: usize, bits: &[bool]) -> LabeledGraph {
    let mut g = LabeledGraph::empty(n).unwrap();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.add_edge(i, j).unwrap();
            }
            k += 1;
        }
    }
    g
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (LabeledGraph, Permutation)> {
    (1..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(any::<bool>(), pair_count(n)), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(move |(bits, p)| (graph_from_bits(n, &bits), Permutation::new(p).unwrap()))
    })
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

fn weighted_and_perm(max_n: usize) -> impl Strategy<Value = (WeightedGraph, Permutation)> {
    (2..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(small_rational(), pair_count(n)), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
            .prop_map(move |(ws, p)| {
                let mut w = WeightedGraph::empty(n);
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        w.set_weight(i, j, ws[k].clone()).unwrap();
                        k += 1;
                    }
                }
                (w, Permutation::new(p).unwrap())
            })
    })
}

fn multigraph(n: usize, max_degree: u32) -> impl Strategy<Value = Multigraph> {
    prop::collection::vec((0..n, 0..n), 0..=max_degree as usize).prop_map(move |pairs| {
        let edges = pairs.into_iter().filter(|(i, j)| i != j).map(|(i, j)| (i, j, 1));
        Multigraph::from_multiplicities(n, edges).unwrap()
    })
}

fn stabilizer_size<G: Relabel + PartialEq>(g: &G, n: usize) -> u128 {
    let mut count = 0;
    for_each_permutation(n, |s| {
        if g.relabel(&Permutation::new(s.to_vec()).unwrap()).unwrap() == *g {
            count += 1;
        }
    });
    count
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_code_is_label_free((g, s) in graph_and_perm(10)) {
        let h = g.relabel(&s).unwrap();
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn canonical_code_is_the_brute_force_minimum((g, _s) in graph_and_perm(6)) {
        prop_assert_eq!(canonical_code(&g), brute_force_code(&g));
    }

    #[test]
    fn orbit_times_stabilizer((g, _s) in graph_and_perm(6)) {
        let n = g.order();
        let aut = automorphism_count(&g);
        prop_assert_eq!(aut, stabilizer_size(&g, n));
        prop_assert_eq!(orbit_size(&g) * aut, factorial(n));
    }

    #[test]
    fn relabeling_round_trips((g, s) in graph_and_perm(9)) {
        let back = g.relabel(&s).unwrap().relabel(&s.inverse()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn deck_is_label_free((g, s) in graph_and_perm(8)) {
        prop_assert_eq!(deck(&g).unwrap(), deck(&g.relabel(&s).unwrap()).unwrap());
    }

    #[test]
    fn edges_and_degrees_are_recognized((g, _s) in graph_and_perm(9)) {
        prop_assume!(g.order() >= 3);
        let d = deck(&g).unwrap();
        prop_assert_eq!(edge_count(&d).unwrap(), g.edge_count());
        let mut got = deleted_vertex_degrees(&d).unwrap();
        let mut want = g.degrees();
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn zero_one_weighted_deck_matches_simple_deck((g, _s) in graph_and_perm(7)) {
        let wd = deck(&g.to_weighted()).unwrap();
        let sd = deck(&g).unwrap();
        let translated: Vec<_> = wd.cards().iter().map(|c| c.map(|x| !x.is_zero())).collect();
        prop_assert_eq!(translated, sd.cards().to_vec());
    }

    #[test]
    fn digraph_codes_are_label_free(
        (n, arcs, p) in (1usize..=6).prop_flat_map(|n| (
            Just(n),
            prop::collection::vec((0..n, 0..n), 0..=n * (n - 1)),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        ))
    ) {
        let mut arcs: Vec<_> = arcs.into_iter().filter(|(a, b)| a != b).collect();
        arcs.sort();
        arcs.dedup();
        let g = Digraph::from_arcs(n, &arcs).unwrap();
        let h = g.relabel(&Permutation::new(p).unwrap()).unwrap();
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        if n <= 5 {
            prop_assert_eq!(canonical_code(&g), brute_force_code(&g));
        }
    }

    #[test]
    fn weighted_codes_are_label_free((w, s) in weighted_and_perm(6)) {
        let h = w.relabel(&s).unwrap();
        prop_assert_eq!(canonical_code(&w), canonical_code(&h));
        if w.order() <= 5 {
            prop_assert_eq!(canonical_code(&w), brute_force_code(&w));
        }
    }

    #[test]
    fn graph6_round_trip((g, _s) in graph_and_perm(20)) {
        let s = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbit_sums_are_invariant(
        ((w, s), m) in weighted_and_perm(6).prop_flat_map(|(w, s)| {
            let n = w.order();
            (Just((w, s)), multigraph(n, 5))
        })
    ) {
        let o = OrbitSum::new(&m);
        let v = orbit_sum_eval(&o, &w).unwrap();
        prop_assert_eq!(&v, &orbit_sum_eval(&o, &w.relabel(&s).unwrap()).unwrap());
        prop_assert_eq!(v, orbit_sum_eval_by_group(&o, &w).unwrap());
    }

    #[test]
    fn orbit_length_times_stabilizer(m in (1usize..=5).prop_flat_map(|n| multigraph(n, 6))) {
        let n = m.order();
        let orbit = orbit_monomials(&m, &InvariantLimits::default()).unwrap();
        prop_assert_eq!(orbit.len() as u128 * stabilizer_size(&m, n), factorial(n));
        prop_assert_eq!(orbit.len() as u128, orbit_size(&m));
    }

    #[test]
    fn products_are_evaluation_homomorphisms(
        ((w, _s), a, b) in weighted_and_perm(5).prop_flat_map(|(w, s)| {
            let n = w.order();
            (Just((w, s)), multigraph(n, 3), multigraph(n, 3))
        })
    ) {
        let pa = InvariantPolynomial::from_orbit_sum(&OrbitSum::new(&a));
        let pb = InvariantPolynomial::from_orbit_sum(&OrbitSum::new(&b));
        let prod = expand_product(&pa, &pb).unwrap();
        prop_assert_eq!(prod.eval(&w).unwrap(), pa.eval(&w).unwrap() * pb.eval(&w).unwrap());
    }

    #[test]
    fn subgraph_counts_agree(
        (p, h) in (2usize..=6).prop_flat_map(|n| (
            prop::collection::vec(any::<bool>(), pair_count(n)),
            prop::collection::vec(any::<bool>(), pair_count(n)),
        ).prop_map(move |(a, b)| (graph_from_bits(n, &a), graph_from_bits(n, &b))))
    ) {
        prop_assert_eq!(count_subgraphs_orbit(&p, &h).unwrap(), count_subgraphs_brute(&p, &h).unwrap());
    }
}

/// Distinct weights `1..=C(n,2)` in random positions; with `gap`, one pair
/// stays empty.
fn distinct_weight_graph(rng: &mut ChaCha8Rng, n: usize, gap: bool) -> WeightedGraph {
    let m = pair_count(n);
    let mut ws: Vec<i64> = (1..=m as i64).collect();
    for i in (1..m).rev() {
        ws.swap(i, rng.gen_range(0..=i));
    }
    if gap {
        ws[rng.gen_range(0..m)] = 0;
    }
    let mut w = WeightedGraph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            w.set_weight(i, j, Rational::from_integer(ws[k].into())).unwrap();
            k += 1;
        }
    }
    w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn three_cards_round_trip(seed in any::<u64>(), n in 3usize..=7, gap in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = distinct_weight_graph(&mut rng, n, gap);
        let mut vs: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            vs.swap(i, rng.gen_range(0..=i));
        }
        let cards = [vs[0], vs[1], vs[2]].map(|v| w.delete_vertex(v).unwrap());
        let present: std::collections::BTreeSet<_> = cards.iter().flat_map(|c| c.edges().map(|e| e.2.clone())).collect();
        let all: std::collections::BTreeSet<_> = w.edges().map(|e| e.2.clone()).collect();
        prop_assert_eq!(present, all);
        let h = reconstruct_from_three_cards(&cards, Genericity::Strict).unwrap();
        prop_assert!(are_isomorphic(&h, &w));
    }
}

#[test]
fn orbit_sums_are_linearly_independent_as_functions() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (n, d) in [(3, 4), (4, 3), (5, 2)] {
        let sums: Vec<_> = all_orbit_sums(n, d).into_iter().filter(|o| o.degree() == d).collect();
        let points: Vec<WeightedGraph> = (0..sums.len())
            .map(|_| {
                let mut w = WeightedGraph::empty(n);
                for j in 1..n {
                    for i in 0..j {
                        w.set_weight(i, j, Rational::from_integer(rng.gen_range(-20i64..=20).into())).unwrap();
                    }
                }
                w
            })
            .collect();
        let rows: Vec<Vec<Rational>> =
            points.iter().map(|w| sums.iter().map(|o| orbit_sum_eval(o, w).unwrap()).collect()).collect();
        assert_eq!(rational_rank(&rows), sums.len(), "n={n} d={d}");
    }
}

//! Invariant solvers against naive oracles, and the chain
//! χ ≤ χ_ℓ ≤ χ_P ≤ AT ≤ col on random small graphs.

mod common;

use at_lab::graph::Graph;
use at_lab::invariants::{
    alon_tarsi_number, check_list_colorable, chromatic_number, coloring_number, list_chromatic_number, paint_number,
    ListAssignment,
};
use at_lab::orientation::{degree_profile, Orientation};
use at_lab::Limits;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{brute_census, brute_list_colorable, random_digraph};

fn random_graph(seed: u64, max_vertices: usize, max_edges: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (n, arcs) = random_digraph(&mut rng, max_vertices, max_edges);
    Graph::with_named_vertices(n, arcs.iter().map(|&(a, b)| (a.min(b), a.max(b)))).unwrap()
}

/// AT from the definition: over every orientation with differing even/odd
/// circulation counts, the least max indegree, plus one.
fn oracle_at(g: &Graph) -> usize {
    (0..1u64 << g.edge_count())
        .filter_map(|mask| {
            let d = Orientation::from_edge_mask(g, mask);
            let (even, odd) = brute_census(d.vertex_count(), d.arcs());
            (even != odd).then(|| degree_profile(&d).max_indegree + 1)
        })
        .min()
        .expect("acyclic orientations always qualify")
}

fn oracle_chi(g: &Graph) -> usize {
    (1..).find(|&k| brute_list_colorable(g, &vec![(1..=k as u32).collect(); g.vertex_count()])).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn at_matches_definition(seed in any::<u64>()) {
        let g = random_graph(seed, 7, 12);
        let at = alon_tarsi_number(&g, &Limits::default()).unwrap();
        prop_assert_eq!(at.value, oracle_at(&g));
        let w = &at.witness;
        prop_assert!(w.orients(&g));
        prop_assert_eq!(degree_profile(w).max_indegree + 1, at.value);
        let (even, odd) = brute_census(w.vertex_count(), w.arcs());
        prop_assert_ne!(even, odd);
    }

    #[test]
    fn chromatic_number_matches_oracle(seed in any::<u64>()) {
        let g = random_graph(seed, 8, 20);
        prop_assert_eq!(chromatic_number(&g), oracle_chi(&g));
    }

    /// Lists of size indegree + 1 along an AT witness are always colorable.
    #[test]
    fn witness_lists_are_colorable(seed in any::<u64>()) {
        let g = random_graph(seed, 7, 14);
        let at = alon_tarsi_number(&g, &Limits::default()).unwrap();
        let indeg = at.witness.in_degrees();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for _ in 0..8 {
            let lists: Vec<Vec<u32>> = indeg
                .iter()
                .map(|&d| rand::seq::index::sample(&mut rng, d + 3, d + 1).iter().map(|c| c as u32 + 1).collect())
                .collect();
            prop_assert!(brute_list_colorable(&g, &lists));
            let la = ListAssignment::new(lists.clone()).unwrap();
            let coloring = check_list_colorable(&g, &la);
            prop_assert!(coloring.is_some());
            let c = coloring.unwrap();
            prop_assert!(g.edges().iter().all(|&(u, v)| c[u] != c[v]));
            prop_assert!((0..g.vertex_count()).all(|v| lists[v].contains(&c[v])));
        }
    }

    #[test]
    fn list_check_matches_oracle(seed in any::<u64>()) {
        let g = random_graph(seed, 7, 14);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lists: Vec<Vec<u32>> = (0..g.vertex_count())
            .map(|_| {
                let size = rng.gen_range(1..=3);
                rand::seq::index::sample(&mut rng, 4, size).iter().map(|c| c as u32 + 1).collect()
            })
            .collect();
        let la = ListAssignment::new(lists.clone()).unwrap();
        prop_assert_eq!(check_list_colorable(&g, &la).is_some(), brute_list_colorable(&g, &lists));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn invariant_chain(seed in any::<u64>()) {
        let g = random_graph(seed, 6, 10);
        let limits = Limits { choosable_vertices: 6, ..Limits::default() };
        let chi = chromatic_number(&g);
        let chi_l = list_chromatic_number(&g, &limits).unwrap();
        let chi_p = paint_number(&g, &limits).unwrap();
        let at = alon_tarsi_number(&g, &limits).unwrap().value;
        let col = coloring_number(&g);
        prop_assert!(chi <= chi_l && chi_l <= chi_p && chi_p <= at && at <= col,
            "chi={} chi_l={} chi_p={} at={} col={}", chi, chi_l, chi_p, at, col);
    }
}

mod common;

use covering_cycles::algebra::power_sums_from_det;
use covering_cycles::census::{Census, CensusConfig};
use covering_cycles::identity::{h_series, theta_product};
use covering_cycles::oracle::{self, walk_census, DEFAULT_CAP};
use covering_cycles::{MultiGraph, Sign};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn leaf_free(seed: u64, max_vertices: usize, max_edges: usize) -> MultiGraph {
    common::random_leaf_free(
        &mut ChaCha8Rng::seed_from_u64(seed),
        max_vertices,
        max_edges,
    )
}

/// Arbitrary connected multigraph, pendant edges allowed.
fn with_leaves(seed: u64) -> MultiGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let core = common::random_leaf_free(&mut rng, 3, 3);
    let mut edges = core.edges().to_vec();
    let mut n = core.vertex_count();
    for _ in 0..(seed % 3 + 1) {
        let attach = (seed as usize + n) % n;
        edges.push((attach, n));
        n += 1;
    }
    edges.shuffle(&mut rng);
    MultiGraph::undirected(n, edges).unwrap()
}

fn census(g: &MultiGraph) -> Census {
    Census::with_defaults(g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn counts_ignore_orientation(seed in any::<u64>(), flips in any::<u64>()) {
        let g = leaf_free(seed, 4, 5);
        let mut flipped = g.clone();
        for i in 0..g.edge_count() {
            if flips >> i & 1 == 1 {
                flipped = flipped.flip_edge(i);
            }
        }
        let (a, b) = (census(&g), census(&flipped));
        prop_assert_eq!(a.omega_range(9), b.omega_range(9));
        prop_assert_eq!(a.euler_count().unwrap(), b.euler_count().unwrap());
    }

    #[test]
    fn counts_ignore_edge_labels(seed in any::<u64>()) {
        let g = leaf_free(seed, 4, 5);
        let mut order: Vec<usize> = (0..g.edge_count()).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x5eed));
        let h = g.reorder_edges(&order);
        let (a, b) = (census(&g), census(&h));
        prop_assert_eq!(a.table(9).unwrap().theta, b.table(9).unwrap().theta);
        prop_assert_eq!(a.euler_count().unwrap(), b.euler_count().unwrap());
    }

    #[test]
    fn edge_space_and_matrix_shape(seed in any::<u64>()) {
        let g = leaf_free(seed, 4, 6);
        let space = g.symmetrize().unwrap();
        let t = space.edge_adjacency_matrix();
        for i in 0..space.size() {
            let inv = space.inverse(i);
            prop_assert_eq!(space.inverse(inv), i);
            prop_assert_ne!(inv, i);
            prop_assert_eq!(space.origin(inv), space.end(i));
            prop_assert_eq!(space.end(inv), space.origin(i));
            let is_loop = space.origin(i) == space.end(i);
            prop_assert_eq!(t.get(i, i).is_one(), is_loop);
            let leaving = (0..space.size()).filter(|&j| space.origin(j) == space.end(i)).count();
            let row: BigInt = t.row(i).iter().sum();
            prop_assert_eq!(row, BigInt::from(leaving - 1));
        }
    }

    #[test]
    fn newton_identities_match_repeated_products(seed in any::<u64>()) {
        let g = leaf_free(seed, 4, 6);
        let t = g.edge_adjacency_matrix().unwrap();
        let det = t.det_one_minus_z();
        prop_assert!(det.coeff(0).is_one());
        let max = 2 * t.dim();
        prop_assert_eq!(power_sums_from_det(&det, max), t.trace_powers(max));
    }

    #[test]
    fn pruning_preserves_traces(seed in any::<u64>()) {
        let g = with_leaves(seed);
        let pruned = g.prune_leaves().unwrap();
        prop_assert!(pruned.degrees().iter().all(|&d| d != 1));
        let t = pruned.edge_adjacency_matrix().unwrap();
        for n in 1..=8 {
            let before = oracle::count_closed_walks(&g, n, DEFAULT_CAP).unwrap();
            let after = oracle::count_closed_walks(&pruned, n, DEFAULT_CAP).unwrap();
            prop_assert_eq!(&before, &after);
            prop_assert_eq!(&t.trace_power(n), &after);
        }
    }

    #[test]
    fn subgraph_pruning_does_not_change_omega(seed in any::<u64>()) {
        let g = leaf_free(seed, 4, 6);
        let plain = Census::new(&g, CensusConfig { prune_subgraphs: false, ..CensusConfig::default() }).unwrap();
        prop_assert_eq!(census(&g).omega_range(10), plain.omega_range(10));
    }

    #[test]
    fn directed_edge_and_vertex_traces_agree(seed in any::<u64>()) {
        let g = common::random_directed(&mut ChaCha8Rng::seed_from_u64(seed), 4, 7);
        let s = g.directed_edge_matrix().unwrap();
        let a = g.directed_vertex_matrix().unwrap();
        prop_assert_eq!(s.trace_powers(8), a.trace_powers(8));
    }

    #[test]
    fn directed_census_matches_oracle(seed in any::<u64>()) {
        let g = common::random_directed(&mut ChaCha8Rng::seed_from_u64(seed), 3, 5);
        let c = census(&g);
        let table = c.table(7).unwrap();
        for n in 1..=7 {
            let walks = walk_census(&g, n, DEFAULT_CAP).unwrap();
            prop_assert_eq!(table.omega(n).unwrap(), &BigInt::from(walks.covering));
            prop_assert_eq!(table.theta(n).unwrap(), &BigInt::from(walks.nonperiodic_classes()));
        }
    }

    #[test]
    fn hamiltonian_count_matches_oracle(seed in any::<u64>()) {
        let g = common::random_directed(&mut ChaCha8Rng::seed_from_u64(seed), 5, 9);
        let report = covering_cycles::census::hamiltonian_count(&g, CensusConfig::default()).unwrap();
        prop_assert_eq!(report.classes, oracle::count_hamiltonian_classes(&g, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn theta_product_equals_exponential(seed in any::<u64>()) {
        let g = leaf_free(seed, 4, 5);
        let order = 14;
        let table = census(&g).table(order).unwrap();
        let h = h_series(&table, order).unwrap();
        let e = (-&h).exp().unwrap().integer_coeffs().unwrap();
        prop_assert_eq!(theta_product(&table, order).unwrap(), covering_cycles::algebra::Polynomial::new(e));
    }

    #[test]
    fn recurrences_hold_below_threshold_too(seed in any::<u64>()) {
        let g = leaf_free(seed, 3, 5);
        let c = census(&g);
        let report = covering_cycles::identity::verify(&c, 3 * c.edge_count()).unwrap();
        prop_assert_eq!(report.items[0].below_threshold, Some(true));
        prop_assert_eq!(report.items[1].below_threshold, Some(true));
        prop_assert!(report.passed());
        prop_assert!(report.route(Sign::Plus).agree());
    }
}

#[test]
fn no_covering_class_is_its_own_reversal() {
    for g in common::leaf_free_catalog(3, 4) {
        for n in 1..=8 {
            assert_eq!(
                oracle::self_inverse_classes(&g, n, DEFAULT_CAP).unwrap(),
                0,
                "{g} N={n}"
            );
        }
    }
}

#[test]
fn trees_have_no_covering_cycles() {
    let tree = MultiGraph::undirected(4, vec![(0, 1), (1, 2), (1, 3)]).unwrap();
    let c = census(&tree);
    assert!(c.leaves_pruned());
    assert_eq!(c.edge_count(), 0);
    assert!(c.omega_range(6).iter().all(Zero::is_zero));
    assert!(c.euler_count().unwrap().is_zero());
}

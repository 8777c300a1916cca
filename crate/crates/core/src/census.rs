//! Covering-cycle counts by inclusion–exclusion over deleted edges, and the
//! Möbius inversion from marked-start counts to primitive classes.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{EdgeSubset, MultiGraph, MAX_SUBSET_BITS};

pub const DEFAULT_SUBSET_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    /// Largest edge (or, for Hamiltonian counts, vertex) count accepted;
    /// work grows as `2^count`.
    pub subset_limit: usize,
    /// Leaf-prune every edge-deleted subgraph before building its matrix.
    pub prune_subgraphs: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            subset_limit: DEFAULT_SUBSET_LIMIT,
            prune_subgraphs: true,
        }
    }
}

/// Möbius function.
pub fn mobius(n: usize) -> i8 {
    assert!(n >= 1, "mobius is defined for n >= 1");
    let mut n = n;
    let mut sign = 1i8;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// `(1/n) sum_{g|n} mu(g) omega(n/g)`, asserting the division is exact.
pub fn primitive_count(n: usize, omega: impl Fn(usize) -> BigInt) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let mut sum = BigInt::zero();
    for g in divisors(n) {
        match mobius(g) {
            1 => sum += omega(n / g),
            -1 => sum -= omega(n / g),
            _ => {}
        }
    }
    let (q, r) = sum.div_rem(&BigInt::from(n));
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!(
            "Mobius sum {sum} at length {n} is not divisible by {n}"
        )));
    }
    Ok(q)
}

/// Recorded counts for one graph: `omega(N)` and `Theta(N)` for `N = 1..=max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusTable {
    pub fingerprint: u64,
    pub edge_count: usize,
    pub omega: BTreeMap<usize, BigInt>,
    pub theta: BTreeMap<usize, BigInt>,
}

impl CensusTable {
    pub fn max_length(&self) -> usize {
        self.omega.keys().next_back().copied().unwrap_or(0)
    }

    pub fn omega(&self, n: usize) -> Result<&BigInt> {
        self.omega.get(&n).ok_or(Error::MissingOmega(n))
    }

    pub fn theta(&self, n: usize) -> Option<&BigInt> {
        self.theta.get(&n)
    }

    /// `sum_{g|n} (n/g) Theta(n/g)`, which must give back `omega(n)`.
    pub fn power_sum(&self, n: usize) -> Option<BigInt> {
        divisors(n)
            .into_iter()
            .map(|g| self.theta(n / g).map(|t| t * BigInt::from(n / g)))
            .sum()
    }
}

/// A connected graph prepared for counting.
///
/// Undirected input is leaf-pruned first; covering then refers to the edges
/// of the pruned core, since no closed non-backtracking walk can use a
/// pendant edge.
#[derive(Clone, Debug)]
pub struct Census {
    original: MultiGraph,
    core: MultiGraph,
    config: CensusConfig,
}

impl Census {
    pub fn new(graph: &MultiGraph, config: CensusConfig) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let core = if graph.is_directed() {
            graph.clone()
        } else {
            graph.prune_leaves()?
        };
        let limit = config.subset_limit.min(MAX_SUBSET_BITS);
        if core.edge_count() > limit {
            return Err(Error::SubsetLimit {
                what: "edges",
                count: core.edge_count(),
                limit,
            });
        }
        Ok(Census {
            original: graph.clone(),
            core,
            config,
        })
    }

    pub fn with_defaults(graph: &MultiGraph) -> Result<Self> {
        Self::new(graph, CensusConfig::default())
    }

    /// The graph actually counted (after leaf pruning).
    pub fn graph(&self) -> &MultiGraph {
        &self.core
    }

    pub fn original(&self) -> &MultiGraph {
        &self.original
    }

    pub fn leaves_pruned(&self) -> bool {
        self.core.edge_count() != self.original.edge_count()
    }

    pub fn config(&self) -> CensusConfig {
        self.config
    }

    /// `|E|` of the counted graph.
    pub fn edge_count(&self) -> usize {
        self.core.edge_count()
    }

    pub fn is_directed(&self) -> bool {
        self.core.is_directed()
    }

    /// The subgraph `G_k` with the edges of `deleted` removed, pruned when
    /// configured to.
    pub fn subgraph(&self, deleted: EdgeSubset) -> MultiGraph {
        let sub = self.core.delete_edges(deleted);
        if self.config.prune_subgraphs && !sub.is_directed() {
            sub.prune_leaves().expect("undirected")
        } else {
            sub
        }
    }

    /// Every edge subset to delete, excluding the full set, whose empty
    /// subgraph contributes trace zero.
    fn deletion_masks(&self) -> impl ParallelIterator<Item = EdgeSubset> {
        let full = EdgeSubset::full(self.edge_count()).mask();
        (0..full).into_par_iter().map(EdgeSubset::from_mask)
    }

    /// `omega(1..=max)` as one pass over all deletion subsets.
    pub fn omega_range(&self, max: usize) -> Vec<BigInt> {
        let zeros = || vec![BigInt::zero(); max];
        self.deletion_masks()
            .map(|deleted| {
                let mut traces = self.subgraph(deleted).cycle_matrix().trace_powers(max);
                if !deleted.is_even() {
                    traces.iter_mut().for_each(|t| *t = -&*t);
                }
                traces
            })
            .reduce(zeros, |mut acc, part| {
                acc.iter_mut().zip(part).for_each(|(a, b)| *a += b);
                acc
            })
    }

    /// Number of covering cycles of length `n` with a marked start.
    pub fn omega(&self, n: usize) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        Ok(self.omega_range(n).pop().expect("n >= 1"))
    }

    /// Number of rotation classes of primitive covering cycles of length `n`.
    pub fn theta(&self, n: usize) -> Result<BigInt> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let omega = self.omega_range(n);
        primitive_count(n, |k| omega[k - 1].clone())
    }

    pub fn table(&self, max: usize) -> Result<CensusTable> {
        let omega = self.omega_range(max);
        let mut table = CensusTable {
            fingerprint: self.core.fingerprint(),
            edge_count: self.edge_count(),
            omega: BTreeMap::new(),
            theta: BTreeMap::new(),
        };
        for n in 1..=max {
            table.omega.insert(n, omega[n - 1].clone());
            table
                .theta
                .insert(n, primitive_count(n, |k| omega[k - 1].clone())?);
        }
        Ok(table)
    }

    /// Euler cycles up to rotation and reversal: `omega(|E|) / 2|E|`.
    pub fn euler_count(&self) -> Result<BigInt> {
        if self.is_directed() {
            return Err(Error::Orientation {
                expected: "undirected",
            });
        }
        let e = self.edge_count();
        if e == 0 || self.core.degrees().iter().any(|d| d % 2 == 1) {
            return Ok(BigInt::zero());
        }
        let marked = self.omega(e)?;
        let (q, r) = marked.div_rem(&BigInt::from(2 * e));
        if !r.is_zero() {
            return Err(Error::NonIntegral(format!(
                "omega({e}) = {marked} is not divisible by {}",
                2 * e
            )));
        }
        Ok(q)
    }
}

fn require(g: &MultiGraph, directed: bool) -> Result<()> {
    match (g.is_directed(), directed) {
        (true, false) => Err(Error::Orientation {
            expected: "undirected",
        }),
        (false, true) => Err(Error::Orientation {
            expected: "directed",
        }),
        _ => Ok(()),
    }
}

pub fn omega(g: &MultiGraph, n: usize) -> Result<BigInt> {
    require(g, false)?;
    Census::with_defaults(g)?.omega(n)
}

pub fn theta(g: &MultiGraph, n: usize) -> Result<BigInt> {
    require(g, false)?;
    Census::with_defaults(g)?.theta(n)
}

pub fn euler_count(g: &MultiGraph) -> Result<BigInt> {
    require(g, false)?;
    Census::with_defaults(g)?.euler_count()
}

pub fn omega_directed(g: &MultiGraph, n: usize) -> Result<BigInt> {
    require(g, true)?;
    Census::with_defaults(g)?.omega(n)
}

pub fn theta_directed(g: &MultiGraph, n: usize) -> Result<BigInt> {
    require(g, true)?;
    Census::with_defaults(g)?.theta(n)
}

/// Directed Hamiltonian cycle counts from vertex inclusion–exclusion on
/// the vertex adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianReport {
    pub vertex_count: usize,
    /// Closed walks of length `|V|` visiting every vertex, marked start.
    pub marked: BigInt,
    /// Rotation classes `Theta(|V|)`; a directed cycle has no separate
    /// reversal, so this is the Hamiltonian cycle count.
    pub classes: BigInt,
    /// `Theta(|V|) / 2`, the halved value that treats each cycle as paired
    /// with an inverse.
    pub halved: BigRational,
}

impl HamiltonianReport {
    /// True when halving does not change the answer, i.e. both counts are 0.
    pub fn halved_agrees(&self) -> bool {
        BigRational::from_integer(self.classes.clone()) == self.halved
    }
}

pub fn hamiltonian_count(g: &MultiGraph, config: CensusConfig) -> Result<HamiltonianReport> {
    require(g, true)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let limit = config.subset_limit.min(MAX_SUBSET_BITS);
    if n > limit {
        return Err(Error::SubsetLimit {
            what: "vertices",
            count: n,
            limit,
        });
    }
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let a = g.directed_vertex_matrix()?;
    let full = EdgeSubset::full(n).mask();
    let vertex_cover = (0..full)
        .into_par_iter()
        .map(|mask| {
            let deleted = EdgeSubset::from_mask(mask);
            let keep: Vec<usize> = (0..n).filter(|&v| !deleted.contains(v)).collect();
            let mut traces = a.principal_submatrix(&keep).trace_powers(n);
            if !deleted.is_even() {
                traces.iter_mut().for_each(|t| *t = -&*t);
            }
            traces
        })
        .reduce(
            || vec![BigInt::zero(); n],
            |mut acc, part| {
                acc.iter_mut().zip(part).for_each(|(x, y)| *x += y);
                acc
            },
        );
    let classes = primitive_count(n, |k| vertex_cover[k - 1].clone())?;
    debug_assert!(!classes.is_negative());
    Ok(HamiltonianReport {
        vertex_count: n,
        marked: vertex_cover[n - 1].clone(),
        halved: BigRational::new(classes.clone(), BigInt::from(2)),
        classes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn mobius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (n, &mu) in (1..=12).zip(expected.iter()) {
            assert_eq!(mobius(n), mu, "mu({n})");
        }
    }

    #[test]
    fn rose_two_small_lengths() {
        let g = catalog::rose(2);
        assert_eq!(omega(&g, 1).unwrap(), big(0));
        assert_eq!(omega(&g, 2).unwrap(), big(8));
        assert_eq!(theta(&g, 2).unwrap(), big(4));
        assert_eq!(euler_count(&g).unwrap(), big(2));
    }

    #[test]
    fn theta_graph_values() {
        let g = catalog::theta();
        assert_eq!(omega(&g, 4).unwrap(), big(24));
        assert_eq!(omega(&g, 5).unwrap(), big(0));
        assert_eq!(theta(&g, 6).unwrap(), big(20));
        assert_eq!(euler_count(&g).unwrap(), big(0));
    }

    #[test]
    fn length_one_is_zero_with_many_edges() {
        assert_eq!(theta(&catalog::cycle(4), 1).unwrap(), big(0));
    }

    #[test]
    fn cycle_five_has_one_euler_cycle() {
        assert_eq!(euler_count(&catalog::cycle(5)).unwrap(), big(1));
    }

    #[test]
    fn zero_length_rejected() {
        assert!(matches!(
            omega(&catalog::theta(), 0),
            Err(Error::ZeroLength)
        ));
        assert!(matches!(
            theta(&catalog::theta(), 0),
            Err(Error::ZeroLength)
        ));
    }

    #[test]
    fn disconnected_and_oversized_rejected() {
        let split = MultiGraph::undirected(4, vec![(0, 1), (0, 1), (2, 3), (2, 3)]).unwrap();
        assert!(matches!(omega(&split, 4), Err(Error::Disconnected)));
        let config = CensusConfig {
            subset_limit: 2,
            ..CensusConfig::default()
        };
        assert!(matches!(
            Census::new(&catalog::theta(), config),
            Err(Error::SubsetLimit { count: 3, .. })
        ));
    }

    #[test]
    fn orientation_is_checked() {
        assert!(omega(&catalog::directed_cycle(3), 3).is_err());
        assert!(omega_directed(&catalog::theta(), 3).is_err());
        assert!(euler_count(&catalog::directed_cycle(3)).is_err());
        assert!(hamiltonian_count(&catalog::theta(), CensusConfig::default()).is_err());
    }

    #[test]
    fn pendant_edges_are_pruned_before_counting() {
        let mut edges = catalog::cycle(3).edges().to_vec();
        edges.push((0, 3));
        let g = MultiGraph::undirected(4, edges).unwrap();
        let census = Census::with_defaults(&g).unwrap();
        assert!(census.leaves_pruned());
        assert_eq!(census.edge_count(), 3);
        assert_eq!(census.euler_count().unwrap(), big(1));
    }

    #[test]
    fn directed_counts() {
        let c3 = catalog::directed_cycle(3);
        assert_eq!(omega_directed(&c3, 3).unwrap(), big(3));
        assert_eq!(theta_directed(&c3, 3).unwrap(), big(1));
        assert_eq!(omega_directed(&c3, 2).unwrap(), big(0));

        let loops = MultiGraph::directed(1, vec![(0, 0), (0, 0)]).unwrap();
        assert_eq!(omega_directed(&loops, 2).unwrap(), big(2));
        assert_eq!(theta_directed(&loops, 2).unwrap(), big(1));
    }

    #[test]
    fn hamiltonian_counts() {
        let config = CensusConfig::default();
        let c3 = hamiltonian_count(&catalog::directed_cycle(3), config).unwrap();
        assert_eq!(c3.classes, big(1));
        assert_eq!(c3.marked, big(3));
        assert_eq!(c3.halved, BigRational::new(big(1), big(2)));
        assert!(!c3.halved_agrees());

        let c2 = hamiltonian_count(&catalog::directed_cycle(2), config).unwrap();
        assert_eq!(c2.classes, big(1));

        let k3 = hamiltonian_count(&catalog::complete_directed(3), config).unwrap();
        assert_eq!(k3.classes, big(2));
        assert_eq!(k3.halved, BigRational::from_integer(big(1)));
    }

    #[test]
    fn unpruned_subgraphs_give_the_same_counts() {
        let g = MultiGraph::undirected(3, vec![(0, 1), (1, 2), (2, 0), (0, 0), (1, 2)]).unwrap();
        let pruned = Census::with_defaults(&g).unwrap();
        let plain = Census::new(
            &g,
            CensusConfig {
                prune_subgraphs: false,
                ..CensusConfig::default()
            },
        )
        .unwrap();
        assert_eq!(pruned.omega_range(9), plain.omega_range(9));
    }

    #[test]
    fn table_power_sums_reconstruct_omega() {
        let table = Census::with_defaults(&catalog::rose(3))
            .unwrap()
            .table(10)
            .unwrap();
        for n in 1..=10 {
            assert_eq!(&table.power_sum(n).unwrap(), table.omega(n).unwrap());
        }
        assert!(matches!(table.omega(11), Err(Error::MissingOmega(11))));
    }

    #[test]
    fn non_divisible_mobius_sum_is_reported() {
        let err = primitive_count(3, |k| if k == 3 { big(4) } else { big(0) }).unwrap_err();
        assert!(matches!(err, Error::NonIntegral(_)));
    }
}

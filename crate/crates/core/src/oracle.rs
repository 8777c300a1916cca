//! Brute-force ground truth: depth-first enumeration of closed
//! non-backtracking walks, with covering, rotation-class and periodicity
//! bookkeeping done directly on the edge sequences.
//!
//! Nothing in here touches adjacency matrices; successor lists are built
//! straight from the edge endpoints.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// Default cap on visited partial walks.
pub const DEFAULT_CAP: u128 = 10_000_000;

/// A closed walk as a sequence of oriented-edge indices.
///
/// For undirected graphs index `i < |E|` is edge `i` as stored and
/// `i + |E|` its reverse; for directed graphs indices are edge labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalkSequence(pub Vec<usize>);

impl WalkSequence {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Moves the first `k` edges to the end.
    pub fn rotate(&self, k: usize) -> WalkSequence {
        let mut v = self.0.clone();
        let shift = k % v.len().max(1);
        v.rotate_left(shift);
        WalkSequence(v)
    }

    /// Lexicographically smallest rotation.
    pub fn canonical(&self) -> WalkSequence {
        let n = self.len();
        let rotation = |k: usize| self.0[k..].iter().chain(&self.0[..k]);
        let best = (1..n).fold(0, |best, k| {
            if rotation(k).lt(rotation(best)) {
                k
            } else {
                best
            }
        });
        self.rotate(best)
    }

    /// Length of the shortest block `q` with `self = q^r`.
    pub fn primitive_length(&self) -> usize {
        let n = self.len();
        (1..=n)
            .find(|&p| n % p == 0 && (p..n).all(|i| self.0[i] == self.0[i - p]))
            .unwrap_or(n)
    }

    pub fn is_periodic(&self) -> bool {
        self.primitive_length() < self.len()
    }
}

/// Oriented edges of the walk space with their successor lists.
#[derive(Clone, Debug)]
pub struct WalkSpace {
    directed: bool,
    edge_count: usize,
    origin: Vec<usize>,
    end: Vec<usize>,
    successors: Vec<Vec<usize>>,
}

impl WalkSpace {
    pub fn new(g: &MultiGraph) -> Self {
        let e = g.edge_count();
        let (origin, end): (Vec<usize>, Vec<usize>) = if g.is_directed() {
            g.edges().iter().copied().unzip()
        } else {
            g.edges()
                .iter()
                .copied()
                .chain(g.edges().iter().map(|&(u, v)| (v, u)))
                .unzip()
        };
        let size = origin.len();
        let mut space = WalkSpace {
            directed: g.is_directed(),
            edge_count: e,
            origin,
            end,
            successors: Vec::new(),
        };
        space.successors = (0..size)
            .map(|i| (0..size).filter(|&j| space.may_follow(i, j)).collect())
            .collect();
        space
    }

    pub fn size(&self) -> usize {
        self.origin.len()
    }

    fn reverse(&self, i: usize) -> Option<usize> {
        (!self.directed).then(|| {
            if i < self.edge_count {
                i + self.edge_count
            } else {
                i - self.edge_count
            }
        })
    }

    fn label(&self, i: usize) -> usize {
        i % self.edge_count.max(1)
    }

    /// `j` may come right after `i` in a walk.
    pub fn may_follow(&self, i: usize, j: usize) -> bool {
        self.end[i] == self.origin[j] && self.reverse(i) != Some(j)
    }

    /// Whether `walk` is a closed non-backtracking tail-less walk.
    pub fn is_cycle(&self, walk: &WalkSequence) -> bool {
        let n = walk.len();
        n > 0 && (0..n).all(|k| self.may_follow(walk.0[k], walk.0[(k + 1) % n]))
    }

    /// Reversal of an undirected walk; `None` for directed graphs.
    pub fn inverse(&self, walk: &WalkSequence) -> Option<WalkSequence> {
        walk.0
            .iter()
            .rev()
            .map(|&i| self.reverse(i))
            .collect::<Option<Vec<_>>>()
            .map(WalkSequence)
    }

    pub fn covers_all_edges(&self, walk: &WalkSequence) -> bool {
        let labels: HashSet<usize> = walk.0.iter().map(|&i| self.label(i)).collect();
        labels.len() == self.edge_count
    }

    /// Number of partial walks a depth-first search to depth `n` visits.
    pub fn estimate(&self, n: usize) -> u128 {
        let mut ending: Vec<u128> = vec![1; self.size()];
        let mut total: u128 = ending.iter().sum();
        for _ in 1..n {
            let mut next = vec![0u128; self.size()];
            for (i, &count) in ending.iter().enumerate() {
                for &j in &self.successors[i] {
                    next[j] = next[j].saturating_add(count);
                }
            }
            ending = next;
            total = total.saturating_add(ending.iter().fold(0u128, |a, &b| a.saturating_add(b)));
        }
        total
    }

    fn guard(&self, n: usize, cap: u128) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let estimate = self.estimate(n);
        if estimate > cap {
            return Err(Error::OracleCap { estimate, cap });
        }
        Ok(())
    }

    /// Calls `visit` on every closed walk of length `n` (marked start).
    pub fn for_each_cycle(
        &self,
        n: usize,
        cap: u128,
        mut visit: impl FnMut(&[usize]),
    ) -> Result<()> {
        self.guard(n, cap)?;
        let mut path = Vec::with_capacity(n);
        for start in 0..self.size() {
            path.push(start);
            self.extend(n, &mut path, &mut visit);
            path.pop();
        }
        Ok(())
    }

    fn extend(&self, n: usize, path: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
        let last = *path.last().expect("non-empty");
        if path.len() == n {
            if self.may_follow(last, path[0]) {
                visit(path);
            }
            return;
        }
        for &next in &self.successors[last] {
            path.push(next);
            self.extend(n, path, visit);
            path.pop();
        }
    }
}

/// Every count the oracle produces for one length.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WalkCensus {
    pub length: usize,
    pub closed: u128,
    pub covering: u128,
    /// Canonical representative of each covering rotation class, with the
    /// number of enumerated walks in it.
    pub classes: HashMap<WalkSequence, usize>,
}

impl WalkCensus {
    pub fn nonperiodic_classes(&self) -> usize {
        self.classes.keys().filter(|w| !w.is_periodic()).count()
    }

    /// Nonperiodic classes have `N` members; period-`r` classes `N / r`.
    pub fn class_sizes_consistent(&self) -> bool {
        self.classes
            .iter()
            .all(|(rep, &members)| members == rep.primitive_length())
    }
}

pub fn walk_census(g: &MultiGraph, n: usize, cap: u128) -> Result<WalkCensus> {
    let space = WalkSpace::new(g);
    let mut census = WalkCensus {
        length: n,
        ..WalkCensus::default()
    };
    let mut used = vec![0usize; g.edge_count()];
    space.for_each_cycle(n, cap, |walk| {
        census.closed += 1;
        used.iter_mut().for_each(|u| *u = 0);
        for &i in walk {
            used[space.label(i)] += 1;
        }
        if used.iter().all(|&u| u > 0) {
            census.covering += 1;
            let rep = WalkSequence(walk.to_vec()).canonical();
            *census.classes.entry(rep).or_insert(0) += 1;
        }
    })?;
    Ok(census)
}

pub fn enumerate_cycles(g: &MultiGraph, n: usize, cap: u128) -> Result<Vec<WalkSequence>> {
    let mut out = Vec::new();
    WalkSpace::new(g).for_each_cycle(n, cap, |w| out.push(WalkSequence(w.to_vec())))?;
    Ok(out)
}

pub fn count_closed_walks(g: &MultiGraph, n: usize, cap: u128) -> Result<BigInt> {
    Ok(walk_census(g, n, cap)?.closed.into())
}

/// Closed walks of length `n` using every edge of `g` as given.
pub fn count_covering_walks(g: &MultiGraph, n: usize, cap: u128) -> Result<BigInt> {
    Ok(walk_census(g, n, cap)?.covering.into())
}

pub fn count_nonperiodic_classes(g: &MultiGraph, n: usize, cap: u128) -> Result<BigInt> {
    Ok(walk_census(g, n, cap)?.nonperiodic_classes().into())
}

/// Euler cycles up to rotation and reversal. Fails if some class is a
/// rotation of its own reversal.
pub fn count_euler_classes(g: &MultiGraph, cap: u128) -> Result<BigInt> {
    if g.is_directed() {
        return Err(Error::Orientation {
            expected: "undirected",
        });
    }
    let e = g.edge_count();
    if e == 0 {
        return Ok(BigInt::from(0));
    }
    let space = WalkSpace::new(g);
    let census = walk_census(g, e, cap)?;
    let mut reps: Vec<&WalkSequence> = census.classes.keys().filter(|w| !w.is_periodic()).collect();
    reps.sort();
    for rep in &reps {
        let inv = space.inverse(rep).expect("undirected").canonical();
        if &inv == *rep {
            return Err(Error::SelfInverseClass(rep.0.clone()));
        }
    }
    Ok(BigInt::from(reps.len() / 2))
}

/// Covering rotation classes of length `n` that equal a rotation of their
/// own reversal.
pub fn self_inverse_classes(g: &MultiGraph, n: usize, cap: u128) -> Result<usize> {
    let space = WalkSpace::new(g);
    let census = walk_census(g, n, cap)?;
    Ok(census
        .classes
        .keys()
        .filter(|rep| {
            space
                .inverse(rep)
                .is_some_and(|inv| inv.canonical() == **rep)
        })
        .count())
}

/// Directed closed walks of length `|V|` through every vertex once, up to
/// rotation.
pub fn count_hamiltonian_classes(g: &MultiGraph, cap: u128) -> Result<BigInt> {
    if !g.is_directed() {
        return Err(Error::Orientation {
            expected: "directed",
        });
    }
    let n = g.vertex_count();
    let space = WalkSpace::new(g);
    let mut reps = HashSet::new();
    space.for_each_cycle(n, cap, |walk| {
        let mut seen = vec![false; n];
        let distinct = walk
            .iter()
            .all(|&i| !std::mem::replace(&mut seen[space.origin[i]], true));
        if distinct {
            reps.insert(WalkSequence(walk.to_vec()).canonical());
        }
    })?;
    Ok(BigInt::from(reps.len()))
}

//! Multigraphs with loops and parallel edges, the oriented edge space of an
//! undirected graph, and the adjacency matrices built on top of them.
//!
//! Undirected edges are stored with the orientation they were given in; that
//! orientation is arbitrary but fixed, and every count in this crate is
//! invariant under flipping it.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::algebra::IntMatrix;
use crate::error::{Error, Result};

/// Largest edge or vertex count a bitmask subset can address.
pub const MAX_SUBSET_BITS: usize = 63;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    directed: bool,
}

impl MultiGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>, directed: bool) -> Result<Self> {
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        edge: i,
                        vertex: w,
                        vertex_count,
                    });
                }
            }
        }
        Ok(MultiGraph {
            vertex_count,
            edges,
            directed,
        })
    }

    pub fn undirected(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(vertex_count, edges, false)
    }

    pub fn directed(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(vertex_count, edges, true)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    fn require_undirected(&self) -> Result<()> {
        if self.directed {
            Err(Error::Orientation {
                expected: "undirected",
            })
        } else {
            Ok(())
        }
    }

    fn require_directed(&self) -> Result<()> {
        if self.directed {
            Ok(())
        } else {
            Err(Error::Orientation {
                expected: "directed",
            })
        }
    }

    /// Total degree; a loop counts twice.
    pub fn degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .map(|&(u, v)| usize::from(u == vertex) + usize::from(v == vertex))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Weak connectivity over all vertices. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Two-colourability of the underlying undirected graph. Loops make a
    /// graph non-bipartite.
    pub fn is_bipartite(&self) -> bool {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            if u == v {
                return false;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut colour: Vec<Option<bool>> = vec![None; self.vertex_count];
        for start in 0..self.vertex_count {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].unwrap();
                for &w in &adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// The oriented edge space `G'` of an undirected graph.
    pub fn symmetrize(&self) -> Result<DirectedEdgeSpace> {
        self.require_undirected()?;
        Ok(DirectedEdgeSpace::from_edges(&self.edges))
    }

    /// Non-backtracking edge adjacency matrix `T` (size `2|E|`).
    pub fn edge_adjacency_matrix(&self) -> Result<IntMatrix> {
        Ok(self.symmetrize()?.edge_adjacency_matrix())
    }

    /// Directed edge adjacency matrix `S`: `S[i][j] = 1` iff edge `i` ends
    /// where edge `j` starts.
    pub fn directed_edge_matrix(&self) -> Result<IntMatrix> {
        self.require_directed()?;
        let n = self.edges.len();
        let mut s = IntMatrix::zeros(n);
        for (i, &(_, end)) in self.edges.iter().enumerate() {
            for (j, &(origin, _)) in self.edges.iter().enumerate() {
                if end == origin {
                    s.set(i, j, BigInt::one());
                }
            }
        }
        Ok(s)
    }

    /// Directed vertex adjacency matrix `A_d`: entry `(i, j)` counts arcs
    /// from `i` to `j`.
    pub fn directed_vertex_matrix(&self) -> Result<IntMatrix> {
        self.require_directed()?;
        let mut a = IntMatrix::zeros(self.vertex_count);
        let one = BigInt::one();
        for &(u, v) in &self.edges {
            a.add_to(u, v, &one);
        }
        Ok(a)
    }

    /// The matrix whose traces count this graph's cycles: `T` when
    /// undirected, `S` when directed.
    pub fn cycle_matrix(&self) -> IntMatrix {
        if self.directed {
            self.directed_edge_matrix().expect("directed")
        } else {
            self.edge_adjacency_matrix().expect("undirected")
        }
    }

    /// Removes the edges in `subset`; vertices stay, survivors keep order.
    pub fn delete_edges(&self, subset: EdgeSubset) -> MultiGraph {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| !subset.contains(i))
            .map(|(_, &e)| e)
            .collect();
        MultiGraph {
            vertex_count: self.vertex_count,
            edges,
            directed: self.directed,
        }
    }

    /// Labels of the edges that survive iterated removal of edges at
    /// degree-one vertices.
    pub fn core_edge_labels(&self) -> Result<Vec<usize>> {
        self.require_undirected()?;
        let mut deg = self.degrees();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.vertex_count];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(i);
            if u != v {
                incident[v].push(i);
            }
        }
        let mut alive = vec![true; self.edges.len()];
        let mut stack: Vec<usize> = (0..self.vertex_count).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            if deg[v] != 1 {
                continue;
            }
            // Degree one means a single non-loop edge remains.
            let Some(&e) = incident[v].iter().find(|&&e| alive[e]) else {
                continue;
            };
            alive[e] = false;
            let (a, b) = self.edges[e];
            let other = if a == v { b } else { a };
            deg[v] -= 1;
            deg[other] -= 1;
            if deg[other] == 1 {
                stack.push(other);
            }
        }
        Ok((0..self.edges.len()).filter(|&i| alive[i]).collect())
    }

    /// Iteratively deletes edges incident to degree-one vertices. Closed
    /// non-backtracking tail-less walks never use such edges, so every trace
    /// of `T` is unchanged.
    pub fn prune_leaves(&self) -> Result<MultiGraph> {
        let keep = self.core_edge_labels()?;
        Ok(MultiGraph {
            vertex_count: self.vertex_count,
            edges: keep.iter().map(|&i| self.edges[i]).collect(),
            directed: false,
        })
    }

    /// Same graph with edge `i` stored in the opposite orientation.
    pub fn flip_edge(&self, i: usize) -> MultiGraph {
        let mut g = self.clone();
        let (u, v) = g.edges[i];
        g.edges[i] = (v, u);
        g
    }

    /// Same graph with edges listed in the order given by `order`
    /// (a permutation of edge labels).
    pub fn reorder_edges(&self, order: &[usize]) -> MultiGraph {
        assert_eq!(order.len(), self.edges.len());
        let mut g = self.clone();
        g.edges = order.iter().map(|&i| self.edges[i]).collect();
        g
    }

    /// Stable 64-bit FNV-1a fingerprint of the canonical text form.
    pub fn fingerprint(&self) -> u64 {
        let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in self.to_string().bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(0x0100_0000_01b3);
        }
        hash
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "directed {}", u8::from(self.directed))?;
        writeln!(f, "vertices {}", self.vertex_count)?;
        for &(u, v) in &self.edges {
            writeln!(f, "edge {u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for MultiGraph {
    type Err = Error;

    /// Line-oriented format:
    ///
    /// ```text
    /// directed 0
    /// vertices 2
    /// edge 0 1
    /// ```
    ///
    /// `#` starts a comment; blank lines are ignored.
    fn from_str(text: &str) -> Result<Self> {
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let mut directed = None;
        let mut vertices = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let number = |s: &str| {
                s.parse::<usize>().map_err(|_| {
                    parse_err(
                        line_no,
                        format!("expected a nonnegative integer, got `{s}`"),
                    )
                })
            };
            match (fields[0], directed.is_some(), vertices.is_some()) {
                ("directed", false, false) if fields.len() == 2 => {
                    directed = Some(match fields[1] {
                        "0" => false,
                        "1" => true,
                        other => {
                            return Err(parse_err(
                                line_no,
                                format!("directed flag must be 0 or 1, got `{other}`"),
                            ))
                        }
                    });
                }
                ("vertices", true, false) if fields.len() == 2 => {
                    vertices = Some(number(fields[1])?);
                }
                ("edge", true, true) if fields.len() == 3 => {
                    edges.push((number(fields[1])?, number(fields[2])?));
                }
                _ => {
                    let expected = match (directed.is_some(), vertices.is_some()) {
                        (false, _) => "`directed 0|1`",
                        (true, false) => "`vertices <n>`",
                        (true, true) => "`edge <u> <v>`",
                    };
                    return Err(parse_err(
                        line_no,
                        format!("expected {expected}, got `{line}`"),
                    ));
                }
            }
        }
        let directed = directed.ok_or_else(|| parse_err(0, "missing `directed` line".into()))?;
        let vertices = vertices.ok_or_else(|| parse_err(0, "missing `vertices` line".into()))?;
        MultiGraph::new(vertices, edges, directed)
    }
}

/// The `2|E|` oriented edges of an undirected graph. Oriented edge `i < |E|`
/// is undirected edge `i` as stored; `i + |E|` is its reverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedEdgeSpace {
    edge_count: usize,
    origin: Vec<usize>,
    end: Vec<usize>,
}

impl DirectedEdgeSpace {
    fn from_edges(edges: &[(usize, usize)]) -> Self {
        let origin = edges
            .iter()
            .map(|e| e.0)
            .chain(edges.iter().map(|e| e.1))
            .collect();
        let end = edges
            .iter()
            .map(|e| e.1)
            .chain(edges.iter().map(|e| e.0))
            .collect();
        DirectedEdgeSpace {
            edge_count: edges.len(),
            origin,
            end,
        }
    }

    pub fn size(&self) -> usize {
        2 * self.edge_count
    }

    pub fn undirected_edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn inverse(&self, i: usize) -> usize {
        (i + self.edge_count) % self.size()
    }

    pub fn origin(&self, i: usize) -> usize {
        self.origin[i]
    }

    pub fn end(&self, i: usize) -> usize {
        self.end[i]
    }

    /// Label of the undirected edge underlying oriented edge `i`.
    pub fn undirected_label(&self, i: usize) -> usize {
        i % self.edge_count
    }

    /// `T[i][j] = 1` iff `end(i) = origin(j)` and `j != inverse(i)`.
    pub fn edge_adjacency_matrix(&self) -> IntMatrix {
        let n = self.size();
        let mut t = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                if self.end[i] == self.origin[j] && j != self.inverse(i) {
                    t.set(i, j, BigInt::one());
                }
            }
        }
        t
    }
}

/// A set of undirected edge labels, as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct EdgeSubset(u64);

impl EdgeSubset {
    pub fn from_mask(mask: u64) -> Self {
        EdgeSubset(mask)
    }

    pub fn from_labels(labels: &[usize]) -> Self {
        EdgeSubset(labels.iter().fold(0, |m, &i| m | (1u64 << i)))
    }

    pub fn empty() -> Self {
        EdgeSubset(0)
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_SUBSET_BITS);
        EdgeSubset((1u64 << n) - 1)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    /// Number of deleted edges `k`.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Inclusion–exclusion sign `(-1)^k`.
    pub fn is_even(self) -> bool {
        self.len() % 2 == 0
    }
}

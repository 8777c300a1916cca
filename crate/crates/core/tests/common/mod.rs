#![allow(dead_code)]

use std::collections::BTreeSet;

use covering_cycles::MultiGraph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every connected multigraph with no vertex of degree below two, on up to
/// `max_vertices` vertices with `1..=max_edges` edges, one per isomorphism
/// class (canonical form by brute force over vertex permutations).
pub fn leaf_free_catalog(max_vertices: usize, max_edges: usize) -> Vec<MultiGraph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        let kinds: Vec<(usize, usize)> = (0..n).flat_map(|u| (u..n).map(move |v| (u, v))).collect();
        let mut stack: Vec<(usize, Vec<(usize, usize)>)> = vec![(0, Vec::new())];
        while let Some((from, edges)) = stack.pop() {
            if !edges.is_empty() {
                let g = MultiGraph::undirected(n, edges.clone()).unwrap();
                if g.is_connected()
                    && g.degrees().iter().all(|&d| d >= 2)
                    && seen.insert(canonical(&g))
                {
                    out.push(g);
                }
            }
            if edges.len() < max_edges {
                for k in from..kinds.len() {
                    let mut next = edges.clone();
                    next.push(kinds[k]);
                    stack.push((k, next));
                }
            }
        }
    }
    out.sort_by_key(|g| (g.edge_count(), g.vertex_count(), g.to_string()));
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn canonical(g: &MultiGraph) -> (usize, Vec<(usize, usize)>) {
    let best = permutations(g.vertex_count())
        .into_iter()
        .map(|perm| {
            let mut e: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (perm[u], perm[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            e.sort();
            e
        })
        .min()
        .unwrap();
    (g.vertex_count(), best)
}

/// Random connected undirected multigraph with every degree at least two.
/// Loops and parallel edges allowed.
pub fn random_leaf_free<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> MultiGraph {
    loop {
        let n = rng.gen_range(1..=max_vertices);
        let target = rng.gen_range(n.max(1)..=max_edges);
        let mut edges = Vec::new();
        for v in 1..n {
            edges.push((rng.gen_range(0..v), v));
        }
        while edges.len() < target {
            edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
        }
        edges.shuffle(rng);
        let edges = edges
            .into_iter()
            .map(|(u, v)| if rng.gen_bool(0.5) { (u, v) } else { (v, u) })
            .collect();
        let g = MultiGraph::undirected(n, edges).unwrap();
        if g.is_connected() && g.degrees().iter().all(|&d| d >= 2) {
            return g;
        }
    }
}

/// Random weakly connected directed multigraph.
pub fn random_directed<R: Rng>(rng: &mut R, max_vertices: usize, max_edges: usize) -> MultiGraph {
    loop {
        let n = rng.gen_range(1..=max_vertices);
        let target = rng.gen_range(n.max(1)..=max_edges);
        let mut edges = Vec::new();
        for v in 1..n {
            let u = rng.gen_range(0..v);
            edges.push(if rng.gen_bool(0.5) { (u, v) } else { (v, u) });
        }
        while edges.len() < target {
            edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
        }
        edges.shuffle(rng);
        let g = MultiGraph::directed(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

//! Small named graph families.

use crate::error::{Error, Result};
use crate::graph::MultiGraph;

/// `r` loops at a single vertex.
pub fn rose(r: usize) -> MultiGraph {
    MultiGraph::undirected(1, vec![(0, 0); r]).expect("valid")
}

/// Two vertices joined by three parallel edges, all oriented 0 → 1.
pub fn theta() -> MultiGraph {
    MultiGraph::undirected(2, vec![(0, 1); 3]).expect("valid")
}

/// Undirected cycle on `n` vertices. `n = 1` is a single loop and `n = 2`
/// a pair of parallel edges.
pub fn cycle(n: usize) -> MultiGraph {
    assert!(n >= 1);
    MultiGraph::undirected(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("valid")
}

/// Directed cycle `0 → 1 → ... → n-1 → 0`.
pub fn directed_cycle(n: usize) -> MultiGraph {
    assert!(n >= 1);
    MultiGraph::directed(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("valid")
}

/// Complete directed graph: every ordered pair of distinct vertices once.
pub fn complete_directed(n: usize) -> MultiGraph {
    let arcs = (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect();
    MultiGraph::directed(n, arcs).expect("valid")
}

/// Parses `rose:R`, `theta`, `cycle:n`, `dircycle:n` or `dircomplete:n`.
pub fn builtin(name: &str) -> Result<MultiGraph> {
    let err = |message: String| Error::Parse { line: 0, message };
    let (family, arg) = match name.split_once(':') {
        Some((f, a)) => (f, Some(a)),
        None => (name, None),
    };
    let size = || -> Result<usize> {
        let a = arg.ok_or_else(|| {
            err(format!(
                "builtin `{family}` needs a size, e.g. `{family}:3`"
            ))
        })?;
        match a.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(err(format!("invalid size `{a}` for builtin `{family}`"))),
        }
    };
    match family {
        "rose" => Ok(rose(size()?)),
        "theta" if arg.is_none() => Ok(theta()),
        "cycle" => Ok(cycle(size()?)),
        "dircycle" => Ok(directed_cycle(size()?)),
        "dircomplete" => Ok(complete_directed(size()?)),
        _ => Err(err(format!("unknown builtin graph `{name}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("rose:2").unwrap(), rose(2));
        assert_eq!(builtin("theta").unwrap(), theta());
        assert_eq!(builtin("cycle:5").unwrap().edge_count(), 5);
        assert!(builtin("dircycle:3").unwrap().is_directed());
        assert_eq!(builtin("dircomplete:3").unwrap().edge_count(), 6);
        for bad in ["rose", "rose:0", "rose:x", "theta:2", "petersen"] {
            assert!(builtin(bad).is_err(), "{bad}");
        }
    }
}

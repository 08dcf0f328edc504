//! Named graphs: small cycles and cliques, and the 11-vertex graph G11 whose
//! OLD number is 6 and whose RED:OLD number is 9 (attained by a unique set).

use crate::error::{input, Error, Result};
use crate::graph::Graph;

/// Three triangles `{v1,v2,v3}`, `{v5,v6,v7}`, `{v9,v10,v11}` chained through
/// `v4` (joining v3 and v7) and `v8` (joining v7 and v9). Indices are 0-based;
/// the labels carry the 1-based names.
pub const G11_EDGES: [(usize, usize); 13] = [
    (0, 1),
    (0, 2),
    (1, 2),
    (2, 3),
    (3, 6),
    (4, 5),
    (4, 6),
    (5, 6),
    (6, 7),
    (7, 8),
    (8, 9),
    (8, 10),
    (9, 10),
];

/// The OLD(G11)-set `{v2,v3,v6,v7,v9,v10}` (0-based).
pub const G11_OLD_SET: [usize; 6] = [1, 2, 5, 6, 8, 9];

/// The unique RED:OLD(G11)-set `{v1,v2,v3,v5,v6,v7,v9,v10,v11}` (0-based).
pub const G11_REDOLD_SET: [usize; 9] = [0, 1, 2, 4, 5, 6, 8, 9, 10];

pub fn g11() -> Graph {
    let labels = (1..=11).map(|i| format!("v{i}")).collect();
    let g = Graph::new(11, &G11_EDGES)
        .and_then(|g| g.with_labels(labels))
        .expect("G11 edge table");
    check_g11(&g).expect("G11 transcription");
    g
}

/// Checks the adjacency facts any faithful transcription of G11 must satisfy:
/// the three triangles and the restricted neighborhoods under the OLD set.
fn check_g11(g: &Graph) -> Result<()> {
    let v = |i: usize| i - 1;
    for t in [[1, 2, 3], [5, 6, 7], [9, 10, 11]] {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            if !g.has_edge(v(a), v(b)) {
                return Err(Error::Fixture(format!("G11: v{a}v{b} missing from triangle")));
            }
        }
    }
    let s = crate::VertexSet::from_indices(11, G11_OLD_SET).unwrap();
    let expect: [(usize, &[usize]); 5] = [
        (1, &[2, 3]),
        (2, &[3]),
        (3, &[2]),
        (4, &[3, 7]),
        (8, &[7, 9]),
    ];
    for (x, want) in expect {
        let got: Vec<usize> = g.nbrs(v(x)).intersection(&s).iter().map(|i| i + 1).collect();
        if got != want {
            return Err(Error::Fixture(format!("G11: N(v{x}) ∩ S = {got:?}, expected {want:?}")));
        }
    }
    Ok(())
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle needs n >= 3")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges).unwrap()
}

pub fn c4() -> Graph {
    cycle(4)
}

pub fn c5() -> Graph {
    cycle(5)
}

pub fn k4() -> Graph {
    complete(4)
}

pub fn p3() -> Graph {
    path(3)
}

pub const NAMES: [&str; 5] = ["g11", "c4", "c5", "k4", "p3"];

/// Looks up a graph by name, with or without the `builtin:` prefix.
pub fn builtin(name: &str) -> Result<Graph> {
    match name.strip_prefix("builtin:").unwrap_or(name) {
        "g11" => Ok(g11()),
        "c4" => Ok(c4()),
        "c5" => Ok(c5()),
        "k4" => Ok(k4()),
        "p3" => Ok(p3()),
        other => input(format!("unknown builtin graph '{other}'")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g11_shape() {
        let g = g11();
        assert_eq!(g.n(), 11);
        assert_eq!(g.edge_count(), 13);
        assert_eq!(g.label(3), "v4");
    }

    #[test]
    fn g11_check_catches_bad_tables() {
        let mut edges = G11_EDGES.to_vec();
        edges.retain(|&e| e != (3, 6));
        let g = Graph::new(11, &edges).unwrap();
        assert!(check_g11(&g).is_err());
    }

    #[test]
    fn builtins_resolve() {
        for name in NAMES {
            assert!(builtin(&format!("builtin:{name}")).is_ok());
        }
        assert!(builtin("builtin:nope").is_err());
    }
}

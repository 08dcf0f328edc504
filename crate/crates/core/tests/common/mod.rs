#![allow(dead_code)]

use rand::Rng;
use redold::reduce3sat::{CnfInstance, Literal};
use redold::{Graph, VertexSet};

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Every labeled simple graph on `n` vertices (bit `i` of the code is the
/// `i`-th pair in lexicographic order).
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |code| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| code >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).unwrap()
    })
}

pub fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |m| VertexSet::from_indices(n, (0..n).filter(|i| m >> i & 1 == 1)).unwrap())
}

pub fn literals(n: usize) -> Vec<Literal> {
    (0..n)
        .flat_map(|var| [false, true].map(|negated| Literal { var, negated }))
        .collect()
}

/// Every clause as a multiset of three literals.
pub fn all_clauses(n: usize) -> Vec<[Literal; 3]> {
    let lits = literals(n);
    let k = lits.len();
    let mut out = Vec::new();
    for a in 0..k {
        for b in a..k {
            for c in b..k {
                out.push([lits[a], lits[b], lits[c]]);
            }
        }
    }
    out
}

/// Every formula over `n` variables with at most `max_m` clauses, clause
/// order ignored.
pub fn all_formulas(n: usize, max_m: usize) -> Vec<CnfInstance> {
    let clauses = all_clauses(n);
    let mut out = vec![CnfInstance::new(n, vec![]).unwrap()];
    let mut frontier: Vec<(usize, Vec<[Literal; 3]>)> = vec![(0, vec![])];
    for _ in 0..max_m {
        let mut next = Vec::new();
        for (start, cs) in &frontier {
            for (i, c) in clauses.iter().enumerate().skip(*start) {
                let mut cs2 = cs.clone();
                cs2.push(*c);
                out.push(CnfInstance::new(n, cs2.clone()).unwrap());
                next.push((i, cs2));
            }
        }
        frontier = next;
    }
    out
}

pub fn random_formula<R: Rng>(rng: &mut R, n: usize, m: usize) -> CnfInstance {
    let lits = literals(n);
    let clauses = (0..m)
        .map(|_| [(); 3].map(|_| lits[rng.gen_range(0..lits.len())]))
        .collect();
    CnfInstance::new(n, clauses).unwrap()
}

pub fn sample_formula() -> CnfInstance {
    CnfInstance::from_signed(4, &[[1, 2, -3], [-1, 2, -4]]).unwrap()
}

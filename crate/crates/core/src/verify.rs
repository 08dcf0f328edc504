//! Verifiers for the distinguishing-set family.
//!
//! Everything reduces to two counters: the number of detectors in `N(v)` and
//! the number of detectors in `N(u) △ N(v)`. A set is OLD when every vertex is
//! dominated at least once and every pair is distinguished at least once; it
//! is RED:OLD when both thresholds are two.

use crate::error::{input, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    UnderDominated { vertex: usize, count: usize },
    UnderDistinguished { u: usize, v: usize, count: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    pub const OK: Self = VerificationReport {
        holds: true,
        witness: None,
    };

    fn fail(w: Witness) -> Self {
        VerificationReport {
            holds: false,
            witness: Some(w),
        }
    }
}

/// `|N(v) ∩ S|`.
pub fn domination_count(g: &Graph, s: &VertexSet, v: usize) -> Result<usize> {
    Ok(g.open_neighborhood(v)?.intersection_len(s))
}

/// `|(N(u) ∩ S) △ (N(v) ∩ S)|`.
pub fn distinguishing_count(g: &Graph, s: &VertexSet, u: usize, v: usize) -> Result<usize> {
    if u == v {
        return input(format!("distinguishing count needs distinct vertices, got {u} twice"));
    }
    let (nu, nv) = (g.open_neighborhood(u)?, g.open_neighborhood(v)?);
    Ok(nu.symmetric_difference_len_within(nv, s))
}

/// Every vertex has at least `k` neighbors in `s`. The witness is the first
/// failing vertex by index.
pub fn is_open_dominating(g: &Graph, s: &VertexSet, k: usize) -> VerificationReport {
    for v in 0..g.n() {
        let count = g.nbrs(v).intersection_len(s);
        if count < k {
            return VerificationReport::fail(Witness::UnderDominated { vertex: v, count });
        }
    }
    VerificationReport::OK
}

/// k-fold open domination plus k-distinguishing of every pair; `k = 1` is OLD
/// and `k = 2` is RED:OLD. Pairs are scanned in lexicographic order.
pub fn is_k_old(g: &Graph, s: &VertexSet, k: usize) -> VerificationReport {
    let dom = is_open_dominating(g, s, k);
    if !dom.holds {
        return dom;
    }
    let n = g.n();
    for u in 0..n {
        for v in u + 1..n {
            let count = g.nbrs(u).symmetric_difference_len_within(g.nbrs(v), s);
            if count < k {
                return VerificationReport::fail(Witness::UnderDistinguished { u, v, count });
            }
        }
    }
    VerificationReport::OK
}

pub fn is_old(g: &Graph, s: &VertexSet) -> VerificationReport {
    is_k_old(g, s, 1)
}

pub fn is_red_old(g: &Graph, s: &VertexSet) -> VerificationReport {
    is_k_old(g, s, 2)
}

pub fn check(g: &Graph, s: &VertexSet, kind: crate::Kind) -> VerificationReport {
    is_k_old(g, s, kind.fold())
}

/// OLD straight from its definition: an open-dominating set under which no
/// two vertices see the same detectors.
pub fn is_old_by_traces(g: &Graph, s: &VertexSet) -> bool {
    if !is_open_dominating(g, s, 1).holds {
        return false;
    }
    let traces: Vec<VertexSet> = (0..g.n()).map(|v| g.nbrs(v).intersection(s)).collect();
    let mut seen = std::collections::HashSet::new();
    traces.iter().all(|t| seen.insert(t))
}

/// RED:OLD by deletion: `S` is open-dominating and `S - {v}` is OLD for every
/// member `v`.
pub fn is_red_old_definitional(g: &Graph, s: &VertexSet) -> VerificationReport {
    let dom = is_open_dominating(g, s, 1);
    if !dom.holds {
        return dom;
    }
    for v in s {
        let mut r = s.clone();
        r.remove(v);
        let rep = is_old(g, &r);
        if !rep.holds {
            return rep;
        }
    }
    VerificationReport::OK
}

/// The subsets cover `0..universe` and every pair of distinct elements is
/// separated by some subset containing exactly one of them.
pub fn is_distinguishing_collection(universe: usize, subsets: &[VertexSet]) -> bool {
    if subsets.iter().any(|s| s.universe() != universe) {
        return false;
    }
    let mut cover = VertexSet::empty(universe);
    for s in subsets {
        cover.union_with(s);
    }
    if cover.len() != universe {
        return false;
    }
    // Elements are separated exactly when their membership signatures differ.
    let mut seen = std::collections::HashSet::new();
    (0..universe).all(|x| {
        let sig: Vec<bool> = subsets.iter().map(|s| s.contains(x)).collect();
        seen.insert(sig)
    })
}

/// `{N(w) : w ∈ S}` as a collection.
pub fn open_collection(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    s.iter().map(|w| g.nbrs(w).clone()).collect()
}

pub fn is_old_collection(g: &Graph, s: &VertexSet) -> bool {
    is_distinguishing_collection(g.n(), &open_collection(g, s))
}

/// Locating-dominating: `{{w}, N(w) : w ∈ S}` is distinguishing.
pub fn is_locating_dominating(g: &Graph, s: &VertexSet) -> bool {
    let n = g.n();
    let coll: Vec<VertexSet> = s
        .iter()
        .flat_map(|w| [VertexSet::from_indices(n, [w]).unwrap(), g.nbrs(w).clone()])
        .collect();
    is_distinguishing_collection(n, &coll)
}

/// Identifying code: `{N[w] : w ∈ S}` is distinguishing.
pub fn is_identifying_code(g: &Graph, s: &VertexSet) -> bool {
    let coll: Vec<VertexSet> = s
        .iter()
        .map(|w| g.closed_neighborhood(w).unwrap())
        .collect();
    is_distinguishing_collection(g.n(), &coll)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{self, G11_OLD_SET, G11_REDOLD_SET};

    fn set(n: usize, xs: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn counters() {
        let c5 = fixtures::c5();
        let all = VertexSet::full(5);
        assert_eq!(domination_count(&c5, &all, 0).unwrap(), 2);
        assert_eq!(distinguishing_count(&c5, &all, 0, 1).unwrap(), 4);
        let p3 = fixtures::p3();
        assert_eq!(domination_count(&p3, &set(3, &[1]), 1).unwrap(), 0);
        let k4 = fixtures::k4();
        assert_eq!(distinguishing_count(&k4, &VertexSet::full(4), 0, 1).unwrap(), 2);
        assert!(distinguishing_count(&k4, &VertexSet::full(4), 2, 2).is_err());
        assert!(domination_count(&k4, &VertexSet::full(4), 4).is_err());
    }

    #[test]
    fn counters_on_g11() {
        let g = fixtures::g11();
        let s = set(11, &G11_OLD_SET);
        assert_eq!(domination_count(&g, &s, 3).unwrap(), 2);
        assert_eq!(distinguishing_count(&g, &s, 1, 2).unwrap(), 2);
    }

    #[test]
    fn domination_reports() {
        assert!(is_open_dominating(&fixtures::c5(), &VertexSet::full(5), 2).holds);
        let rep = is_open_dominating(&fixtures::p3(), &set(3, &[1]), 1);
        assert_eq!(
            rep.witness,
            Some(Witness::UnderDominated { vertex: 1, count: 0 })
        );
        let g = fixtures::g11();
        assert!(is_open_dominating(&g, &set(11, &G11_REDOLD_SET), 2).holds);
    }

    #[test]
    fn old_examples() {
        let g = fixtures::g11();
        assert!(is_old(&g, &set(11, &G11_OLD_SET)).holds);
        let rep = is_old(&fixtures::c4(), &VertexSet::full(4));
        assert_eq!(
            rep.witness,
            Some(Witness::UnderDistinguished { u: 0, v: 2, count: 0 })
        );
        assert!(is_old(&fixtures::c5(), &set(5, &[0, 1, 2, 3])).holds);
    }

    #[test]
    fn red_old_examples() {
        let g = fixtures::g11();
        let s = set(11, &G11_REDOLD_SET);
        assert!(is_red_old(&g, &s).holds);
        assert!(is_red_old_definitional(&g, &s).holds);
        for v in &s {
            let mut r = s.clone();
            r.remove(v);
            assert!(is_old(&g, &r).holds, "R_{} is not OLD", v + 1);
        }
        let k4 = fixtures::k4();
        assert!(is_red_old(&k4, &VertexSet::full(4)).holds);
        for skip in 0..4 {
            let s3 = VertexSet::from_indices(4, (0..4).filter(|&v| v != skip)).unwrap();
            assert!(!is_red_old(&k4, &s3).holds);
        }
        assert!(is_red_old(&fixtures::c5(), &VertexSet::full(5)).holds);
        assert!(!is_red_old_definitional(&g, &VertexSet::empty(11)).holds);
        // the 6-set cannot double-dominate: v1 sees only {v2, v3}, but v2 sees only v3
        let rep = is_red_old(&g, &set(11, &G11_OLD_SET));
        assert!(matches!(rep.witness, Some(Witness::UnderDominated { vertex: 1, count: 1 })));
    }

    #[test]
    fn collections() {
        let a = set(2, &[0]);
        let ab = set(2, &[0, 1]);
        assert!(is_distinguishing_collection(2, &[a.clone(), ab.clone()]));
        assert!(!is_distinguishing_collection(2, &[ab]));
        assert!(!is_distinguishing_collection(2, &[a]));
        let g = fixtures::g11();
        assert!(is_old_collection(&g, &set(11, &G11_OLD_SET)));
        assert!(!is_identifying_code(&fixtures::p3(), &set(3, &[1])));
        assert!(is_locating_dominating(&fixtures::k4(), &set(4, &[0, 1, 2])));
    }
}

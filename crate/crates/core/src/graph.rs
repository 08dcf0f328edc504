//! Finite simple undirected graphs.
//!
//! Vertices are `0..n`. Neighborhoods are stored as [`VertexSet`] bitsets, so
//! the neighborhood algebra the verifiers need (intersections, symmetric
//! differences restricted to a detector set) is word-parallel.

use crate::error::{input, Error, Result};
use crate::set::VertexSet;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// On-disk JSON shape: `{"n": .., "edges": [[u, v], ..], "labels": [..]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either orientation)
    /// collapse; self-loops and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u},{v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return input(format!("{} labels for {} vertices", labels.len(), self.n()));
        }
        let mut seen = std::collections::HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return input(format!("duplicate label '{l}'"));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            return input(format!("vertex {v} out of range 0..{}", self.n()));
        }
        Ok(())
    }

    /// N(v).
    pub fn open_neighborhood(&self, v: usize) -> Result<&VertexSet> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        let mut s = self.adj[v].clone();
        s.insert(v);
        Ok(s)
    }

    /// Unchecked N(v) for hot loops; panics when `v >= n`.
    #[inline]
    pub fn nbrs(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label, or the decimal index.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    /// Resolves a label or, failing that, a decimal index.
    pub fn resolve(&self, name: &str) -> Result<usize> {
        let name = name.trim();
        if let Some(labels) = &self.labels {
            if let Some(i) = labels.iter().position(|l| l == name) {
                return Ok(i);
            }
        }
        match name.parse::<usize>() {
            Ok(i) if i < self.n() => Ok(i),
            _ => input(format!("no vertex named '{name}'")),
        }
    }

    /// Parses a comma-separated list of labels or indices.
    pub fn parse_set(&self, spec: &str) -> Result<VertexSet> {
        let mut s = VertexSet::empty(self.n());
        for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            s.insert(self.resolve(tok)?);
        }
        Ok(s)
    }

    pub fn set_labels(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.label(v)).collect()
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            n: self.n(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
        }
    }

    pub fn from_json(j: &GraphJson) -> Result<Self> {
        let edges: Vec<_> = j.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::new(j.n, &edges)?;
        match &j.labels {
            Some(l) => g.with_labels(l.clone()),
            None => Ok(g),
        }
    }

    /// Reads either the JSON format or a plain edge list (`n m` header, then
    /// `m` lines of `u v`). Blank lines and `#` comments are skipped in the
    /// edge-list form.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            let j: GraphJson = serde_json::from_str(text)?;
            return Graph::from_json(&j);
        }
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            msg: "empty edge list".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            edges.push(parse_pair(line, l).map(|[u, v]| (u, v))?);
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: hline,
                msg: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2]> {
    let toks: Vec<_> = l.split_whitespace().collect();
    let bad = || Error::Parse {
        line,
        msg: format!("expected two non-negative integers, got '{l}'"),
    };
    if toks.len() != 2 {
        return Err(bad());
    }
    let a = toks[0].parse().map_err(|_| bad())?;
    let b = toks[1].parse().map_err(|_| bad())?;
    Ok([a, b])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn path_and_complete() {
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.open_neighborhood(1).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(p3.closed_neighborhood(1).unwrap().to_vec(), vec![0, 1, 2]);
        let k4 = fixtures::k4();
        assert!((0..4).all(|v| k4.degree(v) == 3));
        assert_eq!(k4.open_neighborhood(0).unwrap().to_vec(), vec![1, 2, 3]);
        assert_eq!(k4.closed_neighborhood(0).unwrap().to_vec(), vec![0, 1, 2, 3]);
        let c5 = fixtures::c5();
        assert_eq!(c5.open_neighborhood(0).unwrap().to_vec(), vec![1, 4]);
        assert_eq!(c5.closed_neighborhood(2).unwrap().to_vec(), vec![1, 2, 3]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::Input(_))));
        assert!(matches!(Graph::new(3, &[(0, 3)]), Err(Error::Input(_))));
        assert!(fixtures::c5().open_neighborhood(5).is_err());
        assert!(fixtures::c5().closed_neighborhood(9).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::new(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn edge_list_text() {
        let g = Graph::parse("# triangle\n3 3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(Graph::parse("3 2\n0 1\n").is_err());
        assert!(Graph::parse("3 1\n0 x\n").is_err());
    }

    #[test]
    fn labels_resolve() {
        let g = fixtures::g11();
        assert_eq!(g.resolve("v4").unwrap(), 3);
        assert_eq!(g.resolve("3").unwrap(), 3);
        assert!(g.resolve("v12").is_err());
        let s = g.parse_set("v2, v3,v6").unwrap();
        assert_eq!(s.to_vec(), vec![1, 2, 5]);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..20).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..60).prop_map(move |es| {
                let es: Vec<_> = es.into_iter().filter(|(u, v)| u != v).collect();
                Graph::new(n, &es).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn neighborhood_invariants(g in arb_graph()) {
            let mut deg_sum = 0;
            for v in 0..g.n() {
                let open = g.open_neighborhood(v).unwrap();
                prop_assert!(!open.contains(v));
                let mut closed = open.clone();
                closed.insert(v);
                prop_assert_eq!(&closed, &g.closed_neighborhood(v).unwrap());
                for u in open {
                    prop_assert!(g.has_edge(u, v));
                }
                deg_sum += open.len();
            }
            prop_assert_eq!(deg_sum, 2 * g.edge_count());
        }

        #[test]
        fn json_and_text_round_trip(g in arb_graph()) {
            let text = serde_json::to_string(&g.to_json()).unwrap();
            prop_assert_eq!(&Graph::parse(&text).unwrap(), &g);
            let mut el = format!("{} {}\n", g.n(), g.edge_count());
            for (u, v) in g.edges() {
                el.push_str(&format!("{u} {v}\n"));
            }
            prop_assert_eq!(&Graph::parse(&el).unwrap(), &g);
        }
    }
}

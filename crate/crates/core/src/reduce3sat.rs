//! The 3-SAT to RED:OLD reduction.
//!
//! Each variable `u_i` becomes an 18-vertex gadget and each clause `c_j` a
//! 4-vertex gadget; the clause vertex is then joined to the literal vertices
//! of its clause. With `N` variables and `M` clauses the graph has
//! `18N + 4M` vertices and a RED:OLD set of size `K = 16N + 3M` exists iff the
//! formula is satisfiable.
//!
//! Variable gadget (local indices): `0 = u_i`, `1 = not_u_i`, `2 = v_i`, and
//! five triangles `g1g2g3 .. g13g14g15` on local `3..=17`. Each triangle has an
//! apex (`g1, g4, g7, g10, g13`) and two degree-2 corners, so the whole
//! triangle is forced into every RED:OLD set. `u_i` hangs off apexes `g1, g4`,
//! `not_u_i` off `g7, g10`, and `v_i` sees `u_i`, `not_u_i` and `g13`: its
//! second detector must be one of the two literal vertices.
//!
//! Clause gadget: a triangle `t1t2t3` with `c_j` attached to `t1` only, so
//! `c_j` has one forced detector and needs a true literal for the second.

use crate::error::{input, Error, Result};
use crate::graph::{Graph, GraphJson};
use crate::set::VertexSet;
use crate::solve::{self, SearchState, Solver, DEFAULT_BUDGET};
use crate::verify;
use crate::Kind;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

pub const VARIABLE_GADGET_SIZE: usize = 18;
pub const CLAUSE_GADGET_SIZE: usize = 4;
/// Vertices of a variable gadget in every RED:OLD set.
pub const VARIABLE_SHADED: usize = 15;
/// Detectors a variable gadget contributes to a threshold-size set: the
/// shaded vertices plus one literal.
pub const VARIABLE_COST: usize = 16;
pub const CLAUSE_COST: usize = 3;

const LOCAL_POS: usize = 0;
const LOCAL_NEG: usize = 1;
const LOCAL_FORCING: usize = 2;

pub const VARIABLE_GADGET_EDGES: [(usize, usize); 22] = [
    // triangles, apex first
    (3, 4),
    (3, 5),
    (4, 5),
    (6, 7),
    (6, 8),
    (7, 8),
    (9, 10),
    (9, 11),
    (10, 11),
    (12, 13),
    (12, 14),
    (13, 14),
    (15, 16),
    (15, 17),
    (16, 17),
    // literal and forcing vertices
    (0, 3),
    (0, 6),
    (1, 9),
    (1, 12),
    (2, 0),
    (2, 1),
    (2, 15),
];

/// Clause gadget: `0 = c_j`, `1..=3 = t1..t3`.
pub const CLAUSE_GADGET_EDGES: [(usize, usize); 4] = [(1, 2), (1, 3), (2, 3), (0, 1)];

fn variable_edges() -> impl Iterator<Item = (usize, usize)> {
    VARIABLE_GADGET_EDGES.into_iter()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// 0-based variable index.
    pub var: usize,
    pub negated: bool,
}

impl Literal {
    pub fn eval(self, a: &Assignment) -> bool {
        a.0[self.var] != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negated { "-" } else { "" };
        write!(f, "{sign}{}", self.var + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfInstance {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl CnfInstance {
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<Self> {
        if num_vars == 0 {
            return input("a 3-SAT instance needs at least one variable");
        }
        if let Some(l) = clauses.iter().flatten().find(|l| l.var >= num_vars) {
            return input(format!("literal {l} refers to a variable beyond {num_vars}"));
        }
        Ok(CnfInstance { num_vars, clauses })
    }

    /// Builds from DIMACS-style signed 1-based literals.
    pub fn from_signed(num_vars: usize, clauses: &[[i32; 3]]) -> Result<Self> {
        let mut out = Vec::with_capacity(clauses.len());
        for c in clauses {
            let mut lits = [Literal { var: 0, negated: false }; 3];
            for (slot, &x) in lits.iter_mut().zip(c) {
                if x == 0 {
                    return input("literal 0 is not a variable");
                }
                *slot = Literal {
                    var: x.unsigned_abs() as usize - 1,
                    negated: x < 0,
                };
            }
            out.push(lits);
        }
        CnfInstance::new(num_vars, out)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            s.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        s
    }
}

/// Parses DIMACS CNF. Comment lines (`c ...`) are skipped, clauses may span
/// lines, and every clause must have exactly three literals.
pub fn parse_dimacs(text: &str) -> Result<CnfInstance> {
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut cur: Vec<(i64, usize)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if l.is_empty() || l.starts_with('c') {
            continue;
        }
        if l.starts_with('%') {
            break;
        }
        if l.starts_with('p') {
            if header.is_some() {
                return Err(perr(line, "second problem line".into()));
            }
            let toks: Vec<_> = l.split_whitespace().collect();
            if toks.len() != 4 || toks[0] != "p" || toks[1] != "cnf" {
                return Err(perr(line, format!("malformed problem line '{l}'")));
            }
            let n = toks[2]
                .parse()
                .map_err(|_| perr(line, format!("bad variable count '{}'", toks[2])))?;
            let m = toks[3]
                .parse()
                .map_err(|_| perr(line, format!("bad clause count '{}'", toks[3])))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(perr(line, "clause before the problem line".into()));
        };
        for tok in l.split_whitespace() {
            let x: i64 = tok
                .parse()
                .map_err(|_| perr(line, format!("bad literal '{tok}'")))?;
            if x == 0 {
                if cur.len() != 3 {
                    return Err(perr(
                        line,
                        format!("clause {} has {} literals, expected 3", clauses.len() + 1, cur.len()),
                    ));
                }
                clauses.push(std::mem::take(&mut cur));
            } else {
                if x.unsigned_abs() as usize > n {
                    return Err(perr(line, format!("literal {x} exceeds {n} variables")));
                }
                cur.push((x, line));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(perr(1, "missing 'p cnf' line".into()));
    };
    if let Some(&(_, line)) = cur.first() {
        return Err(perr(line, "unterminated final clause".into()));
    }
    if clauses.len() != m {
        return input(format!("header announces {m} clauses, found {}", clauses.len()));
    }
    let signed: Vec<[i32; 3]> = clauses
        .iter()
        .map(|c| [c[0].0 as i32, c[1].0 as i32, c[2].0 as i32])
        .collect();
    CnfInstance::from_signed(n, &signed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn satisfies(&self, cnf: &CnfInstance) -> bool {
        self.0.len() == cnf.num_vars()
            && cnf.clauses().iter().all(|c| c.iter().any(|l| l.eval(self)))
    }
}

pub const BRUTEFORCE_MAX_VARS: usize = 24;

/// First satisfying assignment in counting order (bit `i` is variable `i`).
pub fn satisfiable_bruteforce(cnf: &CnfInstance) -> Result<Option<Assignment>> {
    let n = cnf.num_vars();
    if n > BRUTEFORCE_MAX_VARS {
        return input(format!("brute force refuses {n} > {BRUTEFORCE_MAX_VARS} variables"));
    }
    Ok((0u32..1 << n)
        .map(|bits| Assignment((0..n).map(|i| bits >> i & 1 == 1).collect()))
        .find(|a| a.satisfies(cnf)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    PositiveLiteral { var: usize },
    NegativeLiteral { var: usize },
    Forcing { var: usize },
    /// Shaded internal vertex `g_{var}_{k}`, `k` in `1..=15`.
    Shaded { var: usize, k: usize },
    Clause { clause: usize },
    /// Triangle vertex `t_{clause}_{k}`, `k` in `1..=3`.
    Triangle { clause: usize, k: usize },
}

impl Role {
    pub fn name(self) -> &'static str {
        match self {
            Role::PositiveLiteral { .. } => "positive_literal",
            Role::NegativeLiteral { .. } => "negative_literal",
            Role::Forcing { .. } => "forcing",
            Role::Shaded { .. } => "shaded",
            Role::Clause { .. } => "clause",
            Role::Triangle { .. } => "triangle",
        }
    }

    /// In every RED:OLD set of the reduction graph.
    pub fn is_forced(self) -> bool {
        matches!(self, Role::Shaded { .. } | Role::Triangle { .. })
    }

    fn label(self) -> String {
        match self {
            Role::PositiveLiteral { var } => format!("u_{}", var + 1),
            Role::NegativeLiteral { var } => format!("not_u_{}", var + 1),
            Role::Forcing { var } => format!("v_{}", var + 1),
            Role::Shaded { var, k } => format!("g_{}_{k}", var + 1),
            Role::Clause { clause } => format!("c_{}", clause + 1),
            Role::Triangle { clause, k } => format!("t_{}_{k}", clause + 1),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub threshold: usize,
    pub num_vars: usize,
    pub num_clauses: usize,
}

#[derive(Serialize)]
pub struct ReductionJson {
    #[serde(flatten)]
    pub graph: GraphJson,
    pub roles: BTreeMap<String, &'static str>,
    pub threshold: usize,
    pub num_vars: usize,
    pub num_clauses: usize,
}

impl ReductionOutput {
    pub fn positive(&self, var: usize) -> usize {
        VARIABLE_GADGET_SIZE * var + LOCAL_POS
    }

    pub fn negative(&self, var: usize) -> usize {
        VARIABLE_GADGET_SIZE * var + LOCAL_NEG
    }

    pub fn forcing(&self, var: usize) -> usize {
        VARIABLE_GADGET_SIZE * var + LOCAL_FORCING
    }

    pub fn literal_vertex(&self, l: Literal) -> usize {
        if l.negated {
            self.negative(l.var)
        } else {
            self.positive(l.var)
        }
    }

    pub fn clause_vertex(&self, j: usize) -> usize {
        VARIABLE_GADGET_SIZE * self.num_vars + CLAUSE_GADGET_SIZE * j
    }

    /// Shaded and triangle vertices.
    pub fn forced_vertices(&self) -> VertexSet {
        let n = self.graph.n();
        VertexSet::from_indices(n, (0..n).filter(|&v| self.roles[v].is_forced())).unwrap()
    }

    /// The threshold-size set for an assignment: forced vertices plus one
    /// literal vertex per variable.
    pub fn set_from_assignment(&self, a: &Assignment) -> VertexSet {
        let mut s = self.forced_vertices();
        for (i, &val) in a.0.iter().enumerate() {
            s.insert(if val { self.positive(i) } else { self.negative(i) });
        }
        s
    }

    pub fn to_json(&self) -> ReductionJson {
        let roles = self
            .roles
            .iter()
            .enumerate()
            .map(|(v, r)| (self.graph.label(v), r.name()))
            .collect();
        ReductionJson {
            graph: self.graph.to_json(),
            roles,
            threshold: self.threshold,
            num_vars: self.num_vars,
            num_clauses: self.num_clauses,
        }
    }
}

/// Structural checks on the gadget tables, independent of any instance.
pub fn check_gadget_tables() -> Result<()> {
    let bad = |m: &str| Err(Error::Fixture(format!("variable gadget: {m}")));
    let g = Graph::new(VARIABLE_GADGET_SIZE, &variable_edges().collect::<Vec<_>>())?;
    let nbrs = |v: usize| g.nbrs(v).to_vec();
    if nbrs(LOCAL_FORCING).len() != 3
        || !g.has_edge(LOCAL_FORCING, LOCAL_POS)
        || !g.has_edge(LOCAL_FORCING, LOCAL_NEG)
    {
        return bad("v_i must see u_i, not_u_i and exactly one shaded vertex");
    }
    let shaded = 3..VARIABLE_GADGET_SIZE;
    if shaded.len() != VARIABLE_SHADED {
        return bad("wrong shaded count");
    }
    for lit in [LOCAL_POS, LOCAL_NEG] {
        if nbrs(lit).iter().filter(|&&x| x >= 3).count() < 2 {
            return bad("a literal vertex needs two shaded detectors");
        }
    }
    let c = Graph::new(CLAUSE_GADGET_SIZE, &CLAUSE_GADGET_EDGES)?;
    if c.degree(0) != 1 || !(1..4).all(|a| (1..4).all(|b| a == b || c.has_edge(a, b))) {
        return Err(Error::Fixture(
            "clause gadget: c_j must see exactly one vertex of the triangle".into(),
        ));
    }
    Ok(())
}

/// Builds the reduction graph: variable gadgets first, then clause gadgets.
/// A literal repeated inside a clause yields a single edge.
pub fn build_reduction(cnf: &CnfInstance) -> ReductionOutput {
    let (nv, nc) = (cnf.num_vars(), cnf.num_clauses());
    let n = VARIABLE_GADGET_SIZE * nv + CLAUSE_GADGET_SIZE * nc;
    let mut edges = Vec::new();
    let mut roles = Vec::with_capacity(n);
    for var in 0..nv {
        let base = VARIABLE_GADGET_SIZE * var;
        edges.extend(variable_edges().map(|(a, b)| (base + a, base + b)));
        roles.push(Role::PositiveLiteral { var });
        roles.push(Role::NegativeLiteral { var });
        roles.push(Role::Forcing { var });
        roles.extend((1..=VARIABLE_SHADED).map(|k| Role::Shaded { var, k }));
    }
    let mut out = ReductionOutput {
        graph: Graph::new(0, &[]).unwrap(),
        roles: Vec::new(),
        threshold: VARIABLE_COST * nv + CLAUSE_COST * nc,
        num_vars: nv,
        num_clauses: nc,
    };
    for (clause, lits) in cnf.clauses().iter().enumerate() {
        let base = out.clause_vertex(clause);
        edges.extend(CLAUSE_GADGET_EDGES.iter().map(|&(a, b)| (base + a, base + b)));
        roles.push(Role::Clause { clause });
        roles.extend((1..=3).map(|k| Role::Triangle { clause, k }));
        for &l in lits {
            edges.push((base, out.literal_vertex(l)));
        }
    }
    let labels = roles.iter().map(|r| r.label()).collect();
    out.graph = Graph::new(n, &edges)
        .and_then(|g| g.with_labels(labels))
        .expect("reduction edges are in range");
    out.roles = roles;
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetValidation {
    /// Every shaded and triangle vertex lies in every minimum RED:OLD set.
    pub forced_in_every_optimum: bool,
    /// Propagation from the empty state forces every shaded and triangle vertex.
    pub propagation_forces_all: bool,
    /// Vertices propagation forces beyond the shaded and triangle ones. Only
    /// the literal of a clause whose three literals coincide may appear here.
    pub extra_forced: Vec<usize>,
    /// No RED:OLD set omits both `u_i` and `not_u_i`, for every `i`.
    pub literal_choice_required: bool,
    /// Minimum RED:OLD value of the graph.
    pub optimum: Option<usize>,
}

impl GadgetValidation {
    pub fn passes(&self) -> bool {
        self.forced_in_every_optimum && self.propagation_forces_all && self.literal_choice_required
    }
}

/// Literal vertices a clause with a single distinct literal legitimately
/// forces (its clause vertex has only one non-triangle neighbor).
fn single_literal_clause_vertices(out: &ReductionOutput, cnf: &CnfInstance) -> VertexSet {
    let mut s = VertexSet::empty(out.graph.n());
    for c in cnf.clauses() {
        if c[0] == c[1] && c[1] == c[2] {
            s.insert(out.literal_vertex(c[0]));
        }
    }
    s
}

/// Checks the gadget forcing claims on an instance with the exact solver.
pub fn validate_gadget_forcing(cnf: &CnfInstance) -> Result<GadgetValidation> {
    validate_gadget_forcing_with_budget(cnf, DEFAULT_BUDGET)
}

pub fn validate_gadget_forcing_with_budget(cnf: &CnfInstance, budget: u64) -> Result<GadgetValidation> {
    check_gadget_tables()?;
    let out = build_reduction(cnf);
    let g = &out.graph;
    let n = g.n();
    let forced = out.forced_vertices();
    let mut solver = Solver::new(g, Kind::RedOld).with_budget(budget);
    let optimum = solver.solve(false)?.value;

    let mut forced_in_every_optimum = optimum.is_some();
    if let Some(opt) = optimum {
        for v in &forced {
            let mut st = SearchState::empty(n);
            st.forced_out.insert(v);
            if let Some((val, _)) = solver.minimum_from(st)? {
                if val <= opt {
                    forced_in_every_optimum = false;
                    break;
                }
            }
        }
    }

    let (propagation_forces_all, extra_forced) =
        match solver.propagate(SearchState::empty(n)) {
            Some(st) => {
                let extra = st.forced_in.difference(&forced);
                (forced.is_subset(&st.forced_in), extra.to_vec())
            }
            None => (false, Vec::new()),
        };
    let allowed = single_literal_clause_vertices(&out, cnf);
    let extras_ok = extra_forced.iter().all(|&v| allowed.contains(v));

    let mut literal_choice_required = true;
    for var in 0..cnf.num_vars() {
        let mut st = SearchState::empty(n);
        st.forced_out.insert(out.positive(var));
        st.forced_out.insert(out.negative(var));
        if solver.minimum_from(st)?.is_some() {
            literal_choice_required = false;
        }
    }

    Ok(GadgetValidation {
        forced_in_every_optimum,
        propagation_forces_all: propagation_forces_all && extras_ok,
        extra_forced,
        literal_choice_required,
        optimum,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    /// Minimum RED:OLD value equals the threshold.
    pub satisfiable: bool,
    pub min_value: Option<usize>,
    pub threshold: usize,
    pub witness: Option<VertexSet>,
}

pub fn decide_sat_via_redold(cnf: &CnfInstance) -> Result<Decision> {
    decide_sat_via_redold_with_budget(cnf, DEFAULT_BUDGET)
}

pub fn decide_sat_via_redold_with_budget(cnf: &CnfInstance, budget: u64) -> Result<Decision> {
    let out = build_reduction(cnf);
    let r = solve::min_set_with_budget(&out.graph, Kind::RedOld, false, budget)?;
    Ok(Decision {
        satisfiable: r.value == Some(out.threshold),
        min_value: r.value,
        threshold: out.threshold,
        witness: r.witness,
    })
}

/// Reads the truth assignment off a threshold-size RED:OLD set: variable `i`
/// is true iff `u_i` is in the set.
pub fn assignment_from_set(out: &ReductionOutput, s: &VertexSet) -> Result<Assignment> {
    if s.universe() != out.graph.n() {
        return input("set is over a different vertex universe");
    }
    if s.len() != out.threshold {
        return input(format!("set has {} vertices, threshold is {}", s.len(), out.threshold));
    }
    if !verify::is_red_old(&out.graph, s).holds {
        return input("set is not a RED:OLD set of the reduction graph");
    }
    Ok(Assignment(
        (0..out.num_vars).map(|i| s.contains(out.positive(i))).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lit(x: i32) -> Literal {
        Literal {
            var: x.unsigned_abs() as usize - 1,
            negated: x < 0,
        }
    }

    fn sample_formula() -> CnfInstance {
        CnfInstance::from_signed(4, &[[1, 2, -3], [-1, 2, -4]]).unwrap()
    }

    #[test]
    fn gadget_tables_are_consistent() {
        check_gadget_tables().unwrap();
        let edges: Vec<_> = variable_edges().collect();
        assert_eq!(edges.len(), 22);
    }

    #[test]
    fn dimacs_examples() {
        let cnf = parse_dimacs("c sample\np cnf 4 2\n1 2 -3 0\n-1 2 -4 0\n").unwrap();
        assert_eq!(cnf, sample_formula());
        assert_eq!(cnf.clauses()[0], [lit(1), lit(2), lit(-3)]);
        let rep = parse_dimacs("p cnf 1 1\n1 1 1 0\n").unwrap();
        assert_eq!(rep.clauses(), &[[lit(1); 3]]);
        assert!(matches!(parse_dimacs("p cnf 2 1\n1 -2 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_dimacs("p cnf 0 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 2\n1 2 -1 0\n").is_err());
        assert!(parse_dimacs("1 2 3 0\n").is_err());
        assert!(parse_dimacs("p cnf 3 1\n1 2\n 3 0\n").is_ok());
        assert!(parse_dimacs("p cnf 3 1\n1 2 3\n").is_err());
        assert!(parse_dimacs("p cnf x 1\n").is_err());
    }

    #[test]
    fn dimacs_round_trip() {
        let cnf = sample_formula();
        assert_eq!(parse_dimacs(&cnf.to_dimacs()).unwrap(), cnf);
    }

    #[test]
    fn bruteforce_sat() {
        let a = satisfiable_bruteforce(&sample_formula()).unwrap().unwrap();
        assert!(a.satisfies(&sample_formula()));
        let mut u2 = Assignment(vec![false; 4]);
        u2.0[1] = true;
        assert!(u2.satisfies(&sample_formula()));
        let contra = CnfInstance::from_signed(1, &[[1, 1, 1], [-1, -1, -1]]).unwrap();
        assert!(satisfiable_bruteforce(&contra).unwrap().is_none());
        let empty = CnfInstance::new(1, vec![]).unwrap();
        assert!(satisfiable_bruteforce(&empty).unwrap().is_some());
        let big = CnfInstance::new(25, vec![]).unwrap();
        assert!(satisfiable_bruteforce(&big).is_err());
    }

    #[test]
    fn reduction_sizes() {
        let out = build_reduction(&sample_formula());
        assert_eq!(out.graph.n(), 80);
        assert_eq!(out.threshold, 70);
        let one = build_reduction(&CnfInstance::from_signed(1, &[[1, 1, 1]]).unwrap());
        assert_eq!(one.graph.n(), 22);
        assert_eq!(one.threshold, 19);
        // repeated literal collapses to one edge
        assert_eq!(one.graph.degree(one.clause_vertex(0)), 2);
    }

    #[test]
    fn roles_and_labels() {
        let out = build_reduction(&sample_formula());
        assert_eq!(out.forced_vertices().len(), 15 * 4 + 3 * 2);
        assert_eq!(out.graph.label(out.positive(0)), "u_1");
        assert_eq!(out.graph.label(out.negative(2)), "not_u_3");
        assert_eq!(out.graph.label(out.forcing(3)), "v_4");
        assert_eq!(out.graph.label(17), "g_1_15");
        assert_eq!(out.graph.label(out.clause_vertex(1)), "c_2");
        assert_eq!(out.graph.label(79), "t_2_3");
        for (j, c) in sample_formula().clauses().iter().enumerate() {
            let cv = out.clause_vertex(j);
            let outside: Vec<usize> = out.graph.nbrs(cv).iter().filter(|&w| w < cv).collect();
            let mut want: Vec<usize> = c.iter().map(|&l| out.literal_vertex(l)).collect();
            want.sort();
            assert_eq!(outside, want);
        }
        let j = out.to_json();
        assert_eq!(j.roles["c_1"], "clause");
        assert_eq!(j.roles["g_2_3"], "shaded");
    }

    #[test]
    fn assignment_set_is_red_old() {
        let cnf = sample_formula();
        let out = build_reduction(&cnf);
        for bits in 0u32..16 {
            let a = Assignment((0..4).map(|i| bits >> i & 1 == 1).collect());
            let s = out.set_from_assignment(&a);
            assert_eq!(s.len(), 70);
            assert_eq!(verify::is_red_old(&out.graph, &s).holds, a.satisfies(&cnf));
        }
    }

    #[test]
    fn assignment_recovery() {
        let cnf = CnfInstance::from_signed(1, &[[1, 1, 1]]).unwrap();
        let out = build_reduction(&cnf);
        let d = decide_sat_via_redold(&cnf).unwrap();
        assert!(d.satisfiable);
        assert_eq!(d.min_value, Some(19));
        let a = assignment_from_set(&out, &d.witness.unwrap()).unwrap();
        assert_eq!(a, Assignment(vec![true]));
        assert!(assignment_from_set(&out, &VertexSet::full(22)).is_err());
    }

    #[test]
    fn contradiction_exceeds_threshold() {
        let cnf = CnfInstance::from_signed(1, &[[1, 1, 1], [-1, -1, -1]]).unwrap();
        let d = decide_sat_via_redold(&cnf).unwrap();
        assert!(!d.satisfiable);
        assert!(d.min_value.unwrap() > 22);
    }

    #[test]
    fn forcing_small() {
        for cnf in [
            CnfInstance::from_signed(1, &[[1, 1, 1]]).unwrap(),
            CnfInstance::from_signed(2, &[[1, -2, 2]]).unwrap(),
        ] {
            let v = validate_gadget_forcing(&cnf).unwrap();
            assert!(v.passes(), "{v:?}");
        }
    }
}

//! Exact minimum OLD / RED:OLD sets.
//!
//! Both problems are multi-cover problems: every open neighborhood `N(v)` and
//! every symmetric difference `N(u) △ N(v)` must contain at least `k` chosen
//! vertices. [`Solver`] runs a depth-first branch and bound over that cover
//! model with three forcing rules applied at every node:
//!
//! * a constraint with exactly `k` non-excluded vertices forces all of them in;
//! * a constraint with fewer than `k` non-excluded vertices is a conflict;
//! * the lower bound is `|forced_in|` plus the summed deficits of a greedy
//!   packing of unsatisfied constraints over pairwise disjoint undecided vertices.
//!
//! [`min_set_bruteforce`] is the independent oracle: it walks subsets by size
//! and asks the verifier.

use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::verify;
use crate::Kind;
use itertools::Itertools;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    /// Minimum cardinality; `None` when no set of this kind exists.
    pub value: Option<usize>,
    /// The lexicographically smallest minimum set.
    pub witness: Option<VertexSet>,
    /// Every minimum set, in lexicographic order, when enumeration was asked for.
    pub all_minimum_sets: Option<Vec<VertexSet>>,
    /// Search nodes expanded.
    pub nodes: u64,
}

impl SolveResult {
    fn infeasible(enumerate: bool) -> Self {
        SolveResult {
            value: None,
            witness: None,
            all_minimum_sets: enumerate.then(Vec::new),
            nodes: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchState {
    pub forced_in: VertexSet,
    pub forced_out: VertexSet,
    pub lower_bound: usize,
}

impl SearchState {
    pub fn empty(n: usize) -> Self {
        SearchState {
            forced_in: VertexSet::empty(n),
            forced_out: VertexSet::empty(n),
            lower_bound: 0,
        }
    }

    fn decided(&self, v: usize) -> bool {
        self.forced_in.contains(v) || self.forced_out.contains(v)
    }
}

/// The cover model: every set in `cons` needs `need` members in the solution.
///
/// Pairs with disjoint neighborhoods are left out (their symmetric difference
/// is `N(u) ∪ N(v)`, already covered `2k` times by the domination rows), and
/// rows that are supersets of other rows are dropped since they are implied.
#[derive(Clone, Debug)]
struct Model {
    n: usize,
    need: usize,
    cons: Vec<VertexSet>,
}

impl Model {
    fn new(g: &Graph, kind: Kind) -> Self {
        let n = g.n();
        let mut rows: Vec<VertexSet> = (0..n).map(|v| g.nbrs(v).clone()).collect();
        for u in 0..n {
            for v in u + 1..n {
                if !g.nbrs(u).is_disjoint(g.nbrs(v)) {
                    rows.push(g.nbrs(u).symmetric_difference(g.nbrs(v)));
                }
            }
        }
        rows.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(b)));
        rows.dedup();
        let mut cons: Vec<VertexSet> = Vec::with_capacity(rows.len());
        for r in rows {
            if !cons.iter().any(|c| c.is_subset(&r)) {
                cons.push(r);
            }
        }
        Model {
            n,
            need: kind.fold(),
            cons,
        }
    }

    /// Applies the forcing rules to a fixpoint. Only `forced_out` can shrink
    /// what a row has available, so one sweep settles everything, but the loop
    /// keeps the fixpoint explicit.
    fn propagate(&self, mut st: SearchState) -> Option<SearchState> {
        if !st.forced_in.is_disjoint(&st.forced_out) {
            return None;
        }
        loop {
            let mut changed = false;
            for c in &self.cons {
                let avail = c.difference(&st.forced_out);
                let na = avail.len();
                if na < self.need {
                    return None;
                }
                if na == self.need && !avail.is_subset(&st.forced_in) {
                    st.forced_in.union_with(&avail);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        st.lower_bound = self.lower_bound(&st);
        Some(st)
    }

    fn lower_bound(&self, st: &SearchState) -> usize {
        let decided = st.forced_in.union(&st.forced_out);
        let mut open: Vec<(usize, VertexSet)> = self
            .cons
            .iter()
            .filter_map(|c| {
                let have = c.intersection_len(&st.forced_in);
                (have < self.need).then(|| (self.need - have, c.difference(&decided)))
            })
            .collect();
        open.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.len().cmp(&b.1.len())));
        let mut used = VertexSet::empty(self.n);
        let mut extra = 0;
        for (deficit, free) in open {
            if free.is_disjoint(&used) {
                used.union_with(&free);
                extra += deficit;
            }
        }
        st.forced_in.len() + extra
    }

    /// Lowest undecided vertex of the tightest unsatisfied row, or `None` when
    /// every row is satisfied.
    fn branch_vertex(&self, st: &SearchState) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for c in &self.cons {
            let have = c.intersection_len(&st.forced_in);
            if have >= self.need {
                continue;
            }
            let free = c.difference(&st.forced_in).difference(&st.forced_out);
            let slack = free.len() - (self.need - have);
            let v = free.first().expect("propagation leaves a free vertex");
            if best.is_none_or(|(s, bv)| (slack, v) < (s, bv)) {
                best = Some((slack, v));
            }
        }
        best.map(|(_, v)| v)
    }
}

enum Goal {
    /// Smallest solution; prune anything that cannot beat the incumbent.
    Optimize(Option<VertexSet>),
    /// Any solution of size at most the limit.
    Exists(usize, Option<VertexSet>),
    /// Every solution of exactly the target size.
    Enumerate(usize, Vec<VertexSet>),
}

pub struct Solver<'g> {
    graph: &'g Graph,
    kind: Kind,
    model: Model,
    budget: u64,
    nodes: u64,
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph, kind: Kind) -> Self {
        Solver {
            graph,
            kind,
            model: Model::new(graph, kind),
            budget: DEFAULT_BUDGET,
            nodes: 0,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn propagate(&self, state: SearchState) -> Option<SearchState> {
        self.model.propagate(state)
    }

    fn dfs(&mut self, st: SearchState, goal: &mut Goal) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
            });
        }
        let Some(st) = self.model.propagate(st) else {
            return Ok(());
        };
        let prune = match goal {
            Goal::Optimize(Some(b)) => st.lower_bound >= b.len(),
            Goal::Optimize(None) => false,
            Goal::Exists(_, Some(_)) => return Ok(()),
            Goal::Exists(limit, None) | Goal::Enumerate(limit, _) => st.lower_bound > *limit,
        };
        if prune {
            return Ok(());
        }
        let Some(v) = self.model.branch_vertex(&st) else {
            let sol = st.forced_in;
            match goal {
                Goal::Optimize(b) => *b = Some(sol),
                Goal::Exists(_, found) => *found = Some(sol),
                Goal::Enumerate(target, all) => {
                    if sol.len() == *target {
                        all.push(sol)
                    }
                }
            }
            return Ok(());
        };
        let mut with = st.clone();
        with.forced_in.insert(v);
        self.dfs(with, goal)?;
        let mut without = st;
        without.forced_out.insert(v);
        self.dfs(without, goal)
    }

    /// Minimum size of a solution consistent with `state`, with one such set.
    pub fn minimum_from(&mut self, state: SearchState) -> Result<Option<(usize, VertexSet)>> {
        let mut goal = Goal::Optimize(None);
        self.dfs(state, &mut goal)?;
        match goal {
            Goal::Optimize(b) => Ok(b.map(|s| (s.len(), s))),
            _ => unreachable!(),
        }
    }

    fn exists_within(&mut self, state: SearchState, limit: usize) -> Result<bool> {
        let mut goal = Goal::Exists(limit, None);
        self.dfs(state, &mut goal)?;
        Ok(matches!(goal, Goal::Exists(_, Some(_))))
    }

    /// Every solution of size `target` consistent with `state`, sorted.
    pub fn enumerate_from(&mut self, state: SearchState, target: usize) -> Result<Vec<VertexSet>> {
        let mut goal = Goal::Enumerate(target, Vec::new());
        self.dfs(state, &mut goal)?;
        let Goal::Enumerate(_, mut all) = goal else {
            unreachable!()
        };
        all.sort_by(VertexSet::lex_cmp);
        Ok(all)
    }

    /// Lexicographically smallest solution of size `opt` consistent with
    /// `state`: decide vertices in index order, keeping each one in whenever an
    /// optimum still exists with it.
    fn lexmin(&mut self, state: SearchState, opt: usize) -> Result<VertexSet> {
        let n = self.graph.n();
        let mut st = self.model.propagate(state).expect("state admits an optimum");
        for v in 0..n {
            if st.decided(v) {
                continue;
            }
            let mut with = st.clone();
            with.forced_in.insert(v);
            if self.exists_within(with.clone(), opt)? {
                st = self.model.propagate(with).unwrap();
            } else {
                let mut without = st;
                without.forced_out.insert(v);
                st = self.model.propagate(without).expect("optimum avoids v");
            }
        }
        debug_assert_eq!(st.forced_in.len(), opt);
        Ok(st.forced_in)
    }

    pub fn solve(&mut self, enumerate: bool) -> Result<SolveResult> {
        let n = self.graph.n();
        if !feasibility_check(self.graph, self.kind) {
            return Ok(SolveResult::infeasible(enumerate));
        }
        let root = SearchState::empty(n);
        let (opt, _) = self
            .minimum_from(root.clone())?
            .expect("feasible graph has a solution");
        let witness = self.lexmin(root.clone(), opt)?;
        let all = if enumerate {
            let all = self.enumerate_from(root, opt)?;
            debug_assert_eq!(all.first(), Some(&witness));
            Some(all)
        } else {
            None
        };
        Ok(SolveResult {
            value: Some(opt),
            witness: Some(witness),
            all_minimum_sets: all,
            nodes: self.nodes,
        })
    }
}

/// A set of the given kind exists iff the whole vertex set is one, since both
/// properties are monotone under adding detectors.
pub fn feasibility_check(g: &Graph, kind: Kind) -> bool {
    verify::check(g, &VertexSet::full(g.n()), kind).holds
}

pub fn min_set(g: &Graph, kind: Kind, enumerate: bool) -> Result<SolveResult> {
    Solver::new(g, kind).solve(enumerate)
}

pub fn min_set_with_budget(g: &Graph, kind: Kind, enumerate: bool, budget: u64) -> Result<SolveResult> {
    Solver::new(g, kind).with_budget(budget).solve(enumerate)
}

/// Fixpoint of the forcing rules from `state`; `None` signals a conflict.
pub fn propagate(g: &Graph, kind: Kind, state: SearchState) -> Option<SearchState> {
    Model::new(g, kind).propagate(state)
}

/// Whether every minimum set contains `v`, decided by re-solving with `v`
/// excluded and comparing values.
pub fn is_in_every_optimal_set(g: &Graph, kind: Kind, v: usize) -> Result<bool> {
    if v >= g.n() {
        return input(format!("vertex {v} out of range"));
    }
    let mut solver = Solver::new(g, kind);
    let Some(opt) = solver.solve(false)?.value else {
        return input("no set of this kind exists");
    };
    let mut st = SearchState::empty(g.n());
    st.forced_out.insert(v);
    Ok(match solver.minimum_from(st)? {
        None => true,
        Some((val, _)) => val > opt,
    })
}

pub const BRUTEFORCE_MAX_N: usize = 20;

/// Subsets in increasing size, lexicographic within a size; the first one the
/// verifier accepts.
pub fn min_set_bruteforce(g: &Graph, kind: Kind) -> Result<SolveResult> {
    let n = g.n();
    if n > BRUTEFORCE_MAX_N {
        return input(format!("brute force refuses n = {n} > {BRUTEFORCE_MAX_N}"));
    }
    let mut nodes = 0;
    for size in 0..=n {
        for combo in (0..n).combinations(size) {
            nodes += 1;
            let s = VertexSet::from_indices(n, combo).unwrap();
            if verify::check(g, &s, kind).holds {
                return Ok(SolveResult {
                    value: Some(size),
                    witness: Some(s),
                    all_minimum_sets: None,
                    nodes,
                });
            }
        }
    }
    Ok(SolveResult {
        nodes,
        ..SolveResult::infeasible(false)
    })
}

/// All minimum sets by brute force (test oracle for enumeration).
pub fn all_minimum_bruteforce(g: &Graph, kind: Kind) -> Result<Vec<VertexSet>> {
    let n = g.n();
    let Some(opt) = min_set_bruteforce(g, kind)?.value else {
        return Ok(Vec::new());
    };
    Ok((0..n)
        .combinations(opt)
        .map(|c| VertexSet::from_indices(n, c).unwrap())
        .filter(|s| verify::check(g, s, kind).holds)
        .collect())
}

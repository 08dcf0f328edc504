//! Periodic detector patterns on the four infinite grids.
//!
//! Lattices live on `ℤ²`:
//!
//! * SQ: `(±1,0), (0,±1)`.
//! * HEX (brick wall): `(±1,0)`, plus `(0,+1)` when `x+y` is even and `(0,-1)`
//!   when it is odd.
//! * TRI: the SQ offsets plus `(+1,-1), (-1,+1)`.
//! * KING: all eight surrounding cells.
//!
//! A [`PeriodicPattern`] is a set of cells of the rectangle `[0,px)×[0,py)`
//! repeated over the plane. Verifying it on the infinite grid is a finite job:
//! domination is checked at every cell of the fundamental domain, and pairs are
//! only checked up to graph distance two. Farther pairs have disjoint open
//! neighborhoods, so their symmetric difference is `N(u) ∪ N(v)`, which holds
//! at least `2k` detectors once domination holds.

use crate::error::{input, Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::verify;
use crate::Kind;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

pub type Coord = (i64, i64);
pub type Density = Ratio<u64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lattice {
    Sq,
    Hex,
    Tri,
    King,
}

const SQ: [Coord; 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
const TRI: [Coord; 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];
const KING: [Coord; 8] = [
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (1, -1),
    (-1, 1),
    (-1, -1),
];

impl Lattice {
    pub const ALL: [Lattice; 4] = [Lattice::Sq, Lattice::Hex, Lattice::Tri, Lattice::King];

    pub fn degree(self) -> usize {
        match self {
            Lattice::Sq => 4,
            Lattice::Hex => 3,
            Lattice::Tri => 6,
            Lattice::King => 8,
        }
    }

    pub fn neighbors(self, (x, y): Coord) -> Vec<Coord> {
        let offs: &[Coord] = match self {
            Lattice::Sq => &SQ,
            Lattice::Tri => &TRI,
            Lattice::King => &KING,
            Lattice::Hex => {
                let vert = if (x + y).rem_euclid(2) == 0 { 1 } else { -1 };
                return vec![(x + 1, y), (x - 1, y), (x, y + vert)];
            }
        };
        offs.iter().map(|&(dx, dy)| (x + dx, y + dy)).collect()
    }

    /// Vertices at graph distance 1 or 2 from `c`.
    pub fn ball2(self, c: Coord) -> BTreeSet<Coord> {
        let mut out = BTreeSet::new();
        for a in self.neighbors(c) {
            out.insert(a);
            out.extend(self.neighbors(a));
        }
        out.remove(&c);
        out
    }

    /// Translations that are automorphisms must preserve `x+y` parity on HEX.
    fn period_ok(self, px: usize, py: usize) -> bool {
        self != Lattice::Hex || (px.is_multiple_of(2) && py.is_multiple_of(2))
    }

    pub fn name(self) -> &'static str {
        match self {
            Lattice::Sq => "sq",
            Lattice::Hex => "hex",
            Lattice::Tri => "tri",
            Lattice::King => "king",
        }
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Lattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sq" | "square" => Ok(Lattice::Sq),
            "hex" | "hexagonal" => Ok(Lattice::Hex),
            "tri" | "triangular" => Ok(Lattice::Tri),
            "king" => Ok(Lattice::King),
            other => input(format!("unknown lattice '{other}'")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicPattern {
    lattice: Lattice,
    period: (usize, usize),
    cells: BTreeSet<(usize, usize)>,
    name: Option<String>,
}

/// Pattern JSON: `{"lattice": "king", "period": [px, py], "cells": [[x, y], ..], "name": ..}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PatternJson {
    pub lattice: Lattice,
    pub period: [usize; 2],
    pub cells: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl PeriodicPattern {
    pub fn new(
        lattice: Lattice,
        (px, py): (usize, usize),
        cells: impl IntoIterator<Item = (usize, usize)>,
        name: Option<String>,
    ) -> Result<Self> {
        if px == 0 || py == 0 {
            return input("pattern period must be positive");
        }
        if !lattice.period_ok(px, py) {
            return input(format!("hex pattern period must be even, got {px}x{py}"));
        }
        let cells: BTreeSet<_> = cells.into_iter().collect();
        if let Some(c) = cells.iter().find(|&&(x, y)| x >= px || y >= py) {
            return input(format!("cell {c:?} lies outside the {px}x{py} period"));
        }
        Ok(PeriodicPattern {
            lattice,
            period: (px, py),
            cells,
            name,
        })
    }

    /// Rows top to bottom (`y = 0` first), `#` for a detector.
    pub fn from_rows(lattice: Lattice, rows: &[&str], name: Option<String>) -> Result<Self> {
        let py = rows.len();
        let px = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != px) {
            return input("ragged pattern rows");
        }
        let cells = rows.iter().enumerate().flat_map(|(y, r)| {
            r.bytes()
                .enumerate()
                .filter(|&(_, b)| b == b'#')
                .map(move |(x, _)| (x, y))
        });
        PeriodicPattern::new(lattice, (px, py), cells, name)
    }

    pub fn to_rows(&self) -> Vec<String> {
        let (px, py) = self.period;
        (0..py)
            .map(|y| {
                (0..px)
                    .map(|x| if self.cells.contains(&(x, y)) { '#' } else { '.' })
                    .collect()
            })
            .collect()
    }

    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn period(&self) -> (usize, usize) {
        self.period
    }

    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn contains(&self, (x, y): Coord) -> bool {
        let (px, py) = self.period;
        let cx = x.rem_euclid(px as i64) as usize;
        let cy = y.rem_euclid(py as i64) as usize;
        self.cells.contains(&(cx, cy))
    }

    pub fn to_json(&self) -> PatternJson {
        PatternJson {
            lattice: self.lattice,
            period: [self.period.0, self.period.1],
            cells: self.cells.iter().map(|&(x, y)| [x, y]).collect(),
            name: self.name.clone(),
        }
    }

    pub fn from_json(j: &PatternJson) -> Result<Self> {
        PeriodicPattern::new(
            j.lattice,
            (j.period[0], j.period[1]),
            j.cells.iter().map(|c| (c[0], c[1])),
            j.name.clone(),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        let j: PatternJson = serde_json::from_str(text)?;
        PeriodicPattern::from_json(&j)
    }
}

/// `|cells| / (px·py)` in lowest terms.
pub fn density(p: &PeriodicPattern) -> Density {
    let (px, py) = p.period;
    Ratio::new(p.cells.len() as u64, (px * py) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GridWitness {
    UnderDominated { vertex: Coord, count: usize },
    UnderDistinguished { u: Coord, v: Coord, count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport {
    pub holds: bool,
    pub kind: Kind,
    pub density: Density,
    pub witness: Option<GridWitness>,
}

fn count_in(p: &PeriodicPattern, vs: impl IntoIterator<Item = Coord>) -> usize {
    vs.into_iter().filter(|&c| p.contains(c)).count()
}

fn symmetric_difference(lat: Lattice, u: Coord, v: Coord) -> Vec<Coord> {
    let nu: BTreeSet<_> = lat.neighbors(u).into_iter().collect();
    let nv: BTreeSet<_> = lat.neighbors(v).into_iter().collect();
    nu.symmetric_difference(&nv).copied().collect()
}

/// Checks the pattern's periodic set on the whole infinite lattice.
pub fn verify_pattern(p: &PeriodicPattern, kind: Kind) -> DensityReport {
    let k = kind.fold();
    let lat = p.lattice;
    let (px, py) = p.period;
    let domain: Vec<Coord> = (0..py as i64)
        .flat_map(|y| (0..px as i64).map(move |x| (x, y)))
        .collect();
    let report = |witness: Option<GridWitness>| DensityReport {
        holds: witness.is_none(),
        kind,
        density: density(p),
        witness,
    };
    for &u in &domain {
        let count = count_in(p, lat.neighbors(u));
        if count < k {
            return report(Some(GridWitness::UnderDominated { vertex: u, count }));
        }
    }
    for &u in &domain {
        for v in lat.ball2(u) {
            let count = count_in(p, symmetric_difference(lat, u, v));
            if count < k {
                return report(Some(GridWitness::UnderDistinguished { u, v, count }));
            }
        }
    }
    report(None)
}

/// The `width × height` torus of a lattice; vertex `(x, y)` has index
/// `y·width + x`.
pub fn build_torus(lattice: Lattice, width: usize, height: usize) -> Result<Graph> {
    if width < 5 || height < 5 {
        return input(format!("torus {width}x{height} is too small, both sides must be >= 5"));
    }
    if !lattice.period_ok(width, height) {
        return input(format!("hex torus needs even sides, got {width}x{height}"));
    }
    let (w, h) = (width as i64, height as i64);
    let idx = |(x, y): Coord| (y.rem_euclid(h) * w + x.rem_euclid(w)) as usize;
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            for nb in lattice.neighbors((x, y)) {
                edges.push((idx((x, y)), idx(nb)));
            }
        }
    }
    let labels = (0..h)
        .flat_map(|y| (0..w).map(move |x| format!("({x},{y})")))
        .collect();
    let g = Graph::new(width * height, &edges)?.with_labels(labels)?;
    debug_assert!((0..g.n()).all(|v| g.degree(v) == lattice.degree()));
    Ok(g)
}

pub fn restrict_pattern_to_torus(p: &PeriodicPattern, width: usize, height: usize) -> Result<VertexSet> {
    let (px, py) = p.period;
    if !width.is_multiple_of(px) || !height.is_multiple_of(py) {
        return input(format!(
            "torus {width}x{height} is not a multiple of the {px}x{py} period"
        ));
    }
    if width < 6 || height < 6 {
        return input(format!("torus {width}x{height} is too small, both sides must be >= 6"));
    }
    let members = (0..height)
        .flat_map(|y| (0..width).map(move |x| (x, y)))
        .filter(|&(x, y)| p.contains((x as i64, y as i64)))
        .map(|(x, y)| y * width + x);
    Ok(VertexSet::from_indices(width * height, members).unwrap())
}

/// Smallest multiple of `p` that is at least `3p` and at least 6.
pub fn cross_check_side(p: usize) -> usize {
    let min = (3 * p).max(6);
    min.div_ceil(p) * p
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub infinite: bool,
    pub torus: bool,
    pub dims: (usize, usize),
}

impl CrossCheck {
    pub fn agrees(&self) -> bool {
        self.infinite == self.torus
    }
}

/// Runs the local infinite-grid check and the plain graph verifier on a torus
/// and reports both verdicts. Defaults to [`cross_check_side`] dimensions.
pub fn torus_cross_check(
    p: &PeriodicPattern,
    kind: Kind,
    dims: Option<(usize, usize)>,
) -> Result<CrossCheck> {
    let (px, py) = p.period;
    let (w, h) = dims.unwrap_or((cross_check_side(px), cross_check_side(py)));
    let g = build_torus(p.lattice, w, h)?;
    let s = restrict_pattern_to_torus(p, w, h)?;
    Ok(CrossCheck {
        infinite: verify_pattern(p, kind).holds,
        torus: verify::check(&g, &s, kind).holds,
        dims: (w, h),
    })
}

/// A linear pseudo-boolean model over the cells of one period lattice: every
/// row needs `need` weighted detectors.
struct CellModel {
    cells: usize,
    rows: Vec<(usize, Vec<(usize, u32)>)>,
    occ: Vec<Vec<(usize, u32)>>,
}

/// Periodicity lattice spanned by `(p, 0)` and `(shift, q)`; representatives
/// are `[0,p) × [0,q)` with index `y·p + x`.
#[derive(Clone, Copy, Debug)]
struct Basis {
    p: usize,
    shift: usize,
    q: usize,
}

impl Basis {
    fn rep(&self, (x, y): Coord) -> usize {
        let (p, s, q) = (self.p as i64, self.shift as i64, self.q as i64);
        let b = y.div_euclid(q);
        let ry = y - b * q;
        let rx = (x - b * s).rem_euclid(p);
        (ry * p + rx) as usize
    }

    fn size(&self) -> usize {
        self.p * self.q
    }

    fn lattice_ok(&self, lat: Lattice) -> bool {
        lat != Lattice::Hex || (self.p.is_multiple_of(2) && (self.shift + self.q).is_multiple_of(2))
    }

    /// Rectangular superperiod `(p, q·p/gcd(p, shift))`.
    fn rect(&self) -> (usize, usize) {
        (self.p, self.q * self.p / gcd(self.p, self.shift))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl CellModel {
    fn new(lat: Lattice, kind: Kind, basis: Basis) -> Self {
        let need = kind.fold();
        let m = basis.size();
        let weigh = |vs: Vec<Coord>| {
            let mut w: HashMap<usize, u32> = HashMap::new();
            for c in vs {
                *w.entry(basis.rep(c)).or_default() += 1;
            }
            let mut terms: Vec<(usize, u32)> = w.into_iter().collect();
            terms.sort();
            terms
        };
        let mut rows = BTreeSet::new();
        for y in 0..basis.q as i64 {
            for x in 0..basis.p as i64 {
                let u = (x, y);
                rows.insert(weigh(lat.neighbors(u)));
                for v in lat.ball2(u) {
                    rows.insert(weigh(symmetric_difference(lat, u, v)));
                }
            }
        }
        let rows: Vec<_> = rows.into_iter().map(|t| (need, t)).collect();
        let mut occ = vec![Vec::new(); m];
        for (r, (_, terms)) in rows.iter().enumerate() {
            for &(c, w) in terms {
                occ[c].push((r, w));
            }
        }
        CellModel { cells: m, rows, occ }
    }
}

/// Depth-first search over cell assignments with weighted-cover propagation
/// and a cardinality cap. Cells are decided in index order, detector first, so
/// the first solution is the lexicographically smallest cell list.
struct CellSearch<'a> {
    model: &'a CellModel,
    cap: usize,
    val: Vec<Option<bool>>,
    have: Vec<u32>,
    free: Vec<u32>,
    chosen: usize,
    trail: Vec<usize>,
}

impl<'a> CellSearch<'a> {
    fn new(model: &'a CellModel, cap: usize) -> Self {
        let free = model
            .rows
            .iter()
            .map(|(_, t)| t.iter().map(|&(_, w)| w).sum())
            .collect();
        CellSearch {
            model,
            cap,
            val: vec![None; model.cells],
            have: vec![0; model.rows.len()],
            free,
            chosen: 0,
            trail: Vec::new(),
        }
    }

    fn assign(&mut self, c: usize, on: bool) {
        self.val[c] = Some(on);
        self.trail.push(c);
        if on {
            self.chosen += 1;
        }
        for &(r, w) in &self.model.occ[c] {
            self.free[r] -= w;
            if on {
                self.have[r] += w;
            }
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let c = self.trail.pop().unwrap();
            let on = self.val[c].take().unwrap();
            if on {
                self.chosen -= 1;
            }
            for &(r, w) in &self.model.occ[c] {
                self.free[r] += w;
                if on {
                    self.have[r] -= w;
                }
            }
        }
    }

    /// Propagates to a fixpoint; false on conflict.
    fn propagate(&mut self) -> bool {
        loop {
            if self.chosen > self.cap {
                return false;
            }
            let mut changed = false;
            if self.chosen == self.cap {
                for c in 0..self.model.cells {
                    if self.val[c].is_none() {
                        self.assign(c, false);
                        changed = true;
                    }
                }
            }
            for r in 0..self.model.rows.len() {
                let need = self.model.rows[r].0 as u32;
                let (have, free) = (self.have[r], self.free[r]);
                if have >= need {
                    continue;
                }
                if have + free < need {
                    return false;
                }
                for i in 0..self.model.rows[r].1.len() {
                    let (c, w) = self.model.rows[r].1[i];
                    if self.val[c].is_none() && self.have[r] + self.free[r] - w < need {
                        self.assign(c, true);
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn run(&mut self) -> Option<Vec<usize>> {
        let mark = self.trail.len();
        if !self.propagate() {
            self.undo(mark);
            return None;
        }
        let Some(c) = (0..self.model.cells).find(|&c| self.val[c].is_none()) else {
            let sol = (0..self.model.cells).filter(|&c| self.val[c] == Some(true)).collect();
            self.undo(mark);
            return Some(sol);
        };
        for on in [true, false] {
            let m2 = self.trail.len();
            self.assign(c, on);
            if let Some(s) = self.run() {
                self.undo(mark);
                return Some(s);
            }
            self.undo(m2);
        }
        self.undo(mark);
        None
    }
}

fn search_basis(lat: Lattice, kind: Kind, basis: Basis, cap: usize) -> Option<Vec<usize>> {
    let model = CellModel::new(lat, kind, basis);
    CellSearch::new(&model, cap).run()
}

fn expand(lat: Lattice, basis: Basis, reps: &[usize], name: Option<String>) -> PeriodicPattern {
    let (px, py) = basis.rect();
    let reps: BTreeSet<usize> = reps.iter().copied().collect();
    let cells = (0..py)
        .flat_map(|y| (0..px).map(move |x| (x, y)))
        .filter(|&(x, y)| reps.contains(&basis.rep((x as i64, y as i64))));
    PeriodicPattern::new(lat, (px, py), cells, name).expect("superperiod is valid")
}

/// Searches rectangular periods `px ≤ max.0`, `py ≤ max.1` in order of area,
/// then `px`, then `py`, for a verifying pattern of density at most `target`.
/// Returns the first hit.
pub fn search_patterns(
    lattice: Lattice,
    kind: Kind,
    max_period: (usize, usize),
    target: Density,
) -> Option<PeriodicPattern> {
    let mut periods: Vec<(usize, usize)> = (1..=max_period.0)
        .flat_map(|px| (1..=max_period.1).map(move |py| (px, py)))
        .filter(|&(px, py)| lattice.period_ok(px, py))
        .collect();
    periods.sort_by_key(|&(px, py)| (px * py, px, py));
    periods.into_iter().find_map(|(px, py)| {
        let basis = Basis { p: px, shift: 0, q: py };
        search_in_basis(lattice, kind, basis, target)
    })
}

/// Like [`search_patterns`] but over sheared period lattices spanned by
/// `(p, 0)` and `(shift, q)` with `p·q = area`. The result is re-expressed
/// over its rectangular superperiod.
pub fn search_sheared_patterns(
    lattice: Lattice,
    kind: Kind,
    area: usize,
    target: Density,
) -> Option<PeriodicPattern> {
    (1..=area)
        .filter(|p| area.is_multiple_of(*p))
        .flat_map(|p| (0..p).map(move |shift| Basis { p, shift, q: area / p }))
        .find_map(|basis| search_in_basis(lattice, kind, basis, target))
}

fn search_in_basis(lat: Lattice, kind: Kind, basis: Basis, target: Density) -> Option<PeriodicPattern> {
    if !basis.lattice_ok(lat) {
        return None;
    }
    let cap = (target * Ratio::from_integer(basis.size() as u64)).floor().to_integer() as usize;
    let reps = search_basis(lat, kind, basis, cap)?;
    let name = format!("{lat}-{kind}-search");
    let p = expand(lat, basis, &reps, Some(name));
    debug_assert!(verify_pattern(&p, kind).holds);
    Some(p)
}

struct Builtin {
    name: &'static str,
    lattice: Lattice,
    kind: Kind,
    density: (u64, u64),
    rows: &'static [&'static str],
}

/// Builtin pattern tables. Each was produced by [`search_patterns`] (or
/// [`search_sheared_patterns`] for TRI OLD, whose 4/13 tiling has no
/// rectangular period up to 6x6) and frozen here; [`builtin`] re-verifies on
/// every load.
const BUILTINS: &[Builtin] = &[
    Builtin {
        name: "sq-old",
        lattice: Lattice::Sq,
        kind: Kind::Old,
        density: (2, 5),
        rows: &["#", ".", "#", ".", "."],
    },
    Builtin {
        name: "sq-redold",
        lattice: Lattice::Sq,
        kind: Kind::RedOld,
        density: (1, 2),
        rows: &["#", "."],
    },
    Builtin {
        name: "hex-old",
        lattice: Lattice::Hex,
        kind: Kind::Old,
        density: (1, 2),
        rows: &["##", ".."],
    },
    Builtin {
        name: "hex-redold",
        lattice: Lattice::Hex,
        kind: Kind::RedOld,
        density: (2, 3),
        rows: &["####..", "#..###"],
    },
    // period lattice spanned by (13,0) and (2,1), written over its 13x13 superperiod
    Builtin {
        name: "tri-old",
        lattice: Lattice::Tri,
        kind: Kind::Old,
        density: (4, 13),
        rows: &[
            "#.#..#.#.....",
            "..#.#..#.#...",
            "....#.#..#.#.",
            "#.....#.#..#.",
            "#.#.....#.#..",
            "..#.#.....#.#",
            ".#..#.#.....#",
            ".#.#..#.#....",
            "...#.#..#.#..",
            ".....#.#..#.#",
            ".#.....#.#..#",
            ".#.#.....#.#.",
            "#..#.#.....#.",
        ],
    },
    Builtin {
        name: "tri-redold",
        lattice: Lattice::Tri,
        kind: Kind::RedOld,
        density: (3, 8),
        rows: &["##..", ".#.#", "#..#", "...."],
    },
    Builtin {
        name: "king-old",
        lattice: Lattice::King,
        kind: Kind::Old,
        density: (1, 4),
        rows: &["#...", ".#..", "...#", "..#."],
    },
    // search_patterns(King, RedOld, (6, 6), 1/3): the first hit is the 3x3 diagonal
    Builtin {
        name: "king-redold",
        lattice: Lattice::King,
        kind: Kind::RedOld,
        density: (1, 3),
        rows: &["#..", ".#.", "..#"],
    },
];

pub const BUILTIN_NAMES: [&str; 8] = [
    "sq-old",
    "sq-redold",
    "hex-old",
    "hex-redold",
    "tri-old",
    "tri-redold",
    "king-old",
    "king-redold",
];

/// Loads a builtin pattern (with or without the `builtin:` prefix) and
/// re-verifies it; a table that does not verify at its stated density is an
/// error.
pub fn builtin(name: &str) -> Result<(PeriodicPattern, Kind)> {
    let key = name.strip_prefix("builtin:").unwrap_or(name);
    let Some(b) = BUILTINS.iter().find(|b| b.name == key) else {
        return input(format!("unknown builtin pattern '{key}'"));
    };
    let p = PeriodicPattern::from_rows(b.lattice, b.rows, Some(b.name.to_string()))?;
    let rep = verify_pattern(&p, b.kind);
    if !rep.holds || rep.density != Ratio::new(b.density.0, b.density.1) {
        return Err(Error::Fixture(format!(
            "builtin {key}: holds={} density={} (expected {}/{})",
            rep.holds, rep.density, b.density.0, b.density.1
        )));
    }
    Ok((p, b.kind))
}

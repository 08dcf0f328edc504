//! Acceptance report: one line per criterion, nonzero exit on any failure.

mod common;

use common::{all_formulas, all_graphs, all_subsets, random_formula, random_graph};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use redold::grids::{self, Lattice};
use redold::reduce3sat::{self, build_reduction, CnfInstance};
use redold::{fixtures, solve, verify, Kind, VertexSet};
use std::time::{Duration, Instant};

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: usize, ok: bool, what: &str, detail: String, took: Duration) {
        if !ok {
            self.failures += 1;
        }
        let tag = if ok { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {id}: {what} ({detail}; {:.2?})", took);
    }
}

fn g11_certificates() -> (bool, String) {
    let g = fixtures::g11();
    let old = solve::min_set(&g, Kind::Old, false).unwrap();
    let red = solve::min_set(&g, Kind::RedOld, true).unwrap();
    let all = red.all_minimum_sets.unwrap_or_default();
    let expected = VertexSet::from_indices(11, fixtures::G11_REDOLD_SET).unwrap();
    let ok = old.value == Some(6) && red.value == Some(9) && all == vec![expected];
    let names = all.first().map(|s| g.set_labels(s).join(",")).unwrap_or_default();
    (ok, format!("OLD={:?} RED:OLD={:?} optima={} [{}]", old.value, red.value, all.len(), names))
}

fn equivalences() -> (bool, String) {
    let mut checked = 0u64;
    let mut bad = 0u64;
    for n in 1..=6 {
        for g in all_graphs(n) {
            for s in all_subsets(n) {
                let thm = verify::is_old(&g, &s).holds;
                let agree = thm == verify::is_old_by_traces(&g, &s)
                    && thm == verify::is_old_collection(&g, &s)
                    && verify::is_red_old(&g, &s).holds
                        == verify::is_red_old_definitional(&g, &s).holds;
                bad += u64::from(!agree);
                checked += 1;
            }
        }
    }
    (bad == 0, format!("all labeled graphs n<=6, all subsets: {checked} pairs, {bad} disagreements"))
}

fn solver_oracle() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut graphs: Vec<_> = fixtures::NAMES.iter().map(|n| fixtures::builtin(n).unwrap()).collect();
    for _ in 0..200 {
        let n = rng.gen_range(4..=12);
        let p = rng.gen_range(0.2..0.8);
        graphs.push(random_graph(&mut rng, n, p));
    }
    let mut bad = 0;
    for g in &graphs {
        for kind in [Kind::Old, Kind::RedOld] {
            let fast = solve::min_set(g, kind, false).unwrap();
            let slow = solve::min_set_bruteforce(g, kind).unwrap();
            if fast.value != slow.value || fast.witness != slow.witness {
                bad += 1;
            }
        }
    }
    (bad == 0, format!("{} graphs x 2 kinds, {bad} disagreements", graphs.len()))
}

fn reduction_iff() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut family = all_formulas(2, 2);
    let exhaustive = family.len();
    family.extend((0..20).map(|_| random_formula(&mut rng, 3, 2)));
    let mut bad = 0;
    for cnf in &family {
        let out = build_reduction(cnf);
        let (n, m) = (cnf.num_vars(), cnf.num_clauses());
        let d = reduce3sat::decide_sat_via_redold(cnf).unwrap();
        let sat = reduce3sat::satisfiable_bruteforce(cnf).unwrap().is_some();
        let ok = d.satisfiable == sat
            && d.min_value.is_some_and(|v| v >= 16 * n + 3 * m)
            && out.graph.n() == 18 * n + 4 * m
            && d.threshold == 16 * n + 3 * m;
        bad += usize::from(!ok);
    }
    (bad == 0, format!("{exhaustive} exhaustive N=2 M<=2 + 20 random N=3 M=2, {bad} disagreements"))
}

fn gadget_forcing() -> (bool, String) {
    let family: Vec<CnfInstance> = (1..=2).flat_map(|n| all_formulas(n, 2)).collect();
    let mut bad = 0;
    let mut extra = 0;
    for cnf in &family {
        let v = reduce3sat::validate_gadget_forcing(cnf).unwrap();
        bad += usize::from(!v.passes());
        extra += usize::from(!v.extra_forced.is_empty());
    }
    (
        bad == 0,
        format!(
            "{} instances N<=2 M<=2, {bad} failures, {extra} with a one-literal clause forcing its literal",
            family.len()
        ),
    )
}

fn grid_densities() -> (bool, String) {
    let expected = [
        ("sq-old", (2, 5)),
        ("sq-redold", (1, 2)),
        ("hex-old", (1, 2)),
        ("hex-redold", (2, 3)),
        ("tri-old", (4, 13)),
        ("tri-redold", (3, 8)),
        ("king-old", (1, 4)),
        ("king-redold", (1, 3)),
    ];
    let mut bad = Vec::new();
    for (name, (a, b)) in expected {
        let (p, kind) = grids::builtin(name).unwrap();
        let r = grids::verify_pattern(&p, kind);
        if !r.holds || r.density != Ratio::new(a, b) {
            bad.push(name);
        }
    }
    let found = grids::search_patterns(Lattice::King, Kind::RedOld, (6, 6), Ratio::new(1, 3));
    let king = grids::builtin("king-redold").unwrap().0;
    let search_ok = found.as_ref().is_some_and(|f| f.period() == king.period() && f.cells() == king.cells());
    let ok = bad.is_empty() && search_ok;
    (ok, format!("8 builtins, failing {bad:?}; KING 1/3 search hit {:?}", found.map(|f| f.period())))
}

fn torus_agreement() -> (bool, String) {
    let mut bad = Vec::new();
    let mut dims = Vec::new();
    for name in grids::BUILTIN_NAMES {
        let (p, kind) = grids::builtin(name).unwrap();
        let c = grids::torus_cross_check(&p, kind, None).unwrap();
        if !c.agrees() || !c.infinite {
            bad.push(name);
        }
        dims.push(format!("{}x{}", c.dims.0, c.dims.1));
    }
    (bad.is_empty(), format!("tori {}, failing {bad:?}", dims.join(" ")))
}

fn consistency() -> (bool, String) {
    let mut ok = true;
    for lat in Lattice::ALL {
        let old = grids::builtin(&format!("{lat}-old")).unwrap().0;
        let red = grids::builtin(&format!("{lat}-redold")).unwrap().0;
        ok &= grids::density(&red) >= grids::density(&old);
    }
    let king = grids::density(&grids::builtin("king-old").unwrap().0);
    ok &= king >= Ratio::new(6, 25);
    (
        ok,
        "lower bounds and hardness are not computable; checked RED:OLD >= OLD per lattice and KING OLD 1/4 >= 6/25"
            .to_string(),
    )
}

fn main() {
    let mut report = Report { failures: 0 };
    type Criterion = (&'static str, fn() -> (bool, String), Option<Duration>);
    let criteria: [Criterion; 8] = [
        ("G11 certificates", g11_certificates, Some(Duration::from_secs(10))),
        ("characterization equivalences", equivalences, None),
        ("solver matches brute force", solver_oracle, Some(Duration::from_secs(300))),
        ("reduction decides 3-SAT", reduction_iff, Some(Duration::from_secs(1800))),
        ("gadget forcing", gadget_forcing, None),
        ("grid densities", grid_densities, Some(Duration::from_secs(60))),
        ("torus cross-check", torus_agreement, None),
        ("informational consistency", consistency, None),
    ];
    for (i, (what, run, limit)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = run();
        let took = t.elapsed();
        let in_time = limit.is_none_or(|l| took < l);
        report.line(i + 1, ok && in_time, what, detail, took);
    }
    println!("{} of 8 criteria failed", report.failures);
    if report.failures > 0 {
        std::process::exit(1);
    }
}

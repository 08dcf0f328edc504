//! `redold`: verify, solve, reduce and grid-check from the command line.

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use redold::grids::{self, GridWitness, Lattice, PeriodicPattern};
use redold::reduce3sat::{self, CnfInstance};
use redold::solve::{self, DEFAULT_BUDGET};
use redold::verify::{self, Witness};
use redold::{fixtures, Graph, Kind, VertexSet};
use serde_json::{json, Map, Value};
use std::path::Path;
use std::process::ExitCode;

const HOLDS: u8 = 0;
const FAILS: u8 = 1;
const INPUT_ERROR: u8 = 2;
const BUDGET_EXCEEDED: u8 = 3;
const DISAGREEMENT: u8 = 4;

#[derive(Parser)]
#[command(name = "redold", version, about = "OLD and RED:OLD sets on graphs and grids")]
struct Cli {
    /// Output format; JSON is the stable one.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Old,
    Redold,
    Ld,
    Ic,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a vertex set has the given property.
    Verify {
        /// Graph file (JSON or edge list) or builtin:NAME.
        graph: String,
        /// Comma-separated labels or indices, or a JSON file holding an array of them.
        set: String,
        #[arg(long, value_enum)]
        kind: VerifyKind,
        /// Override the fold of old/redold (k-fold domination and k-distinguishing).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Find a minimum set exactly.
    Solve {
        graph: String,
        #[arg(long)]
        kind: Kind,
        /// Also list every minimum set.
        #[arg(long)]
        enumerate: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Build the 3-SAT reduction graph for a DIMACS CNF file.
    Reduce {
        cnf: String,
        /// Write the reduction graph JSON here.
        #[arg(long)]
        emit: Option<String>,
        /// Decide satisfiability through RED:OLD and compare against brute force.
        #[arg(long)]
        decide: bool,
        /// Check the gadget forcing claims with the exact solver.
        #[arg(long)]
        validate_gadgets: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Verify a periodic detector pattern on an infinite lattice.
    Grid {
        lattice: Lattice,
        /// builtin:NAME or a pattern JSON file.
        pattern: String,
        /// Required unless the pattern is a builtin.
        #[arg(long)]
        kind: Option<Kind>,
        /// Report the exact density.
        #[arg(long)]
        density: bool,
        /// Also verify on a torus, WxH or default multiples of the period.
        #[arg(long, value_name = "WxH", num_args = 0..=1, default_missing_value = "auto")]
        cross_check: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Verify { .. } => "verify",
            Command::Solve { .. } => "solve",
            Command::Reduce { .. } => "reduce",
            Command::Grid { .. } => "grid",
        }
    }
}

struct Outcome {
    code: u8,
    fields: Map<String, Value>,
}

fn outcome(code: u8, fields: Value) -> Outcome {
    let Value::Object(fields) = fields else {
        unreachable!("reports are objects")
    };
    Outcome { code, fields }
}

fn read(path: &str) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {path}"))
}

fn load_graph(spec: &str) -> anyhow::Result<Graph> {
    if spec.starts_with("builtin:") {
        return Ok(fixtures::builtin(spec)?);
    }
    Graph::parse(&read(spec)?).with_context(|| format!("in {spec}"))
}

fn load_set(g: &Graph, spec: &str) -> anyhow::Result<VertexSet> {
    if !Path::new(spec).is_file() {
        return Ok(g.parse_set(spec)?);
    }
    let v: Value = serde_json::from_str(&read(spec)?).with_context(|| format!("in {spec}"))?;
    let items = match &v {
        Value::Array(a) => a,
        Value::Object(o) => o
            .get("set")
            .and_then(Value::as_array)
            .ok_or_else(|| anyhow!("{spec}: expected an array or an object with a \"set\" array"))?,
        _ => bail!("{spec}: expected an array of labels or indices"),
    };
    let mut s = VertexSet::empty(g.n());
    for item in items {
        let v = match item {
            Value::String(name) => g.resolve(name)?,
            Value::Number(_) => g.resolve(&item.to_string())?,
            other => bail!("{spec}: {other} is not a label or index"),
        };
        s.insert(v);
    }
    Ok(s)
}

fn witness_json(g: &Graph, w: Witness) -> Value {
    match w {
        Witness::UnderDominated { vertex, count } => {
            json!({ "type": "under_dominated", "vertex": g.label(vertex), "count": count })
        }
        Witness::UnderDistinguished { u, v, count } => {
            json!({ "type": "under_distinguished", "u": g.label(u), "v": g.label(v), "count": count })
        }
    }
}

fn cmd_verify(graph: &str, set: &str, kind: VerifyKind, k: Option<usize>) -> anyhow::Result<Outcome> {
    let fold = match (kind, k) {
        (VerifyKind::Ld | VerifyKind::Ic, Some(_)) => bail!("--k applies only to old and redold"),
        (_, Some(0)) => bail!("--k must be positive"),
        (_, Some(k)) => k,
        (VerifyKind::Redold, None) => 2,
        _ => 1,
    };
    let g = load_graph(graph)?;
    let s = load_set(&g, set)?;
    let (holds, witness) = match kind {
        VerifyKind::Old | VerifyKind::Redold => {
            let r = verify::is_k_old(&g, &s, fold);
            (r.holds, r.witness.map(|w| witness_json(&g, w)))
        }
        VerifyKind::Ld => (verify::is_locating_dominating(&g, &s), None),
        VerifyKind::Ic => (verify::is_identifying_code(&g, &s), None),
    };
    let kind_name = match kind {
        VerifyKind::Old => "old",
        VerifyKind::Redold => "redold",
        VerifyKind::Ld => "ld",
        VerifyKind::Ic => "ic",
    };
    let mut out = json!({
        "kind": kind_name,
        "holds": holds,
        "set": g.set_labels(&s),
        "witness": witness,
    });
    if matches!(kind, VerifyKind::Old | VerifyKind::Redold) {
        out["k"] = json!(fold);
    }
    Ok(outcome(if holds { HOLDS } else { FAILS }, out))
}

fn cmd_solve(graph: &str, kind: Kind, enumerate: bool, budget: u64) -> anyhow::Result<Outcome> {
    let g = load_graph(graph)?;
    let r = solve::min_set_with_budget(&g, kind, enumerate, budget)?;
    let mut out = json!({
        "kind": kind.to_string(),
        "value": r.value,
        "feasible": r.value.is_some(),
        "witness": r.witness.as_ref().map(|s| g.set_labels(s)),
        "nodes": r.nodes,
    });
    if let Some(all) = &r.all_minimum_sets {
        out["optimum_count"] = json!(all.len());
        out["all_minimum_sets"] = json!(all.iter().map(|s| g.set_labels(s)).collect::<Vec<_>>());
    }
    Ok(outcome(HOLDS, out))
}

fn cmd_reduce(
    cnf_path: &str,
    emit: Option<&str>,
    decide: bool,
    validate: bool,
    budget: u64,
) -> anyhow::Result<Outcome> {
    let cnf: CnfInstance =
        reduce3sat::parse_dimacs(&read(cnf_path)?).with_context(|| format!("in {cnf_path}"))?;
    let red = reduce3sat::build_reduction(&cnf);
    if let Some(path) = emit {
        let text = serde_json::to_string_pretty(&red.to_json())?;
        std::fs::write(path, text + "\n").with_context(|| format!("cannot write {path}"))?;
    }
    let mut code = HOLDS;
    let mut out = json!({
        "vertices": red.graph.n(),
        "edges": red.graph.edge_count(),
        "threshold": red.threshold,
        "num_vars": red.num_vars,
        "num_clauses": red.num_clauses,
        "emitted": emit,
    });
    if decide {
        let d = reduce3sat::decide_sat_via_redold_with_budget(&cnf, budget)?;
        let oracle = reduce3sat::satisfiable_bruteforce(&cnf)?;
        let agree = d.satisfiable == oracle.is_some();
        let verdict = match (d.satisfiable, d.min_value) {
            (true, _) => "sat, RED:OLD = threshold".to_string(),
            (false, Some(v)) => format!("unsat, RED:OLD = {v} > threshold"),
            (false, None) => "unsat, no RED:OLD set".to_string(),
        };
        out["decision"] = json!({
            "satisfiable": d.satisfiable,
            "bruteforce_satisfiable": oracle.is_some(),
            "agree": agree,
            "min_value": d.min_value,
            "verdict": verdict,
            "witness": d.witness.as_ref().map(|s| red.graph.set_labels(s)),
            "assignment": oracle.map(|a| a.0),
        });
        out["holds"] = json!(agree);
        if !agree {
            code = DISAGREEMENT;
        }
    }
    if validate {
        let v = reduce3sat::validate_gadget_forcing_with_budget(&cnf, budget)?;
        out["gadgets"] = json!({
            "passes": v.passes(),
            "forced_in_every_optimum": v.forced_in_every_optimum,
            "propagation_forces_all": v.propagation_forces_all,
            "literal_choice_required": v.literal_choice_required,
            "extra_forced": v.extra_forced.iter().map(|&x| red.graph.label(x)).collect::<Vec<_>>(),
            "optimum": v.optimum,
        });
        if !v.passes() && code == HOLDS {
            code = FAILS;
        }
    }
    Ok(outcome(code, out))
}

fn parse_dims(s: &str) -> anyhow::Result<(usize, usize)> {
    let (w, h) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| anyhow!("--cross-check expects WxH, got '{s}'"))?;
    let dim = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad torus dimension '{t}'"));
    Ok((dim(w)?, dim(h)?))
}

fn grid_witness_json(w: GridWitness) -> Value {
    serde_json::to_value(w).expect("witness serializes")
}

fn cmd_grid(
    lattice: Lattice,
    pattern: &str,
    kind: Option<Kind>,
    density: bool,
    cross_check: Option<&str>,
) -> anyhow::Result<Outcome> {
    let dims = match cross_check {
        None | Some("auto") => None,
        Some(s) => Some(parse_dims(s)?),
    };
    let (p, kind) = if pattern.starts_with("builtin:") {
        let (p, builtin_kind) = grids::builtin(pattern)?;
        (p, kind.unwrap_or(builtin_kind))
    } else {
        let p = PeriodicPattern::parse(&read(pattern)?).with_context(|| format!("in {pattern}"))?;
        let kind = kind.ok_or_else(|| anyhow!("--kind is required for pattern files"))?;
        (p, kind)
    };
    if p.lattice() != lattice {
        bail!("pattern is for the {} lattice, not {lattice}", p.lattice());
    }
    let r = grids::verify_pattern(&p, kind);
    let mut out = json!({
        "lattice": lattice.to_string(),
        "kind": kind.to_string(),
        "period": [p.period().0, p.period().1],
        "holds": r.holds,
        "witness": r.witness.map(grid_witness_json),
    });
    if density {
        out["density"] = json!(r.density.to_string());
    }
    let mut holds = r.holds;
    if cross_check.is_some() {
        let c = grids::torus_cross_check(&p, kind, dims)?;
        out["cross_check"] = json!({
            "dims": [c.dims.0, c.dims.1],
            "infinite": c.infinite,
            "torus": c.torus,
            "agrees": c.agrees(),
        });
        holds &= c.agrees();
    }
    Ok(outcome(if holds { HOLDS } else { FAILS }, out))
}

fn run(cmd: &Command) -> anyhow::Result<Outcome> {
    match cmd {
        Command::Verify { graph, set, kind, k } => cmd_verify(graph, set, *kind, *k),
        Command::Solve { graph, kind, enumerate, budget } => cmd_solve(graph, *kind, *enumerate, *budget),
        Command::Reduce { cnf, emit, decide, validate_gadgets, budget } => {
            cmd_reduce(cnf, emit.as_deref(), *decide, *validate_gadgets, *budget)
        }
        Command::Grid { lattice, pattern, kind, density, cross_check } => {
            cmd_grid(*lattice, pattern, *kind, *density, cross_check.as_deref())
        }
    }
}

fn error_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<redold::Error>() {
        Some(redold::Error::BudgetExceeded { .. }) => BUDGET_EXCEEDED,
        _ => INPUT_ERROR,
    }
}

fn semantics() -> Value {
    json!({
        "0": "success or property holds",
        "1": "property fails",
        "2": "input error",
        "3": "budget exceeded",
        "4": "reduction disagrees with brute force",
    })
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if x.is_object() {
                    out.push_str(&format!("{pad}{k}:\n"));
                    render_text(x, indent + 1, out);
                } else {
                    out.push_str(&format!("{pad}{k}: {}\n", scalar(x)));
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            a.iter().map(scalar).collect::<Vec<_>>().join(",")
        }
        other => other.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, mut fields) = match run(&cli.command) {
        Ok(o) => (o.code, o.fields),
        Err(e) => {
            let code = error_code(&e);
            let mut m = Map::new();
            m.insert("error".into(), json!(format!("{e:#}")));
            (code, m)
        }
    };
    fields.insert("command".into(), json!(cli.command.name()));
    fields.insert("exit_code".into(), json!(code));
    if cli.format == Format::Json {
        fields.insert("exit_code_semantics".into(), semantics());
        println!("{}", Value::Object(fields));
    } else {
        let mut s = String::new();
        render_text(&Value::Object(fields), 0, &mut s);
        print!("{s}");
    }
    ExitCode::from(code)
}

//! Command-line front end for the `oddcycle` library.
//!
//! Exit status: 0 on success, 1 when a verification finds a counterexample,
//! 2 on usage, parse or size-limit errors.

mod input;

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use oddcycle::extremal::{
    verify_classification_and_maximum, verify_enumeration_agreement, verify_kelmans_dominance, verify_monotonicity,
    verify_radius_independence, verify_reduction, verify_skew_identity, VerificationReport,
};
use oddcycle::kelmans::dominance_detail;
use oddcycle::roots::default_eps;
use oddcycle::skew::{all_orientations, skew_spectral_radius, verify_identity};
use oddcycle::{
    compare_roots, matching_profile, max_matching_root, reduce_to_extremal, skew_char_poly, Execution, Graph,
    Orientation,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "oddcycle",
    version,
    about = "Exact matching polynomials, skew spectra and Kelmans reductions"
)]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Digits after the decimal point for root values.
    #[arg(long, global = true, default_value_t = 6)]
    digits: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// Graph arguments are graph6 strings, `@file` edge lists, or constructor
/// specs (`F n m`, `H n`, `K1 s`, `K n`, `C k`, `P k`, `E n`) joined by `+`
/// for disjoint unions.
#[derive(Subcommand)]
enum Command {
    /// Matching counts and matching polynomial. Reads graph6 lines from stdin
    /// when no graph is given.
    Poly { graphs: Vec<String> },
    /// Largest matching root with its isolating interval. Reads graph6 lines
    /// from stdin when no graph is given.
    Maxroot { graphs: Vec<String> },
    /// Skew characteristic polynomial, identity check and spectral radius.
    Skew {
        graph: String,
        /// Orientation bitmask in hex over the lexicographic edge list.
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        mask: Option<String>,
        /// Every orientation.
        #[arg(long)]
        all: bool,
    },
    /// Kelmans reduction trace to F(n, m).
    Reduce { graph: String },
    /// Run a verification sweep.
    Verify {
        /// classification, maximum, monotonicity, reduction, kelmans,
        /// identity, radius, enumeration or all.
        id: String,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Whether G1 dominates G2.
    Dominance { g1: String, g2: String },
}

enum Status {
    Ok,
    Counterexample,
}

struct Output {
    json: Value,
    table: String,
    status: Status,
}

impl Output {
    fn ok(json: Value, table: String) -> Self {
        Output {
            json,
            table,
            status: Status::Ok,
        }
    }
}

fn graphs_or_stdin(args: &[String]) -> Result<Vec<(String, Graph)>> {
    let lines: Vec<String> = if args.is_empty() {
        io::stdin()
            .lock()
            .lines()
            .collect::<io::Result<Vec<_>>>()?
            .into_iter()
            .filter(|l| !l.trim().is_empty())
            .collect()
    } else {
        args.to_vec()
    };
    lines
        .into_iter()
        .map(|s| Ok((s.trim().to_string(), input::parse_graph(&s)?)))
        .collect()
}

fn cmd_poly(args: &[String]) -> Result<Output> {
    let mut results = Vec::new();
    let mut table = String::new();
    for (input, g) in graphs_or_stdin(args)? {
        let p = matching_profile(&g);
        let poly = p.polynomial();
        let counts: Vec<String> = p.counts().iter().map(|c| c.to_string()).collect();
        table.push_str(&format!(
            "graph       {input} ({})\nprofile     {}\npolynomial  {poly}\n",
            g.to_graph6(),
            counts.join(" ")
        ));
        results.push(json!({
            "graph6": g.to_graph6(),
            "order": g.order(),
            "size": g.size(),
            "profile": counts,
            "polynomial": poly.to_string(),
            "coefficients": poly,
        }));
    }
    Ok(Output::ok(json!({ "results": results }), table))
}

fn cmd_maxroot(args: &[String], digits: usize) -> Result<Output> {
    let mut results = Vec::new();
    let mut table = String::new();
    for (input, g) in graphs_or_stdin(args)? {
        let t = max_matching_root(&g, &default_eps());
        let value = t.to_decimal(digits);
        table.push_str(&format!(
            "graph     {input} ({})\nt         {value}\ninterval  [{}, {}]\n",
            g.to_graph6(),
            t.lo(),
            t.hi()
        ));
        results.push(json!({ "graph6": g.to_graph6(), "value": value, "root": t }));
    }
    Ok(Output::ok(json!({ "results": results }), table))
}

fn cmd_skew(graph: &str, mask: Option<&str>, all: bool, digits: usize) -> Result<Output> {
    let g = input::parse_graph(graph)?;
    let eps = default_eps();
    let orientations: Vec<Orientation> = if all {
        all_orientations(&g)?.collect()
    } else {
        vec![Orientation::from_hex(
            g.clone(),
            mask.expect("clap requires --mask without --all"),
        )?]
    };
    let mut rows = Vec::new();
    let mut table = String::new();
    let mut distinct = std::collections::BTreeSet::new();
    let mut all_hold = true;
    let mut best: Option<oddcycle::AlgebraicRoot> = None;
    for o in &orientations {
        let phi = skew_char_poly(o)?;
        let holds = verify_identity(o)?;
        let rho = skew_spectral_radius(o, &eps)?;
        all_hold &= holds;
        distinct.insert(phi.to_string());
        table.push_str(&format!(
            "mask {:>6}  {phi:<28} identity={holds}  rho={}\n",
            o.mask_hex(),
            rho.to_decimal(digits)
        ));
        rows.push(json!({
            "mask": o.mask_hex(),
            "polynomial": phi.to_string(),
            "identity": holds,
            "radius": rho.to_decimal(digits),
        }));
        if best.as_ref().is_none_or(|b| compare_roots(&rho, b).is_gt()) {
            best = Some(rho);
        }
    }
    let best = best.expect("at least one orientation");
    let t = max_matching_root(&g, &eps);
    table.push_str(&format!(
        "orientations {}  distinct polynomials {}  identity for all: {all_hold}\nmax radius {}  t(G) {}\n",
        orientations.len(),
        distinct.len(),
        best.to_decimal(digits),
        t.to_decimal(digits)
    ));
    let json = json!({
        "graph6": g.to_graph6(),
        "orientations": rows,
        "distinct_polynomials": distinct.len(),
        "identity_holds_for_all": all_hold,
        "max_radius": best.to_decimal(digits),
        "t": t.to_decimal(digits),
    });
    Ok(Output::ok(json, table))
}

fn cmd_reduce(graph: &str) -> Result<Output> {
    let g = input::parse_graph(graph)?;
    let trace = reduce_to_extremal(&g)?;
    let mut table = format!("start  {}\n", trace.start());
    for (i, s) in trace.steps().iter().enumerate() {
        let moved: Vec<String> = s
            .step
            .moved_edges()
            .iter()
            .map(|((a, b), (c, d))| format!("{a}{b}->{c}{d}"))
            .collect();
        table.push_str(&format!(
            "{:>3}  {:?}  KT(u={}, v={})  moved [{}]  -> {}\n",
            i + 1,
            s.phase,
            s.step.beneficiary(),
            s.step.co_beneficiary(),
            moved.join(" "),
            s.result
        ));
    }
    table.push_str(&format!(
        "final  {} ({} steps)\n",
        trace.final_graph(),
        trace.steps().len()
    ));
    Ok(Output::ok(json!({ "trace": trace }), table))
}

fn cmd_dominance(a: &str, b: &str, digits: usize) -> Result<Output> {
    let (g1, g2) = (input::parse_graph(a)?, input::parse_graph(b)?);
    let d = dominance_detail(&g1, &g2);
    let root = d.difference_root.as_ref().map(|r| r.to_decimal(digits));
    let table = format!(
        "verdict     {}\ndifference  {}\nmax root    {}\nt(G1)       {}\n",
        d.verdict,
        d.difference,
        root.as_deref().unwrap_or("none"),
        d.threshold.to_decimal(digits)
    );
    let json = json!({
        "verdict": d.verdict,
        "difference": d.difference.to_string(),
        "difference_coefficients": d.difference,
        "difference_max_root": root,
        "t_g1": d.threshold.to_decimal(digits),
        "detail": d,
    });
    Ok(Output::ok(json, table))
}

const CHECKS: [&str; 8] = [
    "classification",
    "maximum",
    "monotonicity",
    "reduction",
    "kelmans",
    "identity",
    "radius",
    "enumeration",
];

fn canonical_check(id: &str) -> Option<&'static str> {
    Some(match id {
        "classification" | "1.5" => "classification",
        "maximum" | "4.2" => "maximum",
        "monotonicity" | "4.1" => "monotonicity",
        "reduction" | "2.2" => "reduction",
        "kelmans" | "3.7" | "3.12" => "kelmans",
        "identity" | "1.2" => "identity",
        "radius" => "radius",
        "enumeration" => "enumeration",
        _ => return None,
    })
}

fn default_max_n(check: &str) -> usize {
    match check {
        "monotonicity" => 20,
        "reduction" => 8,
        "kelmans" | "identity" | "radius" => 5,
        _ => 6,
    }
}

fn run_check(check: &str, max_n: usize, exec: Execution) -> Result<VerificationReport> {
    let merged = |f: &dyn Fn(usize) -> Result<VerificationReport>| -> Result<VerificationReport> {
        let mut r = (1..=max_n)
            .map(f)
            .reduce(|a, b| Ok(a?.merge(b?)))
            .unwrap_or_else(|| bail!("--max-n must be at least 1"))?;
        if let Some((base, _)) = r.universe.split_once(", n = ") {
            r.universe = format!("{base}, n <= {max_n}");
        }
        Ok(r)
    };
    Ok(match check {
        "classification" => merged(&|n| Ok(verify_classification_and_maximum(n, exec)?.0))?,
        "maximum" => merged(&|n| Ok(verify_classification_and_maximum(n, exec)?.1))?,
        "reduction" => merged(&|n| Ok(verify_reduction(n, exec)?))?,
        "monotonicity" => verify_monotonicity(max_n, exec)?,
        "kelmans" => verify_kelmans_dominance(max_n, exec)?,
        "identity" => verify_skew_identity(max_n, exec)?,
        "radius" => verify_radius_independence(max_n, exec)?,
        "enumeration" => verify_enumeration_agreement(max_n, exec)?,
        other => bail!("unknown check {other}"),
    })
}

fn cmd_verify(id: &str, max_n: Option<usize>) -> Result<Output> {
    let checks: Vec<&str> = if id == "all" {
        CHECKS.to_vec()
    } else {
        vec![canonical_check(id)
            .ok_or_else(|| anyhow!("unknown check {id:?}; expected one of {} or all", CHECKS.join(", ")))?]
    };
    let exec = Execution::Parallel;
    let mut reports = Vec::new();
    let mut table = String::new();
    for check in checks {
        let n = max_n.unwrap_or_else(|| default_max_n(check));
        let r = run_check(check, n, exec)?;
        table.push_str(&format!(
            "{} {:<14} {} | {} cases | {} counterexamples | {} ms\n",
            if r.passed() { "PASS" } else { "FAIL" },
            r.check,
            r.universe,
            r.cases,
            r.counterexamples.len(),
            r.elapsed_ms
        ));
        for c in &r.counterexamples {
            table.push_str(&format!("     counterexample {}: {}\n", c.witness, c.detail));
        }
        for w in &r.witnesses {
            table.push_str(&format!("     witness {} {} = {}\n", w.label, w.graph6, w.value));
        }
        for note in &r.notes {
            table.push_str(&format!("     note {note}\n"));
        }
        reports.push(r);
    }
    let passed = reports.iter().all(VerificationReport::passed);
    let json = json!({ "passed": passed, "reports": reports });
    let status = if passed { Status::Ok } else { Status::Counterexample };
    Ok(Output { json, table, status })
}

fn run(cli: &Cli) -> Result<Status> {
    let name = match &cli.command {
        Command::Poly { .. } => "poly",
        Command::Maxroot { .. } => "maxroot",
        Command::Skew { .. } => "skew",
        Command::Reduce { .. } => "reduce",
        Command::Verify { .. } => "verify",
        Command::Dominance { .. } => "dominance",
    };
    let out = match &cli.command {
        Command::Poly { graphs } => cmd_poly(graphs)?,
        Command::Maxroot { graphs } => cmd_maxroot(graphs, cli.digits)?,
        Command::Skew { graph, mask, all } => cmd_skew(graph, mask.as_deref(), *all, cli.digits)?,
        Command::Reduce { graph } => cmd_reduce(graph)?,
        Command::Verify { id, max_n } => cmd_verify(id, *max_n)?,
        Command::Dominance { g1, g2 } => cmd_dominance(g1, g2, cli.digits)?,
    };
    let text = match cli.format {
        Format::Table => out.table,
        Format::Json => {
            let mut body = json!({ "schema": 1, "command": name });
            if let (Value::Object(dst), Value::Object(src)) = (&mut body, out.json) {
                dst.extend(src);
            }
            serde_json::to_string_pretty(&body)? + "\n"
        }
    };
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(out.status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        pool = pool.num_threads(t);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Counterexample) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! Command-line driver: batch confluence verification, stabilization,
//! diagram-game trajectories, span/connectedness queries, chip diagrams,
//! folding, and graph export.
//!
//! All subcommand handlers return their output as a string plus an exit
//! code, so the whole surface is testable without spawning processes.

use crate::central::{self, budget_from_env};
use crate::rootsys::{build, Family, RootSystem, RootSystemType, Weight};
use crate::ucf::{ucf_move, zero_components, UcfAssignment};
use crate::{Error, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use std::fmt::Write as _;
use std::time::Instant;

/// Rank at which exhaustive verification is long-running enough to require
/// an explicit opt-in.
const LONG_RANK: usize = 6;

#[derive(Parser, Debug)]
#[command(
    name = "centralfire",
    version,
    about = "Exact central-firing on root-system weight lattices"
)]
pub struct Cli {
    /// Node budget for exhaustive searches (default: CENTRALFIRE_BUDGET or 50,000,000).
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Worker threads for report rows (default: one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Unlock long-running searches (verification at rank 6 and above).
    #[arg(long, global = true)]
    pub long: bool,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Decide confluence from 0 and every fundamental weight; compare
    /// against the predicted pattern.
    Verify {
        /// Root system type, e.g. A3, D4, E6.
        ty: String,
    },
    /// Stabilize a weight (labeled or unlabeled) or an unlabeled Type-A
    /// chip configuration.
    Stabilize {
        ty: String,
        /// Weight: "0", "w3", or coordinates "1,0,2".
        weight: Option<String>,
        /// Unlabeled chip positions, e.g. "0,0,0,0" (Type A only).
        #[arg(long)]
        chips: Option<String>,
        /// Stabilize the Weyl orbit instead of the labeled weight.
        #[arg(long)]
        unlabeled: bool,
    },
    /// Print diagram-game trajectories from a dominant weight
    /// (simply-laced types).
    Ucf {
        ty: String,
        weight: String,
        /// Scripted play: comma-separated 1-based component choices.
        #[arg(long)]
        script: Option<String>,
    },
    /// Firing span: dimension and echelon basis (simple-root coordinates).
    Span { ty: String, weight: String },
    /// Connectedness of the firing graph; in Type A also the closed-form
    /// classification and its witness.
    Connected { ty: String, weight: String },
    /// Chip configuration of a weight (classical types).
    Chips { ty: String, weight: String },
    /// Fold a simply-laced diagram along an automorphism given in cycle
    /// notation, e.g. "(1 3)".
    Fold { source: String, sigma: String },
    /// Export the firing graph from a weight.
    Export {
        ty: String,
        weight: String,
        /// dot or json.
        graph_format: String,
        /// Output path.
        out: std::path::PathBuf,
    },
}

/// Parse arguments and execute; returns (exit code, output).
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let budget = cli.budget.unwrap_or_else(budget_from_env);
    let go = || match execute(&cli.cmd, budget, cli.long, cli.format) {
        Ok(pair) => pair,
        Err(e) => (1, format!("error: {e}\n")),
    };
    match cli.threads {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .map(|pool| pool.install(go))
            .unwrap_or_else(|e| (1, format!("error: {e}\n"))),
        None => go(),
    }
}

fn parse_system(ty: &str) -> Result<RootSystem> {
    Ok(build(ty.parse::<RootSystemType>()?))
}

fn parse_weight(rs: &RootSystem, s: &str) -> Result<Weight> {
    Weight::parse(s, rs.rank())
}

fn execute(cmd: &Cmd, budget: usize, long: bool, format: Format) -> Result<(i32, String)> {
    match cmd {
        Cmd::Verify { ty } => {
            let rs = parse_system(ty)?;
            if rs.rank() >= LONG_RANK && !long {
                return Err(Error::Invalid(format!(
                    "verification of {} (rank {}) is long-running; pass --long to enable",
                    rs.ty,
                    rs.rank()
                )));
            }
            Ok(cmd_verify(&rs, budget, format))
        }
        Cmd::Stabilize {
            ty,
            weight,
            chips,
            unlabeled,
        } => cmd_stabilize(ty, weight.as_deref(), chips.as_deref(), *unlabeled, budget, format),
        Cmd::Ucf { ty, weight, script } => {
            let rs = parse_system(ty)?;
            let lam = parse_weight(&rs, weight)?;
            cmd_ucf(&rs, &lam, script.as_deref(), budget, format)
        }
        Cmd::Span { ty, weight } => {
            let rs = parse_system(ty)?;
            let lam = parse_weight(&rs, weight)?;
            cmd_span(&rs, &lam, budget, format)
        }
        Cmd::Connected { ty, weight } => {
            let rs = parse_system(ty)?;
            let lam = parse_weight(&rs, weight)?;
            cmd_connected(&rs, &lam, budget, format)
        }
        Cmd::Chips { ty, weight } => {
            let rs = parse_system(ty)?;
            let lam = parse_weight(&rs, weight)?;
            let cfg = crate::chips::weight_to_chips(&rs, &lam)?;
            let out = match format {
                Format::Text => cfg.render(),
                Format::Json => {
                    let mut v = cfg.to_json();
                    v["schema"] = 1.into();
                    format!("{v}\n")
                }
            };
            Ok((0, out))
        }
        Cmd::Fold { source, sigma } => {
            let rs = parse_system(source)?;
            let perm = parse_cycles(sigma, rs.rank())?;
            let f = crate::folding::fold(&rs, &perm)?;
            Ok((0, render_fold(&f, format)))
        }
        Cmd::Export {
            ty,
            weight,
            graph_format,
            out,
        } => {
            let rs = parse_system(ty)?;
            let lam = parse_weight(&rs, weight)?;
            let graph = central::explore_graph(&rs, &lam, budget);
            let bytes = match graph_format.as_str() {
                "dot" => graph.to_dot(&rs),
                "json" => {
                    let mut s = serde_json::to_string_pretty(&graph.to_json(&rs))
                        .expect("graph serializes");
                    s.push('\n');
                    s
                }
                other => {
                    return Err(Error::Invalid(format!(
                        "unknown export format {other:?} (expected dot or json)"
                    )))
                }
            };
            std::fs::write(out, &bytes)?;
            Ok((
                0,
                format!(
                    "wrote {} nodes, {} edges to {}\n",
                    graph.nodes.len(),
                    graph.edges.len(),
                    out.display()
                ),
            ))
        }
    }
}

#[derive(Serialize)]
struct Row {
    start: String,
    predicted: bool,
    computed: Option<bool>,
    agree: bool,
    skipped: bool,
    nodes_explored: usize,
    #[serde(skip)]
    elapsed_ms: u128,
}

fn cmd_verify(rs: &RootSystem, budget: usize, format: Format) -> (i32, String) {
    let n = rs.rank();
    let starts: Vec<(String, Weight)> = std::iter::once(("0".to_string(), Weight::zero(n)))
        .chain((0..n).map(|i| (format!("w{}", i + 1), Weight::fundamental(n, i))))
        .collect();
    let rows: Vec<Row> = starts
        .par_iter()
        .map(|(label, omega)| {
            let predicted =
                central::conjecture_prediction(rs, omega).expect("start weights are fundamental");
            let clock = Instant::now();
            let (computed, nodes_explored, skipped) =
                match central::is_confluent_from_counted(rs, omega, budget) {
                    Ok((c, nodes)) => (Some(c), nodes, false),
                    Err(Error::BudgetExceeded { explored }) => (None, explored, true),
                    Err(e) => panic!("verification cannot fail otherwise: {e}"),
                };
            Row {
                start: label.clone(),
                predicted,
                computed,
                agree: computed == Some(predicted),
                skipped,
                nodes_explored,
                elapsed_ms: clock.elapsed().as_millis(),
            }
        })
        .collect();
    let all_agree = rows.iter().all(|r| r.agree);
    let any_skipped = rows.iter().any(|r| r.skipped);
    let code = i32::from(!(all_agree && !any_skipped));
    let out = match format {
        Format::Json => {
            let v = serde_json::json!({
                "schema": 1,
                "type": rs.ty.to_string(),
                "rows": rows,
                "all_agree": all_agree,
                "any_skipped": any_skipped,
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).expect("report serializes")
            )
        }
        Format::Text => {
            let mut s = format!(
                "{:<6} {:>9} {:>9} {:>6} {:>12} {:>10}\n",
                rs.ty, "predicted", "computed", "agree", "nodes", "ms"
            );
            for r in &rows {
                let computed = match r.computed {
                    Some(c) => c.to_string(),
                    None => "skipped".to_string(),
                };
                writeln!(
                    s,
                    "{:<6} {:>9} {:>9} {:>6} {:>12} {:>10}",
                    r.start, r.predicted, computed, r.agree, r.nodes_explored, r.elapsed_ms
                )
                .unwrap();
            }
            writeln!(
                s,
                "result: {}",
                if code == 0 { "all rows agree" } else { "MISMATCH OR SKIPPED ROWS" }
            )
            .unwrap();
            s
        }
    };
    (code, out)
}

fn cmd_stabilize(
    ty: &str,
    weight: Option<&str>,
    chips: Option<&str>,
    unlabeled: bool,
    budget: usize,
    format: Format,
) -> Result<(i32, String)> {
    let rs = parse_system(ty)?;
    if let Some(list) = chips {
        if rs.ty.family != Family::A {
            return Err(Error::Invalid(
                "unlabeled chip stabilization is a Type-A operation".into(),
            ));
        }
        let mut positions: Vec<i64> = list
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::ParseWeight(list.into())))
            .collect::<Result<_>>()?;
        positions.sort_by(|a, b| b.cmp(a));
        if positions.len() != rs.rank() + 1 {
            return Err(Error::Invalid(format!(
                "{} takes {} chips, got {}",
                rs.ty,
                rs.rank() + 1,
                positions.len()
            )));
        }
        let v = crate::chips::UnlabeledConfig::from_positions(&positions)?;
        let stab = crate::chips::stabilize_unlabeled_type_a(&v);
        let p = stab.positions();
        let line: Vec<String> = p.iter().map(|x| x.to_string()).collect();
        let out = match format {
            Format::Text => format!("{}\n", line.join(",")),
            Format::Json => format!(
                "{}\n",
                serde_json::json!({ "schema": 1, "positions": p })
            ),
        };
        return Ok((0, out));
    }
    let lam = parse_weight(&rs, weight.ok_or_else(|| {
        Error::Invalid("stabilize needs a weight or --chips".into())
    })?)?;
    if unlabeled {
        let nf = crate::unlabeled::orbit_normal_form(
            &rs,
            &crate::unlabeled::OrbitWeight::new(&rs, &lam),
        );
        let out = match format {
            Format::Text => format!("{}\n", nf.rep()),
            Format::Json => format!(
                "{}\n",
                serde_json::json!({ "schema": 1, "normal_form": nf.rep() })
            ),
        };
        Ok((0, out))
    } else {
        let forms = central::normal_forms(&rs, &lam, budget)?;
        let out = match format {
            Format::Text => {
                let mut s = String::new();
                for w in &forms {
                    writeln!(s, "{w}").unwrap();
                    if rs.ty.family.is_classical() {
                        s.push_str(&crate::chips::weight_to_chips(&rs, w)?.render());
                    }
                }
                s
            }
            Format::Json => format!(
                "{}\n",
                serde_json::json!({
                    "schema": 1,
                    "normal_forms": forms.iter().collect::<Vec<_>>(),
                })
            ),
        };
        Ok((0, out))
    }
}

fn cmd_ucf(
    rs: &RootSystem,
    lam: &Weight,
    script: Option<&str>,
    budget: usize,
    format: Format,
) -> Result<(i32, String)> {
    let mut lines: Vec<String> = Vec::new();
    let fmt_move = |f: &UcfAssignment, nodes: &[usize], g: &UcfAssignment| {
        let labels: Vec<String> = nodes.iter().map(|&i| (i + 1).to_string()).collect();
        format!("{} -[{}]-> {}", f.weight(), labels.join(" "), g.weight())
    };
    match script {
        Some(script) => {
            let mut f = UcfAssignment::from_weight(lam)?;
            for tok in script.split(',') {
                let choice: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad script entry {tok:?}")))?;
                let comps = zero_components(rs, &f)?;
                let comp = comps.get(choice.wrapping_sub(1)).ok_or_else(|| {
                    Error::Invalid(format!(
                        "script chose component {choice} but only {} available",
                        comps.len()
                    ))
                })?;
                let g = ucf_move(rs, &f, comp)?;
                lines.push(fmt_move(&f, &comp.nodes, &g));
                f = g;
            }
            lines.push(format!("now at {}", f.weight()));
        }
        None => {
            // Breadth-first over all branches.
            let start = UcfAssignment::from_weight(lam)?;
            let mut seen = std::collections::BTreeSet::new();
            seen.insert(start.0.clone());
            let mut queue = std::collections::VecDeque::from([start]);
            let mut stable = Vec::new();
            while let Some(f) = queue.pop_front() {
                if seen.len() > budget {
                    return Err(Error::BudgetExceeded { explored: seen.len() });
                }
                let comps = zero_components(rs, &f)?;
                if comps.is_empty() {
                    stable.push(f.weight());
                    continue;
                }
                for comp in &comps {
                    let g = ucf_move(rs, &f, comp)?;
                    lines.push(fmt_move(&f, &comp.nodes, &g));
                    if seen.insert(g.0.clone()) {
                        queue.push_back(g);
                    }
                }
            }
            lines.sort();
            lines.dedup();
            stable.sort();
            stable.dedup();
            lines.push(format!(
                "{} states, stable: {}",
                seen.len(),
                stable
                    .iter()
                    .map(|w| w.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
        }
    }
    let out = match format {
        Format::Text => format!("{}\n", lines.join("\n")),
        Format::Json => format!(
            "{}\n",
            serde_json::json!({ "schema": 1, "trajectory": lines })
        ),
    };
    Ok((0, out))
}

fn cmd_span(rs: &RootSystem, lam: &Weight, budget: usize, format: Format) -> Result<(i32, String)> {
    let mut cache = crate::span::SpanCache::new();
    let span = crate::span::firing_span(rs, lam, budget, &mut cache)?;
    let rows: Vec<Vec<String>> = span
        .basis
        .iter()
        .map(|row| row.iter().map(|x| x.to_string()).collect())
        .collect();
    let out = match format {
        Format::Text => {
            let mut s = format!("dim {}\n", span.dim());
            for row in &rows {
                writeln!(s, "[{}]", row.join(", ")).unwrap();
            }
            s
        }
        Format::Json => format!(
            "{}\n",
            serde_json::json!({ "schema": 1, "dim": span.dim(), "basis": rows })
        ),
    };
    Ok((0, out))
}

fn cmd_connected(
    rs: &RootSystem,
    lam: &Weight,
    budget: usize,
    format: Format,
) -> Result<(i32, String)> {
    let mut cache = crate::span::SpanCache::new();
    let connected = crate::span::is_connected(rs, lam, budget, &mut cache)?;
    let mut witness: Option<Vec<String>> = None;
    let mut classified: Option<bool> = None;
    if rs.ty.family == Family::A {
        classified = Some(crate::span::type_a_connected(rs, lam)?);
        if classified == Some(true) {
            // Witness: (ρ + ω) − dominant(λ) as a positive root combination.
            let diff = Weight(
                lam.0
                    .iter()
                    .zip(&rs.rho.0)
                    .map(|(a, b)| a - b)
                    .collect(),
            );
            let omega = rs.minuscule_rep_of_class(&diff);
            let target = rs.rho.checked_add(&omega.0)?;
            let dom = rs.dominant_rep(lam).0;
            let gap = Weight(
                target
                    .0
                    .iter()
                    .zip(&dom.0)
                    .map(|(a, b)| a - b)
                    .collect(),
            );
            witness = Some(
                rs.root_coeffs(&gap)
                    .iter()
                    .map(|c| c.to_string())
                    .collect(),
            );
        }
    }
    let out = match format {
        Format::Text => {
            let mut s = format!("connected: {connected}\n");
            if let Some(c) = classified {
                writeln!(s, "classification: {c}").unwrap();
            }
            if let Some(w) = &witness {
                writeln!(s, "witness: [{}]", w.join(", ")).unwrap();
            }
            s
        }
        Format::Json => format!(
            "{}\n",
            serde_json::json!({
                "schema": 1,
                "connected": connected,
                "classification": classified,
                "witness": witness,
            })
        ),
    };
    Ok((0, out))
}

fn render_fold(f: &crate::folding::Folding, format: Format) -> String {
    match format {
        Format::Text => {
            let mut s = format!("{} -> {}\n", f.source, f.target);
            for (k, orbit) in f.orbits.iter().enumerate() {
                let nodes: Vec<String> = orbit.iter().map(|&i| (i + 1).to_string()).collect();
                writeln!(
                    s,
                    "orbit {{{}}} -> node {}",
                    nodes.join(" "),
                    f.target_node[k] + 1
                )
                .unwrap();
            }
            for row in &f.folded_cartan {
                let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                writeln!(s, "[{}]", cells.join(", ")).unwrap();
            }
            s
        }
        Format::Json => format!(
            "{}\n",
            serde_json::json!({
                "schema": 1,
                "source": f.source.to_string(),
                "target": f.target.to_string(),
                "orbits": f.orbits,
                "target_node": f.target_node,
                "folded_cartan": f.folded_cartan,
            })
        ),
    }
}

/// Parse a permutation in 1-based cycle notation, e.g. `"(1 3)(2 4)"`;
/// nodes not mentioned are fixed.  Commas may separate cycle entries.
pub fn parse_cycles(s: &str, n: usize) -> Result<Vec<usize>> {
    let mut sigma: Vec<usize> = (0..n).collect();
    let body = s.trim();
    if body.is_empty() || body == "id" {
        return Ok(sigma);
    }
    if !body.starts_with('(') {
        return Err(Error::Invalid(format!("bad cycle notation {s:?}")));
    }
    let mut used = vec![false; n];
    for cycle in body.split(')') {
        let cycle = cycle.trim().trim_start_matches('(');
        if cycle.is_empty() {
            continue;
        }
        let nodes: Vec<usize> = cycle
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let v: usize = t
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad cycle entry {t:?}")))?;
                if v == 0 || v > n {
                    return Err(Error::Invalid(format!("node {v} out of range 1..={n}")));
                }
                Ok(v - 1)
            })
            .collect::<Result<_>>()?;
        for &v in &nodes {
            if std::mem::replace(&mut used[v], true) {
                return Err(Error::Invalid(format!("node {} repeated in cycles", v + 1)));
            }
        }
        for k in 0..nodes.len() {
            sigma[nodes[k]] = nodes[(k + 1) % nodes.len()];
        }
    }
    Ok(sigma)
}

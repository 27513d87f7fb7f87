//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 for usage or
//! input errors. `SPARSE_DUALS_THREADS` caps the worker pool.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::Error;
use crate::hermitian::HermitianCurve;
use crate::puncturing::{
    build_hierarchy, qualifying_subsets, sample_qualifying_subsets, verify_inheritance,
    HierarchyGraph, PointSet,
};
use crate::semigroup::NumericalSemigroup;
use crate::sparse_ideals::{
    inclusion_report, is_leader_index, leader_set, maximum_sparse_from_leader,
    maximum_sparse_ideals, SemigroupIdeal,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const THREADS_ENV: &str = "SPARSE_DUALS_THREADS";

#[derive(Debug, Parser)]
#[command(name = "sparse-duals", version, about = "Maximum sparse ideals and isometry-dual puncturing of Hermitian codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Gaps, conductor, leaders and maximum sparse ideals of a semigroup.
    Semigroup(SemigroupArgs),
    /// Maximum sparse ideals as JSON, or the inclusion report of two of them.
    SparseIdeals(SparseIdealsArgs),
    /// Hierarchy of qualifying punctured point sets of the Hermitian curve.
    Hierarchy(HierarchyArgs),
    /// Run the property checks for a Hermitian curve.
    Verify(VerifyArgs),
    /// Search for an isometry vector of a punctured sequence.
    Isometry(IsometryArgs),
}

#[derive(Debug, Args)]
pub struct SemigroupArgs {
    /// Comma-separated generators, e.g. 2,3.
    #[arg(long, value_delimiter = ',', required = true)]
    pub generators: Vec<u64>,
    /// Largest leader reported (default: max(2c, 10)).
    #[arg(long)]
    pub bound: Option<u64>,
    /// Also write the report as JSON.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SparseIdealsArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub generators: Vec<u64>,
    /// Largest leader listed (default: max(2c, 10)).
    #[arg(long)]
    pub bound: Option<u64>,
    /// Only the ideals led by these values.
    #[arg(long, value_delimiter = ',')]
    pub leader: Vec<u64>,
    /// Inclusion report for two leaders `λ,λ'`.
    #[arg(long, value_delimiter = ',', num_args = 1, conflicts_with = "leader")]
    pub compare: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
pub struct HierarchyArgs {
    #[arg(long)]
    pub q: u64,
    #[arg(long, default_value_t = 2)]
    pub min_size: usize,
    #[arg(long)]
    pub dot: Option<PathBuf>,
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Number of random subsets to draw instead of enumerating all of them.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub q: u64,
    /// Skip the exhaustive isometry-vector search.
    #[arg(long)]
    pub skip_oracle: bool,
    /// Subsets drawn when exhaustive enumeration is infeasible.
    #[arg(long, default_value_t = 200)]
    pub sample: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct IsometryArgs {
    #[arg(long)]
    pub q: u64,
    /// Comma-separated 1-based point indices (default: all points).
    #[arg(long, value_delimiter = ',')]
    pub points: Vec<usize>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Failed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = match e {
            Error::TooManySubsets { .. } => {
                format!("{e}\nhint: pass --sample N [--seed S] to draw random subsets instead")
            }
            _ => e.to_string(),
        };
        Failure::Usage(msg)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Semigroup(a) => cmd_semigroup(a, out),
        Command::SparseIdeals(a) => cmd_sparse_ideals(a, out),
        Command::Hierarchy(a) => cmd_hierarchy(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Isometry(a) => cmd_isometry(a, out),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Failed) => EXIT_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// Sizes the global thread pool from `SPARSE_DUALS_THREADS`, if set.
pub fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {v:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn default_bound(s: &NumericalSemigroup, bound: Option<u64>) -> u64 {
    bound.unwrap_or_else(|| (2 * s.conductor()).max(10))
}

fn write_json(path: &PathBuf, value: &serde_json::Value) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("json value");
    text.push('\n');
    fs::write(path, text)
}

fn fmt_list(v: &[u64]) -> String {
    let items: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn semigroup_report(s: &NumericalSemigroup, bound: u64) -> String {
    let mut r = String::new();
    r.push_str(&format!("semigroup {s}\n"));
    r.push_str(&format!("genus {}\n", s.genus()));
    r.push_str(&format!("conductor {}\n", s.conductor()));
    r.push_str(&format!("gaps {}\n", fmt_list(s.gaps())));
    r.push_str(&format!("leaders <= {bound}: {}\n", fmt_list(&leader_set(s, bound))));
    r.push_str(&format!("maximum sparse ideals with leader <= {bound}:\n"));
    for ideal in maximum_sparse_ideals(s, bound) {
        r.push_str(&format!(
            "  leader {}: complement {}, frobenius {}\n",
            ideal.leader().expect("maximum sparse"),
            fmt_list(ideal.complement()),
            ideal.frobenius()
        ));
    }
    r
}

fn cmd_semigroup(a: &SemigroupArgs, out: &mut dyn Write) -> CmdResult {
    let s = NumericalSemigroup::from_generators(&a.generators)?;
    let bound = default_bound(&s, a.bound);
    out.write_all(semigroup_report(&s, bound).as_bytes())?;
    if let Some(path) = &a.json {
        let value = json!({
            "semigroup": s,
            "bound": bound,
            "leaders": leader_set(&s, bound),
            "ideals": maximum_sparse_ideals(&s, bound),
        });
        write_json(path, &value)?;
    }
    Ok(())
}

fn ideal_for_leader(s: &NumericalSemigroup, value: u64) -> Result<SemigroupIdeal, Error> {
    let i = s.require_index(value)?;
    maximum_sparse_from_leader(s, i)
}

fn cmd_sparse_ideals(a: &SparseIdealsArgs, out: &mut dyn Write) -> CmdResult {
    let s = NumericalSemigroup::from_generators(&a.generators)?;
    let value = if let Some(pair) = &a.compare {
        let [l1, l2] = pair[..] else {
            return Err(Failure::Usage("--compare takes exactly two leaders".into()));
        };
        let (i1, i2) = (ideal_for_leader(&s, l1)?, ideal_for_leader(&s, l2)?);
        let report = inclusion_report(&i1, &i2)?;
        json!({
            "ideal": i1,
            "other": i2,
            "report": report,
            "all_agree": report.all_agree(),
        })
    } else if !a.leader.is_empty() {
        let ideals: Vec<SemigroupIdeal> = a
            .leader
            .iter()
            .map(|&v| ideal_for_leader(&s, v))
            .collect::<Result<_, _>>()?;
        serde_json::to_value(ideals).expect("ideals serialize")
    } else {
        let bound = default_bound(&s, a.bound);
        serde_json::to_value(maximum_sparse_ideals(&s, bound)).expect("ideals serialize")
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("json"))?;
    Ok(())
}

struct HierarchyRun {
    curve: HermitianCurve,
    graph: HierarchyGraph,
    mode: String,
}

fn hierarchy_run(q: u64, min_size: usize, sample: Option<usize>, seed: u64) -> Result<HierarchyRun, Error> {
    let curve = HermitianCurve::new(q)?;
    let boundary = 2 * curve.genus() + 2;
    let (subsets, mode) = match sample {
        None => (
            qualifying_subsets(&curve, min_size)?,
            "exhaustive".to_string(),
        ),
        Some(n) => {
            let run = sample_qualifying_subsets(&curve, min_size, n, seed)?;
            let mode = format!("sampled ({} distinct of {n} draws, seed {seed})", run.drawn.len());
            (run.qualifying, mode)
        }
    };
    let graph = build_hierarchy(subsets, boundary);
    Ok(HierarchyRun { curve, graph, mode })
}

fn cmd_hierarchy(a: &HierarchyArgs, out: &mut dyn Write) -> CmdResult {
    let HierarchyRun { curve, graph, mode } = hierarchy_run(a.q, a.min_size, a.sample, a.seed)?;
    let g = curve.genus();
    let boundary = graph.boundary();
    writeln!(
        out,
        "q = {}, genus {g}, {} points, boundary 2g+2 = {boundary}",
        curve.q(),
        curve.points().len()
    )?;
    writeln!(out, "mode: {mode}")?;
    writeln!(out, "nodes: {}", graph.nodes().len())?;
    for (size, count) in graph.cardinality_counts() {
        writeln!(out, "  size {size}: {count}")?;
    }
    writeln!(out, "edges: {}", graph.edges().len())?;
    let report = verify_inheritance(&graph, curve.weierstrass_semigroup(), boundary);
    writeln!(
        out,
        "inheritance: {} pairs checked, {} violations, {} boundary pairs, min edge difference {}",
        report.checked.len(),
        report.violations.len(),
        report.boundary_pairs.len(),
        report.min_edge_difference.map_or("-".into(), |d| d.to_string())
    )?;
    if let Some(path) = &a.dot {
        fs::write(path, graph.export_dot())?;
    }
    if let Some(path) = &a.json {
        write_json(path, &graph.to_json())?;
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Failed)
    }
}

struct Check {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn verify_checks(a: &VerifyArgs) -> Result<Vec<Check>, Error> {
    let curve = HermitianCurve::new(a.q)?;
    let w = curve.weierstrass_semigroup();
    let g = curve.genus();
    let n_all = curve.points().len();
    let boundary = 2 * g + 2;
    let exhaustive = n_all <= crate::puncturing::MAX_EXHAUSTIVE_POINTS;

    let subsets: Vec<PointSet> = if exhaustive {
        (1u64..1 << n_all)
            .map(|mask| PointSet::new((0..n_all).filter(|k| mask >> k & 1 == 1).map(|k| k + 1)))
            .collect()
    } else {
        let mut drawn = sample_qualifying_subsets(&curve, 1, a.sample, a.seed)?.drawn;
        let full = PointSet::new(1..=n_all);
        if !drawn.contains(&full) {
            drawn.insert(0, full);
        }
        drawn
    };
    let scope = if exhaustive {
        format!("all {} subsets", subsets.len())
    } else {
        format!("{} sampled subsets, seed {}", subsets.len(), a.seed)
    };

    let full = curve.code_sequence(&(1..=n_all).collect::<Vec<_>>())?;
    let full_wstar = full.wstar();
    let mut checks = Vec::new();

    let mut shape_bad = 0;
    let mut monotone_bad = 0;
    let mut ideal_bad = 0;
    let mut sparse_bad = 0;
    let mut oracle_bad = 0;
    let mut oracle_checked = 0;
    let mut qualifying = Vec::new();
    for set in &subsets {
        let cs = curve.code_sequence(set.indices())?;
        let ws = cs.wstar();
        let n = cs.n();
        let max = *ws.last().expect("n >= 1");
        let top = (n + 2 * g - 1) as u64;
        if ws.len() != n
            || ws[0] != 0
            || !ws.iter().all(|&m| w.contains_value(m))
            || max > top
            || (max == top) != cs.isometry_dual_criterion()
        {
            shape_bad += 1;
        }
        if !ws.iter().all(|m| full_wstar.contains(m)) {
            monotone_bad += 1;
        }
        if cs.isometry_dual_criterion() {
            qualifying.push(set.clone());
        }
        if n > boundary {
            match cs.wstar_ideal(w) {
                Ok(ideal) => {
                    if ideal.is_maximum_sparse() != cs.isometry_dual_criterion() {
                        sparse_bad += 1;
                    }
                }
                Err(_) => ideal_bad += 1,
            }
            if !a.skip_oracle && exhaustive {
                oracle_checked += 1;
                let found = cs.find_isometry_vector()?.is_some();
                if found != cs.isometry_dual_criterion() {
                    oracle_bad += 1;
                }
            }
        }
    }
    checks.push(Check {
        name: "W* shape",
        passed: shape_bad == 0,
        detail: format!("#W* = n, W* in W, max W* <= n+2g-1 with equality iff criterion; {scope}, {shape_bad} failures"),
    });
    checks.push(Check {
        name: "W* monotonicity",
        passed: monotone_bad == 0,
        detail: format!("punctured W* inside full W*; {monotone_bad} failures"),
    });
    checks.push(Check {
        name: "W \\ W* is an ideal",
        passed: ideal_bad == 0,
        detail: format!("for n > {boundary}; {ideal_bad} failures"),
    });
    checks.push(Check {
        name: "criterion <=> maximum sparse",
        passed: sparse_bad == 0,
        detail: format!("for n > {boundary}; {sparse_bad} failures"),
    });
    if a.skip_oracle || !exhaustive {
        let why = if a.skip_oracle { "--skip-oracle" } else { "search space too large" };
        checks.push(Check {
            name: "criterion <=> isometry vector",
            passed: true,
            detail: format!("skipped ({why})"),
        });
    } else {
        checks.push(Check {
            name: "criterion <=> isometry vector",
            passed: oracle_bad == 0,
            detail: format!("{oracle_checked} subsets with n > {boundary}; {oracle_bad} disagreements"),
        });
    }

    let graph = build_hierarchy(qualifying, boundary);
    let report = verify_inheritance(&graph, w, boundary);
    checks.push(Check {
        name: "inheritance",
        passed: report.passed(),
        detail: format!(
            "{} nodes, {} pairs checked, {} violations",
            graph.nodes().len(),
            report.checked.len(),
            report.violations.len()
        ),
    });

    let c = w.conductor();
    let leaders = leader_set(w, 4 * c.max(1));
    let closed = leaders.iter().all(|&l| {
        w.elements_up_to(4 * c.max(1) - l)
            .all(|t| leaders.binary_search(&(l + t)).is_ok())
    });
    let characterized = maximum_sparse_ideals(w, 3 * c.max(1)).iter().all(|i| {
        let idx = w.index_of(i.leader().expect("maximum sparse")).expect("element");
        is_leader_index(w, idx) && i.is_maximum_sparse()
    });
    checks.push(Check {
        name: "leader ideal of W",
        passed: closed && characterized && leaders.iter().all(|&l| l >= c),
        detail: format!("{} leaders up to {}", leaders.len(), 4 * c.max(1)),
    });
    Ok(checks)
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let checks = verify_checks(a)?;
    let mut failed = false;
    for c in &checks {
        let tag = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "[{tag}] {}: {}", c.name, c.detail)?;
        failed |= !c.passed;
    }
    if failed {
        Err(Failure::Failed)
    } else {
        Ok(())
    }
}

fn cmd_isometry(a: &IsometryArgs, out: &mut dyn Write) -> CmdResult {
    let curve = HermitianCurve::new(a.q)?;
    let indices: Vec<usize> = if a.points.is_empty() {
        (1..=curve.points().len()).collect()
    } else {
        a.points.clone()
    };
    let set = PointSet::new(indices.iter().copied());
    if set.len() != indices.len() {
        return Err(Error::DuplicatePoints.into());
    }
    let cs = curve.code_sequence(set.indices())?;
    let x = cs.find_isometry_vector()?;
    writeln!(out, "points {}", set.label())?;
    writeln!(out, "W* {}", fmt_list(&cs.wstar()))?;
    writeln!(
        out,
        "criterion n+2g-1 = {} in W*: {}",
        cs.n() + 2 * cs.genus() - 1,
        cs.isometry_dual_criterion()
    )?;
    match &x {
        Some(v) => {
            let vals: Vec<u64> = v.iter().map(|e| e.value() as u64).collect();
            writeln!(out, "x = {}", fmt_list(&vals))?;
        }
        None => writeln!(out, "x = none")?,
    }
    if let Some(path) = &a.json {
        let value = json!({
            "sequence": cs.record(),
            "isometry_vector": x,
        });
        write_json(path, &value)?;
    }
    Ok(())
}

//! Command line front end for the character engine.
//!
//! Exit codes: 0 when everything computed and every checked identity
//! holds, 1 when a series comparison finds a coefficient mismatch, 2 on
//! invalid input. Output is deterministic for a fixed invocation,
//! including under `--jobs` parallelism.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use qaffine::algebra::{anomaly_exponents, standard_weights, Algebra, HighestWeight};
use qaffine::characters::{product_spec, specialized_character, verify_duality, DualityReport};
use qaffine::level3;
use qaffine::qseries::QSeries;
use qaffine::qtraces::{delta2_constants, delta2_forward_check, verify_trace_chain};
use qaffine::rat::{format_rat, rat};
use qaffine::Error;

#[derive(Parser)]
#[command(
    name = "qaffine",
    version,
    about = "Exact characters and q-trace identities for the affine algebras a1_1, a2_1, a2_2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Cartan data for one algebra or all three
    Describe(DescribeArgs),
    /// Compute specialized characters of the standard modules of a level
    Char(CharArgs),
    /// Verify the specialization duality between a1_1 and a2_2 at a level
    Duality(DualityArgs),
    /// Verify the q-trace identity chain at a level
    Qtrace(QtraceArgs),
    /// Snapshot of the level-3 a2_1 series and the theta-assembly check
    Appendix(AppendixArgs),
    /// Run the full verification battery and print a summary
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format (appendix defaults to json, everything else to table)
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

impl OutputArgs {
    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    Algebra::from_label(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct DescribeArgs {
    /// Algebra label; omit to list all three
    #[arg(long, value_parser = parse_algebra)]
    algebra: Option<Algebra>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct CharArgs {
    /// Algebra label: a1_1, a2_1 or a2_2
    #[arg(long, value_parser = parse_algebra)]
    algebra: Algebra,
    /// Level of the module family (a2_2 needs an odd level)
    #[arg(long, visible_alias = "level-k")]
    level: i64,
    /// First weight coordinate; omit to list every module of the level.
    /// Does not apply to a2_1, whose command-line surface is the
    /// vacuum-type module (level, 0, 0).
    #[arg(long)]
    k0: Option<i64>,
    /// Specialization exponents, comma separated, one positive integer
    /// per simple root
    #[arg(long, value_delimiter = ',', required = true)]
    spec: Vec<i64>,
    /// Truncation order of the series
    #[arg(long)]
    order: i64,
    /// Worker threads for sweeping several modules
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct DualityArgs {
    /// Level of the untwisted family; the twisted side runs at twice
    /// the level plus one
    #[arg(long, visible_alias = "level-k")]
    level: i64,
    /// Restrict the report to one weight slot
    #[arg(long)]
    k0: Option<i64>,
    /// Compare series up to this power of q
    #[arg(long, default_value_t = 60)]
    order: i64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct QtraceArgs {
    /// Level of the untwisted family
    #[arg(long, visible_alias = "level-k")]
    level: i64,
    /// Restrict the chain to one weight slot
    #[arg(long)]
    k0: Option<i64>,
    /// Truncation order of the underlying characters; the reported
    /// traces reach a sixth of this exponent
    #[arg(long, default_value_t = 60)]
    order: i64,
    /// Worker threads for sweeping the weight slots
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct AppendixArgs {
    /// Total degree to which the theta assembly is compared against the
    /// directly computed character
    #[arg(long, default_value_t = 12)]
    order: i64,
    /// Depth of the homogeneous graded-dimension series
    #[arg(long, default_value_t = 3)]
    homogeneous_max: i64,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct SelftestArgs {
    /// Worker threads for running the suites
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Describe(a) => cmd_describe(a),
        Command::Char(a) => cmd_char(a),
        Command::Duality(a) => cmd_duality(a),
        Command::Qtrace(a) => cmd_qtrace(a),
        Command::Appendix(a) => cmd_appendix(a),
        Command::Selftest(a) => cmd_selftest(a),
    };
    match outcome {
        Ok((text, output, identities_hold)) => {
            if let Some(path) = output {
                if let Err(e) = std::fs::write(&path, text) {
                    eprintln!("cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{text}");
            }
            ExitCode::from(if identities_hold { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::IdentityViolation(_) | Error::ParityConflict(_) => 1,
                _ => 2,
            })
        }
    }
}

type Outcome = Result<(String, Option<PathBuf>, bool), Error>;

/// Applies `f` to every item, in parallel when `jobs > 1`, preserving
/// the input order and reporting the first error by input position.
fn run_jobs<T, R, F>(jobs: usize, items: Vec<T>, f: F) -> Result<Vec<R>, Error>
where
    T: Send,
    R: Send,
    F: Fn(T) -> Result<R, Error> + Sync + Send,
{
    if jobs == 0 {
        return Err(Error::InvalidInput("--jobs must be at least 1".into()));
    }
    if jobs == 1 {
        return items.into_iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidInput(format!("cannot build a thread pool: {e}")))?;
    let results: Vec<Result<R, Error>> =
        pool.install(|| items.into_par_iter().map(f).collect());
    results.into_iter().collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pretty(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable report");
    text.push('\n');
    text
}

// -------------------------------------------------------------------
// describe

fn cmd_describe(a: DescribeArgs) -> Outcome {
    let algebras: Vec<Algebra> = match a.algebra {
        Some(x) => vec![x],
        None => Algebra::ALL.to_vec(),
    };
    let text = match a.out.format_or(Format::Table) {
        Format::Json => {
            pretty(&json!(algebras.iter().map(|x| x.describe()).collect::<Vec<_>>()))
        }
        Format::Csv => {
            let mut t = String::from("label,rank,twist,dual_coxeter\n");
            for x in &algebras {
                t.push_str(&format!(
                    "{},{},{},{}\n",
                    x.label(),
                    x.rank(),
                    x.twist(),
                    x.dual_coxeter()
                ));
            }
            t
        }
        Format::Table => {
            let mut t = String::new();
            for x in &algebras {
                t.push_str(&format!(
                    "{}: rank {}, twist {}, dual Coxeter number {}\n",
                    x.label(),
                    x.rank(),
                    x.twist(),
                    x.dual_coxeter()
                ));
                for row in x.gcm() {
                    t.push_str(&format!("  gcm row {row:?}\n"));
                }
                t.push_str(&format!("  marks {:?}, comarks {:?}\n", x.marks(), x.comarks()));
            }
            t
        }
    };
    Ok((text, a.out.output, true))
}

// -------------------------------------------------------------------
// char

fn select_weights(
    algebra: Algebra,
    level: i64,
    k0: Option<i64>,
) -> Result<Vec<HighestWeight>, Error> {
    if level < 1 {
        return Err(Error::InvalidInput(format!("--level must be >= 1, got {level}")));
    }
    if algebra == Algebra::A2_1 {
        if k0.is_some() {
            return Err(Error::InvalidInput(
                "--k0 does not apply to a2_1: only the vacuum-type module \
                 (level, 0, 0) is wired to the command line"
                    .into(),
            ));
        }
        return Ok(vec![HighestWeight::new(algebra, vec![level, 0, 0])?]);
    }
    let all = standard_weights(algebra, level)?;
    match k0 {
        None => Ok(all),
        Some(x) => {
            let found: Vec<HighestWeight> =
                all.into_iter().filter(|w| w.coords[0] == x).collect();
            if found.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "no {} module of level {level} has first coordinate {x}",
                    algebra.label()
                )));
            }
            Ok(found)
        }
    }
}

fn cmd_char(a: CharArgs) -> Outcome {
    if a.order < 1 {
        return Err(Error::InvalidInput(format!("--order must be >= 1, got {}", a.order)));
    }
    let weights = select_weights(a.algebra, a.level, a.k0)?;
    let spec = a.spec.clone();
    let order = a.order;
    let rows: Vec<(HighestWeight, QSeries)> = run_jobs(a.jobs, weights, |w| {
        let s = specialized_character(&w, &spec, order)?;
        Ok((w, s))
    })?;

    let text = match a.out.format_or(Format::Table) {
        Format::Json => pretty(&json!(rows
            .iter()
            .map(|(w, s)| json!({
                "algebra": a.algebra.label(),
                "level": a.level,
                "k0": w.coords[0],
                "weight": w.coords,
                "spec": a.spec,
                "series": s.to_json(),
            }))
            .collect::<Vec<_>>())),
        Format::Csv => {
            let mut t = String::from("k0,exponent,coefficient\n");
            for (w, s) in &rows {
                for (e, c) in s.entries() {
                    t.push_str(&format!("{},{},{c}\n", w.coords[0], format_rat(&e)));
                }
            }
            t
        }
        Format::Table => {
            let mut t = String::new();
            for (w, s) in &rows {
                t.push_str(&format!(
                    "# algebra={} level={} weight={:?} spec={:?} order={}\n",
                    a.algebra.label(),
                    a.level,
                    w.coords,
                    a.spec,
                    a.order
                ));
                t.push_str("exponent\tcoefficient\n");
                for (e, c) in s.entries() {
                    t.push_str(&format!("{}\t{c}\n", format_rat(&e)));
                }
            }
            t
        }
    };
    Ok((text, a.out.output, true))
}

// -------------------------------------------------------------------
// duality

fn cmd_duality(a: DualityArgs) -> Outcome {
    if a.level < 1 {
        return Err(Error::InvalidInput(format!("--level must be >= 1, got {}", a.level)));
    }
    if a.order < 1 {
        return Err(Error::InvalidInput(format!("--order must be >= 1, got {}", a.order)));
    }
    let mut report = verify_duality(a.level, a.order)?;
    if let Some(x) = a.k0 {
        report.cases.retain(|c| c.k0 == x);
        if report.cases.is_empty() {
            return Err(Error::InvalidInput(format!(
                "--k0 must lie in 0..={} at level {}",
                a.level, a.level
            )));
        }
    }
    let holds = report.all_hold();
    let text = match a.out.format_or(Format::Table) {
        Format::Json => pretty(&report.to_json()),
        Format::Csv => duality_csv(&report),
        Format::Table => duality_table(&report, holds),
    };
    Ok((text, a.out.output, holds))
}

fn duality_csv(report: &DualityReport) -> String {
    let mut t = String::from(
        "k0,exceptional,equal,lhs_matches_product,rhs_matches_product,first_mismatch\n",
    );
    for c in &report.cases {
        let mismatch = c
            .comparison
            .first_mismatch
            .as_ref()
            .map(|(e, _, _)| format_rat(e))
            .unwrap_or_default();
        t.push_str(&format!(
            "{},{},{},{},{},{mismatch}\n",
            c.k0,
            c.exceptional,
            c.comparison.equal,
            c.lhs_matches_product,
            c.rhs_matches_product
        ));
    }
    t
}

fn duality_table(report: &DualityReport, holds: bool) -> String {
    let mut t = format!("# duality level={} order={}\n", report.k, report.order);
    t.push_str("k0\texceptional\tequal\tlhs_product\trhs_product\tfirst_mismatch\n");
    for c in &report.cases {
        let mismatch = match &c.comparison.first_mismatch {
            Some((e, lhs, rhs)) => format!("q^{}: {lhs} vs {rhs}", format_rat(e)),
            None => "-".into(),
        };
        t.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{mismatch}\n",
            c.k0,
            yes_no(c.exceptional),
            yes_no(c.comparison.equal),
            yes_no(c.lhs_matches_product),
            yes_no(c.rhs_matches_product)
        ));
    }
    t.push_str(if holds {
        "all identities hold\n"
    } else {
        "IDENTITY FAILURE: see the mismatch column\n"
    });
    t
}

// -------------------------------------------------------------------
// qtrace

fn cmd_qtrace(a: QtraceArgs) -> Outcome {
    if a.level < 1 {
        return Err(Error::InvalidInput(format!("--level must be >= 1, got {}", a.level)));
    }
    if a.order < 1 {
        return Err(Error::InvalidInput(format!("--order must be >= 1, got {}", a.order)));
    }
    let slots: Vec<i64> = match a.k0 {
        Some(x) if x < 0 || x > a.level => {
            return Err(Error::InvalidInput(format!(
                "--k0 must lie in 0..={} at level {}",
                a.level, a.level
            )));
        }
        Some(x) => vec![x],
        None => (0..=a.level).collect(),
    };
    let level = a.level;
    let order = a.order;
    let per_slot = run_jobs(a.jobs, slots, |k0| verify_trace_chain(level, k0, order))?;
    let checks: Vec<_> = per_slot.into_iter().flatten().collect();
    let holds = checks.iter().all(|c| c.holds());

    let text = match a.out.format_or(Format::Table) {
        Format::Json => pretty(&json!({
            "level": a.level,
            "order": a.order,
            "holds": holds,
            "checks": checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut t = String::from("k0,identity,holds,first_mismatch\n");
            for c in &checks {
                let mismatch = c
                    .comparison
                    .first_mismatch
                    .as_ref()
                    .map(|(e, _, _)| format_rat(e))
                    .unwrap_or_default();
                t.push_str(&format!("{},{},{},{mismatch}\n", c.k0, c.identity, c.holds()));
            }
            t
        }
        Format::Table => {
            let mut t = format!("# qtrace level={} order={}\n", a.level, a.order);
            t.push_str("k0\tidentity\tholds\tcompared_order\tfirst_mismatch\n");
            for c in &checks {
                let mismatch = match &c.comparison.first_mismatch {
                    Some((e, lhs, rhs)) => format!("q^{}: {lhs} vs {rhs}", format_rat(e)),
                    None => "-".into(),
                };
                t.push_str(&format!(
                    "{}\t{}\t{}\t{}\t{mismatch}\n",
                    c.k0,
                    c.identity,
                    yes_no(c.holds()),
                    format_rat(&c.comparison.compared_order)
                ));
            }
            t.push_str(if holds {
                "all identities hold\n"
            } else {
                "IDENTITY FAILURE: see the mismatch column\n"
            });
            t
        }
    };
    Ok((text, a.out.output, holds))
}

// -------------------------------------------------------------------
// appendix

fn cmd_appendix(a: AppendixArgs) -> Outcome {
    if a.order < 0 {
        return Err(Error::InvalidInput(format!("--order must be >= 0, got {}", a.order)));
    }
    if a.homogeneous_max < 0 {
        return Err(Error::InvalidInput(format!(
            "--homogeneous-max must be >= 0, got {}",
            a.homogeneous_max
        )));
    }
    let snapshot = level3::snapshot(a.homogeneous_max, a.order)?;
    let holds = snapshot["theta_assembly"]["matches_character"] == json!(true);
    let text = match a.out.format_or(Format::Json) {
        Format::Json => pretty(&snapshot),
        Format::Table => {
            let mut t = format!(
                "theta assembly matches the character to total degree {}: {}\n",
                a.order,
                yes_no(holds)
            );
            t.push_str(&format!(
                "homogeneous series depth: {} (use --format json for the full snapshot)\n",
                a.homogeneous_max
            ));
            t
        }
        Format::Csv => {
            return Err(Error::InvalidInput(
                "the appendix snapshot has no csv form; use json".into(),
            ));
        }
    };
    Ok((text, a.out.output, holds))
}

// -------------------------------------------------------------------
// selftest

#[derive(Clone, Copy)]
enum Suite {
    Duality,
    Products,
    TraceChain,
    AnomalyScalars,
    CoordinateConstants,
    PublishedSeries,
    ThetaAssembly,
}

const ALL_SUITES: [Suite; 7] = [
    Suite::Duality,
    Suite::Products,
    Suite::TraceChain,
    Suite::AnomalyScalars,
    Suite::CoordinateConstants,
    Suite::PublishedSeries,
    Suite::ThetaAssembly,
];

struct SuiteResult {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn run_suite(suite: Suite) -> SuiteResult {
    let (name, scope, outcome) = match suite {
        Suite::Duality => ("duality", "levels 1..=4, order 60", suite_duality()),
        Suite::Products => {
            ("congruence_products", "20 comparisons, order 50", suite_products())
        }
        Suite::TraceChain => {
            ("trace_chain", "levels 1..=3, character order 60", suite_trace_chain())
        }
        Suite::AnomalyScalars => {
            ("anomaly_scalars", "levels 1..=50, all slots", suite_anomaly_scalars())
        }
        Suite::CoordinateConstants => (
            "coordinate_constants",
            "pinned values, round trip to x^10",
            suite_coordinate_constants(),
        ),
        Suite::PublishedSeries => {
            ("published_series", "pinned level-3 series", suite_published_series())
        }
        Suite::ThetaAssembly => {
            ("theta_assembly", "total degree 12", suite_theta_assembly())
        }
    };
    match outcome {
        Ok(()) => SuiteResult { name, pass: true, detail: scope.to_string() },
        Err(why) => SuiteResult { name, pass: false, detail: why },
    }
}

fn es(e: Error) -> String {
    e.to_string()
}

fn suite_duality() -> Result<(), String> {
    for k in 1..=4 {
        let report = verify_duality(k, 60).map_err(es)?;
        if !report.all_hold() {
            return Err(format!("duality fails at level {k}"));
        }
    }
    Ok(())
}

fn suite_products() -> Result<(), String> {
    let mut pairs: Vec<(i64, i64)> =
        (1..=3).flat_map(|k| (0..=k).map(move |k0| (k, k0))).collect();
    pairs.push((4, 3));
    for (k, k0) in pairs {
        let a1w = HighestWeight::new(Algebra::A1_1, vec![k0, k - k0]).map_err(es)?;
        let a1 = specialized_character(&a1w, &[1, 2], 50).map_err(es)?;
        if !a1.eq_to_min_order(&product_spec(Algebra::A1_1, k, k0).map_err(es)?.expand(50)) {
            return Err(format!("a1_1 product mismatch at k={k}, k0={k0}"));
        }
        let a2w =
            HighestWeight::new(Algebra::A2_2, vec![k0, 2 * k + 1 - 2 * k0]).map_err(es)?;
        let a2 = specialized_character(&a2w, &[1, 1], 50).map_err(es)?;
        if !a2.eq_to_min_order(&product_spec(Algebra::A2_2, k, k0).map_err(es)?.expand(50)) {
            return Err(format!("a2_2 product mismatch at k={k}, k0={k0}"));
        }
    }
    Ok(())
}

fn suite_trace_chain() -> Result<(), String> {
    for k in 1..=3 {
        for k0 in 0..=k {
            for check in verify_trace_chain(k, k0, 60).map_err(es)? {
                if !check.holds() {
                    return Err(format!(
                        "identity {} fails at k={k}, k0={k0}",
                        check.identity
                    ));
                }
            }
        }
    }
    Ok(())
}

fn suite_anomaly_scalars() -> Result<(), String> {
    for k in 1..=50 {
        for k0 in 0..=k {
            let (graded, twisted, vacuum) = anomaly_exponents(k, k0).map_err(es)?;
            if graded != twisted || vacuum * rat(2, 1) != graded {
                return Err(format!("anomaly relation fails at k={k}, k0={k0}"));
            }
        }
    }
    Ok(())
}

fn suite_coordinate_constants() -> Result<(), String> {
    let constants = delta2_constants(9);
    if constants[0] != rat(-1, 2) || constants[1] != rat(1, 4) {
        return Err("first coordinate-change constants differ from -1/2, 1/4".into());
    }
    delta2_forward_check(&constants, 10).map_err(es)
}

fn expect_prefix(series: &QSeries, want: &[i64], what: &str) -> Result<(), String> {
    for (n, &w) in want.iter().enumerate() {
        let c = series
            .coefficient_int(n as i64)
            .ok_or_else(|| format!("{what}: q^{n} beyond the computed order"))?;
        if i64::try_from(c.clone()).ok() != Some(w) {
            return Err(format!("{what}: q^{n} is {c}, expected {w}"));
        }
    }
    Ok(())
}

fn suite_published_series() -> Result<(), String> {
    let s = level3::specialization_411(21).map_err(es)?;
    let want = [1, 0, 0, 0, 1, 2, 2, 2, 46];
    let exps = [0, 1, 2, 3, 4, 5, 6, 7, 20];
    for (&j, &w) in exps.iter().zip(&want) {
        let c = s
            .coefficient(&rat(j, 6))
            .ok_or_else(|| format!("sixth-power series: q^({j}/6) beyond the order"))?;
        if i64::try_from(c.clone()).ok() != Some(w) {
            return Err(format!("sixth-power series: q^({j}/6) is {c}, expected {w}"));
        }
    }

    expect_prefix(&level3::homogeneous_series(3).map_err(es)?, &[1, 8, 44, 192], "homogeneous")?;
    expect_prefix(
        &level3::vacuum_dimension_series(3).map_err(es)?,
        &[1, 6, 27, 98],
        "vacuum dimensions",
    )?;

    let chv = level3::character(level3::t3_bound(3)).map_err(es)?;
    let coset = level3::coset_trace(&chv).map_err(es)?;
    let single = level3::sl2_vacuum_trace(3).map_err(es)?;
    let square = level3::tensor_square_trace(3).map_err(es)?;
    expect_prefix(&coset.body, &[1, 0, 3, 8, 16], "coset trace")?;
    expect_prefix(&single.body, &[1, 3, 4, 7], "sl2 vacuum trace")?;
    expect_prefix(&square.body, &[1, 6, 17, 38], "tensor square trace")?;
    if coset.anomaly() != rat(-1, 12)
        || single.anomaly() != rat(-1, 24)
        || square.anomaly() != rat(-1, 12)
    {
        return Err("trace prefactors differ from -1/12, -1/24, -1/12".into());
    }

    for (label, cmp) in level3::distinguishing_comparisons(&chv, 3).map_err(es)? {
        match cmp.first_mismatch {
            Some((e, _, _)) if e == rat(1, 1) => {}
            _ => return Err(format!("{label}: expected the first difference at q^1")),
        }
    }
    Ok(())
}

fn suite_theta_assembly() -> Result<(), String> {
    let chv = level3::character(15).map_err(es)?;
    let sf = level3::extract_string_functions(&chv, 4).map_err(es)?;
    let assembled = level3::theta_assembly(&sf, 12).map_err(es)?;
    let cmp = assembled.compare(&chv).map_err(es)?;
    if !cmp.equal {
        return Err(format!("assembly differs at {:?}", cmp.first_mismatch));
    }
    Ok(())
}

fn cmd_selftest(a: SelftestArgs) -> Outcome {
    let results = run_jobs(a.jobs, ALL_SUITES.to_vec(), |s| Ok(run_suite(s)))?;
    let holds = results.iter().all(|r| r.pass);
    let text = match a.out.format_or(Format::Table) {
        Format::Json => pretty(&json!({
            "holds": holds,
            "suites": results
                .iter()
                .map(|r| json!({
                    "suite": r.name,
                    "pass": r.pass,
                    "detail": r.detail,
                }))
                .collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let mut t = String::from("suite,pass,detail\n");
            for r in &results {
                t.push_str(&format!("{},{},\"{}\"\n", r.name, r.pass, r.detail));
            }
            t
        }
        Format::Table => {
            let mut t = String::from("suite\tstatus\tdetail\n");
            for r in &results {
                t.push_str(&format!(
                    "{}\t{}\t{}\n",
                    r.name,
                    if r.pass { "pass" } else { "FAIL" },
                    r.detail
                ));
            }
            t.push_str(if holds { "all suites pass\n" } else { "SUITE FAILURE\n" });
            t
        }
    };
    Ok((text, a.out.output, holds))
}

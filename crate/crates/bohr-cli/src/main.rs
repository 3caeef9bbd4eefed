//! `bohr` — command-line front end for the sharp Bohr-radius toolkit.
//!
//! Subcommands:
//!
//! * `radius` — solve one radius equation and print the root with its
//!   evidence (cap, residual, solver settings).
//! * `table`  — reproduce one of the three reference tables of cap radii;
//!   `--check` turns mismatches into a nonzero exit.
//! * `sweep`  — emit `(r, defining_function(r))` plot data over an `r` grid,
//!   with marker rows for the solved root and the validity cap.
//! * `verify` — run the verification suites (lemma oracles, sharpness
//!   sweeps, limit and cap checks) and print a machine-readable report;
//!   exits nonzero if any check fails.
//!
//! Outputs are CSV (RFC-4180, header row) or JSON, byte-stable for fixed
//! flags and seed. Exit codes: 0 success, 1 failed checks or no root,
//! 2 usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use bohr_core::radius::{Params, RadiusProblem, Variant};
use bohr_core::report::VerifyReport;
use bohr_core::suites::{cap_checks, limit_checks, sharpness_checks, table_rows, TableId};

#[derive(Parser)]
#[command(
    name = "bohr",
    version,
    about = "Sharp Bohr radii for K-quasiconformal harmonic mappings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a radius equation for one parameter set
    Radius(RadiusArgs),
    /// Reproduce a reference table of cap radii
    Table(TableArgs),
    /// Emit defining-function values over an r grid (plot data)
    Sweep(SweepArgs),
    /// Run verification suites and report per-check slack
    Verify(VerifyArgs),
}

/// Equation selector. Mirrors the library's variants one-to-one.
#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Majorant,
    ValueDeriv,
    ValueSqDeriv,
    Refined,
    CapRmq,
    CapR2mq,
    CapThirdroot,
}

impl From<VariantArg> for Variant {
    fn from(arg: VariantArg) -> Self {
        match arg {
            VariantArg::Majorant => Variant::Majorant,
            VariantArg::ValueDeriv => Variant::ValueDeriv,
            VariantArg::ValueSqDeriv => Variant::ValueSqDeriv,
            VariantArg::Refined => Variant::Refined,
            VariantArg::CapRmq => Variant::CapRmq,
            VariantArg::CapR2mq => Variant::CapR2mq,
            VariantArg::CapThirdroot => Variant::CapThirdRoot,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Csv,
    Json,
}

/// Accepts a decimal or the literal `inf`; rejects NaN.
fn parse_distortion(s: &str) -> Result<f64, String> {
    let value: f64 = s
        .parse()
        .map_err(|_| format!("`{s}` is not a number or `inf`"))?;
    if value.is_nan() {
        return Err("K must be a number or `inf`".to_string());
    }
    Ok(value)
}

#[derive(clap::Args)]
struct RadiusArgs {
    /// Which radius equation to solve
    #[arg(long, value_enum)]
    variant: VariantArg,
    /// Vanishing order of the analytic-part Schwarz function
    #[arg(long, default_value_t = 1)]
    p: u32,
    /// Vanishing order of the dilatation's Schwarz factor
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Vanishing order of the derivative-term Schwarz function
    #[arg(long, default_value_t = 1)]
    q: u32,
    /// Quasiconformality constant (decimal or "inf")
    #[arg(long = "K", default_value = "1", value_parser = parse_distortion)]
    distortion: f64,
    /// Bisection residual tolerance
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Scan step used to bracket the first sign change
    #[arg(long, default_value_t = 1e-3)]
    step: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    out: OutputFormat,
}

#[derive(clap::Args)]
struct TableArgs {
    /// Which table: 1 (third-root caps), 2 (value caps), 3 (squared-value caps)
    #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
    which: u8,
    /// Compare each cell against the published reference and exit nonzero on
    /// any mismatch
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    out: OutputFormat,
}

#[derive(clap::Args)]
struct SweepArgs {
    /// Which radius equation to sweep
    #[arg(long, value_enum)]
    variant: VariantArg,
    #[arg(long, default_value_t = 1)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    m: u32,
    #[arg(long, default_value_t = 1)]
    q: u32,
    /// Quasiconformality constant (decimal or "inf")
    #[arg(long = "K", default_value = "1", value_parser = parse_distortion)]
    distortion: f64,
    /// Left end of the r grid (inclusive)
    #[arg(long = "r-min", default_value_t = 0.0)]
    r_min: f64,
    /// Right end of the r grid (inclusive)
    #[arg(long = "r-max", default_value_t = 0.95)]
    r_max: f64,
    /// Number of grid intervals
    #[arg(long, default_value_t = 100)]
    steps: u32,
    /// Bisection residual tolerance for the root marker
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Scan step used to bracket the first sign change
    #[arg(long, default_value_t = 1e-3)]
    step: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    out: OutputFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemmas,
    Sharpness,
    Limits,
    All,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Which suite to run
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    /// Seed for the Monte-Carlo lemma trials
    #[arg(long, default_value_t = 2024)]
    seed: u64,
    /// Random trials per lemma oracle
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Series truncation order for the lemma trials
    #[arg(long, default_value_t = 256)]
    order: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    out: OutputFormat,
}

/// One solved radius, with the evidence needed to audit it.
#[derive(Serialize)]
struct OutputRecord {
    variant: String,
    p: u32,
    m: u32,
    q: u32,
    #[serde(rename = "K")]
    distortion: String,
    radius: f64,
    cap: Option<f64>,
    residual: f64,
    notes: String,
}

fn format_distortion(distortion: f64) -> String {
    if distortion.is_infinite() {
        "inf".to_string()
    } else {
        format!("{distortion}")
    }
}

/// RFC-4180: quote a field if it contains a comma, quote, or newline.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_optional(value: Option<f64>) -> String {
    value.map_or(String::new(), |v| format!("{v:.12}"))
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Radius(args) => cmd_radius(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Verify(args) => cmd_verify(&args),
    };
    std::process::exit(code);
}

fn build_params(p: u32, m: u32, q: u32, distortion: f64) -> Result<Params, i32> {
    Params::new(p, m, q, distortion).map_err(|e| {
        eprintln!("error: {e}");
        2
    })
}

fn cmd_radius(args: &RadiusArgs) -> i32 {
    let params = match build_params(args.p, args.m, args.q, args.distortion) {
        Ok(params) => params,
        Err(code) => return code,
    };
    let variant: Variant = args.variant.into();
    let problem = RadiusProblem::new(variant, params);
    let root = match problem.solve_radius_with_step(args.tol, args.step) {
        Ok(root) => root,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    let cap = problem.cap_radius().ok();
    let mut notes = format!("tol={:e};step={:e}", args.tol, args.step);
    if args.distortion.is_infinite() {
        notes.push_str(";boundary-regime-k=1");
    }
    if let Some(cap) = cap {
        if root.value > cap {
            notes.push_str(";radius-exceeds-cap-window");
        }
    }
    let record = OutputRecord {
        variant: variant.label().to_string(),
        p: args.p,
        m: args.m,
        q: args.q,
        distortion: format_distortion(args.distortion),
        radius: root.value,
        cap,
        residual: root.residual,
        notes,
    };
    match args.out {
        OutputFormat::Csv => {
            println!("variant,p,m,q,K,radius,cap,residual,notes");
            println!(
                "{},{},{},{},{},{:.12},{},{:.3e},{}",
                csv_field(&record.variant),
                record.p,
                record.m,
                record.q,
                csv_field(&record.distortion),
                record.radius,
                csv_optional(record.cap),
                record.residual,
                csv_field(&record.notes)
            );
        }
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&record).expect("record serializes")
            );
        }
    }
    0
}

#[derive(Serialize)]
struct TableRecord {
    m: u32,
    q: Option<u32>,
    computed: f64,
    reference: f64,
    tolerance: f64,
    matches: bool,
}

fn cmd_table(args: &TableArgs) -> i32 {
    let id = match args.which {
        1 => TableId::ThirdRootCap,
        2 => TableId::ValueCap,
        _ => TableId::SqValueCap,
    };
    let rows: Vec<TableRecord> = table_rows(id)
        .into_iter()
        .map(|row| TableRecord {
            m: row.m,
            q: row.q,
            computed: row.computed,
            reference: row.reference,
            tolerance: row.tolerance,
            matches: row.matches(),
        })
        .collect();
    let all_match = rows.iter().all(|row| row.matches);
    match args.out {
        OutputFormat::Csv => {
            println!("m,q,computed,reference,tolerance,matches");
            for row in &rows {
                println!(
                    "{},{},{:.6},{:.6},{:e},{}",
                    row.m,
                    row.q.map_or(String::new(), |q| q.to_string()),
                    row.computed,
                    row.reference,
                    row.tolerance,
                    row.matches
                );
            }
        }
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&rows).expect("rows serialize")
            );
        }
    }
    if args.check && !all_match {
        eprintln!("error: table {} has cells outside tolerance", args.which);
        return 1;
    }
    0
}

#[derive(Serialize)]
struct SweepRow {
    r: f64,
    value: f64,
    marker: String,
}

fn cmd_sweep(args: &SweepArgs) -> i32 {
    if !(0.0 <= args.r_min && args.r_min < args.r_max && args.r_max < 1.0) {
        eprintln!(
            "error: need 0 <= r-min < r-max < 1, got r-min={} r-max={}",
            args.r_min, args.r_max
        );
        return 2;
    }
    if args.steps == 0 {
        eprintln!("error: steps must be at least 1");
        return 2;
    }
    let params = match build_params(args.p, args.m, args.q, args.distortion) {
        Ok(params) => params,
        Err(code) => return code,
    };
    let variant: Variant = args.variant.into();
    let problem = RadiusProblem::new(variant, params);

    let mut rows = Vec::with_capacity(args.steps as usize + 3);
    for i in 0..=args.steps {
        let r = args.r_min + (args.r_max - args.r_min) * f64::from(i) / f64::from(args.steps);
        let value = match problem.defining_function(r) {
            Ok(value) => value,
            Err(e) => {
                eprintln!("error: {e}");
                return 1;
            }
        };
        rows.push(SweepRow {
            r,
            value,
            marker: String::new(),
        });
    }
    match problem.solve_radius_with_step(args.tol, args.step) {
        Ok(root) => rows.push(SweepRow {
            r: root.value,
            value: root.residual,
            marker: "root".to_string(),
        }),
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    }
    if let Ok(cap) = problem.cap_radius() {
        let value = problem
            .defining_function(cap)
            .expect("caps lie inside [0, 1)");
        rows.push(SweepRow {
            r: cap,
            value,
            marker: "cap".to_string(),
        });
    }

    eprintln!(
        "settings: variant={} p={} m={} q={} K={} tol={:e} step={:e}",
        variant.label(),
        args.p,
        args.m,
        args.q,
        format_distortion(args.distortion),
        args.tol,
        args.step
    );
    match args.out {
        OutputFormat::Csv => {
            println!("r,value,marker");
            for row in &rows {
                println!("{:.6},{:.9},{}", row.r, row.value, csv_field(&row.marker));
            }
        }
        OutputFormat::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&rows).expect("rows serialize")
            );
        }
    }
    0
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    eprintln!(
        "settings: seed={} trials={} order={}",
        args.seed, args.trials, args.order
    );
    let mut reports = Vec::new();
    if matches!(args.suite, SuiteArg::Lemmas | SuiteArg::All) {
        reports.push(VerifyReport::new(
            "lemmas",
            args.seed,
            bohr_core::lemmas::lemma_suite_with_order(args.seed, args.trials, args.order),
        ));
    }
    if matches!(args.suite, SuiteArg::Sharpness | SuiteArg::All) {
        reports.push(VerifyReport::new("sharpness", args.seed, sharpness_checks()));
    }
    if matches!(args.suite, SuiteArg::Limits | SuiteArg::All) {
        let mut checks = limit_checks();
        checks.extend(cap_checks());
        reports.push(VerifyReport::new("limits", args.seed, checks));
    }
    let all_pass = reports.iter().all(VerifyReport::all_pass);
    match args.out {
        OutputFormat::Json => {
            if reports.len() == 1 {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports[0]).expect("report serializes")
                );
            } else {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            }
        }
        OutputFormat::Csv => {
            println!("suite,name,params,slack,pass");
            for report in &reports {
                for check in &report.checks {
                    println!(
                        "{},{},{},{:.6e},{}",
                        csv_field(&report.suite),
                        csv_field(&check.name),
                        csv_field(&check.params),
                        check.slack,
                        check.pass
                    );
                }
            }
        }
    }
    if all_pass {
        0
    } else {
        eprintln!("error: some checks failed");
        1
    }
}

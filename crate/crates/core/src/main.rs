//! Command-line entry point: run identity verification suites, compute
//! compound/pullback matrices, run truncated Parseval studies, and benchmark
//! minor summation against direct determinants.
//!
//! Exit codes: 0 all checks passed, 1 identity violation, 2 usage or input
//! error. Indices in rendered output are 1-based; all internal APIs are
//! 0-based.

use binet::cauchy_binet::{
    cauchy_binet_sum, verify_abstract, verify_classical, verify_lemma1,
    verify_partition_of_identity, verify_phi_factorization, verify_pythagorean,
};
use binet::combinatorics::SubsetFamily;
use binet::error::Error;
use binet::exterior::{compound, det_top_power, pullback_matrix};
use binet::gen::{float_matrix, rational_matrix, seeded_rng};
use binet::io;
use binet::matrix::Matrix;
use binet::parseval::convergence_study;
use binet::reduce::Reduction;
use binet::report::IdentityReport;
use binet::scalar::{Rational, Scalar};
use binet::suites;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "binet", version, about = "Exterior-algebra identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a determinant identity on generated or file-loaded matrices.
    Verify(VerifyArgs),
    /// Compute the compound or pullback matrix of an input matrix.
    Compound(CompoundArgs),
    /// Run a truncated Parseval convergence study from an instance file.
    Parseval(ParsevalArgs),
    /// Time minor summation against multiply-then-determinant.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Backend {
    Rational,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Identity {
    Classical,
    Abstract,
    Lemma1,
    Partition,
    Pythagorean,
    CompoundMul,
    DetOracle,
    Phi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    identity: Identity,
    #[arg(long, value_enum, default_value = "rational")]
    backend: Backend,
    /// Order n of the identity (rows of A, cols of B).
    #[arg(long = "n", default_value_t = 3)]
    order: usize,
    /// Middle dimension N.
    #[arg(long = "N", default_value_t = 6)]
    dim: usize,
    /// Target-space dimension w (abstract identity only).
    #[arg(long)]
    w: Option<usize>,
    /// Source-space dimension u (abstract identity only).
    #[arg(long)]
    u: Option<usize>,
    /// Exterior level (abstract, lemma1, partition).
    #[arg(long)]
    level: Option<usize>,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Load A from a file instead of generating it.
    #[arg(long = "a")]
    a_path: Option<PathBuf>,
    /// Load B from a file instead of generating it.
    #[arg(long = "b")]
    b_path: Option<PathBuf>,
    /// Float-backend tolerance.
    #[arg(long, default_value_t = suites::DEFAULT_FLOAT_TOLERANCE)]
    tolerance: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Directory for per-instance JSON reports (default: $BINET_REPORT_DIR).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CompoundArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    level: usize,
    /// Emit the pullback (transposed compound) instead of the compound.
    #[arg(long)]
    pullback: bool,
    #[arg(long, value_enum, default_value = "rational")]
    backend: Backend,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct ParsevalArgs {
    /// Instance JSON: { "n", "M", "T", "a": [...], "b": [...] }.
    #[arg(long)]
    instance: PathBuf,
    /// Comma-separated window schedule; defaults to the instance's M.
    #[arg(long)]
    schedule: Option<String>,
    #[arg(long, default_value_t = 1e-10)]
    tolerance: f64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Use the pairwise-tree parallel reduction for the truncated sums.
    #[arg(long)]
    parallel: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long = "max-n", default_value_t = 4)]
    max_order: usize,
    #[arg(long = "max-N", default_value_t = 12)]
    max_dim: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Compound(args) => cmd_compound(args),
        Command::Parseval(args) => cmd_parseval(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn report_dir(flag: Option<PathBuf>) -> Option<PathBuf> {
    flag.or_else(|| std::env::var_os("BINET_REPORT_DIR").map(PathBuf::from))
}

fn write_reports(
    reports: &[IdentityReport],
    dir: Option<&Path>,
    format: Format,
) -> binet::Result<()> {
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir)?;
        for (i, report) in reports.iter().enumerate() {
            let path = dir.join(format!("{}_{i:04}.json", report.identity));
            std::fs::write(path, serde_json::to_string_pretty(report).unwrap())?;
        }
    }
    match format {
        Format::Json => {
            for report in reports {
                println!("{}", serde_json::to_string(report).unwrap());
            }
        }
        Format::Csv => {
            println!("identity,dims,backend,max_abs_deviation,passed");
            for r in reports {
                println!(
                    "{},{:?},{},{},{}",
                    r.identity, r.dims, r.backend, r.max_abs_deviation, r.passed
                );
            }
        }
        Format::Text => {
            for r in reports {
                let status = if r.passed { "ok  " } else { "FAIL" };
                println!(
                    "{status} {:<26} {:<30} deviation {}",
                    r.identity, r.dims, r.max_abs_deviation
                );
            }
            let passed = reports.iter().filter(|r| r.passed).count();
            println!("passed {passed}/{}", reports.len());
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> binet::Result<ExitCode> {
    let reports = match args.backend {
        Backend::Rational => verify_rational(&args)?,
        Backend::Float => verify_float(&args)?,
    };
    write_reports(&reports, report_dir(args.out).as_deref(), args.format)?;
    Ok(if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn check_loaded_shape<T: Scalar>(
    a: &Matrix<T>,
    b: &Matrix<T>,
    order: usize,
    dim: usize,
) -> binet::Result<()> {
    if a.rows() != order || a.cols() != dim {
        return Err(Error::DimensionMismatch(format!(
            "matrix A is {}x{}, expected n x N = {order}x{dim}",
            a.rows(),
            a.cols()
        )));
    }
    if b.rows() != dim || b.cols() != order {
        return Err(Error::DimensionMismatch(format!(
            "matrix B is {}x{}, expected N x n = {dim}x{order}",
            b.rows(),
            b.cols()
        )));
    }
    Ok(())
}

fn verify_rational(args: &VerifyArgs) -> binet::Result<Vec<IdentityReport>> {
    let n = args.order;
    let big_n = args.dim;
    let seed = args.seed;

    if let (Some(a_path), Some(b_path)) = (&args.a_path, &args.b_path) {
        let a = io::load_rational_matrix(a_path)?;
        let b = io::load_rational_matrix(b_path)?;
        check_loaded_shape(&a, &b, n, big_n)?;
        return Ok(vec![match args.identity {
            Identity::Classical => verify_classical(&a, &b, None, None)?,
            Identity::Phi => verify_phi_factorization(&a, &b, None, None)?,
            Identity::Abstract => {
                verify_abstract(&a, &b, args.level.unwrap_or(n.min(big_n)), None, None)?
            }
            _ => {
                return Err(Error::Parse(
                    "this identity does not take matrix files".into(),
                ))
            }
        }]);
    }

    let mut rng = seeded_rng(seed);
    let mut reports = Vec::new();
    for _ in 0..args.count {
        match args.identity {
            Identity::Classical => {
                let a = rational_matrix(&mut rng, n, big_n);
                let b = rational_matrix(&mut rng, big_n, n);
                reports.push(verify_classical(&a, &b, None, Some(seed))?);
            }
            Identity::Pythagorean => {
                let a = rational_matrix(&mut rng, n, big_n);
                reports.push(verify_pythagorean(&a, None, Some(seed))?);
            }
            Identity::Phi => {
                let a = rational_matrix(&mut rng, n, big_n);
                let b = rational_matrix(&mut rng, big_n, n);
                reports.push(verify_phi_factorization(&a, &b, None, Some(seed))?);
            }
            Identity::Abstract => {
                let w = args.w.unwrap_or(n);
                let u = args.u.unwrap_or(n);
                let level = args.level.unwrap_or_else(|| w.min(u).min(big_n));
                let a = rational_matrix(&mut rng, w, big_n);
                let b = rational_matrix(&mut rng, big_n, u);
                reports.push(verify_abstract(&a, &b, level, None, Some(seed))?);
            }
            Identity::Lemma1 => {
                let level = args.level.unwrap_or(n);
                for sigma in SubsetFamily::new(big_n, level).iter() {
                    reports.push(verify_lemma1::<Rational>(big_n, &sigma)?);
                }
            }
            Identity::Partition => {
                let level = args.level.unwrap_or(n);
                reports.push(verify_partition_of_identity::<Rational>(big_n, level)?);
            }
            Identity::CompoundMul => {
                reports.extend(suites::compound_multiplicativity_suite(seed, 1)?);
            }
            Identity::DetOracle => {
                reports.extend(suites::det_oracle_suite(seed, 1, big_n.min(6), 0, 0.0)?);
            }
        }
        // exhaustive identities do not vary per instance
        if matches!(args.identity, Identity::Lemma1 | Identity::Partition) {
            break;
        }
    }
    Ok(reports)
}

fn verify_float(args: &VerifyArgs) -> binet::Result<Vec<IdentityReport>> {
    let n = args.order;
    let big_n = args.dim;
    let tol = Some(args.tolerance);

    if let (Some(a_path), Some(b_path)) = (&args.a_path, &args.b_path) {
        let a = io::load_f64_matrix(a_path)?;
        let b = io::load_f64_matrix(b_path)?;
        check_loaded_shape(&a, &b, n, big_n)?;
        return Ok(vec![match args.identity {
            Identity::Classical => verify_classical(&a, &b, tol, None)?,
            Identity::Phi => verify_phi_factorization(&a, &b, tol, None)?,
            Identity::Abstract => {
                verify_abstract(&a, &b, args.level.unwrap_or(n.min(big_n)), tol, None)?
            }
            _ => {
                return Err(Error::Parse(
                    "this identity does not take matrix files".into(),
                ))
            }
        }]);
    }

    let mut rng = seeded_rng(args.seed);
    let mut reports = Vec::new();
    for _ in 0..args.count {
        match args.identity {
            Identity::Classical => {
                let a = float_matrix(&mut rng, n, big_n);
                let b = float_matrix(&mut rng, big_n, n);
                reports.push(verify_classical(&a, &b, tol, Some(args.seed))?);
            }
            Identity::Pythagorean => {
                let a = float_matrix(&mut rng, n, big_n);
                reports.push(verify_pythagorean(&a, tol, Some(args.seed))?);
            }
            Identity::Phi => {
                let a = float_matrix(&mut rng, n, big_n);
                let b = float_matrix(&mut rng, big_n, n);
                reports.push(verify_phi_factorization(&a, &b, tol, Some(args.seed))?);
            }
            Identity::Abstract => {
                let w = args.w.unwrap_or(n);
                let u = args.u.unwrap_or(n);
                let level = args.level.unwrap_or_else(|| w.min(u).min(big_n));
                let a = float_matrix(&mut rng, w, big_n);
                let b = float_matrix(&mut rng, big_n, u);
                reports.push(verify_abstract(&a, &b, level, tol, Some(args.seed))?);
            }
            Identity::CompoundMul => {
                reports.extend(suites::compound_multiplicativity_float_suite(
                    args.seed,
                    1,
                    args.tolerance,
                )?);
            }
            Identity::DetOracle => {
                reports.extend(suites::det_oracle_suite(
                    args.seed,
                    1,
                    1,
                    big_n.min(8),
                    args.tolerance,
                )?);
            }
            Identity::Lemma1 | Identity::Partition => {
                return Err(Error::Parse(
                    "lemma1 and partition are exact identities; use the rational backend".into(),
                ));
            }
        }
    }
    Ok(reports)
}

/// Render an index set 1-based for display, matching the usual convention
/// for minors.
fn one_based(sigma: &binet::combinatorics::IndexSet) -> String {
    let inner: Vec<String> = sigma.indices().iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(" "))
}

fn render_compound<T: Scalar>(m: &Matrix<T>, args: &CompoundArgs) -> binet::Result<String> {
    let out = if args.pullback {
        pullback_matrix(m, args.level)
    } else {
        compound(m, args.level)
    };
    let (row_ambient, col_ambient) = if args.pullback {
        (m.cols(), m.rows())
    } else {
        (m.rows(), m.cols())
    };
    let row_labels: Vec<String> = SubsetFamily::new(row_ambient, args.level)
        .iter()
        .map(|s| one_based(&s))
        .collect();
    let col_labels: Vec<String> = SubsetFamily::new(col_ambient, args.level)
        .iter()
        .map(|s| one_based(&s))
        .collect();
    Ok(match args.format {
        Format::Json => {
            let entries: Vec<Vec<String>> = (0..out.rows())
                .map(|r| out.row(r).iter().map(|v| format!("{v}")).collect())
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "rows": row_labels,
                "cols": col_labels,
                "entries": entries,
            }))
            .unwrap()
        }
        Format::Csv | Format::Text => {
            let mut text = String::new();
            text.push_str(&format!(",{}\n", col_labels.join(",")));
            for r in 0..out.rows() {
                let cells: Vec<String> = out.row(r).iter().map(|v| format!("{v}")).collect();
                text.push_str(&format!("{},{}\n", row_labels[r], cells.join(",")));
            }
            text
        }
    })
}

fn cmd_compound(args: CompoundArgs) -> binet::Result<ExitCode> {
    let rendered = match args.backend {
        Backend::Rational => {
            let m = io::load_rational_matrix(&args.input)?;
            if args.level > m.rows().min(m.cols()) {
                return Err(Error::Parse(format!(
                    "level {} out of range for a {}x{} matrix",
                    args.level,
                    m.rows(),
                    m.cols()
                )));
            }
            render_compound(&m, &args)?
        }
        Backend::Float => {
            let m = io::load_f64_matrix(&args.input)?;
            if args.level > m.rows().min(m.cols()) {
                return Err(Error::Parse(format!(
                    "level {} out of range for a {}x{} matrix",
                    args.level,
                    m.rows(),
                    m.cols()
                )));
            }
            render_compound(&m, &args)?
        }
    };
    match &args.output {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_parseval(args: ParsevalArgs) -> binet::Result<ExitCode> {
    let text = std::fs::read_to_string(&args.instance)?;
    let instance = io::parse_instance_json(&text)?;
    let schedule: Vec<i64> = match &args.schedule {
        Some(s) => s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad schedule entry {tok:?}")))
            })
            .collect::<binet::Result<_>>()?,
        None => vec![instance.window().m],
    };
    // Validate every window up front so a bad schedule is a usage error.
    for &m in &schedule {
        instance.with_window(binet::parseval::TruncationWindow::new(m))?;
    }
    let report = convergence_study(&instance, &schedule)?;
    if args.parallel {
        // cross-check the final window with the pairwise-tree reduction
        let final_inst = instance
            .with_window(binet::parseval::TruncationWindow::new(
                *schedule.last().unwrap(),
            ))?;
        let seq = final_inst.truncated_sum()?;
        let par = final_inst.truncated_sum_with(Reduction::Pairwise)?;
        eprintln!(
            "parallel reduction deviation: {:e}",
            (seq - par).norm()
        );
    }
    let rendered = match args.format {
        Format::Csv => report.to_csv(),
        _ => serde_json::to_string_pretty(&report).unwrap(),
    };
    match &args.output {
        Some(path) => std::fs::write(path, rendered)?,
        None => println!("{rendered}"),
    }
    let finite_support = instance
        .a()
        .iter()
        .chain(instance.b())
        .all(|f| f.finite_support_radius().is_some());
    if finite_support && report.final_error() > args.tolerance {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(args: BenchArgs) -> binet::Result<ExitCode> {
    let mut rng = seeded_rng(args.seed);
    let mut out = String::from("n,N,minor_sum_seconds,direct_seconds\n");
    for n in 1..=args.max_order {
        for big_n in n..=args.max_dim {
            let a = float_matrix(&mut rng, n, big_n);
            let b = float_matrix(&mut rng, big_n, n);

            let start = std::time::Instant::now();
            let via_minors = cauchy_binet_sum(&a, &b)?;
            let minor_secs = start.elapsed().as_secs_f64();

            let start = std::time::Instant::now();
            let direct = det_top_power(&a.matmul(&b)?)?;
            let direct_secs = start.elapsed().as_secs_f64();

            let scale = 1.0_f64.max(direct.abs()).max(via_minors.abs());
            if (via_minors - direct).abs() / scale > suites::DEFAULT_FLOAT_TOLERANCE {
                return Err(Error::Parse(format!(
                    "bench consistency check failed at n={n}, N={big_n}: {via_minors} vs {direct}"
                )));
            }
            out.push_str(&format!("{n},{big_n},{minor_secs:e},{direct_secs:e}\n"));
        }
    }
    match &args.output {
        Some(path) => std::fs::write(path, out)?,
        None => print!("{out}"),
    }
    Ok(ExitCode::SUCCESS)
}

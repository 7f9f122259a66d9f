//! `char1` — command-line surface over the char1 library.
//!
//! Subcommands: `witt-table`, `zeta-f1`, `count-points`, `elliptic`,
//! `additive-search`, `entropy-demo`, `mangoldt`. Tabular data is CSV,
//! structured data is JSON, and every rational is serialized exactly as
//! `num/den`. Each text output begins with a `# char1 <version> | <argv>
//! | <UTC timestamp>` line unless `--no-header` is given; JSON outputs
//! instead carry a timestamp-free `meta` object so reruns are
//! byte-identical. Exit codes: 0 success, 1 validation/usage error,
//! 2 accuracy error. `CHAR1_THREADS` caps the worker-thread count.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use char1::num::complex::Complex64;
use char1::zeta::{LdMode, LogDerivEvaluator};
use char1::{Error, Result};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "char1", version, about = "Exact computations in characteristic one", disable_help_subcommand = true)]
struct Cli {
    /// Suppress the "# char1 ..." provenance line on text outputs and the
    /// meta object in JSON outputs.
    #[arg(long, global = true)]
    no_header: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Table of the universal coefficients w_p(alpha) modulo T^(N+1),
    /// over alpha = a/p^N for a = 1..=p^N, in canonical (reduced,
    /// ascending) order. CSV columns: alpha_num,alpha_den,series.
    WittTable {
        /// The prime p.
        #[arg(long = "p")]
        p: u64,
        /// Truncation order: coefficients of T^1..T^N are kept.
        #[arg(long = "N")]
        n: u32,
        /// Output CSV file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zeta data of a monoid scheme: exact exponent vector, sampled
    /// log-derivative CSV (re_s,im_s,re_val,im_val), and the counting
    /// function on the real part of the grid (z,count).
    ZetaF1 {
        /// Scheme JSON file: {"points":[{"rank":..,"torsion":[..]},..]}.
        #[arg(long)]
        scheme: PathBuf,
        /// Sample grid "lo:hi:count[,lo:hi:count]" (real[,imag] parts).
        #[arg(long = "s-grid")]
        s_grid: Option<String>,
        /// Log-derivative flavor: closed-form integral or Dirichlet-series
        /// (Hurwitz-continued) discrete.
        #[arg(long, value_enum, default_value_t = ModeArg::Integral)]
        mode: ModeArg,
        /// Cross-validate every integral-mode sample against an
        /// independent quadrature evaluation to this absolute tolerance
        /// (accuracy error on disagreement).
        #[arg(long)]
        tolerance: Option<f64>,
        /// Output directory for exponents.json [, logderiv.csv,
        /// counting.csv]; exponents go to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Point counts |X(F_1^n)| of a monoid scheme for n = 1..=N.
    /// CSV columns: n,count.
    CountPoints {
        /// Scheme JSON file.
        #[arg(long)]
        scheme: PathBuf,
        /// Largest degree n.
        #[arg(long = "n")]
        n: u64,
        /// Output CSV file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Elliptic-curve zeta data: reduction summary, counting sequence
    /// N(n) = n+1-t(n) (counting.csv), symbolic singularity catalog
    /// (singularities.json), and the exact Dirichlet-identity check.
    Elliptic {
        /// Curve JSON file: {"a":[a1,a2,a3,a4,a6]}.
        #[arg(long)]
        curve: PathBuf,
        /// Coefficient range for the counting sequence and identity check.
        #[arg(long = "N", default_value_t = 100)]
        n: u64,
        /// Verify t = a * (1/zeta(2s-1)) * (1/M) exactly through N.
        #[arg(long)]
        check_dirichlet: bool,
        /// Catalog window "re_lo:re_hi:_[,im_lo:im_hi:_]" (grid counts
        /// ignored; defaults to [-2,2] x [-2,2]).
        #[arg(long = "s-grid")]
        s_grid: Option<String>,
        /// Output directory for counting.csv and singularities.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Count (and optionally export) the admissible symmetries s on
    /// Z/nZ with zero adjoined, s(0) = 1.
    AdditiveSearch {
        /// Order n of the cyclic group.
        #[arg(long = "n")]
        n: usize,
        /// Output directory: one edge-list CSV (x,sx) per structure.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample the entropy weight c(s) and the rho-deformed sum
    /// 0.3 +_T 0.7 as the temperature T runs from 0 (max) to 1 (sum).
    /// CSV columns: s,entropy_weight,deformed_sum.
    EntropyDemo {
        /// Number of grid intervals on [0,1].
        #[arg(long = "n", default_value_t = 100)]
        n: usize,
        /// Output CSV file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Prime-power support of the von Mangoldt counting function:
    /// rows n,p,ell with n = p^ell <= N. CSV columns: n,p,ell.
    Mangoldt {
        /// Largest prime power listed.
        #[arg(long = "n")]
        n: u64,
        /// Output CSV file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Integral,
    Discrete,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version are successful outcomes; everything else is
            // a usage (validation) error.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = std::env::var("CHAR1_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&k| k >= 1)
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Accuracy(msg)) => {
            eprintln!("accuracy error: {msg}");
            ExitCode::from(2)
        }
        Err(Error::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Error::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// `# char1 <version> | <argv> | <UTC timestamp>`.
fn provenance_line() -> String {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    format!(
        "# char1 {} | {} | {}",
        env!("CARGO_PKG_VERSION"),
        argv.join(" "),
        utc_now()
    )
}

/// Timestamp-free provenance for JSON outputs (reruns stay byte-identical).
fn json_meta() -> serde_json::Value {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    serde_json::json!({
        "generator": format!("char1 {}", env!("CARGO_PKG_VERSION")),
        "argv": argv.join(" "),
    })
}

/// RFC 3339 UTC timestamp from the system clock (civil-from-days
/// conversion; no external time dependency).
fn utc_now() -> String {
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let days = (secs / 86_400) as i64;
    let rem = secs % 86_400;
    let (h, m, s) = (rem / 3600, (rem % 3600) / 60, rem % 60);
    // Howard Hinnant's civil_from_days.
    let z = days + 719_468;
    let era = z.div_euclid(146_097);
    let doe = z.rem_euclid(146_097);
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let y = yoe + era * 400;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let d = doy - (153 * mp + 2) / 5 + 1;
    let month = if mp < 10 { mp + 3 } else { mp - 9 };
    let year = if month <= 2 { y + 1 } else { y };
    format!("{year:04}-{month:02}-{d:02}T{h:02}:{m:02}:{s:02}Z")
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Domain(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))
}

fn ensure_dir(path: &Path) -> Result<()> {
    std::fs::create_dir_all(path)
        .map_err(|e| Error::Domain(format!("cannot create {}: {e}", path.display())))
}

/// Parse "lo:hi:count" into an inclusive linspace.
fn parse_linspace(spec: &str) -> Result<Vec<f64>> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(Error::Domain(format!(
            "grid spec '{spec}' is not of the form lo:hi:count"
        )));
    }
    let lo: f64 = parts[0]
        .parse()
        .map_err(|_| Error::Domain(format!("bad grid bound '{}'", parts[0])))?;
    let hi: f64 = parts[1]
        .parse()
        .map_err(|_| Error::Domain(format!("bad grid bound '{}'", parts[1])))?;
    let count: usize = parts[2]
        .parse()
        .map_err(|_| Error::Domain(format!("bad grid count '{}'", parts[2])))?;
    if count == 0 || !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err(Error::Domain(format!("grid spec '{spec}' is empty or unordered")));
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    let step = (hi - lo) / (count - 1) as f64;
    Ok((0..count).map(|i| lo + step * i as f64).collect())
}

/// Parse "re_spec[,im_spec]" into (re values, im values); the imaginary
/// part defaults to the single value 0.
fn parse_s_grid(spec: &str) -> Result<(Vec<f64>, Vec<f64>)> {
    match spec.split_once(',') {
        Some((re, im)) => Ok((parse_linspace(re)?, parse_linspace(im)?)),
        None => Ok((parse_linspace(spec)?, vec![0.0])),
    }
}

fn rational_string(q: &char1::BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn run(cli: &Cli) -> Result<()> {
    let header = !cli.no_header;
    match &cli.cmd {
        Cmd::WittTable { p, n, out } => witt_table(*p, *n, header, out.as_deref()),
        Cmd::ZetaF1 {
            scheme,
            s_grid,
            mode,
            tolerance,
            out,
        } => zeta_f1(
            scheme,
            s_grid.as_deref(),
            *mode,
            *tolerance,
            header,
            out.as_deref(),
        ),
        Cmd::CountPoints { scheme, n, out } => count_points(scheme, *n, header, out.as_deref()),
        Cmd::Elliptic {
            curve,
            n,
            check_dirichlet,
            s_grid,
            out,
        } => elliptic(
            curve,
            *n,
            *check_dirichlet,
            s_grid.as_deref(),
            header,
            out.as_deref(),
        ),
        Cmd::AdditiveSearch { n, out } => additive_search(*n, header, out.as_deref()),
        Cmd::EntropyDemo { n, out } => entropy_demo(*n, header, out.as_deref()),
        Cmd::Mangoldt { n, out } => mangoldt(*n, header, out.as_deref()),
    }
}

fn witt_table(p: u64, n: u32, header: bool, out: Option<&Path>) -> Result<()> {
    let table = char1::witt::witt_coeffs(p, n)?;
    let mut text = String::new();
    if header {
        let _ = writeln!(text, "{}", provenance_line());
    }
    let _ = writeln!(text, "alpha_num,alpha_den,series");
    for (num, den, series) in table.rows() {
        let _ = writeln!(text, "{},{},{}", num, den, char1::witt::series_string(&series));
    }
    emit(&text, out)
}

fn zeta_f1(
    scheme_path: &Path,
    s_grid: Option<&str>,
    mode: ModeArg,
    tolerance: Option<f64>,
    header: bool,
    out: Option<&Path>,
) -> Result<()> {
    let scheme = char1::monoid::SchemeData::from_json(&read_file(scheme_path)?)?;
    let ld_mode = match mode {
        ModeArg::Integral => LdMode::Integral,
        ModeArg::Discrete => LdMode::Discrete,
    };
    if tolerance.is_some() && !matches!(ld_mode, LdMode::Integral) {
        return Err(Error::Domain(
            "--tolerance cross-validation applies to --mode integral only".into(),
        ));
    }

    let exponents = char1::zeta::alpha_exponents(&scheme)?;
    let alphas: Vec<String> = exponents.alphas.iter().map(rational_string).collect();
    let mut doc = serde_json::json!({ "alphas": alphas });
    if header {
        doc["meta"] = json_meta();
    }
    let exponents_text = format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"));

    match out {
        None => {
            print!("{exponents_text}");
        }
        Some(dir) => {
            ensure_dir(dir)?;
            emit(&exponents_text, Some(&dir.join("exponents.json")))?;
        }
    }

    let Some(grid_spec) = s_grid else {
        return Ok(());
    };
    let (re_vals, im_vals) = parse_s_grid(grid_spec)?;
    let evaluator = LogDerivEvaluator::new(&scheme, ld_mode)?;

    let mut ld_csv = String::new();
    if header {
        let _ = writeln!(ld_csv, "{}", provenance_line());
    }
    let _ = writeln!(ld_csv, "re_s,im_s,re_val,im_val");
    for &re in &re_vals {
        for &im in &im_vals {
            let s = Complex64::new(re, im);
            let v = char1::zeta::zeta_logderiv(&evaluator, s)?;
            if let Some(tol) = tolerance {
                cross_validate_sample(&scheme, s, v, tol)?;
            }
            let _ = writeln!(ld_csv, "{re},{im},{},{}", v.re, v.im);
        }
    }

    let mut count_csv = String::new();
    if header {
        let _ = writeln!(count_csv, "{}", provenance_line());
    }
    let _ = writeln!(count_csv, "z,count");
    for &z in &re_vals {
        let v = char1::zeta::scheme_counting_eval(&scheme, Complex64::new(z, 0.0))?;
        let _ = writeln!(count_csv, "{z},{}", v.re);
    }

    match out {
        None => {
            print!("{ld_csv}");
            print!("{count_csv}");
        }
        Some(dir) => {
            emit(&ld_csv, Some(&dir.join("logderiv.csv")))?;
            emit(&count_csv, Some(&dir.join("counting.csv")))?;
        }
    }
    Ok(())
}

/// Recompute an integral-mode log-derivative sample through the quadrature
/// representation of each cyclic constituent and compare.
fn cross_validate_sample(
    scheme: &char1::monoid::SchemeData,
    s: Complex64,
    closed_form: Complex64,
    tol: f64,
) -> Result<()> {
    // Count constituent evaluations to split the tolerance budget.
    let mut n_terms = 0usize;
    for point in &scheme.points {
        let gamma = char1::zeta::cyclic_subgroup_counts(&point.torsion)?;
        n_terms += (point.rank as usize + 1) * gamma.len();
    }
    let per_term = (tol / (n_terms.max(1) as f64) / 4.0).max(1e-12);
    let mut total = Complex64::new(0.0, 0.0);
    for point in &scheme.points {
        let gamma = char1::zeta::cyclic_subgroup_counts(&point.torsion)?;
        let k = point.rank;
        for j in 0..=k {
            let sign = if (k - j) % 2 == 0 { 1.0 } else { -1.0 };
            let binom = binomial(k, j) as f64 * sign;
            for (&d, &g) in &gamma {
                let xi = char1::zeta::xi_logderiv_by_quadrature(d, s - j as f64, per_term)?;
                total += binom * g as f64 * xi;
            }
        }
    }
    if (total - closed_form).norm() > tol {
        return Err(Error::Accuracy(format!(
            "quadrature cross-check failed at s = {s}: closed form {closed_form}, quadrature {total}"
        )));
    }
    Ok(())
}

fn binomial(n: u32, k: u32) -> u64 {
    let mut acc = 1u64;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

fn count_points(scheme_path: &Path, n_max: u64, header: bool, out: Option<&Path>) -> Result<()> {
    if n_max == 0 {
        return Err(Error::Domain("--n must be at least 1".into()));
    }
    let scheme = char1::monoid::SchemeData::from_json(&read_file(scheme_path)?)?;
    let mut text = String::new();
    if header {
        let _ = writeln!(text, "{}", provenance_line());
    }
    let _ = writeln!(text, "n,count");
    for n in 1..=n_max {
        let _ = writeln!(text, "{n},{}", scheme.count_points_f1n(n)?);
    }
    emit(&text, out)
}

fn elliptic(
    curve_path: &Path,
    n_max: u64,
    check_dirichlet: bool,
    s_grid: Option<&str>,
    header: bool,
    out: Option<&Path>,
) -> Result<()> {
    use char1::elliptic::{
        a_coeffs_from_counting, dirichlet_identity_check, singularity_catalog, t_coeffs, CurveModel,
    };
    if n_max == 0 {
        return Err(Error::Domain("--N must be at least 1".into()));
    }
    let curve = CurveModel::from_json(&read_file(curve_path)?)?;
    for w in curve.minimality_warnings() {
        eprintln!("warning: {w}");
    }

    let a = a_coeffs_from_counting(&curve, n_max)?;
    let t = t_coeffs(&curve, &a, n_max)?;

    if header {
        println!("{}", provenance_line());
    }
    for p in curve.bad_primes() {
        println!("reduction at {p}: {}", curve.reduction_type(p)?);
    }

    let window = match s_grid {
        None => ((-2.0, 2.0), (-2.0, 2.0)),
        Some(spec) => {
            let (re, im) = parse_s_grid(spec)?;
            let span = |v: &[f64]| (v[0], *v.last().expect("nonempty grid"));
            (span(&re), if im.len() == 1 && im[0] == 0.0 {
                (-2.0, 2.0)
            } else {
                span(&im)
            })
        }
    };
    let catalog = singularity_catalog(&curve, window.0, window.1);
    println!(
        "{} singularities in [{}, {}] x [{}, {}]",
        catalog.len(),
        window.0 .0,
        window.0 .1,
        window.1 .0,
        window.1 .1
    );

    if check_dirichlet {
        let report = dirichlet_identity_check(&curve, &a, &t, n_max)?;
        if report.ok() {
            println!("identity holds through n={n_max}");
        } else {
            if let Some((n, t_n, conv)) = report.first_global_mismatch {
                println!("identity FAILS at n={n}: t(n)={t_n}, convolution={conv}");
            }
            if let Some((p, nu, lhs, rhs)) = report.first_local_mismatch {
                println!("local factor FAILS at p={p}, exponent {nu}: t-side {lhs}, a-side {rhs}");
            }
            return Err(Error::Accuracy(
                "Dirichlet identity check failed; see report above".into(),
            ));
        }
    }

    if let Some(dir) = out {
        ensure_dir(dir)?;
        let mut count_csv = String::new();
        if header {
            let _ = writeln!(count_csv, "{}", provenance_line());
        }
        let _ = writeln!(count_csv, "n,count");
        for n in 1..=n_max {
            let _ = writeln!(count_csv, "{n},{}", n as i64 + 1 - t.get(n));
        }
        emit(&count_csv, Some(&dir.join("counting.csv")))?;

        let mut doc = serde_json::json!({ "singularities": catalog });
        if header {
            doc["meta"] = json_meta();
        }
        let text = format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable"));
        emit(&text, Some(&dir.join("singularities.json")))?;
    }
    Ok(())
}

fn additive_search(n: usize, header: bool, out: Option<&Path>) -> Result<()> {
    use char1::additive::{search_a, SearchMode};
    // Brute force is exhaustive but capped; beyond the cap the
    // field-transport construction is complete by the uniqueness theorem.
    let mode = if n <= 10 {
        SearchMode::Brute
    } else {
        SearchMode::Constructive
    };
    let maps = search_a(n, mode)?;
    if header {
        println!("{}", provenance_line());
    }
    println!("found {} structures for n = {n}", maps.len());
    if let Some(dir) = out {
        ensure_dir(dir)?;
        for (i, map) in maps.iter().enumerate() {
            let mut text = String::new();
            if header {
                let _ = writeln!(text, "{}", provenance_line());
            }
            let _ = writeln!(text, "x,sx");
            for (x, sx) in map.map().iter().enumerate() {
                let _ = writeln!(text, "{x},{sx}");
            }
            emit(&text, Some(&dir.join(format!("s_{i}.csv"))))?;
        }
    }
    Ok(())
}

fn entropy_demo(n: usize, header: bool, out: Option<&Path>) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("--n must be at least 1".into()));
    }
    let mut text = String::new();
    if header {
        let _ = writeln!(text, "{}", provenance_line());
    }
    let _ = writeln!(text, "s,entropy_weight,deformed_sum");
    for i in 0..=n {
        let s = i as f64 / n as f64;
        let c = char1::entropy::entropy_c(s)?;
        let sum = char1::entropy::rho_add_point(0.3, 0.7, s)?;
        let _ = writeln!(text, "{s},{c},{sum}");
    }
    emit(&text, out)
}

fn mangoldt(n_max: u64, header: bool, out: Option<&Path>) -> Result<()> {
    let profile = char1::zeta::mangoldt_profile(n_max)?;
    let mut text = String::new();
    if header {
        let _ = writeln!(text, "{}", provenance_line());
    }
    let _ = writeln!(text, "n,p,ell");
    for (n, p, ell) in profile.terms() {
        let _ = writeln!(text, "{n},{p},{ell}");
    }
    emit(&text, out)
}

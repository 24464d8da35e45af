//! Command-line front end for the finite-part integration engine:
//! single-point evaluations, ω-sweeps comparing the series expansion against
//! quadrature oracles, and the built-in verification suite. Reports are
//! emitted as text, JSON, or CSV with deterministic formatting.

mod report;

use std::path::PathBuf;
use std::sync::mpsc;
use std::thread;

use clap::{Args, Parser, Subcommand, ValueEnum};
use finpart::entire::EntireFunction;
use finpart::fpi::{fp_endpoint, fp_origin_integer, fp_origin_noninteger};
use finpart::oracle;
use finpart::stieltjes::{dominant_term, eval_sqrt_transform, eval_stieltjes};
use finpart::{apps, builtin_library, verify};
use finpart::{Error, SeriesConfig, StieltjesQuery, UpperLimit};
use report::{Report, Value};

#[derive(Parser)]
#[command(
    name = "finpart",
    version,
    about = "Finite-part integrals of entire functions against power and square-root kernels",
    arg_required_else_help = true
)]
struct Cli {
    /// Relative series tolerance; also the oracle quadrature tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Maximum number of terms per series.
    #[arg(long, global = true, default_value_t = 2000)]
    term_cap: usize,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate ⨍₀^a f(x)/(x+ω)^(n+α) dx by series expansion, with oracle.
    #[command(name = "stieltjes")]
    Stieltjes(StieltjesArgs),
    /// Evaluate ∫₀^a f(x)/√(ω²+x²) dx by series expansion, with oracle.
    #[command(name = "sqrt-transform")]
    SqrtTransform(SqrtTransformArgs),
    /// Evaluate a single finite-part integral ⨍₀^a f(x)/x^ρ dx.
    #[command(name = "fp")]
    Fp(FpArgs),
    /// Evaluate ₂F₁(n+α, r; s; −ζ) for ζ > 1, with oracle.
    #[command(name = "gauss2f1")]
    Gauss2f1(Gauss2f1Args),
    /// Evaluate the confluent function U(n, 1−α, ω), with oracle.
    #[command(name = "kummeru")]
    Kummeru(KummeruArgs),
    /// Evaluate ∫₀^∞ e^(−αx²+βx)/√(ω²+x²) dx, with oracle.
    #[command(name = "gaussian-sqrt")]
    GaussianSqrt(GaussianSqrtArgs),
    /// Evaluate the modified Bessel function K₀(x) for 0 < x ≤ 5.
    #[command(name = "k0")]
    K0(K0Args),
    /// Sweep ω over a log grid, comparing expansion against oracle per row.
    #[command(name = "sweep")]
    Sweep(SweepArgs),
    /// Run the full verification suite; exits 4 if any check fails.
    #[command(name = "verify")]
    Verify,
}

/// Integrand selection: a registry key (exp_neg, power_exp[n],
/// beta_poly[r,s], gauss_exp[alpha,beta], monomial[m]) or a coefficient
/// file with one `k c_k` pair per line or a JSON array of pairs.
#[derive(Args)]
struct FunctionArgs {
    /// Built-in function key.
    #[arg(long)]
    f: Option<String>,
    /// Path to a user coefficient file (used instead of --f).
    #[arg(long)]
    coeff_file: Option<PathBuf>,
}

impl FunctionArgs {
    fn resolve(&self) -> Result<EntireFunction, Error> {
        match (&self.f, &self.coeff_file) {
            (Some(key), None) => builtin_library().resolve(key),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::InvalidParameter(format!("cannot read {}: {e}", path.display()))
                })?;
                let name = path
                    .file_stem()
                    .and_then(|s| s.to_str())
                    .unwrap_or("user")
                    .to_string();
                EntireFunction::parse_coefficient_list(&name, &text)
            }
            (Some(_), Some(_)) => Err(Error::InvalidParameter(
                "--f and --coeff-file are mutually exclusive".into(),
            )),
            (None, None) => Err(Error::InvalidParameter(
                "one of --f or --coeff-file is required".into(),
            )),
        }
    }

    fn describe(&self) -> String {
        match (&self.f, &self.coeff_file) {
            (Some(key), _) => key.clone(),
            (_, Some(path)) => path.display().to_string(),
            _ => String::new(),
        }
    }
}

fn parse_limit(s: &str) -> Result<LimitArg, String> {
    if s.eq_ignore_ascii_case("inf") || s.eq_ignore_ascii_case("infinity") {
        return Ok(LimitArg(UpperLimit::Infinite));
    }
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is neither a number nor `inf`"))?;
    UpperLimit::finite(v).map(LimitArg).map_err(|e| e.to_string())
}

#[derive(Copy, Clone)]
struct LimitArg(UpperLimit);

impl LimitArg {
    fn describe(&self) -> String {
        match self.0 {
            UpperLimit::Infinite => "inf".into(),
            UpperLimit::Finite(a) => a.to_string(),
        }
    }
}

#[derive(Args)]
struct StieltjesArgs {
    #[command(flatten)]
    function: FunctionArgs,
    /// Upper limit: a positive real or `inf`.
    #[arg(long, value_parser = parse_limit)]
    a: LimitArg,
    /// Integer part n ≥ 1 of the kernel order.
    #[arg(long)]
    n: u32,
    /// Fractional part α ∈ (0,1) of the kernel order.
    #[arg(long)]
    alpha: f64,
    /// Shift ω > 0.
    #[arg(long)]
    omega: f64,
}

#[derive(Args)]
struct SqrtTransformArgs {
    #[command(flatten)]
    function: FunctionArgs,
    /// Upper limit: a positive real or `inf`.
    #[arg(long, value_parser = parse_limit)]
    a: LimitArg,
    /// Shift ω > 0.
    #[arg(long)]
    omega: f64,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FpForm {
    /// Singularity at the origin: ⨍₀^a f(x)/x^ρ dx.
    Origin,
    /// Singularity at the upper endpoint: ⨍₀^c g(x)(c−x)^(−ρ) dx.
    Endpoint,
}

#[derive(Args)]
struct FpArgs {
    #[command(flatten)]
    function: FunctionArgs,
    /// Upper limit: a positive real or `inf` (endpoint form requires finite).
    #[arg(long, value_parser = parse_limit)]
    a: LimitArg,
    /// Kernel order ρ > 0; integer values dispatch to the log-bearing form.
    #[arg(long)]
    rho: f64,
    /// Where the kernel singularity sits.
    #[arg(long, value_enum, default_value_t = FpForm::Origin)]
    form: FpForm,
}

#[derive(Args)]
struct Gauss2f1Args {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    s: u32,
    /// Argument ζ > 1 of ₂F₁(n+α, r; s; −ζ).
    #[arg(long)]
    zeta: f64,
}

#[derive(Args)]
struct KummeruArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    omega: f64,
}

#[derive(Args)]
struct GaussianSqrtArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    beta: f64,
    #[arg(long)]
    omega: f64,
}

#[derive(Args)]
struct K0Args {
    #[arg(long)]
    x: f64,
}

#[derive(Args)]
struct SweepArgs {
    /// Command to sweep (only `stieltjes` has the full column set).
    #[arg(long)]
    cmd: String,
    #[command(flatten)]
    function: FunctionArgs,
    /// Upper limit: a positive real or `inf`.
    #[arg(long, value_parser = parse_limit)]
    a: LimitArg,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    alpha: f64,
    /// Log-spaced grid `lo:hi:count` with inclusive endpoints.
    #[arg(long)]
    omega_grid: String,
}

struct Outcome {
    report: Report,
    exit: i32,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let text = e.to_string();
                let line = text.lines().next().unwrap_or("invalid arguments");
                let line = line.strip_prefix("error: ").unwrap_or(line);
                eprintln!("error[E_VALIDATION] {line}");
                std::process::exit(2);
            }
            // --help / --version go to stdout with exit 0.
            let _ = e.print();
            std::process::exit(0);
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", render(&outcome.report, cli.format));
            std::process::exit(outcome.exit);
        }
        Err(e) => {
            let line = e.to_string().replace('\n', "; ");
            eprintln!("error[{}] {line}", e.code());
            std::process::exit(e.exit_code());
        }
    }
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => {
            if report.command == "verify" {
                return render_verify_text(report);
            }
            report.to_text()
        }
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    }
}

fn render_verify_text(report: &Report) -> String {
    let mut out = String::new();
    let mut passed = 0usize;
    for row in &report.results {
        let name = row.iter().find(|(k, _)| *k == "name");
        let ok = matches!(
            row.iter().find(|(k, _)| *k == "passed"),
            Some((_, Value::Bool(true)))
        );
        let detail = row.iter().find(|(k, _)| *k == "detail");
        if let (Some((_, Value::Str(name))), Some((_, Value::Str(detail)))) = (name, detail) {
            out.push_str(if ok { "PASS " } else { "FAIL " });
            out.push_str(name);
            out.push_str(" — ");
            out.push_str(detail);
            out.push('\n');
        }
        passed += usize::from(ok);
    }
    out.push_str(&format!("{passed}/{} checks passed\n", report.results.len()));
    out
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let cfg = SeriesConfig::new(cli.tol, cli.term_cap)?;
    match &cli.command {
        Command::Stieltjes(args) => run_stieltjes(args, &cfg, cli.tol, cli.term_cap),
        Command::SqrtTransform(args) => run_sqrt_transform(args, &cfg, cli.tol, cli.term_cap),
        Command::Fp(args) => run_fp(args, &cfg, cli.tol, cli.term_cap),
        Command::Gauss2f1(args) => run_gauss2f1(args, cli.tol, cli.term_cap),
        Command::Kummeru(args) => run_kummeru(args, cli.tol, cli.term_cap),
        Command::GaussianSqrt(args) => run_gaussian_sqrt(args, &cfg, cli.tol, cli.term_cap),
        Command::K0(args) => run_k0(args, cli.tol, cli.term_cap),
        Command::Sweep(args) => run_sweep(args, &cfg, cli.tol, cli.term_cap),
        Command::Verify => run_verify(cli.tol, cli.term_cap),
    }
}

fn diagnostics(tol: f64, term_cap: usize) -> Vec<(&'static str, Value)> {
    vec![("tol", Value::Num(tol)), ("term_cap", Value::Int(term_cap as u64))]
}

/// Relative disagreement against the oracle, floored to avoid 0/0.
fn rel_err(value: f64, oracle: f64) -> f64 {
    (value - oracle).abs() / oracle.abs().max(f64::MIN_POSITIVE)
}

/// Oracle evaluation that degrades to Null when the integrand has no
/// pointwise evaluator (user coefficient lists): the expansion still runs,
/// only the cross-check column is unavailable.
fn oracle_fields(value: f64, oracle: Result<f64, Error>) -> Result<(Value, Value), Error> {
    match oracle {
        Ok(o) => Ok((Value::Num(o), Value::Num(rel_err(value, o)))),
        Err(Error::MissingClosedForm { .. }) => Ok((Value::Null, Value::Null)),
        Err(e) => Err(e),
    }
}

fn run_stieltjes(
    args: &StieltjesArgs,
    cfg: &SeriesConfig,
    tol: f64,
    term_cap: usize,
) -> Result<Outcome, Error> {
    let f = args.function.resolve()?;
    let q = StieltjesQuery::new(args.omega, args.a.0, args.n, args.alpha)?;
    let r = eval_stieltjes(&f, &q, cfg)?;
    let (oracle, rel) = oracle_fields(r.total, oracle::stieltjes_oracle(&f, &q, tol))?;
    let naive_sum = *r.naive_partial_sums.last().expect("at least one naive term");
    Ok(Outcome {
        report: Report {
            command: "stieltjes",
            params: vec![
                ("f".into(), args.function.describe()),
                ("a".into(), args.a.describe()),
                ("n".into(), args.n.to_string()),
                ("alpha".into(), args.alpha.to_string()),
                ("omega".into(), args.omega.to_string()),
            ],
            results: vec![vec![
                ("value", Value::Num(r.total)),
                ("oracle", oracle),
                ("rel_err", rel),
                ("singular_term", Value::Num(r.singular_term)),
                ("naive_sum", Value::Num(naive_sum)),
                ("terms_used", Value::Int(r.terms_used as u64)),
                ("tail_estimate", Value::Num(r.tail_estimate)),
            ]],
            diagnostics: diagnostics(tol, term_cap),
        },
        exit: 0,
    })
}

fn run_sqrt_transform(
    args: &SqrtTransformArgs,
    cfg: &SeriesConfig,
    tol: f64,
    term_cap: usize,
) -> Result<Outcome, Error> {
    let f = args.function.resolve()?;
    let r = eval_sqrt_transform(&f, args.omega, args.a.0, cfg)?;
    let (oracle, rel) =
        oracle_fields(r.total, oracle::sqrt_transform_oracle(&f, args.omega, args.a.0, tol))?;
    let naive_sum = *r.naive_partial_sums.last().expect("at least one naive term");
    Ok(Outcome {
        report: Report {
            command: "sqrt-transform",
            params: vec![
                ("f".into(), args.function.describe()),
                ("a".into(), args.a.describe()),
                ("omega".into(), args.omega.to_string()),
            ],
            results: vec![vec![
                ("value", Value::Num(r.total)),
                ("oracle", oracle),
                ("rel_err", rel),
                ("singular_term", Value::Num(r.singular_term)),
                ("naive_sum", Value::Num(naive_sum)),
                ("terms_used", Value::Int(r.terms_used as u64)),
                ("tail_estimate", Value::Num(r.tail_estimate)),
            ]],
            diagnostics: diagnostics(tol, term_cap),
        },
        exit: 0,
    })
}

fn run_fp(
    args: &FpArgs,
    cfg: &SeriesConfig,
    tol: f64,
    term_cap: usize,
) -> Result<Outcome, Error> {
    let f = args.function.resolve()?;
    let fp = match args.form {
        FpForm::Endpoint => match args.a.0 {
            UpperLimit::Finite(c) => fp_endpoint(&f, c, args.rho, cfg)?,
            UpperLimit::Infinite => {
                return Err(Error::InvalidParameter(
                    "the endpoint form needs a finite upper limit".into(),
                ))
            }
        },
        FpForm::Origin => {
            if (args.rho - args.rho.round()).abs() < 1e-9 {
                let m = args.rho.round();
                if !(m >= 1.0 && m <= u32::MAX as f64) {
                    return Err(Error::InvalidParameter(format!(
                        "integer order must be at least 1, got {m}"
                    )));
                }
                fp_origin_integer(&f, args.a.0, m as u32, cfg)?
            } else {
                fp_origin_noninteger(&f, args.a.0, args.rho, cfg)?
            }
        }
    };
    Ok(Outcome {
        report: Report {
            command: "fp",
            params: vec![
                ("f".into(), args.function.describe()),
                ("a".into(), args.a.describe()),
                ("rho".into(), args.rho.to_string()),
                (
                    "form".into(),
                    match args.form {
                        FpForm::Origin => "origin".into(),
                        FpForm::Endpoint => "endpoint".into(),
                    },
                ),
            ],
            results: vec![vec![
                ("value", Value::Num(fp.value)),
                ("terms_used", Value::Int(fp.terms_used as u64)),
                ("tail_estimate", Value::Num(fp.tail_estimate)),
            ]],
            diagnostics: diagnostics(tol, term_cap),
        },
        exit: 0,
    })
}

fn run_gauss2f1(args: &Gauss2f1Args, tol: f64, term_cap: usize) -> Result<Outcome, Error> {
    let p = apps::Gauss2F1Params::new(args.n, args.alpha, args.r, args.s, args.zeta)?;
    let (value, terms) = apps::gauss2f1_expansion_with_terms(&p, term_cap)?;
    let (oracle, rel) = oracle_fields(value, oracle::gauss2f1_oracle(&p, tol))?;
    Ok(Outcome {
        report: Report {
            command: "gauss2f1",
            params: vec![
                ("n".into(), args.n.to_string()),
                ("alpha".into(), args.alpha.to_string()),
                ("r".into(), args.r.to_string()),
                ("s".into(), args.s.to_string()),
                ("zeta".into(), args.zeta.to_string()),
            ],
            results: vec![vec![
                ("value", Value::Num(value)),
                ("oracle", oracle),
                ("rel_err", rel),
                ("terms", Value::Int(terms as u64)),
            ]],
            diagnostics: diagnostics(tol, term_cap),
        },
        exit: 0,
    })
}

fn run_kummeru(args: &KummeruArgs, tol: f64, term_cap: usize) -> Result<Outcome, Error> {
    let p = apps::KummerParams::new(args.n, args.alpha, args.omega)?;
    let (value, terms) = apps::kummer_u_with_terms(&p, term_cap)?;
    let (oracle, rel) = oracle_fields(value, oracle::kummer_oracle(&p, tol))?;
    Ok(Outcome {
        report: Report {
            command: "kummeru",
            params: vec![
                ("n".into(), args.n.to_string()),
                ("alpha".into(), args.alpha.to_string()),
                ("omega".into(), args.omega.to_string()),
            ],
            results: vec![vec![
                ("value", Value::Num(value)),
                ("oracle", oracle),
                ("rel_err", rel),
                ("terms", Value::Int(terms as u64)),
            ]],
            diagnostics: diagnostics(tol, term_cap),
        },
        exit: 0,
    })
}

fn run_gaussian_sqrt(
    args: &GaussianSqrtArgs,
    cfg: &SeriesConfig,
    tol: f64,
    term_cap: usize,
) -> Result<Outcome, Error> {
    let f = EntireFunction::gauss_exp(args.alpha, args.beta)?;
    let r = eval_sqrt_transform(&f, args.omega, UpperLimit::Infinite, cfg)?;
    let (oracle, rel) = oracle_fields(
        r.total,
        oracle::gaussian_sqrt_oracle(args.alpha, args.beta, args.omega, tol),
    )?;
    let leading = apps::gaussian_sqrt_leading(args.alpha, args.beta, args.omega, term_cap)?;
    Ok(Outcome {
        report: Report {
            command: "gaussian-sqrt",
            params: vec![
                ("alpha".into(), args.alpha.to_string()),
                ("beta".into(), args.beta.to_string()),
                ("omega".into(), args.omega.to_string()),
            ],
            results: vec![vec![
                ("value", Value::Num(r.total)),
                ("oracle", oracle),
                ("rel_err", rel),
                ("leading", Value::Num(leading)),
                ("terms", Value::Int(r.terms_used as u64)),
            ]],
            diagnostics: diagnostics(tol, term_cap),
        },
        exit: 0,
    })
}

fn run_k0(args: &K0Args, tol: f64, term_cap: usize) -> Result<Outcome, Error> {
    let (value, terms) = apps::bessel_k0_with_terms(args.x, term_cap)?;
    let oracle = apps::bessel_k0_reference(args.x, term_cap)?;
    Ok(Outcome {
        report: Report {
            command: "k0",
            params: vec![("x".into(), args.x.to_string())],
            results: vec![vec![
                ("value", Value::Num(value)),
                ("oracle", Value::Num(oracle)),
                ("rel_err", Value::Num(rel_err(value, oracle))),
                ("terms", Value::Int(terms as u64)),
            ]],
            diagnostics: diagnostics(tol, term_cap),
        },
        exit: 0,
    })
}

/// One computed sweep row, in fixed column order.
type SweepRow = Vec<(&'static str, Value)>;

fn run_sweep(
    args: &SweepArgs,
    cfg: &SeriesConfig,
    tol: f64,
    term_cap: usize,
) -> Result<Outcome, Error> {
    if args.cmd != "stieltjes" {
        return Err(Error::InvalidParameter(format!(
            "sweep supports --cmd stieltjes (its column contract names the \
             decomposition pieces); got `{}`",
            args.cmd
        )));
    }
    let f = args.function.resolve()?;
    if f.eval(0.0).is_none() {
        return Err(Error::InvalidParameter(
            "sweep needs an integrand with a pointwise evaluator for the oracle \
             column; use a built-in registry function"
                .into(),
        ));
    }
    let omegas = parse_log_grid(&args.omega_grid)?;

    // The dominance prediction shares (coefficient, power) across rows.
    let q0 = StieltjesQuery::new(omegas[0], args.a.0, args.n, args.alpha)?;
    let (dom_coeff, dom_power, _) = dominant_term(&f, &q0, cfg)?;

    let count = omegas.len();
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(count);
    let mut slots: Vec<Option<Result<SweepRow, Error>>> = Vec::new();
    slots.resize_with(count, || None);
    thread::scope(|scope| {
        let (tx, rx) = mpsc::channel();
        for w in 0..workers {
            let tx = tx.clone();
            let f = f.clone();
            let omegas = &omegas;
            scope.spawn(move || {
                let mut i = w;
                while i < count {
                    let row = sweep_row(
                        &f,
                        omegas[i],
                        args.a.0,
                        args.n,
                        args.alpha,
                        cfg,
                        tol,
                        dom_coeff,
                        dom_power,
                    );
                    if tx.send((i, row)).is_err() {
                        return;
                    }
                    i += workers;
                }
            });
        }
        drop(tx);
        for (i, row) in rx {
            slots[i] = Some(row);
        }
    });

    // Output is ordered by grid index; the first failing row (by index)
    // aborts the sweep with its own error.
    let mut results = Vec::with_capacity(count);
    for slot in slots {
        results.push(slot.expect("every index was computed")?);
    }
    Ok(Outcome {
        report: Report {
            command: "sweep",
            params: vec![
                ("cmd".into(), args.cmd.clone()),
                ("f".into(), args.function.describe()),
                ("a".into(), args.a.describe()),
                ("n".into(), args.n.to_string()),
                ("alpha".into(), args.alpha.to_string()),
                ("omega_grid".into(), args.omega_grid.clone()),
            ],
            results,
            diagnostics: diagnostics(tol, term_cap),
        },
        exit: 0,
    })
}

#[allow(clippy::too_many_arguments)]
fn sweep_row(
    f: &EntireFunction,
    omega: f64,
    a: UpperLimit,
    n: u32,
    alpha: f64,
    cfg: &SeriesConfig,
    tol: f64,
    dom_coeff: f64,
    dom_power: f64,
) -> Result<SweepRow, Error> {
    let q = StieltjesQuery::new(omega, a, n, alpha)?;
    let r = eval_stieltjes(f, &q, cfg)?;
    let o = oracle::stieltjes_oracle(f, &q, tol)?;
    let naive_sum = *r.naive_partial_sums.last().expect("at least one naive term");
    Ok(vec![
        ("omega", Value::Num(omega)),
        ("expansion", Value::Num(r.total)),
        ("oracle", Value::Num(o)),
        ("rel_err", Value::Num(rel_err(r.total, o))),
        ("singular_term", Value::Num(r.singular_term)),
        ("naive_sum", Value::Num(naive_sum)),
        ("terms_used", Value::Int(r.terms_used as u64)),
        ("dominant_pred", Value::Num(dom_coeff * omega.powf(dom_power))),
    ])
}

/// Parse `lo:hi:count` into an inclusive log-spaced grid.
fn parse_log_grid(spec: &str) -> Result<Vec<f64>, Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, count] = parts.as_slice() else {
        return Err(Error::InvalidParameter(format!(
            "grid must be `lo:hi:count`, got `{spec}`"
        )));
    };
    let lo: f64 = lo
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad grid start `{lo}`")))?;
    let hi: f64 = hi
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad grid end `{hi}`")))?;
    let count: usize = count
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad grid count `{count}`")))?;
    if !(lo.is_finite() && lo > 0.0 && hi.is_finite() && hi >= lo) {
        return Err(Error::InvalidParameter(format!(
            "grid needs 0 < lo ≤ hi, got {lo}:{hi}"
        )));
    }
    if count == 0 {
        return Err(Error::InvalidParameter("grid count must be at least 1".into()));
    }
    if count == 1 {
        return Ok(vec![lo]);
    }
    let (ln_lo, ln_hi) = (lo.ln(), hi.ln());
    Ok((0..count)
        .map(|i| (ln_lo + (ln_hi - ln_lo) * i as f64 / (count - 1) as f64).exp())
        .collect())
}

fn run_verify(tol: f64, term_cap: usize) -> Result<Outcome, Error> {
    let checks = verify::run_all();
    let failed = checks.iter().filter(|c| !c.passed).count();
    let results = checks
        .into_iter()
        .map(|c| {
            vec![
                ("name", Value::Str(c.name.to_string())),
                ("passed", Value::Bool(c.passed)),
                ("detail", Value::Str(c.detail)),
            ]
        })
        .collect();
    Ok(Outcome {
        report: Report {
            command: "verify",
            params: vec![],
            results,
            diagnostics: diagnostics(tol, term_cap),
        },
        exit: if failed > 0 { 4 } else { 0 },
    })
}

//! `appell`: evaluate F2 and F1, Laplace integrals of confluent products and
//! the matrix elements built on them; verify the identities against the
//! quadrature oracle.

mod output;

use std::collections::BTreeMap;
use std::process::ExitCode;

use appell_core::appell::{f1_series, f2_eval, F1Params, F2Params};
use appell_core::laplace::{
    appendix_entry, appendix_identity, landau_lifshitz_j, landau_lifshitz_j_check, laplace_product,
    laplace_product_check, JMethod, JspParams, LaplaceProductSpec,
};
use appell_core::oracle::f2_bruteforce;
use appell_core::physics::{build_perturbation_matrix, Basis, KratzerBasis, OscillatorBasis};
use appell_core::verify::{run_suite, Suite, DEFAULT_SEED};
use appell_core::{Error, Evaluation, Method, DEFAULT_TOL};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use output::{Check, Format};

/// Relative residual within which a `--check` against quadrature passes.
const CHECK_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "appell", version, about = "Appell F2 series, Laplace integrals of confluent products, and matrix elements")]
struct Cli {
    /// Target relative tolerance for series and quadrature, in (0, 1e-2].
    #[arg(long, global = true, env = "APPELL_TOL", default_value_t = DEFAULT_TOL, value_parser = parse_tol)]
    tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Seed for randomized verification grids and sampled points.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v <= 1e-2 {
        Ok(v)
    } else {
        Err(format!("tolerance must lie in (0, 1e-2], got {v}"))
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// F2(d; a, a'; b, b'; x, y).
    F2(F2Args),
    /// F1(a; b, b'; c; x, y) inside |x|, |y| < 1.
    F1(F1Args),
    /// Laplace integrals of one or two confluent factors, or Landau-Lifshitz J.
    #[command(subcommand)]
    Integral(IntegralCommand),
    /// Evaluate one tabulated Laplace transform and check it by quadrature;
    /// without an id, list the table.
    Appendix(AppendixArgs),
    /// Run a seeded verification suite.
    Verify(VerifyArgs),
    /// Perturbation matrix block in an exactly solvable basis.
    #[command(subcommand)]
    Matrix(MatrixCommand),
}

#[derive(Debug, Args, Serialize)]
struct F2Args {
    #[arg(long, allow_hyphen_values = true)]
    d: f64,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    ap: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long, allow_hyphen_values = true)]
    bp: f64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, allow_hyphen_values = true)]
    y: f64,
    /// Sum the double series directly instead of dispatching.
    #[arg(long)]
    brute_force: bool,
    /// Target digits for the direct sum.
    #[arg(long, default_value_t = 14, requires = "brute_force")]
    digits: u32,
}

#[derive(Debug, Args, Serialize)]
struct F1Args {
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long, allow_hyphen_values = true)]
    bp: f64,
    #[arg(long, allow_hyphen_values = true)]
    c: f64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, allow_hyphen_values = true)]
    y: f64,
}

#[derive(Debug, Subcommand)]
enum IntegralCommand {
    /// int t^{d-1} e^{-ht} 1F1(a; b; kt) 1F1(a'; b'; k't) dt; omit the primed
    /// parameters for a single factor.
    Product(ProductArgs),
    /// int t^{g-1+s} e^{-ht} 1F1(a; g; kt) 1F1(a'; g-p; k't) dt.
    J(JArgs),
}

#[derive(Debug, Args, Serialize)]
struct ProductArgs {
    #[arg(long, allow_hyphen_values = true)]
    d: f64,
    #[arg(long, allow_hyphen_values = true)]
    h: f64,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    b: f64,
    #[arg(long, allow_hyphen_values = true)]
    k: f64,
    #[arg(long, allow_hyphen_values = true, requires_all = ["bp", "kp"])]
    ap: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["ap", "kp"])]
    bp: Option<f64>,
    #[arg(long, allow_hyphen_values = true, requires_all = ["ap", "bp"])]
    kp: Option<f64>,
    /// Compare against quadrature of the integrand.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
enum JMethodArg {
    Auto,
    Gordon,
    Continuation,
}

#[derive(Debug, Args, Serialize)]
struct JArgs {
    #[arg(long, allow_hyphen_values = true)]
    gamma: f64,
    #[arg(long, default_value_t = 0)]
    s: u32,
    #[arg(long, default_value_t = 0)]
    p: u32,
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    #[arg(long, allow_hyphen_values = true)]
    ap: f64,
    #[arg(long, allow_hyphen_values = true)]
    k: f64,
    #[arg(long, allow_hyphen_values = true)]
    kp: f64,
    #[arg(long, allow_hyphen_values = true)]
    h: f64,
    #[arg(long, value_enum, default_value_t = JMethodArg::Auto)]
    method: JMethodArg,
    #[arg(long)]
    check: bool,
}

#[derive(Debug, Args, Serialize)]
struct AppendixArgs {
    /// Table id, e.g. I.18.
    id: Option<String>,
    /// Parameters as name=value; a seeded in-domain point is drawn when omitted.
    #[arg(value_parser = parse_assignment)]
    params: Vec<(String, f64)>,
    /// Which sampled point to draw when no parameters are given.
    #[arg(long, default_value_t = 0)]
    point: usize,
}

fn parse_assignment(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected name=value, got `{s}`"))?;
    let value: f64 = value.parse().map_err(|e| format!("{name}: {e}"))?;
    Ok((name.trim().to_string(), value))
}

#[derive(Debug, Args, Serialize)]
struct VerifyArgs {
    /// appendix, recurrences, continuations, products, laplace, gordon,
    /// finite_sum, physics or all.
    #[arg(value_parser = parse_suite)]
    suite: Suite,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
enum MatrixCommand {
    /// <psi_n| x^{-alpha} |psi_m> in the spiked-oscillator basis.
    Spiked(SpikedArgs),
    /// <psi_n| r^alpha |psi_m> in the Kratzer basis.
    Kratzer(KratzerArgs),
}

#[derive(Debug, Args, Serialize)]
struct Variational {
    /// Also diagonalise diag(E_n) + lambda * block.
    #[arg(long, requires = "lambda")]
    variational: bool,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    /// Also print the unperturbed energies E_n.
    #[arg(long)]
    h0: bool,
}

#[derive(Debug, Args, Serialize)]
struct SpikedArgs {
    #[arg(long, allow_hyphen_values = true, conflicts_with = "coupling", required_unless_present = "coupling")]
    gamma: Option<f64>,
    #[arg(long = "A", allow_hyphen_values = true)]
    #[serde(rename = "A")]
    coupling: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    /// Block size.
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    variational: Variational,
}

#[derive(Debug, Args, Serialize)]
struct KratzerArgs {
    #[arg(long = "A", allow_hyphen_values = true)]
    #[serde(rename = "A")]
    coupling: f64,
    #[arg(long = "B", allow_hyphen_values = true)]
    #[serde(rename = "B")]
    strength: f64,
    #[arg(long)]
    l: u32,
    #[arg(long, allow_hyphen_values = true)]
    alpha: f64,
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    #[serde(flatten)]
    variational: Variational,
}

/// How a command ended, mapped onto the exit status.
enum Outcome {
    Pass,
    NumericFailure,
    InputError,
}

impl From<Outcome> for ExitCode {
    fn from(o: Outcome) -> Self {
        match o {
            Outcome::Pass => ExitCode::SUCCESS,
            Outcome::NumericFailure => ExitCode::from(1),
            Outcome::InputError => ExitCode::from(2),
        }
    }
}

struct Ctx {
    tol: f64,
    format: Format,
    seed: u64,
}

impl Ctx {
    /// Render a core error and classify it.
    fn fail(&self, command: &str, inputs: &impl Serialize, e: &Error) -> Outcome {
        let _ = output::error(self.format, command, inputs, &e.to_string());
        if e.is_input_error() {
            Outcome::InputError
        } else {
            Outcome::NumericFailure
        }
    }

    fn io(&self, r: std::io::Result<()>) -> Outcome {
        match r {
            Ok(()) => Outcome::Pass,
            Err(e) => {
                eprintln!("error: {e}");
                Outcome::NumericFailure
            }
        }
    }

    fn render(&self, command: &str, inputs: &impl Serialize, ev: &Evaluation, check: Option<Check>) -> Outcome {
        let r = output::evaluation(self.format, command, inputs, ev, check.as_ref());
        match (self.io(r), check) {
            (Outcome::Pass, Some(c)) if !c.passed => Outcome::NumericFailure,
            (o, _) => o,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { tol: cli.tol, format: cli.format, seed: cli.seed };
    match cli.command {
        Command::F2(args) => cmd_f2(&ctx, &args),
        Command::F1(args) => cmd_f1(&ctx, &args),
        Command::Integral(IntegralCommand::Product(args)) => cmd_product(&ctx, &args),
        Command::Integral(IntegralCommand::J(args)) => cmd_j(&ctx, &args),
        Command::Appendix(args) => cmd_appendix(&ctx, &args),
        Command::Verify(args) => cmd_verify(&ctx, &args),
        Command::Matrix(MatrixCommand::Spiked(args)) => cmd_spiked(&ctx, &args),
        Command::Matrix(MatrixCommand::Kratzer(args)) => cmd_kratzer(&ctx, &args),
    }
    .into()
}

fn cmd_f2(ctx: &Ctx, args: &F2Args) -> Outcome {
    let p = F2Params::new(args.d, args.a, args.ap, args.b, args.bp, args.x, args.y);
    let ev = if args.brute_force {
        f2_bruteforce(&p, args.digits).map(|v| Evaluation::new(v, v.abs() * 10f64.powi(-(args.digits as i32)), 0, Method::Series))
    } else {
        f2_eval(&p, ctx.tol)
    };
    match ev {
        Ok(ev) => ctx.render("f2", args, &ev, None),
        Err(e) => ctx.fail("f2", args, &e),
    }
}

fn cmd_f1(ctx: &Ctx, args: &F1Args) -> Outcome {
    let p = F1Params::new(args.a, args.b, args.bp, args.c, args.x, args.y);
    match f1_series(&p, ctx.tol) {
        Ok(ev) => ctx.render("f1", args, &ev, None),
        Err(e) => ctx.fail("f1", args, &e),
    }
}

fn cmd_product(ctx: &Ctx, args: &ProductArgs) -> Outcome {
    let spec = match (args.ap, args.bp, args.kp) {
        (Some(ap), Some(bp), Some(kp)) => LaplaceProductSpec::new(args.d, args.h, args.a, args.b, args.k, ap, bp, kp),
        _ => LaplaceProductSpec::single(args.d, args.h, args.a, args.b, args.k),
    };
    let ev = match laplace_product(&spec, ctx.tol) {
        Ok(ev) => ev,
        Err(e) => return ctx.fail("integral", args, &e),
    };
    let check = if args.check {
        match laplace_product_check(&spec, ctx.tol) {
            Ok(r) => Some(Check::new(ev.value, r.lhs, CHECK_TOL)),
            Err(e) => return ctx.fail("integral", args, &e),
        }
    } else {
        None
    };
    ctx.render("integral", args, &ev, check)
}

fn cmd_j(ctx: &Ctx, args: &JArgs) -> Outcome {
    let p = JspParams::new(args.gamma, args.s, args.p, args.a, args.ap, args.k, args.kp, args.h);
    let method = match args.method {
        JMethodArg::Auto => JMethod::Auto,
        JMethodArg::Gordon => JMethod::Gordon,
        JMethodArg::Continuation => JMethod::Continuation,
    };
    let ev = match landau_lifshitz_j(&p, method, ctx.tol) {
        Ok(ev) => ev,
        Err(e) => return ctx.fail("integral", args, &e),
    };
    let check = if args.check {
        match landau_lifshitz_j_check(&p, method, ctx.tol) {
            Ok(r) => Some(Check::new(ev.value, r.lhs, CHECK_TOL)),
            Err(e) => return ctx.fail("integral", args, &e),
        }
    } else {
        None
    };
    ctx.render("integral", args, &ev, check)
}

fn cmd_appendix(ctx: &Ctx, args: &AppendixArgs) -> Outcome {
    let Some(id) = &args.id else {
        return ctx.io(output::appendix_list(ctx.format));
    };
    let entry = match appendix_entry(id) {
        Ok(e) => e,
        Err(e) => return ctx.fail("appendix", args, &e),
    };
    let params: BTreeMap<String, f64> = if args.params.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
        let values = entry.sample(&mut rng, args.point);
        entry.params.iter().map(|n| n.to_string()).zip(values).collect()
    } else {
        args.params.iter().cloned().collect()
    };
    let inputs = serde_json::json!({ "id": entry.id, "params": params });
    match appendix_identity(entry.id, &params, ctx.tol) {
        Ok(r) => {
            let ev = Evaluation::new(r.rhs, 0.0, 1, r.rhs_method);
            let check = Check::new(r.rhs, r.lhs, CHECK_TOL);
            ctx.render("appendix", &inputs, &Evaluation { abs_error: (r.rhs * 4.0 * f64::EPSILON).abs(), ..ev }, Some(check))
        }
        Err(e) => ctx.fail("appendix", &inputs, &e),
    }
}

fn cmd_verify(ctx: &Ctx, args: &VerifyArgs) -> Outcome {
    match run_suite(args.suite, ctx.seed, ctx.tol) {
        Ok(report) => match ctx.io(output::verify(ctx.format, &report)) {
            Outcome::Pass if !report.passed() => Outcome::NumericFailure,
            o => o,
        },
        Err(e) => ctx.fail("verify", args, &e),
    }
}

fn cmd_matrix(ctx: &Ctx, inputs: &impl Serialize, basis: Basis, alpha: f64, n: usize, v: &Variational) -> Outcome {
    let block = match build_perturbation_matrix(basis, alpha, n) {
        Ok(b) => b,
        Err(e) => return ctx.fail("matrix", inputs, &e),
    };
    let energies: Option<Vec<f64>> = v.h0.then(|| (0..n).map(|k| basis.energy(k)).collect());
    let eigenvalues = match (v.variational, v.lambda) {
        (true, Some(lambda)) => Some(block.variational_eigenvalues(lambda)),
        _ => None,
    };
    ctx.io(output::matrix(ctx.format, inputs, &block, energies.as_deref(), eigenvalues.as_deref()))
}

fn cmd_spiked(ctx: &Ctx, args: &SpikedArgs) -> Outcome {
    let basis = match (args.gamma, args.coupling) {
        (Some(g), _) => OscillatorBasis::from_gamma(g),
        (None, Some(a)) => OscillatorBasis::from_coupling(a),
        (None, None) => Err(Error::Parameter("needs --gamma or --A".into())),
    };
    match basis {
        Ok(b) => cmd_matrix(ctx, args, Basis::Spiked(b), args.alpha, args.n, &args.variational),
        Err(e) => ctx.fail("matrix", args, &e),
    }
}

fn cmd_kratzer(ctx: &Ctx, args: &KratzerArgs) -> Outcome {
    match KratzerBasis::new(args.coupling, args.strength, args.l) {
        Ok(b) => cmd_matrix(ctx, args, Basis::Kratzer(b), args.alpha, args.n, &args.variational),
        Err(e) => ctx.fail("matrix", args, &e),
    }
}

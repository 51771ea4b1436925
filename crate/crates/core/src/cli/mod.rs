//! The `qcontig` command line.
//!
//! Exit codes: 0 on success, 1 on a pole or a failed verification, 2 on a
//! usage or parameter error. Rationals are written `p/q`; floats are decimal
//! strings at the working precision.

pub mod bench;

pub use bench::{bench, BenchInput, BenchReport, Timing};

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::contiguous::{
    coeff_st, coeff_st_tilde, coeff_uv, CoeffPair, Flavor, ShiftPair, ShiftTriple,
};
use crate::error::Error;
use crate::numerics::{
    is_q_power, parse_rational, refine, BigFloat, LaurentPoly, NumError, Precision, RatFn,
    Rational, Scalar,
};
use crate::qbessel::{
    j2_recurrence_terms, j3_recurrence_terms, jackson_j, r2, r3, BesselParams, LommelCoeff,
};
use crate::qcore::{phi_eval, q_pochhammer, PhiOpts, PhiSpec};
use crate::verify::{run_sweep, IdentityId, Mode, SweepConfig};

#[derive(Parser, Debug)]
#[command(
    name = "qcontig",
    version,
    about = "Basic hypergeometric series and their three-term recurrences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sum r phi s (a_1..a_r; b_1..b_s; q, x).
    Eval(EvalArgs),
    /// Recurrence coefficients at a shift.
    Coeff(CoeffArgs),
    /// Jackson q-Bessel function values.
    Bessel(BesselArgs),
    /// Coefficient table of R2 or R3 in y = x/2.
    Lommel(LommelArgs),
    /// Randomized identity sweep.
    Verify(VerifyArgs),
    /// Direct summation against the recurrence route.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum NumMode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VerifyMode {
    Exact,
    Float,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    St,
    St2,
    Uv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct EvalArgs {
    #[arg(long, num_args = 2, value_names = ["R", "S"], required = true)]
    phi: Vec<usize>,
    /// Upper parameters, space or comma separated.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    upper: Vec<String>,
    /// Lower parameters, space or comma separated.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    lower: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, value_enum, default_value_t = NumMode::Float)]
    mode: NumMode,
    #[arg(long, default_value_t = 128)]
    prec: u32,
    /// Maximum number of terms of a non-terminating sum.
    #[arg(long, default_value_t = 100_000)]
    terms: usize,
}

#[derive(Args, Debug)]
struct CoeffArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    k: i64,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    #[arg(long, value_enum, default_value_t = NumMode::Exact)]
    mode: NumMode,
    #[arg(long, default_value_t = 128)]
    prec: u32,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("order").required(true).args(["nu", "t"]))]
struct BesselArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    kind: u8,
    /// Real order nu.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "t")]
    nu: Option<String>,
    /// `t = q^nu` as a rational.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: String,
    #[arg(long)]
    q: String,
    /// With `--n`, also report the normalized recurrence residual at `(m, n)`.
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "m")]
    n: Option<i64>,
    #[arg(long, default_value_t = 128)]
    prec: u32,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("order").required(true).args(["nu", "t"]))]
struct LommelArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
    kind: u8,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    n: i64,
    /// `t = q^nu`, exact.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "nu")]
    t: Option<String>,
    /// Real order nu; coefficients are then floats.
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    #[arg(long)]
    q: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, default_value_t = 128)]
    prec: u32,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// `all` or one identity id.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 4)]
    max_shift: i64,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = VerifyMode::Both)]
    mode: VerifyMode,
    #[arg(long, default_value_t = 32)]
    order: usize,
    #[arg(long, default_value_t = 128)]
    prec: u32,
    /// Condition factor applied to float tolerances.
    #[arg(long, default_value_t = 1e3)]
    cond: f64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Restrict to one shift tuple, e.g. `--only-shift=1,-2,0`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    only_shift: Option<Vec<i64>>,
    #[arg(long)]
    only_trial: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    k: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    m: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    n: i64,
    #[arg(long, allow_hyphen_values = true, default_value = "1/3")]
    a: String,
    #[arg(long, allow_hyphen_values = true, default_value = "1/5")]
    c: String,
    #[arg(long, allow_hyphen_values = true, default_value = "2/7")]
    x: String,
    #[arg(long, default_value = "1/2")]
    q: String,
    #[arg(long, default_value_t = 5)]
    repeat: usize,
    #[arg(long, default_value_t = 128)]
    prec: u32,
}

/// Why a subcommand stopped: exit 1 for `Failure`, 2 for `Usage`.
#[derive(Debug)]
enum Stop {
    Usage(String),
    Failure(String),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        if e.is_pole() || matches!(e, Error::MaxTerms(_)) {
            Stop::Failure(e.to_string())
        } else {
            Stop::Usage(e.to_string())
        }
    }
}

impl From<NumError> for Stop {
    fn from(e: NumError) -> Self {
        Error::from(e).into()
    }
}

type Outcome = std::result::Result<String, Stop>;

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    let (result, code_ok) = match cli.command {
        Command::Eval(a) => (cmd_eval(&a), 0),
        Command::Coeff(a) => (cmd_coeff(&a), 0),
        Command::Bessel(a) => (cmd_bessel(&a), 0),
        Command::Lommel(a) => (cmd_lommel(&a), 0),
        Command::Verify(a) => match cmd_verify(&a) {
            Ok((text, ok)) => (Ok(text), if ok { 0 } else { 1 }),
            Err(e) => (Err(e), 0),
        },
        Command::Bench(a) => match cmd_bench(&a) {
            Ok((text, ok)) => (Ok(text), if ok { 0 } else { 1 }),
            Err(e) => (Err(e), 0),
        },
    };
    match result {
        Ok(text) => {
            let _ = writeln!(out, "{text}");
            code_ok
        }
        Err(Stop::Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Stop::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// A scalar that can be read from and written to the command line.
trait CliScalar: Scalar {
    fn parse(ctx: Self::Ctx, s: &str) -> Result<Self, NumError>;

    /// Malformed literals are usage errors, `p/0` included.
    fn read(ctx: Self::Ctx, s: &str) -> Result<Self, Stop> {
        Self::parse(ctx, s).map_err(|e| Stop::Usage(format!("{s:?}: {e}")))
    }

    fn render(&self) -> String;
}

impl CliScalar for Rational {
    fn parse(_: (), s: &str) -> Result<Self, NumError> {
        parse_rational(s)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl CliScalar for BigFloat {
    fn parse(ctx: Precision, s: &str) -> Result<Self, NumError> {
        BigFloat::parse(ctx, s)
    }

    fn render(&self) -> String {
        self.to_decimal()
    }
}

fn read_all<S: CliScalar>(ctx: S::Ctx, xs: &[String]) -> Result<Vec<S>, Stop> {
    xs.iter().map(|s| S::read(ctx, s)).collect()
}

fn precision(p: u32) -> Result<Precision, Stop> {
    if !(16..=1 << 16).contains(&p) {
        return Err(Stop::Usage(format!(
            "precision {p} out of range 16..=65536"
        )));
    }
    Ok(Precision(p))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn cmd_eval(a: &EvalArgs) -> Outcome {
    let (r, s) = (a.phi[0], a.phi[1]);
    if a.upper.len() != r || a.lower.len() != s {
        return Err(Stop::Usage(format!(
            "--phi {r} {s} needs {r} upper and {s} lower parameters, got {} and {}",
            a.upper.len(),
            a.lower.len()
        )));
    }
    // Termination and the Chu-Vandermonde shape are read off exact inputs in either mode.
    let exact_q = Rational::read((), &a.q).ok();
    let exact_upper = read_all::<Rational>((), &a.upper).ok();
    let terminating = match (&exact_q, &exact_upper) {
        (Some(q), Some(up)) if q.clone().abs() < 1 && *q != 0 => up
            .iter()
            .filter_map(|u| is_q_power(u, q))
            .filter(|&i| i <= 0)
            .map(|i| (-i) as u64)
            .min(),
        _ => None,
    };
    let chu = match (&exact_q, &exact_upper, Rational::read((), &a.x).ok()) {
        (Some(q), Some(up), Some(x)) if r == 2 && s == 1 && x == *q => terminating.and_then(|j| {
            let idx = up
                .iter()
                .position(|u| is_q_power(u, q) == Some(-(j as i64)))?;
            Some((j, 1 - idx))
        }),
        _ => None,
    };
    match a.mode {
        NumMode::Exact => {
            let o = eval_values::<Rational>(a, (), terminating, chu)?;
            Ok(eval_json(o, "exact", None))
        }
        NumMode::Float => {
            let p = precision(a.prec)?;
            let mut last = None;
            let v = refine(p, |pp| {
                let o = eval_values::<BigFloat>(a, pp, terminating, chu)?;
                let mut out = vec![o.value.clone()];
                out.extend(o.closed.clone());
                last = Some(o);
                Ok::<_, Stop>(out)
            })?;
            let o = last.expect("refine evaluates at least once");
            let o = EvalOut {
                value: v[0].clone(),
                terms: o.terms,
                tail: o.tail.with_precision(p),
                closed: v.get(1).cloned(),
            };
            Ok(eval_json(o, "float", Some(a.prec)))
        }
    }
}

struct EvalOut<S> {
    value: S,
    terms: usize,
    tail: S,
    closed: Option<S>,
}

fn eval_json<S: CliScalar>(o: EvalOut<S>, mode: &str, prec: Option<u32>) -> String {
    let mut v = json!({
        "value": o.value.render(),
        "mode": mode,
        "terms": o.terms,
        "tail_bound": o.tail.render(),
    });
    if let Some(p) = prec {
        v["precision"] = json!(p);
    }
    if let Some(c) = o.closed {
        v["closed_form"] = json!({ "name": "q-Chu-Vandermonde", "value": c.render() });
    }
    pretty(&v)
}

fn eval_values<S: CliScalar>(
    a: &EvalArgs,
    ctx: S::Ctx,
    terminating: Option<u64>,
    chu: Option<(u64, usize)>,
) -> Result<EvalOut<S>, Stop> {
    let upper = read_all::<S>(ctx, &a.upper)?;
    let lower = read_all::<S>(ctx, &a.lower)?;
    let q = S::read(ctx, &a.q)?;
    let x = S::read(ctx, &a.x)?;
    let mut spec = PhiSpec::new(upper.clone(), lower.clone(), q.clone(), x);
    spec.terminating = terminating;
    let opts = PhiOpts {
        max_terms: a.terms,
        tolerance: None,
    };
    let sum = phi_eval(&spec, &opts)?;
    let closed = match chu {
        Some((j, other)) => {
            // 2phi1(q^{-j}, b; c; q, q) = (c/b;q)_j b^j / (c;q)_j
            let (b, c) = (&upper[other], &lower[0]);
            let cb = c.clone().checked_div(b)?;
            let num = q_pochhammer(&cb, &q, j as i64)? * &b.powi(j as i64)?;
            Some(num.checked_div(&q_pochhammer(c, &q, j as i64)?)?)
        }
        None => None,
    };
    Ok(EvalOut {
        value: sum.value,
        terms: sum.terms,
        tail: sum.tail_bound,
        closed,
    })
}

fn pair_json<S: CliScalar>(pair: &CoeffPair<S>) -> Value {
    let (f, s) = match pair.flavor {
        Flavor::St => ("S", "T"),
        Flavor::StTilde => ("S_tilde", "T_tilde"),
        Flavor::Uv => ("U", "V"),
    };
    json!({ f: pair.first.render(), s: pair.second.render() })
}

fn cmd_coeff(a: &CoeffArgs) -> Outcome {
    let pair = match a.mode {
        NumMode::Exact => pair_json(&coeff_values::<Rational>(a, ())?),
        NumMode::Float => {
            let p = precision(a.prec)?;
            let mut flavor = Flavor::St;
            let v = refine(p, |pp| {
                let c = coeff_values::<BigFloat>(a, pp)?;
                flavor = c.flavor;
                Ok::<_, Stop>(vec![c.first, c.second])
            })?;
            pair_json(&CoeffPair {
                first: v[0].clone(),
                second: v[1].clone(),
                flavor,
            })
        }
    };
    let mut v = pair;
    v["shift"] = match a.family {
        Family::Uv => json!([a.m, a.n]),
        _ => json!([a.k, a.m, a.n]),
    };
    Ok(pretty(&v))
}

fn coeff_values<S: CliScalar>(a: &CoeffArgs, ctx: S::Ctx) -> Result<CoeffPair<S>, Stop> {
    let c = S::read(ctx, &a.c)?;
    let x = S::read(ctx, &a.x)?;
    let q = S::read(ctx, &a.q)?;
    let need_a = || -> Result<S, Stop> {
        let s =
            a.a.as_deref()
                .ok_or_else(|| Stop::Usage("--a is required for this family".into()))?;
        S::read(ctx, s)
    };
    let triple = ShiftTriple::new(a.k, a.m, a.n);
    Ok(match a.family {
        Family::St => coeff_st(triple, &need_a()?, &c, &x, &q)?,
        Family::St2 => coeff_st_tilde(triple, &need_a()?, &c, &x, &q)?,
        Family::Uv => coeff_uv(ShiftPair::new(a.m, a.n), &c, &x, &q)?,
    })
}

/// `nu`, `x`, `q` at precision `p`, with `nu = ln t / ln q` under `--t`.
fn bessel_inputs(a: &BesselArgs, p: Precision) -> Result<(BigFloat, BigFloat, BigFloat), Stop> {
    let q = BigFloat::read(p, &a.q)?;
    let x = BigFloat::read(p, &a.x)?;
    let nu = match (&a.nu, &a.t) {
        (Some(nu), None) => BigFloat::read(p, nu)?,
        (None, Some(t)) => {
            let t = BigFloat::read(p, t)?;
            if t.to_f64() <= 0.0 || q.to_f64() <= 0.0 || q.to_f64() >= 1.0 {
                return Err(Stop::Usage("--t needs t > 0 and 0 < q < 1".into()));
            }
            t.ln() / &q.ln()
        }
        _ => {
            return Err(Stop::Usage(
                "exactly one of --nu and --t is required".into(),
            ))
        }
    };
    Ok((nu, x, q))
}

fn cmd_bessel(a: &BesselArgs) -> Outcome {
    let p = precision(a.prec)?;
    if a.m.is_some() && a.kind == 1 {
        return Err(Stop::Usage(
            "recurrence residuals exist for kinds 2 and 3".into(),
        ));
    }
    let v = refine(p, |pp| {
        let (nu, x, q) = bessel_inputs(a, pp)?;
        let params = BesselParams {
            kind: a.kind,
            nu: nu.clone(),
            x: x.clone(),
            q: q.clone(),
        };
        let mut out = vec![jackson_j(&params, &PhiOpts::default())?];
        if let (Some(m), Some(n)) = (a.m, a.n) {
            let t = q.powf(&nu)?;
            let opts = PhiOpts::default();
            let terms = match a.kind {
                2 => j2_recurrence_terms(m, n, &t, &x, &q, &opts)?,
                _ => j3_recurrence_terms(m, n, &t, &x, &q, &opts)?,
            };
            out.extend(terms);
        }
        Ok::<_, Stop>(out)
    })?;
    let (nu, x, q) = bessel_inputs(a, p)?;
    let mut out = json!({
        "kind": a.kind,
        "nu": nu.render(),
        "x": x.render(),
        "q": q.render(),
        "value": v[0].render(),
        "precision": a.prec,
    });
    if let (Some(m), Some(n)) = (a.m, a.n) {
        let terms = &v[1..];
        let mut scale = BigFloat::from_i64(p, 1);
        for t in terms {
            if t.abs() > scale {
                scale = t.abs();
            }
        }
        let sum = terms[0].clone() + &terms[1] + &terms[2];
        out["recurrence"] = json!({
            "m": m,
            "n": n,
            "terms": terms.iter().map(|t| t.render()).collect::<Vec<_>>(),
            "relative_residual": (sum.abs() / &scale).render(),
        });
    }
    Ok(pretty(&out))
}

fn lommel_table<S: CliScalar>(c: &LommelCoeff<S>, format: Format) -> String {
    let rows: Vec<(i64, String)> = c
        .value
        .numer
        .terms()
        .map(|(e, v)| (*e, v.render()))
        .collect();
    let denom = (!c.value.denom.is_empty()).then(|| format!("(-y^2;q)_{}", c.value.denom.len()));
    match format {
        Format::Csv => {
            let mut out = String::from("exponent,coefficient");
            for (e, v) in rows {
                out.push_str(&format!("\n{e},{v}"));
            }
            out
        }
        Format::Json => pretty(&json!({
            "kind": c.kind,
            "m": c.m,
            "n": c.n,
            "rows": rows
                .iter()
                .map(|(e, v)| json!({ "exponent": e, "coefficient": v }))
                .collect::<Vec<_>>(),
            "denominator": denom,
        })),
        Format::Text => {
            let mut out = format!("R{}_{{{},{}}} in y = x/2", c.kind, c.m, c.n);
            if let Some(d) = denom {
                out.push_str(&format!(", numerator over {d}"));
            }
            for (e, v) in rows {
                out.push_str(&format!("\n  y^{e}: {v}"));
            }
            out
        }
    }
}

fn lommel_coeff<S: CliScalar>(a: &LommelArgs, t: &S, q: &S) -> Result<LommelCoeff<S>, Stop> {
    Ok(match a.kind {
        2 => r2(a.m, a.n, t, q)?,
        _ => r3(a.m, a.n, t, q)?,
    })
}

fn cmd_lommel(a: &LommelArgs) -> Outcome {
    match (&a.t, &a.nu) {
        (Some(t), None) => {
            let q = Rational::read((), &a.q)?;
            let c = lommel_coeff(a, &Rational::read((), t)?, &q)?;
            Ok(lommel_table(&c, a.format))
        }
        (None, Some(nu)) => {
            let p = precision(a.prec)?;
            let mut last = None;
            let v = refine(p, |pp| {
                let q = BigFloat::read(pp, &a.q)?;
                let t = q.powf(&BigFloat::read(pp, nu)?)?;
                let c = lommel_coeff(a, &t, &q)?;
                let coeffs = c.value.numer.terms().map(|(_, v)| v.clone()).collect();
                last = Some(c);
                Ok::<_, Stop>(coeffs)
            })?;
            let c = last.expect("refine evaluates at least once");
            let exps: Vec<i64> = c.value.numer.terms().map(|(e, _)| *e).collect();
            let numer = LaurentPoly::from_terms(exps.into_iter().zip(v));
            let denom = c
                .value
                .denom
                .iter()
                .map(|d| d.map(|v| v.with_precision(p)))
                .collect();
            let c = LommelCoeff {
                value: RatFn::new(numer, denom),
                ..c
            };
            Ok(lommel_table(&c, a.format))
        }
        _ => Err(Stop::Usage(
            "exactly one of --nu and --t is required".into(),
        )),
    }
}

fn cmd_verify(a: &VerifyArgs) -> std::result::Result<(String, bool), Stop> {
    let suite = if a.suite == "all" {
        IdentityId::ALL.to_vec()
    } else {
        vec![a.suite.parse::<IdentityId>().map_err(Stop::Usage)?]
    };
    if a.max_shift < 0 {
        return Err(Stop::Usage("--max-shift must be nonnegative".into()));
    }
    precision(a.prec)?;
    let modes = match a.mode {
        VerifyMode::Exact => vec![Mode::Exact],
        VerifyMode::Float => vec![Mode::Float],
        VerifyMode::Both => vec![Mode::Exact, Mode::Float],
    };
    let cfg = SweepConfig {
        suite,
        max_shift: a.max_shift,
        trials: a.trials,
        seed: a.seed,
        modes,
        order: a.order,
        precision: a.prec,
        cond: a.cond,
        jobs: a.jobs.max(1),
        only_shift: a.only_shift.clone(),
        only_trial: a.only_trial,
    };
    let report = run_sweep(&cfg);
    let text = match a.format {
        Format::Json => report.to_json(),
        Format::Text => report.table(),
        Format::Csv => return Err(Stop::Usage("verify reports are json or text".into())),
    };
    Ok((text, report.success()))
}

fn cmd_bench(a: &BenchArgs) -> std::result::Result<(String, bool), Stop> {
    let input = BenchInput {
        shift: ShiftTriple::new(a.k, a.m, a.n),
        a: Rational::read((), &a.a)?,
        c: Rational::read((), &a.c)?,
        x: Rational::read((), &a.x)?,
        q: Rational::read((), &a.q)?,
        precision: precision(a.prec)?,
        repeat: a.repeat.max(1),
    };
    let report = bench(&input)?;
    let text = serde_json::to_string_pretty(&report).expect("bench report serializes");
    Ok((text, report.agree))
}

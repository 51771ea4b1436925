//! Direct summation of a shifted `1phi1` against the recurrence route.

use std::time::Instant;

use serde::Serialize;

use crate::contiguous::{coeff_st, ShiftTriple};
use crate::error::Result;
use crate::numerics::{refine, BigFloat, Precision, Rational, Scalar};
use crate::qcore::{phi_eval, PhiOpts, PhiSpec};

#[derive(Clone, Debug)]
pub struct BenchInput {
    pub shift: ShiftTriple,
    pub a: Rational,
    pub c: Rational,
    pub x: Rational,
    pub q: Rational,
    pub precision: Precision,
    pub repeat: usize,
}

/// Seconds per run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub min: f64,
    pub median: f64,
    pub max: f64,
    pub runs: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub shift: ShiftTriple,
    pub a: String,
    pub c: String,
    pub x: String,
    pub q: String,
    pub precision: u32,
    pub direct: String,
    pub recurrence: String,
    pub rel_diff: String,
    pub tolerance: String,
    pub agree: bool,
    pub direct_time: Timing,
    pub recurrence_time: Timing,
}

fn timing(mut secs: Vec<f64>) -> Timing {
    secs.sort_by(f64::total_cmp);
    let n = secs.len();
    let median = if n % 2 == 1 {
        secs[n / 2]
    } else {
        (secs[n / 2 - 1] + secs[n / 2]) / 2.0
    };
    Timing {
        min: secs[0],
        median,
        max: secs[n - 1],
        runs: n,
    }
}

fn phi11(a: BigFloat, c: BigFloat, q: &BigFloat, x: BigFloat) -> Result<BigFloat> {
    let spec = PhiSpec::new(vec![a], vec![c], q.clone(), x);
    Ok(phi_eval(&spec, &PhiOpts::default())?.value)
}

fn timed<T>(repeat: usize, mut f: impl FnMut() -> Result<T>) -> Result<(T, Timing)> {
    let mut secs = Vec::with_capacity(repeat);
    let mut last = None;
    for _ in 0..repeat.max(1) {
        let start = Instant::now();
        let v = f()?;
        secs.push(start.elapsed().as_secs_f64());
        last = Some(v);
    }
    Ok((last.expect("at least one run"), timing(secs)))
}

/// Times both evaluations of `1phi1(aq^k; cq^m; q, xq^n)` and compares them
/// at tolerance `2^{-(p-16)}`.
///
/// Each route is evaluated through [`refine`], so both values carry `p`
/// correct bits and the timings include the precision escalation.
pub fn bench(input: &BenchInput) -> Result<BenchReport> {
    let p = input.precision;
    let ShiftTriple { k, m, n } = input.shift;
    let at = |prec: Precision| {
        let f = |r: &Rational| BigFloat::from_rational(prec, r);
        (f(&input.a), f(&input.c), f(&input.x), f(&input.q))
    };

    let (direct, direct_time) = timed(input.repeat, || {
        refine(p, |prec| {
            let (a, c, x, q) = at(prec);
            let v = phi11(a * &q.powi(k)?, c * &q.powi(m)?, &q, x * &q.powi(n)?)?;
            Ok(vec![v])
        })
    })?;
    let (recurrence, recurrence_time) = timed(input.repeat, || {
        refine(p, |prec| {
            let (a, c, x, q) = at(prec);
            let pair = coeff_st(input.shift, &a, &c, &x, &q)?;
            let up = phi11(a.clone() * &q, c.clone() * &q, &q, x.clone() * &q)?;
            let base = phi11(a, c, &q, x)?;
            Ok(vec![pair.first * &up + &(pair.second * &base)])
        })
    })?;
    let (direct, recurrence) = (&direct[0], &recurrence[0]);

    let rel = direct.rel_diff(recurrence);
    let tol = BigFloat::exp2(p, 16 - p.0 as i32);
    Ok(BenchReport {
        shift: input.shift,
        a: input.a.to_string(),
        c: input.c.to_string(),
        x: input.x.to_string(),
        q: input.q.to_string(),
        precision: p.0,
        direct: direct.to_decimal(),
        recurrence: recurrence.to_decimal(),
        rel_diff: rel.to_decimal(),
        tolerance: tol.to_decimal(),
        agree: rel <= tol,
        direct_time,
        recurrence_time,
    })
}

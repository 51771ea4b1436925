//! The q-Bessel recurrences divided through by `(tq;q)_inf/(q;q)_inf * y^nu`.
//!
//! After that normalization every power of `q^nu` is an integer power of `t`,
//! so each side is a rational function of `y` times a series in `y^2`.

use super::lommel::{r2, r3};
use crate::contiguous::div_named;
use crate::error::Result;
use crate::numerics::intform::{check_identity, IntSeries, Mismatch};
use crate::numerics::{LaurentPoly, RatFn, Rational, Scalar};
use crate::qcore::{phi_eval, phi_formal, q_pochhammer_ratio_inf, PhiOpts, PhiSpec};

/// One term of a normalized recurrence: `coeff(y) * phi(..; scale * y^2)`.
struct Term<S> {
    coeff: RatFn<S>,
    upper: Vec<S>,
    lower: S,
    scale: S,
}

fn leading_coeff<S: Scalar>(m: i64, t: &S, q: &S) -> Result<S> {
    let tq = t.clone() * q;
    q_pochhammer_ratio_inf(&(tq.clone() * &q.powi(m)?), &tq, q, m)
}

fn j3_terms<S: Scalar>(m: i64, n: i64, t: &S, q: &S) -> Result<[Term<S>; 3]> {
    let zero = vec![t.zero_like()];
    let tq = t.clone() * q;
    let lead = LaurentPoly::monomial(leading_coeff(m, t, q)?, m);
    let prev = r3(m - 1, n, &tq, q)?
        .value
        .mul_numer(&LaurentPoly::monomial(t.one_minus(), -1));
    Ok([
        Term {
            coeff: RatFn::poly(lead),
            upper: zero.clone(),
            lower: tq.clone() * &q.powi(m)?,
            scale: q.powi(n + 1)?,
        },
        Term {
            coeff: r3(m, n, t, q)?.value.neg(),
            upper: zero.clone(),
            lower: tq,
            scale: q.clone(),
        },
        Term {
            coeff: prev,
            upper: zero,
            lower: t.clone(),
            scale: q.clone(),
        },
    ])
}

fn j2_terms<S: Scalar>(m: i64, n: i64, t: &S, q: &S) -> Result<[Term<S>; 3]> {
    let tq = t.clone() * q;
    let lead = leading_coeff(m, t, q)? * &t.powi(m)? * &q.powi(m * (m - 1) / 2)?;
    let prev = r2(m - 1, n, &tq, q)?
        .value
        .mul_numer(&LaurentPoly::monomial(t.one_minus(), -1));
    Ok([
        Term {
            coeff: RatFn::poly(LaurentPoly::monomial(lead, m)),
            upper: vec![],
            lower: tq.clone() * &q.powi(m)?,
            scale: -(tq.clone() * &q.powi(m + n)?),
        },
        Term {
            coeff: r2(m, n, t, q)?.value.neg(),
            upper: vec![],
            lower: tq.clone(),
            scale: -tq,
        },
        Term {
            coeff: prev,
            upper: vec![],
            lower: t.clone(),
            scale: -t.clone(),
        },
    ])
}

fn formal(terms: [Term<Rational>; 3], q: &Rational, order: usize) -> Result<Option<Mismatch>> {
    let mut series = Vec::with_capacity(3);
    for term in &terms {
        let spec = PhiSpec::new(
            term.upper.clone(),
            vec![term.lower.clone()],
            q.clone(),
            term.scale.clone(),
        );
        series.push(IntSeries::from_series(&phi_formal(&spec, 2, order)?));
    }
    let pairs: Vec<_> = terms
        .into_iter()
        .zip(&series)
        .map(|(term, s)| (term.coeff, s))
        .collect();
    Ok(check_identity(&pairs))
}

fn evaluate<S: Scalar>(terms: [Term<S>; 3], x: &S, q: &S, opts: &PhiOpts<S>) -> Result<[S; 3]> {
    let y = div_named(x.clone(), &S::from_i64(x.ctx(), 2), "2")?;
    let y2 = y.clone() * &y;
    let mut out = Vec::with_capacity(3);
    for term in terms {
        let spec = PhiSpec::new(term.upper, vec![term.lower], q.clone(), term.scale * &y2);
        let phi = phi_eval(&spec, opts)?.value;
        out.push(term.coeff.eval(&y)? * &phi);
    }
    Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
}

/// Residual of the normalized kind-3 recurrence as a formal series in `y`,
/// compared through `y^order` after clearing denominators.
pub fn j3_residual_formal(
    m: i64,
    n: i64,
    t: &Rational,
    q: &Rational,
    order: usize,
) -> Result<Option<Mismatch>> {
    formal(j3_terms(m, n, t, q)?, q, order)
}

/// Residual of the normalized kind-2 recurrence as a formal series in `y`.
pub fn j2_residual_formal(
    m: i64,
    n: i64,
    t: &Rational,
    q: &Rational,
    order: usize,
) -> Result<Option<Mismatch>> {
    formal(j2_terms(m, n, t, q)?, q, order)
}

/// The three terms of the normalized kind-3 recurrence at `x`; they sum to zero.
pub fn j3_recurrence_terms<S: Scalar>(
    m: i64,
    n: i64,
    t: &S,
    x: &S,
    q: &S,
    opts: &PhiOpts<S>,
) -> Result<[S; 3]> {
    evaluate(j3_terms(m, n, t, q)?, x, q, opts)
}

/// The three terms of the normalized kind-2 recurrence at `x`.
pub fn j2_recurrence_terms<S: Scalar>(
    m: i64,
    n: i64,
    t: &S,
    x: &S,
    q: &S,
    opts: &PhiOpts<S>,
) -> Result<[S; 3]> {
    evaluate(j2_terms(m, n, t, q)?, x, q, opts)
}

pub fn j3_recurrence_residual<S: Scalar>(m: i64, n: i64, t: &S, x: &S, q: &S) -> Result<S> {
    let [a, b, c] = j3_recurrence_terms(m, n, t, x, q, &PhiOpts::default())?;
    Ok(a + &b + &c)
}

pub fn j2_recurrence_residual<S: Scalar>(m: i64, n: i64, t: &S, x: &S, q: &S) -> Result<S> {
    let [a, b, c] = j2_recurrence_terms(m, n, t, x, q, &PhiOpts::default())?;
    Ok(a + &b + &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{rational, BigFloat, Precision};

    #[test]
    fn formal_small_grid() {
        let (t, q) = (rational(3, 7), rational(2, 5));
        for m in -2..=2 {
            for n in -2..=2 {
                assert_eq!(
                    j3_residual_formal(m, n, &t, &q, 24).unwrap(),
                    None,
                    "J3 {m},{n}"
                );
                assert_eq!(
                    j2_residual_formal(m, n, &t, &q, 24).unwrap(),
                    None,
                    "J2 {m},{n}"
                );
            }
        }
    }

    #[test]
    fn broken_coefficient_is_caught() {
        let (t, q) = (rational(3, 7), rational(2, 5));
        let mut terms = j3_terms(2, 1, &t, &q).unwrap();
        terms[1].coeff = terms[1].coeff.scale(&rational(1001, 1000));
        assert!(formal(terms, &q, 24).unwrap().is_some());
    }

    #[test]
    fn float_residual_small() {
        let p = Precision(128);
        let f = |v: f64| BigFloat::new(p, v);
        let (t, x, q) = (f(0.3), f(0.9), f(0.6));
        for (m, n) in [(1, 0), (2, -1), (-2, 3)] {
            let r3 = j3_recurrence_residual(m, n, &t, &x, &q).unwrap();
            let r2 = j2_recurrence_residual(m, n, &t, &x, &q).unwrap();
            assert!(r3.abs().to_f64() < 1e-30, "{m},{n}: {}", r3.to_f64());
            assert!(r2.abs().to_f64() < 1e-30, "{m},{n}: {}", r2.to_f64());
        }
    }
}

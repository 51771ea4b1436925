//! `P3` and `P2`, written as polynomials in `y = x/2` with `t = q^nu`.

use crate::contiguous::div_named;
use crate::error::Result;
use crate::numerics::{LaurentPoly, Scalar};
use crate::qcore::{phi_terminating, q_pochhammer, q_pochhammer_recip};

/// Degree bound of `P3` in `x`: `max{|n|, |m-n|} - 1` (the polynomial runs in `x^2`).
pub fn degree_bound_p3(m: i64, n: i64) -> i64 {
    n.abs().max((m - n).abs()) - 1
}

/// Degree bound of `P2` in `x^2`: `floor((m+n+1)/2) - min{m, n, m+n, 0} - 1`.
pub fn degree_bound_p2(m: i64, n: i64) -> i64 {
    (m + n + 1).div_euclid(2) - m.min(n).min(m + n).min(0) - 1
}

fn qpow<S: Scalar>(q: &S, e: i64) -> Result<S> {
    Ok(q.powi(e)?)
}

/// `1 / ((q;q)_j (q^2/t;q)_j)`.
fn b_prefactor<S: Scalar>(j: i64, t: &S, q: &S) -> Result<S> {
    let q2t = div_named(q.clone() * q, t, "t")?;
    let den = q_pochhammer(q, q, j)? * &q_pochhammer(&q2t, q, j)?;
    div_named(q.one_like(), &den, "(q;q)_j (q^2/t;q)_j")
}

/// `2phi1(q^{-j}, t q^{m-j-1}; t; q, z)`.
fn a_series<S: Scalar>(j: i64, m: i64, t: &S, q: &S, z: &S) -> Result<S> {
    phi_terminating(
        j,
        &[t.clone() * &qpow(q, m - j - 1)?],
        std::slice::from_ref(t),
        q,
        z,
    )
}

/// `2phi1(q^{-j}, t q^{-j-1}; t q^m; q, z)`.
fn b_series<S: Scalar>(j: i64, m: i64, t: &S, q: &S, z: &S) -> Result<S> {
    phi_terminating(
        j,
        &[t.clone() * &qpow(q, -j - 1)?],
        &[t.clone() * &qpow(q, m)?],
        q,
        z,
    )
}

/// `A3_{m,n,nu,j}`.
pub fn a3<S: Scalar>(m: i64, n: i64, j: i64, t: &S, q: &S) -> Result<S> {
    if j < 0 {
        return Ok(t.zero_like());
    }
    let tq = div_named(t.clone(), q, "q")?;
    let num = q_pochhammer(t, q, m)? * &q_pochhammer(&tq, q, m - j)?;
    let mut v = div_named(num, &q_pochhammer(q, q, j)?, "(q;q)_j")?;
    v *= &qpow(q, (j - m + 1) * (n - 1) + 1)?;
    v *= &t.powi(-n)?;
    Ok(v * &a_series(j, m, t, q, &qpow(q, j - n + 1)?)?)
}

/// `B3_{m,n,nu,j}`.
pub fn b3<S: Scalar>(m: i64, n: i64, j: i64, t: &S, q: &S) -> Result<S> {
    if j < 0 {
        return Ok(t.zero_like());
    }
    let mut v = b_prefactor(j, t, q)? * &qpow(q, j * (j + 1) / 2)? * &t.powi(-j)?;
    if j % 2 == 1 {
        v = -v;
    }
    Ok(v * &b_series(j, m, t, q, &qpow(q, j + n + 1)?)?)
}

/// Coefficient of `y^{2j}` in the defining sum of `P3`; it vanishes past the degree bound.
pub fn p3_coeff<S: Scalar>(m: i64, n: i64, j: i64, t: &S, q: &S) -> Result<S> {
    let (lo, hi) = (m.min(0), m.max(0));
    let c = a3(m, n, j + lo, t, q)? - b3(m, n, j - hi, t, q)?;
    Ok(c * &qpow(q, j)?)
}

/// `P3_{m,n,nu}` as a polynomial in `y = x/2`: `sum_j y^{2j} q^j (A3 - B3)`.
pub fn p3<S: Scalar>(m: i64, n: i64, t: &S, q: &S) -> Result<LaurentPoly<S>> {
    let mut out = LaurentPoly::zero();
    for j in 0..=degree_bound_p3(m, n) {
        out.add_term(2 * j, p3_coeff(m, n, j, t, q)?);
    }
    Ok(out)
}

/// `(t;q)_m / ((q;q)_j (q^2/t;q)_{j-m})`, shared by `A2` and `A2~`.
fn a2_prefactor<S: Scalar>(m: i64, j: i64, t: &S, q: &S) -> Result<S> {
    let q2t = div_named(q.clone() * q, t, "t")?;
    let num = q_pochhammer(t, q, m)? * &q_pochhammer_recip(&q2t, q, j - m)?;
    div_named(num, &q_pochhammer(q, q, j)?, "(q;q)_j")
}

fn a2<S: Scalar>(m: i64, n: i64, j: i64, t: &S, q: &S) -> Result<S> {
    if j < 0 {
        return Ok(t.zero_like());
    }
    let v = a2_prefactor(m, j, t, q)? * &qpow(q, (j - m + 1) * n)? * &t.powi(-(j - m + n))?;
    Ok(v * &a_series(j, m, t, q, &qpow(q, 2 * j - m - n + 1)?)?)
}

fn b2<S: Scalar>(m: i64, n: i64, j: i64, t: &S, q: &S) -> Result<S> {
    if j < 0 {
        return Ok(t.zero_like());
    }
    let v = b_prefactor(j, t, q)? * &qpow(q, j * (j + 1))? * &t.powi(-2 * j)?;
    Ok(v * &b_series(j, m, t, q, &qpow(q, n + 1)?)?)
}

fn a2_tilde<S: Scalar>(m: i64, n: i64, j: i64, t: &S, q: &S) -> Result<S> {
    if j < 0 {
        return Ok(t.zero_like());
    }
    let v =
        a2_prefactor(m, j, t, q)? * &qpow(q, (j - m + 1) * (j + n))? * &t.powi(-(2 * j - m + n))?;
    Ok(v * &a_series(j, m, t, q, &qpow(q, 1 - n)?)?)
}

fn b2_tilde<S: Scalar>(m: i64, n: i64, j: i64, t: &S, q: &S) -> Result<S> {
    if j < 0 {
        return Ok(t.zero_like());
    }
    let v = b_prefactor(j, t, q)? * &t.powi(-j)?;
    Ok(v * &b_series(j, m, t, q, &qpow(q, 2 * j + m + n + 1)?)?)
}

/// Coefficient of `y^{2j}` in the defining sum of `P2`; it vanishes past the degree bound.
pub fn p2_coeff<S: Scalar>(m: i64, n: i64, j: i64, t: &S, q: &S) -> Result<S> {
    let (lo, hi) = (m.min(0), m.max(0));
    let c = if n >= 0 {
        a2(m, n, j + lo, t, q)? - b2(m, n, j - hi, t, q)?
    } else {
        a2_tilde(m, n, j + lo, t, q)? - b2_tilde(m, n, j - hi, t, q)?
    };
    let c = c * &t.powi(j)?;
    Ok(if j % 2 == 1 { -c } else { c })
}

/// `P2_{m,n,nu}` as a polynomial in `y = x/2`: `sum_j y^{2j} (-1)^j t^j (A2 - B2)`,
/// with the tilde families when `n < 0`.
pub fn p2<S: Scalar>(m: i64, n: i64, t: &S, q: &S) -> Result<LaurentPoly<S>> {
    let mut out = LaurentPoly::zero();
    for j in 0..=degree_bound_p2(m, n) {
        out.add_term(2 * j, p2_coeff(m, n, j, t, q)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{rational, Rational};

    fn r(p: i64, q: i64) -> Rational {
        rational(p, q)
    }

    #[test]
    fn empty_at_origin() {
        assert!(p3(0, 0, &r(2, 5), &r(1, 3)).unwrap().is_zero());
        assert!(p2(0, 0, &r(2, 5), &r(1, 3)).unwrap().is_zero());
    }

    #[test]
    fn p3_single_term() {
        let (t, q) = (r(2, 5), r(1, 3));
        let tq = t.clone() * &q.inv().unwrap();
        let want = t.one_minus() * &tq.one_minus() * &q;
        assert_eq!(p3(1, 0, &t, &q).unwrap(), LaurentPoly::constant(want));
    }

    #[test]
    fn bounds() {
        assert_eq!(degree_bound_p3(2, 0), 1);
        assert_eq!(degree_bound_p2(3, 0), 1);
        assert!(p3(2, 0, &r(2, 5), &r(1, 3)).unwrap().degree().unwrap() <= 2);
    }
}

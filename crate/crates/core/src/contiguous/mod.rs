//! Three-term recurrences for `1phi1` and `0phi1` under integer shifts.
//!
//! For integers `k, m, n`:
//!
//! ```text
//! 1phi1(aq^k; cq^m; q, xq^n) = S  1phi1(aq; cq; q, xq) + T  1phi1(a; c; q, x)
//! 1phi1(aq^k; cq^m; q, xq^n) = S~ 1phi1(aq; cq; q, x)  + T~ 1phi1(a; c; q, x)
//! 0phi1(-; cq^m; q, xq^n)    = U  0phi1(-; cq; q, xq)  + V  0phi1(-; c; q, x)
//! ```
//!
//! The coefficients are rational in `x`; they are built from the polynomials
//! `P11` and `P01` and returned either as [`RatFn`] structures or evaluated.

mod coeffs;
mod p01;
mod p11;

pub use coeffs::{
    coeff_st, coeff_st_rational, coeff_st_tilde, coeff_st_tilde_rational, coeff_uv,
    coeff_uv_rational, s_rational, s_tilde_rational, u_rational,
};
pub use p01::{p01, p01_coeff};
pub use p11::{p11, p11_coeff};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{RatFn, Scalar};

/// Shift indices `(k, m, n)` of the `1phi1` recurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShiftTriple {
    pub k: i64,
    pub m: i64,
    pub n: i64,
}

impl ShiftTriple {
    pub fn new(k: i64, m: i64, n: i64) -> Self {
        ShiftTriple { k, m, n }
    }

    /// Degree bound of `P11`: `max{|k|, |m-k|, |n|, |m-n|} - 1`.
    pub fn d(&self) -> i64 {
        let ShiftTriple { k, m, n } = *self;
        k.abs().max((m - k).abs()).max(n.abs()).max((m - n).abs()) - 1
    }

    /// `k - m + n`, which selects the branch of `P11`.
    pub fn excess(&self) -> i64 {
        self.k - self.m + self.n
    }
}

/// Shift indices `(m, n)` of the `0phi1` recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ShiftPair {
    pub m: i64,
    pub n: i64,
}

impl ShiftPair {
    pub fn new(m: i64, n: i64) -> Self {
        ShiftPair { m, n }
    }

    /// Degree bound of `P01`: `floor((n+1)/2) - min{m, n, n-m, 0} - 1`.
    pub fn e(&self) -> i64 {
        let ShiftPair { m, n } = *self;
        (n + 1).div_euclid(2) - m.min(n).min(n - m).min(0) - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Flavor {
    #[serde(rename = "ST")]
    St,
    #[serde(rename = "ST-tilde")]
    StTilde,
    #[serde(rename = "UV")]
    Uv,
}

/// `(S, T)`, `(S~, T~)` or `(U, V)`, as values or as rational functions of `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffPair<T> {
    pub first: T,
    pub second: T,
    pub flavor: Flavor,
}

impl<S: Scalar> CoeffPair<RatFn<S>> {
    pub fn eval(&self, x: &S) -> Result<CoeffPair<S>> {
        Ok(CoeffPair {
            first: self.first.eval(x)?,
            second: self.second.eval(x)?,
            flavor: self.flavor,
        })
    }
}

/// `num / den`, naming `what` if `den` vanishes.
pub(crate) fn div_named<S: Scalar>(num: S, den: &S, what: &str) -> Result<S> {
    if den.is_zero() {
        return Err(Error::Pole(what.to_string()));
    }
    Ok(num.checked_div(den)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_bound_forms_agree() {
        for k in -6..=6 {
            for m in -6..=6 {
                for n in -6..=6 {
                    let s = ShiftTriple::new(k, m, n);
                    let alt = s.excess().max(0) + m.max(0) - k.min(n) - 1;
                    assert_eq!(s.d(), alt, "{s:?}");
                    assert!(s.d() >= -1);
                    assert_eq!(s.d() == -1, (k, m, n) == (0, 0, 0));
                }
            }
        }
    }

    #[test]
    fn e_examples() {
        assert_eq!(ShiftPair::new(0, 0).e(), -1);
        assert_eq!(ShiftPair::new(1, 4).e(), 1);
        assert_eq!(ShiftPair::new(0, -1).e(), 0);
        assert_eq!(ShiftPair::new(2, -3).e(), 3);
    }
}

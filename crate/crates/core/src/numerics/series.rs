//! Truncated formal power series in one variable.

use super::{LaurentPoly, NumError, Scalar};

/// `c_0 + c_1 x + ... + c_N x^N + O(x^{N+1})`.
///
/// Arithmetic is closed at a fixed order `N`; products drop terms above `x^N`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> TruncatedSeries<S> {
    pub fn zero(ctx: S::Ctx, order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![S::zero(ctx); order + 1],
        }
    }

    pub fn one(ctx: S::Ctx, order: usize) -> Self {
        let mut s = Self::zero(ctx, order);
        s.coeffs[0] = S::one(ctx);
        s
    }

    /// Builds a series from coefficients `c_0..`; missing entries are zero, extra ones are dropped.
    pub fn from_coeffs(ctx: S::Ctx, order: usize, coeffs: impl IntoIterator<Item = S>) -> Self {
        let mut s = Self::zero(ctx, order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// The polynomial part of `p` up to order `N`; negative exponents are rejected.
    pub fn from_poly(ctx: S::Ctx, order: usize, p: &LaurentPoly<S>) -> Self {
        assert!(
            p.min_exp().is_none_or(|e| e >= 0),
            "negative exponent in polynomial-to-series conversion"
        );
        let mut s = Self::zero(ctx, order);
        for (e, c) in p.terms() {
            let e = *e as usize;
            if e <= order {
                s.coeffs[e] = c.clone();
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &S {
        &self.coeffs[i]
    }

    pub fn ctx(&self) -> S::Ctx {
        self.coeffs[0].ctx()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Index of the first nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_order(&self, other: &Self) -> Result<(), NumError> {
        if self.order() != other.order() {
            return Err(NumError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, NumError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, NumError> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.clone() - b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, NumError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(self.ctx(), n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                let mut t = a.clone();
                t *= b;
                out.coeffs[i + j] += &t;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &S) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.clone() * k).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// `x^k * self`, truncated.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(self.ctx(), n);
        for i in k..=n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// `self(lambda * x)`.
    pub fn substitute_scale(&self, lambda: &S) -> Self {
        let mut pow = lambda.one_like();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.clone() * &pow);
            pow *= lambda;
        }
        TruncatedSeries { coeffs }
    }

    /// Product with a polynomial (nonnegative exponents), truncated.
    pub fn mul_poly(&self, p: &LaurentPoly<S>) -> Self {
        let n = self.order();
        let mut out = Self::zero(self.ctx(), n);
        for (e, c) in p.terms() {
            assert!(*e >= 0, "negative exponent in series-by-polynomial product");
            let e = *e as usize;
            if e > n {
                continue;
            }
            for i in 0..=n - e {
                let mut t = c.clone();
                t *= &self.coeffs[i];
                out.coeffs[e + i] += &t;
            }
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self, NumError> {
        let n = self.order();
        let c0 = self.coeffs[0].inv()?;
        let mut out = Self::zero(self.ctx(), n);
        out.coeffs[0] = c0.clone();
        for k in 1..=n {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=k {
                let mut t = self.coeffs[i].clone();
                t *= &out.coeffs[k - i];
                acc += &t;
            }
            out.coeffs[k] = -(acc * &c0);
        }
        Ok(out)
    }

    /// Horner evaluation of the truncated polynomial at `x`.
    pub fn eval(&self, x: &S) -> S {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }
}

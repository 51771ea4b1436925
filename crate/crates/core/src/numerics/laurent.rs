//! Laurent polynomials and rational functions in a single variable.

use std::collections::BTreeMap;
use std::fmt;

use super::{NumError, Scalar};

/// Finite sum `sum_e c_e x^e` over integer exponents; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentPoly<S> {
    terms: BTreeMap<i64, S>,
}

impl<S: Scalar> Default for LaurentPoly<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: S) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: S, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, S)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Adds `c x^e` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, e: i64, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let sum = old + &c;
                if !sum.is_zero() {
                    self.terms.insert(e, sum);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&i64, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: i64) -> Option<&S> {
        self.terms.get(&e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Degree of a nonzero polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.max_exp()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1.clone() * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (*e, c.clone() * k)))
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    /// `x^k * self`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            terms: self.terms().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `self(lambda * x)`.
    pub fn substitute_scale(&self, lambda: &S) -> Result<Self, NumError> {
        let mut out = Self::zero();
        for (e, c) in self.terms() {
            out.add_term(*e, c.clone() * &lambda.powi(*e)?);
        }
        Ok(out)
    }

    /// `self(x^k)` for `k >= 1`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k >= 1);
        LaurentPoly {
            terms: self.terms().map(|(e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// `sum_e c_e x^e`; a zero `x` is an error when a negative exponent is present.
    pub fn eval(&self, x: &S) -> Result<S, NumError> {
        let mut acc = x.zero_like();
        for (e, c) in self.terms() {
            if *e < 0 && x.is_zero() {
                return Err(NumError::ZeroNegativePower(*e));
            }
            acc += &(c.clone() * &x.powi(*e)?);
        }
        Ok(acc)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LaurentPoly<T> {
        LaurentPoly::from_terms(self.terms().map(|(e, c)| (*e, f(c))))
    }
}

impl<S: Scalar> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match *e {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{e}")?,
            }
        }
        Ok(())
    }
}

/// Rational function `numer(x) / prod_i denom_i(x)`.
///
/// The numerator is a Laurent polynomial (it carries the power of `x`); each
/// denominator factor is an ordinary polynomial. Scalar denominators are
/// folded into the numerator when the function is built.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFn<S> {
    pub numer: LaurentPoly<S>,
    pub denom: Vec<LaurentPoly<S>>,
}

impl<S: Scalar> RatFn<S> {
    pub fn poly(numer: LaurentPoly<S>) -> Self {
        RatFn {
            numer,
            denom: Vec::new(),
        }
    }

    pub fn constant(c: S) -> Self {
        Self::poly(LaurentPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::poly(LaurentPoly::zero())
    }

    pub fn new(numer: LaurentPoly<S>, denom: Vec<LaurentPoly<S>>) -> Self {
        for d in &denom {
            assert!(
                !d.is_zero() && d.min_exp().unwrap() >= 0,
                "denominator factors must be nonzero polynomials"
            );
        }
        RatFn { numer, denom }
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    /// Product of the denominator factors (the constant 1 when there are none).
    pub fn denom_product(&self, one: S) -> LaurentPoly<S> {
        self.denom
            .iter()
            .fold(LaurentPoly::constant(one), |acc, d| acc.mul(d))
    }

    pub fn scale(&self, k: &S) -> Self {
        RatFn {
            numer: self.numer.scale(k),
            denom: self.denom.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        RatFn {
            numer: self.numer.neg(),
            denom: self.denom.clone(),
        }
    }

    /// Multiplies the numerator by a Laurent polynomial.
    pub fn mul_numer(&self, p: &LaurentPoly<S>) -> Self {
        RatFn {
            numer: self.numer.mul(p),
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut denom = self.denom.clone();
        denom.extend(other.denom.iter().cloned());
        RatFn {
            numer: self.numer.mul(&other.numer),
            denom,
        }
    }

    /// Sum over the concatenated denominators; no factors are cancelled.
    pub fn add(&self, other: &Self) -> Self {
        let cross = |p: &LaurentPoly<S>, fs: &[LaurentPoly<S>]| {
            fs.iter().fold(p.clone(), |acc, d| acc.mul(d))
        };
        let mut denom = self.denom.clone();
        denom.extend(other.denom.iter().cloned());
        RatFn {
            numer: cross(&self.numer, &other.denom).add(&cross(&other.numer, &self.denom)),
            denom,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Appends a denominator factor.
    pub fn div_poly(&self, d: LaurentPoly<S>) -> Self {
        let mut denom = self.denom.clone();
        denom.push(d);
        Self::new(self.numer.clone(), denom)
    }

    /// `self(lambda * x)`.
    pub fn substitute_scale(&self, lambda: &S) -> Result<Self, NumError> {
        Ok(RatFn {
            numer: self.numer.substitute_scale(lambda)?,
            denom: self
                .denom
                .iter()
                .map(|d| d.substitute_scale(lambda))
                .collect::<Result<_, _>>()?,
        })
    }

    pub fn eval(&self, x: &S) -> Result<S, NumError> {
        let mut den = x.one_like();
        for d in &self.denom {
            den *= &d.eval(x)?;
        }
        if den.is_zero() {
            return Err(NumError::DenominatorVanishes);
        }
        self.numer.eval(x)?.checked_div(&den)
    }

    /// `a == b` as rational functions, by cross-multiplication.
    pub fn same_function(&self, other: &Self, one: S) -> bool {
        let lhs = self.numer.mul(&other.denom_product(one.clone()));
        let rhs = other.numer.mul(&self.denom_product(one));
        lhs == rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{rational, Rational};

    #[test]
    fn laurent_eval_examples() {
        let zero: LaurentPoly<Rational> = LaurentPoly::zero();
        assert_eq!(zero.eval(&rational(7, 3)).unwrap(), rational(0, 1));
        let p = LaurentPoly::from_terms([(-1, rational(1, 1)), (1, rational(1, 1))]);
        assert_eq!(p.eval(&rational(2, 1)).unwrap(), rational(5, 2));
        let c = LaurentPoly::constant(rational(-4, 9));
        assert_eq!(c.eval(&rational(11, 5)).unwrap(), rational(-4, 9));
        assert!(p.eval(&rational(0, 1)).is_err());
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut p = LaurentPoly::monomial(rational(1, 2), 3);
        p.add_term(3, rational(-1, 2));
        assert!(p.is_zero());
        assert_eq!(p.min_exp(), None);
        let p = LaurentPoly::from_terms([(2, rational(0, 1)), (-2, rational(3, 1))]);
        assert_eq!(p.len(), 1);
        assert_eq!((p.min_exp(), p.max_exp()), (Some(-2), Some(-2)));
    }

    #[test]
    fn ratfn_cross_multiplication() {
        // x/(1-x) == (2x)/(2-2x)
        let a = RatFn::new(
            LaurentPoly::monomial(rational(1, 1), 1),
            vec![LaurentPoly::from_terms([
                (0, rational(1, 1)),
                (1, rational(-1, 1)),
            ])],
        );
        let b = RatFn::new(
            LaurentPoly::monomial(rational(2, 1), 1),
            vec![LaurentPoly::from_terms([
                (0, rational(2, 1)),
                (1, rational(-2, 1)),
            ])],
        );
        assert!(a.same_function(&b, rational(1, 1)));
        assert_eq!(a.eval(&rational(1, 3)).unwrap(), rational(1, 2));
        assert!(a.eval(&rational(1, 1)).is_err());
    }
}

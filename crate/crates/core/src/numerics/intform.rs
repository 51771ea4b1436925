//! Common-denominator form of rational series and polynomials.
//!
//! A series with rational coefficients is stored as one integer denominator
//! and a vector of integer numerators. Products then run on integers only,
//! which avoids a gcd per coefficient operation; exact identity checks over
//! long truncated series spend almost all their time here.
//!
//! [`check_identity`] verifies `sum_i R_i(x) F_i(x) = 0` for rational functions
//! `R_i = N_i / D_i` and truncated series `F_i`. The identity is multiplied by
//! `x^M prod_i D_i`, which turns every coefficient into a polynomial `P_i`.
//! Each `F_i` is known through `x^N`, so each product `P_i F_i` is known
//! through `x^N` as well, and all coefficients `0..=N` are compared.

use rug::{Integer, Rational};

use super::{LaurentPoly, NumError, RatFn, TruncatedSeries};

/// `num[i] / den` is the coefficient of `x^i`, for `i = 0..=N`.
#[derive(Clone, Debug, PartialEq)]
pub struct IntSeries {
    pub den: Integer,
    pub num: Vec<Integer>,
}

/// Polynomial `sum_e num_e x^e / den` with nonnegative exponents.
#[derive(Clone, Debug, PartialEq)]
pub struct IntPoly {
    pub den: Integer,
    pub terms: Vec<(usize, Integer)>,
}

fn lcm_of<'a>(dens: impl Iterator<Item = &'a Integer>) -> Integer {
    dens.fold(Integer::from(1), |acc, d| acc.lcm(d))
}

impl IntSeries {
    pub fn from_series(s: &TruncatedSeries<Rational>) -> Self {
        let den = lcm_of(s.coeffs().iter().map(|c| c.denom()));
        let num = s
            .coeffs()
            .iter()
            .map(|c| c.numer() * Integer::from(&den / c.denom()))
            .collect();
        IntSeries { den, num }
    }

    pub fn order(&self) -> usize {
        self.num.len() - 1
    }

    pub fn to_series(&self) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_coeffs(
            (),
            self.order(),
            self.num
                .iter()
                .map(|n| Rational::from((n.clone(), self.den.clone()))),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|n| *n == 0)
    }

    pub fn first_nonzero(&self) -> Option<usize> {
        self.num.iter().position(|n| *n != 0)
    }

    /// `self(lambda * x)` for rational `lambda`.
    pub fn substitute_scale(&self, lambda: &Rational) -> Self {
        let n = self.order();
        let (p, q) = (lambda.numer(), lambda.denom());
        // num_i p^i q^{N-i} / (den q^N)
        let mut qpows = Vec::with_capacity(n + 1);
        let mut acc = Integer::from(1);
        for _ in 0..=n {
            qpows.push(acc.clone());
            acc *= q;
        }
        let den = Integer::from(&self.den * &qpows[n]);
        let mut ppow = Integer::from(1);
        let mut num = Vec::with_capacity(n + 1);
        for (i, c) in self.num.iter().enumerate() {
            num.push(Integer::from(c * &ppow) * &qpows[n - i]);
            ppow *= p;
        }
        IntSeries { den, num }
    }

    /// Truncated product of two series.
    pub fn mul(&self, other: &Self) -> Result<Self, NumError> {
        if self.order() != other.order() {
            return Err(NumError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let n = self.order();
        let mut num = vec![Integer::new(); n + 1];
        for (i, a) in self.num.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.num[..=n - i].iter().enumerate() {
                num[i + j] += a * b;
            }
        }
        Ok(IntSeries {
            den: Integer::from(&self.den * &other.den),
            num,
        })
    }

    /// Truncated product with a polynomial.
    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        let n = self.order();
        let mut num = vec![Integer::new(); n + 1];
        for (e, c) in &p.terms {
            if *e > n {
                continue;
            }
            for (i, a) in self.num[..=n - e].iter().enumerate() {
                num[e + i] += c * a;
            }
        }
        IntSeries {
            den: Integer::from(&self.den * &p.den),
            num,
        }
    }
}

impl IntPoly {
    /// Converts a Laurent polynomial with nonnegative exponents.
    pub fn from_poly(p: &LaurentPoly<Rational>) -> Self {
        let den = lcm_of(p.terms().map(|(_, c)| c.denom()));
        let terms = p
            .terms()
            .map(|(e, c)| {
                assert!(*e >= 0, "negative exponent in integer polynomial");
                (*e as usize, (c.numer() * Integer::from(&den / c.denom())))
            })
            .collect();
        IntPoly { den, terms }
    }
}

/// Checks `sum_i terms_i == 0` through order `N` after bringing every term to a
/// common denominator. Returns the lowest nonvanishing coefficient index and
/// its value on failure.
pub fn combination_vanishes(terms: &[IntSeries]) -> Result<(), (usize, Rational)> {
    assert!(!terms.is_empty());
    let n = terms[0].order();
    let l = lcm_of(terms.iter().map(|t| &t.den));
    let factors: Vec<Integer> = terms.iter().map(|t| Integer::from(&l / &t.den)).collect();
    for i in 0..=n {
        let mut acc = Integer::new();
        for (t, f) in terms.iter().zip(&factors) {
            acc += &t.num[i] * f;
        }
        if acc != 0 {
            return Err((i, Rational::from((acc, l))));
        }
    }
    Ok(())
}

/// First nonvanishing coefficient of a cleared residual.
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub index: usize,
    pub value: Rational,
}

/// Checks `sum_i coeff_i * series_i == 0` through the common order of the series.
pub fn check_identity(terms: &[(RatFn<Rational>, &IntSeries)]) -> Option<Mismatch> {
    let one = Rational::from(1);
    let dens: Vec<LaurentPoly<Rational>> = terms
        .iter()
        .map(|(r, _)| r.denom_product(one.clone()))
        .collect();
    let mut polys = Vec::with_capacity(terms.len());
    for (i, (r, _)) in terms.iter().enumerate() {
        let mut p = r.numer.clone();
        for (l, d) in dens.iter().enumerate() {
            if l != i && !d.is_zero() {
                p = p.mul(d);
            }
        }
        polys.push(p);
    }
    let shift = polys
        .iter()
        .filter_map(|p| p.min_exp())
        .min()
        .map_or(0, |e| (-e).max(0));
    let products: Vec<IntSeries> = polys
        .iter()
        .zip(terms)
        .map(|(p, (_, s))| s.mul_poly(&IntPoly::from_poly(&p.shift(shift))))
        .collect();
    combination_vanishes(&products)
        .err()
        .map(|(index, value)| Mismatch { index, value })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational;

    fn ser(cs: &[(i64, i64)], order: usize) -> TruncatedSeries<Rational> {
        TruncatedSeries::from_coeffs((), order, cs.iter().map(|&(p, q)| rational(p, q)))
    }

    #[test]
    fn round_trip() {
        let s = ser(&[(1, 3), (-2, 5), (0, 1), (7, 4)], 3);
        assert_eq!(IntSeries::from_series(&s).to_series(), s);
    }

    #[test]
    fn products_match_rational_arithmetic() {
        let a = ser(&[(1, 3), (-2, 5), (1, 7), (7, 4)], 3);
        let b = ser(&[(2, 9), (1, 1), (-3, 8)], 3);
        let prod = IntSeries::from_series(&a)
            .mul(&IntSeries::from_series(&b))
            .unwrap();
        assert_eq!(prod.to_series(), a.mul(&b).unwrap());

        let p = LaurentPoly::from_terms([(0, rational(1, 2)), (2, rational(-5, 3))]);
        let got = IntSeries::from_series(&a).mul_poly(&IntPoly::from_poly(&p));
        assert_eq!(got.to_series(), a.mul_poly(&p));
    }

    #[test]
    fn scaling_matches_rational_arithmetic() {
        let a = ser(&[(1, 3), (-2, 5), (1, 7), (7, 4)], 3);
        let lam = rational(-3, 7);
        let got = IntSeries::from_series(&a)
            .substitute_scale(&lam)
            .to_series();
        assert_eq!(got, a.substitute_scale(&lam));
    }

    #[test]
    fn vanishing_combination() {
        let a = ser(&[(1, 3), (1, 6)], 1);
        let b = ser(&[(-2, 6), (-1, 6)], 1);
        let ia = IntSeries::from_series(&a);
        let ib = IntSeries::from_series(&b);
        assert!(combination_vanishes(&[ia.clone(), ib]).is_ok());
        let c = IntSeries::from_series(&ser(&[(-1, 3)], 1));
        assert_eq!(
            combination_vanishes(&[ia, c]).unwrap_err(),
            (1, rational(1, 6))
        );
    }

    #[test]
    fn geometric_identity() {
        let order = 10;
        let geo = IntSeries::from_series(&TruncatedSeries::from_coeffs(
            (),
            order,
            std::iter::repeat(rational(1, 1)),
        ));
        let one = IntSeries::from_series(&TruncatedSeries::one((), order));
        let lin = LaurentPoly::from_terms([(0, rational(1, 1)), (1, rational(-1, 1))]);
        // 1 * geo - (1/(1-x)) * 1 = 0
        let terms = [
            (RatFn::constant(rational(1, 1)), &geo),
            (
                RatFn::new(LaurentPoly::constant(rational(-1, 1)), vec![lin]),
                &one,
            ),
        ];
        assert_eq!(check_identity(&terms), None);
        let bad = [
            (RatFn::constant(rational(1, 1)), &geo),
            (RatFn::constant(rational(-1, 1)), &one),
        ];
        assert_eq!(
            check_identity(&bad),
            Some(Mismatch {
                index: 1,
                value: rational(1, 1)
            })
        );
    }
}

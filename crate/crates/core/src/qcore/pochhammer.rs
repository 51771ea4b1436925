use crate::error::{Error, Result};
use crate::numerics::Scalar;

/// `(a; q)_j` for any integer `j`.
///
/// For `j < 0` this is `1 / prod_{i=1}^{|j|} (1 - a q^{-i})`; a vanishing factor
/// there is a pole.
pub fn q_pochhammer<S: Scalar>(a: &S, q: &S, j: i64) -> Result<S> {
    let mut acc = a.one_like();
    if j >= 0 {
        let mut aq = a.clone();
        for _ in 0..j {
            acc *= &aq.one_minus();
            aq *= q;
        }
        return Ok(acc);
    }
    let qinv = q.inv()?;
    let mut aq = a.clone() * &qinv;
    for i in 1..=-j {
        let f = aq.one_minus();
        if f.is_zero() {
            return Err(Error::Pole(format!("1 - a*q^-{i} in (a;q)_{j}")));
        }
        acc *= &f;
        aq *= &qinv;
    }
    Ok(acc.inv()?)
}

/// `1 / (a; q)_j`, which is zero for `j < 0` when `a = q` and in general the
/// reciprocal product otherwise.
pub fn q_pochhammer_recip<S: Scalar>(a: &S, q: &S, j: i64) -> Result<S> {
    if j < 0 {
        let mut acc = a.one_like();
        let qinv = q.inv()?;
        let mut aq = a.clone() * &qinv;
        for _ in 0..-j {
            acc *= &aq.one_minus();
            aq *= &qinv;
        }
        return Ok(acc);
    }
    let p = q_pochhammer(a, q, j)?;
    if p.is_zero() {
        return Err(Error::Pole(format!("(a;q)_{j} in a denominator")));
    }
    Ok(p.inv()?)
}

/// `(a; q)_inf`, float backend only.
///
/// Factors are multiplied until `|a q^j| / ((1 - |q|)(1 - |a q^j|))`, a bound on
/// `|log prod_{i>=j} (1 - a q^i)|`, falls below the backend epsilon.
pub fn q_pochhammer_inf<S: Scalar>(a: &S, q: &S) -> Result<S> {
    if S::EXACT {
        return Err(Error::ExactInfiniteProduct);
    }
    let one = a.one_like();
    let qa = q.abs();
    if qa >= one {
        return Err(Error::Domain(format!("|q| = {} is not < 1", q.to_f64())));
    }
    let eps = S::epsilon(a.ctx());
    let one_minus_q = qa.one_minus();
    let mut acc = one.clone();
    let mut aq = a.clone();
    loop {
        let m = aq.abs();
        if m.is_zero() {
            return Ok(acc);
        }
        if m < one {
            let bound = m.checked_div(&(one_minus_q.clone() * &m.one_minus()))?;
            if bound < eps {
                return Ok(acc);
            }
        }
        acc *= &aq.one_minus();
        aq *= q;
    }
}

/// `(a; q)_inf / (b; q)_inf` where the caller guarantees `a = b q^i`.
///
/// The ratio telescopes to `1 / (b; q)_i` for `i >= 0` and `(a; q)_{-i}` for
/// `i < 0`. In the exact backend the premise is checked.
pub fn q_pochhammer_ratio_inf<S: Scalar>(a: &S, b: &S, q: &S, i: i64) -> Result<S> {
    if S::EXACT && *a != b.clone() * &q.powi(i)? {
        return Err(Error::Domain(format!(
            "a != b*q^{i} in infinite-product ratio"
        )));
    }
    if i >= 0 {
        q_pochhammer_recip(b, q, i)
    } else {
        q_pochhammer(a, q, -i)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{rational, BigFloat, Precision, Rational};
    use proptest::prelude::*;

    #[test]
    fn finite_examples() {
        let a = rational(5, 7);
        assert_eq!(
            q_pochhammer(&a, &rational(1, 3), 0).unwrap(),
            rational(1, 1)
        );
        let h = rational(1, 2);
        assert_eq!(q_pochhammer(&h, &h, 3).unwrap(), rational(21, 64));
        assert_eq!(
            q_pochhammer(&h, &rational(1, 3), -1).unwrap(),
            rational(-2, 1)
        );
    }

    #[test]
    fn negative_index_pole() {
        // a q^{-2} = 1
        let q = rational(1, 2);
        assert!(matches!(
            q_pochhammer(&rational(1, 4), &q, -3),
            Err(Error::Pole(_))
        ));
        // 1/(q;q)_j vanishes for j < 0
        assert_eq!(q_pochhammer_recip(&q, &q, -2).unwrap(), rational(0, 1));
    }

    #[test]
    fn infinite_product_examples() {
        let p = Precision(128);
        let q = BigFloat::from_rational(p, &rational(1, 2));
        let zero = BigFloat::from_i64(p, 0);
        assert_eq!(
            q_pochhammer_inf(&zero, &q).unwrap(),
            BigFloat::from_i64(p, 1)
        );
        let euler = q_pochhammer_inf(&q, &q).unwrap();
        assert!((euler.to_f64() - 0.288_788_095_086_602_4).abs() < 1e-15);
        assert!(matches!(
            q_pochhammer_inf(&rational(1, 2), &rational(1, 2)),
            Err(Error::ExactInfiniteProduct)
        ));
    }

    #[test]
    fn infinite_product_telescopes() {
        let p = Precision(128);
        let a = BigFloat::from_rational(p, &rational(3, 7));
        let q = BigFloat::from_rational(p, &rational(2, 5));
        let num = q_pochhammer_inf(&a, &q).unwrap();
        let den = q_pochhammer_inf(&(a.clone() * &q), &q).unwrap();
        let ratio = num.checked_div(&den).unwrap();
        assert!(ratio.approx_eq(&a.one_minus(), &BigFloat::exp2(p, -120)));
    }

    #[test]
    fn ratio_examples() {
        let q = rational(1, 3);
        let t = rational(2, 5);
        assert_eq!(
            q_pochhammer_ratio_inf(&t, &t, &q, 0).unwrap(),
            rational(1, 1)
        );
        // (t q^{m+1}; q)_inf / (t/q; q)_inf = 1/(t/q; q)_{m+2}
        let m = 3;
        let tq = t.clone() * &q.powi(m + 1).unwrap();
        let tm = t.clone() * &q.inv().unwrap();
        let expect = q_pochhammer(&tm, &q, m + 2).unwrap().inv().unwrap();
        assert_eq!(q_pochhammer_ratio_inf(&tq, &tm, &q, m + 2).unwrap(), expect);
        // (t; q)_inf / (tq; q)_inf = 1 - t
        let tq1 = t.clone() * &q;
        assert_eq!(
            q_pochhammer_ratio_inf(&t, &tq1, &q, -1).unwrap(),
            t.one_minus()
        );
        assert!(q_pochhammer_ratio_inf(&t, &tq1, &q, 1).is_err());
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (1i64..50, 2i64..51).prop_filter_map("proper", |(p, q)| (p < q).then(|| rational(p, q)))
    }

    proptest! {
        #[test]
        fn step_recurrence(a in small_rational(), q in small_rational(), j in -6i64..8) {
            let (Ok(lo), Ok(hi)) = (q_pochhammer(&a, &q, j), q_pochhammer(&a, &q, j + 1)) else {
                return Ok(());
            };
            let factor = (a.clone() * &q.powi(j).unwrap()).one_minus();
            prop_assert_eq!(hi, lo * &factor);
        }

        #[test]
        fn negative_index_consistency(a in small_rational(), q in small_rational(), j in 1i64..8) {
            let Ok(neg) = q_pochhammer(&a, &q, -j) else { return Ok(()); };
            let shifted = a.clone() * &q.powi(-j).unwrap();
            let pos = q_pochhammer(&shifted, &q, j).unwrap();
            prop_assert_eq!(neg * &pos, rational(1, 1));
        }
    }
}

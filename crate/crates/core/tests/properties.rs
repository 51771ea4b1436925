use proptest::prelude::*;

use qcontig::contiguous::{coeff_st, coeff_st_tilde, coeff_uv, ShiftPair, ShiftTriple};
use qcontig::numerics::{rational, refine, BigFloat, LaurentPoly, Precision, Rational, Scalar};
use qcontig::qcore::{phi_eval, q_pochhammer, PhiOpts, PhiSpec};
use qcontig::Error;

fn nonzero() -> impl Strategy<Value = Rational> {
    (1i64..=30, 2i64..=31, any::<bool>())
        .prop_map(|(n, d, neg)| rational(if neg { -n } else { n }, d))
}

fn base() -> impl Strategy<Value = Rational> {
    (1i64..=9, 2i64..=11)
        .prop_filter("q in (0, 1)", |(n, d)| n < d)
        .prop_map(|(n, d)| rational(n, d))
}

fn shift(k: i64) -> impl Strategy<Value = ShiftTriple> {
    (-k..=k, -k..=k, -k..=k).prop_map(|(a, b, c)| ShiftTriple::new(a, b, c))
}

/// Unwraps, turning a pole into a rejected case.
macro_rules! or_reject {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => {
                let e = Error::from(e);
                if e.is_pole() {
                    return Err(TestCaseError::reject("pole"));
                }
                return Err(TestCaseError::fail(e.to_string()));
            }
        }
    };
}

fn phi11(a: &Rational, c: &Rational, q: &Rational, x: &Rational) -> qcontig::Result<Rational> {
    let spec = PhiSpec::new(vec![a.clone()], vec![c.clone()], q.clone(), x.clone());
    Ok(phi_eval(&spec, &PhiOpts::default())?.value)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pochhammer_splits(a in nonzero(), q in base(), m in -6i64..=6, n in -6i64..=6) {
        let whole = or_reject!(q_pochhammer(&a, &q, m + n));
        let left = or_reject!(q_pochhammer(&a, &q, m));
        let aqm = a.clone() * &or_reject!(q.powi(m));
        let right = or_reject!(q_pochhammer(&aqm, &q, n));
        prop_assert_eq!(whole, left * &right);
    }

    /// With `a = q^{-N}` every series in the identity terminates, so both
    /// sides are exact finite sums independent of the formal-series path.
    #[test]
    fn three_term_on_terminating_series(
        s in shift(3),
        extra in 0i64..=3,
        c in nonzero(),
        x in nonzero(),
        q in base(),
    ) {
        let a = or_reject!(q.powi(-(3 + extra)));
        let qp = |e: i64| q.powi(e);
        let lhs = or_reject!(phi11(
            &(a.clone() * &or_reject!(qp(s.k))),
            &(c.clone() * &or_reject!(qp(s.m))),
            &q,
            &(x.clone() * &or_reject!(qp(s.n))),
        ));
        let up = or_reject!(phi11(&(a.clone() * &q), &(c.clone() * &q), &q, &(x.clone() * &q)));
        let here = or_reject!(phi11(&a, &c, &q, &x));
        let pair = or_reject!(coeff_st(s, &a, &c, &x, &q));
        prop_assert_eq!(lhs, pair.first * &up + &(pair.second * &here));
    }

    #[test]
    fn s_is_cax_times_s_tilde(s in shift(3), a in nonzero(), c in nonzero(), x in nonzero(), q in base()) {
        let st = or_reject!(coeff_st(s, &a, &c, &x, &q));
        let tilde = or_reject!(coeff_st_tilde(s, &a, &c, &x, &q));
        prop_assert_eq!(st.first, (c.clone() - a.clone() * &x) * &tilde.first);
    }

    /// Floats through `refine` reproduce the exact coefficients to the
    /// requested precision.
    #[test]
    fn float_coefficients_track_exact(
        m in -3i64..=3,
        n in -3i64..=3,
        c in nonzero(),
        x in nonzero(),
        q in base(),
    ) {
        let s = ShiftPair::new(m, n);
        let exact = or_reject!(coeff_uv(s, &c, &x, &q));
        let p = Precision(128);
        let float = or_reject!(refine(p, |prec| {
            let f = |r: &Rational| BigFloat::from_rational(prec, r);
            let pair = coeff_uv(s, &f(&c), &f(&x), &f(&q))?;
            Ok::<_, Error>(vec![pair.first, pair.second])
        }));
        let tol = BigFloat::exp2(p, -120);
        for (got, want) in float.iter().zip([&exact.first, &exact.second]) {
            let want = BigFloat::from_rational(p, want);
            if want.is_zero() {
                prop_assert!(got.abs() <= tol);
            } else {
                prop_assert!(got.rel_diff(&want) <= tol, "{} vs {}", got, want);
            }
        }
    }

    #[test]
    fn laurent_eval_is_multiplicative(
        a in prop::collection::vec((-4i64..=4, nonzero()), 0..5),
        b in prop::collection::vec((-4i64..=4, nonzero()), 0..5),
        x in nonzero(),
    ) {
        let (p, r) = (LaurentPoly::from_terms(a), LaurentPoly::from_terms(b));
        let whole = p.mul(&r).eval(&x).unwrap();
        prop_assert_eq!(whole, p.eval(&x).unwrap() * &r.eval(&x).unwrap());
    }
}

use super::{div_named, p01, p11, CoeffPair, Flavor, ShiftPair, ShiftTriple};
use crate::error::Result;
use crate::numerics::{LaurentPoly, RatFn, Scalar};

/// `1 - lambda x`.
fn linear<S: Scalar>(lambda: S) -> LaurentPoly<S> {
    LaurentPoly::from_terms([(0, lambda.one_like()), (1, -lambda)])
}

/// `c - lambda x`.
fn affine<S: Scalar>(c: &S, lambda: S) -> LaurentPoly<S> {
    LaurentPoly::from_terms([(0, c.clone()), (1, -lambda)])
}

/// `(lambda x; q)_i` as a list of linear factors.
fn pochhammer_factors<S: Scalar>(lambda: &S, q: &S, i: i64) -> Vec<LaurentPoly<S>> {
    let mut out = Vec::new();
    let mut l = lambda.clone();
    for _ in 0..i.max(0) {
        out.push(linear(l.clone()));
        l *= q;
    }
    out
}

/// `S~(k, m, n; a, c, x; q)` as a rational function of `x`.
pub fn s_tilde_rational<S: Scalar>(shift: ShiftTriple, a: &S, c: &S, q: &S) -> Result<RatFn<S>> {
    let pre = div_named(
        a.one_minus(),
        &((q.clone() - c) * &c.one_minus()),
        "(q - c)(1 - c)",
    )?;
    let numer = p11(shift, a, c, q)?.shift(1 - shift.m.max(0)).scale(&pre);
    let ac = div_named(a.clone(), c, "c")?;
    Ok(RatFn::new(
        numer,
        pochhammer_factors(&ac, q, shift.excess()),
    ))
}

/// `S(k, m, n; a, c, x; q) = (c - ax) S~(k, m, n; a, c, x; q)`.
pub fn s_rational<S: Scalar>(shift: ShiftTriple, a: &S, c: &S, q: &S) -> Result<RatFn<S>> {
    Ok(s_tilde_rational(shift, a, c, q)?.mul_numer(&affine(c, a.clone())))
}

/// `U(m, n; c, x; q)` as a rational function of `x`.
pub fn u_rational<S: Scalar>(shift: ShiftPair, c: &S, q: &S) -> Result<RatFn<S>> {
    let pre = div_named(
        -c.one_like(),
        &((q.clone() - c) * &c.one_minus()),
        "(q - c)(1 - c)",
    )?;
    let numer = p01(shift, c, q)?.shift(1 - shift.m.max(0)).scale(&pre);
    let inv_c = div_named(c.one_like(), c, "c")?;
    Ok(RatFn::new(
        numer,
        pochhammer_factors(&inv_c, q, shift.n - shift.m),
    ))
}

fn t_rational<S: Scalar>(shift: ShiftTriple, a: &S, c: &S, q: &S) -> Result<RatFn<S>> {
    let (aq, cq) = (a.clone() * q, c.clone() * q);
    let inner = s_rational(
        ShiftTriple::new(shift.k - 1, shift.m - 1, shift.n - 1),
        &aq,
        &cq,
        q,
    )?
    .substitute_scale(q)?;
    let factor = div_named(
        -(c.one_minus() * &cq.one_minus()),
        &(aq.one_minus() * q),
        "(1 - aq)",
    )?;
    let shifted = RatFn::new(inner.numer.shift(-1).scale(&factor), inner.denom);
    Ok(shifted.div_poly(affine(c, aq)))
}

fn t_tilde_rational<S: Scalar>(shift: ShiftTriple, a: &S, c: &S, q: &S) -> Result<RatFn<S>> {
    let (aq, cq) = (a.clone() * q, c.clone() * q);
    let inner = s_tilde_rational(
        ShiftTriple::new(shift.k - 1, shift.m - 1, shift.n),
        &aq,
        &cq,
        q,
    )?;
    let factor = div_named(
        -(c.one_minus() * &cq.one_minus() * q),
        &aq.one_minus(),
        "(1 - aq)",
    )?;
    Ok(RatFn::new(
        inner.numer.shift(-1).scale(&factor),
        inner.denom,
    ))
}

fn v_rational<S: Scalar>(shift: ShiftPair, c: &S, q: &S) -> Result<RatFn<S>> {
    let cq = c.clone() * q;
    let inner =
        u_rational(ShiftPair::new(shift.m - 1, shift.n - 1), &cq, q)?.substitute_scale(q)?;
    let factor = c.one_minus() * &cq.one_minus();
    Ok(RatFn::new(
        inner.numer.shift(-1).scale(&factor),
        inner.denom,
    ))
}

/// `(S, T)`; `T` is obtained from `S` at the shift `(k-1, m-1, n-1)`.
pub fn coeff_st_rational<S: Scalar>(
    shift: ShiftTriple,
    a: &S,
    c: &S,
    q: &S,
) -> Result<CoeffPair<RatFn<S>>> {
    Ok(CoeffPair {
        first: s_rational(shift, a, c, q)?,
        second: t_rational(shift, a, c, q)?,
        flavor: Flavor::St,
    })
}

/// `(S~, T~)`; `T~` is obtained from `S~` at the shift `(k-1, m-1, n)`.
pub fn coeff_st_tilde_rational<S: Scalar>(
    shift: ShiftTriple,
    a: &S,
    c: &S,
    q: &S,
) -> Result<CoeffPair<RatFn<S>>> {
    Ok(CoeffPair {
        first: s_tilde_rational(shift, a, c, q)?,
        second: t_tilde_rational(shift, a, c, q)?,
        flavor: Flavor::StTilde,
    })
}

/// `(U, V)`; `V` is obtained from `U` at the shift `(m-1, n-1)`.
pub fn coeff_uv_rational<S: Scalar>(shift: ShiftPair, c: &S, q: &S) -> Result<CoeffPair<RatFn<S>>> {
    Ok(CoeffPair {
        first: u_rational(shift, c, q)?,
        second: v_rational(shift, c, q)?,
        flavor: Flavor::Uv,
    })
}

pub fn coeff_st<S: Scalar>(shift: ShiftTriple, a: &S, c: &S, x: &S, q: &S) -> Result<CoeffPair<S>> {
    coeff_st_rational(shift, a, c, q)?.eval(x)
}

pub fn coeff_st_tilde<S: Scalar>(
    shift: ShiftTriple,
    a: &S,
    c: &S,
    x: &S,
    q: &S,
) -> Result<CoeffPair<S>> {
    coeff_st_tilde_rational(shift, a, c, q)?.eval(x)
}

pub fn coeff_uv<S: Scalar>(shift: ShiftPair, c: &S, x: &S, q: &S) -> Result<CoeffPair<S>> {
    coeff_uv_rational(shift, c, q)?.eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{rational, Rational};

    fn r(p: i64, q: i64) -> Rational {
        rational(p, q)
    }

    fn xs() -> Vec<Rational> {
        vec![r(1, 7), r(2, 9), r(3, 4), r(5, 11), r(13, 17)]
    }

    #[test]
    fn st_at_110() {
        let (a, c, q) = (r(1, 3), r(1, 5), r(1, 2));
        for x in xs() {
            let p = coeff_st(ShiftTriple::new(1, 1, 0), &a, &c, &x, &q).unwrap();
            assert_eq!(p.first, c.clone() - &(a.clone() * &x));
            assert_eq!(p.second, c.one_minus());
        }
    }

    #[test]
    fn identity_shifts() {
        let (a, c, q) = (r(2, 7), r(3, 11), r(1, 3));
        let x = r(4, 9);
        let st = coeff_st(ShiftTriple::new(1, 1, 1), &a, &c, &x, &q).unwrap();
        assert_eq!((st.first, st.second), (r(1, 1), r(0, 1)));
        let st2 = coeff_st_tilde(ShiftTriple::new(1, 1, 0), &a, &c, &x, &q).unwrap();
        assert_eq!((st2.first, st2.second), (r(1, 1), r(0, 1)));
        let uv = coeff_uv(ShiftPair::new(1, 1), &c, &x, &q).unwrap();
        assert_eq!((uv.first, uv.second), (r(1, 1), r(0, 1)));
        let uv = coeff_uv(ShiftPair::new(0, 0), &c, &x, &q).unwrap();
        assert_eq!((uv.first, uv.second), (r(0, 1), r(1, 1)));
    }

    #[test]
    fn uv_at_12() {
        let (c, q) = (r(3, 11), r(1, 3));
        for x in xs() {
            let p = coeff_uv(ShiftPair::new(1, 2), &c, &x, &q).unwrap();
            let den = c.clone() - &x;
            assert_eq!(p.first, den.clone().inv().unwrap());
            assert_eq!(p.second, -(c.one_minus() * &den.inv().unwrap()));
        }
    }
}

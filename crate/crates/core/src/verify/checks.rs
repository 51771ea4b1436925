//! One function per identity and mode. Exact checks compare cleared
//! formal series or rational functions; float checks return a relative residual.

use std::collections::HashMap;

use super::golden;
use super::sample::Draw;
use super::IdentityId;
use crate::contiguous::{
    coeff_st_rational, coeff_st_tilde_rational, coeff_uv_rational, div_named, CoeffPair, ShiftPair,
    ShiftTriple,
};
use crate::error::{Error, Result};
use crate::numerics::intform::{check_identity, IntSeries, Mismatch};
use crate::numerics::{
    refine, BigFloat, LaurentPoly, Precision, RatFn, Rational, Scalar, TruncatedSeries,
};
use crate::qbessel::{
    j2_recurrence_terms, j2_residual_formal, j3_recurrence_terms, j3_residual_formal, jackson_j,
    lommel_closed, r2, r3, BesselParams,
};
use crate::qcore::{
    phi_eval, phi_formal, phi_terminating, q_pochhammer, q_pochhammer_inf, PhiOpts, PhiSpec,
};

/// Result of an exact check: `None` when the identity holds.
pub(crate) type ExactOutcome = Option<Mismatch>;

fn triple(s: &[i64]) -> ShiftTriple {
    ShiftTriple::new(s[0], s[1], s[2])
}

fn pair(s: &[i64]) -> ShiftPair {
    ShiftPair::new(s[0], s[1])
}

fn unit() -> RatFn<Rational> {
    RatFn::constant(Rational::from(1))
}

/// First nonzero coefficient of `lhs - rhs`.
fn ratfn_mismatch(lhs: &RatFn<Rational>, rhs: &RatFn<Rational>) -> ExactOutcome {
    let diff = lhs.sub(rhs);
    let first = diff.numer.terms().next().map(|(&e, v)| Mismatch {
        index: e.max(0) as usize,
        value: v.clone(),
    });
    first
}

fn series_mismatch(
    lhs: &TruncatedSeries<Rational>,
    rhs: &TruncatedSeries<Rational>,
) -> Result<ExactOutcome> {
    let diff = lhs.sub(rhs)?;
    Ok(diff.first_nonzero().map(|index| Mismatch {
        index,
        value: diff.coeff(index).clone(),
    }))
}

/// Formal series shared by all shifts of one exact trial.
pub(crate) struct ExactTrial<'a> {
    draw: &'a Draw,
    order: usize,
    phi11: HashMap<(i64, i64), IntSeries>,
    phi01: HashMap<i64, IntSeries>,
}

impl<'a> ExactTrial<'a> {
    pub(crate) fn new(draw: &'a Draw, order: usize) -> Self {
        ExactTrial {
            draw,
            order,
            phi11: HashMap::new(),
            phi01: HashMap::new(),
        }
    }

    /// `1phi1(a q^k; c q^m; q, X)`.
    fn phi11(&mut self, k: i64, m: i64) -> Result<IntSeries> {
        if let Some(s) = self.phi11.get(&(k, m)) {
            return Ok(s.clone());
        }
        let d = self.draw;
        let spec = PhiSpec::new(
            vec![d.a.clone() * &d.q.powi(k)?],
            vec![d.c.clone() * &d.q.powi(m)?],
            d.q.clone(),
            Rational::from(1),
        );
        let s = IntSeries::from_series(&phi_formal(&spec, 1, self.order)?);
        self.phi11.insert((k, m), s.clone());
        Ok(s)
    }

    /// `0phi1(-; c q^m; q, X)`.
    fn phi01(&mut self, m: i64) -> Result<IntSeries> {
        if let Some(s) = self.phi01.get(&m) {
            return Ok(s.clone());
        }
        let d = self.draw;
        let spec = PhiSpec::new(
            vec![],
            vec![d.c.clone() * &d.q.powi(m)?],
            d.q.clone(),
            Rational::from(1),
        );
        let s = IntSeries::from_series(&phi_formal(&spec, 1, self.order)?);
        self.phi01.insert(m, s.clone());
        Ok(s)
    }

    pub(crate) fn check(&mut self, id: IdentityId, shifts: &[i64]) -> Result<ExactOutcome> {
        let d = self.draw;
        let q = &d.q;
        match id {
            IdentityId::Trr1phi1 | IdentityId::Trr1phi1Tilde => {
                let s = triple(shifts);
                let lhs = self.phi11(s.k, s.m)?.substitute_scale(&q.powi(s.n)?);
                let f0 = self.phi11(0, 0)?;
                let (pair, f1) = if id == IdentityId::Trr1phi1 {
                    let f1 = self.phi11(1, 1)?.substitute_scale(q);
                    (coeff_st_rational(s, &d.a, &d.c, q)?, f1)
                } else {
                    (
                        coeff_st_tilde_rational(s, &d.a, &d.c, q)?,
                        self.phi11(1, 1)?,
                    )
                };
                Ok(check_identity(&[
                    (unit(), &lhs),
                    (pair.first.neg(), &f1),
                    (pair.second.neg(), &f0),
                ]))
            }
            IdentityId::Trr0phi1 => {
                let s = pair(shifts);
                let lhs = self.phi01(s.m)?.substitute_scale(&q.powi(s.n)?);
                let g1 = self.phi01(1)?.substitute_scale(q);
                let g0 = self.phi01(0)?;
                let uv = coeff_uv_rational(s, &d.c, q)?;
                Ok(check_identity(&[
                    (unit(), &lhs),
                    (uv.first.neg(), &g1),
                    (uv.second.neg(), &g0),
                ]))
            }
            IdentityId::TrrJ3 => {
                let s = pair(shifts);
                j3_residual_formal(s.m, s.n, &d.t, q, self.order)
            }
            IdentityId::TrrJ2 => {
                let s = pair(shifts);
                j2_residual_formal(s.m, s.n, &d.t, q, self.order)
            }
            IdentityId::RelationSt
            | IdentityId::RelationTildeSt
            | IdentityId::RelationUv
            | IdentityId::SEqCaxStilde
            | IdentityId::Lommel2
            | IdentityId::Lommel3 => {
                for (lhs, rhs) in rational_sides(id, shifts, &d.a, &d.c, &d.t, q)? {
                    if let Some(m) = ratfn_mismatch(&lhs, &rhs) {
                        return Ok(Some(m));
                    }
                }
                Ok(None)
            }
            IdentityId::ChuVandermonde => {
                let (l, r) = chu_vandermonde(shifts[0], &d.a, &d.c, q)?;
                Ok(scalar_mismatch(&l, &r))
            }
            IdentityId::Lemma31 => {
                let (l, r) = lemma31_terminating(shifts, &d.c, &d.a, q)?;
                Ok(scalar_mismatch(&l, &r))
            }
            IdentityId::Special1phi1 => {
                let (l, r) = special_1phi1_terminating(shifts[0], q)?;
                Ok(scalar_mismatch(&l, &r))
            }
            IdentityId::Special0phi1 => {
                let spec = PhiSpec::new(vec![], vec![-q.clone()], q.clone(), Rational::from(1));
                let lhs = phi_formal(&spec, 1, self.order)?;
                series_mismatch(&lhs, &euler_series(q, self.order)?)
            }
            IdentityId::J1J2 => {
                let tq = d.t.clone() * q;
                let spec2 = PhiSpec::new(vec![], vec![tq.clone()], q.clone(), -tq.clone());
                let zero = Rational::from(0);
                let spec1 = PhiSpec::new(
                    vec![zero.clone(), zero],
                    vec![tq],
                    q.clone(),
                    Rational::from(-1),
                );
                let lhs = phi_formal(&spec2, 2, self.order)?;
                let rhs =
                    phi_formal(&spec1, 2, self.order)?.mul(&neg_y2_product(q, self.order)?)?;
                series_mismatch(&lhs, &rhs)
            }
        }
    }
}

fn scalar_mismatch(l: &Rational, r: &Rational) -> ExactOutcome {
    (l != r).then(|| Mismatch {
        index: 0,
        value: l.clone() - r,
    })
}

/// `(-x; q^2)_inf = sum_k q^{k(k-1)} x^k / (q^2; q^2)_k` through `x^order`.
fn euler_series(q: &Rational, order: usize) -> Result<TruncatedSeries<Rational>> {
    let q2 = q.clone() * q;
    let mut coeffs = Vec::with_capacity(order + 1);
    for k in 0..=order as i64 {
        coeffs.push(q.powi(k * (k - 1))? / q_pochhammer(&q2, &q2, k)?);
    }
    Ok(TruncatedSeries::from_coeffs((), order, coeffs))
}

/// `(-y^2; q)_inf = sum_k q^{k(k-1)/2} y^{2k} / (q; q)_k` through `y^order`.
fn neg_y2_product(q: &Rational, order: usize) -> Result<TruncatedSeries<Rational>> {
    let mut coeffs = vec![Rational::from(0); order + 1];
    for k in 0..=(order / 2) as i64 {
        coeffs[2 * k as usize] = q.powi(k * (k - 1) / 2)? / q_pochhammer(q, q, k)?;
    }
    Ok(TruncatedSeries::from_coeffs((), order, coeffs))
}

/// `(lhs, rhs)` pairs of rational functions that must coincide.
///
/// The relation ids are checked by composition: the shifted pair at
/// `(k-1, m-1, ..)` combined with the hand-written pair at `(2, 2, ..)`
/// must reproduce the pair at `(k, m, ..)`.
pub(crate) fn rational_sides<S: Scalar>(
    id: IdentityId,
    shifts: &[i64],
    a: &S,
    c: &S,
    t: &S,
    q: &S,
) -> Result<Vec<(RatFn<S>, RatFn<S>)>> {
    let compose =
        |outer: CoeffPair<RatFn<S>>, inner: CoeffPair<RatFn<S>>, lhs: CoeffPair<RatFn<S>>| {
            vec![
                (lhs.first, outer.first.mul(&inner.first).add(&outer.second)),
                (lhs.second, outer.first.mul(&inner.second)),
            ]
        };
    let (aq, cq) = (a.clone() * q, c.clone() * q);
    Ok(match id {
        IdentityId::RelationSt => {
            let s = triple(shifts);
            let outer =
                coeff_st_rational(ShiftTriple::new(s.k - 1, s.m - 1, s.n - 1), &aq, &cq, q)?;
            let outer = CoeffPair {
                first: outer.first.substitute_scale(q)?,
                second: outer.second.substitute_scale(q)?,
                flavor: outer.flavor,
            };
            compose(
                outer,
                golden::st_222(a, c, q),
                coeff_st_rational(s, a, c, q)?,
            )
        }
        IdentityId::RelationTildeSt => {
            let s = triple(shifts);
            let outer =
                coeff_st_tilde_rational(ShiftTriple::new(s.k - 1, s.m - 1, s.n), &aq, &cq, q)?;
            compose(
                outer,
                golden::st_tilde_220(a, c, q),
                coeff_st_tilde_rational(s, a, c, q)?,
            )
        }
        IdentityId::RelationUv => {
            let s = pair(shifts);
            let outer = coeff_uv_rational(ShiftPair::new(s.m - 1, s.n - 1), &cq, q)?;
            let outer = CoeffPair {
                first: outer.first.substitute_scale(q)?,
                second: outer.second.substitute_scale(q)?,
                flavor: outer.flavor,
            };
            compose(outer, golden::uv_22(c, q), coeff_uv_rational(s, c, q)?)
        }
        IdentityId::SEqCaxStilde => {
            let s = triple(shifts);
            let st = coeff_st_rational(s, a, c, q)?;
            let tilde = coeff_st_tilde_rational(s, a, c, q)?;
            let cax = LaurentPoly::from_terms([(0, c.clone()), (1, -a.clone())]);
            let t_rhs = tilde.first.scale(&c.one_minus()).add(&tilde.second);
            vec![(st.first, tilde.first.mul_numer(&cax)), (st.second, t_rhs)]
        }
        IdentityId::Lommel2 => vec![(
            r2(shifts[0], 0, t, q)?.value,
            lommel_closed(2, shifts[0], t, q)?.value,
        )],
        IdentityId::Lommel3 => vec![(
            r3(shifts[0], 0, t, q)?.value,
            lommel_closed(3, shifts[0], t, q)?.value,
        )],
        _ => unreachable!("{id} is not a rational-function identity"),
    })
}

/// Both sides of `2phi1(q^{-j}, b; c; q, c q^j / b) = (c/b; q)_j / (c; q)_j`.
fn chu_vandermonde<S: Scalar>(j: i64, b: &S, c: &S, q: &S) -> Result<(S, S)> {
    let z = crate::contiguous::div_named(c.clone() * &q.powi(j)?, b, "b")?;
    let lhs = phi_terminating(j, std::slice::from_ref(b), std::slice::from_ref(c), q, &z)?;
    let cb = crate::contiguous::div_named(c.clone(), b, "b")?;
    let rhs =
        crate::contiguous::div_named(q_pochhammer(&cb, q, j)?, &q_pochhammer(c, q, j)?, "(c;q)_j")?;
    Ok((lhs, rhs))
}

/// Lemma shifts are `[r, j, n1, s]`; `r = 0` drops the `c1` parameters.
struct LemmaShape {
    r: i64,
    j: i64,
    n1: i64,
    s: i64,
}

fn lemma_shape(shifts: &[i64]) -> LemmaShape {
    LemmaShape {
        r: shifts[0],
        j: shifts[1],
        n1: shifts[2],
        s: shifts[3],
    }
}

/// The right-hand side's finite part: everything except the infinite-product ratio.
fn lemma_rhs_finite<S: Scalar>(l: &LemmaShape, b1: &S, b2: &S, c1: &S, q: &S) -> Result<S> {
    use crate::contiguous::div_named;
    let b2q = b2.clone() * q;
    let mut pre = div_named(
        q_pochhammer(&b2q, q, l.j)?,
        &q_pochhammer(q, q, l.j)?,
        "(q;q)_j",
    )?;
    let mut upper = vec![b2.clone()];
    let mut lower = vec![div_named(b2q.clone(), b1, "b1")?];
    let mut exp = -l.j + l.s;
    if l.r == 1 {
        let c1b2 = div_named(c1.clone(), b2, "b2")?;
        pre = div_named(
            pre * &q_pochhammer(&c1b2, q, l.n1)?,
            &q_pochhammer(c1, q, l.n1)?,
            "(c1;q)_n1",
        )?;
        upper.push(div_named(b2q.clone(), c1, "c1")?);
        lower.push(div_named(b2q * &q.powi(-l.n1)?, c1, "c1")?);
        exp += l.n1;
    }
    pre *= &b2.powi(exp)?;
    Ok(pre * &phi_terminating(l.j, &upper, &lower, q, &q.powi(l.s + 1)?)?)
}

fn lemma_lhs_params<S: Scalar>(l: &LemmaShape, b2: &S, c1: &S, q: &S) -> Result<(Vec<S>, Vec<S>)> {
    let mut upper = vec![b2.clone()];
    let mut lower = vec![b2.clone() * &q.powi(l.j + 1)?];
    if l.r == 1 {
        upper.push(c1.clone() * &q.powi(l.n1)?);
        lower.push(c1.clone());
    }
    Ok((upper, lower))
}

/// Exact instance with `b1 = q^{-M}`, `M = n1 + s + 1`, which terminates the left side
/// and turns the infinite products into `(q;q)_M / (b2 q; q)_M`.
fn lemma31_terminating(
    shifts: &[i64],
    b2: &Rational,
    c1: &Rational,
    q: &Rational,
) -> Result<(Rational, Rational)> {
    let l = lemma_shape(shifts);
    let big_m = l.n1 + l.s + 1;
    let b1 = q.powi(-big_m)?;
    let (upper, lower) = lemma_lhs_params(&l, b2, c1, q)?;
    let z = q.powi(big_m + l.j + 1 - l.n1 - l.s)?;
    let lhs = phi_terminating(big_m, &upper, &lower, q, &z)?;
    let ratio = q_pochhammer(q, q, big_m)? / q_pochhammer(&(b2.clone() * q), q, big_m)?;
    let rhs = ratio * lemma_rhs_finite(&l, &b1, b2, c1, q)?;
    Ok((lhs, rhs))
}

/// `1phi1(q^{-M}; 0; q, -q)` against `(q^{1-M}; q^2)_inf / (q; q^2)_inf`, which is
/// `0` for odd `M` and `(q^{1-M}; q^2)_{M/2}` for even `M`.
fn special_1phi1_terminating(big_m: i64, q: &Rational) -> Result<(Rational, Rational)> {
    let zero = Rational::from(0);
    let lhs = phi_terminating(big_m, &[], &[zero], q, &-q.clone())?;
    let rhs = if big_m % 2 == 1 {
        Rational::from(0)
    } else {
        q_pochhammer(&q.powi(1 - big_m)?, &(q.clone() * q), big_m / 2)?
    };
    Ok((lhs, rhs))
}

/// Float parameters of one trial.
pub(crate) struct FloatDraw {
    pub a: BigFloat,
    pub c: BigFloat,
    pub x: BigFloat,
    pub q: BigFloat,
    pub t: BigFloat,
}

impl FloatDraw {
    pub(crate) fn new(d: &Draw, p: Precision) -> Self {
        let f = |r: &Rational| BigFloat::from_rational(p, r);
        FloatDraw {
            a: f(&d.a),
            c: f(&d.c),
            x: f(&d.x),
            q: f(&d.q),
            t: f(&d.t),
        }
    }
}

fn max_abs(vals: &[&BigFloat]) -> BigFloat {
    let mut m = BigFloat::one(vals[0].ctx());
    for v in vals {
        let a = v.abs();
        if a > m {
            m = a;
        }
    }
    m
}

/// `|l - r| / max(|l|, |r|, 1)`.
fn two_sided(l: &BigFloat, r: &BigFloat) -> BigFloat {
    (l.clone() - r).abs() / &max_abs(&[l, r])
}

/// `|sum| / max(|term_i|, 1)`.
fn three_term(terms: &[BigFloat; 3]) -> BigFloat {
    let sum = terms[0].clone() + &terms[1] + &terms[2];
    sum.abs() / &max_abs(&[&terms[0], &terms[1], &terms[2]])
}

fn phi(upper: Vec<BigFloat>, lower: Vec<BigFloat>, q: &BigFloat, x: BigFloat) -> Result<BigFloat> {
    Ok(phi_eval(
        &PhiSpec::new(upper, lower, q.clone(), x),
        &PhiOpts::default(),
    )?
    .value)
}

/// The quantities compared by `id`: three terms summing to zero, or
/// `(lhs, rhs)` pairs laid out flat.
fn float_values(id: IdentityId, shifts: &[i64], d: &FloatDraw) -> Result<Vec<BigFloat>> {
    let (a, c, x, q, t) = (&d.a, &d.c, &d.x, &d.q, &d.t);
    let qp = |e: i64| q.powi(e).map_err(Error::from);
    match id {
        IdentityId::Trr1phi1 | IdentityId::Trr1phi1Tilde => {
            let s = triple(shifts);
            let lhs = phi(
                vec![a.clone() * &qp(s.k)?],
                vec![c.clone() * &qp(s.m)?],
                q,
                x.clone() * &qp(s.n)?,
            )?;
            let (pair, x1) = if id == IdentityId::Trr1phi1 {
                (coeff_st_rational(s, a, c, q)?, x.clone() * q)
            } else {
                (coeff_st_tilde_rational(s, a, c, q)?, x.clone())
            };
            let f1 = phi(vec![a.clone() * q], vec![c.clone() * q], q, x1)?;
            let f0 = phi(vec![a.clone()], vec![c.clone()], q, x.clone())?;
            let p = pair.eval(x)?;
            Ok(vec![lhs, -(p.first * &f1), -(p.second * &f0)])
        }
        IdentityId::Trr0phi1 => {
            let s = pair(shifts);
            let lhs = phi(
                vec![],
                vec![c.clone() * &qp(s.m)?],
                q,
                x.clone() * &qp(s.n)?,
            )?;
            let g1 = phi(vec![], vec![c.clone() * q], q, x.clone() * q)?;
            let g0 = phi(vec![], vec![c.clone()], q, x.clone())?;
            let p = coeff_uv_rational(s, c, q)?.eval(x)?;
            Ok(vec![lhs, -(p.first * &g1), -(p.second * &g0)])
        }
        IdentityId::TrrJ3 => {
            let s = pair(shifts);
            Ok(j3_recurrence_terms(s.m, s.n, t, x, q, &PhiOpts::default())?.to_vec())
        }
        IdentityId::TrrJ2 => {
            let s = pair(shifts);
            Ok(j2_recurrence_terms(s.m, s.n, t, x, q, &PhiOpts::default())?.to_vec())
        }
        IdentityId::RelationSt
        | IdentityId::RelationTildeSt
        | IdentityId::RelationUv
        | IdentityId::SEqCaxStilde
        | IdentityId::Lommel2
        | IdentityId::Lommel3 => {
            let mut out = Vec::new();
            for (lhs, rhs) in rational_sides(id, shifts, a, c, t, q)? {
                out.push(lhs.eval(x)?);
                out.push(rhs.eval(x)?);
            }
            Ok(out)
        }
        IdentityId::ChuVandermonde => {
            let (l, r) = chu_vandermonde(shifts[0], a, c, q)?;
            Ok(vec![l, r])
        }
        IdentityId::Lemma31 => {
            let l = lemma_shape(shifts);
            let (b2, c1) = (c, a);
            let b1 = div_named(qp(l.j + 1 - l.n1 - l.s)?, x, "x")?;
            let (mut upper, lower) = lemma_lhs_params(&l, b2, c1, q)?;
            upper.insert(0, b1.clone());
            let lhs = phi(upper, lower, q, x.clone())?;
            let qb1 = q.clone() / &b1;
            let num = q_pochhammer_inf(q, q)? * &q_pochhammer_inf(&(b2.clone() * q / &b1), q)?;
            let den = q_pochhammer_inf(&qb1, q)? * &q_pochhammer_inf(&(b2.clone() * q), q)?;
            let rhs =
                div_named(num, &den, "(q/b1; q)_inf")? * &lemma_rhs_finite(&l, &b1, b2, c1, q)?;
            Ok(vec![lhs, rhs])
        }
        IdentityId::Special1phi1 => {
            let zero = BigFloat::zero(q.ctx());
            let lhs = phi(vec![a.clone()], vec![zero], q, -q.clone())?;
            let q2 = q.clone() * q;
            let rhs = q_pochhammer_inf(&(a.clone() * q), &q2)? / &q_pochhammer_inf(q, &q2)?;
            Ok(vec![lhs, rhs])
        }
        IdentityId::Special0phi1 => {
            let lhs = phi(vec![], vec![-q.clone()], q, x.clone())?;
            let rhs = q_pochhammer_inf(&-x.clone(), &(q.clone() * q))?;
            Ok(vec![lhs, rhs])
        }
        IdentityId::J1J2 => {
            let nu = t.ln() / &q.ln();
            let params = |kind| BesselParams {
                kind,
                nu: nu.clone(),
                x: x.clone(),
                q: q.clone(),
            };
            let j1 = jackson_j(&params(1), &PhiOpts::default())?;
            let j2 = jackson_j(&params(2), &PhiOpts::default())?;
            let y = x.clone() / &BigFloat::from_i64(x.ctx(), 2);
            let factor = q_pochhammer_inf(&-(y.clone() * &y), q)?;
            Ok(vec![j2, factor * &j1])
        }
    }
}

fn is_three_term(id: IdentityId) -> bool {
    matches!(
        id,
        IdentityId::Trr1phi1
            | IdentityId::Trr1phi1Tilde
            | IdentityId::Trr0phi1
            | IdentityId::TrrJ3
            | IdentityId::TrrJ2
    )
}

/// Relative residual of `id` at one float trial.
///
/// Every compared quantity is evaluated to `prec` correct bits through
/// [`refine`] from the exact draw; the residual is then formed at `prec`.
pub(crate) fn check_float(
    id: IdentityId,
    shifts: &[i64],
    draw: &Draw,
    prec: Precision,
) -> Result<BigFloat> {
    let v = refine(prec, |p| float_values(id, shifts, &FloatDraw::new(draw, p)))?;
    if is_three_term(id) {
        return Ok(three_term(&[v[0].clone(), v[1].clone(), v[2].clone()]));
    }
    let mut worst = BigFloat::zero(prec);
    for pair in v.chunks(2) {
        let r = two_sided(&pair[0], &pair[1]);
        if r > worst {
            worst = r;
        }
    }
    Ok(worst)
}

//! Closed-form coefficient pairs at small shifts, written out by hand.

use crate::contiguous::{CoeffPair, Flavor};
use crate::numerics::{LaurentPoly, RatFn, Scalar};

fn lin<S: Scalar>(c0: S, c1: S) -> LaurentPoly<S> {
    LaurentPoly::from_terms([(0, c0), (1, c1)])
}

fn one<S: Scalar>(q: &S) -> S {
    q.one_like()
}

/// `(c - ax, 1 - c)` at `(1, 1, 0)`.
pub fn st_110<S: Scalar>(a: &S, c: &S) -> CoeffPair<RatFn<S>> {
    CoeffPair {
        first: RatFn::poly(lin(c.clone(), -a.clone())),
        second: RatFn::constant(c.one_minus()),
        flavor: Flavor::St,
    }
}

/// `(S, T)` at `(2, 2, 2)`.
pub fn st_222<S: Scalar>(a: &S, c: &S, q: &S) -> CoeffPair<RatFn<S>> {
    let (aq, cq) = (a.clone() * q, c.clone() * q);
    let den = lin(c.clone(), -aq.clone()).scale(&(aq.one_minus() * q));
    let bracket = lin(c.one_minus(), -(one(q) - a - &aq));
    CoeffPair {
        first: RatFn::new(bracket.scale(&cq.one_minus()).shift(-1), vec![den.clone()]),
        second: RatFn::new(
            LaurentPoly::monomial(-(c.one_minus() * &cq.one_minus()), -1),
            vec![den],
        ),
        flavor: Flavor::St,
    }
}

/// `(S, T)` at `(2, 2, 0)`.
pub fn st_220<S: Scalar>(a: &S, c: &S, q: &S) -> CoeffPair<RatFn<S>> {
    let (aq, cq) = (a.clone() * q, c.clone() * q);
    let den = LaurentPoly::constant(aq.one_minus());
    let first = lin(c.clone(), -a.clone())
        .mul(&lin(c.one_minus() * q, one(q)))
        .scale(&cq.one_minus())
        .shift(-1);
    let second = lin(cq.clone(), -one(q))
        .scale(&-(c.one_minus() * &cq.one_minus()))
        .shift(-1);
    CoeffPair {
        first: RatFn::new(first, vec![den.clone()]),
        second: RatFn::new(second, vec![den]),
        flavor: Flavor::St,
    }
}

/// `(S~, T~)` at `(2, 2, 0)`.
pub fn st_tilde_220<S: Scalar>(a: &S, c: &S, q: &S) -> CoeffPair<RatFn<S>> {
    let (aq, cq) = (a.clone() * q, c.clone() * q);
    let den = LaurentPoly::constant(aq.one_minus());
    let first = lin(c.one_minus() * q, one(q))
        .scale(&cq.one_minus())
        .shift(-1);
    let second = LaurentPoly::monomial(-(c.one_minus() * &cq.one_minus() * q), -1);
    CoeffPair {
        first: RatFn::new(first, vec![den.clone()]),
        second: RatFn::new(second, vec![den]),
        flavor: Flavor::StTilde,
    }
}

/// `(c - x, 1 - c)` at `(1, 2)`.
pub fn uv_12<S: Scalar>(c: &S) -> CoeffPair<RatFn<S>> {
    CoeffPair {
        first: RatFn::poly(lin(c.clone(), -c.one_like())),
        second: RatFn::constant(c.one_minus()),
        flavor: Flavor::Uv,
    }
}

/// `(U, V)` at `(2, 2)`.
pub fn uv_22<S: Scalar>(c: &S, q: &S) -> CoeffPair<RatFn<S>> {
    let k = c.one_minus() * &(c.clone() * q).one_minus();
    CoeffPair {
        first: RatFn::poly(LaurentPoly::monomial(-k.clone(), -1)),
        second: RatFn::poly(LaurentPoly::monomial(k, -1)),
        flavor: Flavor::Uv,
    }
}

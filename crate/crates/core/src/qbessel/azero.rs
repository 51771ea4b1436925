//! `P11` and `S~` evaluated so that `a = 0` is an ordinary point.
//!
//! The families `B` and `A~` carry `c/a` in an upper and a lower parameter at
//! once; those pairs are summed as [`ScaledPair`]s. `B~` carries `(q/a;q)_j a^j`,
//! which is expanded to `prod (a - q^{i+1})`.

use crate::contiguous::{div_named, ShiftTriple};
use crate::error::Result;
use crate::numerics::{LaurentPoly, RatFn, Scalar};
use crate::qcore::{phi_terminating, phi_terminating_scaled, q_pochhammer, ScaledPair};

struct Params<'a, S> {
    k: i64,
    m: i64,
    n: i64,
    a: &'a S,
    c: &'a S,
    q: &'a S,
}

impl<S: Scalar> Params<'_, S> {
    fn qp(&self, e: i64) -> Result<S> {
        Ok(self.q.powi(e)?)
    }

    fn a_common(&self, i: i64, j: i64) -> Result<S> {
        let (c, q, m, n) = (self.c, self.q, self.m, self.n);
        let aqc = div_named(self.a.clone() * q, c, "c")?;
        let cq = div_named(c.clone(), q, "q")?;
        let num =
            q_pochhammer(&aqc, q, i)? * &q_pochhammer(c, q, m)? * &q_pochhammer(&cq, q, m - j)?;
        let v = div_named(num, &q_pochhammer(q, q, j)?, "(q;q)_j")?;
        Ok(v * &c.powi(-n)? * &self.qp((j - m + 1) * (n - 1) + 1)?)
    }

    fn b_common(&self, j: i64) -> Result<S> {
        let q2c = div_named(self.q.clone() * self.q, self.c, "c")?;
        let den = q_pochhammer(self.q, self.q, j)? * &q_pochhammer(&q2c, self.q, j)?;
        div_named(self.c.powi(-j)?, &den, "(q;q)_j (q^2/c;q)_j")
    }

    fn coeff_a(&self, j: i64) -> Result<S> {
        let (a, c, q, k, m, n) = (self.a, self.c, self.q, self.k, self.m, self.n);
        let pre = div_named(
            self.a_common(k - m, j)?,
            &q_pochhammer(a, q, k - j)?,
            "(a;q)_{k-j}",
        )?;
        let phi = phi_terminating(
            j,
            &[c.clone() * &self.qp(m - j - 1)?, a.clone()],
            &[c.clone(), a.clone() * &self.qp(k - j)?],
            q,
            &self.qp(j - n + 1)?,
        )?;
        Ok(pre * &phi)
    }

    fn coeff_a_tilde(&self, j: i64) -> Result<S> {
        let (a, c, q, k, m, n) = (self.a, self.c, self.q, self.k, self.m, self.n);
        let pre = div_named(
            self.a_common(j + k - m, j)?,
            &q_pochhammer(a, q, k)?,
            "(a;q)_k",
        )?;
        let pair = ScaledPair {
            u: c.clone(),
            v: c.clone() * &self.qp(m - k - j)?,
            a: a.clone(),
        };
        let phi = phi_terminating_scaled(
            j as u64,
            &[c.clone() * &self.qp(m - j - 1)?],
            &[pair],
            std::slice::from_ref(c),
            q,
            &self.qp(m - k - n + 1)?,
        )?;
        Ok(pre * &phi)
    }

    fn coeff_b(&self, j: i64) -> Result<S> {
        let (a, c, q, k, m, n) = (self.a, self.c, self.q, self.k, self.m, self.n);
        let aqc = div_named(a.clone() * q, c, "c")?;
        let mut pre = q_pochhammer(&aqc, q, j)? * &self.b_common(j)? * &self.qp(j * (j + 1) / 2)?;
        if j % 2 == 1 {
            pre = -pre;
        }
        let pair = ScaledPair {
            u: c.clone() * &self.qp(m - k)?,
            v: c.clone() * &self.qp(-j)?,
            a: a.clone(),
        };
        let phi = phi_terminating_scaled(
            j as u64,
            &[c.clone() * &self.qp(-j - 1)?],
            &[pair],
            &[c.clone() * &self.qp(m)?],
            q,
            &self.qp(k - m + n + 1)?,
        )?;
        Ok(pre * &phi)
    }

    fn coeff_b_tilde(&self, j: i64) -> Result<S> {
        let (a, c, q, k, m, n) = (self.a, self.c, self.q, self.k, self.m, self.n);
        let mut pre = self.b_common(j)?;
        let mut qi = q.clone();
        for _ in 0..j {
            pre *= &(a.clone() - &qi);
            qi *= q;
        }
        let phi = phi_terminating(
            j,
            &[c.clone() * &self.qp(-j - 1)?, a.clone() * &self.qp(k)?],
            &[c.clone() * &self.qp(m)?, a.clone() * &self.qp(-j)?],
            q,
            &self.qp(j + n + 1)?,
        )?;
        Ok(pre * &phi)
    }
}

/// `P11(k, m, n; a, c, x; q)`, finite and continuous at `a = 0`.
pub fn p11_scaled<S: Scalar>(shift: ShiftTriple, a: &S, c: &S, q: &S) -> Result<LaurentPoly<S>> {
    let p = Params {
        k: shift.k,
        m: shift.m,
        n: shift.n,
        a,
        c,
        q,
    };
    let (lo, hi) = (shift.m.min(0), shift.m.max(0));
    let zero = a.zero_like();
    let mut out = LaurentPoly::zero();
    for j in 0..=shift.d() {
        let (ja, jb) = (j + lo, j - hi);
        let coeff = if shift.excess() >= 0 {
            let x = if ja < 0 { zero.clone() } else { p.coeff_a(ja)? };
            let y = if jb < 0 { zero.clone() } else { p.coeff_b(jb)? };
            x - &y
        } else {
            let x = if ja < 0 {
                zero.clone()
            } else {
                p.coeff_a_tilde(ja)?
            };
            let y = if jb < 0 {
                zero.clone()
            } else {
                p.coeff_b_tilde(jb)?
            };
            x - &y
        };
        out.add_term(j, coeff);
    }
    Ok(out)
}

/// `S~(k, m, n; a, c, x; q)` as a rational function of `x`, through [`p11_scaled`].
pub fn s_tilde_scaled<S: Scalar>(shift: ShiftTriple, a: &S, c: &S, q: &S) -> Result<RatFn<S>> {
    let pre = div_named(
        a.one_minus(),
        &((q.clone() - c) * &c.one_minus()),
        "(q - c)(1 - c)",
    )?;
    let numer = p11_scaled(shift, a, c, q)?
        .shift(1 - shift.m.max(0))
        .scale(&pre);
    let mut denom = Vec::new();
    if !a.is_zero() {
        let mut l = div_named(a.clone(), c, "c")?;
        for _ in 0..shift.excess().max(0) {
            denom.push(LaurentPoly::from_terms([
                (0, l.one_like()),
                (1, -l.clone()),
            ]));
            l *= q;
        }
    }
    Ok(RatFn::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contiguous::{p11, s_tilde_rational};
    use crate::numerics::{rational, Rational};
    use crate::qbessel::polys::{a3, b3, p3};
    use crate::qcore::q_pochhammer;

    fn r(p: i64, q: i64) -> Rational {
        rational(p, q)
    }

    #[test]
    fn agrees_with_direct_path() {
        let (a, c, q) = (r(2, 7), r(3, 11), r(1, 3));
        for k in -3..=3 {
            for m in -3..=3 {
                for n in -3..=3 {
                    let s = ShiftTriple::new(k, m, n);
                    assert_eq!(
                        p11_scaled(s, &a, &c, &q).unwrap(),
                        p11(s, &a, &c, &q).unwrap()
                    );
                }
            }
        }
        let s = ShiftTriple::new(2, -1, 1);
        let one = r(1, 1);
        assert!(s_tilde_scaled(s, &a, &c, &q)
            .unwrap()
            .same_function(&s_tilde_rational(s, &a, &c, &q).unwrap(), one));
    }

    #[test]
    fn families_reduce_to_bessel_ones() {
        let (t, q) = (r(5, 13), r(2, 7));
        let zero = r(0, 1);
        for (k, m, n) in [(0, 2, 1), (3, 1, -2), (1, -2, 2), (-1, 3, 0)] {
            let p = Params {
                k,
                m,
                n,
                a: &zero,
                c: &t,
                q: &q,
            };
            for j in 0..4 {
                let a_3 = a3(m, n, j, &t, &q).unwrap();
                let b_3 = b3(m, n, j, &t, &q).unwrap();
                assert_eq!(p.coeff_a(j).unwrap(), a_3);
                assert_eq!(p.coeff_a_tilde(j).unwrap(), a_3);
                assert_eq!(p.coeff_b(j).unwrap(), b_3);
                assert_eq!(p.coeff_b_tilde(j).unwrap(), b_3);
            }
        }
    }

    #[test]
    fn k_independent_and_matches_p3() {
        let (t, q) = (r(5, 13), r(2, 7));
        let zero = r(0, 1);
        let y = r(3, 5);
        let x = y.clone() * &y * &q;
        for m in -2..=2 {
            for n in -2..=2 {
                let big_m = m.max(0);
                let tq = t.clone() / &q;
                let want = p3(m, n, &t, &q).unwrap().eval(&y).unwrap()
                    * &y.powi(2 - 2 * big_m).unwrap()
                    * &q.powi(-big_m).unwrap()
                    / q_pochhammer(&tq, &q, 2).unwrap();
                for k in 0..=3 {
                    let s = s_tilde_scaled(ShiftTriple::new(k, m, n), &zero, &t, &q).unwrap();
                    assert_eq!(s.eval(&x).unwrap(), want, "k={k} m={m} n={n}");
                }
            }
        }
    }
}

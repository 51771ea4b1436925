use super::{div_named, ShiftTriple};
use crate::error::{Error, Result};
use crate::numerics::{LaurentPoly, Scalar};
use crate::qcore::{phi_terminating, q_pochhammer};

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

    /// `(aq/c;q)_i (c;q)_m (c/q;q)_{m-j} / (q;q)_j * c^{-n} q^{(j-m+1)(n-1)+1}`,
    /// the part shared by `A` and `A~`.
    fn a_common(&self, i: i64, j: i64) -> Result<S> {
        let (c, q, m, n) = (self.c, self.q, self.m, self.n);
        let aqc = div_named(self.a.clone() * q, c, "c")?;
        let cq = div_named(c.clone(), q, "q")?;
        let num =
            q_pochhammer(&aqc, q, i)? * &q_pochhammer(c, q, m)? * &q_pochhammer(&cq, q, m - j)?;
        let den = q_pochhammer(q, q, j)?;
        let mut v = div_named(num, &den, "(q;q)_j")?;
        v *= &c.powi(-n)?;
        v *= &self.qp((j - m + 1) * (n - 1) + 1)?;
        Ok(v)
    }

    fn coeff_a(&self, j: i64) -> Result<S> {
        if j < 0 {
            return Ok(self.a.zero_like());
        }
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
        if j < 0 {
            return Ok(self.a.zero_like());
        }
        let (a, c, q, k, m, n) = (self.a, self.c, self.q, self.k, self.m, self.n);
        let pre = div_named(
            self.a_common(j + k - m, j)?,
            &q_pochhammer(a, q, k)?,
            "(a;q)_k",
        )?;
        let ca = div_named(c.clone(), a, "a")?;
        let phi = phi_terminating(
            j,
            &[c.clone() * &self.qp(m - j - 1)?, ca.clone()],
            &[c.clone(), ca * &self.qp(m - k - j)?],
            q,
            &self.qp(m - k - n + 1)?,
        )?;
        Ok(pre * &phi)
    }

    /// `1 / ((q;q)_j (q^2/c;q)_j)`.
    fn b_denominator(&self, j: i64) -> Result<S> {
        let q2c = div_named(self.q.clone() * self.q, self.c, "c")?;
        let den = q_pochhammer(self.q, self.q, j)? * &q_pochhammer(&q2c, self.q, j)?;
        div_named(self.q.one_like(), &den, "(q;q)_j (q^2/c;q)_j")
    }

    fn coeff_b(&self, j: i64) -> Result<S> {
        if j < 0 {
            return Ok(self.a.zero_like());
        }
        let (a, c, q, k, m, n) = (self.a, self.c, self.q, self.k, self.m, self.n);
        let aqc = div_named(a.clone() * q, c, "c")?;
        let mut pre = q_pochhammer(&aqc, q, j)? * &self.b_denominator(j)?;
        pre *= &c.powi(-j)?;
        pre *= &self.qp(j * (j + 1) / 2)?;
        if j % 2 == 1 {
            pre = -pre;
        }
        let ca = div_named(c.clone(), a, "a")?;
        let phi = phi_terminating(
            j,
            &[c.clone() * &self.qp(-j - 1)?, ca.clone() * &self.qp(m - k)?],
            &[c.clone() * &self.qp(m)?, ca * &self.qp(-j)?],
            q,
            &self.qp(k - m + n + 1)?,
        )?;
        Ok(pre * &phi)
    }

    fn coeff_b_tilde(&self, j: i64) -> Result<S> {
        if j < 0 {
            return Ok(self.a.zero_like());
        }
        let (a, c, q, k, m, n) = (self.a, self.c, self.q, self.k, self.m, self.n);
        let qa = div_named(q.clone(), a, "a")?;
        let mut pre = q_pochhammer(&qa, q, j)? * &self.b_denominator(j)?;
        pre *= &a.powi(j)?;
        pre *= &c.powi(-j)?;
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

/// Coefficient of `x^j` in the defining sum of `P11`, read for any `j >= 0`;
/// it vanishes for `j > d`.
pub fn p11_coeff<S: Scalar>(shift: ShiftTriple, j: i64, a: &S, c: &S, q: &S) -> Result<S> {
    if a.is_zero() {
        return Err(Error::Domain(
            "P11 at a = 0 needs the scaled-pair evaluation".into(),
        ));
    }
    let p = Params {
        k: shift.k,
        m: shift.m,
        n: shift.n,
        a,
        c,
        q,
    };
    let (lo, hi) = (shift.m.min(0), shift.m.max(0));
    if shift.excess() >= 0 {
        Ok(p.coeff_a(j + lo)? - p.coeff_b(j - hi)?)
    } else {
        Ok(p.coeff_a_tilde(j + lo)? - p.coeff_b_tilde(j - hi)?)
    }
}

/// The polynomial `P11(k, m, n; a, c, x; q)` of degree at most `d`.
///
/// The branch `k - m + n >= 0` uses `A, B`; otherwise `A~, B~`. Coefficients
/// with a negative index vanish. `a = 0` is refused: the families contain
/// `c/a`, and the removable singularity there is handled in `qbessel`.
pub fn p11<S: Scalar>(shift: ShiftTriple, a: &S, c: &S, q: &S) -> Result<LaurentPoly<S>> {
    let mut out = LaurentPoly::zero();
    for j in 0..=shift.d() {
        out.add_term(j, p11_coeff(shift, j, a, c, q)?);
    }
    Ok(out)
}

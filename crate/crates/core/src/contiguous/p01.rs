use super::{div_named, ShiftPair};
use crate::error::Result;
use crate::numerics::{LaurentPoly, Scalar};
use crate::qcore::{phi_terminating, q_pochhammer, q_pochhammer_recip};

struct Params<'a, S> {
    m: i64,
    n: i64,
    c: &'a S,
    q: &'a S,
}

impl<S: Scalar> Params<'_, S> {
    fn qp(&self, e: i64) -> Result<S> {
        Ok(self.q.powi(e)?)
    }

    fn q2c(&self) -> Result<S> {
        div_named(self.q.clone() * self.q, self.c, "c")
    }

    /// `(c;q)_m / ((q;q)_j (q^2/c;q)_{j-m})`.
    fn a_prefactor(&self, j: i64) -> Result<S> {
        let (c, q, m) = (self.c, self.q, self.m);
        let num = q_pochhammer(c, q, m)? * &q_pochhammer_recip(&self.q2c()?, q, j - m)?;
        div_named(num, &q_pochhammer(q, q, j)?, "(q;q)_j")
    }

    /// `1 / ((q;q)_j (q^2/c;q)_j)`.
    fn b_prefactor(&self, j: i64) -> Result<S> {
        let q = self.q;
        let den = q_pochhammer(q, q, j)? * &q_pochhammer(&self.q2c()?, q, j)?;
        div_named(q.one_like(), &den, "(q;q)_j (q^2/c;q)_j")
    }

    fn a_series(&self, j: i64, z: S) -> Result<S> {
        let c = self.c;
        phi_terminating(
            j,
            &[c.clone() * &self.qp(self.m - j - 1)?],
            std::slice::from_ref(c),
            self.q,
            &z,
        )
    }

    fn b_series(&self, j: i64, z: S) -> Result<S> {
        let c = self.c;
        phi_terminating(
            j,
            &[c.clone() * &self.qp(-j - 1)?],
            &[c.clone() * &self.qp(self.m)?],
            self.q,
            &z,
        )
    }

    fn coeff_a(&self, j: i64) -> Result<S> {
        if j < 0 {
            return Ok(self.c.zero_like());
        }
        let (c, m, n) = (self.c, self.m, self.n);
        let pre =
            self.a_prefactor(j)? * &c.powi(2 * m - n - j)? * &self.qp((j - m + 1) * (n - m))?;
        Ok(pre * &self.a_series(j, self.qp(2 * j - n + 1)?)?)
    }

    fn coeff_a_tilde(&self, j: i64) -> Result<S> {
        if j < 0 {
            return Ok(self.c.zero_like());
        }
        let (c, m, n) = (self.c, self.m, self.n);
        let pre = self.a_prefactor(j)?
            * &c.powi(2 * m - n - 2 * j)?
            * &self.qp((j - m + 1) * (j - m + n))?;
        Ok(pre * &self.a_series(j, self.qp(m - n + 1)?)?)
    }

    fn coeff_b(&self, j: i64) -> Result<S> {
        if j < 0 {
            return Ok(self.c.zero_like());
        }
        let pre = self.b_prefactor(j)? * &self.c.powi(-2 * j)? * &self.qp(j * (j + 1))?;
        Ok(pre * &self.b_series(j, self.qp(self.n - self.m + 1)?)?)
    }

    fn coeff_b_tilde(&self, j: i64) -> Result<S> {
        if j < 0 {
            return Ok(self.c.zero_like());
        }
        let pre = self.b_prefactor(j)? * &self.c.powi(-j)?;
        Ok(pre * &self.b_series(j, self.qp(2 * j + self.n + 1)?)?)
    }
}

/// Coefficient of `x^j` in the defining sum of `P01`, read for any `j >= 0`;
/// it vanishes for `j > e`.
pub fn p01_coeff<S: Scalar>(shift: ShiftPair, j: i64, c: &S, q: &S) -> Result<S> {
    let p = Params {
        m: shift.m,
        n: shift.n,
        c,
        q,
    };
    let (lo, hi) = (shift.m.min(0), shift.m.max(0));
    if shift.m <= shift.n {
        Ok(p.coeff_a(j + lo)? - p.coeff_b(j - hi)?)
    } else {
        Ok(p.coeff_a_tilde(j + lo)? - p.coeff_b_tilde(j - hi)?)
    }
}

/// The polynomial `P01(m, n; c, x; q)` of degree at most `e`.
///
/// The branch `m <= n` uses `A, B`; otherwise `A~, B~`.
pub fn p01<S: Scalar>(shift: ShiftPair, c: &S, q: &S) -> Result<LaurentPoly<S>> {
    let mut out = LaurentPoly::zero();
    for j in 0..=shift.e() {
        out.add_term(j, p01_coeff(shift, j, c, q)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational;

    #[test]
    fn identity_shift_is_empty() {
        let p = p01(ShiftPair::new(0, 0), &rational(1, 5), &rational(1, 2)).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn degree_example() {
        let p = p01(ShiftPair::new(1, 4), &rational(3, 7), &rational(1, 3)).unwrap();
        assert!(p.degree().unwrap_or(-1) <= 1);
    }
}

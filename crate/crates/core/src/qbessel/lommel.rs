use super::polys::{p2, p3};
use super::LommelCoeff;
use crate::contiguous::div_named;
use crate::error::{Error, Result};
use crate::numerics::{LaurentPoly, RatFn, Scalar};
use crate::qcore::{phi_terminating, q_pochhammer, q_pochhammer_recip};

fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// `(-y^2; q)_n` as its linear factors in `y`.
fn neg_y2_factors<S: Scalar>(q: &S, n: i64) -> Vec<LaurentPoly<S>> {
    let mut out = Vec::new();
    let mut qi = q.one_like();
    for _ in 0..n.max(0) {
        out.push(LaurentPoly::from_terms([
            (0, q.one_like()),
            (2, qi.clone()),
        ]));
        qi *= q;
    }
    out
}

/// `R3_{m,n,nu}` in `y = x/2`, with the infinite-product ratio telescoped to `1/(t/q;q)_{m+2}`.
pub fn r3<S: Scalar>(m: i64, n: i64, t: &S, q: &S) -> Result<LommelCoeff<S>> {
    let tq = div_named(t.clone(), q, "q")?;
    let pre = q_pochhammer_recip(&tq, q, m + 2)? * &q.powi(-(m + 1).max(0))?;
    let numer = p3(m + 1, n, t, q)?.scale(&pre).shift((m + 2).min(-m));
    Ok(LommelCoeff {
        kind: 3,
        m,
        n,
        value: RatFn::poly(numer),
    })
}

/// `R2_{m,n,nu}` in `y = x/2`; the factor `(-y^2;q)_{max(n,0)}` stays as a denominator.
pub fn r2<S: Scalar>(m: i64, n: i64, t: &S, q: &S) -> Result<LommelCoeff<S>> {
    let tq = div_named(t.clone(), q, "q")?;
    let mut pre =
        q_pochhammer_recip(&tq, q, m + 2)? * &t.powi((m + 1).min(0))? * &q.powi(binom2(m) - 1)?;
    if (m + 1).max(0) % 2 == 1 {
        pre = -pre;
    }
    let numer = p2(m + 1, n, t, q)?.scale(&pre).shift((m + 2).min(-m));
    Ok(LommelCoeff {
        kind: 2,
        m,
        n,
        value: RatFn::new(numer, neg_y2_factors(q, n)),
    })
}

/// The q-Lommel polynomial of kind 2 or 3 at `n = 0`, in `y = x/2`.
pub fn lommel_closed<S: Scalar>(kind: u8, m: i64, t: &S, q: &S) -> Result<LommelCoeff<S>> {
    if m < 1 {
        return Err(Error::Domain(format!("closed form needs m >= 1, got {m}")));
    }
    let mut numer = LaurentPoly::zero();
    match kind {
        3 => {
            for j in 0..=m {
                let c = div_named(
                    q_pochhammer(t, q, m - j)?,
                    &q_pochhammer(q, q, j)?,
                    "(q;q)_j",
                )?;
                let phi = phi_terminating(
                    j,
                    &[t.clone() * &q.powi(m - j)?],
                    std::slice::from_ref(t),
                    q,
                    &q.powi(j + 1)?,
                )?;
                numer.add_term(2 * j - m, c * &phi);
            }
        }
        2 => {
            for j in 0..=m / 2 {
                let num = q_pochhammer(t, q, m - j)? * &q_pochhammer(q, q, m - j)?;
                let den = q_pochhammer(q, q, j)?
                    * &q_pochhammer(t, q, j)?
                    * &q_pochhammer(q, q, m - 2 * j)?;
                let mut c = div_named(num, &den, "(q;q)_j (t;q)_j")?
                    * &q.powi(j * (j - 1))?
                    * &t.powi(j)?;
                if j % 2 == 1 {
                    c = -c;
                }
                numer.add_term(2 * j - m, c);
            }
        }
        _ => {
            return Err(Error::Domain(format!(
                "no Lommel closed form of kind {kind}"
            )))
        }
    }
    Ok(LommelCoeff {
        kind,
        m,
        n: 0,
        value: RatFn::poly(numer),
    })
}

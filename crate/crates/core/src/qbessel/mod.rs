//! Jackson's q-Bessel functions and the recurrences they inherit.
//!
//! Polynomials and coefficients are expressed in `y = x/2` with `t = q^nu`.

mod azero;
mod lommel;
mod polys;
mod residual;

pub use azero::{p11_scaled, s_tilde_scaled};
pub use lommel::{lommel_closed, r2, r3};
pub use polys::{a3, b3, degree_bound_p2, degree_bound_p3, p2, p2_coeff, p3, p3_coeff};
pub use residual::{
    j2_recurrence_residual, j2_recurrence_terms, j2_residual_formal, j3_recurrence_residual,
    j3_recurrence_terms, j3_residual_formal,
};

use crate::contiguous::div_named;
use crate::error::{Error, Result};
use crate::numerics::{BigFloat, RatFn, Scalar};
use crate::qcore::{phi_eval, q_pochhammer, q_pochhammer_inf, PhiOpts, PhiSpec};

#[derive(Clone, Debug, PartialEq)]
pub struct BesselParams {
    pub kind: u8,
    pub nu: BigFloat,
    pub x: BigFloat,
    pub q: BigFloat,
}

/// `R2` or `R3` as a rational function of `y = x/2`.
#[derive(Clone, Debug, PartialEq)]
pub struct LommelCoeff<S> {
    pub kind: u8,
    pub m: i64,
    pub n: i64,
    pub value: RatFn<S>,
}

/// The series part of `J^(kind)_nu(x; q)`, i.e. the function divided by
/// `(tq;q)_inf / (q;q)_inf * y^nu`.
pub fn jackson_series<S: Scalar>(kind: u8, t: &S, x: &S, q: &S, opts: &PhiOpts<S>) -> Result<S> {
    let two = S::from_i64(x.ctx(), 2);
    let y = div_named(x.clone(), &two, "2")?;
    let y2 = y.clone() * &y;
    let tq = t.clone() * q;
    let zero = x.zero_like();
    let spec = match kind {
        1 => {
            if y.abs() >= y.one_like() {
                return Err(Error::Domain("J1 needs |x| < 2".into()));
            }
            PhiSpec::new(vec![zero.clone(), zero], vec![tq], q.clone(), -y2)
        }
        2 => PhiSpec::new(vec![], vec![tq.clone()], q.clone(), -(y2 * &tq)),
        3 => PhiSpec::new(vec![zero], vec![tq], q.clone(), y2 * q),
        _ => return Err(Error::Domain(format!("no Jackson function of kind {kind}"))),
    };
    Ok(phi_eval(&spec, opts)?.value)
}

/// `J^(kind)_nu(x; q)` for real `nu`.
///
/// A nonnegative integer `nu` reduces the prefactor to `y^nu / (q;q)_nu`;
/// otherwise `y^nu` is taken as a real power and needs `x > 0`.
pub fn jackson_j(p: &BesselParams, opts: &PhiOpts<BigFloat>) -> Result<BigFloat> {
    let (q, x) = (&p.q, &p.x);
    if q.to_f64() <= 0.0 || q.to_f64() >= 1.0 {
        return Err(Error::Domain("q must lie in (0, 1)".into()));
    }
    let y = x.clone() / &BigFloat::from_i64(x.ctx(), 2);
    let t = q.powf(&p.nu)?;
    let series = jackson_series(p.kind, &t, x, q, opts)?;
    let prefactor = match p.nu.to_i64().filter(|&n| n >= 0) {
        Some(n) => {
            let den = q_pochhammer(q, q, n)?;
            y.powi(n)? / &den
        }
        None => {
            if x.to_f64() <= 0.0 {
                return Err(Error::Domain("non-integer order needs x > 0".into()));
            }
            let ratio = q_pochhammer_inf(&(t * q), q)? / &q_pochhammer_inf(q, q)?;
            ratio * &y.powf(&p.nu)?
        }
    };
    Ok(prefactor * &series)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Precision;

    fn f(v: f64) -> BigFloat {
        BigFloat::new(Precision(128), v)
    }

    #[test]
    fn j3_at_origin() {
        let p = BesselParams {
            kind: 3,
            nu: f(0.0),
            x: f(0.0),
            q: f(0.5),
        };
        assert_eq!(jackson_j(&p, &PhiOpts::default()).unwrap(), f(1.0));
    }

    #[test]
    fn j1_domain() {
        let p = BesselParams {
            kind: 1,
            nu: f(0.5),
            x: f(2.5),
            q: f(0.5),
        };
        assert!(matches!(
            jackson_j(&p, &PhiOpts::default()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn integer_path_matches_real_path() {
        let opts = PhiOpts::default();
        let p = BesselParams {
            kind: 3,
            nu: f(2.0),
            x: f(1.3),
            q: f(0.4),
        };
        let fast = jackson_j(&p, &opts).unwrap();
        let t = p.q.powf(&p.nu).unwrap();
        let ratio =
            q_pochhammer_inf(&(t * &p.q), &p.q).unwrap() / &q_pochhammer_inf(&p.q, &p.q).unwrap();
        let slow = ratio
            * &f(0.65).powf(&p.nu).unwrap()
            * &jackson_series(3, &p.q.powf(&p.nu).unwrap(), &p.x, &p.q, &opts).unwrap();
        assert!(fast.rel_diff(&slow).to_f64() < 1e-35);
    }
}

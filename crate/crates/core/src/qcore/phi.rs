use crate::error::{Error, Result};
use crate::numerics::{Scalar, TruncatedSeries};

/// Parameters of `r phi s (a_1..a_r; b_1..b_s; q, x)`.
///
/// `terminating = Some(j)` records that one upper parameter is exactly
/// `q^{-j}`. In the float backend this tag is the only way a series is
/// summed as terminating; rationals are also scanned for such a parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiSpec<S> {
    pub upper: Vec<S>,
    pub lower: Vec<S>,
    pub q: S,
    pub x: S,
    pub terminating: Option<u64>,
}

impl<S: Scalar> PhiSpec<S> {
    pub fn new(upper: Vec<S>, lower: Vec<S>, q: S, x: S) -> Self {
        PhiSpec {
            upper,
            lower,
            q,
            x,
            terminating: None,
        }
    }

    /// Prepends the upper parameter `q^{-j}` and tags the series as terminating.
    pub fn terminating(j: u64, rest: Vec<S>, lower: Vec<S>, q: S, x: S) -> Result<Self> {
        let mut upper = vec![q.powi(-(j as i64))?];
        upper.extend(rest);
        Ok(PhiSpec {
            upper,
            lower,
            q,
            x,
            terminating: Some(j),
        })
    }

    /// `1 + s - r`, the exponent of `(-1)^j q^{binom(j,2)}` in each term.
    pub fn excess(&self) -> i64 {
        1 + self.lower.len() as i64 - self.upper.len() as i64
    }

    /// Smallest `j` with some upper parameter equal to `q^{-j}`.
    pub fn terminating_index(&self) -> Option<u64> {
        let scanned = self
            .upper
            .iter()
            .filter_map(|a| a.exact_q_power(&self.q))
            .filter(|i| *i <= 0)
            .map(|i| (-i) as u64)
            .min();
        match (self.terminating, scanned) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

/// Paired parameters `u/a` (upper) and `v/a` (lower) sharing the scale `a`.
///
/// Their joint contribution to the term ratio at step `l` is
/// `(a - u q^l) / (a - v q^l)`, which stays finite at `a = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScaledPair<S> {
    pub u: S,
    pub v: S,
    pub a: S,
}

#[derive(Clone, Debug)]
pub struct PhiOpts<S> {
    pub max_terms: usize,
    /// Relative stopping tolerance; the backend epsilon when `None`.
    pub tolerance: Option<S>,
}

impl<S> Default for PhiOpts<S> {
    fn default() -> Self {
        PhiOpts {
            max_terms: 100_000,
            tolerance: None,
        }
    }
}

/// A summed series with the number of terms used and the bound on the omitted tail.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiSum<S> {
    pub value: S,
    pub terms: usize,
    pub tail_bound: S,
}

/// `t_{l+1} / t_l` without the factor `x`.
fn term_ratio<S: Scalar>(
    upper: &[S],
    pairs: &[ScaledPair<S>],
    lower: &[S],
    q: &S,
    ql: &S,
    excess: i64,
) -> Result<S> {
    let mut num = ql.one_like();
    for a in upper {
        num *= &(a.clone() * ql).one_minus();
    }
    let mut den = (ql.clone() * q).one_minus();
    for (i, b) in lower.iter().enumerate() {
        let f = (b.clone() * ql).one_minus();
        if f.is_zero() {
            return Err(Error::Pole(format!(
                "1 - b_{} q^l (lower parameter)",
                i + 1
            )));
        }
        den *= &f;
    }
    for p in pairs {
        num *= &(p.a.clone() - &(p.u.clone() * ql));
        let f = p.a.clone() - &(p.v.clone() * ql);
        if f.is_zero() {
            return Err(Error::Pole("a - v q^l (scaled pair)".into()));
        }
        den *= &f;
    }
    if den.is_zero() {
        return Err(Error::Pole("1 - q^(l+1)".into()));
    }
    let mut r = num.checked_div(&den)?;
    if excess != 0 {
        r *= &(-ql.clone()).powi(excess)?;
    }
    Ok(r)
}

fn sum_terminating<S: Scalar>(
    j: u64,
    upper: &[S],
    pairs: &[ScaledPair<S>],
    lower: &[S],
    q: &S,
    x: &S,
    excess: i64,
) -> Result<S> {
    let mut term = x.one_like();
    let mut sum = term.clone();
    let mut ql = x.one_like();
    for _ in 0..j {
        term *= &(term_ratio(upper, pairs, lower, q, &ql, excess)? * x);
        if term.is_zero() {
            break;
        }
        sum += &term;
        ql *= q;
    }
    Ok(sum)
}

/// Sums `r phi s` with the `(-1)^j q^{binom(j,2)}` convention.
///
/// Terminating series are summed exactly through their last nonzero term.
/// Otherwise terms are added until the tail, bounded through the monotone
/// term-ratio majorant `rho_l`, is below the tolerance relative to the sum.
pub fn phi_eval<S: Scalar>(spec: &PhiSpec<S>, opts: &PhiOpts<S>) -> Result<PhiSum<S>> {
    let x = &spec.x;
    let q = &spec.q;
    let zero = x.zero_like();
    let one = x.one_like();
    if x.is_zero() {
        return Ok(PhiSum {
            value: one,
            terms: 1,
            tail_bound: zero,
        });
    }
    let excess = spec.excess();
    if let Some(j) = spec.terminating_index() {
        let value = sum_terminating(j, &spec.upper, &[], &spec.lower, q, x, excess)?;
        return Ok(PhiSum {
            value,
            terms: j as usize + 1,
            tail_bound: zero,
        });
    }
    if S::EXACT {
        return Err(Error::NonTerminatingExact);
    }
    let qa = q.abs();
    if qa >= one {
        return Err(Error::Domain("|q| must be < 1".into()));
    }
    if excess < 0 {
        return Err(Error::Domain(format!(
            "non-terminating {}phi{} diverges",
            spec.upper.len(),
            spec.lower.len()
        )));
    }
    let tol = opts
        .tolerance
        .clone()
        .unwrap_or_else(|| S::epsilon(x.ctx()));
    let xa = x.abs();
    let ua: Vec<S> = spec.upper.iter().map(|a| a.abs()).collect();
    let la: Vec<S> = spec.lower.iter().map(|b| b.abs()).collect();

    let mut term = one.clone();
    let mut sum = one.clone();
    let mut ql = one.clone();
    let mut qla = one.clone();
    for l in 0..opts.max_terms {
        // rho_l majorizes |t_{j+1}/t_j| for every j >= l once each |b_i| |q|^l < 1.
        let mut rho_den = (qla.clone() * &qa).one_minus();
        let mut valid = true;
        for b in &la {
            let f = (b.clone() * &qla).one_minus();
            if f <= zero {
                valid = false;
                break;
            }
            rho_den *= &f;
        }
        if valid {
            let mut rho_num = xa.clone() * &qla.powi(excess)?;
            for a in &ua {
                rho_num *= &(one.clone() + &(a.clone() * &qla));
            }
            let rho = rho_num.checked_div(&rho_den)?;
            if rho < one {
                let tail = term.abs() * &rho.checked_div(&rho.one_minus())?;
                if tail <= tol.clone() * &sum.abs() || tail.is_zero() {
                    return Ok(PhiSum {
                        value: sum,
                        terms: l + 1,
                        tail_bound: tail,
                    });
                }
            }
        }
        term *= &(term_ratio(&spec.upper, &[], &spec.lower, q, &ql, excess)? * x);
        sum += &term;
        ql *= q;
        qla *= &qa;
    }
    Err(Error::MaxTerms(opts.max_terms))
}

/// The first `n` terms of the series, ignoring termination and convergence.
pub fn phi_partial_sum<S: Scalar>(spec: &PhiSpec<S>, n: usize) -> Result<S> {
    let x = &spec.x;
    let mut sum = x.zero_like();
    if n == 0 {
        return Ok(sum);
    }
    let excess = spec.excess();
    let mut term = x.one_like();
    let mut ql = x.one_like();
    sum += &term;
    for _ in 1..n {
        term *= &(term_ratio(&spec.upper, &[], &spec.lower, &spec.q, &ql, excess)? * x);
        if term.is_zero() {
            break;
        }
        sum += &term;
        ql *= &spec.q;
    }
    Ok(sum)
}

/// The series in a formal variable `X` with argument `spec.x * X^mult`, truncated at `X^order`.
///
/// The coefficient of `X^{mult j}` is the `j`-th term evaluated at `x = spec.x`.
pub fn phi_formal<S: Scalar>(
    spec: &PhiSpec<S>,
    mult: usize,
    order: usize,
) -> Result<TruncatedSeries<S>> {
    assert!(mult >= 1, "x power multiplier must be positive");
    let x = &spec.x;
    let excess = spec.excess();
    let mut coeffs = vec![x.zero_like(); order + 1];
    let mut term = x.one_like();
    let mut ql = x.one_like();
    coeffs[0] = term.clone();
    let mut j = 1;
    while j * mult <= order {
        term *= &(term_ratio(&spec.upper, &[], &spec.lower, &spec.q, &ql, excess)? * x);
        if term.is_zero() {
            break;
        }
        coeffs[j * mult] = term.clone();
        ql *= &spec.q;
        j += 1;
    }
    Ok(TruncatedSeries::from_coeffs(x.ctx(), order, coeffs))
}

/// Terminating series with upper parameters `q^{-j}`, `fixed_upper` and the
/// upper halves of `pairs`, and lower parameters `lower` and the lower halves
/// of `pairs`.
pub fn phi_terminating_scaled<S: Scalar>(
    j: u64,
    fixed_upper: &[S],
    pairs: &[ScaledPair<S>],
    lower: &[S],
    q: &S,
    z: &S,
) -> Result<S> {
    let mut upper = Vec::with_capacity(fixed_upper.len() + 1);
    upper.push(q.powi(-(j as i64))?);
    upper.extend_from_slice(fixed_upper);
    let excess = lower.len() as i64 - fixed_upper.len() as i64;
    sum_terminating(j, &upper, pairs, lower, q, z, excess)
}

/// `phi(q^{-j}, rest; lower; q, z)`, summed exactly.
pub fn phi_terminating<S: Scalar>(j: i64, rest: &[S], lower: &[S], q: &S, z: &S) -> Result<S> {
    assert!(j >= 0, "terminating index must be nonnegative");
    phi_terminating_scaled(j as u64, rest, &[], lower, q, z)
}

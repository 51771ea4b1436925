use rug::{Integer, Rational};

use super::{NumError, Scalar};

impl Scalar for Rational {
    type Ctx = ();
    const EXACT: bool = true;

    fn ctx(&self) {}

    fn from_i64(_: (), v: i64) -> Self {
        Rational::from(v)
    }

    fn from_rational(_: (), r: &Rational) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }

    fn abs(&self) -> Self {
        self.clone().abs()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, NumError> {
        if rhs.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(Rational::from(self / rhs))
    }

    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }

    fn epsilon(_: ()) -> Self {
        Rational::new()
    }

    fn exact_q_power(&self, q: &Self) -> Option<i64> {
        is_q_power(self, q)
    }
}

/// `p/q` as a normalized rational. Panics if `q == 0`.
pub fn rational(p: i64, q: i64) -> Rational {
    Rational::from((p, q))
}

/// Parses the interchange syntax `p/q` or `p` (decimal integers, optional sign).
pub fn parse_rational(s: &str) -> Result<Rational, NumError> {
    let t = s.trim();
    let bad = || NumError::Parse(s.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |x: &str, signed: bool| {
        let digits = if signed {
            x.strip_prefix(['-', '+']).unwrap_or(x)
        } else {
            x
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let n: Integer = num.trim_start_matches('+').parse().map_err(|_| bad())?;
    let d: Integer = den.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(NumError::DivisionByZero);
    }
    Ok(Rational::from((n, d)))
}

/// Returns `Some(i)` when `v == q^i` exactly for an integer `i`.
///
/// Requires `0 < |q| < 1`; only exponents that can reproduce the numerator and
/// denominator sizes of `v` are tried.
pub fn is_q_power(v: &Rational, q: &Rational) -> Option<i64> {
    if v.is_zero() || q.is_zero() {
        return None;
    }
    if *v == 1 {
        return Some(0);
    }
    // v = q^i with |q| < 1 forces |v| < 1 for i > 0 and |v| > 1 for i < 0.
    let (target, base, sign) = if v.clone().abs() < 1 {
        (v.clone(), q.clone(), 1)
    } else {
        (Rational::from(v.recip_ref()), q.clone(), -1)
    };
    let mut acc = base.clone();
    let mut i = 1i64;
    let limit = target.denom().significant_bits() as i64 + 1;
    while i <= limit {
        if acc == target {
            return Some(sign * i);
        }
        if acc.denom() > target.denom() {
            return None;
        }
        acc *= &base;
        i += 1;
    }
    None
}

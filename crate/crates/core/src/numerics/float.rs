use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::{Float, Rational};

use super::{NumError, Scalar};

/// Working precision of the float backend, in bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Precision(pub u32);

impl Default for Precision {
    fn default() -> Self {
        Precision(super::DEFAULT_PRECISION)
    }
}

/// An MPFR float tagged with its precision.
///
/// Binary operations assert that both operands share one precision.
#[derive(Clone)]
pub struct BigFloat(Float);

impl BigFloat {
    pub fn new(prec: Precision, v: f64) -> Self {
        BigFloat(Float::with_val(prec.0, v))
    }

    pub fn from_float(f: Float) -> Self {
        BigFloat(f)
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn precision(&self) -> Precision {
        Precision(self.0.prec())
    }

    /// Parses a decimal literal (`1.25`, `-3e-4`) or a rational `p/q`.
    pub fn parse(prec: Precision, s: &str) -> Result<Self, NumError> {
        if s.contains('/') {
            let r = super::parse_rational(s)?;
            return Ok(Self::from_rational(prec, &r));
        }
        let parsed = Float::parse(s.trim()).map_err(|_| NumError::Parse(s.to_string()))?;
        let f = Float::with_val(prec.0, parsed);
        if !f.is_finite() {
            return Err(NumError::Parse(s.to_string()));
        }
        Ok(BigFloat(f))
    }

    /// Decimal string with enough digits to round-trip at this precision.
    pub fn to_decimal(&self) -> String {
        self.0.to_string_radix(10, None)
    }

    pub fn ln(&self) -> Self {
        BigFloat(self.0.clone().ln())
    }

    pub fn exp(&self) -> Self {
        BigFloat(self.0.clone().exp())
    }

    pub fn sqrt(&self) -> Self {
        BigFloat(self.0.clone().sqrt())
    }

    /// `self^e` for a real exponent; requires `self > 0` unless `e` is an integer.
    pub fn powf(&self, e: &BigFloat) -> Result<Self, NumError> {
        self.check(e);
        let v = Float::with_val(self.0.prec(), rug::ops::Pow::pow(&self.0, &e.0));
        if v.is_nan() || v.is_infinite() {
            return Err(NumError::DivisionByZero);
        }
        Ok(BigFloat(v))
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_i64(&self) -> Option<i64> {
        if !self.0.is_integer() {
            return None;
        }
        self.0.to_integer().and_then(|i| i.to_i64())
    }

    /// `|self - other| <= tol * max(|self|, |other|, 1)`; the explicit float comparison.
    pub fn approx_eq(&self, other: &BigFloat, tol: &BigFloat) -> bool {
        self.rel_diff(other) <= *tol
    }

    /// `|self - other| / max(|self|, |other|, 1)`.
    pub fn rel_diff(&self, other: &BigFloat) -> BigFloat {
        let diff = (self.clone() - other).abs();
        let mut scale = self.clone().abs();
        let o = other.clone().abs();
        if o > scale {
            scale = o;
        }
        let one = BigFloat::from_i64(self.ctx(), 1);
        if one > scale {
            scale = one;
        }
        BigFloat(Float::with_val(self.0.prec(), &diff.0 / &scale.0))
    }

    /// `self` rounded (or extended) to `prec`.
    pub fn with_precision(&self, prec: Precision) -> Self {
        BigFloat(Float::with_val(prec.0, &self.0))
    }

    /// `2^e` at the given precision.
    pub fn exp2(prec: Precision, e: i32) -> Self {
        let mut f = Float::with_val(prec.0, 1);
        f <<= e;
        BigFloat(f)
    }

    fn check(&self, rhs: &BigFloat) {
        if self.0.prec() != rhs.0.prec() {
            panic!(
                "{}",
                NumError::PrecisionMismatch {
                    left: self.0.prec(),
                    right: rhs.0.prec()
                }
            );
        }
    }
}

/// Largest extra working precision [`refine`] will try, in bits.
pub const MAX_GUARD_BITS: u32 = 4096;

/// Runs `f` at increasing working precision until two successive results
/// agree to `target` bits, relative to their largest component, and returns
/// the last result rounded to `target`.
///
/// `f` must rebuild every input at the precision it is given; inputs already
/// rounded to `target` would cap the accuracy at their own rounding error.
pub fn refine<E>(
    target: Precision,
    mut f: impl FnMut(Precision) -> Result<Vec<BigFloat>, E>,
) -> Result<Vec<BigFloat>, E> {
    let mut guard = 32;
    let mut prev = f(Precision(target.0 + guard))?;
    loop {
        guard *= 2;
        let cur = f(Precision(target.0 + guard))?;
        if guard >= MAX_GUARD_BITS || agree(&prev, &cur, target) {
            return Ok(cur.iter().map(|v| v.with_precision(target)).collect());
        }
        prev = cur;
    }
}

fn agree(prev: &[BigFloat], cur: &[BigFloat], target: Precision) -> bool {
    if prev.len() != cur.len() {
        return false;
    }
    let Some(p) = cur.first().map(|v| v.precision()) else {
        return true;
    };
    let mut scale = BigFloat::from_i64(p, 0);
    for v in cur {
        let a = v.abs();
        if a > scale {
            scale = a;
        }
    }
    let tol = scale * &BigFloat::exp2(p, -(target.0 as i32) - 4);
    prev.iter()
        .zip(cur)
        .all(|(a, b)| (a.with_precision(p) - b).abs() <= tol)
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigFloat({}, {} bits)", self.to_decimal(), self.0.prec())
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

impl PartialEq for BigFloat {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! float_binop {
    ($tr:ident, $method:ident, $assign_tr:ident, $assign_method:ident, $op:tt) => {
        impl<'a> $tr<&'a BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(mut self, rhs: &'a BigFloat) -> BigFloat {
                self.check(rhs);
                self.0 $op &rhs.0;
                self
            }
        }
        impl $tr<BigFloat> for BigFloat {
            type Output = BigFloat;
            fn $method(self, rhs: BigFloat) -> BigFloat {
                self.$method(&rhs)
            }
        }
        impl<'a> $assign_tr<&'a BigFloat> for BigFloat {
            fn $assign_method(&mut self, rhs: &'a BigFloat) {
                self.check(rhs);
                self.0 $op &rhs.0;
            }
        }
    };
}

float_binop!(Add, add, AddAssign, add_assign, +=);
float_binop!(Sub, sub, SubAssign, sub_assign, -=);
float_binop!(Mul, mul, MulAssign, mul_assign, *=);

/// Panics on division by zero; use [`Scalar::checked_div`] where poles may occur.
impl<'a> Div<&'a BigFloat> for BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: &'a BigFloat) -> BigFloat {
        self.checked_div(rhs).expect("BigFloat division by zero")
    }
}

impl Neg for BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat(-self.0)
    }
}

impl Scalar for BigFloat {
    type Ctx = Precision;
    const EXACT: bool = false;

    fn ctx(&self) -> Precision {
        Precision(self.0.prec())
    }

    fn from_i64(ctx: Precision, v: i64) -> Self {
        BigFloat(Float::with_val(ctx.0, v))
    }

    fn from_rational(ctx: Precision, r: &Rational) -> Self {
        BigFloat(Float::with_val(ctx.0, r))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn abs(&self) -> Self {
        BigFloat(self.0.clone().abs())
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, NumError> {
        self.check(rhs);
        if rhs.0.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        Ok(BigFloat(Float::with_val(self.0.prec(), &self.0 / &rhs.0)))
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    fn epsilon(ctx: Precision) -> Self {
        BigFloat::exp2(ctx, -(ctx.0 as i32))
    }
}

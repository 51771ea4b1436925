//! Scalar backends and the polynomial/series containers built on them.
//!
//! Two backends implement [`Scalar`]:
//!
//! - [`rug::Rational`]: exact big rationals, always in lowest terms.
//! - [`BigFloat`]: MPFR floats of a fixed precision; every operand of an
//!   arithmetic expression must carry the same precision.
//!
//! Algorithms elsewhere in the crate are generic over `S: Scalar`, so the same
//! code path produces exact values and high-precision approximations.

mod error;
mod exact;
mod float;
pub mod intform;
pub mod laurent;
pub mod series;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub use error::NumError;
pub use exact::{is_q_power, parse_rational, rational};
pub use float::{refine, BigFloat, Precision, MAX_GUARD_BITS};
pub use laurent::{LaurentPoly, RatFn};
pub use rug::{Integer, Rational};
pub use series::TruncatedSeries;

/// Default precision of the float backend, in bits.
pub const DEFAULT_PRECISION: u32 = 128;

/// Default truncation order of formal power series.
pub const DEFAULT_ORDER: usize = 32;

/// A field element of one of the two numeric backends.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    /// Construction context: `()` for rationals, the precision for floats.
    type Ctx: Copy + fmt::Debug + PartialEq + Send + Sync;

    /// True for the exact rational backend.
    const EXACT: bool;

    fn ctx(&self) -> Self::Ctx;
    fn from_i64(ctx: Self::Ctx, v: i64) -> Self;
    fn from_rational(ctx: Self::Ctx, r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;

    /// `self / rhs`, reporting division by zero instead of producing NaN.
    fn checked_div(&self, rhs: &Self) -> Result<Self, NumError>;

    /// Nearest `f64`, for diagnostics only.
    fn to_f64(&self) -> f64;

    /// Stopping tolerance for infinite sums and products; zero for exact values.
    fn epsilon(ctx: Self::Ctx) -> Self;

    /// `Some(i)` when `self == q^i` is known exactly; floats never claim this.
    fn exact_q_power(&self, _q: &Self) -> Option<i64> {
        None
    }

    fn zero(ctx: Self::Ctx) -> Self {
        Self::from_i64(ctx, 0)
    }

    fn one(ctx: Self::Ctx) -> Self {
        Self::from_i64(ctx, 1)
    }

    fn zero_like(&self) -> Self {
        Self::zero(self.ctx())
    }

    fn one_like(&self) -> Self {
        Self::one(self.ctx())
    }

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn inv(&self) -> Result<Self, NumError> {
        self.one_like().checked_div(self)
    }

    /// Integer power; negative exponents of zero are an error.
    fn powi(&self, e: i64) -> Result<Self, NumError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= &sq;
            }
            exp >>= 1;
            if exp > 0 {
                let s = sq.clone();
                sq *= &s;
            }
        }
        Ok(acc)
    }

    /// `1 - self`.
    fn one_minus(&self) -> Self {
        self.one_like() - self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powi_matches_repeated_products() {
        let q = rational(2, 3);
        assert_eq!(q.powi(0).unwrap(), rational(1, 1));
        assert_eq!(q.powi(3).unwrap(), rational(8, 27));
        assert_eq!(q.powi(-2).unwrap(), rational(9, 4));
        assert!(rational(0, 1).powi(-1).is_err());
    }

    #[test]
    fn float_powi_negative() {
        let p = Precision(128);
        let q = BigFloat::from_rational(p, &rational(1, 4));
        let v = q.powi(-3).unwrap();
        assert_eq!(v, BigFloat::from_i64(p, 64));
    }
}

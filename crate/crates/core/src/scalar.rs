//! Coefficient fields.
//!
//! Every algebraic object in the crate is generic over [`Scalar`]. Two
//! implementations exist: [`Rational`] (arbitrary precision, used by the
//! identity sweeps so that "zero failures" is an exact statement) and `f64`
//! (used wherever a continuous angle enters).

use std::any::{Any, TypeId};
use std::collections::HashMap;
use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

/// Exact arbitrary-precision rational.
pub type Rational = BigRational;

/// Complex number over a [`Scalar`]; over [`Rational`] this is a Gaussian rational.
pub type Cx<T> = Complex<T>;

/// Numeric field usable as a coefficient ring.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Signed + Neg<Output = Self> + Send + Sync + 'static
{
    /// True when arithmetic is exact and tolerances are ignored.
    const EXACT: bool;

    fn from_int(v: i64) -> Self;

    /// `num / den`, exact for rationals.
    fn ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    /// Exact for [`Rational`], nearest value for `f64`.
    fn from_rational(r: &Rational) -> Self;

    /// Zero test under the given absolute tolerance. Exact types ignore `tol`.
    fn is_negligible(&self, tol: f64) -> bool;

    fn abs_f64(&self) -> f64 {
        self.abs().to_f64()
    }

    fn half() -> Self {
        Self::ratio(1, 2)
    }

    fn third() -> Self {
        Self::ratio(1, 3)
    }

    /// Canonical string form used by the JSON emitters ("-1", "1/2", "0").
    fn exact_string(&self) -> String {
        format!("{self}")
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn from_rational(r: &Rational) -> Self {
        ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }

    fn is_negligible(&self, tol: f64) -> bool {
        self.abs() <= tol
    }

    fn exact_string(&self) -> String {
        // f64 Display is shortest-roundtrip; keep integers free of a trailing ".0".
        if self.fract() == 0.0 && self.abs() < 1e15 {
            format!("{}", *self as i64)
        } else {
            format!("{self}")
        }
    }
}

/// A value built once per scalar type and shared for the life of the process.
///
/// `key` distinguishes different values of the same type; `init` must be pure.
pub(crate) fn per_type<T: Scalar, V: Send + Sync + 'static>(key: &'static str, init: fn() -> V) -> &'static V {
    type Slot = &'static (dyn Any + Send + Sync);
    static CACHE: OnceLock<Mutex<HashMap<(TypeId, &'static str), Slot>>> = OnceLock::new();
    let id = (TypeId::of::<T>(), key);
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().expect("cache lock").get(&id) {
        return v.downcast_ref().expect("one value type per key");
    }
    // Built outside the lock: `init` may itself use the cache.
    let fresh: Slot = Box::leak(Box::new(init()));
    let v = *cache.lock().expect("cache lock").entry(id).or_insert(fresh);
    v.downcast_ref().expect("one value type per key")
}

/// Gaussian unit constructors shared by the matrix tables.
pub fn cx<T: Scalar>(re: i64, im: i64) -> Cx<T> {
    Complex::new(T::from_int(re), T::from_int(im))
}

pub fn cx_zero<T: Scalar>() -> Cx<T> {
    Complex::new(T::zero(), T::zero())
}

pub fn cx_one<T: Scalar>() -> Cx<T> {
    Complex::new(T::one(), T::zero())
}

pub fn cx_is_negligible<T: Scalar>(z: &Cx<T>, tol: f64) -> bool {
    z.re.is_negligible(tol) && z.im.is_negligible(tol)
}

/// Largest absolute component, as f64, for residual reporting.
pub fn cx_abs_max<T: Scalar>(z: &Cx<T>) -> f64 {
    z.re.abs_f64().max(z.im.abs_f64())
}

/// Lossy conversion of an exact value into the float mode.
pub fn to_float_cx<T: Scalar>(z: &Cx<T>) -> Cx<f64> {
    Complex::new(z.re.to_f64(), z.im.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_ratio_is_reduced() {
        assert_eq!(Rational::ratio(2, 4), Rational::half());
        assert_eq!(Rational::ratio(-3, 9).exact_string(), "-1/3");
    }

    #[test]
    fn negligible_respects_mode() {
        assert!(!Rational::ratio(1, 1_000_000_000).is_negligible(1.0));
        assert!(1e-13f64.is_negligible(1e-12));
        assert!(!1e-11f64.is_negligible(1e-12));
    }

    #[test]
    fn float_exact_string_drops_trailing_zero() {
        assert_eq!((-1.0f64).exact_string(), "-1");
        assert_eq!(0.5f64.exact_string(), "0.5");
    }
}

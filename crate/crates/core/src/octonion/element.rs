//! Split-octonion elements `s = ω + λⁿJₙ + xⁿjₙ + tI`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::unit::{StructureConstants, Unit};
use crate::scalar::{Rational, Scalar};

/// An element of the split-octonion algebra.
///
/// Coefficients are stored in canonical order `(1, j1, j2, j3, I, J1, J2, J3)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitOctonion<T> {
    coeffs: [T; 8],
}

pub type ExactOctonion = SplitOctonion<Rational>;

impl<T: Scalar> SplitOctonion<T> {
    pub fn new(coeffs: [T; 8]) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(c: [i64; 8]) -> Self {
        Self::new(c.map(T::from_int))
    }

    /// Assembles `ω + λⁿJₙ + xⁿjₙ + tI`.
    pub fn from_parts(w: T, lambda: [T; 3], x: [T; 3], t: T) -> Self {
        let [l1, l2, l3] = lambda;
        let [x1, x2, x3] = x;
        Self::new([w, x1, x2, x3, t, l1, l2, l3])
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| T::zero()))
    }

    pub fn one() -> Self {
        Self::unit(Unit::One)
    }

    pub fn unit(u: Unit) -> Self {
        Self::signed_unit(u, 1)
    }

    pub fn signed_unit(u: Unit, sign: i8) -> Self {
        let mut s = Self::zero();
        s.coeffs[u.index()] = T::from_int(sign.into());
        s
    }

    pub fn scalar(v: T) -> Self {
        let mut s = Self::zero();
        s.coeffs[0] = v;
        s
    }

    pub fn coeffs(&self) -> &[T; 8] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> [T; 8] {
        self.coeffs
    }

    pub fn coeff(&self, u: Unit) -> &T {
        &self.coeffs[u.index()]
    }

    /// Scalar part ω.
    pub fn w(&self) -> &T {
        &self.coeffs[0]
    }

    /// Coefficients on `J₁, J₂, J₃`.
    pub fn lambda(&self) -> [&T; 3] {
        [&self.coeffs[5], &self.coeffs[6], &self.coeffs[7]]
    }

    /// Coefficients on `j₁, j₂, j₃`.
    pub fn x(&self) -> [&T; 3] {
        [&self.coeffs[1], &self.coeffs[2], &self.coeffs[3]]
    }

    /// Coefficient on `I`.
    pub fn t(&self) -> &T {
        &self.coeffs[4]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_negligible(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.is_negligible(tol))
    }

    /// True when every hyper-complex coefficient vanishes (within `tol`).
    pub fn is_pure_scalar(&self, tol: f64) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_negligible(tol))
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(Scalar::abs_f64).fold(0.0, f64::max)
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(std::array::from_fn(|i| self.coeffs[i].clone() * k.clone()))
    }

    /// `s̄ = ω - λⁿJₙ - xⁿjₙ - tI`.
    pub fn conj(&self) -> Self {
        Self::new(std::array::from_fn(|i| {
            if i == 0 {
                self.coeffs[0].clone()
            } else {
                -self.coeffs[i].clone()
            }
        }))
    }

    /// `|s|² = ω² - λ² + x² - t²`, the scalar part of `s s̄`.
    pub fn norm_sq(&self) -> T {
        Unit::ALL.iter().fold(T::zero(), |acc, &u| {
            let c = &self.coeffs[u.index()];
            let sq = c.clone() * c.clone();
            // conj(e)·e = -e² for imaginary units, 1 for the scalar.
            if u == Unit::One || u.square_sign() < 0 {
                acc + sq
            } else {
                acc - sq
            }
        })
    }

    /// Product under an explicit table; used to compare tables against each other.
    pub fn mul_with(&self, rhs: &Self, table: &StructureConstants) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let p = table.product(Unit::ALL[a], Unit::ALL[b]);
                let term = ca.clone() * cb.clone();
                let slot = &mut out.coeffs[p.unit.index()];
                *slot = if p.sign > 0 {
                    slot.clone() + term
                } else {
                    slot.clone() - term
                };
            }
        }
        out
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SplitOctonion<U> {
        SplitOctonion::new(std::array::from_fn(|i| f(&self.coeffs[i])))
    }
}

impl<T: Scalar> Add for SplitOctonion<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<T: Scalar> Add for &SplitOctonion<T> {
    type Output = SplitOctonion<T>;
    fn add(self, rhs: Self) -> SplitOctonion<T> {
        SplitOctonion::new(std::array::from_fn(|i| {
            self.coeffs[i].clone() + rhs.coeffs[i].clone()
        }))
    }
}

impl<T: Scalar> Sub for SplitOctonion<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<T: Scalar> Sub for &SplitOctonion<T> {
    type Output = SplitOctonion<T>;
    fn sub(self, rhs: Self) -> SplitOctonion<T> {
        SplitOctonion::new(std::array::from_fn(|i| {
            self.coeffs[i].clone() - rhs.coeffs[i].clone()
        }))
    }
}

impl<T: Scalar> Neg for SplitOctonion<T> {
    type Output = Self;
    fn neg(self) -> Self {
        SplitOctonion::new(self.coeffs.map(|c| -c))
    }
}

impl<T: Scalar> Neg for &SplitOctonion<T> {
    type Output = SplitOctonion<T>;
    fn neg(self) -> SplitOctonion<T> {
        -self.clone()
    }
}

impl<T: Scalar> Mul for &SplitOctonion<T> {
    type Output = SplitOctonion<T>;
    fn mul(self, rhs: Self) -> SplitOctonion<T> {
        self.mul_with(rhs, StructureConstants::canonical())
    }
}

impl<T: Scalar> Mul for SplitOctonion<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<T: Scalar> fmt::Display for SplitOctonion<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c}){}", Unit::ALL[i])?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `s₁·s₂ = ½(s̄₁s₂ + s̄₂s₁)`, returned as its scalar part.
pub fn inner<T: Scalar>(a: &SplitOctonion<T>, b: &SplitOctonion<T>) -> T {
    inner_full(a, b).w().clone()
}

/// The full octonion `½(s̄₁s₂ + s̄₂s₁)`; its hyper-complex part is always zero.
pub fn inner_full<T: Scalar>(a: &SplitOctonion<T>, b: &SplitOctonion<T>) -> SplitOctonion<T> {
    (&(&a.conj() * b) + &(&b.conj() * a)).scale(&T::half())
}

/// `[x,y] = ½(xy - yx)`.
pub fn commutator<T: Scalar>(x: &SplitOctonion<T>, y: &SplitOctonion<T>) -> SplitOctonion<T> {
    (&(x * y) - &(y * x)).scale(&T::half())
}

/// `𝒜(x,y,z) = ½((xy)z - x(yz))`.
pub fn associator<T: Scalar>(
    x: &SplitOctonion<T>,
    y: &SplitOctonion<T>,
    z: &SplitOctonion<T>,
) -> SplitOctonion<T> {
    (&(&(x * y) * z) - &(x * &(y * z))).scale(&T::half())
}

/// `𝒥(x,y,z) = ⅓((xy)z + (yz)x + (zx)y)`.
pub fn jacobiator<T: Scalar>(
    x: &SplitOctonion<T>,
    y: &SplitOctonion<T>,
    z: &SplitOctonion<T>,
) -> SplitOctonion<T> {
    jacobiator_by(x, y, z, |a, b| a * b)
}

/// Jacobiator built from an arbitrary bilinear product.
pub fn jacobiator_by<T: Scalar>(
    x: &SplitOctonion<T>,
    y: &SplitOctonion<T>,
    z: &SplitOctonion<T>,
    p: impl Fn(&SplitOctonion<T>, &SplitOctonion<T>) -> SplitOctonion<T>,
) -> SplitOctonion<T> {
    let s = &(&p(&p(x, y), z) + &p(&p(y, z), x)) + &p(&p(z, x), y);
    s.scale(&T::third())
}

/// Time-like test on the vector part: `t² + λₙλⁿ > xₙxⁿ`.
pub fn is_timelike_vector_part<T: Scalar>(s: &SplitOctonion<T>) -> bool {
    let sum_sq = |v: [&T; 3]| v.into_iter().fold(T::zero(), |a, c| a + c.clone() * c.clone());
    let t = s.t().clone();
    (t.clone() * t + sum_sq(s.lambda()) - sum_sq(s.x())).is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = ExactOctonion;

    fn u(unit: Unit) -> Q {
        Q::unit(unit)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(u(Unit::J1) * u(Unit::J2), u(Unit::j3));
        assert_eq!(u(Unit::j1) * u(Unit::j1), -Q::one());
        assert_eq!(u(Unit::j1) * u(Unit::J2), -u(Unit::J3));
        let s = Q::from_ints([3, -1, 4, 1, -5, 9, 2, -6]);
        assert_eq!(&Q::one() * &s, s);
        assert_eq!(&s * &Q::one(), s);
    }

    #[test]
    fn conj_examples() {
        let s = Q::from_parts(
            r(2, 1),
            [r(1, 1), r(-3, 1), r(5, 2)],
            [r(7, 1), r(0, 1), r(-1, 1)],
            r(4, 1),
        );
        let c = s.conj();
        assert_eq!(c.w(), s.w());
        for i in 1..8 {
            assert_eq!(c.coeffs()[i], -s.coeffs()[i].clone());
        }
        assert_eq!(Q::one().conj(), Q::one());
        // I = J₁j₁ and its conjugate is -I.
        let i = u(Unit::J1) * u(Unit::j1);
        assert_eq!(i, u(Unit::I));
        assert_eq!(i.conj(), -u(Unit::I));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(Q::one().norm_sq(), r(1, 1));
        let zd = Q::one() + u(Unit::J1);
        assert!(!zd.is_zero());
        assert_eq!(zd.norm_sq(), r(0, 1));
        let s = Q::from_ints([2, 0, 3, 0, 0, 0, 0, 0]);
        assert_eq!(s.norm_sq(), r(13, 1));
    }

    #[test]
    fn inner_examples() {
        assert_eq!(inner(&Q::one(), &u(Unit::J1)), r(0, 1));
        assert_eq!(inner(&u(Unit::J1), &u(Unit::J1)), r(-1, 1));
        let s = Q::from_ints([1, 2, -3, 4, -1, 0, 5, 2]);
        assert_eq!(inner(&s, &s), s.norm_sq());
        let t = Q::from_ints([0, 1, 1, 0, 2, -2, 3, 7]);
        assert!(inner_full(&s, &t).is_pure_scalar(0.0));
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(commutator(&u(Unit::J1), &u(Unit::J2)), u(Unit::j3));
        let s = Q::from_ints([1, 2, -3, 4, -1, 0, 5, 2]);
        assert!(commutator(&s, &s).is_zero());
        assert!(commutator(&Q::one(), &s).is_zero());
    }

    #[test]
    fn associator_examples() {
        assert_eq!(
            associator(&u(Unit::J1), &u(Unit::J2), &u(Unit::J3)),
            -u(Unit::I)
        );
        assert_eq!(
            associator(&u(Unit::j1), &u(Unit::j2), &u(Unit::I)),
            u(Unit::J3)
        );
        for x in Unit::ALL {
            for y in Unit::ALL {
                assert!(associator(&u(x), &u(x), &u(y)).is_zero());
            }
        }
    }

    #[test]
    fn jacobiator_examples() {
        assert_eq!(
            jacobiator(&u(Unit::J1), &u(Unit::J2), &u(Unit::J3)),
            -u(Unit::I)
        );
        // (J1J1)J2 + (J1J2)J1 + (J2J1)J1 = J2 + j3J1 - j3J1 = J2.
        assert_eq!(
            jacobiator(&u(Unit::J1), &u(Unit::J1), &u(Unit::J2)),
            u(Unit::J2).scale(&r(1, 3))
        );
        // With the central scalar: ⅓(yz + yz + zy) = ⅓(2j3 - j3).
        assert_eq!(
            jacobiator(&Q::one(), &u(Unit::J1), &u(Unit::J2)),
            u(Unit::j3).scale(&r(1, 3))
        );
    }

    #[test]
    fn timelike_examples() {
        assert!(is_timelike_vector_part(&(Q::one() + u(Unit::I))));
        assert!(!is_timelike_vector_part(&u(Unit::j1)));
        assert!(!is_timelike_vector_part(&(u(Unit::J1) + u(Unit::j1))));
        assert!(is_timelike_vector_part(&SplitOctonion::<f64>::from_ints([
            0, 1, 0, 0, 0, 2, 0, 0
        ])));
    }

    #[test]
    fn display_lists_nonzero_terms() {
        assert_eq!(format!("{}", Q::zero()), "0");
        assert_eq!(format!("{}", -u(Unit::I)), "(-1)I");
    }
}

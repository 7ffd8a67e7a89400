//! (4+4)-vectors and their grade-1 matrices `𝒳 = Σ x_μ Γ_μ`.

use serde::Serialize;

use super::gamma::{gamma_table, Metric};
use super::matrix::Matrix16;
use crate::error::AlgebraError;
use crate::report::{IdentityCheck, VerificationReport};
use crate::sample;
use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Vector8<T> {
    pub x: [T; 8],
}

impl<T: Scalar> Vector8<T> {
    pub fn new(x: [T; 8]) -> Self {
        Self { x }
    }

    pub fn from_ints(x: [i64; 8]) -> Self {
        Self::new(x.map(T::from_int))
    }

    pub fn zero() -> Self {
        Self::new(std::array::from_fn(|_| T::zero()))
    }

    /// Basis vector `e_μ`.
    pub fn basis(mu: usize) -> Self {
        Self::new(std::array::from_fn(|i| if i == mu { T::one() } else { T::zero() }))
    }

    /// `x₀²+x₁²+x₂²+x₃²−x₄²−x₅²−x₆²−x₇²`.
    pub fn quadratic_form(&self) -> T {
        Metric::SPLIT.quadratic(&self.x)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(std::array::from_fn(|i| self.x[i].clone() + other.x[i].clone()))
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.x.clone().map(|v| v * k.clone()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.x
            .iter()
            .zip(&other.x)
            .map(|(a, b)| (a.clone() - b.clone()).abs_f64())
            .fold(0.0, f64::max)
    }
}

/// `𝒳 = Σ x_μ Γ_μ`.
pub fn vector_to_matrix<T: Scalar>(v: &Vector8<T>) -> Matrix16<T> {
    let mut m = Matrix16::zeros();
    for (g, x) in gamma_table::<T>().iter().zip(&v.x) {
        if !x.is_zero() {
            m.add_scaled(g, x);
        }
    }
    m
}

/// Inverse of [`vector_to_matrix`] via the trace pairing `x_μ = g_μμ tr(Γ_μ𝒳)/16`.
///
/// Fails if the input is not a real grade-1 element: either a recovered
/// component has an imaginary part or `𝒳 − Σ x_μΓ_μ` exceeds `tol`
/// (ignored in exact mode).
pub fn matrix_to_vector<T: Scalar>(m: &Matrix16<T>, tol: f64) -> Result<Vector8<T>, AlgebraError> {
    let g = gamma_table::<T>();
    let sixteenth = T::ratio(1, 16);
    let mut x: [T; 8] = std::array::from_fn(|_| T::zero());
    let mut imag_clean = true;
    let mut imag = 0.0f64;
    for (mu, gm) in g.iter().enumerate() {
        let tr = (gm * m).trace().scale(sixteenth.clone() * T::from_int(Metric::SPLIT.g[mu].into()));
        imag_clean &= tr.im.is_negligible(tol);
        imag = imag.max(tr.im.abs_f64());
        x[mu] = tr.re;
    }
    let v = Vector8::new(x);
    let diff = m - &vector_to_matrix(&v);
    let residual = diff.max_abs().max(imag);
    let clean = imag_clean && diff.is_negligible(tol);
    if clean {
        Ok(v)
    } else {
        Err(AlgebraError::NotGradeOne { residual })
    }
}

/// `𝒳²` for a vector, as a matrix.
pub fn square<T: Scalar>(v: &Vector8<T>) -> Matrix16<T> {
    let x = vector_to_matrix(v);
    &x * &x
}

/// `𝒳² = Q(x)·Id` exactly for random integer vectors.
pub fn quadratic_form_check(n_samples: usize, seed: u64) -> VerificationReport {
    let mut rng = sample::rng(seed);
    let id = Matrix16::<Rational>::identity();
    let mut check = IdentityCheck::new("(Σ x_μΓ_μ)² = Q(x) Id");
    for _ in 0..n_samples {
        let xi = sample::int_components(&mut rng);
        let v = Vector8::<Rational>::from_ints(xi);
        let d = &square(&v) - &id.scale_real(&v.quadratic_form());
        check.record(d.is_zero(), d.max_abs(), || format!("x = {xi:?}"));
    }
    let mut report = VerificationReport::new("quadratic form", true).with_seed(seed);
    report.push(check);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::gamma::gamma;
    use crate::scalar::Rational;

    type Q = Rational;

    #[test]
    fn basis_vector_maps_to_gamma() {
        assert_eq!(vector_to_matrix(&Vector8::<Q>::basis(0)), gamma(0).unwrap());
        assert!(vector_to_matrix(&Vector8::<Q>::zero()).is_zero());
    }

    #[test]
    fn round_trips() {
        assert_eq!(matrix_to_vector(&gamma::<Q>(3).unwrap(), 0.0).unwrap(), Vector8::basis(3));
        let m = &gamma::<Q>(0).unwrap() + &gamma::<Q>(7).unwrap().scale_real(&Q::from_int(2));
        assert_eq!(matrix_to_vector(&m, 0.0).unwrap(), Vector8::from_ints([1, 0, 0, 0, 0, 0, 0, 2]));
    }

    #[test]
    fn identity_is_not_grade_one() {
        assert!(matches!(
            matrix_to_vector(&Matrix16::<Q>::identity(), 0.0),
            Err(AlgebraError::NotGradeOne { .. })
        ));
        assert!(matrix_to_vector(&Matrix16::<f64>::identity(), 1e-10).is_err());
    }

    #[test]
    fn square_is_quadratic_form() {
        let v = Vector8::<Q>::from_ints([1, -2, 3, 0, 4, 1, -1, 2]);
        let q = v.quadratic_form();
        assert_eq!(q, Q::from_int(1 + 4 + 9 - 16 - 1 - 1 - 4));
        assert_eq!(square(&v), Matrix16::identity().scale_real(&q));
    }
}

//! Spin(4,4) rotors `L_μν(θ) = exp(−½θΓ_μΓ_ν)` and their products.

use serde::Serialize;

use super::gamma::{bivector, Metric};
use super::matrix::Matrix16;
use super::spinor::{frame_matrix, Spinor16};
use super::vector::{matrix_to_vector, vector_to_matrix, Vector8};
use crate::error::AlgebraError;
use crate::scalar::{per_type, Rational, Scalar};

/// One factor `L_μν(θ)` of a rotor word.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Plane {
    pub mu: usize,
    pub nu: usize,
    pub theta: f64,
}

/// A product of plane rotors.
///
/// Keeps the Γ-frame matrix `L`, its inverse, and the real spinor action
/// `S⁻¹LS` (see [`super::spinor`]). Angles are continuous, so rotors are `f64`.
#[derive(Clone, Debug, PartialEq)]
pub struct Rotor {
    planes: Vec<Plane>,
    matrix: Matrix16<f64>,
    inverse: Matrix16<f64>,
    spinor: Matrix16<f64>,
    spinor_inverse: Matrix16<f64>,
}

/// `Γ_μΓ_ν` and `S⁻¹·Γ_μΓ_ν·S = M†Γ_μΓ_νM/2` for every ordered pair,
/// computed exactly once and converted. Index `8μ + ν`; the diagonal is unused.
fn generator_table() -> &'static [(Matrix16<f64>, Matrix16<f64>)] {
    per_type::<f64, Vec<_>>("rotor generators", || {
        let m = frame_matrix::<Rational>();
        let md = m.adjoint();
        (0..64)
            .map(|k| {
                let (mu, nu) = (k / 8, k % 8);
                let g = bivector::<Rational>(mu, nu).expect("indices in range");
                let s = (&(&md * &g) * &m).scale_real(&Rational::half());
                debug_assert!(s.is_real(0.0), "spinor generator must be real");
                (g.to_f64(), s.to_f64())
            })
            .collect()
    })
}

/// `(cos, sin)` or `(cosh, sinh)` of the half angle, by plane signature.
fn half_angle(mu: usize, nu: usize, theta: f64) -> (f64, f64) {
    let h = 0.5 * theta;
    if Metric::SPLIT.is_compact(mu, nu) {
        (h.cos(), h.sin())
    } else {
        (h.cosh(), h.sinh())
    }
}

fn closed_form(gen: &Matrix16<f64>, c: f64, s: f64) -> Matrix16<f64> {
    &Matrix16::identity().scale_real(&c) - &gen.scale_real(&s)
}

impl Rotor {
    pub fn identity() -> Self {
        let id = Matrix16::identity();
        Self {
            planes: Vec::new(),
            matrix: id.clone(),
            inverse: id.clone(),
            spinor: id.clone(),
            spinor_inverse: id,
        }
    }

    /// `L_μν(θ)` in closed form. Since `(Γ_μΓ_ν)² = −g_μμg_νν`, this is
    /// `cos(θ/2) − sin(θ/2)Γ_μΓ_ν` on compact planes and
    /// `cosh(θ/2) − sinh(θ/2)Γ_μΓ_ν` on mixed-signature planes.
    pub fn plane(mu: usize, nu: usize, theta: f64) -> Result<Self, AlgebraError> {
        if mu >= 8 {
            return Err(AlgebraError::IndexOutOfRange(mu));
        }
        if nu >= 8 {
            return Err(AlgebraError::IndexOutOfRange(nu));
        }
        if mu == nu {
            return Err(AlgebraError::DegeneratePlane(mu));
        }
        let (c, s) = half_angle(mu, nu, theta);
        let (g, k) = &generator_table()[8 * mu + nu];
        // L_μν⁻¹ = L_νμ and Γ_νΓ_μ = −Γ_μΓ_ν.
        Ok(Self {
            planes: vec![Plane { mu, nu, theta }],
            matrix: closed_form(g, c, s),
            inverse: closed_form(g, c, -s),
            spinor: closed_form(k, c, s),
            spinor_inverse: closed_form(k, c, -s),
        })
    }

    /// Ordered product `L₁L₂⋯` of plane rotors.
    pub fn word(planes: &[(usize, usize, f64)]) -> Result<Self, AlgebraError> {
        planes.iter().try_fold(Self::identity(), |acc, &(mu, nu, theta)| {
            Ok(acc.then(&Self::plane(mu, nu, theta)?))
        })
    }

    /// `self · other` (so `other` acts first).
    pub fn then(&self, other: &Rotor) -> Rotor {
        Rotor {
            planes: self.planes.iter().chain(&other.planes).copied().collect(),
            matrix: &self.matrix * &other.matrix,
            inverse: &other.inverse * &self.inverse,
            spinor: &self.spinor * &other.spinor,
            spinor_inverse: &other.spinor_inverse * &self.spinor_inverse,
        }
    }

    pub fn inverse(&self) -> Rotor {
        Rotor {
            planes: self
                .planes
                .iter()
                .rev()
                .map(|p| Plane { mu: p.nu, nu: p.mu, theta: p.theta })
                .collect(),
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
            spinor: self.spinor_inverse.clone(),
            spinor_inverse: self.spinor.clone(),
        }
    }

    pub fn planes(&self) -> &[Plane] {
        &self.planes
    }

    /// `L` acting on complex Γ-frame spinors.
    pub fn matrix(&self) -> &Matrix16<f64> {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix16<f64> {
        &self.inverse
    }

    /// `S⁻¹LS`: real and block-diagonal in the φ/ψ split.
    pub fn spinor_matrix(&self) -> &Matrix16<f64> {
        &self.spinor
    }
}

/// `𝒳' = L𝒳L⁻¹`, read back as a vector.
pub fn rotate_vector(x: &Vector8<f64>, r: &Rotor) -> Vector8<f64> {
    let m = &(&r.matrix * &vector_to_matrix(x)) * &r.inverse;
    let scale = x.x.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    matrix_to_vector(&m, 1e-9 * scale).expect("rotors preserve grade 1")
}

/// `η' = Lη`, in real spinor coordinates.
pub fn rotate_spinor(eta: &Spinor16<f64>, r: &Rotor) -> Spinor16<f64> {
    let col: Vec<_> = eta.column().into_iter().map(|v| num_complex::Complex::new(v, 0.0)).collect();
    let out: Vec<f64> = r.spinor.apply(&col).into_iter().map(|z| z.re).collect();
    Spinor16::from_column(&out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::spinor::spinor_invariant;
    use std::f64::consts::PI;

    fn close(a: &Matrix16<f64>, b: &Matrix16<f64>, tol: f64) -> bool {
        (a - b).is_negligible(tol)
    }

    #[test]
    fn zero_angle_is_identity() {
        let r = Rotor::plane(4, 5, 0.0).unwrap();
        assert_eq!(r.matrix(), &Matrix16::identity());
    }

    #[test]
    fn degenerate_and_out_of_range_planes() {
        assert_eq!(Rotor::plane(2, 2, 1.0), Err(AlgebraError::DegeneratePlane(2)));
        assert_eq!(Rotor::plane(0, 9, 1.0), Err(AlgebraError::IndexOutOfRange(9)));
    }

    #[test]
    fn reversed_plane_is_inverse() {
        for (mu, nu) in [(0, 1), (0, 4), (5, 7), (3, 6)] {
            let a = Rotor::plane(mu, nu, 0.7).unwrap();
            let b = Rotor::plane(nu, mu, 0.7).unwrap();
            assert!(close(&(a.matrix() * b.matrix()), &Matrix16::identity(), 1e-14));
            assert!(close(b.matrix(), a.inverse_matrix(), 0.0));
        }
    }

    #[test]
    fn compact_rotation_of_e4() {
        let th = 0.4;
        let v = rotate_vector(&Vector8::basis(4), &Rotor::plane(4, 5, th).unwrap());
        let mut expected = [0.0; 8];
        expected[4] = th.cos();
        expected[5] = -th.sin();
        assert!(v.max_abs_diff(&Vector8::new(expected)) < 1e-14);
    }

    #[test]
    fn boost_of_e0() {
        let th = 0.9;
        let v = rotate_vector(&Vector8::basis(0), &Rotor::plane(0, 4, th).unwrap());
        let mut expected = [0.0; 8];
        expected[0] = th.cosh();
        expected[4] = th.sinh();
        assert!(v.max_abs_diff(&Vector8::new(expected)) < 1e-14);
    }

    #[test]
    fn boost_is_hyperbolic() {
        // L₀₄(θ) has eigenvalues e^{±θ/2}: trace is 16·cosh(θ/2).
        let th = 1.3;
        let tr = Rotor::plane(0, 4, th).unwrap().matrix().trace();
        assert!((tr.re - 16.0 * (th / 2.0).cosh()).abs() < 1e-12);
        assert!(tr.im.abs() < 1e-12);
    }

    #[test]
    fn spinor_action_is_block_diagonal() {
        let r = Rotor::word(&[(0, 1, 0.3), (2, 6, -1.1), (4, 7, 2.0)]).unwrap();
        let s = r.spinor_matrix();
        for i in 0..16 {
            for j in 0..16 {
                if (i < 8) != (j < 8) {
                    assert_eq!(s[(i, j)].re, 0.0);
                }
                assert_eq!(s[(i, j)].im, 0.0);
            }
        }
    }

    #[test]
    fn double_cover() {
        let eta = Spinor16::new([1.0, 2.0, 0.0, -1.0, 0.5, 0.0, 3.0, 1.0], [0.0, 1.0, 1.0, 2.0, -2.0, 0.0, 0.0, 1.0]);
        let x = Vector8::new([1.0, -1.0, 2.0, 0.5, 0.0, 3.0, 1.0, -2.0]);
        let r2 = Rotor::plane(0, 1, 2.0 * PI).unwrap();
        assert!(rotate_spinor(&eta, &r2).max_abs_diff(&eta.scale(&-1.0)) < 1e-12);
        assert!(rotate_vector(&x, &r2).max_abs_diff(&x) < 1e-12);
        let r4 = Rotor::plane(0, 1, 4.0 * PI).unwrap();
        assert!(rotate_spinor(&eta, &r4).max_abs_diff(&eta) < 1e-12);
    }

    #[test]
    fn spinor_invariant_preserved() {
        let eta = Spinor16::new([1.0, 2.0, 0.0, -1.0, 0.5, 0.0, 3.0, 1.0], [0.0, 1.0, 1.0, 2.0, -2.0, 0.0, 0.0, 1.0]);
        let r = Rotor::word(&[(0, 5, 1.2), (3, 1, -0.4), (6, 7, 2.5)]).unwrap();
        let before = spinor_invariant(&eta);
        let after = spinor_invariant(&rotate_spinor(&eta, &r));
        assert!((before - after).abs() < 1e-12);
    }

    #[test]
    fn composite_inverse() {
        let r = Rotor::word(&[(0, 5, 1.2), (3, 1, -0.4)]).unwrap();
        let id = r.then(&r.inverse());
        assert!(close(id.matrix(), &Matrix16::identity(), 1e-14));
        assert!(close(id.spinor_matrix(), &Matrix16::identity(), 1e-14));
        assert_eq!(r.inverse().planes()[0], Plane { mu: 1, nu: 3, theta: -0.4 });
    }

    #[test]
    fn group_law() {
        let a = Rotor::plane(1, 6, 0.4).unwrap();
        let b = Rotor::plane(1, 6, -1.5).unwrap();
        let ab = Rotor::plane(1, 6, -1.1).unwrap();
        assert!(close(a.then(&b).matrix(), ab.matrix(), 1e-12));
    }
}

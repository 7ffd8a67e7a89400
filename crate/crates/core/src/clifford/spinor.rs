//! Chiral spinors, the spinor frame, the invariant `ηᵀBη` and the trilinear
//! form `φᵀB𝒳ψ`.
//!
//! A [`Spinor16`] holds the real components `(φ₀..φ₇, ψ₀..ψ₇)`. The Γ
//! matrices act on complex columns `ξ = S·η` with `S = M/√2` the fixed
//! spinor frame (see [`frame_matrix`]); `M` has Gaussian-integer entries and
//! `M·M† = 2·Id`. In these coordinates
//!
//! * `ξᵀBξ = φ₀²+φ₁²+φ₂²+φ₃²−φ₄²−φ₅²−φ₆²−φ₇²` plus the same form in ψ;
//! * rotors act by the real block-diagonal matrices `S⁻¹LS`, so chirality is
//!   preserved exactly.
//!
//! Every formula keeps the `1/√2` symbolic: each bilinear expression carries
//! two factors of `S`, giving an exact `1/2`.

use serde::Serialize;

use super::gamma::b_ref;
use super::matrix::Matrix16;
use super::vector::{vector_to_matrix, Vector8};
use crate::error::AlgebraError;
use crate::scalar::{cx, cx_zero, per_type, Cx, Scalar};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spinor16<T> {
    pub phi: [T; 8],
    pub psi: [T; 8],
}

impl<T: Scalar> Spinor16<T> {
    pub fn new(phi: [T; 8], psi: [T; 8]) -> Self {
        Self { phi, psi }
    }

    pub fn zero() -> Self {
        Self::new(zeros(), zeros())
    }

    /// Pure φ-chirality spinor (ψ-block zero).
    pub fn from_phi(phi: [T; 8]) -> Self {
        Self::new(phi, zeros())
    }

    /// Pure ψ-chirality spinor (φ-block zero).
    pub fn from_psi(psi: [T; 8]) -> Self {
        Self::new(zeros(), psi)
    }

    pub fn from_ints(phi: [i64; 8], psi: [i64; 8]) -> Self {
        Self::new(phi.map(T::from_int), psi.map(T::from_int))
    }

    /// Column layout: φ in slots 0..8, ψ in slots 8..16.
    pub fn from_column(c: &[T]) -> Self {
        assert_eq!(c.len(), 16);
        Self::new(std::array::from_fn(|i| c[i].clone()), std::array::from_fn(|i| c[i + 8].clone()))
    }

    pub fn column(&self) -> Vec<T> {
        self.phi.iter().chain(&self.psi).cloned().collect()
    }

    pub fn phi_part(&self) -> Self {
        Self::from_phi(self.phi.clone())
    }

    pub fn psi_part(&self) -> Self {
        Self::from_psi(self.psi.clone())
    }

    pub fn is_phi_chiral(&self) -> bool {
        self.psi.iter().all(|v| v.is_zero())
    }

    pub fn is_psi_chiral(&self) -> bool {
        self.phi.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_column(
            &self.column().into_iter().zip(other.column()).map(|(a, b)| a + b).collect::<Vec<_>>(),
        )
    }

    pub fn scale(&self, k: &T) -> Self {
        Self::new(self.phi.clone().map(|v| v * k.clone()), self.psi.clone().map(|v| v * k.clone()))
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.column()
            .into_iter()
            .zip(other.column())
            .map(|(a, b)| (a - b).abs_f64())
            .fold(0.0, f64::max)
    }
}

fn zeros<T: Scalar>() -> [T; 8] {
    std::array::from_fn(|_| T::zero())
}

/// Nonzero entries of the frame matrix `M`, row by row: `(column, re, im)`.
/// Rows 0..8 read φ, rows 8..16 read ψ (column offset 8).
const FRAME: [[(usize, i64, i64); 2]; 16] = [
    [(2, -1, 0), (3, 0, 1)],
    [(0, 1, 0), (1, 0, -1)],
    [(7, -1, 0), (6, 0, -1)],
    [(5, -1, 0), (4, 0, 1)],
    [(5, -1, 0), (4, 0, -1)],
    [(7, 1, 0), (6, 0, -1)],
    [(0, -1, 0), (1, 0, -1)],
    [(2, -1, 0), (3, 0, -1)],
    [(2, 1, 0), (3, 0, -1)],
    [(0, -1, 0), (1, 0, -1)],
    [(7, -1, 0), (6, 0, -1)],
    [(5, -1, 0), (4, 0, 1)],
    [(5, 1, 0), (4, 0, 1)],
    [(7, -1, 0), (6, 0, 1)],
    [(0, -1, 0), (1, 0, 1)],
    [(2, -1, 0), (3, 0, -1)],
];

/// The Gaussian-integer frame matrix `M`; the complex spinor is `ξ = M·η/√2`.
pub fn frame_matrix<T: Scalar>() -> Matrix16<T> {
    Matrix16::from_entries(FRAME.iter().enumerate().flat_map(|(r, row)| {
        let off = if r < 8 { 0 } else { 8 };
        row.iter().map(move |&(c, re, im)| (r, c + off, cx(re, im)))
    }))
}

/// `M·η`, i.e. `√2·ξ`.
pub fn to_frame<T: Scalar>(eta: &Spinor16<T>) -> Vec<Cx<T>> {
    let col: Vec<Cx<T>> = eta.column().into_iter().map(|v| Cx::new(v, T::zero())).collect();
    per_type::<T, Matrix16<T>>("frame", frame_matrix::<T>).apply(&col)
}

/// `uᵀ·A·v` (plain transpose, no conjugation).
pub fn bilinear<T: Scalar>(u: &[Cx<T>], a: &Matrix16<T>, v: &[Cx<T>]) -> Cx<T> {
    let av = a.apply(v);
    u.iter().zip(&av).fold(cx_zero(), |acc, (x, y)| acc + x * y)
}

fn real_or_panic<T: Scalar>(z: Cx<T>, what: &str) -> T {
    debug_assert!(z.im.is_negligible(1e-9), "{what} has imaginary part {}", z.im);
    z.re
}

/// `ξᵀBξ`, which equals `φᵀBφ + ψᵀBψ` (no cross terms).
pub fn spinor_invariant<T: Scalar>(eta: &Spinor16<T>) -> T {
    let xi = to_frame(eta);
    let v = bilinear(&xi, b_ref(), &xi).scale(T::half());
    real_or_panic(v, "spinor invariant")
}

/// The φ- and ψ-contributions to [`spinor_invariant`], computed separately.
pub fn chiral_invariants<T: Scalar>(eta: &Spinor16<T>) -> (T, T) {
    (spinor_invariant(&eta.phi_part()), spinor_invariant(&eta.psi_part()))
}

/// `ℱ(φ, 𝒳, ψ) = φᵀB𝒳ψ` with φ and ψ taken through the spinor frame.
pub fn trilinear_matrix<T: Scalar>(
    phi: &Spinor16<T>,
    x: &Vector8<T>,
    psi: &Spinor16<T>,
) -> Result<T, AlgebraError> {
    if !phi.is_phi_chiral() {
        return Err(AlgebraError::Chirality { slot: "phi" });
    }
    if !psi.is_psi_chiral() {
        return Err(AlgebraError::Chirality { slot: "psi" });
    }
    let bx = b_ref() * &vector_to_matrix(x);
    let v = bilinear(&to_frame(phi), &bx, &to_frame(psi)).scale(T::half());
    Ok(real_or_panic(v, "trilinear form"))
}

//! The complex spinor basis `ξ = M·η/√2` and the choice of quadratic-form
//! convention in it.

use serde::Serialize;

use crate::clifford::spinor::to_frame;
use crate::clifford::{b_matrix, frame_matrix, Matrix16, Spinor16};
use crate::error::AlgebraError;
use crate::report::{IdentityCheck, VerificationReport};
use crate::scalar::{cx, Cx, Scalar};

/// `ξ = scaled/√2`; the `1/√2` is kept symbolic so `scaled` stays exact.
#[derive(Clone, Debug, PartialEq)]
pub struct XiSpinor<T> {
    pub scaled: Vec<Cx<T>>,
}

impl<T: Scalar> XiSpinor<T> {
    /// Numeric value of component `k`.
    pub fn component(&self, k: usize) -> Cx<f64> {
        let z = &self.scaled[k];
        Cx::new(z.re.to_f64(), z.im.to_f64()) / std::f64::consts::SQRT_2
    }
}

pub fn xi_basis_change<T: Scalar>(eta: &Spinor16<T>) -> XiSpinor<T> {
    XiSpinor { scaled: to_frame(eta) }
}

/// Ways of reading "the quadratic form in the ξ basis".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum XiConvention {
    /// `ξᵀBξ`
    Transpose,
    /// `ξ†Bξ`
    Adjoint,
    /// `ξᵀB'ξ` with `B' = SBS⁻¹` (B carried into the new basis)
    TransposeRewritten,
    /// `ξ†B'ξ` with `B' = SBS⁻¹`
    AdjointRewritten,
}

impl XiConvention {
    pub const ALL: [XiConvention; 4] = [
        XiConvention::Transpose,
        XiConvention::Adjoint,
        XiConvention::TransposeRewritten,
        XiConvention::AdjointRewritten,
    ];

    /// Gram matrix `G` such that the form equals `ηᵀGη` for real `η`.
    ///
    /// With `S = M/√2` unitary, `S⁻¹ = S†`, so every candidate carries an
    /// even number of `1/√2` factors and stays exact.
    pub fn gram<T: Scalar>(self) -> Matrix16<T> {
        let m = frame_matrix::<T>();
        let b = b_matrix::<T>();
        let half = T::half();
        match self {
            XiConvention::Transpose => (&(&m.transpose() * &b) * &m).scale_real(&half),
            XiConvention::Adjoint => (&(&m.adjoint() * &b) * &m).scale_real(&half),
            // Sᵀ·SBS†·S = SᵀS·B
            XiConvention::TransposeRewritten => (&(&m.transpose() * &m) * &b).scale_real(&half),
            // S†·SBS†·S = B
            XiConvention::AdjointRewritten => b,
        }
    }
}

/// `diag(+,+,+,+,−,−,−,−)` on each chiral block.
pub fn split_forms<T: Scalar>() -> Matrix16<T> {
    Matrix16::diagonal(&(0..16).map(|k| cx(if k % 8 < 4 { 1 } else { -1 }, 0)).collect::<Vec<_>>())
}

fn symmetric_part<T: Scalar>(g: &Matrix16<T>) -> Matrix16<T> {
    (g + &g.transpose()).scale_real(&T::half())
}

/// Evaluates all four conventions exactly and returns the ones whose
/// quadratic form is the split diagonal form on both chiral blocks.
pub fn matching_conventions() -> Vec<XiConvention> {
    use crate::scalar::Rational;
    let target = split_forms::<Rational>();
    XiConvention::ALL
        .into_iter()
        .filter(|c| symmetric_part(&c.gram::<Rational>()) == target)
        .collect()
}

/// The single convention reproducing the split forms.
pub fn xi_convention_oracle() -> Result<XiConvention, AlgebraError> {
    match matching_conventions().as_slice() {
        [c] => Ok(*c),
        _ => Err(AlgebraError::Convention),
    }
}

/// Exact checks on the basis change: `MM† = 2·Id`, and the pinned
/// convention diagonalizes the invariant.
pub fn xi_check<T: Scalar>() -> VerificationReport {
    let m = frame_matrix::<T>();
    let two = Matrix16::<T>::identity().scale_real(&T::from_int(2));
    let mut report = VerificationReport::new("xi", T::EXACT);

    let mut unitary = IdentityCheck::new("M M† = M† M = 2 Id");
    for (name, p) in [("M M†", &m * &m.adjoint()), ("M† M", &m.adjoint() * &m)] {
        let d = &p - &two;
        unitary.record(d.is_zero(), d.max_abs(), || name.to_string());
    }
    report.push(unitary);

    let mut conv = IdentityCheck::new("exactly one ξ convention yields the split forms");
    let found = matching_conventions();
    conv.record(found.len() == 1, 0.0, || format!("matching conventions: {found:?}"));
    report.push(conv);
    if let [c] = found.as_slice() {
        report.note(format!("pinned ξ convention: {c:?}"));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = Rational;

    #[test]
    fn transpose_convention_is_pinned() {
        assert_eq!(xi_convention_oracle(), Ok(XiConvention::Transpose));
    }

    #[test]
    fn phi_e0_lands_in_rows_1_and_6() {
        let mut phi = [0i64; 8];
        phi[0] = 1;
        let xi = xi_basis_change(&Spinor16::<Q>::from_ints(phi, [0; 8]));
        for (k, z) in xi.scaled.iter().enumerate() {
            let expected = match k {
                1 => cx(1, 0),
                6 => cx(-1, 0),
                _ => cx(0, 0),
            };
            assert_eq!(z, &expected, "row {k}");
        }
        assert!((xi.component(1).re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn rows_0_and_8() {
        let eta = Spinor16::<Q>::from_ints([0, 0, 2, 3, 0, 0, 0, 0], [0, 0, 5, 7, 0, 0, 0, 0]);
        let xi = xi_basis_change(&eta);
        assert_eq!(xi.scaled[0], cx(-2, 3)); // −φ₂ + iφ₃
        assert_eq!(xi.scaled[8], cx(5, -7)); // ψ₂ − iψ₃
    }

    #[test]
    fn zero_maps_to_zero() {
        let xi = xi_basis_change(&Spinor16::<Q>::zero());
        assert!(xi.scaled.iter().all(|z| z == &cx(0, 0)));
    }

    #[test]
    fn exact_checks_pass() {
        assert!(xi_check::<Q>().passed());
    }
}

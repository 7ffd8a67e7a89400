//! The α tables, the 16×16 generators Γ_μ of Cl(4,4) and the grade-4 element B.

use serde::Serialize;

use super::matrix::{Matrix16, Matrix8};
use crate::error::AlgebraError;
use crate::report::{IdentityCheck, VerificationReport};
use crate::scalar::{cx, per_type, Scalar};

/// Diagonal metric of signature (+,+,+,+,−,−,−,−).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Metric {
    pub g: [i8; 8],
}

impl Metric {
    pub const SPLIT: Metric = Metric { g: [1, 1, 1, 1, -1, -1, -1, -1] };

    pub fn get(&self, mu: usize, nu: usize) -> i8 {
        if mu == nu {
            self.g[mu]
        } else {
            0
        }
    }

    /// `g_μμ g_νν = +1`: rotations in the plane are compact.
    pub fn is_compact(&self, mu: usize, nu: usize) -> bool {
        self.g[mu] * self.g[nu] == 1
    }

    /// `Q(x) = Σ g_μμ x_μ²`.
    pub fn quadratic<T: Scalar>(&self, x: &[T; 8]) -> T {
        x.iter()
            .zip(self.g)
            .fold(T::zero(), |acc, (v, g)| acc + T::from_int(g.into()) * v.clone() * v.clone())
    }
}

/// One nonzero per row: `(column, re, im)`.
type Table = [(usize, i64, i64); 8];

const ALPHA: [Table; 8] = [
    [(0, -1, 0), (1, 1, 0), (2, 1, 0), (3, 1, 0), (4, -1, 0), (5, -1, 0), (6, -1, 0), (7, 1, 0)],
    [(0, 0, 1), (1, 0, 1), (2, 0, 1), (3, 0, 1), (4, 0, 1), (5, 0, 1), (6, 0, 1), (7, 0, 1)],
    [(1, 1, 0), (0, 1, 0), (4, -1, 0), (5, -1, 0), (2, -1, 0), (3, -1, 0), (7, 1, 0), (6, 1, 0)],
    [(1, 0, -1), (0, 0, 1), (4, 0, 1), (5, 0, 1), (2, 0, -1), (3, 0, -1), (7, 0, -1), (6, 0, 1)],
    [(2, 1, 0), (4, 1, 0), (0, 1, 0), (6, -1, 0), (1, 1, 0), (7, -1, 0), (3, -1, 0), (5, -1, 0)],
    [(2, 0, 1), (4, 0, 1), (0, 0, -1), (6, 0, -1), (1, 0, -1), (7, 0, -1), (3, 0, 1), (5, 0, 1)],
    [(3, 1, 0), (5, 1, 0), (6, 1, 0), (0, 1, 0), (7, 1, 0), (1, 1, 0), (2, 1, 0), (4, 1, 0)],
    [(3, 0, -1), (5, 0, -1), (6, 0, -1), (0, 0, 1), (7, 0, -1), (1, 0, 1), (2, 0, 1), (4, 0, 1)],
];

fn check_index(mu: usize) -> Result<(), AlgebraError> {
    if mu < 8 {
        Ok(())
    } else {
        Err(AlgebraError::IndexOutOfRange(mu))
    }
}

/// The 8×8 matrix α_μ, entries in {0, ±1, ±i}.
pub fn alpha<T: Scalar>(mu: usize) -> Result<Matrix8<T>, AlgebraError> {
    check_index(mu)?;
    Ok(Matrix8::from_entries(
        ALPHA[mu].iter().enumerate().map(|(r, &(c, re, im))| (r, c, cx(re, im))),
    ))
}

/// `A_μ = [[0, α_μ], [α_μ†, 0]]`.
fn a_block<T: Scalar>(mu: usize) -> Matrix16<T> {
    let a = alpha::<T>(mu).expect("index checked");
    let ad = a.adjoint();
    Matrix16::from_fn(|r, c| match (r < 8, c < 8) {
        (true, false) => a[(r, c - 8)].clone(),
        (false, true) => ad[(r - 8, c)].clone(),
        _ => cx(0, 0),
    })
}

/// `Γ_μ = A_μ` for μ < 4 and `i·A_μ` for μ ≥ 4.
pub fn gamma<T: Scalar>(mu: usize) -> Result<Matrix16<T>, AlgebraError> {
    check_index(mu)?;
    let a = a_block::<T>(mu);
    Ok(if mu < 4 { a } else { a.scale(&cx(0, 1)) })
}

/// All eight generators.
pub fn gammas<T: Scalar>() -> Vec<Matrix16<T>> {
    gamma_table::<T>().to_vec()
}

/// Shared copy of the eight generators.
pub(crate) fn gamma_table<T: Scalar>() -> &'static [Matrix16<T>] {
    per_type::<T, Vec<Matrix16<T>>>("gamma", || (0..8).map(|mu| gamma(mu).expect("index in range")).collect())
}

/// Shared copy of [`b_matrix`].
pub(crate) fn b_ref<T: Scalar>() -> &'static Matrix16<T> {
    per_type::<T, Matrix16<T>>("B", || {
        let g = gamma_table::<T>();
        -(&(&(&g[1] * &g[3]) * &g[5]) * &g[7])
    })
}

/// Checks `Γ_μΓ_ν + Γ_νΓ_μ = 2g_μν·Id` for all 64 ordered pairs.
pub fn verify_clifford<T: Scalar>(tol: f64) -> VerificationReport {
    let g = gamma_table::<T>();
    let id = Matrix16::<T>::identity();
    let mut check = IdentityCheck::new("Γ_μΓ_ν + Γ_νΓ_μ = 2g_μν Id");
    for mu in 0..8 {
        for nu in 0..8 {
            let anti = &(&g[mu] * &g[nu]) + &(&g[nu] * &g[mu]);
            let expected = id.scale_real(&T::from_int(2 * i64::from(Metric::SPLIT.get(mu, nu))));
            let diff = &anti - &expected;
            check.record(diff.is_negligible(tol), diff.max_abs(), || {
                let (r, c) = (0..256)
                    .map(|k| (k / 16, k % 16))
                    .find(|&(r, c)| !crate::scalar::cx_is_negligible(&diff[(r, c)], tol))
                    .unwrap_or((0, 0));
                let z = &anti[(r, c)];
                format!("({mu},{nu}): entry ({r},{c}) = {} + {}i", z.re, z.im)
            });
        }
    }
    let mut report = VerificationReport::new("clifford", T::EXACT);
    report.push(check);
    report
}

/// Γ matrices after an exact anticommutation sweep; the first failing pair is an error.
pub fn validated_gammas<T: Scalar>() -> Result<Vec<Matrix16<T>>, AlgebraError> {
    let g = gamma_table::<T>();
    let id = Matrix16::<T>::identity();
    for mu in 0..8 {
        for nu in mu..8 {
            let anti = &(&g[mu] * &g[nu]) + &(&g[nu] * &g[mu]);
            let two_g = id.scale_real(&T::from_int(2 * i64::from(Metric::SPLIT.get(mu, nu))));
            if !(&anti - &two_g).is_negligible(1e-12) {
                return Err(AlgebraError::Clifford(mu, nu));
            }
        }
    }
    Ok(g.to_vec())
}

/// `B = −Γ₁Γ₃Γ₅Γ₇`: real, symmetric, `B² = Id`, `Γ_μᵀ = BΓ_μB`.
pub fn b_matrix<T: Scalar>() -> Matrix16<T> {
    b_ref::<T>().clone()
}

/// `B² = Id`, `B` real and symmetric, `Γ_μᵀ = BΓ_μB` for every μ.
pub fn verify_b<T: Scalar>(tol: f64) -> VerificationReport {
    let b = b_ref::<T>();
    let mut report = VerificationReport::new("B", T::EXACT);

    let mut shape = IdentityCheck::new("B² = Id, B real, Bᵀ = B");
    let sq = &(b * b) - &Matrix16::identity();
    shape.record(sq.is_negligible(tol), sq.max_abs(), || "B² ≠ Id".into());
    shape.record(b.is_real(tol), 0.0, || "B has imaginary entries".into());
    let asym = b - &b.transpose();
    shape.record(asym.is_negligible(tol), asym.max_abs(), || "B not symmetric".into());
    report.push(shape);

    let mut conj = IdentityCheck::new("Γ_μᵀ = BΓ_μB");
    for (mu, g) in gamma_table::<T>().iter().enumerate() {
        let d = &g.transpose() - &(&(b * g) * b);
        conj.record(d.is_negligible(tol), d.max_abs(), || format!("μ = {mu}"));
    }
    report.push(conj);
    report
}

/// `Γ_μΓ_ν`.
pub fn bivector<T: Scalar>(mu: usize, nu: usize) -> Result<Matrix16<T>, AlgebraError> {
    Ok(&gamma::<T>(mu)? * &gamma::<T>(nu)?)
}

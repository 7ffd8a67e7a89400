//! The complex 16×16 representation of Cl(4,4).

pub mod gamma;
pub mod matrix;
pub mod rotor;
pub mod spinor;
pub mod vector;

pub use gamma::{alpha, b_matrix, gamma, gammas, validated_gammas, verify_b, verify_clifford, Metric};
pub use matrix::{Matrix, Matrix16, Matrix8};
pub use rotor::{rotate_spinor, rotate_vector, Plane, Rotor};
pub use spinor::{chiral_invariants, frame_matrix, spinor_invariant, trilinear_matrix, Spinor16};
pub use vector::{matrix_to_vector, quadratic_form_check, vector_to_matrix, Vector8};

//! Split octonions, the Clifford algebra Cl(4,4) and the triality
//! correspondence between them.
//!
//! * [`octonion`] — the 8-dimensional split-octonion algebra, its product
//!   table and exhaustive identity checks.
//! * [`clifford`] — 16×16 gamma matrices, (4+4)-vectors, chiral spinors and
//!   rotors.
//! * [`triality`] — the map between the two pictures: spinor bases, the
//!   triality rotor and the trilinear-form correspondence.

pub mod clifford;
pub mod error;
pub mod octonion;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod triality;

pub use error::AlgebraError;
pub use report::{IdentityCheck, VerificationReport};
pub use scalar::{Rational, Scalar};

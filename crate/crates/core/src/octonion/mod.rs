//! The split-octonion algebra: basis units, elements, identity sweeps and
//! the table generated from the vector-like units.

mod element;
pub mod generate;
pub mod identities;
mod unit;

pub use element::{
    associator, commutator, inner, inner_full, is_timelike_vector_part, jacobiator, jacobiator_by,
    ExactOctonion, SplitOctonion,
};
pub use generate::generate_basis_from_j;
pub use identities::{verify_associators, verify_malcev, verify_moufang};
pub use unit::{delta, epsilon, SignedUnit, StructureConstants, Unit};

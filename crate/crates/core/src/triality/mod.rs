//! The bridge between the matrix and octonion pictures: the spinor basis
//! change, the role-swapping rotor, and the two trilinear forms.

pub mod correspondence;
pub mod generators;
pub mod xi;

pub use correspondence::{
    correspondence_check, oct_from_components, rotor_invariance_check, trilinear_agreement_check,
    trilinear_equivalence_oracle, trilinear_invariance_check, trilinear_oct, CorrespondenceMap,
    OctTriple, SlotEntry,
};
pub use generators::{
    boost_table_check, double_cover_check, generators, role_swap_check, rotation_table_check,
    triality_rotor, Generators,
};
pub use xi::{xi_basis_change, xi_check, xi_convention_oracle, XiConvention, XiSpinor};

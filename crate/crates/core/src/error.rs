use thiserror::Error;

use crate::octonion::Unit;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("unknown basis unit {0:?}")]
    UnknownUnit(String),
    #[error("product {0}·{1} assigned twice while building the table")]
    TableConflict(Unit, Unit),
    #[error("product {0}·{1} left undefined by the relations")]
    TableHole(Unit, Unit),
    #[error("relation does not reduce to a single signed unit")]
    NotSingleUnit,
    #[error("basis generation failed: {0}")]
    Generation(String),
    #[error("index {0} out of range 0..8")]
    IndexOutOfRange(usize),
    #[error("rotation plane needs two distinct indices, got ({0}, {0})")]
    DegeneratePlane(usize),
    #[error("matrix is not a grade-1 element (residual {residual:e})")]
    NotGradeOne { residual: f64 },
    #[error("{slot} spinor has nonzero components in the opposite chiral block")]
    Chirality { slot: &'static str },
    #[error("Clifford relations violated for pair ({0}, {1})")]
    Clifford(usize, usize),
    #[error("trilinear dictionary search failed: {0}")]
    Dictionary(String),
    #[error("no quadratic-form convention reproduces the split forms")]
    Convention,
}

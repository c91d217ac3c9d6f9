//! Closed-form Shabat polynomials for the families with exactly two trees.

mod brush;
mod build;
mod catalog;
mod compose;
mod pair;
mod params;
mod report;

pub use brush::{
    brush, double_factorial, f5_constant, jacobi, jacobi_convention, BrushNormalization,
    JacobiConvention,
};
pub use build::{
    build, build_f1, build_f2, build_f2_composed, build_f3, build_f4, build_f5, build_f6,
    build_sporadic, f10_parts, f11_parts, f12_parts, f3_defining_polynomial, f3_discriminant,
    f4_brush, f5_inner, F11Parts,
};
pub use catalog::{
    composed_inner_degree, family_trees, match_trees, poly_signature, tree_signature, Signature,
    TreeMatch,
};
pub use compose::{compose_shabat, right_factor, right_factor_degrees};
pub use pair::{Relation, ShabatPair};
pub use params::{Family, FamilyParams, ParamError};
pub use report::{default_params, family_report, summary_table, FamilyReport, TreeEntry};

use crate::algebra::AlgebraError;
use crate::verify::VerifyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error("J_{n}({a}, {b}, x) drops below degree {n}")]
    DegreeCollapse { n: usize, a: i64, b: i64 },
    #[error("{0}")]
    Unsupported(String),
    #[error("composition misaligned: {0}")]
    Misaligned(String),
    #[error("Shabat check failed: {0}")]
    NotShabat(String),
}

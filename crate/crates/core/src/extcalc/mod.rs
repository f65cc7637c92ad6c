//! Exterior calculus on Λ(A): forms, wedge, interior product, Lie
//! derivative, the exterior differential, Maurer-Cartan equations,
//! pullbacks along morphisms and constant-coefficient cohomology.

mod cohomology;
mod form;
mod mc;
mod morphism;
mod ops;
pub mod oracle;

pub use cohomology::{ce_exactness, cohomology_dimensions};
pub use form::{increasing_tuples, sort_with_sign, Form};
pub use mc::{maurer_cartan, AnchorRelation, MaurerCartan, StructureEquation};
pub use morphism::{pullback, validate_morphism, Morphism};
pub use ops::{ext_diff, interior, is_closed, lie_derivative, wedge};

use std::sync::Arc;

use crate::gla::Algebra;

/// The coframe t^1..t^p dual to the basis.
pub fn coframe(alg: &Arc<Algebra>) -> Vec<Form> {
    (0..alg.dim()).map(|a| Form::coframe(alg, a)).collect()
}

//! Generalized Lie algebras on free modules F^p.
//!
//! An algebra is fixed by its anchor ρ^i_a and structure functions L^c_ab on
//! a basis. The bracket of arbitrary elements follows from these through the
//! Leibniz rule `[u, f·v] = f·[u,v] + ρ(u)(f)·v` and antisymmetry.

mod algebra;
mod chart;
mod examples;
mod validate;

pub use algebra::{
    anchor_apply, apply_field, bracket, build_algebra, structure_from_brackets, Algebra,
    AnchorMatrix, Element, StructureTable,
};
pub(crate) use algebra::{require_same, same_algebra};
pub use chart::{deform, pullback, substitute, DiffeoPair};
pub use examples::{abelian, bullet, der_plus_f, heisenberg, identity, sl2, tangent_chart};
pub use validate::{
    anchor_defect, anchor_morphism_defect, basis_jacobiator, jacobiator, validate_axioms,
};

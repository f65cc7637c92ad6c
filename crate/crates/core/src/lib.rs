//! Exact symbolic engine for finite-dimensional generalized Lie algebras over
//! the rational-function field Q(x1, ..., xm).
//!
//! * [`coeffring`]: exact arithmetic in F and its derivations.
//! * [`gla`]: algebras given by an anchor matrix and structure functions,
//!   the Leibniz-extended bracket, axiom validation and example constructors.
//! * [`extcalc`]: forms, wedge, interior product, Lie derivative, exterior
//!   differential, Maurer-Cartan equations, pullbacks and cohomology.
//! * [`idsys`]: interior algebraic systems, annihilators and the three
//!   involutivity procedures, plus the symplectic check.

pub mod catalog;
pub mod coeffring;
pub mod error;
pub mod extcalc;
pub mod gla;
pub mod idsys;
pub mod linalg;
mod print;
pub mod random;
pub mod report;

pub use coeffring::{parse_ratfunc, Poly, RatFunc};
pub use error::{Error, Result};
pub use extcalc::Form;
pub use gla::{Algebra, Element};

//! The coefficient ring F = Q(x1, ..., xm) with its derivations ∂_1..∂_m.
//!
//! Partial derivatives commute on this ring, so the bracket constants of the
//! derivation basis are all zero and never need to be stored.

mod gcd;
mod heugcd;
mod parse;
mod poly;
mod ratfunc;

pub use gcd::gcd;
pub use parse::{parse_ratfunc, ParseError};
pub use poly::{default_var_names, grlex_cmp, Monomial, Poly, Rational};
pub use ratfunc::{RatFunc, RatFuncDisplay};

use crate::error::{Error, Result};

/// One of the basis derivations ∂_i (0-based index).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Derivation {
    index: usize,
}

impl Derivation {
    pub fn new(index: usize, nvars: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::UnknownVariable {
                index: index + 1,
                nvars,
            });
        }
        Ok(Derivation { index })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn apply(&self, f: &RatFunc) -> Result<RatFunc> {
        f.partial(self.index)
    }
}

/// Builds `n / d` in canonical form.
pub fn rf_normalize(n: Poly, d: Poly) -> Result<RatFunc> {
    RatFunc::normalize(n, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn rf_arith(a: &RatFunc, b: &RatFunc, kind: ArithKind) -> Result<RatFunc> {
    match kind {
        ArithKind::Add => a.try_add(b),
        ArithKind::Sub => a.try_sub(b),
        ArithKind::Mul => a.try_mul(b),
        ArithKind::Div => a.try_div(b),
    }
}

/// ∂_i f with a 1-based variable index.
pub fn rf_partial(f: &RatFunc, i: usize) -> Result<RatFunc> {
    if i == 0 {
        return Err(Error::UnknownVariable {
            index: 0,
            nvars: f.nvars(),
        });
    }
    f.partial(i - 1)
}

pub fn rf_equal(a: &RatFunc, b: &RatFunc) -> Result<bool> {
    Ok(a.try_sub(b)?.is_zero())
}

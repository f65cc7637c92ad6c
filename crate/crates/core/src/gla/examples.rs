//! Named example algebras.

use crate::coeffring::RatFunc;
use crate::error::{Error, Result};

use super::algebra::{build_algebra, structure_from_brackets, Algebra, AnchorMatrix};

fn zero_anchor(dim: usize, nvars: usize) -> AnchorMatrix {
    vec![vec![RatFunc::zero(nvars); nvars]; dim]
}

/// Three-dimensional Heisenberg algebra, `[t1, t2] = t3`, zero anchor.
/// The constants do not depend on the ring, so any `nvars` works.
pub fn heisenberg(nvars: usize) -> Algebra {
    let one = RatFunc::one(nvars);
    let s = structure_from_brackets(3, nvars, &[(1, 2, 3, one)]);
    build_algebra(nvars, 3, zero_anchor(3, nvars), s).expect("antisymmetric by construction")
}

/// sl2 in the basis (h, e, f): `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2(nvars: usize) -> Algebra {
    let c = |k| RatFunc::from_int(nvars, k);
    let s = structure_from_brackets(3, nvars, &[(1, 2, 2, c(2)), (1, 3, 3, c(-2)), (2, 3, 1, c(1))]);
    build_algebra(nvars, 3, zero_anchor(3, nvars), s).expect("antisymmetric by construction")
}

/// The abelian algebra of dimension `dim` with zero anchor.
pub fn abelian(dim: usize, nvars: usize) -> Algebra {
    let s = structure_from_brackets(dim, nvars, &[]);
    build_algebra(nvars, dim, zero_anchor(dim, nvars), s).expect("zero table")
}

/// Der(F) ⊕ F with basis (∂_1..∂_m, e): all structure constants vanish and
/// `ρ(∂_i) = ∂_i`, `ρ(e) = 0`. Everything nontrivial comes from the
/// Leibniz extension of the bracket.
pub fn der_plus_f(m: usize) -> Result<Algebra> {
    if m == 0 {
        return Err(Error::RequiresVariable);
    }
    let mut anchor = zero_anchor(m + 1, m);
    for (i, row) in anchor.iter_mut().take(m).enumerate() {
        row[i] = RatFunc::one(m);
    }
    let mut labels: Vec<String> = (1..=m).map(|i| format!("d{i}")).collect();
    labels.push("e".into());
    build_algebra(m, m + 1, anchor, structure_from_brackets(m + 1, m, &[]))?.with_labels(labels)
}

/// Der(F) with `[X,Y] = X•Y − Y•X`. On this ring the second-order parts
/// cancel and the bracket is `(ρ(X)(Y^k) − ρ(Y)(X^k)) ∂_k`, i.e. anchor
/// `rho_self` and zero structure. Row `a` of `rho_self` is ρ(∂_a).
pub fn bullet(rho_self: AnchorMatrix) -> Result<Algebra> {
    let m = rho_self.len();
    if m == 0 {
        return Err(Error::RequiresVariable);
    }
    if rho_self.iter().any(|r| r.len() != m) {
        return Err(Error::MalformedAlgebra(format!("rho_self must be {m}x{m}")));
    }
    build_algebra(m, m, rho_self, structure_from_brackets(m, m, &[]))
}

/// The standard chart of the tangent bundle: `ρ = id`, zero structure.
pub fn tangent_chart(m: usize) -> Result<Algebra> {
    if m == 0 {
        return Err(Error::RequiresVariable);
    }
    build_algebra(m, m, identity(m), structure_from_brackets(m, m, &[]))
}

pub fn identity(m: usize) -> AnchorMatrix {
    (0..m)
        .map(|i| {
            (0..m)
                .map(|j| RatFunc::from_int(m, (i == j) as i64))
                .collect()
        })
        .collect()
}

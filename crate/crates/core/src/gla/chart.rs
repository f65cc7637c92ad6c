//! Chart-level constructions along a rational diffeomorphism h.

use crate::coeffring::RatFunc;
use crate::error::{Error, Result};
use crate::linalg;

use super::algebra::{build_algebra, Algebra};

/// A rational map h together with its inverse, checked both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffeoPair {
    forward: Vec<RatFunc>,
    inverse: Vec<RatFunc>,
}

impl DiffeoPair {
    pub fn new(forward: Vec<RatFunc>, inverse: Vec<RatFunc>) -> Result<Self> {
        let m = forward.len();
        if inverse.len() != m {
            return Err(Error::NotDiffeomorphism(format!(
                "forward has {m} components, inverse has {}",
                inverse.len()
            )));
        }
        for f in forward.iter().chain(&inverse) {
            if f.nvars() != m {
                return Err(Error::NotDiffeomorphism(format!(
                    "component over {} variables, expected {m}",
                    f.nvars()
                )));
            }
        }
        let roundtrip = |outer: &[RatFunc], inner: &[RatFunc], what: &str| -> Result<()> {
            for (i, h) in outer.iter().enumerate() {
                let c = h
                    .compose(inner)
                    .map_err(|_| Error::NotDiffeomorphism(format!("{what} is undefined")))?;
                if c != RatFunc::var(m, i) {
                    return Err(Error::NotDiffeomorphism(format!(
                        "{what} differs from the identity in component {}",
                        i + 1
                    )));
                }
            }
            Ok(())
        };
        roundtrip(&forward, &inverse, "forward after inverse")?;
        roundtrip(&inverse, &forward, "inverse after forward")?;
        Ok(DiffeoPair { forward, inverse })
    }

    pub fn identity(m: usize) -> Self {
        let id: Vec<RatFunc> = (0..m).map(|i| RatFunc::var(m, i)).collect();
        DiffeoPair {
            forward: id.clone(),
            inverse: id,
        }
    }

    pub fn forward(&self) -> &[RatFunc] {
        &self.forward
    }

    pub fn inverse(&self) -> &[RatFunc] {
        &self.inverse
    }

    pub fn nvars(&self) -> usize {
        self.forward.len()
    }

    /// The pair with its roles swapped.
    pub fn inverted(&self) -> Self {
        DiffeoPair {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// `jac[i][k] = ∂_i h^k`.
    pub fn jacobian(&self) -> Result<Vec<Vec<RatFunc>>> {
        let m = self.nvars();
        (0..m)
            .map(|i| self.forward.iter().map(|h| h.partial(i)).collect())
            .collect()
    }
}

fn check_ring(alg: &Algebra, h: &DiffeoPair) -> Result<()> {
    if alg.nvars() != h.nvars() {
        return Err(Error::RingMismatch {
            left: alg.nvars(),
            right: h.nvars(),
        });
    }
    Ok(())
}

/// Same structure functions, anchor deformed through h:
/// `ρ̃^k_a = ρ^i_a · (∂_i h^k ∘ h⁻¹)`, which is what makes
/// `ρ̃_a(f) = ρ^i_a · (∂_i(f∘h) ∘ h⁻¹)` hold for every f.
pub fn deform(alg: &Algebra, h: &DiffeoPair) -> Result<Algebra> {
    check_ring(alg, h)?;
    let m = alg.nvars();
    let jac = h.jacobian()?;
    if linalg::determinant(&jac, m).is_zero() {
        return Err(Error::SingularDeformation);
    }
    let pulled: Vec<Vec<RatFunc>> = jac
        .iter()
        .map(|row| row.iter().map(|e| e.compose(h.inverse())).collect())
        .collect::<Result<_>>()?;
    let anchor = alg
        .anchor_matrix()
        .iter()
        .map(|rho| {
            (0..m)
                .map(|k| {
                    rho.iter()
                        .zip(&pulled)
                        .filter(|(r, _)| !r.is_zero())
                        .fold(RatFunc::zero(m), |acc, (r, j)| &acc + &(r * &j[k]))
                })
                .collect()
        })
        .collect();
    rebuild(alg, anchor, alg.structure_table().clone())
}

/// Structure functions and anchor composed with h.
pub fn pullback(alg: &Algebra, h: &DiffeoPair) -> Result<Algebra> {
    check_ring(alg, h)?;
    substitute(alg, h.forward())
}

/// Composes every structure function and anchor entry with `map`. No
/// invertibility check; [`pullback`] is the checked entry point.
pub fn substitute(alg: &Algebra, map: &[RatFunc]) -> Result<Algebra> {
    if map.len() != alg.nvars() || map.iter().any(|f| f.nvars() != alg.nvars()) {
        return Err(Error::ShapeMismatch(format!(
            "substitution needs {} maps over {} variables",
            alg.nvars(),
            alg.nvars()
        )));
    }
    let anchor = alg
        .anchor_matrix()
        .iter()
        .map(|row| row.iter().map(|f| f.compose(map)).collect())
        .collect::<Result<_>>()?;
    let structure = alg
        .structure_table()
        .iter()
        .map(|m| {
            m.iter()
                .map(|row| row.iter().map(|f| f.compose(map)).collect())
                .collect()
        })
        .collect::<Result<_>>()?;
    rebuild(alg, anchor, structure)
}

fn rebuild(
    alg: &Algebra,
    anchor: Vec<Vec<RatFunc>>,
    structure: Vec<Vec<Vec<RatFunc>>>,
) -> Result<Algebra> {
    build_algebra(alg.nvars(), alg.dim(), anchor, structure)?
        .with_labels(alg.labels().to_vec())?
        .with_var_names(alg.var_names().to_vec())
}

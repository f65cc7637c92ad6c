//! Interior algebraic systems: annihilators and three independent
//! involutivity procedures (bracket closure, the Frobenius-type certificate
//! and the exterior-ideal test), plus the symplectic check.

mod eas;
mod frobenius;
mod subspace;

pub use eas::{eas_check, EasVerdict, IdealSpec};
pub use frobenius::{complete_basis, frobenius_certificate, FrobeniusCertificate};
pub use subspace::{annihilator, involutive_direct, BracketWitness, DirectVerdict, Subspace};

use crate::coeffring::RatFunc;
use crate::error::{Error, Result};
use crate::extcalc::{is_closed, Form};
use crate::linalg;

#[derive(Debug, Clone)]
pub struct CartanReport {
    pub direct: DirectVerdict,
    pub frobenius: FrobeniusCertificate,
    pub eas: EasVerdict,
}

impl CartanReport {
    pub fn involutive(&self) -> bool {
        self.direct.involutive
    }
}

/// Runs all three procedures and insists that they agree.
pub fn cartan_equivalence(e: &Subspace, degree_cap: Option<usize>) -> Result<CartanReport> {
    let direct = involutive_direct(e);
    let frobenius = frobenius_certificate(e)?;
    let eas = eas_check(&IdealSpec::of_annihilator(e, degree_cap)?, e)?;
    let verdicts = [direct.involutive, frobenius.involutive, eas.passed()];
    if verdicts.iter().any(|&v| v != verdicts[0]) {
        return Err(Error::TheoremEquivalenceViolated(format!(
            "direct={} frobenius={} eas={}",
            verdicts[0], verdicts[1], verdicts[2]
        )));
    }
    Ok(CartanReport {
        direct,
        frobenius,
        eas,
    })
}

#[derive(Debug, Clone)]
pub struct SymplecticReport {
    pub closed: bool,
    /// det[ω(t_a, t_b)].
    pub determinant: RatFunc,
    pub odd_dimension: bool,
}

impl SymplecticReport {
    pub fn nondegenerate(&self) -> bool {
        !self.determinant.is_zero()
    }

    pub fn symplectic(&self) -> bool {
        self.closed && self.nondegenerate()
    }
}

/// Closedness plus nondegeneracy of a 2-form. An antisymmetric matrix of odd
/// size has zero determinant, so odd p is always degenerate.
pub fn symplectic_check(w: &Form) -> Result<SymplecticReport> {
    if w.degree() != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            got: w.degree(),
        });
    }
    let alg = w.algebra();
    let p = alg.dim();
    let gram: Vec<Vec<RatFunc>> = (0..p)
        .map(|a| (0..p).map(|b| w.eval_basis(&[a, b])).collect())
        .collect();
    Ok(SymplecticReport {
        closed: is_closed(w),
        determinant: linalg::determinant(&gram, alg.nvars()),
        odd_dimension: p % 2 == 1,
    })
}

use std::sync::Arc;

use crate::coeffring::RatFunc;
use crate::error::{Error, Result};
use crate::extcalc::Form;
use crate::gla::{bracket, require_same, Algebra, Element};
use crate::linalg;

/// A free submodule E ⊆ A given by generators that are independent over the
/// fraction field.
#[derive(Debug, Clone)]
pub struct Subspace {
    alg: Arc<Algebra>,
    gens: Vec<Element>,
}

impl Subspace {
    pub fn new(alg: &Arc<Algebra>, gens: Vec<Element>) -> Result<Self> {
        for g in &gens {
            require_same(alg, g.algebra())?;
        }
        let rank = linalg::rank(&rows(&gens), alg.dim());
        if rank < gens.len() {
            return Err(Error::DegenerateGeneratingSet {
                rank,
                expected: gens.len(),
            });
        }
        Ok(Subspace {
            alg: alg.clone(),
            gens,
        })
    }

    /// The span of the listed basis elements (0-based).
    pub fn coordinate(alg: &Arc<Algebra>, basis: &[usize]) -> Result<Self> {
        Self::new(alg, basis.iter().map(|&a| Element::basis(alg, a)).collect())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn generators(&self) -> &[Element] {
        &self.gens
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub(crate) fn matrix(&self) -> Vec<Vec<RatFunc>> {
        rows(&self.gens)
    }

    /// Whether `z` lies in the span over the fraction field.
    pub fn contains(&self, z: &Element) -> bool {
        let mut m = self.matrix();
        m.push(z.coeffs().to_vec());
        linalg::rank(&m, self.alg.dim()) == self.rank()
    }
}

pub(crate) fn rows(gens: &[Element]) -> Vec<Vec<RatFunc>> {
    gens.iter().map(|g| g.coeffs().to_vec()).collect()
}

/// A basis θ^{r+1}..θ^p of the 1-forms vanishing on E.
pub fn annihilator(e: &Subspace) -> Vec<Form> {
    let alg = &e.alg;
    linalg::nullspace(&e.matrix(), alg.dim(), alg.nvars())
        .into_iter()
        .map(|v| {
            let coeffs = v.into_iter().enumerate().map(|(a, c)| (vec![a], c));
            Form::from_coeffs(alg, 1, coeffs).expect("increasing indices")
        })
        .collect()
}

/// A generator pair whose bracket leaves E; indices are 1-based.
#[derive(Debug, Clone)]
pub struct BracketWitness {
    pub a: usize,
    pub b: usize,
    pub bracket: Element,
}

#[derive(Debug, Clone)]
pub struct DirectVerdict {
    pub involutive: bool,
    pub witnesses: Vec<BracketWitness>,
}

/// Tests `[s_a, s_b] ∈ E` for every generator pair.
pub fn involutive_direct(e: &Subspace) -> DirectVerdict {
    let mut witnesses = Vec::new();
    for a in 0..e.rank() {
        for b in a + 1..e.rank() {
            let br = bracket(&e.gens[a], &e.gens[b]).expect("same algebra");
            if !e.contains(&br) {
                witnesses.push(BracketWitness {
                    a: a + 1,
                    b: b + 1,
                    bracket: br,
                });
            }
        }
    }
    DirectVerdict {
        involutive: witnesses.is_empty(),
        witnesses,
    }
}

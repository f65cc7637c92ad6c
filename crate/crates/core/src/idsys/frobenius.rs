use std::collections::BTreeMap;

use crate::coeffring::{RatFunc, Rational};
use crate::error::{Error, Result};
use crate::extcalc::{ext_diff, wedge, Form};
use crate::gla::{bracket, Element};
use crate::linalg;

use super::subspace::{rows, Subspace};

/// Outcome of the Frobenius-type procedure. Indices below `rank` belong to
/// E, the rest to the annihilator. All maps are keyed by 0-based indices.
#[derive(Debug, Clone)]
pub struct FrobeniusCertificate {
    pub rank: usize,
    /// s_1..s_p: the generators followed by the greedy completion.
    pub basis: Vec<Element>,
    /// θ^1..θ^p with θ^a(s_b) = δ^a_b.
    pub coframe: Vec<Form>,
    /// Nonzero A^α_bc = dθ^α(s_b, s_c) for b < c < r.
    pub obstruction: BTreeMap<(usize, usize, usize), RatFunc>,
    /// B^α_bγ = dθ^α(s_b, s_γ) for b < r ≤ γ.
    pub mixed: BTreeMap<(usize, usize, usize), RatFunc>,
    /// C^α_βγ = dθ^α(s_β, s_γ) for r ≤ β < γ.
    pub normal: BTreeMap<(usize, usize, usize), RatFunc>,
    /// ω^α_γ for α, γ ≥ r, present when involutive; `omega[α - r][γ - r]`.
    pub omega: Option<Vec<Vec<Form>>>,
    pub involutive: bool,
}

/// Greedily appends standard basis vectors that raise the rank.
pub fn complete_basis(e: &Subspace) -> Vec<Element> {
    let alg = e.algebra();
    let p = alg.dim();
    let mut basis = e.generators().to_vec();
    for k in 0..p {
        if basis.len() == p {
            break;
        }
        let cand = Element::basis(alg, k);
        let mut m = rows(&basis);
        m.push(cand.coeffs().to_vec());
        if linalg::rank(&m, p) > basis.len() {
            basis.push(cand);
        }
    }
    basis
}

pub fn frobenius_certificate(e: &Subspace) -> Result<FrobeniusCertificate> {
    let alg = e.algebra();
    let p = alg.dim();
    let n = alg.nvars();
    let r = e.rank();
    let basis = complete_basis(e);

    // θ^a = Σ_μ Θ[a][μ] t^μ with Θ Bᵀ = I, where row b of B is s_b
    let bt = linalg::transpose(&rows(&basis), p);
    let theta = linalg::inverse(&bt, n).ok_or_else(|| {
        Error::CertificateReconstructionFailed("completed basis is singular".into())
    })?;
    let coframe: Vec<Form> = theta
        .iter()
        .map(|row| {
            Form::from_coeffs(alg, 1, row.iter().cloned().enumerate().map(|(m, c)| (vec![m], c)))
                .expect("increasing indices")
        })
        .collect();

    let mut obstruction = BTreeMap::new();
    let mut mixed = BTreeMap::new();
    let mut normal = BTreeMap::new();
    let mut dtheta = Vec::new();
    for (alpha, th) in coframe.iter().enumerate().skip(r) {
        let d = ext_diff(th);
        for a in 0..p {
            for b in a + 1..p {
                let v = d.eval(&[basis[a].clone(), basis[b].clone()])?;
                if b < r {
                    // second route for the obstruction: −θ^α([s_a, s_b])
                    let via_bracket = -&th.eval(&[bracket(&basis[a], &basis[b])?])?;
                    if via_bracket != v {
                        return Err(Error::CertificateReconstructionFailed(format!(
                            "A^{}_{}{} disagrees with the bracket",
                            alpha + 1,
                            a + 1,
                            b + 1
                        )));
                    }
                }
                if v.is_zero() {
                    continue;
                }
                let table = if b < r {
                    &mut obstruction
                } else if a < r {
                    &mut mixed
                } else {
                    &mut normal
                };
                table.insert((alpha, a, b), v);
            }
        }
        dtheta.push(d);
    }

    let involutive = obstruction.is_empty();
    let omega = if involutive {
        let half = Rational::new(1.into(), 2.into());
        let mut omega = vec![vec![Form::zero(alg, 1); p - r]; p - r];
        for (&(alpha, b, g), v) in &mixed {
            let w = &mut omega[alpha - r][g - r];
            *w = &*w + &coframe[b].scale(v);
        }
        // C is stored for β < γ; the antisymmetric partner contributes to ω^α_β
        for (&(alpha, be, g), v) in &normal {
            let hv = v.scale(&half);
            let w = &mut omega[alpha - r][g - r];
            *w = &*w + &coframe[be].scale(&hv);
            let w = &mut omega[alpha - r][be - r];
            *w = &*w - &coframe[g].scale(&hv);
        }
        for (k, d) in dtheta.iter().enumerate() {
            let mut rebuilt = Form::zero(alg, 2);
            for (j, w) in omega[k].iter().enumerate() {
                rebuilt = &rebuilt + &wedge(w, &coframe[r + j])?;
            }
            if &rebuilt != d {
                return Err(Error::CertificateReconstructionFailed(format!(
                    "dθ^{} = {} but Σ ω∧θ = {}",
                    r + k + 1,
                    d,
                    rebuilt
                )));
            }
        }
        Some(omega)
    } else {
        None
    };

    Ok(FrobeniusCertificate {
        rank: r,
        basis,
        coframe,
        obstruction,
        mixed,
        normal,
        omega,
        involutive,
    })
}

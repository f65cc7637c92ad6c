use std::sync::Arc;

use crate::coeffring::RatFunc;
use crate::random::RandomSource;
use crate::report::{Check, Sampling, ValidationReport, Witness};

use super::algebra::{anchor_apply, apply_field, bracket, Algebra, Element};

/// Exhaustive basis-level identities followed by randomized element-level
/// ones. Failures are report content, never errors.
pub fn validate_axioms(alg: &Arc<Algebra>, sampling: Sampling) -> ValidationReport {
    let mut checks = vec![
        Check::from_first_failure("basis-jacobi", basis_jacobi_failure(alg)),
        Check::from_first_failure("anchor-compatibility", anchor_compat_failure(alg)),
    ];
    let (jac, morph) = random_failures(alg, sampling);
    checks.push(Check::from_first_failure("element-jacobi", jac));
    checks.push(Check::from_first_failure("anchor-morphism", morph));
    ValidationReport {
        seed: sampling.seed,
        samples: sampling.samples,
        checks,
    }
}

/// Component μ of the cyclic sum
/// Σ_cyc [ L^θ_βγ L^μ_αθ + ρ^i_α ∂_i L^μ_βγ ] for one index triple.
pub fn basis_jacobiator(alg: &Algebra, a: usize, b: usize, c: usize, mu: usize) -> RatFunc {
    let n = alg.nvars();
    let mut acc = RatFunc::zero(n);
    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
        for th in 0..alg.dim() {
            let l1 = alg.structure(y, z, th);
            let l2 = alg.structure(x, th, mu);
            if !l1.is_zero() && !l2.is_zero() {
                acc = &acc + &(l1 * l2);
            }
        }
        let field = &alg.anchor_matrix()[x];
        let d = apply_field(field, alg.structure(y, z, mu)).expect("same ring");
        acc = &acc + &d;
    }
    acc
}

/// The Jacobiator is alternating, so increasing triples cover every case.
fn basis_jacobi_failure(alg: &Algebra) -> Option<Witness> {
    let p = alg.dim();
    for a in 0..p {
        for b in a + 1..p {
            for c in b + 1..p {
                for mu in 0..p {
                    let r = basis_jacobiator(alg, a, b, c, mu);
                    if !r.is_zero() {
                        return Some(Witness {
                            indices: vec![a + 1, b + 1, c + 1],
                            detail: format!(
                                "component {} = {}",
                                mu + 1,
                                r.display_with(alg.var_names())
                            ),
                        });
                    }
                }
            }
        }
    }
    None
}

/// L^γ_αβ ρ^k_γ − ρ_α(ρ^k_β) + ρ_β(ρ^k_α) for one (α, β, k).
pub fn anchor_defect(alg: &Algebra, a: usize, b: usize, k: usize) -> RatFunc {
    let n = alg.nvars();
    let mut acc = RatFunc::zero(n);
    for g in 0..alg.dim() {
        let l = alg.structure(a, b, g);
        if !l.is_zero() {
            acc = &acc + &(l * alg.anchor(g, k));
        }
    }
    let rows = alg.anchor_matrix();
    let ab = apply_field(&rows[a], alg.anchor(b, k)).expect("same ring");
    let ba = apply_field(&rows[b], alg.anchor(a, k)).expect("same ring");
    &(&acc - &ab) + &ba
}

fn anchor_compat_failure(alg: &Algebra) -> Option<Witness> {
    let p = alg.dim();
    for a in 0..p {
        for b in a + 1..p {
            for k in 0..alg.nvars() {
                let r = anchor_defect(alg, a, b, k);
                if !r.is_zero() {
                    return Some(Witness {
                        indices: vec![a + 1, b + 1, k + 1],
                        detail: format!("residue = {}", r.display_with(alg.var_names())),
                    });
                }
            }
        }
    }
    None
}

pub fn jacobiator(u: &Element, v: &Element, w: &Element) -> Element {
    let br = |x: &Element, y: &Element| bracket(x, y).expect("same algebra");
    let t1 = br(u, &br(v, w));
    let t2 = br(w, &br(u, v));
    let t3 = br(v, &br(w, u));
    &(&t1 + &t2) + &t3
}

/// ρ[u,v] f − (ρ(u)ρ(v) f − ρ(v)ρ(u) f).
pub fn anchor_morphism_defect(u: &Element, v: &Element, f: &RatFunc) -> RatFunc {
    let rho = |x: &Element, g: &RatFunc| anchor_apply(x, g).expect("same ring");
    let lhs = rho(&bracket(u, v).expect("same algebra"), f);
    let rhs = &rho(u, &rho(v, f)) - &rho(v, &rho(u, f));
    &lhs - &rhs
}

fn random_failures(alg: &Arc<Algebra>, sampling: Sampling) -> (Option<Witness>, Option<Witness>) {
    let mut src = RandomSource::new(sampling.seed);
    let mut jac = None;
    let mut morph = None;
    for s in 0..sampling.samples {
        let u = src.element(alg);
        let v = src.element(alg);
        let w = src.element(alg);
        let f = src.ratfunc(alg.nvars());
        if jac.is_none() {
            let j = jacobiator(&u, &v, &w);
            if !j.is_zero() {
                jac = Some(Witness {
                    indices: vec![s + 1],
                    detail: format!("jacobiator = {j}"),
                });
            }
        }
        if morph.is_none() {
            let r = anchor_morphism_defect(&u, &v, &f);
            if !r.is_zero() {
                morph = Some(Witness {
                    indices: vec![s + 1],
                    detail: format!("residue = {}", r.display_with(alg.var_names())),
                });
            }
        }
    }
    (jac, morph)
}

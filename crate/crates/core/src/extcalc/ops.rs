use crate::coeffring::RatFunc;
use crate::error::Result;
use crate::gla::{anchor_apply, apply_field, bracket, require_same, Element};

use super::form::{increasing_tuples, Form};

/// Coefficient-level exterior product; for disjoint I and J the sign is the
/// parity of the merge of I and J.
pub fn wedge(w: &Form, t: &Form) -> Result<Form> {
    require_same(w.algebra(), t.algebra())?;
    let mut out = Form::zero(w.algebra(), w.degree() + t.degree());
    for (i, a) in w.coeffs() {
        for (j, b) in t.coeffs() {
            if i.iter().any(|x| j.contains(x)) {
                continue;
            }
            let joined: Vec<usize> = i.iter().chain(j).copied().collect();
            out.accumulate(&joined, &(a * b));
        }
    }
    Ok(out)
}

/// i_z ω, contracting the first slot; zero on functions.
pub fn interior(z: &Element, w: &Form) -> Result<Form> {
    require_same(z.algebra(), w.algebra())?;
    let alg = w.algebra();
    if w.degree() == 0 {
        return Ok(Form::zero(alg, 0));
    }
    let mut out = Form::zero(alg, w.degree() - 1);
    for (idx, c) in w.coeffs() {
        for (k, &a) in idx.iter().enumerate() {
            let za = z.coeff(a);
            if za.is_zero() {
                continue;
            }
            // moving slot k to the front costs k transpositions
            let rest: Vec<usize> = idx.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &b)| b).collect();
            let v = za * c;
            out.accumulate(&rest, &if k % 2 == 1 { -&v } else { v });
        }
    }
    Ok(out)
}

/// L_z ω, assembled from its values on increasing basis tuples:
/// `(L_z ω)(t_I) = ρ(z)(ω(t_I)) − Σ_k ω(.., [z, t_{I_k}], ..)`.
pub fn lie_derivative(z: &Element, w: &Form) -> Result<Form> {
    require_same(z.algebra(), w.algebra())?;
    let alg = w.algebra();
    let q = w.degree();
    if q == 0 {
        return Ok(Form::scalar(alg, anchor_apply(z, &w.coeff(&[]))?));
    }
    let field = z.vector_field();
    let brackets: Vec<Element> = (0..alg.dim())
        .map(|a| bracket(z, &Element::basis(alg, a)))
        .collect::<Result<_>>()?;
    let mut out = Form::zero(alg, q);
    for idx in increasing_tuples(alg.dim(), q) {
        let mut val = apply_field(&field, &w.coeff(&idx))?;
        for k in 0..q {
            let br = &brackets[idx[k]];
            let mut slots = idx.clone();
            for b in 0..alg.dim() {
                let c = br.coeff(b);
                if c.is_zero() {
                    continue;
                }
                slots[k] = b;
                let e = w.eval_basis(&slots);
                if !e.is_zero() {
                    val = &val - &(c * &e);
                }
            }
        }
        out.set_coeff(idx, val);
    }
    Ok(out)
}

/// Exterior differential in coordinates: for K = (k_0 < ... < k_q),
/// `(dω)_K = Σ_i (−1)^i ρ(t_{k_i})(ω_{K∖k_i})
///         + Σ_{i<j} (−1)^{i+j} L^a_{k_i k_j} ω(t_a, t_{K∖{k_i,k_j}})`.
pub fn ext_diff(w: &Form) -> Form {
    let alg = w.algebra();
    let q = w.degree();
    let p = alg.dim();
    let mut out = Form::zero(alg, q + 1);
    let rows = alg.anchor_matrix();
    for k in increasing_tuples(p, q + 1) {
        let mut val = RatFunc::zero(alg.nvars());
        for i in 0..=q {
            let rest: Vec<usize> = without(&k, &[i]);
            let c = w.coeff(&rest);
            if c.is_zero() {
                continue;
            }
            let d = apply_field(&rows[k[i]], &c).expect("same ring");
            val = if i % 2 == 0 { &val + &d } else { &val - &d };
        }
        for i in 0..=q {
            for j in i + 1..=q {
                let rest = without(&k, &[i, j]);
                let mut slots = Vec::with_capacity(q);
                slots.push(0);
                slots.extend(&rest);
                for a in 0..p {
                    let l = alg.structure(k[i], k[j], a);
                    if l.is_zero() {
                        continue;
                    }
                    slots[0] = a;
                    let e = w.eval_basis(&slots);
                    if e.is_zero() {
                        continue;
                    }
                    let term = l * &e;
                    val = if (i + j) % 2 == 0 { &val + &term } else { &val - &term };
                }
            }
        }
        out.set_coeff(k, val);
    }
    out
}

fn without(k: &[usize], drop: &[usize]) -> Vec<usize> {
    k.iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, &a)| a)
        .collect()
}

pub fn is_closed(w: &Form) -> bool {
    ext_diff(w).is_zero()
}

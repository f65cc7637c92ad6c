//! Evaluation-style definitions of the wedge product and the exterior
//! differential, computed literally on element arguments. They share no code
//! with the coefficient-level paths and exist to check them.

use crate::coeffring::RatFunc;
use crate::error::{Error, Result};
use crate::gla::{anchor_apply, bracket, Element};

use super::form::{increasing_tuples, Form};

/// `(ω∧θ)(z_1..z_{q+r}) = Σ_σ sgn(σ) ω(z_σ(1)..z_σ(q)) θ(z_σ(q+1)..)` over
/// (q, r)-shuffles σ.
pub fn wedge_eval(w: &Form, t: &Form, args: &[Element]) -> Result<RatFunc> {
    let (q, r) = (w.degree(), t.degree());
    if args.len() != q + r {
        return Err(Error::ArityMismatch {
            expected: q + r,
            got: args.len(),
        });
    }
    let n = w.algebra().nvars();
    let mut acc = RatFunc::zero(n);
    for first in increasing_tuples(q + r, q) {
        let second: Vec<usize> = (0..q + r).filter(|i| !first.contains(i)).collect();
        // the shuffle's sign is the parity of pairs (i in first, j in second) with i > j
        let inversions: usize = first
            .iter()
            .map(|&i| second.iter().filter(|&&j| j < i).count())
            .sum();
        let a: Vec<Element> = first.iter().map(|&i| args[i].clone()).collect();
        let b: Vec<Element> = second.iter().map(|&i| args[i].clone()).collect();
        let term = &w.eval(&a)? * &t.eval(&b)?;
        acc = if inversions % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    Ok(acc)
}

/// `dω(z_0..z_q) = Σ_i (−1)^i ρ(z_i) ω(..ẑ_i..)
///              + Σ_{i<j} (−1)^{i+j} ω([z_i, z_j], ..ẑ_i..ẑ_j..)`.
pub fn ext_diff_eval(w: &Form, args: &[Element]) -> Result<RatFunc> {
    let q = w.degree();
    if args.len() != q + 1 {
        return Err(Error::ArityMismatch {
            expected: q + 1,
            got: args.len(),
        });
    }
    let n = w.algebra().nvars();
    let mut acc = RatFunc::zero(n);
    for i in 0..=q {
        let rest: Vec<Element> = skip(args, &[i]);
        let term = anchor_apply(&args[i], &w.eval(&rest)?)?;
        acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    for i in 0..=q {
        for j in i + 1..=q {
            let mut slots = vec![bracket(&args[i], &args[j])?];
            slots.extend(skip(args, &[i, j]));
            let term = w.eval(&slots)?;
            acc = if (i + j) % 2 == 0 { &acc + &term } else { &acc - &term };
        }
    }
    Ok(acc)
}

fn skip(args: &[Element], drop: &[usize]) -> Vec<Element> {
    args.iter()
        .enumerate()
        .filter(|(i, _)| !drop.contains(i))
        .map(|(_, z)| z.clone())
        .collect()
}

/// All length-`k` tuples over `0..n`, repeats and every ordering included.
pub fn all_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

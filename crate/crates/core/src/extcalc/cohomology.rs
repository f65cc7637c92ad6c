//! Closed and exact forms for constant-coefficient algebras, where d is a
//! linear map between finite-dimensional Q-vector spaces.

use std::sync::Arc;

use crate::coeffring::RatFunc;
use crate::error::{Error, Result};
use crate::gla::Algebra;
use crate::linalg;

use super::form::{increasing_tuples, Form};
use super::ops::ext_diff;

fn require_constant_ring(alg: &Algebra) -> Result<()> {
    if alg.nvars() == 0 {
        Ok(())
    } else {
        Err(Error::ExactnessRestricted)
    }
}

/// Matrix of d from degree `q` to `q + 1`; column J is d t^J written in the
/// increasing basis of degree `q + 1`.
fn diff_matrix(alg: &Arc<Algebra>, q: usize) -> Vec<Vec<RatFunc>> {
    let p = alg.dim();
    let n = alg.nvars();
    let rows = increasing_tuples(p, q + 1);
    let cols = increasing_tuples(p, q);
    let images: Vec<Form> = cols
        .iter()
        .map(|j| {
            let basis = Form::from_coeffs(alg, q, [(j.clone(), RatFunc::one(n))]).expect("increasing");
            ext_diff(&basis)
        })
        .collect();
    rows.iter()
        .map(|k| images.iter().map(|img| img.coeff(k)).collect())
        .collect()
}

fn diff_rank(alg: &Arc<Algebra>, q: usize) -> usize {
    let p = alg.dim();
    if q >= p {
        return 0;
    }
    linalg::rank(&diff_matrix(alg, q), increasing_tuples(p, q).len())
}

/// Returns η with dη = ω, or `None` when ω is not exact. A 0-form is exact
/// only when it is zero, and then the zero 0-form is returned.
pub fn ce_exactness(w: &Form) -> Result<Option<Form>> {
    let alg = w.algebra();
    require_constant_ring(alg)?;
    let q = w.degree();
    if w.is_zero() {
        return Ok(Some(Form::zero(alg, q.saturating_sub(1))));
    }
    if q == 0 || q > alg.dim() {
        return Ok(None);
    }
    let mat = diff_matrix(alg, q - 1);
    let rhs: Vec<RatFunc> = increasing_tuples(alg.dim(), q).iter().map(|k| w.coeff(k)).collect();
    let cols = increasing_tuples(alg.dim(), q - 1);
    let Some(x) = linalg::solve(&mat, &rhs, cols.len(), 0) else {
        return Ok(None);
    };
    Form::from_coeffs(alg, q - 1, cols.into_iter().zip(x)).map(Some)
}

/// `dim H^q = C(p,q) − rank d_q − rank d_{q−1}` for q = 0..=p.
pub fn cohomology_dimensions(alg: &Arc<Algebra>) -> Result<Vec<usize>> {
    require_constant_ring(alg)?;
    let p = alg.dim();
    let ranks: Vec<usize> = (0..=p).map(|q| diff_rank(alg, q)).collect();
    Ok((0..=p)
        .map(|q| {
            let before = if q == 0 { 0 } else { ranks[q - 1] };
            increasing_tuples(p, q).len() - ranks[q] - before
        })
        .collect())
}

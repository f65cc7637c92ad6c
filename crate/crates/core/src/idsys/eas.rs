use std::sync::Arc;

use crate::coeffring::RatFunc;
use crate::error::{Error, Result};
use crate::extcalc::{ext_diff, increasing_tuples, wedge, Form};
use crate::gla::{require_same, Algebra, Element};
use crate::linalg;
use crate::report::Witness;

use super::subspace::Subspace;

/// A finitely generated ideal of Λ(A) with the highest degree at which
/// membership questions are decided.
#[derive(Debug, Clone)]
pub struct IdealSpec {
    alg: Arc<Algebra>,
    gens: Vec<Form>,
    degree_cap: usize,
}

impl IdealSpec {
    /// `degree_cap` defaults to the highest generator degree plus one.
    pub fn new(alg: &Arc<Algebra>, gens: Vec<Form>, degree_cap: Option<usize>) -> Result<Self> {
        for g in &gens {
            require_same(alg, g.algebra())?;
        }
        let needed = gens.iter().map(Form::degree).max().unwrap_or(0) + 1;
        let degree_cap = degree_cap.unwrap_or(needed);
        if degree_cap < needed {
            return Err(Error::RaiseDegreeCap {
                needed,
                cap: degree_cap,
            });
        }
        Ok(IdealSpec {
            alg: alg.clone(),
            gens,
            degree_cap,
        })
    }

    /// The ideal generated by the annihilator of E.
    pub fn of_annihilator(e: &Subspace, degree_cap: Option<usize>) -> Result<Self> {
        let gens = super::annihilator(e);
        // with no generators the cap still has to admit 1-forms
        let cap = degree_cap.or(Some(2));
        Self::new(e.algebra(), gens, cap)
    }

    pub fn generators(&self) -> &[Form] {
        &self.gens
    }

    pub fn degree_cap(&self) -> usize {
        self.degree_cap
    }

    /// Coefficient forms η_i with `w = Σ η_i ∧ g_i`, or `None` when w is not
    /// in the ideal. Decided by one linear solve in degree `w.degree()`.
    pub fn membership(&self, w: &Form) -> Result<Option<Vec<Form>>> {
        require_same(&self.alg, w.algebra())?;
        let k = w.degree();
        if k > self.degree_cap {
            return Err(Error::RaiseDegreeCap {
                needed: k,
                cap: self.degree_cap,
            });
        }
        let p = self.alg.dim();
        let n = self.alg.nvars();
        let targets = increasing_tuples(p, k);
        // one unknown per (generator, multi-index of η_i)
        let mut unknowns: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut columns: Vec<Form> = Vec::new();
        for (i, g) in self.gens.iter().enumerate() {
            if g.degree() > k {
                continue;
            }
            for j in increasing_tuples(p, k - g.degree()) {
                let t = Form::from_coeffs(&self.alg, k - g.degree(), [(j.clone(), RatFunc::one(n))])?;
                columns.push(wedge(&t, g)?);
                unknowns.push((i, j));
            }
        }
        let mat: Vec<Vec<RatFunc>> = targets
            .iter()
            .map(|t| columns.iter().map(|c| c.coeff(t)).collect())
            .collect();
        let rhs: Vec<RatFunc> = targets.iter().map(|t| w.coeff(t)).collect();
        let Some(x) = linalg::solve(&mat, &rhs, columns.len(), n) else {
            return Ok(None);
        };
        let mut etas: Vec<Form> = self
            .gens
            .iter()
            .map(|g| Form::zero(&self.alg, k.saturating_sub(g.degree())))
            .collect();
        for ((i, j), c) in unknowns.into_iter().zip(x) {
            etas[i].set_coeff(j, c);
        }
        Ok(Some(etas))
    }
}

#[derive(Debug, Clone)]
pub struct EasVerdict {
    /// First generator (or its differential) not vanishing on E; indices are
    /// the 1-based generator number followed by the E-generator tuple.
    pub vanishing: Option<Witness>,
    /// First generator whose differential is outside the ideal.
    pub closure: Option<Witness>,
}

impl EasVerdict {
    pub fn passed(&self) -> bool {
        self.vanishing.is_none() && self.closure.is_none()
    }
}

/// Whether `I` is a differential ideal whose forms all vanish on E.
pub fn eas_check(ideal: &IdealSpec, e: &Subspace) -> Result<EasVerdict> {
    require_same(&ideal.alg, e.algebra())?;
    let mut vanishing = None;
    let mut closure = None;
    for (gi, g) in ideal.gens.iter().enumerate() {
        let d = ext_diff(g);
        if vanishing.is_none() {
            for (label, form) in [("", g), ("d", &d)] {
                if let Some((tuple, v)) = first_nonvanishing(form, e.generators())? {
                    let mut indices = vec![gi + 1];
                    indices.extend(tuple.iter().map(|a| a + 1));
                    let names = ideal.alg.var_names();
                    vanishing = Some(Witness {
                        indices,
                        detail: format!("{label}g{} = {}", gi + 1, v.display_with(names)),
                    });
                    break;
                }
            }
        }
        if closure.is_none() && ideal.membership(&d)?.is_none() {
            closure = Some(Witness {
                indices: vec![gi + 1],
                detail: format!("dg{} = {} is not in the ideal", gi + 1, d),
            });
        }
    }
    Ok(EasVerdict { vanishing, closure })
}

fn first_nonvanishing(w: &Form, gens: &[Element]) -> Result<Option<(Vec<usize>, RatFunc)>> {
    for tuple in increasing_tuples(gens.len(), w.degree()) {
        let args: Vec<Element> = tuple.iter().map(|&a| gens[a].clone()).collect();
        let v = w.eval(&args)?;
        if !v.is_zero() {
            return Ok(Some((tuple, v)));
        }
    }
    Ok(None)
}

use std::sync::Arc;

use crate::coeffring::RatFunc;
use crate::error::{Error, Result};
use crate::gla::{anchor_apply, bracket, require_same, Algebra, Element};
use crate::random::RandomSource;
use crate::report::{Check, Sampling, ValidationReport, Witness};

use super::form::{increasing_tuples, Form};

/// An F-linear map between algebras over the same ring. Column `a` of
/// `matrix` holds the coefficients of φ(t_a) in the target basis.
#[derive(Debug, Clone)]
pub struct Morphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    matrix: Vec<Vec<RatFunc>>,
}

impl Morphism {
    pub fn new(source: &Arc<Algebra>, target: &Arc<Algebra>, matrix: Vec<Vec<RatFunc>>) -> Result<Self> {
        if source.nvars() != target.nvars() {
            return Err(Error::RingMismatch {
                left: source.nvars(),
                right: target.nvars(),
            });
        }
        let ok = matrix.len() == target.dim() && matrix.iter().all(|r| r.len() == source.dim());
        if !ok {
            return Err(Error::ShapeMismatch(format!(
                "morphism matrix must be {}x{}",
                target.dim(),
                source.dim()
            )));
        }
        if let Some(f) = matrix.iter().flatten().find(|f| f.nvars() != source.nvars()) {
            return Err(Error::RingMismatch {
                left: source.nvars(),
                right: f.nvars(),
            });
        }
        Ok(Morphism {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    /// Builds the map from the images of the source basis.
    pub fn from_images(source: &Arc<Algebra>, target: &Arc<Algebra>, images: &[Element]) -> Result<Self> {
        if images.len() != source.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} images for dimension {}",
                images.len(),
                source.dim()
            )));
        }
        for z in images {
            require_same(target, z.algebra())?;
        }
        let matrix = (0..target.dim())
            .map(|b| images.iter().map(|z| z.coeff(b).clone()).collect())
            .collect();
        Self::new(source, target, matrix)
    }

    pub fn identity(alg: &Arc<Algebra>) -> Self {
        let images: Vec<Element> = (0..alg.dim()).map(|a| Element::basis(alg, a)).collect();
        Self::from_images(alg, alg, &images).expect("square")
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn matrix(&self) -> &[Vec<RatFunc>] {
        &self.matrix
    }

    pub fn apply(&self, u: &Element) -> Result<Element> {
        require_same(&self.source, u.algebra())?;
        let n = self.source.nvars();
        let coeffs = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(u.coeffs())
                    .filter(|(m, c)| !m.is_zero() && !c.is_zero())
                    .fold(RatFunc::zero(n), |acc, (m, c)| &acc + &(m * c))
            })
            .collect();
        Element::new(&self.target, coeffs)
    }

    fn image(&self, a: usize) -> Element {
        self.apply(&Element::basis(&self.source, a)).expect("source element")
    }
}

/// Exact checks of `φ[t_a,t_b] = [φt_a, φt_b]` and `ρ'∘φ = ρ` on the basis,
/// then on random elements.
pub fn validate_morphism(phi: &Morphism, sampling: Sampling) -> ValidationReport {
    let src = &phi.source;
    let p = src.dim();
    let n = src.nvars();
    let names = src.var_names();

    let mut bracket_fail = None;
    'outer: for a in 0..p {
        for b in a + 1..p {
            let ta = Element::basis(src, a);
            let tb = Element::basis(src, b);
            let lhs = phi.apply(&bracket(&ta, &tb).expect("same")).expect("source");
            let rhs = bracket(&phi.image(a), &phi.image(b)).expect("same");
            let diff = &lhs - &rhs;
            if !diff.is_zero() {
                bracket_fail = Some(Witness {
                    indices: vec![a + 1, b + 1],
                    detail: format!("difference = {diff}"),
                });
                break 'outer;
            }
        }
    }

    let mut anchor_fail = None;
    'outer2: for a in 0..p {
        let lhs = phi.image(a).vector_field();
        let rhs = Element::basis(src, a).vector_field();
        for i in 0..n {
            let diff = &lhs[i] - &rhs[i];
            if !diff.is_zero() {
                anchor_fail = Some(Witness {
                    indices: vec![a + 1, i + 1],
                    detail: format!("difference = {}", diff.display_with(names)),
                });
                break 'outer2;
            }
        }
    }

    let mut rng = RandomSource::new(sampling.seed);
    let mut rb = None;
    let mut ra = None;
    for s in 0..sampling.samples {
        let u = rng.element(src);
        let v = rng.element(src);
        let f = rng.ratfunc(n);
        let pu = phi.apply(&u).expect("source");
        let pv = phi.apply(&v).expect("source");
        if rb.is_none() {
            let lhs = phi.apply(&bracket(&u, &v).expect("same")).expect("source");
            let diff = &lhs - &bracket(&pu, &pv).expect("same");
            if !diff.is_zero() {
                rb = Some(Witness {
                    indices: vec![s + 1],
                    detail: format!("difference = {diff}"),
                });
            }
        }
        if ra.is_none() {
            let diff = &anchor_apply(&pu, &f).expect("ring") - &anchor_apply(&u, &f).expect("ring");
            if !diff.is_zero() {
                ra = Some(Witness {
                    indices: vec![s + 1],
                    detail: format!("difference = {}", diff.display_with(names)),
                });
            }
        }
    }

    ValidationReport {
        seed: sampling.seed,
        samples: sampling.samples,
        checks: vec![
            Check::from_first_failure("bracket-basis", bracket_fail),
            Check::from_first_failure("anchor-basis", anchor_fail),
            Check::from_first_failure("bracket-random", rb),
            Check::from_first_failure("anchor-random", ra),
        ],
    }
}

/// `(φ*ω')(t_I) = ω'(φt_{I_1}, ..., φt_{I_q})`; zero above the source
/// dimension.
pub fn pullback(phi: &Morphism, w: &Form) -> Result<Form> {
    require_same(&phi.target, w.algebra())?;
    let q = w.degree();
    if q == 0 {
        return Ok(Form::scalar(&phi.source, w.coeff(&[])));
    }
    let images: Vec<Element> = (0..phi.source.dim()).map(|a| phi.image(a)).collect();
    let mut out = Form::zero(&phi.source, q);
    for idx in increasing_tuples(phi.source.dim(), q) {
        let args: Vec<Element> = idx.iter().map(|&a| images[a].clone()).collect();
        out.set_coeff(idx, w.eval(&args)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gla::heisenberg;

    fn heis_map(diag: [i64; 3]) -> Morphism {
        let h = heisenberg(0).into_shared();
        let images: Vec<Element> = (0..3)
            .map(|a| Element::basis(&h, a).scale(&RatFunc::from_int(0, diag[a])))
            .collect();
        Morphism::from_images(&h, &h, &images).unwrap()
    }

    #[test]
    fn identity_and_scaling_pass() {
        let h = heisenberg(0).into_shared();
        assert!(validate_morphism(&Morphism::identity(&h), Sampling::default()).all_passed());
        assert!(validate_morphism(&heis_map([1, 2, 2]), Sampling::default()).all_passed());
    }

    #[test]
    fn killing_t3_fails_on_first_pair() {
        let r = validate_morphism(&heis_map([1, 1, 0]), Sampling::default());
        let c = r.check("bracket-basis").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_ref().unwrap().indices, vec![1, 2]);
    }

    #[test]
    fn identity_pullback() {
        let h = heisenberg(0).into_shared();
        let w = Form::coframe(&h, 2);
        assert_eq!(pullback(&Morphism::identity(&h), &w).unwrap(), w);
    }
}

use std::fmt;
use std::sync::Arc;

use crate::coeffring::{default_var_names, RatFunc};
use crate::error::{Error, Result};
use crate::print::linear_combination;

/// `structure[a][b][c]` holds L^c_ab, so `[t_a, t_b] = Σ_c L^c_ab t_c`.
pub type StructureTable = Vec<Vec<Vec<RatFunc>>>;
/// `anchor[a][i]` holds ρ^i_a, so `ρ(t_a) = Σ_i ρ^i_a ∂_i`.
pub type AnchorMatrix = Vec<Vec<RatFunc>>;

/// A generalized Lie algebra on a free F-module of rank `dim`.
///
/// Equality compares the mathematical data only; labels and variable names
/// are for printing.
#[derive(Debug, Clone)]
pub struct Algebra {
    nvars: usize,
    dim: usize,
    anchor: AnchorMatrix,
    structure: StructureTable,
    labels: Vec<String>,
    var_names: Vec<String>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars
            && self.dim == other.dim
            && self.anchor == other.anchor
            && self.structure == other.structure
    }
}

impl Eq for Algebra {}

/// Checks shapes and antisymmetry, then builds the algebra.
pub fn build_algebra(
    nvars: usize,
    dim: usize,
    anchor: AnchorMatrix,
    structure: StructureTable,
) -> Result<Algebra> {
    if anchor.len() != dim || anchor.iter().any(|row| row.len() != nvars) {
        return Err(Error::MalformedAlgebra(format!(
            "anchor must be {dim}x{nvars}"
        )));
    }
    let cube_ok = structure.len() == dim
        && structure
            .iter()
            .all(|m| m.len() == dim && m.iter().all(|r| r.len() == dim));
    if !cube_ok {
        return Err(Error::MalformedAlgebra(format!(
            "structure must be {dim}x{dim}x{dim}"
        )));
    }
    let entries = anchor
        .iter()
        .flatten()
        .chain(structure.iter().flatten().flatten());
    for f in entries {
        if f.nvars() != nvars {
            return Err(Error::RingMismatch {
                left: nvars,
                right: f.nvars(),
            });
        }
    }
    for a in 0..dim {
        for b in a..dim {
            for c in 0..dim {
                if !(&structure[a][b][c] + &structure[b][a][c]).is_zero() {
                    return Err(Error::AntisymmetryViolated {
                        alpha: a + 1,
                        beta: b + 1,
                        gamma: c + 1,
                    });
                }
            }
        }
    }
    Ok(Algebra {
        nvars,
        dim,
        anchor,
        structure,
        labels: (1..=dim).map(|a| format!("t{a}")).collect(),
        var_names: default_var_names(nvars),
    })
}

/// Zero structure table with the listed brackets filled in antisymmetrically.
/// Entries are 1-based `(a, b, c, L^c_ab)`.
pub fn structure_from_brackets(
    dim: usize,
    nvars: usize,
    entries: &[(usize, usize, usize, RatFunc)],
) -> StructureTable {
    let mut s = vec![vec![vec![RatFunc::zero(nvars); dim]; dim]; dim];
    for (a, b, c, v) in entries {
        s[a - 1][b - 1][c - 1] = v.clone();
        s[b - 1][a - 1][c - 1] = -v;
    }
    s
}

impl Algebra {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// ρ^i_a with 0-based indices.
    pub fn anchor(&self, a: usize, i: usize) -> &RatFunc {
        &self.anchor[a][i]
    }

    /// L^c_ab with 0-based indices.
    pub fn structure(&self, a: usize, b: usize, c: usize) -> &RatFunc {
        &self.structure[a][b][c]
    }

    pub fn anchor_matrix(&self) -> &AnchorMatrix {
        &self.anchor
    }

    pub fn structure_table(&self) -> &StructureTable {
        &self.structure
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::ShapeMismatch(format!(
                "{} labels for dimension {}",
                labels.len(),
                self.dim
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_var_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.nvars {
            return Err(Error::ShapeMismatch(format!(
                "{} variable names for {} variables",
                names.len(),
                self.nvars
            )));
        }
        self.var_names = names;
        Ok(self)
    }

    /// True when the anchor vanishes and every structure function is a
    /// rational constant, so `d` is linear over Q.
    pub fn has_constant_structure(&self) -> bool {
        self.anchor.iter().flatten().all(RatFunc::is_zero)
            && self.structure.iter().flatten().flatten().all(RatFunc::is_constant)
    }

    pub fn into_shared(self) -> Arc<Algebra> {
        Arc::new(self)
    }

    /// Coefficients w^i of the vector field ρ(u) = Σ_i w^i ∂_i.
    pub fn vector_field(&self, coeffs: &[RatFunc]) -> Vec<RatFunc> {
        (0..self.nvars)
            .map(|i| {
                let mut acc = RatFunc::zero(self.nvars);
                for (a, u) in coeffs.iter().enumerate() {
                    let r = &self.anchor[a][i];
                    if !u.is_zero() && !r.is_zero() {
                        acc = &acc + &(u * r);
                    }
                }
                acc
            })
            .collect()
    }
}

/// Σ_i w^i ∂_i f.
pub fn apply_field(field: &[RatFunc], f: &RatFunc) -> Result<RatFunc> {
    let mut acc = RatFunc::zero(f.nvars());
    for (i, w) in field.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        acc = acc.try_add(&w.try_mul(&f.partial(i)?)?)?;
    }
    Ok(acc)
}

/// An element `Σ u^a t_a` of the algebra.
#[derive(Debug, Clone)]
pub struct Element {
    alg: Arc<Algebra>,
    coeffs: Vec<RatFunc>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.alg, &other.alg) && self.coeffs == other.coeffs
    }
}

impl Eq for Element {}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn require_same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<()> {
    if same_algebra(a, b) {
        Ok(())
    } else {
        Err(Error::MixedAlgebras)
    }
}

impl Element {
    pub fn new(alg: &Arc<Algebra>, coeffs: Vec<RatFunc>) -> Result<Self> {
        if coeffs.len() != alg.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{} coefficients for dimension {}",
                coeffs.len(),
                alg.dim()
            )));
        }
        if let Some(f) = coeffs.iter().find(|f| f.nvars() != alg.nvars()) {
            return Err(Error::RingMismatch {
                left: alg.nvars(),
                right: f.nvars(),
            });
        }
        Ok(Element {
            alg: alg.clone(),
            coeffs,
        })
    }

    pub fn zero(alg: &Arc<Algebra>) -> Self {
        Element {
            alg: alg.clone(),
            coeffs: vec![RatFunc::zero(alg.nvars()); alg.dim()],
        }
    }

    /// The basis element t_a (0-based).
    pub fn basis(alg: &Arc<Algebra>, a: usize) -> Self {
        let mut e = Self::zero(alg);
        e.coeffs[a] = RatFunc::one(alg.nvars());
        e
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn coeffs(&self) -> &[RatFunc] {
        &self.coeffs
    }

    pub fn coeff(&self, a: usize) -> &RatFunc {
        &self.coeffs[a]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_zero)
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        require_same(&self.alg, &other.alg)?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        require_same(&self.alg, &other.alg)?;
        Ok(self.zip(other, |a, b| a - b))
    }

    pub fn scale(&self, f: &RatFunc) -> Element {
        Element {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
        }
    }

    fn zip(&self, other: &Element, op: impl Fn(&RatFunc, &RatFunc) -> RatFunc) -> Element {
        Element {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    /// ρ(u) as a vector field.
    pub fn vector_field(&self) -> Vec<RatFunc> {
        self.alg.vector_field(&self.coeffs)
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("elements of one algebra")
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("elements of one algebra")
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.coeffs.iter().zip(self.alg.labels().iter().cloned());
        f.write_str(&linear_combination(terms, self.alg.var_names()))
    }
}

/// ρ(u)(f) = u^a ρ^i_a ∂_i f.
pub fn anchor_apply(u: &Element, f: &RatFunc) -> Result<RatFunc> {
    if f.nvars() != u.alg.nvars() {
        return Err(Error::RingMismatch {
            left: u.alg.nvars(),
            right: f.nvars(),
        });
    }
    apply_field(&u.vector_field(), f)
}

/// The bracket extended to arbitrary elements:
/// `[u,v]^c = u^a v^b L^c_ab + ρ(u)(v^c) - ρ(v)(u^c)`.
pub fn bracket(u: &Element, v: &Element) -> Result<Element> {
    require_same(&u.alg, &v.alg)?;
    let alg = &u.alg;
    let n = alg.nvars();
    let wu = u.vector_field();
    let wv = v.vector_field();
    let mut out = vec![RatFunc::zero(n); alg.dim()];
    for (a, ua) in u.coeffs.iter().enumerate() {
        if ua.is_zero() {
            continue;
        }
        for (b, vb) in v.coeffs.iter().enumerate() {
            if vb.is_zero() || a == b {
                continue;
            }
            let uv = ua * vb;
            for (c, slot) in out.iter_mut().enumerate() {
                let l = &alg.structure[a][b][c];
                if !l.is_zero() {
                    *slot = &*slot + &(&uv * l);
                }
            }
        }
    }
    for (c, slot) in out.iter_mut().enumerate() {
        let du = apply_field(&wu, &v.coeffs[c])?;
        let dv = apply_field(&wv, &u.coeffs[c])?;
        *slot = &(&*slot + &du) - &dv;
    }
    Ok(Element {
        alg: alg.clone(),
        coeffs: out,
    })
}

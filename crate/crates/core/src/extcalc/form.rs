use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::coeffring::RatFunc;
use crate::error::{Error, Result};
use crate::gla::{require_same, same_algebra, Algebra, Element};
use crate::linalg;
use crate::print::linear_combination;

/// Strictly increasing 0-based index tuples of length `k` drawn from `0..n`,
/// in lexicographic order.
pub fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Sorts `idx` and returns the sorted tuple with the sign of the sorting
/// permutation; `None` on a repeated index.
pub fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = idx.to_vec();
    let mut negative = false;
    // insertion sort so every swap flips the sign
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, negative))
}

/// An exterior form of fixed degree, stored on strictly increasing
/// multi-indices with no zero entries.
#[derive(Debug, Clone)]
pub struct Form {
    alg: Arc<Algebra>,
    degree: usize,
    coeffs: BTreeMap<Vec<usize>, RatFunc>,
}

impl PartialEq for Form {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree
            && same_algebra(&self.alg, &other.alg)
            && self.coeffs == other.coeffs
    }
}

impl Eq for Form {}

impl Form {
    pub fn zero(alg: &Arc<Algebra>, degree: usize) -> Self {
        Form {
            alg: alg.clone(),
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// A function viewed as a 0-form.
    pub fn scalar(alg: &Arc<Algebra>, f: RatFunc) -> Self {
        let mut out = Self::zero(alg, 0);
        out.set_coeff(vec![], f);
        out
    }

    /// The coframe element t^a (0-based), dual to t_a.
    pub fn coframe(alg: &Arc<Algebra>, a: usize) -> Self {
        let mut out = Self::zero(alg, 1);
        out.set_coeff(vec![a], RatFunc::one(alg.nvars()));
        out
    }

    /// Builds a form from coefficients on increasing 0-based multi-indices.
    pub fn from_coeffs(
        alg: &Arc<Algebra>,
        degree: usize,
        coeffs: impl IntoIterator<Item = (Vec<usize>, RatFunc)>,
    ) -> Result<Self> {
        let mut out = Self::zero(alg, degree);
        for (idx, c) in coeffs {
            out.check_index(&idx)?;
            if c.nvars() != alg.nvars() {
                return Err(Error::RingMismatch {
                    left: alg.nvars(),
                    right: c.nvars(),
                });
            }
            out.set_coeff(idx, c);
        }
        Ok(out)
    }

    fn check_index(&self, idx: &[usize]) -> Result<()> {
        let ok = idx.len() == self.degree
            && idx.windows(2).all(|w| w[0] < w[1])
            && idx.iter().all(|&a| a < self.alg.dim());
        if ok {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "multi-index {:?} is not strictly increasing of length {} within 1..{}",
                idx.iter().map(|a| a + 1).collect::<Vec<_>>(),
                self.degree,
                self.alg.dim()
            )))
        }
    }

    /// Overwrites one coefficient; zero removes the entry.
    ///
    /// Panics if `idx` is not a strictly increasing tuple of the right length.
    pub fn set_coeff(&mut self, idx: Vec<usize>, c: RatFunc) {
        self.check_index(&idx).expect("valid multi-index");
        if c.is_zero() {
            self.coeffs.remove(&idx);
        } else {
            self.coeffs.insert(idx, c);
        }
    }

    fn add_to(&mut self, idx: Vec<usize>, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&idx) {
            Some(old) => {
                let sum = &*old + c;
                if sum.is_zero() {
                    self.coeffs.remove(&idx);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.coeffs.insert(idx, c.clone());
            }
        }
    }

    /// Adds `sign * c` at the sorted version of `idx`; repeated indices vanish.
    pub(crate) fn accumulate(&mut self, idx: &[usize], c: &RatFunc) {
        if let Some((sorted, negative)) = sort_with_sign(idx) {
            if negative {
                self.add_to(sorted, &-c);
            } else {
                self.add_to(sorted, c);
            }
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, RatFunc> {
        &self.coeffs
    }

    pub fn coeff(&self, idx: &[usize]) -> RatFunc {
        self.coeffs
            .get(idx)
            .cloned()
            .unwrap_or_else(|| RatFunc::zero(self.alg.nvars()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value on basis elements t_{idx_1}, ..., t_{idx_q} in any order.
    pub fn eval_basis(&self, idx: &[usize]) -> RatFunc {
        assert_eq!(idx.len(), self.degree, "arity");
        match sort_with_sign(idx) {
            None => RatFunc::zero(self.alg.nvars()),
            Some((sorted, negative)) => {
                let c = self.coeff(&sorted);
                if negative {
                    -c
                } else {
                    c
                }
            }
        }
    }

    /// ω(z_1, ..., z_q) = Σ_I ω_I det[z_j^{I_k}].
    pub fn eval(&self, args: &[Element]) -> Result<RatFunc> {
        if args.len() != self.degree {
            return Err(Error::ArityMismatch {
                expected: self.degree,
                got: args.len(),
            });
        }
        for z in args {
            require_same(&self.alg, z.algebra())?;
        }
        let n = self.alg.nvars();
        let mut acc = RatFunc::zero(n);
        for (idx, c) in &self.coeffs {
            let minor: Vec<Vec<RatFunc>> = idx
                .iter()
                .map(|&k| args.iter().map(|z| z.coeff(k).clone()).collect())
                .collect();
            let det = linalg::determinant(&minor, n);
            if !det.is_zero() {
                acc = &acc + &(c * &det);
            }
        }
        Ok(acc)
    }

    pub fn try_add(&self, other: &Form) -> Result<Form> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_to(idx.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Form) -> Result<Form> {
        self.try_add(&-other)
    }

    fn check_compatible(&self, other: &Form) -> Result<()> {
        require_same(&self.alg, &other.alg)?;
        if self.degree != other.degree {
            return Err(Error::WrongDegree {
                expected: self.degree,
                got: other.degree,
            });
        }
        Ok(())
    }

    /// f·ω.
    pub fn scale(&self, f: &RatFunc) -> Form {
        let mut out = Form::zero(&self.alg, self.degree);
        if f.is_zero() {
            return out;
        }
        for (idx, c) in &self.coeffs {
            out.coeffs.insert(idx.clone(), c * f);
        }
        out
    }

    /// The 0-form's value; `None` for higher degree.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        (self.degree == 0).then(|| self.coeff(&[]))
    }

    /// Printed basis monomial `t^1∧t^3` for a 0-based multi-index.
    pub fn monomial_label(idx: &[usize]) -> String {
        idx.iter()
            .map(|a| format!("t^{}", a + 1))
            .collect::<Vec<_>>()
            .join("∧")
    }
}

impl std::ops::Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        self.try_add(rhs).expect("forms of one algebra and degree")
    }
}

impl std::ops::Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self.try_sub(rhs).expect("forms of one algebra and degree")
    }
}

impl std::ops::Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form {
            alg: self.alg.clone(),
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.alg.var_names();
        if self.degree == 0 {
            return write!(f, "{}", self.coeff(&[]).display_with(names));
        }
        let terms = self
            .coeffs
            .iter()
            .map(|(idx, c)| (c, Form::monomial_label(idx)));
        f.write_str(&linear_combination(terms, names))
    }
}

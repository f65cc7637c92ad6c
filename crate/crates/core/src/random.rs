//! Seeded generators for randomized exact checks.
//!
//! Coefficients are polynomials of total degree at most 2 with integer
//! coefficients in [-3, 3]. ChaCha8 keeps the streams stable across
//! platforms and `rand` versions, so reports are reproducible from the seed.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffring::{Monomial, Poly, RatFunc, Rational};
use crate::extcalc::Form;
use crate::gla::{build_algebra, structure_from_brackets, Algebra, Element, StructureTable};
use crate::linalg;

/// A random constant-coefficient Lie algebra together with a basis of a
/// known proper subalgebra (coefficient vectors in the algebra's basis).
#[derive(Debug, Clone)]
pub struct RandomLieAlgebra {
    pub algebra: Algebra,
    pub subalgebra: Vec<Vec<RatFunc>>,
}

pub struct RandomSource {
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        RandomSource {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Random polynomial of total degree `<= max_degree`.
    pub fn poly(&mut self, nvars: usize, max_degree: u32) -> Poly {
        let monomials = monomials_up_to(nvars, max_degree);
        let terms: Vec<(Monomial, Rational)> = monomials
            .into_iter()
            .map(|m| (m, Rational::from_integer(self.int(-3, 3).into())))
            .collect();
        Poly::from_terms(nvars, terms)
    }

    pub fn ratfunc(&mut self, nvars: usize) -> RatFunc {
        RatFunc::from_poly(self.poly(nvars, 2))
    }

    /// Random quotient with a nonzero denominator of degree at most 1.
    pub fn proper_ratfunc(&mut self, nvars: usize) -> RatFunc {
        let num = self.poly(nvars, 2);
        loop {
            let den = self.poly(nvars, 1);
            if !den.is_zero() {
                return RatFunc::normalize(num, den).expect("nonzero denominator");
            }
        }
    }

    pub fn element(&mut self, alg: &Arc<Algebra>) -> Element {
        let coeffs = (0..alg.dim()).map(|_| self.ratfunc(alg.nvars())).collect();
        Element::new(alg, coeffs).expect("shape matches")
    }

    /// Random form of the given degree with every coefficient drawn.
    pub fn form(&mut self, alg: &Arc<Algebra>, degree: usize) -> Form {
        let mut out = Form::zero(alg, degree);
        for idx in crate::extcalc::increasing_tuples(alg.dim(), degree) {
            let c = self.ratfunc(alg.nvars());
            out.set_coeff(idx, c);
        }
        out
    }
}

impl RandomSource {
    /// One of: R ⋉_D R^{p-1} for a random integer matrix D, Heisenberg ⊕
    /// R^{p-3}, or sl2 ⊕ R^{p-3}; then rewritten in a random integer basis.
    /// The Jacobi identity holds by construction, never by luck.
    pub fn constant_lie_algebra(&mut self, p: usize) -> RandomLieAlgebra {
        assert!(p >= 2, "dimension at least 2");
        let c = |k: i64| RatFunc::from_int(0, k);
        let kinds = if p >= 3 { 3 } else { 1 };
        let (structure, sub): (StructureTable, Vec<usize>) = match self.index(kinds) {
            0 => {
                let mut entries = Vec::new();
                for j in 2..=p {
                    for k in 2..=p {
                        let d = self.int(-2, 2);
                        if d != 0 {
                            entries.push((1, j, k, c(d)));
                        }
                    }
                }
                (structure_from_brackets(p, 0, &entries), (1..p).collect())
            }
            1 => (
                structure_from_brackets(p, 0, &[(1, 2, 3, c(1))]),
                [0].into_iter().chain(2..p).collect(),
            ),
            _ => (
                structure_from_brackets(p, 0, &[(1, 2, 2, c(2)), (1, 3, 3, c(-2)), (2, 3, 1, c(1))]),
                [0, 1].into_iter().chain(3..p).collect(),
            ),
        };
        let (pm, qm) = self.unimodular_ish(p);
        // L'^f_ab = Σ Q_fe P_ca P_db L^e_cd
        let mut out = vec![vec![vec![RatFunc::zero(0); p]; p]; p];
        for a in 0..p {
            for b in 0..p {
                let mut img = vec![RatFunc::zero(0); p];
                for cc in 0..p {
                    for d in 0..p {
                        let w = &pm[cc][a] * &pm[d][b];
                        if w.is_zero() {
                            continue;
                        }
                        for (e, slot) in img.iter_mut().enumerate() {
                            let l = &structure[cc][d][e];
                            if !l.is_zero() {
                                *slot = &*slot + &(&w * l);
                            }
                        }
                    }
                }
                out[a][b] = linalg::mat_vec(&qm, &img, 0);
            }
        }
        let algebra = build_algebra(0, p, vec![vec![]; p], out).expect("antisymmetric");
        let subalgebra = sub
            .into_iter()
            .map(|k| qm.iter().map(|row| row[k].clone()).collect())
            .collect();
        RandomLieAlgebra { algebra, subalgebra }
    }

    /// A random integer matrix P with small entries and its inverse.
    fn unimodular_ish(&mut self, p: usize) -> (Vec<Vec<RatFunc>>, Vec<Vec<RatFunc>>) {
        loop {
            let pm: Vec<Vec<RatFunc>> = (0..p)
                .map(|i| {
                    (0..p)
                        .map(|j| {
                            let v = if i == j { self.int(1, 2) } else { self.int(-1, 1) };
                            RatFunc::from_int(0, v)
                        })
                        .collect()
                })
                .collect();
            if let Some(qm) = linalg::inverse(&pm, 0) {
                return (pm, qm);
            }
        }
    }

    /// Two independent random integer combinations of `pool`.
    pub fn rank2_in(&mut self, pool: &[Vec<RatFunc>]) -> [Vec<RatFunc>; 2] {
        assert!(pool.len() >= 2);
        let dim = pool[0].len();
        loop {
            let mut pick = || -> Vec<RatFunc> {
                let mut v = vec![RatFunc::zero(0); dim];
                for row in pool {
                    let k = RatFunc::from_int(0, self.int(-2, 2));
                    for (slot, x) in v.iter_mut().zip(row) {
                        *slot = &*slot + &(&k * x);
                    }
                }
                v
            };
            let (a, b) = (pick(), pick());
            if linalg::rank(&[a.clone(), b.clone()], dim) == 2 {
                return [a, b];
            }
        }
    }
}

fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = vec![vec![0; nvars]];
    for v in 0..nvars {
        let mut next = Vec::new();
        for m in &out {
            let used: u32 = m.iter().sum();
            for e in 0..=(max_degree - used) {
                let mut mm = m.clone();
                mm[v] = e;
                next.push(mm);
            }
        }
        out = next;
    }
    out
}

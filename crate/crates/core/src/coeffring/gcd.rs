//! Multivariate GCD over the rationals.
//!
//! The heuristic evaluation GCD answers almost every call. Behind it sits a
//! recursive subresultant remainder sequence: pick a main variable of low
//! degree, split off the content (a GCD of coefficient polynomials in the
//! remaining variables), and run pseudo-remainders on the primitive parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::heugcd::heuristic_gcd;
use super::poly::{Poly, Rational};

/// Greatest common divisor, normalized to be lex-monic. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    assert_eq!(a.nvars(), b.nvars(), "ring mismatch");
    let n = a.nvars();
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one(n);
    }
    if a == b {
        return a.monic();
    }
    if let Some(g) = heuristic_gcd(&integer_primitive(a), &integer_primitive(b)) {
        return g.monic();
    }
    // a variable present on one side only splits off immediately
    if let Some(var) = (0..n).find(|&v| a.contains_var(v) != b.contains_var(v)) {
        return if a.contains_var(var) {
            gcd(&content(a, var), b)
        } else {
            gcd(a, &content(b, var))
        };
    }
    // otherwise run the remainder sequence in the variable of lowest degree,
    // which keeps it short and the coefficient growth small
    let var = (0..n)
        .filter(|&v| a.contains_var(v))
        .min_by_key(|&v| {
            let (da, db) = (a.degree_in(v), b.degree_in(v));
            (da.min(db), da.max(db))
        })
        .expect("non-constant polynomial has a variable");

    if coprime_images(a, b, var) {
        // the gcd has degree 0 in var, so it is the gcd of the contents
        let cb = content(b, var);
        if cb.is_one() {
            return cb;
        }
        return gcd(&content(a, var), &cb);
    }

    let ca = content(a, var);
    let cb = content(b, var);
    let c = gcd(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(var) < q.degree_in(var) {
        std::mem::swap(&mut p, &mut q);
    }
    // the common case in normalization: one side divides the other
    if p.div_exact(&q).is_some() {
        return (&c * &q).monic();
    }
    // a primitive linear polynomial is irreducible
    if q.total_degree() == 1 {
        return c.monic();
    }
    let g = subresultant_prs(integer_primitive(&p), integer_primitive(&q), var);
    (&c * &primitive_part(&g, var)).monic()
}

/// Last nonzero term of the subresultant remainder sequence of `p` and `q`
/// (with `deg p >= deg q` in `var`). Its primitive part is the primitive
/// GCD; the divisions by `g h^δ` keep the coefficient growth polynomial
/// without any GCDs inside the loop.
fn subresultant_prs(mut p: Poly, mut q: Poly, var: usize) -> Poly {
    let n = p.nvars();
    let mut g = Poly::one(n);
    let mut h = Poly::one(n);
    loop {
        let delta = p.degree_in(var) - q.degree_in(var);
        let r = pseudo_remainder(&p, &q, var);
        if r.is_zero() {
            return q;
        }
        if r.degree_in(var) == 0 {
            return Poly::one(n);
        }
        let divisor = &g * &h.pow(delta);
        p = q;
        q = r.div_exact(&divisor).expect("subresultant division is exact");
        g = p.leading_coeff_in(var);
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant division is exact")
        };
    }
}

/// Certificate that `gcd(a, b)` has degree 0 in `var`. The other variables
/// are set to small integers where both leading coefficients survive; the
/// specialized gcd is then a multiple of the specialized true gcd, so a
/// constant image proves the claim. `false` means "unknown".
fn coprime_images(a: &Poly, b: &Poly, var: usize) -> bool {
    let n = a.nvars();
    if !(0..n).any(|j| j != var && (a.contains_var(j) || b.contains_var(j))) {
        return false;
    }
    let (la, lb) = (a.leading_coeff_in(var), b.leading_coeff_in(var));
    for attempt in 0..3i64 {
        let point: Vec<Rational> = (0..n)
            .map(|j| Rational::from_integer((2 + j as i64 * 3 + attempt * 7).into()))
            .collect();
        if specialize(&la, var, &point).is_zero() || specialize(&lb, var, &point).is_zero() {
            continue;
        }
        let g = gcd(&specialize(a, var, &point), &specialize(b, var, &point));
        return g.is_constant();
    }
    false
}

/// `p` with every variable except `var` replaced by `point[j]`.
fn specialize(p: &Poly, var: usize, point: &[Rational]) -> Poly {
    let n = p.nvars();
    Poly::from_terms(
        n,
        p.terms().map(|(m, c)| {
            let mut value = c.clone();
            let mut mono = vec![0; n];
            for (j, &e) in m.iter().enumerate() {
                if j == var {
                    mono[j] = e;
                } else if e > 0 {
                    value *= num_traits::pow(point[j].clone(), e as usize);
                }
            }
            (mono, value)
        }),
    )
}

/// GCD of the coefficients of `p` viewed as a polynomial in `var`.
fn content(p: &Poly, var: usize) -> Poly {
    let mut acc = Poly::zero(p.nvars());
    for coeff in p.coefficients_in(var).values() {
        acc = gcd(&acc, coeff);
        if acc.is_one() {
            break;
        }
    }
    acc
}

/// Primitive in `var` with coprime integer coefficients. Keeping the
/// remainders integral is what stops the coefficients from exploding.
fn primitive_part(p: &Poly, var: usize) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content(p, var);
    integer_primitive(&p.div_exact(&c).expect("content divides"))
}

/// `p` scaled to integer coefficients with content 1.
fn integer_primitive(p: &Poly) -> Poly {
    let mut lcm = BigInt::one();
    for c in p.integer_content_parts() {
        lcm = lcm.lcm(c.denom());
    }
    let mut g = BigInt::zero();
    for c in p.integer_content_parts() {
        g = g.gcd(&(c.numer() * (&lcm / c.denom())));
    }
    if g.is_zero() {
        return p.clone();
    }
    p.scale(&Rational::new(lcm, g))
}

/// Pseudo-remainder of `a` by `b` in `var`: `lc(b)^(deg a - deg b + 1) * a`
/// reduced modulo `b`. The exponent is exact, which the subresultant
/// divisions rely on.
fn pseudo_remainder(a: &Poly, b: &Poly, var: usize) -> Poly {
    let n = a.nvars();
    let db = b.degree_in(var);
    let lcb = b.leading_coeff_in(var);
    let mut steps = a.degree_in(var) + 1 - db;
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let d = r.degree_in(var);
        let lcr = r.leading_coeff_in(var);
        let mut shift = vec![0; n];
        shift[var] = d - db;
        let mut shifted_b = Poly::zero(n);
        shifted_b.add_scaled_shifted(b, &shift, &One::one());
        r = &(&r * &lcb) - &(&lcr * &shifted_b);
        steps -= 1;
    }
    &r * &lcb.pow(steps)
}

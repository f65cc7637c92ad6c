//! Heuristic GCD for integer polynomials.
//!
//! Evaluate one variable at a large integer ξ, take the GCD of the images
//! recursively (plain integers at the bottom), and read the candidate back
//! off its balanced base-ξ digits. A candidate is accepted only after exact
//! division of both inputs, so a wrong guess costs time, never correctness.
//! With ξ above twice the smaller coefficient norm an accepted candidate
//! is the GCD itself (Char, Geddes and Gonnet). After a few misses the
//! caller falls back to remainder sequences.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::poly::{Poly, Rational};

const ATTEMPTS: usize = 6;

/// `Some(g)` with g the primitive GCD of two nonzero polynomials with integer
/// coefficients, up to sign.
pub(super) fn heuristic_gcd(f: &Poly, g: &Poly) -> Option<Poly> {
    let vars: Vec<usize> = (0..f.nvars())
        .filter(|&v| f.contains_var(v) || g.contains_var(v))
        .collect();
    heu(f, g, &vars)
}

/// GCD over the integers, integer content included, since the digits of
/// the images carry it; `vars` lists every variable that may occur.
fn heu(f: &Poly, g: &Poly, vars: &[usize]) -> Option<Poly> {
    let n = f.nvars();
    let Some((&var, rest)) = vars.split_last() else {
        return Some(int_poly(n, int_value(f).gcd(&int_value(g))));
    };

    let common = content(f).gcd(&content(g));
    let f = div_ground(f, &common);
    let g = div_ground(g, &common);
    let (fnorm, gnorm) = (max_norm(&f), max_norm(&g));
    // ξ >= 2 min(|f|, |g|) + 2 makes an accepted candidate the true GCD
    let from_lc = 2 * (&fnorm / lead(&f).abs()).min(&gnorm / lead(&g).abs()) + 4;
    let bound: BigInt = 2 * fnorm.min(gnorm) + 29;
    let mut xi = bound.max(from_lc);

    for _ in 0..ATTEMPTS {
        let (ff, gg) = (eval_at(&f, var, &xi), eval_at(&g, var, &xi));
        if !ff.is_zero() && !gg.is_zero() {
            let h = primitive(&interpolate(&heu(&ff, &gg, rest)?, var, &xi));
            if f.div_exact(&h).is_some() && g.div_exact(&h).is_some() {
                return Some(scale_ground(&h, &common));
            }
        }
        xi = &xi * 73794 * xi.sqrt().sqrt() / 27011;
    }
    None
}

fn int_value(p: &Poly) -> BigInt {
    p.constant_value().map(|c| c.to_integer()).unwrap_or_default()
}

fn int_poly(n: usize, c: BigInt) -> Poly {
    Poly::constant(n, Rational::from_integer(c))
}

fn content(p: &Poly) -> BigInt {
    p.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c.numer()))
}

fn max_norm(p: &Poly) -> BigInt {
    p.terms().map(|(_, c)| c.numer().abs()).max().unwrap_or_default()
}

fn lead(p: &Poly) -> BigInt {
    p.leading_lex().map(|(_, c)| c.numer().clone()).unwrap_or_default()
}

fn div_ground(p: &Poly, c: &BigInt) -> Poly {
    p.scale(&Rational::new(1.into(), c.clone()))
}

fn scale_ground(p: &Poly, c: &BigInt) -> Poly {
    p.scale(&Rational::from_integer(c.clone()))
}

fn primitive(p: &Poly) -> Poly {
    let c = content(p);
    if c.is_zero() {
        return p.clone();
    }
    let c = if lead(p).sign() == Sign::Minus { -c } else { c };
    div_ground(p, &c)
}

/// `p` with `var` set to ξ.
fn eval_at(p: &Poly, var: usize, xi: &BigInt) -> Poly {
    let n = p.nvars();
    let max = p.degree_in(var) as usize;
    let mut powers = Vec::with_capacity(max + 1);
    powers.push(BigInt::from(1));
    for k in 0..max {
        let next = &powers[k] * xi;
        powers.push(next);
    }
    Poly::from_terms(
        n,
        p.terms().map(|(m, c)| {
            let mut m = m.clone();
            let e = std::mem::take(&mut m[var]) as usize;
            (m, c * Rational::from_integer(powers[e].clone()))
        }),
    )
}

/// Inverse of `eval_at` for small coefficients: the balanced base-ξ digits
/// of every coefficient become the coefficients of successive powers of
/// `var`.
fn interpolate(h: &Poly, var: usize, xi: &BigInt) -> Poly {
    let n = h.nvars();
    let half = xi / 2;
    let mut terms = Vec::new();
    for (m, c) in h.terms() {
        let mut value = c.numer().clone();
        let mut e = 0u32;
        while !value.is_zero() {
            let mut digit = value.mod_floor(xi);
            if digit > half {
                digit -= xi;
            }
            if !digit.is_zero() {
                let mut mm = m.clone();
                mm[var] = e;
                terms.push((mm, Rational::from_integer(digit.clone())));
            }
            value = (value - digit) / xi;
            e += 1;
        }
    }
    let p = Poly::from_terms(n, terms);
    if lead(&p).sign() == Sign::Minus {
        -&p
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_round_trip() {
        let (x, y) = (Poly::var(2, 0), Poly::var(2, 1));
        let p = &(&(&x * &y).scale(&Rational::from_integer(7.into())) - &y) + &Poly::from_int(2, -3);
        let xi = BigInt::from(101);
        assert_eq!(interpolate(&eval_at(&p, 1, &xi), 1, &xi), p);
    }

    #[test]
    fn finds_common_factor() {
        let (x, y, z) = (Poly::var(3, 0), Poly::var(3, 1), Poly::var(3, 2));
        let k = &(&(&x * &y) - &z.scale(&Rational::from_integer(3.into()))) + &Poly::from_int(3, 1);
        let a = &k * &(&(&x * &x) + &y);
        let b = &k * &(&z - &x);
        let g = heuristic_gcd(&a, &b).unwrap();
        assert!(g == k || g == -&k);
    }
}

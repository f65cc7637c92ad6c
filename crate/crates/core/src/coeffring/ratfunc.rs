use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::poly::{default_var_names, Poly, Rational};
use crate::error::{Error, Result};

/// An element of F = Q(x1, ..., xm), kept in canonical form.
///
/// Canonical form: numerator and denominator are coprime polynomials with
/// integer coefficients whose joint integer content is 1, and the graded-lex
/// leading coefficient of the denominator is positive. Zero is `0/1`. Two
/// values are equal exactly when their canonical forms are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn zero(nvars: usize) -> Self {
        RatFunc {
            num: Poly::zero(nvars),
            den: Poly::one(nvars),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::from_int(nvars, 1)
    }

    pub fn from_int(nvars: usize, c: i64) -> Self {
        RatFunc {
            num: Poly::from_int(nvars, c),
            den: Poly::one(nvars),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::from_poly(Poly::constant(nvars, c))
    }

    /// The coordinate function `x_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        RatFunc {
            num: Poly::var(nvars, index),
            den: Poly::one(nvars),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        let n = p.nvars();
        Self::normalize(p, Poly::one(n)).expect("nonzero denominator")
    }

    /// Canonical form of `num / den`.
    pub fn normalize(num: Poly, den: Poly) -> Result<Self> {
        if num.nvars() != den.nvars() {
            return Err(Error::RingMismatch {
                left: num.nvars(),
                right: den.nvars(),
            });
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = num.nvars();
        if num.is_zero() {
            return Ok(Self::zero(n));
        }
        let (num, den) = if num.is_constant() || den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        Ok(Self::scale_to_integers(num, den))
    }

    fn scale_to_integers(num: Poly, den: Poly) -> Self {
        let coeffs: Vec<&Rational> = num
            .integer_content_parts()
            .chain(den.integer_content_parts())
            .collect();
        let mut lcm = BigInt::one();
        let mut content = BigInt::zero();
        for c in &coeffs {
            lcm = lcm.lcm(c.denom());
        }
        for c in coeffs {
            let scaled = c.numer() * (&lcm / c.denom());
            content = content.gcd(&scaled);
        }
        let mut factor = Rational::new(lcm, content);
        if den
            .leading_grlex()
            .map(|(_, c)| c.is_negative())
            .unwrap_or(false)
        {
            factor = -factor;
        }
        if factor.is_one() {
            return RatFunc { num, den };
        }
        RatFunc {
            num: num.scale(&factor),
            den: den.scale(&factor),
        }
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        Some(self.num.constant_value()? / self.den.constant_value()?)
    }

    /// Rough size used for pivot selection.
    pub fn complexity(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    fn check_ring(&self, other: &RatFunc) -> Result<()> {
        if self.nvars() != other.nvars() {
            return Err(Error::RingMismatch {
                left: self.nvars(),
                right: other.nvars(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check_ring(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        // Henrici: only the denominators and the small factor g ever meet
        // in a gcd, never the full cross-multiplied numerator
        let g = gcd(&self.den, &other.den);
        if g.is_constant() {
            let num = &(&self.num * &other.den) + &(&other.num * &self.den);
            return Ok(Self::scale_to_integers(num, &self.den * &other.den));
        }
        let b = self.den.div_exact(&g).expect("gcd divides");
        let d = other.den.div_exact(&g).expect("gcd divides");
        let t = &(&self.num * &d) + &(&other.num * &b);
        if t.is_zero() {
            return Ok(Self::zero(self.nvars()));
        }
        let (t, g) = cancel(&t, &g);
        Ok(Self::scale_to_integers(t, &(&b * &d) * &g))
    }

    pub fn try_sub(&self, other: &RatFunc) -> Result<RatFunc> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check_ring(other)?;
        let n = self.nvars();
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(n));
        }
        if self.is_one() {
            return Ok(other.clone());
        }
        if other.is_one() {
            return Ok(self.clone());
        }
        // cross-cancel so the product is already coprime
        let (a_num, b_den) = cancel(&self.num, &other.den);
        let (b_num, a_den) = cancel(&other.num, &self.den);
        Ok(Self::scale_to_integers(&a_num * &b_num, &a_den * &b_den))
    }

    pub fn try_div(&self, other: &RatFunc) -> Result<RatFunc> {
        self.check_ring(other)?;
        self.try_mul(&other.recip()?)
    }

    pub fn recip(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::scale_to_integers(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
        .renormalized()
    }

    fn renormalized(self) -> RatFunc {
        Self::scale_to_integers(self.num, self.den)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return Self::zero(self.nvars());
        }
        Self::scale_to_integers(self.num.scale(c), self.den.clone())
    }

    /// Partial derivative in the 0-based variable `var` (quotient rule).
    pub fn partial(&self, var: usize) -> Result<RatFunc> {
        let n = self.nvars();
        if var >= n {
            return Err(Error::UnknownVariable {
                index: var + 1,
                nvars: n,
            });
        }
        if self.is_zero() || !self.num.contains_var(var) && !self.den.contains_var(var) {
            return Ok(Self::zero(n));
        }
        if self.den.is_constant() {
            return Self::normalize(self.num.partial(var), self.den.clone());
        }
        // (n/d)' = n'/d - (n/d)(d'/d), keeping every gcd small
        let first = Self::normalize(self.num.partial(var), self.den.clone())?;
        let log_den = Self::normalize(self.den.partial(var), self.den.clone())?;
        first.try_sub(&self.try_mul(&log_den)?)
    }

    /// Substitutes `args[i]` for the i-th variable. The arguments may live in a
    /// ring with a different number of variables; the result lives there too.
    pub fn compose(&self, args: &[RatFunc]) -> Result<RatFunc> {
        if args.len() != self.nvars() {
            return Err(Error::ShapeMismatch(format!(
                "composition needs {} maps, got {}",
                self.nvars(),
                args.len()
            )));
        }
        let target = match args.first() {
            Some(a) => a.nvars(),
            None => {
                // no variables: a constant, re-homed to zero variables
                return Ok(self.clone());
            }
        };
        for a in args {
            if a.nvars() != target {
                return Err(Error::RingMismatch {
                    left: target,
                    right: a.nvars(),
                });
            }
        }
        let num = eval_poly(&self.num, args, target)?;
        let den = eval_poly(&self.den, args, target)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        num.try_div(&den)
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> RatFuncDisplay<'a> {
        RatFuncDisplay { f: self, names }
    }

    /// True when the printed form needs no parentheses as a factor.
    pub fn is_atomic(&self) -> bool {
        self.den.is_one() && self.num.num_terms() <= 1 && {
            match self.num.leading_lex() {
                None => true,
                Some((_, c)) => !c.is_negative() && c.is_integer(),
            }
        }
    }
}

fn cancel(a: &Poly, b: &Poly) -> (Poly, Poly) {
    if a.is_constant() || b.is_constant() {
        return (a.clone(), b.clone());
    }
    let g = gcd(a, b);
    if g.is_one() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(&g).unwrap(), b.div_exact(&g).unwrap())
    }
}

fn eval_poly(p: &Poly, args: &[RatFunc], target: usize) -> Result<RatFunc> {
    let mut acc = RatFunc::zero(target);
    let mut powers: Vec<Vec<RatFunc>> = args.iter().map(|a| vec![RatFunc::one(target), a.clone()]).collect();
    for (m, c) in p.terms() {
        let mut term = RatFunc::constant(target, c.clone());
        for (i, &e) in m.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let e = e as usize;
            while powers[i].len() <= e {
                let next = powers[i].last().unwrap().try_mul(&args[i])?;
                powers[i].push(next);
            }
            term = term.try_mul(&powers[i][e])?;
        }
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

pub struct RatFuncDisplay<'a> {
    f: &'a RatFunc,
    names: &'a [String],
}

impl fmt::Display for RatFuncDisplay<'_> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        self.f.num.fmt_with(self.names, &mut num)?;
        if self.f.den.is_one() {
            return out.write_str(&num);
        }
        let mut den = String::new();
        self.f.den.fmt_with(self.names, &mut den)?;
        if self.f.num.num_terms() > 1 {
            write!(out, "({num})")?;
        } else {
            out.write_str(&num)?;
        }
        if den_is_bare(&self.f.den) {
            write!(out, "/{den}")
        } else {
            write!(out, "/({den})")
        }
    }
}

/// A denominator prints without parentheses when it is a positive integer or
/// a single variable power with unit coefficient.
fn den_is_bare(den: &Poly) -> bool {
    if den.num_terms() != 1 {
        return false;
    }
    let (m, c) = den.leading_lex().unwrap();
    let nonzero = m.iter().filter(|&&e| e > 0).count();
    match nonzero {
        0 => c.is_integer() && c.is_positive(),
        1 => c.is_one(),
        _ => false,
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_var_names(self.nvars());
        write!(f, "{}", self.display_with(&names))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.try_div(rhs).expect("division by zero in F")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc { (&self).$m(&rhs) }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

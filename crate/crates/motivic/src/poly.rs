//! Sparse Laurent polynomials in the Lefschetz class `L` over arbitrary-precision
//! integers.
//!
//! Classes of cellular varieties (affine spaces, projective spaces,
//! Grassmannians) are polynomials in `L`; Laurent support keeps the ring closed
//! under division by powers of `L`. The zero polynomial stores no terms and no
//! stored coefficient is ever zero, so structural equality is semantic equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial in `L` with `BigInt` coefficients, stored as a sparse
/// exponent -> coefficient map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MotivicPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl MotivicPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The class of the affine line.
    pub fn lefschetz() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// Builds a polynomial from (exponent, coefficient) pairs, accumulating
    /// duplicates and dropping zeros.
    pub fn from_terms(pairs: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (exp, coeff) in pairs {
            p.add_term(exp, coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// True iff the polynomial has no negative exponents and every coefficient
    /// is nonnegative: the shape of a class in the Grothendieck semiring.
    pub fn is_effective(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0) && self.terms.values().all(|c| !c.is_negative())
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Multiplies by `L^k`.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut base = self.clone();
        let mut out = Self::one();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Exact evaluation at a rational point. Errors when negative exponents
    /// meet `q = 0`.
    pub fn eval_rational(&self, q: &BigRational) -> Result<BigRational> {
        if q.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::NegativePowerAtZero);
        }
        let mut acc = BigRational::zero();
        for (exp, coeff) in self.terms() {
            acc += BigRational::from_integer(coeff.clone()) * rational_pow(q, exp);
        }
        Ok(acc)
    }

    /// The gcd of the coefficients (positive; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v / &c)).collect(),
        }
    }

    /// Exact division in the Laurent ring. Returns `None` when the divisor does
    /// not divide exactly.
    pub fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let sn = self.min_exp().unwrap();
        let sd = divisor.min_exp().unwrap();
        let q = div_ordinary(&self.shift(-sn), &divisor.shift(-sd))?;
        Some(q.shift(sn - sd))
    }

    /// Gcd over `Z` of the `L`-power-free parts (positive leading coefficient,
    /// includes the integer content gcd). Powers of `L` are units and never
    /// appear in the result.
    pub fn gcd(&self, other: &Self) -> Self {
        let a = self
            .min_exp()
            .map_or_else(|| self.clone(), |e| self.shift(-e));
        let b = other
            .min_exp()
            .map_or_else(|| other.clone(), |e| other.shift(-e));
        if a.is_zero() {
            return normalize_sign(b);
        }
        if b.is_zero() {
            return normalize_sign(a);
        }
        let content = a.content().gcd(&b.content());
        let mut a = a.primitive_part();
        let mut b = b.primitive_part();
        while !b.is_zero() {
            let r = primitive_remainder(&a, &b);
            a = b;
            b = r.primitive_part();
        }
        normalize_sign(a.scale(&content))
    }
}

fn normalize_sign(p: MotivicPolynomial) -> MotivicPolynomial {
    if p.leading_coeff().is_some_and(|c| c.is_negative()) {
        -&p
    } else {
        p
    }
}

/// Remainder of a pseudo-division of ordinary polynomials, up to a scalar.
/// Both inputs are nonzero with nonnegative exponents.
fn primitive_remainder(a: &MotivicPolynomial, b: &MotivicPolynomial) -> MotivicPolynomial {
    let db = b.max_exp().unwrap();
    let lb = b.leading_coeff().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.max_exp() {
        if dr < db {
            break;
        }
        let lr = r.leading_coeff().unwrap().clone();
        r = &r.scale(&lb) - &b.shift(dr - db).scale(&lr);
    }
    r
}

/// Long division of ordinary polynomials, `None` unless exact.
fn div_ordinary(a: &MotivicPolynomial, b: &MotivicPolynomial) -> Option<MotivicPolynomial> {
    let db = b.max_exp().unwrap();
    let lb = b.leading_coeff().unwrap();
    let mut r = a.clone();
    let mut q = MotivicPolynomial::zero();
    while let Some(dr) = r.max_exp() {
        if dr < db {
            return None;
        }
        let lr = r.leading_coeff().unwrap();
        let (quot, rem) = lr.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let t = MotivicPolynomial::monomial(dr - db, quot);
        r = &r - &(&t * b);
        q = &q + &t;
    }
    Some(q)
}

fn rational_pow(q: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let base = if exp < 0 { q.recip() } else { q.clone() };
    let mut out = BigRational::one();
    let mut acc = base;
    let mut n = exp.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            out *= &acc;
        }
        n >>= 1;
        if n > 0 {
            acc = &acc * &acc;
        }
    }
    out
}

impl Add for &MotivicPolynomial {
    type Output = MotivicPolynomial;
    fn add(self, rhs: Self) -> MotivicPolynomial {
        let mut out = self.clone();
        for (exp, coeff) in rhs.terms() {
            out.add_term(exp, coeff.clone());
        }
        out
    }
}

impl Sub for &MotivicPolynomial {
    type Output = MotivicPolynomial;
    fn sub(self, rhs: Self) -> MotivicPolynomial {
        let mut out = self.clone();
        for (exp, coeff) in rhs.terms() {
            out.add_term(exp, -coeff);
        }
        out
    }
}

impl Neg for &MotivicPolynomial {
    type Output = MotivicPolynomial;
    fn neg(self) -> MotivicPolynomial {
        MotivicPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &MotivicPolynomial {
    type Output = MotivicPolynomial;
    fn mul(self, rhs: Self) -> MotivicPolynomial {
        let mut out = MotivicPolynomial::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl From<i64> for MotivicPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl fmt::Display for MotivicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // Canonical output: descending powers of L.
        for (exp, coeff) in self.terms().rev() {
            let negative = coeff.is_negative();
            let abs = coeff.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (exp, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "L")?,
                (1, false) => write!(f, "{abs}*L")?,
                (e, true) => write!(f, "L^{e}")?,
                (e, false) => write!(f, "{abs}*L^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MotivicPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

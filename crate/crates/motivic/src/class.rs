//! Motivic classes: reduced fractions of Laurent polynomials in `L`.
//!
//! Polynomial classes cover cellular varieties; proper fractions appear for
//! classifying-stack classes such as `[BGL(m)]`. Every value is kept in a
//! unique canonical form, so structural equality is class equality:
//!
//! * zero is `0/1`;
//! * numerator and denominator share no non-unit factor (integer content
//!   included);
//! * the denominator has lowest exponent `0` and positive leading coefficient;
//!   any leftover power of `L` lives in the numerator.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::MotivicPolynomial;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MotivicClass {
    num: MotivicPolynomial,
    den: MotivicPolynomial,
}

impl MotivicClass {
    /// Builds `num/den` in canonical reduced form.
    pub fn new(num: MotivicPolynomial, den: MotivicPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: MotivicPolynomial) -> Self {
        Self {
            num: p,
            den: MotivicPolynomial::one(),
        }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(MotivicPolynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(MotivicPolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MotivicPolynomial::one())
    }

    /// The class of the affine line.
    pub fn lefschetz() -> Self {
        Self::from_poly(MotivicPolynomial::lefschetz())
    }

    /// `L^k` for any integer `k`.
    pub fn lefschetz_power(k: i64) -> Self {
        Self::from_poly(MotivicPolynomial::monomial(k, 1))
    }

    pub fn numerator(&self) -> &MotivicPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &MotivicPolynomial {
        &self.den
    }

    fn reduced(num: MotivicPolynomial, den: MotivicPolynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self::from_poly(num);
        }
        let sn = num.min_exp().unwrap();
        let sd = den.min_exp().unwrap();
        let n0 = num.shift(-sn);
        let d0 = den.shift(-sd);
        let g = n0.gcd(&d0);
        let mut n = n0.divide_exact(&g).expect("gcd divides numerator");
        let mut d = d0.divide_exact(&g).expect("gcd divides denominator");
        if d.leading_coeff()
            .is_some_and(num_traits::Signed::is_negative)
        {
            n = -&n;
            d = -&d;
        }
        Self {
            num: n.shift(sn - sd),
            den: d,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the class is a Laurent polynomial in `L` (denominator 1);
    /// these are exactly the supported power-structure exponents.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&MotivicPolynomial> {
        self.den.is_one().then_some(&self.num)
    }

    /// Membership in the Grothendieck semiring at the level of cell counts: a
    /// polynomial in `L` (no negative exponents) with nonnegative coefficients.
    pub fn is_effective(&self) -> bool {
        self.den.is_one() && self.num.is_effective()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num + &other.num);
        }
        Self::reduced(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num * &other.num);
        }
        Self::reduced(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::one().div(self)
    }

    /// Integer power; negative exponents invert (error on zero).
    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.inverse()?.pow(-n);
        }
        Ok(self.pow_u(n as usize))
    }

    pub(crate) fn pow_u(&self, n: usize) -> Self {
        let mut base = self.clone();
        let mut out = Self::one();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Exact evaluation of the specialization `L -> q`.
    pub fn eval_at(&self, q: i64) -> Result<BigRational> {
        let qr = BigRational::from_integer(q.into());
        let d = self.den.eval_rational(&qr)?;
        if d.is_zero() {
            return Err(Error::Pole { q });
        }
        Ok(self.num.eval_rational(&qr)? / d)
    }
}

impl From<MotivicPolynomial> for MotivicClass {
    fn from(p: MotivicPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for MotivicClass {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add for &MotivicClass {
    type Output = MotivicClass;
    fn add(self, rhs: Self) -> MotivicClass {
        MotivicClass::add(self, rhs)
    }
}

impl Sub for &MotivicClass {
    type Output = MotivicClass;
    fn sub(self, rhs: Self) -> MotivicClass {
        MotivicClass::sub(self, rhs)
    }
}

impl Mul for &MotivicClass {
    type Output = MotivicClass;
    fn mul(self, rhs: Self) -> MotivicClass {
        MotivicClass::mul(self, rhs)
    }
}

impl Neg for &MotivicClass {
    type Output = MotivicClass;
    fn neg(self) -> MotivicClass {
        MotivicClass::neg(self)
    }
}

impl fmt::Display for MotivicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.num_terms() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl fmt::Debug for MotivicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

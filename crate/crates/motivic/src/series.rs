//! Truncated formal power series in `T` with motivic-class coefficients.
//!
//! Every value carries its truncation order explicitly; binary operations on
//! series of different orders truncate to the smaller order. All identities in
//! this crate are statements "mod T^(order+1)".

use std::fmt;

use crate::class::MotivicClass;
use crate::error::{Error, Result};

/// A series `c_0 + c_1 T + ... + c_N T^N`, storing exactly `order + 1`
/// coefficients (dense: zeta coefficients are generically nonzero).
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<MotivicClass>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![MotivicClass::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = MotivicClass::one();
        s
    }

    /// `1 + T + T^2 + ... + T^order`.
    pub fn geometric(order: usize) -> Self {
        Self {
            coeffs: vec![MotivicClass::one(); order + 1],
        }
    }

    /// Takes ownership of explicit coefficients `c_0..c_N`; the list length
    /// fixes the order.
    pub fn from_coeffs(coeffs: Vec<MotivicClass>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least c_0");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Result<&MotivicClass> {
        self.coeffs.get(k).ok_or(Error::OrderExceeded {
            index: k,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[MotivicClass] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: MotivicClass) {
        assert!(k <= self.order(), "coefficient index within order");
        self.coeffs[k] = c;
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(MotivicClass::is_zero)
    }

    /// Restriction to a smaller order.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "truncate only shrinks");
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].add(&other.coeffs[k]))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k].sub(&other.coeffs[k]))
                .collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![MotivicClass::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self { coeffs }
    }

    pub fn scale(&self, c: &MotivicClass) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    /// Multiplicative inverse up to the order; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self> {
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = self.coeffs[0].inverse()?;
        let order = self.order();
        let mut out = vec![MotivicClass::zero(); order + 1];
        out[0] = inv0.clone();
        for n in 1..=order {
            let mut acc = MotivicClass::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() || out[n - j].is_zero() {
                    continue;
                }
                acc = acc.add(&self.coeffs[j].mul(&out[n - j]));
            }
            out[n] = acc.neg().mul(&inv0);
        }
        Ok(Self { coeffs: out })
    }

    /// The monomial substitution `T -> c * T^step`, truncated at the original
    /// order.
    pub fn substitute(&self, c: &MotivicClass, step: u32) -> Result<Self> {
        if step == 0 {
            return Err(Error::ZeroStep);
        }
        let order = self.order();
        let step = step as usize;
        let mut out = Self::zero(order);
        let mut c_pow = MotivicClass::one();
        for k in 0..=order / step {
            if !self.coeffs[k].is_zero() {
                out.coeffs[k * step] = self.coeffs[k].mul(&c_pow);
            }
            c_pow = c_pow.mul(c);
        }
        Ok(out)
    }

    /// Repeated multiplication at the series' own order.
    pub fn pow(&self, n: u64) -> Self {
        let mut base = self.clone();
        let mut out = Self::one(self.order());
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
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (negative, body) = term_string(c, k);
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
            write!(f, "{body}")?;
        }
        if first {
            write!(f, "O(T^{})", self.order() + 1)
        } else {
            write!(f, " + O(T^{})", self.order() + 1)
        }
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders one series term; the sign is split off only for single-monomial
/// coefficients so that `- L*T^2` reads naturally, while compound coefficients
/// are parenthesized: `(L^2 - L)*T^2`.
fn term_string(c: &MotivicClass, k: usize) -> (bool, String) {
    let t_pow = match k {
        0 => String::new(),
        1 => "T".to_string(),
        _ => format!("T^{k}"),
    };
    if k == 0 {
        return (false, c.to_string());
    }
    if let Some(p) = c.as_polynomial() {
        if p.num_terms() == 1 {
            let (exp, coeff) = p.terms().next().map(|(e, c)| (e, c.clone())).unwrap();
            let negative = coeff < 0.into();
            let mono = crate::poly::MotivicPolynomial::monomial(exp, coeff.magnitude().clone());
            return if mono.is_one() {
                (negative, t_pow)
            } else {
                (negative, format!("{mono}*{t_pow}"))
            };
        }
    }
    (false, format!("({c})*{t_pow}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::MotivicClass;
    use crate::poly::MotivicPolynomial;

    fn l() -> MotivicClass {
        MotivicClass::lefschetz()
    }

    fn binomial(c: MotivicClass, order: usize) -> TruncatedSeries {
        // 1 + c*T at the given order
        let mut s = TruncatedSeries::one(order);
        s.set_coeff(1, c);
        s
    }

    #[test]
    fn product_truncates_to_min_order() {
        let a = binomial(MotivicClass::one(), 2);
        let b = {
            let mut s = TruncatedSeries::one(5);
            s.set_coeff(1, MotivicClass::from_int(-1));
            s
        };
        let p = a.mul(&b);
        assert_eq!(p.order(), 2);
        assert!(p.coeff(1).unwrap().is_zero());
        assert_eq!(*p.coeff(2).unwrap(), MotivicClass::from_int(-1));
    }

    #[test]
    fn addition_and_identity() {
        let a = binomial(l(), 3);
        let b = binomial(l().neg(), 3);
        assert_eq!(
            a.add(&b),
            TruncatedSeries::from_coeffs(vec![
                MotivicClass::from_int(2),
                MotivicClass::zero(),
                MotivicClass::zero(),
                MotivicClass::zero(),
            ])
        );
        assert_eq!(a.mul(&TruncatedSeries::one(3)), a);
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_t = binomial(MotivicClass::from_int(-1), 6);
        assert_eq!(one_minus_t.invert().unwrap(), TruncatedSeries::geometric(6));
        // invert(1 - L*T) = sum L^k T^k
        let z = binomial(l().neg(), 5).invert().unwrap();
        for k in 0..=5 {
            assert_eq!(
                *z.coeff(k).unwrap(),
                MotivicClass::lefschetz_power(k as i64)
            );
        }
        assert_eq!(
            TruncatedSeries::zero(3).invert(),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn invert_even_binomial() {
        // invert(1 + L*T^2) at order 4 = 1 - L*T^2 + L^2*T^4
        let mut s = TruncatedSeries::one(4);
        s.set_coeff(2, l());
        let inv = s.invert().unwrap();
        assert_eq!(*inv.coeff(0).unwrap(), MotivicClass::one());
        assert!(inv.coeff(1).unwrap().is_zero());
        assert_eq!(*inv.coeff(2).unwrap(), l().neg());
        assert!(inv.coeff(3).unwrap().is_zero());
        assert_eq!(*inv.coeff(4).unwrap(), MotivicClass::lefschetz_power(2));
        assert!(s.mul(&inv).is_one());
    }

    #[test]
    fn substitution() {
        // 1 + T + T^2 with c = L: 1 + L*T + L^2*T^2
        let g = TruncatedSeries::geometric(2);
        let s = g.substitute(&l(), 1).unwrap();
        assert_eq!(*s.coeff(2).unwrap(), MotivicClass::lefschetz_power(2));
        // 1 + T with step 2: 1 + T^2
        let b = binomial(MotivicClass::one(), 4);
        let s2 = b.substitute(&MotivicClass::one(), 2).unwrap();
        assert!(s2.coeff(1).unwrap().is_zero());
        assert_eq!(*s2.coeff(2).unwrap(), MotivicClass::one());
        assert_eq!(b.substitute(&l(), 0), Err(Error::ZeroStep));
    }

    #[test]
    fn coeff_out_of_range() {
        let s = TruncatedSeries::one(2);
        assert_eq!(*s.coeff(0).unwrap(), MotivicClass::one());
        assert_eq!(s.coeff(3), Err(Error::OrderExceeded { index: 3, order: 2 }));
    }

    #[test]
    fn display_format() {
        let mut s = TruncatedSeries::one(3);
        s.set_coeff(1, l());
        s.set_coeff(2, MotivicClass::lefschetz_power(2));
        s.set_coeff(3, MotivicClass::lefschetz_power(3));
        assert_eq!(s.to_string(), "1 + L*T + L^2*T^2 + L^3*T^3 + O(T^4)");

        let torus = MotivicClass::from_poly(MotivicPolynomial::from_terms(vec![
            (2, 2.into()),
            (1, (-1).into()),
        ]));
        let mut c = TruncatedSeries::one(2);
        c.set_coeff(2, torus);
        assert_eq!(c.to_string(), "1 + (2*L^2 - L)*T^2 + O(T^3)");

        let mut m = TruncatedSeries::one(2);
        m.set_coeff(1, MotivicClass::from_int(-2));
        assert_eq!(m.to_string(), "1 - 2*T + O(T^3)");

        assert_eq!(TruncatedSeries::zero(2).to_string(), "O(T^3)");
    }

    #[test]
    fn double_inversion_restores_series() {
        let mut s = TruncatedSeries::one(6);
        s.set_coeff(1, l());
        s.set_coeff(3, MotivicClass::from_int(4));
        assert_eq!(s.invert().unwrap().invert().unwrap(), s);
    }
}

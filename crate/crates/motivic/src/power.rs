//! The power structure on series with motivic-class coefficients.
//!
//! Every series with constant term 1 factors uniquely as a product of Euler
//! factors `(1 - T^i)^(-b_i)`; exponentiation by a class `M` rescales the
//! exponents: `A(T)^M = prod_i (1 - T^i)^(-b_i * M)`. A single factor with a
//! Laurent-polynomial exponent `b = sum_k n_k L^k` expands as
//! `prod_k (1 - L^k T^i)^(-n_k)`, integer powers of geometric factors. The
//! canonical form is forced by the structure's axioms, and `power_finite`
//! provides an independent combinatorial route for exponents that are finite
//! sets, where every coefficient is an explicit orbit count.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::class::MotivicClass;
use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

/// Exponents `b_1..b_N` of the canonical factorization
/// `prod_{i=1..N} (1 - T^i)^(-b_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentVector {
    exponents: Vec<MotivicClass>,
}

impl ExponentVector {
    pub fn order(&self) -> usize {
        self.exponents.len()
    }

    /// `b_i`, 1-based.
    pub fn exponent(&self, i: usize) -> &MotivicClass {
        assert!(
            i >= 1 && i <= self.exponents.len(),
            "factor index is 1-based"
        );
        &self.exponents[i - 1]
    }

    pub fn exponents(&self) -> &[MotivicClass] {
        &self.exponents
    }

    /// Multiplies the factors back out; the round trip through
    /// `euler_factorize` reproduces the original series exactly.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries> {
        let mut out = TruncatedSeries::one(order);
        for (idx, b) in self.exponents.iter().enumerate() {
            if b.is_zero() {
                continue;
            }
            out = out.mul(&expand_factor(idx as u32 + 1, b, order)?);
        }
        Ok(out)
    }
}

/// Reads off the canonical Euler-factor exponents of a series with constant
/// term 1: `b_i` is the `T^i`-coefficient of the running remainder, which is
/// then multiplied by `(1 - T^i)^(b_i)` to clear it.
pub fn euler_factorize(a: &TruncatedSeries) -> Result<ExponentVector> {
    let c0 = a.coeff(0).expect("order >= 0");
    if !c0.is_one() {
        return Err(Error::ConstantTermNotOne {
            found: c0.to_string(),
        });
    }
    let order = a.order();
    let mut remainder = a.clone();
    let mut exponents = Vec::with_capacity(order);
    for i in 1..=order {
        let b = remainder.coeff(i).expect("within order").clone();
        if !b.is_zero() && i < order {
            // Clearing the T^i coefficient needs the factor expanded, which is
            // only defined for Laurent-polynomial exponents. The last exponent
            // is exempt: nothing above it remains to be read.
            remainder = remainder.mul(&expand_factor(i as u32, &b.neg(), order)?);
        }
        exponents.push(b);
    }
    Ok(ExponentVector { exponents })
}

/// Expands one Euler factor `(1 - T^index)^(-exponent)` to the given order.
///
/// The exponent must be a Laurent polynomial `sum_k n_k L^k` with integer
/// coefficients; the factor is then `prod_k (1 - L^k T^index)^(-n_k)`.
pub fn expand_factor(index: u32, exponent: &MotivicClass, order: usize) -> Result<TruncatedSeries> {
    assert!(index >= 1, "factor index starts at 1");
    let poly = exponent
        .as_polynomial()
        .ok_or_else(|| Error::UnsupportedExponent {
            factor: index,
            exponent: exponent.to_string(),
        })?;
    let mut out = TruncatedSeries::one(order);
    for (l_exp, count) in poly.terms() {
        out = out.mul(&geometric_factor_power(index as usize, l_exp, count, order));
    }
    Ok(out)
}

/// `(1 - L^k T^i)^(-n)` for integer `n` of either sign: the binomial series
/// `sum_j binom(n + j - 1, j) L^(k j) T^(i j)`, which terminates on its own
/// when `n < 0`.
fn geometric_factor_power(i: usize, k: i64, n: &BigInt, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    let mut coeff = BigInt::one();
    let mut j = 0usize;
    loop {
        j += 1;
        if i * j > order {
            break;
        }
        // coeff *= (n + j - 1) / j, exact at every step
        coeff *= n + BigInt::from(j as i64 - 1);
        if coeff.is_zero() {
            break;
        }
        coeff /= BigInt::from(j as i64);
        out.set_coeff(
            i * j,
            MotivicClass::from_poly(crate::poly::MotivicPolynomial::monomial(
                k * j as i64,
                coeff.clone(),
            )),
        );
    }
    out
}

/// `A(T)^M` through the canonical factorization.
pub fn power(a: &TruncatedSeries, exponent: &MotivicClass) -> Result<TruncatedSeries> {
    let ev = euler_factorize(a)?;
    power_factored(&ev, exponent, a.order())
}

/// `A(T)^M` with the factorization of `A` precomputed. Each factor exponent
/// `b_i * M` must be a Laurent polynomial in `L`; the error names the first
/// factor where that fails.
pub fn power_factored(
    ev: &ExponentVector,
    exponent: &MotivicClass,
    order: usize,
) -> Result<TruncatedSeries> {
    assert!(
        order <= ev.order(),
        "the factorization covers factors only up to T^{}",
        ev.order()
    );
    let mut out = TruncatedSeries::one(order);
    for (idx, b) in ev.exponents().iter().enumerate() {
        if idx >= order {
            break;
        }
        if b.is_zero() {
            continue;
        }
        let scaled = b.mul(exponent);
        if scaled.is_zero() {
            continue;
        }
        out = out.mul(&expand_factor(idx as u32 + 1, &scaled, order)?);
    }
    Ok(out)
}

/// A multiplicity vector `{k_i}`: `k_i` points of color `i`, `i >= 1`.
/// Trailing zeros are trimmed, so the empty vector is the unique weight-0 one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionVector {
    multiplicities: Vec<u32>,
}

impl PartitionVector {
    pub fn new(multiplicities: Vec<u32>) -> Self {
        let mut m = multiplicities;
        while m.last() == Some(&0) {
            m.pop();
        }
        Self { multiplicities: m }
    }

    /// `k_i` for `i >= 1`.
    pub fn multiplicity(&self, i: usize) -> u32 {
        assert!(i >= 1);
        self.multiplicities.get(i - 1).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// `sum i * k_i`.
    pub fn weight(&self) -> u32 {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(idx, &k)| (idx as u32 + 1) * k)
            .sum()
    }

    /// `sum k_i`.
    pub fn size(&self) -> u32 {
        self.multiplicities.iter().sum()
    }
}

/// All multiplicity vectors with `sum i*k_i = weight`, indices bounded by
/// `max_index` and `sum k_i <= max_size` (both `None` = unrestricted), in
/// lexicographically decreasing order of `(k_1, k_2, ...)`.
pub fn enumerate_partition_vectors(
    weight: u32,
    max_index: Option<u32>,
    max_size: Option<u32>,
) -> Vec<PartitionVector> {
    let r = max_index.unwrap_or(weight).min(weight);
    let cap = max_size.unwrap_or(weight);
    let mut out = Vec::new();
    let mut current = vec![0u32; r as usize];
    descend(1, weight, cap, r, &mut current, &mut out);
    out
}

fn descend(
    index: u32,
    remaining_weight: u32,
    remaining_size: u32,
    max_index: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<PartitionVector>,
) {
    if remaining_weight == 0 {
        out.push(PartitionVector::new(current.clone()));
        return;
    }
    if index > max_index {
        return;
    }
    let most = (remaining_weight / index).min(remaining_size);
    for k in (0..=most).rev() {
        current[index as usize - 1] = k;
        descend(
            index + 1,
            remaining_weight - k * index,
            remaining_size - k,
            max_index,
            current,
            out,
        );
    }
    current[index as usize - 1] = 0;
}

/// The defining sum specialized to a finite exponent set of `m` points: with
/// `A(T) = 1 + a_1 T + ... + a_r T^r`, the `T^k` coefficient of `A(T)^m` is
///
/// `sum over {k_i} with sum i*k_i = k, sum k_i <= m of
///      m! / ((m - sum k_i)! * prod k_i!) * prod a_i^(k_i)`,
///
/// every quotient an explicit orbit count. Agrees with `power` coefficient-wise.
pub fn power_finite(coeffs: &[i64], m: u32, order: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    for k in 1..=order {
        let mut acc = BigInt::zero();
        for pv in enumerate_partition_vectors(k as u32, Some(coeffs.len() as u32), Some(m)) {
            let mut term = falling_factorial(m, pv.size());
            for (idx, &mult) in pv.multiplicities().iter().enumerate() {
                if mult == 0 {
                    continue;
                }
                term /= factorial(mult);
                term *= BigInt::from(coeffs[idx]).pow(mult);
            }
            acc += term;
        }
        out.set_coeff(k, MotivicClass::from_int(acc));
    }
    out
}

fn falling_factorial(m: u32, s: u32) -> BigInt {
    let mut out = BigInt::one();
    for t in 0..s {
        out *= BigInt::from(m - t);
    }
    out
}

fn factorial(n: u32) -> BigInt {
    let mut out = BigInt::one();
    for t in 2..=n {
        out *= BigInt::from(t);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class::MotivicClass;
    use crate::poly::MotivicPolynomial;

    fn l() -> MotivicClass {
        MotivicClass::lefschetz()
    }

    fn one_plus_t(order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::one(order);
        s.set_coeff(1, MotivicClass::one());
        s
    }

    #[test]
    fn factorize_geometric_series() {
        let ev = euler_factorize(&TruncatedSeries::geometric(6)).unwrap();
        assert!(ev.exponent(1).is_one());
        for i in 2..=6 {
            assert!(ev.exponent(i).is_zero(), "b_{i} should vanish");
        }
    }

    #[test]
    fn factorize_one_plus_t() {
        // 1 + T = (1 - T^2)/(1 - T): b_1 = 1, b_2 = -1
        let ev = euler_factorize(&one_plus_t(5)).unwrap();
        assert!(ev.exponent(1).is_one());
        assert_eq!(*ev.exponent(2), MotivicClass::from_int(-1));
        for i in 3..=5 {
            assert!(ev.exponent(i).is_zero());
        }
        assert_eq!(ev.expand(5).unwrap(), one_plus_t(5));
    }

    #[test]
    fn factorize_product_of_geometric_factors() {
        // 1/((1-T)(1-LT)): b_1 = 1 + L, rest zero
        let a = expand_factor(1, &MotivicClass::one(), 6)
            .unwrap()
            .mul(&expand_factor(1, &l(), 6).unwrap());
        let ev = euler_factorize(&a).unwrap();
        assert_eq!(
            *ev.exponent(1),
            MotivicClass::from_poly(MotivicPolynomial::from_terms(vec![
                (0, 1.into()),
                (1, 1.into()),
            ]))
        );
        for i in 2..=6 {
            assert!(ev.exponent(i).is_zero());
        }
    }

    #[test]
    fn factorize_requires_unit_constant_term() {
        let s = TruncatedSeries::zero(3);
        assert!(matches!(
            euler_factorize(&s),
            Err(Error::ConstantTermNotOne { .. })
        ));
    }

    #[test]
    fn expand_factor_base_cases() {
        // (1 - T)^(-L) = 1 + L T + L^2 T^2 + ...
        let z = expand_factor(1, &l(), 5).unwrap();
        for k in 0..=5 {
            assert_eq!(
                *z.coeff(k).unwrap(),
                MotivicClass::lefschetz_power(k as i64)
            );
        }
        // (1 - T)^(-1) = geometric series
        assert_eq!(
            expand_factor(1, &MotivicClass::one(), 5).unwrap(),
            TruncatedSeries::geometric(5)
        );
        // (1 - T^2)^(L) = 1 - L T^2 exactly
        let f = expand_factor(2, &l().neg(), 6).unwrap();
        assert_eq!(*f.coeff(0).unwrap(), MotivicClass::one());
        assert_eq!(*f.coeff(2).unwrap(), l().neg());
        for k in [1, 3, 4, 5, 6] {
            assert!(f.coeff(k).unwrap().is_zero());
        }
    }

    #[test]
    fn expand_factor_rejects_fractions() {
        let bad = MotivicClass::one()
            .div(&l().sub(&MotivicClass::one()))
            .unwrap();
        assert!(matches!(
            expand_factor(1, &bad, 4),
            Err(Error::UnsupportedExponent { factor: 1, .. })
        ));
    }

    #[test]
    fn integer_power_matches_repeated_multiplication() {
        let a = one_plus_t(4);
        let squared = power(&a, &MotivicClass::from_int(2)).unwrap();
        assert_eq!(squared, a.mul(&a));
        let coeffs: Vec<String> = squared.coeffs().iter().map(ToString::to_string).collect();
        assert_eq!(coeffs, vec!["1", "2", "1", "0", "0"]);
    }

    #[test]
    fn power_of_binomial_by_lefschetz() {
        // (1+T)^L = 1 + L T + (L^2 - L) T^2 + (L^3 - L^2) T^3 + ...
        let p = power(&one_plus_t(5), &l()).unwrap();
        assert_eq!(*p.coeff(1).unwrap(), l());
        for k in 2..=5 {
            let expected = MotivicClass::from_poly(MotivicPolynomial::from_terms(vec![
                (k as i64, 1.into()),
                (k as i64 - 1, (-1).into()),
            ]));
            assert_eq!(*p.coeff(k).unwrap(), expected, "coefficient of T^{k}");
        }
    }

    #[test]
    fn power_rejects_non_polynomial_exponent() {
        let bad = MotivicClass::one()
            .div(&l().sub(&MotivicClass::one()))
            .unwrap();
        let err = power(&TruncatedSeries::geometric(4), &bad).unwrap_err();
        assert!(matches!(err, Error::UnsupportedExponent { factor: 1, .. }));
    }

    #[test]
    fn non_polynomial_factor_exponents_can_cancel() {
        // b_1 = 1/(L-1) is fine when multiplied by M = L - 1
        let torus = l().sub(&MotivicClass::one());
        let b1 = MotivicClass::one().div(&torus).unwrap();
        let mut a = TruncatedSeries::one(3);
        a.set_coeff(1, b1.clone());
        // factorization stalls at interior fractional exponents
        assert!(matches!(
            euler_factorize(&a),
            Err(Error::UnsupportedExponent { factor: 1, .. })
        ));
        // but a trailing fractional exponent is representable
        let mut tail = TruncatedSeries::one(1);
        tail.set_coeff(1, b1.clone());
        let ev = euler_factorize(&tail).unwrap();
        assert_eq!(*ev.exponent(1), b1);
        assert_eq!(power_factored(&ev, &torus, 1).unwrap(), one_plus_t(1));
    }

    #[test]
    fn enumerate_vectors_examples() {
        // weight 2, unrestricted: {k1=2}, {k2=1}
        let vs = enumerate_partition_vectors(2, None, None);
        assert_eq!(
            vs,
            vec![
                PartitionVector::new(vec![2]),
                PartitionVector::new(vec![0, 1])
            ]
        );
        // weight 0: only the empty vector
        assert_eq!(
            enumerate_partition_vectors(0, None, None),
            vec![PartitionVector::new(vec![])]
        );
        // weight 4, size <= 2: the partitions 3+1, 2+2, 4
        let vs = enumerate_partition_vectors(4, None, Some(2));
        assert_eq!(
            vs,
            vec![
                PartitionVector::new(vec![1, 0, 1]),
                PartitionVector::new(vec![0, 2]),
                PartitionVector::new(vec![0, 0, 0, 1]),
            ]
        );
        for v in &vs {
            assert_eq!(v.weight(), 4);
            assert!(v.size() <= 2);
        }
    }

    #[test]
    fn finite_power_small_cases() {
        // (1 + aT)^2 = 1 + 2aT + a^2 T^2
        let s = power_finite(&[3], 2, 3);
        assert_eq!(*s.coeff(1).unwrap(), MotivicClass::from_int(6));
        assert_eq!(*s.coeff(2).unwrap(), MotivicClass::from_int(9));
        assert!(s.coeff(3).unwrap().is_zero());
        // trinomial cube: T^2 coefficient is 3 a1^2 + 3 a2
        let s = power_finite(&[2, 5], 3, 2);
        assert_eq!(*s.coeff(2).unwrap(), MotivicClass::from_int(3 * 4 + 3 * 5));
        // m = 0 gives 1
        assert!(power_finite(&[7, -2, 4], 0, 5).is_one());
    }

    #[test]
    fn finite_power_matches_canonical_power() {
        let coeffs = [2i64, -1, 3];
        let order = 6;
        let mut a = TruncatedSeries::one(order);
        for (i, &c) in coeffs.iter().enumerate() {
            a.set_coeff(i + 1, MotivicClass::from_int(c));
        }
        for m in 0..=4u32 {
            let lhs = power_finite(&coeffs, m, order);
            let rhs = power(&a, &MotivicClass::from_int(i64::from(m))).unwrap();
            assert_eq!(lhs, rhs, "m = {m}");
        }
    }
}

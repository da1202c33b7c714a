//! Independent finite-field verification channel.
//!
//! A polynomial class with nonnegative coefficients specializes under
//! `L -> q` to point counts over finite fields. Three independent routes then
//! count degree-`m` effective zero-cycles (Frobenius-stable point multisets):
//!
//! 1. the Weil zeta coefficient, `t^m` in `exp(sum_d N_d t^d / d)` over exact
//!    rationals;
//! 2. the closed-point census: Moebius inversion of the counts followed by the
//!    multiset generating function `prod_d (1 - t^d)^(-C_d)`;
//! 3. literal brute-force enumeration of Frobenius-stable multisets of points
//!    over explicit small-field tables (deliberately capped: it is a ground
//!    truth anchor, not a performance path).
//!
//! All three must agree with the motivic prediction `eval_at(S^m X class, q)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::class::MotivicClass;
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::varieties::{affine_class, gaussian_binomial, projective_class};
use crate::zeta::symmetric_power_class;

use serde::{Deserialize, Serialize};

/// Point counts `N_d = |X(F_(q^d))|` for `d = 1..D` over a base field of
/// prime-power size `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointCountTable {
    q: u32,
    counts: Vec<u64>,
}

impl PointCountTable {
    pub fn new(q: u32, counts: Vec<u64>) -> Result<Self> {
        if !is_prime_power(q) {
            return Err(Error::NotPrimePower(q));
        }
        Ok(Self { q, counts })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `N_d`, 1-based.
    pub fn count(&self, d: usize) -> u64 {
        self.counts[d - 1]
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn degree(&self) -> usize {
        self.counts.len()
    }
}

fn is_prime_power(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut n = q;
    let mut p = 0u32;
    for cand in 2..=n {
        if cand * cand > n {
            p = n; // leftover prime
            break;
        }
        if n.is_multiple_of(cand) {
            p = cand;
            break;
        }
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Specializes an effective class to a point-count table:
/// `N_d = eval_at(c, q^d)`.
pub fn counts_from_class(c: &MotivicClass, q: u32, degree: usize) -> Result<PointCountTable> {
    if !c.is_effective() {
        return Err(Error::NotEffective {
            class: c.to_string(),
        });
    }
    let mut counts = Vec::with_capacity(degree);
    for d in 1..=degree {
        let qd = i64::from(q)
            .checked_pow(d as u32)
            .ok_or_else(|| Error::OutOfRange(format!("q^{d} overflows for q = {q}")))?;
        let value = c.eval_at(qd)?;
        debug_assert!(value.is_integer() && !value.is_negative());
        let n = value
            .to_integer()
            .to_u64()
            .ok_or_else(|| Error::OutOfRange(format!("point count at q^{d} exceeds u64")))?;
        counts.push(n);
    }
    PointCountTable::new(q, counts)
}

/// Moebius inversion of the counts: `C_d = (1/d) sum_{e | d} mu(d/e) N_e`,
/// the number of closed points of degree `d`. Integrality and nonnegativity
/// are hard requirements; violating tables are rejected.
pub fn closed_points(table: &PointCountTable) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(table.degree());
    for d in 1..=table.degree() {
        let mut acc = BigInt::zero();
        for e in 1..=d {
            if d % e == 0 {
                acc += BigInt::from(moebius((d / e) as u32)) * BigInt::from(table.count(e));
            }
        }
        let (quotient, remainder) = num_integer::Integer::div_rem(&acc, &BigInt::from(d));
        if !remainder.is_zero() || quotient.is_negative() {
            return Err(Error::InconsistentTable {
                reason: format!("closed-point count at degree {d} is {acc}/{d}"),
            });
        }
        out.push(quotient.to_u64().ok_or_else(|| Error::InconsistentTable {
            reason: format!("closed-point count at degree {d} exceeds u64"),
        })?);
    }
    Ok(out)
}

fn moebius(n: u32) -> i64 {
    let mut n = n;
    let mut factors = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0; // square factor
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Effective zero-cycles of degree `m` from a closed-point census: the `t^m`
/// coefficient of `prod_d (1 - t^d)^(-C_d)`, multiplied out over integers.
pub fn cycles_from_closed_points(closed: &[u64], m: usize) -> BigInt {
    let mut coeffs = vec![BigInt::zero(); m + 1];
    coeffs[0] = BigInt::one();
    for d in 1..=m.min(closed.len()) {
        let count = closed[d - 1];
        if count == 0 {
            continue;
        }
        // factor (1 - t^d)^(-C_d) = sum_j binom(C_d + j - 1, j) t^(d j)
        let mut factor = vec![BigInt::zero(); m + 1];
        factor[0] = BigInt::one();
        let mut binom = BigInt::one();
        let mut j = 0usize;
        while (j + 1) * d <= m {
            j += 1;
            binom = binom * BigInt::from(count + j as u64 - 1) / BigInt::from(j as u64);
            factor[j * d] = binom.clone();
        }
        coeffs = convolve_truncated(&coeffs, &factor, m);
    }
    coeffs[m].clone()
}

fn convolve_truncated(a: &[BigInt], b: &[BigInt], order: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] += ai * bj;
        }
    }
    out
}

/// The `t^m` coefficient of the Weil zeta series `exp(sum_d N_d t^d / d)`,
/// computed over exact rationals; a non-integer coefficient means the table is
/// not the point-count table of a variety and is a hard error.
pub fn weil_coefficient(table: &PointCountTable, m: usize) -> Result<BigInt> {
    if table.degree() < m {
        return Err(Error::OutOfRange(format!(
            "table covers degrees <= {}, need {m}",
            table.degree()
        )));
    }
    // z_n = (1/n) sum_{j=1..n} N_j z_(n-j), the logarithmic-derivative recurrence
    let mut z = vec![BigRational::zero(); m + 1];
    z[0] = BigRational::one();
    for n in 1..=m {
        let mut acc = BigRational::zero();
        for j in 1..=n {
            acc += BigRational::from_integer(table.count(j).into()) * &z[n - j];
        }
        z[n] = acc / BigRational::from_integer(n.into());
    }
    if !z[m].is_integer() {
        return Err(Error::InconsistentTable {
            reason: format!("Weil coefficient at degree {m} is non-integral: {}", z[m]),
        });
    }
    Ok(z[m].to_integer())
}

/// The point-counting spaces understood by the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Space {
    Affine(u32),
    Projective(u32),
    Grassmannian(u32, u32),
}

impl Space {
    pub fn class(&self) -> MotivicClass {
        match *self {
            Space::Affine(n) => affine_class(n),
            Space::Projective(n) => projective_class(n),
            Space::Grassmannian(m, n) => {
                gaussian_binomial(n, m).expect("validated at construction")
            }
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let invalid = || {
            Error::OutOfRange(format!(
                "space specifier {text:?} (expected A^n, P^N or Gr(m,N))"
            ))
        };
        if let Some(rest) = text.strip_prefix("A^") {
            return rest.parse().map(Space::Affine).map_err(|_| invalid());
        }
        if let Some(rest) = text.strip_prefix("P^") {
            return rest.parse().map(Space::Projective).map_err(|_| invalid());
        }
        if let Some(rest) = text.strip_prefix("Gr(").and_then(|r| r.strip_suffix(')')) {
            let (m, n) = rest.split_once(',').ok_or_else(invalid)?;
            let m: u32 = m.trim().parse().map_err(|_| invalid())?;
            let n: u32 = n.trim().parse().map_err(|_| invalid())?;
            if m > n {
                return Err(Error::BinomialRange { n, m });
            }
            return Ok(Space::Grassmannian(m, n));
        }
        Err(invalid())
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Space::Affine(n) => write!(f, "A^{n}"),
            Space::Projective(n) => write!(f, "P^{n}"),
            Space::Grassmannian(m, n) => write!(f, "Gr({m},{n})"),
        }
    }
}

/// Ground-truth enumeration of Frobenius-stable `m`-multisets of geometric
/// points, organized by orbit decomposition over explicit field tables.
/// Supported range: `A^1, A^2, P^1, P^2`, `q` in `{2, 3}`, `m <= 3`.
pub fn brute_force_cycles(space: Space, q: u32, m: u32) -> Result<u64> {
    if q != 2 && q != 3 {
        return Err(Error::OutOfRange(format!(
            "brute force supports q in {{2, 3}}, got {q}"
        )));
    }
    if m == 0 || m > 3 {
        return Err(Error::OutOfRange(format!(
            "brute force supports 1 <= m <= 3, got {m}"
        )));
    }
    match space {
        Space::Affine(n) if n == 1 || n == 2 => {}
        Space::Projective(n) if n == 1 || n == 2 => {}
        _ => {
            return Err(Error::OutOfRange(format!(
                "brute force supports A^1, A^2, P^1, P^2, got {space}"
            )));
        }
    }

    let rational = gf::SpacePoints::enumerate(space, &gf::SmallField::with_fixed_modulus(q, 1));
    match m {
        1 => Ok(rational.len() as u64),
        2 => {
            let quadratic =
                gf::SpacePoints::enumerate(space, &gf::SmallField::with_fixed_modulus(q, 2));
            let fixed = quadratic.fixed_point_count();
            assert_eq!(fixed, rational.len() as u64, "F_q points embed in F_(q^2)");
            // multisets {a, b} of rational points, literally
            let mut pairs = 0u64;
            for i in 0..fixed {
                for _ in i..fixed {
                    pairs += 1;
                }
            }
            Ok(pairs + quadratic.orbit_count(2))
        }
        3 => {
            let quadratic =
                gf::SpacePoints::enumerate(space, &gf::SmallField::with_fixed_modulus(q, 2));
            let cubic =
                gf::SpacePoints::enumerate(space, &gf::SmallField::with_fixed_modulus(q, 3));
            let fixed = cubic.fixed_point_count();
            assert_eq!(fixed, rational.len() as u64);
            // multisets {a, b, c} of rational points, literally
            let mut triples = 0u64;
            for i in 0..fixed {
                for j in i..fixed {
                    for _ in j..fixed {
                        triples += 1;
                    }
                }
            }
            // a rational point next to one conjugate pair, literally
            let mut mixed = 0u64;
            for _ in 0..fixed {
                for _ in 0..quadratic.orbit_count(2) {
                    mixed += 1;
                }
            }
            Ok(triples + mixed + cubic.orbit_count(3))
        }
        _ => unreachable!(),
    }
}

/// Compares, for every degree `k <= m`, the motivic prediction
/// `eval_at([S^k X], q)` against the Weil coefficient and the closed-point
/// census built from the same table.
pub fn crosscheck_kapranov_weil(c: &MotivicClass, q: u32, m: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("kapranov-weil")
        .with_param("class", c)
        .with_param("q", q)
        .with_param("m", m);
    let table = counts_from_class(c, q, m)?;
    let census = closed_points(&table)?;
    for k in 1..=m {
        let motivic = symmetric_power_class(c, k)?.eval_at(i64::from(q))?;
        let weil = weil_coefficient(&table, k)?;
        let cycles = cycles_from_closed_points(&census, k);
        report.check_eq(
            format!("eval([S^{k} X], {q}) = Weil t^{k} coefficient"),
            &motivic,
            &BigRational::from_integer(weil.clone()),
        );
        report.check_eq(
            format!("Weil t^{k} coefficient = closed-point census"),
            &weil,
            &cycles,
        );
    }
    Ok(report)
}

/// Small finite fields as explicit quotient-ring tables; fixed irreducible
/// moduli keep every enumeration reproducible.
pub(crate) mod gf {
    use super::Space;

    /// `F_(p^d)` with elements `0..p^d` encoding coefficient vectors base `p`.
    pub struct SmallField {
        size: u32,
        mul: Vec<u16>,
        frob: Vec<u16>,
    }

    impl SmallField {
        /// The fixed moduli: F_4 = F_2[x]/(x^2+x+1), F_8 = F_2[x]/(x^3+x+1),
        /// F_9 = F_3[x]/(x^2+1), F_27 = F_3[x]/(x^3+2x+1).
        pub fn with_fixed_modulus(p: u32, d: u32) -> Self {
            let modulus: &[u32] = match (p, d) {
                (_, 1) => &[0, 1],
                (2, 2) => &[1, 1, 1],
                (2, 3) => &[1, 1, 0, 1],
                (3, 2) => &[1, 0, 1],
                (3, 3) => &[1, 2, 0, 1],
                _ => panic!("no fixed modulus for p = {p}, d = {d}"),
            };
            Self::new(p, d, modulus)
        }

        pub fn new(p: u32, d: u32, modulus: &[u32]) -> Self {
            assert_eq!(modulus.len() as u32, d + 1);
            assert_eq!(modulus[d as usize], 1, "modulus is monic");
            let size = p.pow(d);
            let mut mul = vec![0u16; (size * size) as usize];
            for a in 0..size {
                for b in a..size {
                    let prod = poly_mul_mod(a, b, p, d, modulus);
                    mul[(a * size + b) as usize] = prod as u16;
                    mul[(b * size + a) as usize] = prod as u16;
                }
            }
            let mut field = Self {
                size,
                mul,
                frob: Vec::new(),
            };
            field.frob = (0..size).map(|a| field.pow(a, p) as u16).collect();
            field
        }

        pub fn size(&self) -> u32 {
            self.size
        }

        pub fn mul(&self, a: u32, b: u32) -> u32 {
            u32::from(self.mul[(a * self.size + b) as usize])
        }

        fn pow(&self, a: u32, n: u32) -> u32 {
            let mut out = 1u32;
            for _ in 0..n {
                out = self.mul(out, a);
            }
            out
        }

        /// The `q`-power Frobenius of the base field (`q = p` here).
        pub fn frobenius(&self, a: u32) -> u32 {
            u32::from(self.frob[a as usize])
        }
    }

    /// Coefficient-vector multiplication in `F_p[x]` followed by reduction
    /// modulo the monic modulus.
    fn poly_mul_mod(a: u32, b: u32, p: u32, d: u32, modulus: &[u32]) -> u32 {
        let digits = |mut v: u32| -> Vec<u32> {
            let mut out = vec![0; 2 * d as usize];
            for slot in out.iter_mut().take(d as usize) {
                *slot = v % p;
                v /= p;
            }
            out
        };
        let da = digits(a);
        let db = digits(b);
        let mut prod = vec![0u32; 2 * d as usize];
        for (i, &ca) in da.iter().enumerate().take(d as usize) {
            for (j, &cb) in db.iter().enumerate().take(d as usize) {
                prod[i + j] = (prod[i + j] + ca * cb) % p;
            }
        }
        for k in (d as usize..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (offset, &mc) in modulus.iter().enumerate().take(d as usize) {
                let idx = k - d as usize + offset;
                prod[idx] = (prod[idx] + c * (p - mc % p) % p) % p;
            }
        }
        prod[..d as usize]
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * p + c)
    }

    /// The points of one space over one field, with the induced Frobenius
    /// permutation precomputed as an index map.
    pub struct SpacePoints {
        frob: Vec<u32>,
    }

    impl SpacePoints {
        pub fn enumerate(space: Space, field: &SmallField) -> Self {
            let size = field.size();
            let points: Vec<Vec<u32>> = match space {
                Space::Affine(1) => (0..size).map(|x| vec![x]).collect(),
                Space::Affine(2) => (0..size)
                    .flat_map(|x| (0..size).map(move |y| vec![x, y]))
                    .collect(),
                // charts by first nonzero coordinate, scaled to 1
                Space::Projective(1) => (0..size).map(|y| vec![0, y]).chain([vec![1, 0]]).collect(),
                Space::Projective(2) => (0..size)
                    .flat_map(|y| (0..size).map(move |z| vec![0, y, z]))
                    .chain((0..size).map(|z| vec![1, z, 0]))
                    .chain([vec![2, 0, 0]])
                    .collect(),
                _ => panic!("unsupported brute-force space {space}"),
            };
            let index: super::HashMap<Vec<u32>, u32> = points
                .iter()
                .enumerate()
                .map(|(i, p)| (p.clone(), i as u32))
                .collect();
            let chart_coords = matches!(space, Space::Projective(_));
            let frob = points
                .iter()
                .map(|p| {
                    let image: Vec<u32> = p
                        .iter()
                        .enumerate()
                        .map(|(slot, &c)| {
                            if chart_coords && slot == 0 {
                                c // chart tag, fixed by Frobenius
                            } else {
                                field.frobenius(c)
                            }
                        })
                        .collect();
                    index[&image]
                })
                .collect();
            Self { frob }
        }

        pub fn len(&self) -> usize {
            self.frob.len()
        }

        pub fn fixed_point_count(&self) -> u64 {
            self.frob
                .iter()
                .enumerate()
                .filter(|&(i, &f)| i as u32 == f)
                .count() as u64
        }

        /// Number of Frobenius orbits of exactly `d` elements (`d` = the field
        /// extension degree, so non-fixed points all have full orbits).
        pub fn orbit_count(&self, d: u32) -> u64 {
            let mut count = 0u64;
            for (i, &f) in self.frob.iter().enumerate() {
                let i = i as u32;
                if f == i {
                    continue;
                }
                // walk the orbit; count it at its smallest representative
                let mut orbit_len = 1u32;
                let mut min = i;
                let mut cursor = f;
                while cursor != i {
                    min = min.min(cursor);
                    cursor = self.frob[cursor as usize];
                    orbit_len += 1;
                }
                assert_eq!(orbit_len, d, "orbit sizes divide the extension degree");
                if min == i {
                    count += 1;
                }
            }
            count
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            assert!(is_prime_power(q), "{q}");
        }
        for q in [0u32, 1, 6, 10, 12, 15, 100] {
            assert!(!is_prime_power(q), "{q}");
        }
    }

    #[test]
    fn counts_from_standard_classes() {
        let t = counts_from_class(&affine_class(2), 2, 3).unwrap();
        assert_eq!(t.counts(), &[4, 16, 64]);
        let t = counts_from_class(&projective_class(1), 2, 2).unwrap();
        assert_eq!(t.counts(), &[3, 5]);
        let gr = gaussian_binomial(4, 2).unwrap();
        let t = counts_from_class(&gr, 2, 1).unwrap();
        assert_eq!(t.count(1), 35);
        // non-effective classes are rejected
        let torus = MotivicClass::lefschetz().sub(&MotivicClass::one());
        assert!(matches!(
            counts_from_class(&torus.neg(), 2, 1),
            Err(Error::NotEffective { .. })
        ));
        let fraction = MotivicClass::one().div(&torus).unwrap();
        assert!(matches!(
            counts_from_class(&fraction, 2, 1),
            Err(Error::NotEffective { .. })
        ));
    }

    #[test]
    fn closed_point_censuses() {
        // A^1 over F_2: one monic irreducible quadratic, two cubics
        let t = PointCountTable::new(2, vec![2, 4, 8]).unwrap();
        assert_eq!(closed_points(&t).unwrap(), vec![2, 1, 2]);
        // P^1 over F_2
        let t = PointCountTable::new(2, vec![3, 5, 9]).unwrap();
        assert_eq!(closed_points(&t).unwrap(), vec![3, 1, 2]);
        // a single point
        let t = PointCountTable::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(closed_points(&t).unwrap(), vec![1, 0, 0]);
        // inconsistent table: N_2 < N_1 makes the census negative
        let t = PointCountTable::new(2, vec![3, 1]).unwrap();
        assert!(matches!(
            closed_points(&t),
            Err(Error::InconsistentTable { .. })
        ));
    }

    #[test]
    fn cycle_counts_from_census() {
        // A^1/F_2: the 4 monic quadratics
        assert_eq!(cycles_from_closed_points(&[2, 1, 2], 2), BigInt::from(4));
        // P^1/F_2: 6 rational multisets + 1 conjugate pair
        assert_eq!(cycles_from_closed_points(&[3, 1, 2], 2), BigInt::from(7));
        // S^3 P^1 = P^3
        assert_eq!(cycles_from_closed_points(&[3, 1, 2], 3), BigInt::from(15));
    }

    #[test]
    fn weil_coefficients() {
        let a1 = PointCountTable::new(2, vec![2, 4, 8]).unwrap();
        assert_eq!(weil_coefficient(&a1, 3).unwrap(), BigInt::from(8));
        let p1 = PointCountTable::new(2, vec![3, 5]).unwrap();
        assert_eq!(weil_coefficient(&p1, 2).unwrap(), BigInt::from(7));
        let point = PointCountTable::new(5, vec![1, 1, 1, 1]).unwrap();
        for m in 0..=4 {
            assert_eq!(weil_coefficient(&point, m).unwrap(), BigInt::one());
        }
        assert!(matches!(
            weil_coefficient(&p1, 3),
            Err(Error::OutOfRange(_))
        ));
        // a table no variety produces: fractional zeta coefficient
        let bad = PointCountTable::new(2, vec![2, 3]).unwrap();
        assert!(matches!(
            weil_coefficient(&bad, 2),
            Err(Error::InconsistentTable { .. })
        ));
    }

    #[test]
    fn two_formula_oracles_agree() {
        let classes = [
            MotivicClass::one(),
            MotivicClass::lefschetz(),
            affine_class(2),
            projective_class(1),
            projective_class(2),
            gaussian_binomial(4, 2).unwrap(),
        ];
        for c in &classes {
            for q in [2u32, 3, 4, 5] {
                let table = counts_from_class(c, q, 5).unwrap();
                let census = closed_points(&table).unwrap();
                for m in 1..=5 {
                    assert_eq!(
                        weil_coefficient(&table, m).unwrap(),
                        cycles_from_closed_points(&census, m),
                        "class {c}, q = {q}, m = {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn field_tables_are_fields() {
        for (p, d) in [(2u32, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)] {
            let f = gf::SmallField::with_fixed_modulus(p, d);
            let size = f.size();
            assert_eq!(size, p.pow(d));
            // every nonzero element is invertible
            for a in 1..size {
                assert!(
                    (1..size).any(|b| f.mul(a, b) == 1),
                    "no inverse for {a} in F_{size}"
                );
            }
            // Frobenius has order d and fixes exactly the prime field
            let mut fixed = 0;
            for a in 0..size {
                let mut image = a;
                if f.frobenius(a) == a {
                    fixed += 1;
                }
                for _ in 0..d {
                    image = f.frobenius(image);
                }
                assert_eq!(image, a, "frob^{d} must be the identity");
            }
            assert_eq!(fixed, p);
        }
    }

    #[test]
    fn brute_force_anchor_values() {
        assert_eq!(brute_force_cycles(Space::Affine(1), 2, 2).unwrap(), 4);
        assert_eq!(brute_force_cycles(Space::Projective(1), 2, 2).unwrap(), 7);
        assert_eq!(brute_force_cycles(Space::Projective(1), 2, 3).unwrap(), 15);
        assert_eq!(brute_force_cycles(Space::Projective(2), 2, 1).unwrap(), 7);
    }

    #[test]
    fn brute_force_range_errors() {
        assert!(brute_force_cycles(Space::Affine(1), 5, 2).is_err());
        assert!(brute_force_cycles(Space::Affine(1), 2, 4).is_err());
        assert!(brute_force_cycles(Space::Affine(3), 2, 2).is_err());
        assert!(brute_force_cycles(Space::Grassmannian(2, 4), 2, 2).is_err());
    }

    #[test]
    fn brute_force_agrees_with_formula_oracles_everywhere() {
        for space in [
            Space::Affine(1),
            Space::Affine(2),
            Space::Projective(1),
            Space::Projective(2),
        ] {
            for q in [2u32, 3] {
                let table = counts_from_class(&space.class(), q, 3).unwrap();
                let census = closed_points(&table).unwrap();
                for m in 1..=3u32 {
                    let brute = brute_force_cycles(space, q, m).unwrap();
                    let weil = weil_coefficient(&table, m as usize).unwrap();
                    let cycles = cycles_from_closed_points(&census, m as usize);
                    assert_eq!(BigInt::from(brute), weil, "{space}, q={q}, m={m}");
                    assert_eq!(BigInt::from(brute), cycles, "{space}, q={q}, m={m}");
                }
            }
        }
    }

    #[test]
    fn binomial_power_counts_stable_subsets() {
        // the T^k coefficient of (1+T)^L counts Frobenius-stable k-element
        // subsets; at L = q that is the t^k coefficient of the squarefree
        // census prod_d (1 + t^d)^(C_d)
        let one_plus_t = {
            let mut s = crate::series::TruncatedSeries::one(4);
            s.set_coeff(1, MotivicClass::one());
            s
        };
        let powered = crate::power::power(&one_plus_t, &MotivicClass::lefschetz()).unwrap();
        for q in [2u32, 3] {
            let table = counts_from_class(&MotivicClass::lefschetz(), q, 4).unwrap();
            let census = closed_points(&table).unwrap();
            for k in 1..=4usize {
                // coefficient of t^k in prod_d (1 + t^d)^(C_d)
                let mut coeffs = vec![BigInt::zero(); k + 1];
                coeffs[0] = BigInt::one();
                for (d, &c_d) in census.iter().enumerate().map(|(i, c)| (i + 1, c)) {
                    if d > k {
                        break;
                    }
                    let mut factor = vec![BigInt::zero(); k + 1];
                    factor[0] = BigInt::one();
                    let mut binom = BigInt::one();
                    let mut j = 0u64;
                    while (j as usize + 1) * d <= k && j < c_d {
                        j += 1;
                        binom = binom * BigInt::from(c_d - j + 1) / BigInt::from(j);
                        factor[j as usize * d] = binom.clone();
                    }
                    coeffs = convolve_truncated(&coeffs, &factor, k);
                }
                let motivic = powered.coeff(k).unwrap().eval_at(i64::from(q)).unwrap();
                assert_eq!(
                    motivic,
                    BigRational::from_integer(coeffs[k].clone()),
                    "q = {q}, k = {k}"
                );
            }
        }
        // in particular the spot values q^k - q^(k-1) for k = 2, 3
        assert_eq!(
            powered.coeff(2).unwrap().eval_at(2).unwrap(),
            BigRational::from_integer(2.into())
        );
        assert_eq!(
            powered.coeff(3).unwrap().eval_at(2).unwrap(),
            BigRational::from_integer(4.into())
        );
    }

    #[test]
    fn crosscheck_examples() {
        // affine spaces: both sides q^(k n)
        let r = crosscheck_kapranov_weil(&affine_class(2), 3, 4).unwrap();
        assert!(r.pass(), "{r}");
        // P^1 over F_2: 3, 7, 15
        let r = crosscheck_kapranov_weil(&projective_class(1), 2, 3).unwrap();
        assert!(r.pass(), "{r}");
        let gr = gaussian_binomial(4, 2).unwrap();
        let r = crosscheck_kapranov_weil(&gr, 2, 2).unwrap();
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn space_parsing() {
        assert_eq!(Space::parse("A^2").unwrap(), Space::Affine(2));
        assert_eq!(Space::parse("P^10").unwrap(), Space::Projective(10));
        assert_eq!(Space::parse("Gr(2,4)").unwrap(), Space::Grassmannian(2, 4));
        assert_eq!(
            Space::parse(" Gr(2, 4) ").unwrap(),
            Space::Grassmannian(2, 4)
        );
        assert!(Space::parse("B^2").is_err());
        assert!(Space::parse("Gr(4,2)").is_err());
    }

    #[test]
    fn table_json_round_trip() {
        let t = PointCountTable::new(2, vec![3, 5, 9]).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"q":2,"counts":[3,5,9]}"#);
        let back: PointCountTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}

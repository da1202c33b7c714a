//! Classes of standard cellular varieties and the combinatorics behind the
//! symmetric-power/Grassmannian comparison: Gaussian binomials, Schubert-cell
//! counts, strata of symmetric powers of infinite projective space, and the
//! dimension-preserving matching between the two.
//!
//! Grassmannian classes are computed two independent ways (cell enumeration vs
//! binomial product with exact division) and the cell counts two ways
//! (partitions with parts `<= m` vs partitions with at most `m` parts); the
//! agreements are part of the test surface, not assumptions.

use std::fmt;

use crate::class::MotivicClass;
use crate::error::{Error, Result};
use crate::poly::MotivicPolynomial;
use crate::power::enumerate_partition_vectors;

/// A partition: weakly decreasing positive parts. Indexes a Schubert cell; the
/// cell's dimension is the partition's weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::OutOfRange(format!(
                "partition parts must be positive and weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Multiplicities `(i_1, i_2, ...)` of a stratum `prod_j S^(i_j) C^j` inside
/// the m-th symmetric power of infinite projective space; the constraint is
/// `sum i_j <= m` and the stratum's dimension is `sum j * i_j`. Trailing zeros
/// are trimmed; the empty signature is the single point `S^0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrataSignature {
    multiplicities: Vec<u32>,
}

impl StrataSignature {
    pub fn new(multiplicities: Vec<u32>) -> Self {
        let mut m = multiplicities;
        while m.last() == Some(&0) {
            m.pop();
        }
        Self { multiplicities: m }
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    /// `i_j` for `j >= 1`.
    pub fn multiplicity(&self, j: usize) -> u32 {
        assert!(j >= 1);
        self.multiplicities.get(j - 1).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u32 {
        self.multiplicities
            .iter()
            .enumerate()
            .map(|(idx, &i)| (idx as u32 + 1) * i)
            .sum()
    }

    pub fn size(&self) -> u32 {
        self.multiplicities.iter().sum()
    }
}

impl fmt::Display for StrataSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, m) in self.multiplicities.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}

/// `[C^n] = L^n`.
pub fn affine_class(n: u32) -> MotivicClass {
    MotivicClass::lefschetz_power(i64::from(n))
}

/// `[P^N] = 1 + L + ... + L^N`, one class per affine cell.
pub fn projective_class(n: u32) -> MotivicClass {
    MotivicClass::from_poly(MotivicPolynomial::from_terms(
        (0..=i64::from(n)).map(|e| (e, 1.into())),
    ))
}

/// The Gaussian binomial `[n choose m]_L = prod_{i=1..m} (L^(n-m+i) - 1)/(L^i - 1)`,
/// computed by exact polynomial division.
pub fn gaussian_binomial(n: u32, m: u32) -> Result<MotivicClass> {
    if m > n {
        return Err(Error::BinomialRange { n, m });
    }
    let mut numerator = MotivicPolynomial::one();
    let mut denominator = MotivicPolynomial::one();
    for i in 1..=i64::from(m) {
        numerator = &numerator
            * &MotivicPolynomial::from_terms(vec![
                (i64::from(n - m) + i, 1.into()),
                (0, (-1).into()),
            ]);
        denominator =
            &denominator * &MotivicPolynomial::from_terms(vec![(i, 1.into()), (0, (-1).into())]);
    }
    let q = numerator
        .divide_exact(&denominator)
        .expect("Gaussian binomial division is exact");
    debug_assert!(q.is_effective());
    Ok(MotivicClass::from_poly(q))
}

/// `[Gr(m, n)]` as the sum of `L^|lambda|` over the Schubert cells, i.e. over
/// partitions `lambda` inside the `m x (n - m)` box. Independent of
/// `gaussian_binomial`, with which it must agree.
pub fn grassmannian_class(m: u32, n: u32) -> Result<MotivicClass> {
    if m > n {
        return Err(Error::BinomialRange { n, m });
    }
    let width = n - m;
    let mut weight_counts = vec![0u64; (m * width) as usize + 1];
    count_box_partitions(width, m, 0, &mut weight_counts);
    Ok(MotivicClass::from_poly(MotivicPolynomial::from_terms(
        weight_counts
            .iter()
            .enumerate()
            .map(|(w, &c)| (w as i64, c.into())),
    )))
}

/// Literal enumeration of partitions with at most `rows` parts, each at most
/// `largest`, accumulating one count per total weight.
fn count_box_partitions(largest: u32, rows: u32, acc: u32, counts: &mut [u64]) {
    counts[acc as usize] += 1;
    if rows == 0 {
        return;
    }
    for part in 1..=largest {
        count_box_partitions(part, rows - 1, acc + part, counts);
    }
}

/// Number of `n`-dimensional Schubert cells of `Gr(m, infinity)`: partitions of
/// `n` into summands not exceeding `m`. Also computed through the conjugate
/// description (at most `m` summands); the two counts must agree.
pub fn schubert_count(m: u32, n: u32) -> u64 {
    let by_part_size = count_partitions_max_part(n, m);
    let by_part_count = count_partitions_max_len(n, m);
    assert_eq!(
        by_part_size, by_part_count,
        "conjugate partition counts disagree for m={m}, n={n}"
    );
    by_part_size
}

/// Partitions of `n` with every part `<= m`, by the largest-part recurrence.
pub fn count_partitions_max_part(n: u32, m: u32) -> u64 {
    // f(n, k) = f(n, k-1) + f(n-k, k)
    let n = n as usize;
    let m = m as usize;
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for k in 1..=m.min(n.max(1)) {
        for w in k..=n {
            table[w] += table[w - k];
        }
    }
    table[n]
}

/// Partitions of `n` into at most `m` parts, summing the exact-length counts
/// `e(n, k) = e(n-1, k-1) + e(n-k, k)`.
pub fn count_partitions_max_len(n: u32, m: u32) -> u64 {
    let n = n as usize;
    let m = m as usize;
    if n == 0 {
        return 1;
    }
    // exact[k][w] = partitions of w into exactly k parts
    let mut exact = vec![vec![0u64; n + 1]; m + 1];
    exact[0][0] = 1;
    for k in 1..=m {
        for w in 1..=n {
            exact[k][w] = exact[k - 1][w - 1] + if w >= k { exact[k][w - k] } else { 0 };
        }
    }
    (0..=m).map(|k| exact[k][n]).sum()
}

/// All strata signatures of dimension `n` inside the `m`-th symmetric power:
/// `sum i_j <= m`, `sum j*i_j = n`, in lexicographically decreasing order of
/// `(i_1, i_2, ...)`. The count equals `schubert_count(m, n)`.
pub fn strata_signatures(m: u32, n: u32) -> Vec<StrataSignature> {
    enumerate_partition_vectors(n, None, Some(m))
        .into_iter()
        .map(|pv| StrataSignature::new(pv.multiplicities().to_vec()))
        .collect()
}

/// The dimension-preserving bijection from strata to Schubert cells: the
/// signature with multiplicities `i_j` maps to the partition with `i_j` parts
/// equal to `j` (at most `m` parts in total).
pub fn match_strata(m: u32, n: u32) -> Vec<(StrataSignature, Partition)> {
    strata_signatures(m, n)
        .into_iter()
        .map(|sig| {
            let mut parts = Vec::with_capacity(sig.size() as usize);
            for (idx, &mult) in sig.multiplicities().iter().enumerate().rev() {
                for _ in 0..mult {
                    parts.push(idx as u32 + 1);
                }
            }
            let partition = Partition::new(parts).expect("weakly decreasing by construction");
            debug_assert_eq!(partition.weight(), sig.dimension());
            (sig, partition)
        })
        .collect()
}

/// Smallest `N` such that the stratum lies inside `S^m P^N`: the largest `j`
/// with `i_j > 0` (its points use coordinates from `C^j` inside `P^j`).
pub fn stratum_min_level(sig: &StrataSignature) -> u32 {
    sig.multiplicities().len() as u32
}

/// Smallest `N` such that the cell of `lambda` lies inside `Gr(m, N)`:
/// `m + lambda_1`.
pub fn cell_min_level(partition: &Partition, m: u32) -> u32 {
    m + partition.largest_part()
}

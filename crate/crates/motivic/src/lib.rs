//! Exact computations in the Grothendieck (semi)ring of complex
//! quasi-projective varieties.
//!
//! The crate provides, with no floating point anywhere:
//!
//! * [`poly`] / [`class`]: Laurent polynomials in the Lefschetz class `L`
//!   over arbitrary-precision integers, and their reduced fractions;
//! * [`series`]: truncated power series in `T` with class coefficients;
//! * [`power`]: the power structure `A(T)^M` through its canonical
//!   Euler-factor form, plus the finite combinatorial expansion;
//! * [`varieties`]: Gaussian binomials, Grassmannian classes, Schubert-cell
//!   and strata combinatorics;
//! * [`zeta`]: zeta series of classes, symmetric-power classes, the
//!   classifying-stack series, and the identity verification routines;
//! * [`oracle`]: independent finite-field checks: Weil zeta coefficients,
//!   closed-point censuses, and literal brute-force cycle enumeration;
//! * [`suites`]: seeded verification sweeps over all of the above.
//!
//! All values are immutable and all operations are pure functions, so
//! everything here is safe to share across threads.

pub mod class;
pub mod error;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod power;
pub mod report;
pub mod series;
pub mod suites;
pub mod varieties;
pub mod zeta;

pub use class::MotivicClass;
pub use error::{Error, Result};
pub use poly::MotivicPolynomial;
pub use report::VerificationReport;
pub use series::TruncatedSeries;

#[cfg(test)]
mod tests {
    fn assert_shareable<T: Send + Sync + 'static>() {}

    #[test]
    fn values_are_safe_to_share_across_threads() {
        assert_shareable::<crate::MotivicPolynomial>();
        assert_shareable::<crate::MotivicClass>();
        assert_shareable::<crate::TruncatedSeries>();
        assert_shareable::<crate::power::ExponentVector>();
        assert_shareable::<crate::oracle::PointCountTable>();
        assert_shareable::<crate::VerificationReport>();
    }
}

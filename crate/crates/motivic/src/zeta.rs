//! Zeta functions of motivic classes and the verification routines for the
//! identities this crate exists to check.
//!
//! The zeta series of a class `c` is the geometric series raised to `c` in the
//! power structure; its `T^k` coefficient is the class of the `k`-th symmetric
//! power. The classifying-stack series for the multiplicative group is handled
//! through its closed-form coefficients and validated by three independent
//! identities instead, since its exponent `1/(L-1)` lies outside the supported
//! power-structure domain.

use crate::class::MotivicClass;
use crate::error::Result;
use crate::poly::MotivicPolynomial;
use crate::power::power;
use crate::report::VerificationReport;
use crate::series::TruncatedSeries;
use crate::varieties::{gaussian_binomial, grassmannian_class, projective_class};

/// The zeta series `(1 + T + T^2 + ...)^c`; `c` must be a Laurent polynomial
/// in `L`.
pub fn kapranov_zeta(c: &MotivicClass, order: usize) -> Result<TruncatedSeries> {
    power(&TruncatedSeries::geometric(order), c)
}

/// The class of the `m`-th symmetric power of a variety with class `c`.
pub fn symmetric_power_class(c: &MotivicClass, m: usize) -> Result<MotivicClass> {
    Ok(kapranov_zeta(c, m)?.coeff(m)?.clone())
}

/// Checks that the zeta series of `L^n` has `T^i` coefficient `L^(i*n)` for
/// every `i` up to the order: the class-level form of the statement that the
/// `m`-th symmetric power of affine `n`-space matches affine `mn`-space.
pub fn verify_theorem1(n: u32, order: usize) -> VerificationReport {
    let mut report = VerificationReport::new("theorem1")
        .with_param("n", n)
        .with_param("order", order);
    let zeta = kapranov_zeta(&MotivicClass::lefschetz_power(i64::from(n)), order)
        .expect("L^n is a supported exponent");
    for i in 0..=order {
        let expected = MotivicClass::lefschetz_power(i as i64 * i64::from(n));
        report.check_eq(
            format!("coeff T^{i} of zeta_(L^{n})"),
            zeta.coeff(i).expect("within order"),
            &expected,
        );
    }
    report
}

/// Checks the scaling identity `zeta_(L*c)(T) = zeta_c(L*T)` exactly.
pub fn verify_scaling(c: &MotivicClass, order: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("scaling")
        .with_param("class", c)
        .with_param("order", order);
    let lhs = kapranov_zeta(&c.mul(&MotivicClass::lefschetz()), order)?;
    let rhs = kapranov_zeta(c, order)?.substitute(&MotivicClass::lefschetz(), 1)?;
    for i in 0..=order {
        report.check_eq(
            format!("coeff T^{i}"),
            lhs.coeff(i).expect("within order"),
            rhs.coeff(i).expect("within order"),
        );
    }
    Ok(report)
}

/// Checks `(A(L^s T))^M = (A(T)^M) with T -> L^s T`, exactly, at the order of
/// `a`.
pub fn verify_lemma(
    a: &TruncatedSeries,
    exponent: &MotivicClass,
    s: u32,
    order: usize,
) -> Result<VerificationReport> {
    let a = if order < a.order() {
        a.truncate(order)
    } else {
        a.clone()
    };
    let mut report = VerificationReport::new("lemma")
        .with_param("exponent", exponent)
        .with_param("s", s)
        .with_param("order", a.order());
    let scale = MotivicClass::lefschetz_power(i64::from(s));
    let lhs = power(&a.substitute(&scale, 1)?, exponent)?;
    let rhs = power(&a, exponent)?.substitute(&scale, 1)?;
    for i in 0..=a.order() {
        report.check_eq(
            format!("coeff T^{i}"),
            lhs.coeff(i).expect("within order"),
            rhs.coeff(i).expect("within order"),
        );
    }
    Ok(report)
}

/// Checks the finite-level symmetric-power/Grassmannian identity
/// `[S^m P^N] = [Gr(m, m+N)] = gaussian_binomial(m+N, m)`, plus the numeric
/// shadow at `L = 1`.
pub fn verify_theorem2_finite(m: u32, n: u32) -> VerificationReport {
    let mut report = VerificationReport::new("theorem2-finite")
        .with_param("m", m)
        .with_param("N", n);
    let sym = symmetric_power_class(&projective_class(n), m as usize)
        .expect("projective classes are supported exponents");
    let gr = grassmannian_class(m, m + n).expect("m <= m + N");
    let gauss = gaussian_binomial(m + n, m).expect("m <= m + N");
    report.check_eq(format!("[S^{m} P^{n}] = [Gr({m},{})]", m + n), &sym, &gr);
    report.check_eq(
        format!("[Gr({m},{})] = gaussian_binomial({}, {m})", m + n, m + n),
        &gr,
        &gauss,
    );
    let at_one = gauss.eval_at(1).expect("polynomial class");
    let choose = num_rational::BigRational::from_integer(num_integer::binomial(
        num_bigint::BigInt::from(m + n),
        num_bigint::BigInt::from(m),
    ));
    report.check_eq(
        format!("eval at L=1 equals C({}, {m})", m + n),
        &at_one,
        &choose,
    );
    report
}

/// `[BGL(m)] = 1 / ((L^m - L^(m-1)) (L^m - L^(m-2)) ... (L^m - 1))`.
pub fn bgl_class(m: u32) -> MotivicClass {
    assert!(m >= 1, "BGL(m) needs m >= 1");
    MotivicClass::new(MotivicPolynomial::one(), gl_order_polynomial(m))
        .expect("denominator is nonzero")
}

/// `(L^m - L^(m-1)) ... (L^m - 1)`, the class of `GL(m)`.
fn gl_order_polynomial(m: u32) -> MotivicPolynomial {
    let mut out = MotivicPolynomial::one();
    for i in 0..i64::from(m) {
        out =
            &out * &MotivicPolynomial::from_terms(vec![(i64::from(m), 1.into()), (i, (-1).into())]);
    }
    out
}

/// Coefficients `c_0..c_order` of the zeta series of the classifying stack of
/// the multiplicative group: `c_m = L^(m^2 - m) / ((L^m - L^(m-1)) ... (L^m - 1))`.
pub fn stack_zeta_bcstar(order: usize) -> Vec<MotivicClass> {
    (0..=order as u32)
        .map(|m| {
            if m == 0 {
                MotivicClass::one()
            } else {
                MotivicClass::new(
                    MotivicPolynomial::monomial(i64::from(m) * i64::from(m) - i64::from(m), 1),
                    gl_order_polynomial(m),
                )
                .expect("denominator is nonzero")
            }
        })
        .collect()
}

/// Validates the classifying-stack series three independent ways: against
/// `L^(m^2-m) * [BGL(m)]`, against the recurrence
/// `c_m (L^m - 1) = c_(m-1) L^(m-1)`, and against the cancelled closed form
/// `c_m = L^(m(m-1)/2) / prod_{i=1..m} (L^i - 1)`; plus the displayed values
/// of `c_1` and `c_2` verbatim.
pub fn verify_bcstar(order: usize) -> VerificationReport {
    let mut report = VerificationReport::new("bcstar").with_param("order", order);
    let coeffs = stack_zeta_bcstar(order);
    for (m, c) in coeffs.iter().enumerate().skip(1).take(2) {
        report = report.with_param(format!("c_{m}"), c);
    }
    report.check_eq("c_0 = 1", &coeffs[0], &MotivicClass::one());
    if order >= 1 {
        let displayed_c1 = MotivicClass::new(
            MotivicPolynomial::one(),
            MotivicPolynomial::from_terms(vec![(1, 1.into()), (0, (-1).into())]),
        )
        .unwrap();
        report.check_eq("c_1 = 1/(L - 1)", &coeffs[1], &displayed_c1);
    }
    if order >= 2 {
        let displayed_c2 = MotivicClass::new(
            MotivicPolynomial::monomial(2, 1),
            &MotivicPolynomial::from_terms(vec![(2, 1.into()), (1, (-1).into())])
                * &MotivicPolynomial::from_terms(vec![(2, 1.into()), (0, (-1).into())]),
        )
        .unwrap();
        report.check_eq("c_2 = L^2/((L^2 - L)(L^2 - 1))", &coeffs[2], &displayed_c2);
    }
    for m in 1..=order {
        let mi = m as i64;
        let bgl_form = MotivicClass::lefschetz_power(mi * mi - mi).mul(&bgl_class(m as u32));
        report.check_eq(
            format!("c_{m} = L^(m^2-m) * [BGL({m})]"),
            &coeffs[m],
            &bgl_form,
        );

        let step = MotivicClass::from_poly(MotivicPolynomial::from_terms(vec![
            (mi, 1.into()),
            (0, (-1).into()),
        ]));
        report.check_eq(
            format!("c_{m} (L^{m} - 1) = c_{} L^{}", m - 1, m - 1),
            &coeffs[m].mul(&step),
            &coeffs[m - 1].mul(&MotivicClass::lefschetz_power(mi - 1)),
        );

        let mut cyclotomic_product = MotivicPolynomial::one();
        for i in 1..=mi {
            cyclotomic_product = &cyclotomic_product
                * &MotivicPolynomial::from_terms(vec![(i, 1.into()), (0, (-1).into())]);
        }
        let simplified = MotivicClass::new(
            MotivicPolynomial::monomial(mi * (mi - 1) / 2, 1),
            cyclotomic_product,
        )
        .unwrap();
        report.check_eq(
            format!("c_{m} = L^(m(m-1)/2) / prod (L^i - 1)"),
            &coeffs[m],
            &simplified,
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::varieties::affine_class;
    use num_rational::BigRational;

    fn l() -> MotivicClass {
        MotivicClass::lefschetz()
    }

    fn poly(pairs: &[(i64, i64)]) -> MotivicClass {
        MotivicClass::from_poly(MotivicPolynomial::from_terms(
            pairs.iter().map(|&(e, c)| (e, c.into())),
        ))
    }

    #[test]
    fn zeta_of_a_point_and_the_line() {
        let z1 = kapranov_zeta(&MotivicClass::one(), 6).unwrap();
        assert_eq!(z1, TruncatedSeries::geometric(6));
        let zl = kapranov_zeta(&l(), 6).unwrap();
        for k in 0..=6 {
            assert_eq!(
                *zl.coeff(k).unwrap(),
                MotivicClass::lefschetz_power(k as i64)
            );
        }
    }

    #[test]
    fn zeta_of_projective_line_coefficients() {
        // zeta_(1+L) = 1/((1-T)(1-LT)); coefficient of T^2 is 1 + L + L^2
        let z = kapranov_zeta(&projective_class(1), 4).unwrap();
        assert_eq!(*z.coeff(2).unwrap(), poly(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(
            symmetric_power_class(&projective_class(1), 2).unwrap(),
            projective_class(2)
        );
    }

    #[test]
    fn symmetric_powers_of_affine_space() {
        for n in 0..=3u32 {
            for m in 0..=4usize {
                assert_eq!(
                    symmetric_power_class(&affine_class(n), m).unwrap(),
                    MotivicClass::lefschetz_power(m as i64 * i64::from(n))
                );
            }
        }
        assert!(symmetric_power_class(&MotivicClass::one(), 5)
            .unwrap()
            .is_one());
    }

    #[test]
    fn theorem1_reports() {
        assert!(verify_theorem1(1, 10).pass());
        assert!(verify_theorem1(3, 8).pass());
        // n = 0: the zeta of a point, coefficients all 1
        assert!(verify_theorem1(0, 6).pass());
    }

    #[test]
    fn scaling_reports() {
        assert!(verify_scaling(&MotivicClass::one(), 8).unwrap().pass());
        assert!(verify_scaling(&l(), 8).unwrap().pass());
        let p1 = projective_class(1);
        assert!(verify_scaling(&p1, 6).unwrap().pass());
        // spot value: coefficient of T^2 in zeta_(L(1+L)) is L^2(1+L+L^2)
        let z = kapranov_zeta(&p1.mul(&l()), 4).unwrap();
        assert_eq!(*z.coeff(2).unwrap(), poly(&[(2, 1), (3, 1), (4, 1)]));
    }

    #[test]
    fn lemma_reports() {
        let mut a = TruncatedSeries::one(6);
        a.set_coeff(1, MotivicClass::one());
        // s = 0 is the identity substitution
        assert!(verify_lemma(&a, &l(), 0, 6).unwrap().pass());
        let r = verify_lemma(&a, &l(), 1, 6).unwrap();
        assert!(r.pass());
        // the scaled power has coefficients 1, L^2, L^4 - L^3, ...
        let lhs = power(&a.substitute(&l(), 1).unwrap(), &l()).unwrap();
        assert_eq!(*lhs.coeff(1).unwrap(), MotivicClass::lefschetz_power(2));
        assert_eq!(*lhs.coeff(2).unwrap(), poly(&[(4, 1), (3, -1)]));
    }

    #[test]
    fn theorem2_finite_reports() {
        assert!(verify_theorem2_finite(2, 1).pass());
        assert!(verify_theorem2_finite(1, 7).pass());
        let r = verify_theorem2_finite(2, 2);
        assert!(r.pass(), "{r}");
        // the shared value is the Gr(2,4) class
        assert_eq!(
            symmetric_power_class(&projective_class(2), 2).unwrap(),
            poly(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)])
        );
    }

    #[test]
    fn bgl_classes() {
        assert_eq!(
            bgl_class(1),
            MotivicClass::new(
                MotivicPolynomial::one(),
                MotivicPolynomial::from_terms(vec![(1, 1.into()), (0, (-1).into())])
            )
            .unwrap()
        );
        // |GL(2, F_2)| = 6
        let order = bgl_class(2).inverse().unwrap();
        assert_eq!(
            order.eval_at(2).unwrap(),
            BigRational::from_integer(6.into())
        );
    }

    #[test]
    fn bcstar_series_and_checks() {
        let r = verify_bcstar(8);
        assert!(r.pass(), "{r}");
        let coeffs = stack_zeta_bcstar(2);
        assert_eq!(coeffs[1].to_string(), "1/(L - 1)");
        // reduced form of L^2/((L^2-L)(L^2-1))
        assert_eq!(coeffs[2].to_string(), "L/(L^3 - L^2 - L + 1)");
    }

    #[test]
    fn additivity_in_the_exponent() {
        // zeta_(a+b) = zeta_a * zeta_b
        let a = poly(&[(0, 1), (1, 2)]);
        let b = poly(&[(2, 1)]);
        let lhs = kapranov_zeta(&a.add(&b), 6).unwrap();
        let rhs = kapranov_zeta(&a, 6)
            .unwrap()
            .mul(&kapranov_zeta(&b, 6).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn macdonald_type_product_for_projective_space() {
        // zeta_([P^N]) = prod_{i=0..N} (1 - L^i T)^(-1)
        for n in 0..=3u32 {
            let order = 8;
            let lhs = kapranov_zeta(&projective_class(n), order).unwrap();
            let mut rhs = TruncatedSeries::one(order);
            for i in 0..=i64::from(n) {
                rhs = rhs.mul(
                    &crate::power::expand_factor(1, &MotivicClass::lefschetz_power(i), order)
                        .unwrap(),
                );
            }
            assert_eq!(lhs, rhs, "N = {n}");
        }
    }
}

//! Exact unit-disk criteria for low degrees and the Eneström–Kakeya test.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::poly::IntegerPolynomial;
use crate::scalar::Scalar;

/// Roots of `z^2 + b z + c` lie in the closed unit disk.
pub fn hurwitz_quadratic_in_disk<S: Scalar>(b: &S, c: &S) -> bool {
    let one = S::one();
    c.abs() <= one && b.abs() <= c.clone() + one
}

fn cubic_conditions<S: Scalar>(a0: &S, a1: &S, a2: &S, a3: &S) -> [S; 4] {
    let three = S::from_i64(3);
    [
        a0.clone() + a1.clone() + a2.clone() + a3.clone(),
        a0.clone() - a1.clone() + a2.clone() - a3.clone(),
        three.clone() * a0.clone() + a1.clone() - a2.clone() - three * a3.clone(),
        a0.clone() * a0.clone() - a3.clone() * a3.clone() + a1.clone() * a3.clone()
            - a0.clone() * a2.clone(),
    ]
}

/// Closed-disk test for `a0 x^3 + a1 x^2 + a2 x + a3` with positive coefficients.
pub fn farebrother_cubic<S: Scalar>(a0: &S, a1: &S, a2: &S, a3: &S) -> Result<bool> {
    if [a0, a1, a2, a3].iter().any(|a| !a.is_positive()) {
        return Err(Error::Precondition(
            "the cubic test needs positive coefficients".into(),
        ));
    }
    Ok(cubic_conditions(a0, a1, a2, a3)
        .iter()
        .all(|v| !v.is_negative()))
}

/// Necessary conditions for a real cubic (`a0 != 0`) to have every root in
/// the closed disk; failing one proves a root outside.
pub fn cubic_closed_disk_necessary<S: Scalar>(a0: &S, a1: &S, a2: &S, a3: &S) -> bool {
    let flip = |a: &S| {
        if a0.is_negative() {
            -a.clone()
        } else {
            a.clone()
        }
    };
    let [a0, a1, a2, a3] = [flip(a0), flip(a1), flip(a2), flip(a3)];
    cubic_conditions(&a0, &a1, &a2, &a3)
        .iter()
        .all(|v| !v.is_negative())
}

fn quartic_conditions<S: Scalar>(a1: &S, a2: &S, a3: &S, a4: &S) -> [S; 5] {
    let one = S::one();
    let three = S::from_i64(3);
    let u = one.clone() - a4.clone();
    [
        u.clone(),
        three.clone() + three * a4.clone() - a2.clone(),
        one.clone() + a1.clone() + a2.clone() + a3.clone() + a4.clone(),
        one.clone() - a1.clone() + a2.clone() - a3.clone() + a4.clone(),
        u.clone() * (one - a4.clone() * a4.clone()) - a2.clone() * u.clone() * u
            + (a1.clone() - a3.clone()) * (a3.clone() - a1.clone() * a4.clone()),
    ]
}

/// Sufficient test for the roots of `x^4 + a1 x^3 + a2 x^2 + a3 x + a4` to lie
/// in the closed disk: strict in the first and last conditions, weak in the rest.
pub fn farebrother_quartic<S: Scalar>(a1: &S, a2: &S, a3: &S, a4: &S) -> bool {
    let v = quartic_conditions(a1, a2, a3, a4);
    v[0].is_positive()
        && !v[1].is_negative()
        && !v[2].is_negative()
        && !v[3].is_negative()
        && v[4].is_positive()
}

/// All five quartic conditions in weak form; necessary for the closed disk.
pub fn quartic_closed_disk_necessary<S: Scalar>(a1: &S, a2: &S, a3: &S, a4: &S) -> bool {
    quartic_conditions(a1, a2, a3, a4)
        .iter()
        .all(|v| !v.is_negative())
}

/// Coefficients positive and nondecreasing from the constant term upward.
pub fn enestrom_kakeya_applies(p: &IntegerPolynomial) -> bool {
    let c = p.coeffs();
    !c.is_empty() && c.iter().all(Signed::is_positive) && c.windows(2).all(|w| w[0] <= w[1])
}

/// A pure, loopless 2-dimensional complex on `m` elements with `f2` edges has a
/// reliability root outside the closed disk.
pub fn dim2_outside_predicate(m: usize, f2: usize) -> Result<bool> {
    let (m, f2) = (m as i64, f2 as i64);
    if 2 * f2 < m {
        return Err(Error::Precondition(format!(
            "{f2} edges cannot cover {m} elements"
        )));
    }
    Ok(((m + 1) / 2..=m - 2).contains(&f2) || (m..=2 * m - 5).contains(&f2))
}

/// Exact closed-disk answer for an integer polynomial of degree at most four,
/// when one of the criteria settles it.
pub(crate) fn exact_low_degree(p: &IntegerPolynomial) -> Option<(bool, super::DecidedBy)> {
    use super::DecidedBy;
    use num_rational::BigRational;
    let q = |i: usize| BigRational::from_integer(p.coeff(i));
    let ratio = |i: usize, lead: usize| q(i) / q(lead);
    match p.degree()? {
        0 => Some((true, DecidedBy::Trivial)),
        1 => Some((p.coeff(0).abs() <= p.coeff(1).abs(), DecidedBy::Linear)),
        2 => Some((
            hurwitz_quadratic_in_disk(&ratio(1, 2), &ratio(0, 2)),
            DecidedBy::Hurwitz,
        )),
        3 => {
            let (a0, a1, a2, a3) = (q(3), q(2), q(1), q(0));
            let zero = BigInt::from(0);
            if p.coeffs().iter().all(|c| *c > zero) {
                let inside = farebrother_cubic(&a0, &a1, &a2, &a3).expect("positive");
                Some((inside, DecidedBy::FarebrotherCubic))
            } else if !cubic_closed_disk_necessary(&a0, &a1, &a2, &a3) {
                Some((false, DecidedBy::FarebrotherCubic))
            } else {
                None
            }
        }
        4 => {
            let (a1, a2, a3, a4) = (ratio(3, 4), ratio(2, 4), ratio(1, 4), ratio(0, 4));
            if farebrother_quartic(&a1, &a2, &a3, &a4) {
                Some((true, DecidedBy::FarebrotherQuartic))
            } else if !quartic_closed_disk_necessary(&a1, &a2, &a3, &a4) {
                Some((false, DecidedBy::FarebrotherQuartic))
            } else {
                None
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn hurwitz_examples() {
        assert!(hurwitz_quadratic_in_disk(&r(0, 1), &r(0, 1)));
        assert!(!hurwitz_quadratic_in_disk(&r(4, 1), &r(1, 1)));
        assert!(hurwitz_quadratic_in_disk(&r(4, 3), &r(1, 3)));
        assert!(hurwitz_quadratic_in_disk(&2.0f64, &1.0f64));
    }

    #[test]
    fn cubic_examples() {
        let [a0, a1, a2, a3] = [6, 6, 3, 1].map(|v| r(v, 1));
        assert!(farebrother_cubic(&a0, &a1, &a2, &a3).unwrap());
        assert!(farebrother_cubic(&6.0f64, &6.0, &3.0, &1.0).unwrap());
        let bad = [1, -2, 0, 0].map(|v| r(v, 1));
        assert!(matches!(
            farebrother_cubic(&bad[0], &bad[1], &bad[2], &bad[3]),
            Err(Error::Precondition(_))
        ));
        // (x - 2) x^2 has a root at 2
        assert!(!cubic_closed_disk_necessary(
            &bad[0], &bad[1], &bad[2], &bad[3]
        ));
        // 1 + q + q^2 + 4q^3 has a root near -0.63 and a pair of modulus ~0.63: inside
        assert!(farebrother_cubic(&4.0f64, &1.0, &1.0, &1.0).unwrap());
    }

    #[test]
    fn quartic_examples() {
        // h = 3q^4 + 4q^3 + 3q^2 + 2q + 1
        let a = |c: i64| r(c, 3);
        assert!(farebrother_quartic(&a(4), &a(3), &a(2), &a(1)));
        // x^4 - 16 has roots of modulus 2
        let zero = r(0, 1);
        assert!(!quartic_closed_disk_necessary(
            &zero,
            &zero,
            &zero,
            &r(-16, 1)
        ));
        // x^4 - 1: unit roots, undecided by the strict conditions
        assert!(!farebrother_quartic(&zero, &zero, &zero, &r(-1, 1)));
        assert!(quartic_closed_disk_necessary(
            &zero,
            &zero,
            &zero,
            &r(-1, 1)
        ));
    }

    #[test]
    fn enestrom_kakeya_examples() {
        assert!(enestrom_kakeya_applies(&IntegerPolynomial::from_i64s(&[
            1, 1, 1
        ])));
        assert!(enestrom_kakeya_applies(&IntegerPolynomial::from_i64s(&[
            1, 3, 6, 10
        ])));
        let rs =
            IntegerPolynomial::from_i64s(&[1, 3, 6, 10, 14, 18, 22, 26, 26, 22, 18, 14, 10, 6]);
        assert!(!enestrom_kakeya_applies(&rs));
        assert!(!enestrom_kakeya_applies(&IntegerPolynomial::from_i64s(&[
            1, 0, 2
        ])));
    }

    #[test]
    fn dim2_examples() {
        assert!(dim2_outside_predicate(6, 6).unwrap());
        assert!(!dim2_outside_predicate(6, 8).unwrap());
        assert!(dim2_outside_predicate(4, 2).unwrap());
        assert!(!dim2_outside_predicate(6, 5).unwrap());
        assert!(dim2_outside_predicate(7, 4).unwrap());
        assert!(dim2_outside_predicate(6, 2).is_err());
    }

    #[test]
    fn low_degree_dispatch() {
        use super::super::DecidedBy;
        let p = IntegerPolynomial::from_i64s(&[1, 4, 1]);
        assert_eq!(exact_low_degree(&p), Some((false, DecidedBy::Hurwitz)));
        let p = IntegerPolynomial::from_i64s(&[1, 2]);
        assert_eq!(exact_low_degree(&p), Some((true, DecidedBy::Linear)));
        let p = IntegerPolynomial::from_i64s(&[1, 3, 6, 6]);
        assert_eq!(
            exact_low_degree(&p),
            Some((true, DecidedBy::FarebrotherCubic))
        );
        let p = IntegerPolynomial::from_i64s(&[-1, 0, 0, 0, 1]);
        assert_eq!(exact_low_degree(&p), None);
    }
}

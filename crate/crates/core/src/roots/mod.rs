//! Numeric roots with a-posteriori error radii, plus exact criteria that
//! settle whether all roots lie in the closed unit disk.
//!
//! [`find_roots_with`] runs Aberth–Ehrlich iteration in any `num_traits::Float`
//! type, polishes in double-double arithmetic, and derives each root's radius
//! from Weierstrass corrections: the disks `|z - z_i| <= n |W_i|` cover every
//! root, and a connected cluster of `k` disks holds exactly `k` roots.

mod criteria;
pub mod dd;
mod real;

use std::cmp::Ordering;
use std::io::Write;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Float, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntegerPolynomial;
use dd::{horner, CDd, Dd, DD_EPS};

pub use criteria::{
    cubic_closed_disk_necessary, dim2_outside_predicate, enestrom_kakeya_applies,
    farebrother_cubic, farebrother_quartic, hurwitz_quadratic_in_disk,
    quartic_closed_disk_necessary,
};
pub use real::{
    real_root_classification, real_roots, square_free_decomposition, square_free_mod_prime,
    RealRoot, RealRootReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    AllInClosedDisk,
    RootOutside,
    BoundaryUncertain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecidedBy {
    Numeric,
    Trivial,
    Linear,
    Hurwitz,
    FarebrotherCubic,
    FarebrotherQuartic,
    EnestromKakeya,
}

impl DecidedBy {
    pub fn is_exact(self) -> bool {
        self != DecidedBy::Numeric
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootReport<F> {
    /// Roots with multiplicity, sorted by modulus then argument.
    pub roots: Vec<Complex<F>>,
    pub max_modulus: F,
    /// Bound on the distance from each true root to the nearest reported cluster.
    pub residual_bound: F,
    pub verdict: Verdict,
    pub decided_by: DecidedBy,
    /// What the numbers alone say, independent of the exact criteria.
    pub numeric_verdict: Verdict,
    pub converged: bool,
}

pub const ITERATION_CAP: usize = 600;
pub const STEP_TOLERANCE: f64 = 1e-13;

/// Significant digits used when a modulus is written out.
pub const REPORT_DIGITS: usize = 15;

/// `x` rounded to `digits` significant decimal digits.
pub fn round_significant(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x)
}

pub(crate) fn serialize_modulus<S: serde::Serializer>(
    x: &f64,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_significant(*x, REPORT_DIGITS))
}

pub(crate) fn serialize_optional_modulus<S: serde::Serializer>(
    x: &Option<f64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(x) => serialize_modulus(x, s),
        None => s.serialize_none(),
    }
}

/// Roots of `p` in `f64`.
pub fn find_roots(p: &IntegerPolynomial) -> Result<RootReport<f64>> {
    find_roots_with::<f64>(p)
}

/// Roots of `p` with the iteration carried out in `F`.
pub fn find_roots_with<F: Float>(p: &IntegerPolynomial) -> Result<RootReport<F>> {
    let degree = p
        .degree()
        .ok_or_else(|| Error::Domain("the zero polynomial".into()))?;
    if degree == 0 {
        return Err(Error::Domain("a constant polynomial has no roots".into()));
    }
    // exact roots at 0 and 1 are split off first
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let shifted = IntegerPolynomial::new(p.coeffs()[zeros..].to_vec());
    let (core, ones) = shifted.factor_unit_roots();

    let (mut entries, mut converged) = numeric_entries::<F>(&core);
    let mut exact = exact_verdict(&core);
    let undecided = exact.is_none() && numeric_verdict(&entries) == Verdict::BoundaryUncertain;
    if (!converged || undecided) && !square_free_mod_prime(&core) {
        // repeated roots stall the iteration; work on the square-free parts instead
        let factors: Vec<(IntegerPolynomial, usize)> =
            square_free_decomposition(&core.to_rational())
                .into_iter()
                .enumerate()
                .filter(|(_, g)| g.degree().unwrap_or(0) > 0)
                .map(|(k, g)| (g.primitive_part(), k + 1))
                .collect();
        if factors.iter().any(|(_, k)| *k > 1) {
            entries.clear();
            converged = true;
            for (g, k) in &factors {
                let (part, ok) = numeric_entries::<F>(g);
                converged &= ok;
                for _ in 0..*k {
                    entries.extend_from_slice(&part);
                }
            }
            if exact.is_none() {
                // the root set is the union over the factors
                let parts: Option<Vec<_>> = factors.iter().map(|(g, _)| exact_verdict(g)).collect();
                exact = parts.and_then(|v| {
                    let outside = v.iter().find(|(inside, _)| !inside).copied();
                    outside.or_else(|| v.last().copied())
                });
            }
        }
    }
    entries.extend(std::iter::repeat_n((Complex::new(0.0, 0.0), 0.0), zeros));
    entries.extend(std::iter::repeat_n((Complex::new(1.0, 0.0), 0.0), ones));
    entries.sort_by(|a, b| compare_roots(&a.0, &b.0));

    let max_modulus = entries.iter().map(|(z, _)| z.norm()).fold(0.0, f64::max);
    let residual_bound = entries.iter().map(|(_, r)| *r).fold(0.0, f64::max);
    let numeric_verdict = numeric_verdict(&entries);
    let (verdict, decided_by) = match exact {
        Some((true, by)) => (Verdict::AllInClosedDisk, by),
        Some((false, by)) => (Verdict::RootOutside, by),
        None => (numeric_verdict, DecidedBy::Numeric),
    };

    let f = |x: f64| F::from(x).unwrap_or_else(F::nan);
    Ok(RootReport {
        roots: entries
            .iter()
            .map(|(z, _)| Complex::new(f(z.re), f(z.im)))
            .collect(),
        max_modulus: f(max_modulus),
        residual_bound: f(residual_bound),
        verdict,
        decided_by,
        numeric_verdict,
        converged,
    })
}

fn exact_verdict(p: &IntegerPolynomial) -> Option<(bool, DecidedBy)> {
    criteria::exact_low_degree(p)
        .or_else(|| enestrom_kakeya_applies(p).then_some((true, DecidedBy::EnestromKakeya)))
}

fn numeric_verdict(entries: &[(Complex<f64>, f64)]) -> Verdict {
    let max_modulus = entries.iter().map(|(z, _)| z.norm()).fold(0.0, f64::max);
    let residual_bound = entries.iter().map(|(_, r)| *r).fold(0.0, f64::max);
    if max_modulus > 1.0 + residual_bound {
        Verdict::RootOutside
    } else if entries.iter().all(|(z, r)| z.norm() + r <= 1.0) {
        Verdict::AllInClosedDisk
    } else {
        Verdict::BoundaryUncertain
    }
}

/// Roots of `p` with their inclusion radii, iterating in `F`; radii are
/// infinite when the iteration did not converge.
fn numeric_entries<F: Float>(p: &IntegerPolynomial) -> (Vec<(Complex<f64>, f64)>, bool) {
    if p.degree().unwrap_or(0) == 0 {
        return (Vec::new(), true);
    }
    let (approx, converged) = aberth::<F>(p);
    let polished = polish(p, &approx);
    let radii = inclusion_radii(p, &polished);
    // rounding to F moves each root by up to one ulp of its modulus
    let ulp = F::epsilon().to_f64().unwrap_or(0.0);
    let entries = polished
        .iter()
        .zip(&radii)
        .map(|(z, r)| match converged {
            true => (*z, r + z.norm() * ulp),
            false => (*z, f64::INFINITY),
        })
        .collect();
    (entries, converged)
}

fn compare_roots(a: &Complex<f64>, b: &Complex<f64>) -> Ordering {
    a.norm()
        .total_cmp(&b.norm())
        .then(a.arg().total_cmp(&b.arg()))
}

/// Aberth–Ehrlich iteration from a perturbed circle of Cauchy-bound radius.
fn aberth<F: Float>(p: &IntegerPolynomial) -> (Vec<Complex<f64>>, bool) {
    let n = p.degree().expect("nonconstant");
    let coeffs: Vec<F> = p
        .coeffs()
        .iter()
        .map(|c| F::from(c.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan))
        .collect();
    let lead = coeffs[n].abs();
    let radius = coeffs[..n]
        .iter()
        .fold(F::zero(), |acc, c| acc.max(c.abs() / lead))
        + F::one();
    let fc = |x: f64| F::from(x).expect("representable");
    let tau = fc(std::f64::consts::TAU);
    let mut z: Vec<Complex<F>> = (0..n)
        .map(|k| {
            let theta = tau * fc(k as f64) / fc(n as f64) + fc(0.4);
            // deterministic radial jitter avoids symmetric stalls
            let r = radius * (F::one() - fc(0.05 * ((k * 7 % 11) as f64) / 11.0));
            Complex::from_polar(r, theta)
        })
        .collect();

    let tol = fc(STEP_TOLERANCE).max(F::epsilon() * fc(8.0));
    let mut done = vec![false; n];
    for _ in 0..ITERATION_CAP {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (value, slope) = horner_f(&coeffs, z[i]);
            if value.is_zero() {
                done[i] = true;
                continue;
            }
            let newton = value / slope;
            let repulsion = (0..n)
                .filter(|&j| j != i)
                .fold(Complex::zero(), |acc: Complex<F>, j| {
                    acc + (z[i] - z[j]).inv()
                });
            let step = newton / (Complex::new(F::one(), F::zero()) - newton * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[i] = z[i] - step;
            if step.norm() <= tol * z[i].norm().max(F::one()) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            break;
        }
    }
    let out = z
        .iter()
        .map(|c| {
            Complex::new(
                c.re.to_f64().unwrap_or(f64::NAN),
                c.im.to_f64().unwrap_or(f64::NAN),
            )
        })
        .collect();
    (out, done.iter().all(|&d| d))
}

fn horner_f<F: Float>(coeffs: &[F], z: Complex<F>) -> (Complex<F>, Complex<F>) {
    let mut p = Complex::zero();
    let mut dp = Complex::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + Complex::new(c, F::zero());
    }
    (p, dp)
}

fn dd_coeffs(p: &IntegerPolynomial) -> Vec<Dd> {
    p.coeffs().iter().map(Dd::from_bigint).collect()
}

/// Newton steps in double-double; a step is kept only if it lowers `|p|`.
fn polish(p: &IntegerPolynomial, roots: &[Complex<f64>]) -> Vec<Complex<f64>> {
    let coeffs = dd_coeffs(p);
    roots
        .iter()
        .map(|&z0| {
            let mut z = CDd::new(z0.re, z0.im);
            let (mut value, mut slope) = horner(&coeffs, z);
            for _ in 0..8 {
                let v = value.to_f64();
                let s = slope.to_f64();
                let step = Complex::new(v.0, v.1) / Complex::new(s.0, s.1);
                if !step.re.is_finite() || !step.im.is_finite() || step.norm() == 0.0 {
                    break;
                }
                let next = z - CDd::new(step.re, step.im);
                let (nv, ns) = horner(&coeffs, next);
                if nv.norm_f64() >= value.norm_f64() {
                    break;
                }
                z = next;
                value = nv;
                slope = ns;
            }
            let (re, im) = z.to_f64();
            Complex::new(re, im)
        })
        .collect()
}

/// Radius per root covering its whole cluster of Weierstrass disks.
fn inclusion_radii(p: &IntegerPolynomial, roots: &[Complex<f64>]) -> Vec<f64> {
    let n = roots.len();
    let coeffs = dd_coeffs(p);
    let lead = p
        .leading()
        .and_then(BigInt::to_f64)
        .expect("nonconstant")
        .abs();
    let abs_coeffs: Vec<f64> = coeffs.iter().map(|c| c.to_f64().abs()).collect();
    let gamma = 4.0 * f64::EPSILON * n as f64;
    let disk: Vec<f64> = roots
        .iter()
        .enumerate()
        .map(|(i, &z)| {
            let (value, _) = horner(&coeffs, CDd::new(z.re, z.im));
            let magnitude = abs_coeffs
                .iter()
                .rev()
                .fold(0.0, |acc, c| acc * z.norm() + c);
            let residual = value.norm_f64() + 16.0 * n as f64 * DD_EPS * magnitude;
            let denom = (0..n)
                .filter(|&j| j != i)
                .fold(lead, |acc, j| acc * (z - roots[j]).norm());
            if denom == 0.0 {
                return f64::INFINITY;
            }
            n as f64 * residual / denom * (1.0 + gamma)
        })
        .collect();
    // connected components of overlapping disks
    let mut groups = crate::union_find::DisjointSets::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i] - roots[j]).norm() <= disk[i] + disk[j] {
                groups.union(i, j);
            }
        }
    }
    let members = groups.groups();
    let mut out = vec![0.0; n];
    for group in members {
        for &i in &group {
            out[i] = group
                .iter()
                .map(|&j| (roots[i] - roots[j]).norm() + disk[j])
                .fold(0.0, f64::max);
        }
    }
    out
}

/// Root scatter as `re,im,modulus` rows.
pub fn write_scatter<F: Float, W: Write>(roots: &[Complex<F>], writer: W) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(["re", "im", "modulus"])?;
    for z in roots {
        let (re, im) = (
            z.re.to_f64().unwrap_or(f64::NAN),
            z.im.to_f64().unwrap_or(f64::NAN),
        );
        csv.write_record([re.to_string(), im.to_string(), re.hypot(im).to_string()])?;
    }
    csv.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    #[test]
    fn significant_digits() {
        assert_eq!(round_significant(1.0018475452848614, 15), 1.00184754528486);
        assert_eq!(round_significant(0.0, 15), 0.0);
        assert_eq!(round_significant(-123456.789, 3), -123000.0);
    }

    #[test]
    fn repeated_roots_on_the_circle() {
        // (1 + q)^4 (1 + q^2)^2
        let p = &ip(&[1, 4, 6, 4, 1]) * &ip(&[1, 0, 2, 0, 1]);
        let r = find_roots(&p).unwrap();
        assert_eq!(r.roots.len(), 8);
        assert!(r.residual_bound < 1e-12);
        assert_eq!(r.verdict, Verdict::AllInClosedDisk);
        assert!(r.roots.iter().all(|z| (z.norm() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn perfect_square() {
        let r = find_roots(&ip(&[1, 2, 1])).unwrap();
        assert_eq!(r.roots.len(), 2);
        assert!((r.max_modulus - 1.0).abs() < 1e-6);
        assert!(r
            .roots
            .iter()
            .all(|z| (z - Complex::new(-1.0, 0.0)).norm() < 1e-6));
        assert_eq!(r.verdict, Verdict::AllInClosedDisk);
        assert_eq!(r.decided_by, DecidedBy::Hurwitz);
    }

    #[test]
    fn royle_sokal_modulus() {
        let h = ip(&[1, 3, 6, 10, 14, 18, 22, 26, 26, 22, 18, 14, 10, 6]);
        let r = find_roots(&h).unwrap();
        assert!((r.max_modulus - 1.0017).abs() < 1e-3);
        assert_eq!(r.verdict, Verdict::RootOutside);
        assert_eq!(r.decided_by, DecidedBy::Numeric);
        assert!(r.residual_bound < 1e-12);
    }

    #[test]
    fn exact_roots_are_split_off() {
        // q^2 (1 - q)^2 (1 + 2q)
        let p = &(&IntegerPolynomial::one_minus_q().pow(2) * &ip(&[1, 2])).shift(2) * &ip(&[1]);
        let r = find_roots(&p).unwrap();
        assert_eq!(r.roots.len(), 5);
        assert_eq!(r.roots[0], Complex::new(0.0, 0.0));
        assert_eq!(r.roots[4], Complex::new(1.0, 0.0));
        assert_eq!(r.numeric_verdict, Verdict::AllInClosedDisk);
        assert!(find_roots(&ip(&[3])).is_err());
    }

    #[test]
    fn generic_precision() {
        let r = find_roots_with::<f32>(&ip(&[1, 4, -1])).unwrap();
        assert!((r.max_modulus - (2.0 + 5f32.sqrt())).abs() < 1e-5);
        assert_eq!(r.verdict, Verdict::RootOutside);
    }

    #[test]
    fn scatter_rows() {
        let r = find_roots(&ip(&[-1, 0, 1])).unwrap();
        let mut buf = Vec::new();
        write_scatter(&r.roots, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3);
        assert!(text.starts_with("re,im,modulus\n"));
    }
}

//! Exact univariate polynomials, the F-vector/H-vector transform and the
//! reliability polynomial of a complex.
//!
//! Coefficients are stored in ascending degree with no trailing zeros, so the
//! zero polynomial is the empty coefficient list. The variable is always `q`,
//! the failure probability.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense polynomial with coefficients in `T`, ascending degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Zero> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn map<U: Clone + Zero>(&self, f: impl FnMut(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Clone + Zero + One> Polynomial<T> {
    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The monomial `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = T::one();
        Self { coeffs }
    }
}

impl<T> Polynomial<T>
where
    T: Clone
        + Zero
        + One
        + Neg<Output = T>
        + for<'a> Mul<&'a T, Output = T>
        + for<'a> Add<&'a T, Output = T>,
{
    /// `1 - q`.
    pub fn one_minus_q() -> Self {
        Self::new(vec![T::one(), -T::one()])
    }

    /// `1 - q^k`.
    pub fn one_minus_q_pow(k: usize) -> Self {
        if k == 0 {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[0] = T::one();
        coeffs[k] = -T::one();
        Self { coeffs }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x + c)
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    pub fn derivative(&self) -> Self
    where
        T: FromPrimitive,
    {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * &T::from_usize(i).expect("index fits"))
                .collect(),
        )
    }

    /// `z^n p(1/z)` for `n = deg p`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }
}

impl<T> Add for &Polynomial<T>
where
    T: Clone + Zero + for<'b> Add<&'b T, Output = T>,
{
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a.clone() + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Polynomial::new(coeffs)
    }
}

impl<T> Sub for &Polynomial<T>
where
    T: Clone + Zero + Neg<Output = T> + for<'b> Add<&'b T, Output = T>,
{
    type Output = Polynomial<T>;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn sub(self, rhs: Self) -> Polynomial<T> {
        let neg = Polynomial {
            coeffs: rhs.coeffs.iter().map(|c| -c.clone()).collect(),
        };
        self + &neg
    }
}

impl<T> Mul for &Polynomial<T>
where
    T: Clone + Zero + for<'b> Mul<&'b T, Output = T> + for<'b> Add<&'b T, Output = T>,
{
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let prod = a.clone() * b;
                coeffs[i + j] = std::mem::replace(&mut coeffs[i + j], T::zero()) + &prod;
            }
        }
        Polynomial::new(coeffs)
    }
}

impl<T> Neg for &Polynomial<T>
where
    T: Clone + Zero + Neg<Output = T>,
{
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: fmt::Display + Zero + One + Signed + Clone> fmt::Display for Polynomial<T> {
    /// Descending-degree rendering, e.g. `-q^2 + 4q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "q")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

pub type IntegerPolynomial = Polynomial<BigInt>;
pub type RationalPolynomial = Polynomial<BigRational>;

impl IntegerPolynomial {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RationalPolynomial {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Exact quotient by `1 - q`, or `None` if `q = 1` is not a root.
    pub fn div_one_minus_q(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // synthetic division by (q - 1), then negate
        let n = self.coeffs.len();
        let mut quotient = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for i in (1..n).rev() {
            carry += &self.coeffs[i];
            quotient[i - 1] = carry.clone();
        }
        carry += &self.coeffs[0];
        if !carry.is_zero() {
            return None;
        }
        Some(Self::new(quotient.into_iter().map(|c| -c).collect()))
    }

    /// Splits off the largest power of `1 - q`: returns `(h, t)` with `self = (1-q)^t h`.
    pub fn factor_unit_roots(&self) -> (Self, usize) {
        let mut h = self.clone();
        let mut t = 0;
        if h.is_zero() {
            return (h, 0);
        }
        while let Some(next) = h.div_one_minus_q() {
            h = next;
            t += 1;
        }
        (h, t)
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.to_rational().eval(x)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }
}

impl RationalPolynomial {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[d].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quotient = vec![BigRational::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let factor = &rem[i] / &lead;
            if factor.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i - d + j] -= &factor * c;
            }
            quotient[i - d] = factor;
        }
        rem.truncate(d);
        (Self::new(quotient), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => {
                let inv = lead.recip();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            // primitive remainders keep the coefficients small
            let r = a.div_rem(&b).1.primitive_part().to_rational();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer polynomial with the same roots and positive leading coefficient.
    pub fn primitive_part(&self) -> IntegerPolynomial {
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| {
            num_integer::Integer::lcm(&acc, c.denom())
        });
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints
            .iter()
            .fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
        if g.is_zero() {
            return Polynomial::zero();
        }
        let sign = if ints.last().is_some_and(|c| c.is_negative()) {
            -g
        } else {
            g
        };
        Polynomial::new(ints.into_iter().map(|c| c / &sign).collect())
    }
}

/// Face counts `F_0..F_d` by cardinality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<BigInt>);

/// Binomial transform of an F-vector; entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector(pub Vec<BigInt>);

impl FVector {
    pub fn from_u64s(values: &[u64]) -> Self {
        FVector(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    /// Dimension `d`, i.e. the last index; `None` for the void complex.
    pub fn dimension(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }

    pub fn polynomial(&self) -> IntegerPolynomial {
        Polynomial::new(self.0.clone())
    }
}

impl HVector {
    pub fn from_i64s(values: &[i64]) -> Self {
        HVector(values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn dimension(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn total(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }

    pub fn polynomial(&self) -> IntegerPolynomial {
        Polynomial::new(self.0.clone())
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

/// `H_k = sum_{i<=k} F_i (-1)^(k-i) C(d-i, k-i)`.
pub fn f_to_h(f: &FVector) -> HVector {
    let Some(d) = f.dimension() else {
        return HVector(Vec::new());
    };
    let h = (0..=d)
        .map(|k| {
            (0..=k).fold(BigInt::zero(), |acc, i| {
                let term = &f.0[i] * binom(d - i, k - i);
                if (k - i) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    HVector(h)
}

/// Inverse transform: `F_k = sum_{i<=k} H_i C(d-i, k-i)`.
pub fn h_to_f(h: &HVector) -> FVector {
    let Some(d) = h.dimension() else {
        return FVector(Vec::new());
    };
    let f = (0..=d)
        .map(|k| (0..=k).fold(BigInt::zero(), |acc, i| acc + &h.0[i] * binom(d - i, k - i)))
        .collect();
    FVector(f)
}

/// Reliability polynomial held as `(1 - q)^unit_root_multiplicity * h(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reliability {
    pub h: IntegerPolynomial,
    pub unit_root_multiplicity: usize,
}

impl Reliability {
    pub fn expand(&self) -> IntegerPolynomial {
        &IntegerPolynomial::one_minus_q().pow(self.unit_root_multiplicity) * &self.h
    }

    /// Re-factors so that `h(1) != 0`.
    pub fn normalized(&self) -> Self {
        let (h, t) = self.h.factor_unit_roots();
        Reliability {
            h,
            unit_root_multiplicity: self.unit_root_multiplicity + t,
        }
    }
}

/// Wire form `{ "coeffs": ["c0", ...], "unit_root_multiplicity": k }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialFile {
    pub coeffs: Vec<String>,
    #[serde(default)]
    pub unit_root_multiplicity: usize,
}

impl From<&Reliability> for PolynomialFile {
    fn from(r: &Reliability) -> Self {
        PolynomialFile {
            coeffs: r.h.to_strings(),
            unit_root_multiplicity: r.unit_root_multiplicity,
        }
    }
}

impl TryFrom<&PolynomialFile> for Reliability {
    type Error = Error;

    fn try_from(file: &PolynomialFile) -> Result<Self> {
        let coeffs = file
            .coeffs
            .iter()
            .map(|s| {
                s.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Malformed(format!("coefficient {s:?} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Reliability {
            h: Polynomial::new(coeffs),
            unit_root_multiplicity: file.unit_root_multiplicity,
        })
    }
}

impl SimplicialComplex {
    pub fn f_vector(&self) -> FVector {
        FVector(
            self.faces_by_size()
                .iter()
                .map(|level| BigInt::from(level.len()))
                .collect(),
        )
    }

    pub fn h_vector(&self) -> HVector {
        f_to_h(&self.f_vector())
    }

    /// `Rel = (1-q)^(m-d) h(q)` through the F-to-H transform.
    pub fn reliability(&self) -> Result<Reliability> {
        reliability_polynomial(self)
    }
}

pub fn reliability_polynomial(c: &SimplicialComplex) -> Result<Reliability> {
    let d = c.dimension().ok_or(Error::ZeroReliability)?;
    Ok(Reliability {
        h: c.h_vector().polynomial(),
        unit_root_multiplicity: c.ground_size() - d,
    })
}

/// Direct sum over faces of `q^|F| (1-q)^(m-|F|)`, independent of the H-vector path.
pub fn reliability_by_faces(c: &SimplicialComplex) -> IntegerPolynomial {
    let m = c.ground_size();
    let one_minus_q = IntegerPolynomial::one_minus_q();
    let powers: Vec<IntegerPolynomial> = (0..=m).map(|k| one_minus_q.pow(k)).collect();
    c.enumerate_faces()
        .into_iter()
        .fold(Polynomial::zero(), |acc, face| {
            let k = face.len();
            &acc + &powers[m - k].shift(k)
        })
}

/// Outcome of the Brown–Colbourn inequalities for one value of `b`.
#[derive(Clone, Debug, PartialEq)]
pub struct BrownColbournReport<S> {
    pub b: S,
    /// `(-1)^j sum_{i<=j} (-b)^i H_i` for `j = 0..=d`.
    pub values: Vec<S>,
    pub holds: Vec<bool>,
}

impl<S: Scalar> BrownColbournReport<S> {
    pub fn all_hold(&self) -> bool {
        self.holds.iter().all(|&h| h)
    }

    /// The `j = d` case, `sum_i (-1)^(d-i) H_i >= 0`.
    pub fn top_holds(&self) -> bool {
        self.holds.last().copied().unwrap_or(true)
    }
}

pub fn brown_colbourn_check<S: Scalar>(h: &HVector, b: &S) -> Result<BrownColbournReport<S>> {
    if *b < S::one() {
        return Err(Error::Domain(format!("b = {b:?} must be at least 1")));
    }
    let mut values = Vec::with_capacity(h.0.len());
    let mut partial = S::zero();
    let mut power = S::one();
    let neg_b = -b.clone();
    for (j, hj) in h.0.iter().enumerate() {
        partial = partial + power.clone() * S::from_bigint(hj);
        power = power * neg_b.clone();
        values.push(if j % 2 == 0 {
            partial.clone()
        } else {
            -partial.clone()
        });
    }
    let holds = values.iter().map(|v| *v >= S::zero()).collect();
    Ok(BrownColbournReport {
        b: b.clone(),
        values,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn arithmetic_basics() {
        let a = ip(&[1, 2]);
        let b = ip(&[-1, 0, 3]);
        assert_eq!(&a + &b, ip(&[0, 2, 3]));
        assert_eq!(&a - &a, IntegerPolynomial::zero());
        assert_eq!(&a * &b, ip(&[-1, -2, 3, 6]));
        assert_eq!(a.pow(3), ip(&[1, 6, 12, 8]));
        assert_eq!(b.derivative(), ip(&[0, 6]));
        assert_eq!(b.eval(&BigInt::from(2)), BigInt::from(11));
        assert_eq!(ip(&[0, 0]).degree(), None);
        assert_eq!(b.to_string(), "3q^2 - 1");
        assert_eq!(ip(&[1, 4, -1]).to_string(), "-q^2 + 4q + 1");
    }

    #[test]
    fn unit_root_factoring() {
        let h = ip(&[1, 3, 6, 6]);
        let full = &IntegerPolynomial::one_minus_q().pow(3) * &h;
        assert_eq!(full.factor_unit_roots(), (h.clone(), 3));
        assert_eq!(h.div_one_minus_q(), None);
    }

    #[test]
    fn rational_division_and_gcd() {
        let a = ip(&[-1, 0, 1]).to_rational();
        let b = ip(&[1, 1]).to_rational();
        let (quo, rem) = a.div_rem(&b);
        assert_eq!(quo, ip(&[-1, 1]).to_rational());
        assert!(rem.is_zero());
        let c = ip(&[2, 4, 2]).to_rational();
        assert_eq!(a.gcd(&c), b);
        let half = RationalPolynomial::new(vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-3).into(), 4.into()),
        ]);
        assert_eq!(half.primitive_part(), ip(&[-2, 3]));
    }

    #[test]
    fn uniform_h_vector() {
        // F_i = C(m, i) for i <= d gives H_i = C(m-d+i-1, i) when m > d
        for m in 1..9usize {
            for d in 0..m {
                let f = FVector((0..=d).map(|i| binom(m, i)).collect());
                let expected: Vec<BigInt> = (0..=d).map(|i| binom(m - d + i - 1, i)).collect();
                assert_eq!(f_to_h(&f).0, expected, "m={m} d={d}");
            }
            // the full simplex has h = 1
            let f = FVector((0..=m).map(|i| binom(m, i)).collect());
            let mut expected = vec![BigInt::zero(); m + 1];
            expected[0] = BigInt::one();
            assert_eq!(f_to_h(&f).0, expected);
        }
    }

    #[test]
    fn transform_examples() {
        assert_eq!(f_to_h(&FVector::from_u64s(&[1])).0, big(&[1]));
        assert_eq!(f_to_h(&FVector::from_u64s(&[1, 6, 4])).0, big(&[1, 4, -1]));
        assert_eq!(h_to_f(&HVector::from_i64s(&[1])).0, big(&[1]));
        assert_eq!(
            h_to_f(&HVector::from_i64s(&[1, 3, 6, 6])).0,
            big(&[1, 6, 15, 16])
        );
    }

    #[test]
    fn reliability_of_small_complexes() {
        let p6 = SimplicialComplex::matched_path(6);
        let r = p6.reliability().unwrap();
        assert_eq!(r.h, ip(&[1, 4, -1]));
        assert_eq!(r.unit_root_multiplicity, 4);
        assert_eq!(r.expand(), reliability_by_faces(&p6));

        let points =
            SimplicialComplex::from_sets(5, &[vec![0], vec![1], vec![2], vec![3], vec![4]])
                .unwrap();
        assert_eq!(points.reliability().unwrap().h, ip(&[1, 4]));

        let s = SimplicialComplex::simplex(4);
        assert_eq!(s.reliability().unwrap().expand(), IntegerPolynomial::one());

        assert!(matches!(
            SimplicialComplex::empty(3).reliability(),
            Err(Error::ZeroReliability)
        ));
    }

    #[test]
    fn brown_colbourn_examples() {
        let one = BigRational::one();
        let r = brown_colbourn_check(&HVector::from_i64s(&[1, 3, 6, 6]), &one).unwrap();
        assert!(r.all_hold());
        assert_eq!(
            r.values.last().unwrap(),
            &BigRational::from_integer(2.into())
        );

        let trivial = brown_colbourn_check(
            &HVector::from_i64s(&[1]),
            &BigRational::from_integer(7.into()),
        )
        .unwrap();
        assert!(trivial.all_hold());

        let p6 = brown_colbourn_check(&HVector::from_i64s(&[1, 4, -1]), &one).unwrap();
        assert_eq!(p6.values[2], BigRational::from_integer((-4).into()));
        assert!(!p6.holds[2]);

        let half = BigRational::new(1.into(), 2.into());
        assert!(matches!(
            brown_colbourn_check(&HVector::from_i64s(&[1, 2]), &half),
            Err(Error::Domain(_))
        ));
        // same check in floating point
        let f = brown_colbourn_check(&HVector::from_i64s(&[1, 3, 6, 6]), &1.5f64).unwrap();
        assert!(f.all_hold());
    }

    #[test]
    fn polynomial_file_round_trip() {
        let r = Reliability {
            h: ip(&[1, 3, 6, 6]),
            unit_root_multiplicity: 3,
        };
        let file = PolynomialFile::from(&r);
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(
            text,
            r#"{"coeffs":["1","3","6","6"],"unit_root_multiplicity":3}"#
        );
        let back: PolynomialFile = serde_json::from_str(&text).unwrap();
        assert_eq!(Reliability::try_from(&back).unwrap(), r);
        let bad = PolynomialFile {
            coeffs: vec!["x".into()],
            unit_root_multiplicity: 0,
        };
        assert!(Reliability::try_from(&bad).is_err());
    }
}

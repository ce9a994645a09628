//! Exact real-root isolation with Sturm sequences over square-free factors.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::{IntegerPolynomial, RationalPolynomial};

/// A real root isolated to `[lo, hi]`, or pinned exactly when `lo == hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealRoot {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl RealRoot {
    pub fn approx(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RealRootReport {
    /// Distinct real roots in increasing order.
    pub roots: Vec<RealRoot>,
    /// Every real root lies in `[-1, 0)` or equals `1`.
    pub in_matroid_range: bool,
}

/// `(g_1, g_2, ...)` with `p = c * prod g_k^k`, each `g_k` square-free and monic.
pub fn square_free_decomposition(p: &RationalPolynomial) -> Vec<RationalPolynomial> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a = p.gcd(&dp);
    let mut b = p.div_rem(&a).0;
    let mut d = &dp.div_rem(&a).0 - &b.derivative();
    while b.degree().unwrap_or(0) > 0 {
        let g = b.gcd(&d);
        let next_b = b.div_rem(&g).0;
        let c = d.div_rem(&g).0;
        d = &c - &next_b.derivative();
        out.push(g);
        b = next_b;
    }
    out
}

const SQUARE_FREE_PRIME: u64 = 4_294_967_291;

/// True when `gcd(p, p')` is constant modulo a large prime, which proves `p`
/// square-free over the rationals. False means undecided.
pub fn square_free_mod_prime(p: &IntegerPolynomial) -> bool {
    let m = SQUARE_FREE_PRIME;
    let modulus = BigInt::from(m);
    let reduce = |c: &BigInt| {
        let r = c % &modulus;
        let r = if r.is_negative() { r + &modulus } else { r };
        r.to_u64().unwrap_or(0)
    };
    let mut a: Vec<u64> = p.coeffs().iter().map(reduce).collect();
    let n = a.len().saturating_sub(1);
    if n == 0 || a[n] == 0 || n as u64 >= m {
        return false;
    }
    let mut b: Vec<u64> = (1..=n).map(|i| a[i] * i as u64 % m).collect();
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(b[b.len() - 1], m - 2, m);
        while a.len() >= b.len() {
            let lead = a[a.len() - 1] * inv % m;
            let shift = a.len() - b.len();
            for (i, &c) in b.iter().enumerate() {
                a[shift + i] = (a[shift + i] + m - lead * c % m) % m;
            }
            a.pop();
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() == 1
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

struct Sturm(Vec<RationalPolynomial>);

impl Sturm {
    fn new(p: &RationalPolynomial) -> Self {
        let mut seq = vec![p.clone(), p.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            // positive rescaling keeps the sign pattern and the numbers small
            let r = -&r.primitive_part().to_rational().scale(&sign_of_leading(&r));
            seq.push(r);
        }
        Sturm(seq)
    }

    fn changes(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    fn at(&self, x: &BigRational) -> usize {
        Self::changes(self.0.iter().map(|p| sign(&p.eval(x))))
    }

    fn at_infinity(&self, positive: bool) -> usize {
        Self::changes(self.0.iter().map(|p| {
            let s = sign(p.leading().expect("nonzero"));
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -s
            } else {
                s
            }
        }))
    }

    /// Roots in `(a, b]`.
    fn count(&self, a: &BigRational, b: &BigRational) -> usize {
        self.at(a) - self.at(b)
    }
}

fn sign_of_leading(p: &RationalPolynomial) -> BigRational {
    // primitive_part makes the leading coefficient positive; restore the sign
    if p.leading().is_some_and(Signed::is_negative) {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Cauchy bound: every root has modulus below it.
fn cauchy_bound(p: &RationalPolynomial) -> BigRational {
    let lead = p.leading().expect("nonzero").abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |a, b| if b > a { b } else { a });
    max + rational(1)
}

fn isolate(
    sturm: &Sturm,
    p: &RationalPolynomial,
    lo: BigRational,
    hi: BigRational,
    width: &BigRational,
    multiplicity: usize,
    out: &mut Vec<RealRoot>,
) {
    let n = sturm.count(&lo, &hi);
    if n == 0 {
        return;
    }
    if n == 1 && p.eval(&hi).is_zero() {
        out.push(RealRoot {
            lo: hi.clone(),
            hi,
            multiplicity,
        });
        return;
    }
    if n == 1 && &hi - &lo <= *width {
        out.push(RealRoot {
            lo,
            hi,
            multiplicity,
        });
        return;
    }
    let mid = (&lo + &hi) / rational(2);
    isolate(sturm, p, lo, mid.clone(), width, multiplicity, out);
    isolate(sturm, p, mid, hi, width, multiplicity, out);
}

/// Isolates every real root to an interval of width at most `width`.
pub fn real_roots(p: &IntegerPolynomial, width: &BigRational) -> Vec<RealRoot> {
    let p = p.to_rational();
    let mut out = Vec::new();
    for (k, g) in square_free_decomposition(&p).iter().enumerate() {
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let sturm = Sturm::new(g);
        let bound = cauchy_bound(g);
        isolate(&sturm, g, -bound.clone(), bound, width, k + 1, &mut out);
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Checks that every real root of `p` lies in `[-1, 0) ∪ {1}`.
pub fn real_root_classification(p: &IntegerPolynomial) -> RealRootReport {
    let rp = p.to_rational();
    let (minus_one, zero, one) = (rational(-1), rational(0), rational(1));
    let mut in_range = true;
    for g in square_free_decomposition(&rp) {
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let sturm = Sturm::new(&g);
        let total = sturm.at_infinity(false) - sturm.at_infinity(true);
        let at_minus_one = usize::from(g.eval(&minus_one).is_zero());
        let at_one = usize::from(g.eval(&one).is_zero());
        // (-1, 0] minus a possible root at 0
        let inside = sturm.count(&minus_one, &zero) - usize::from(g.eval(&zero).is_zero());
        if at_minus_one + inside + at_one != total {
            in_range = false;
        }
    }
    let width = BigRational::new(BigInt::one(), BigInt::from(1u64 << 40));
    RealRootReport {
        roots: real_roots(p, &width),
        in_matroid_range: in_range,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntegerPolynomial {
        IntegerPolynomial::from_i64s(c)
    }

    #[test]
    fn yun_splits_multiplicities() {
        // (q - 1)^3 (q + 2)
        let p = &IntegerPolynomial::one_minus_q().pow(3) * &ip(&[2, 1]);
        let parts = square_free_decomposition(&p.to_rational());
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], ip(&[2, 1]).to_rational());
        assert!(parts[1].degree() == Some(0));
        assert_eq!(parts[2], ip(&[-1, 1]).to_rational());
    }

    #[test]
    fn modular_square_free_test() {
        assert!(square_free_mod_prime(&ip(&[1, 4, -1])));
        assert!(square_free_mod_prime(&ip(&[
            1, 3, 6, 10, 14, 18, 22, 26, 26, 22, 18, 14, 10, 6
        ])));
        assert!(!square_free_mod_prime(&ip(&[4, 8, 4])));
        let p = &ip(&[1, 1]).pow(4) * &ip(&[1, 0, 1]).pow(2);
        assert!(!square_free_mod_prime(&p));
        assert!(!square_free_mod_prime(&ip(&[7])));
    }

    #[test]
    fn cographic_k4() {
        let p = &IntegerPolynomial::one_minus_q().pow(3) * &ip(&[1, 3, 6, 6]);
        let report = real_root_classification(&p);
        assert!(report.in_matroid_range);
        assert_eq!(report.roots.len(), 2);
        let r = &report.roots[0];
        assert!(r.approx() > -1.0 && r.approx() < 0.0);
        assert_eq!(r.multiplicity, 1);
        assert!(report.roots[1].is_exact());
        assert_eq!(report.roots[1].lo, rational(1));
        assert_eq!(report.roots[1].multiplicity, 3);
    }

    #[test]
    fn linear_reliability() {
        for m in 2..7 {
            let report = real_root_classification(&ip(&[1, m - 1]));
            assert!(report.in_matroid_range);
            let expected = -1.0 / (m - 1) as f64;
            assert!((report.roots[0].approx() - expected).abs() < 1e-9);
        }
    }

    #[test]
    fn p6_fails() {
        let report = real_root_classification(&ip(&[1, 4, -1]));
        assert!(!report.in_matroid_range);
        let big = report
            .roots
            .iter()
            .map(RealRoot::approx)
            .fold(f64::MIN, f64::max);
        assert!((big - (2.0 + 5f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn boundary_points() {
        // roots at -1 (kept) and 0 (rejected)
        assert!(real_root_classification(&ip(&[1, 1])).in_matroid_range);
        assert!(!real_root_classification(&ip(&[0, 1, 1])).in_matroid_range);
        assert!(!real_root_classification(&ip(&[2, 1])).in_matroid_range);
        // no real roots at all
        assert!(real_root_classification(&ip(&[1, 0, 1])).in_matroid_range);
    }
}

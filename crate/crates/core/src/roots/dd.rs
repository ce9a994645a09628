//! Double-double arithmetic for residual evaluation and Newton polishing.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{FromPrimitive, ToPrimitive};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Unit roundoff of the format, `2^-104`.
pub const DD_EPS: f64 = 4.930380657631324e-32;

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Nearest double-double to an integer; exact below `2^106`.
    pub fn from_bigint(x: &BigInt) -> Self {
        let hi = x.to_f64().unwrap_or(f64::INFINITY);
        let Some(exact) = BigInt::from_f64(hi) else {
            return Dd::from_f64(hi);
        };
        let lo = (x - exact).to_f64().unwrap_or(0.0);
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, o.hi);
        let (t, f) = two_sum(self.lo, o.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, o.hi);
        let e = e + (self.hi * o.lo + self.lo * o.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

/// Complex number over [`Dd`].
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CDd {
    pub re: Dd,
    pub im: Dd,
}

impl CDd {
    pub fn new(re: f64, im: f64) -> Self {
        CDd {
            re: Dd::from_f64(re),
            im: Dd::from_f64(im),
        }
    }

    pub fn to_f64(self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn norm_f64(self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }
}

impl Add for CDd {
    type Output = CDd;
    fn add(self, o: CDd) -> CDd {
        CDd {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for CDd {
    type Output = CDd;
    fn sub(self, o: CDd) -> CDd {
        CDd {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Mul for CDd {
    type Output = CDd;
    fn mul(self, o: CDd) -> CDd {
        CDd {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }
}

/// `p(z)` and `p'(z)` by Horner's rule; coefficients ascending.
pub fn horner(coeffs: &[Dd], z: CDd) -> (CDd, CDd) {
    let mut p = CDd::default();
    let mut dp = CDd::default();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z
            + CDd {
                re: c,
                im: Dd::ZERO,
            };
    }
    (p, dp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_keep_low_bits() {
        let third = Dd::from_f64(1.0 / 3.0);
        let three = Dd::from_f64(3.0);
        let r = third * three - Dd::from_f64(1.0);
        // 1/3 rounded times 3 misses 1 by about 5.5e-17, which double-double sees
        assert!(r.to_f64() != 0.0);
        assert!(r.to_f64().abs() < 1e-16);
    }

    #[test]
    fn big_integers_split_exactly() {
        let x = BigInt::from(2u64).pow(80) + BigInt::from(12345);
        let d = Dd::from_bigint(&x);
        assert_eq!(d.hi, 2f64.powi(80));
        assert_eq!(d.lo, 12345.0);
        assert_eq!(Dd::from_bigint(&BigInt::from(-7)).to_f64(), -7.0);
    }

    #[test]
    fn horner_matches_direct() {
        let coeffs: Vec<Dd> = [1.0, -3.0, 2.0].map(Dd::from_f64).to_vec();
        let (p, dp) = horner(&coeffs, CDd::new(2.0, 1.0));
        // 1 - 3z + 2z^2 at 2+i = 1 - 6 - 3i + 2(3 + 4i) = 1 + 5i
        assert_eq!(p.to_f64(), (1.0, 5.0));
        // -3 + 4z = 5 + 4i
        assert_eq!(dp.to_f64(), (5.0, 4.0));
    }
}

//! Scalar abstraction for the exact criteria and numeric routines.
//!
//! The stability criteria and the Brown–Colbourn check are written once over
//! [`Scalar`] and instantiated with [`BigRational`] for exact verdicts or with
//! `f64`/`f32` for quick floating point screening.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

pub trait Scalar: Clone + Debug + Num + Signed + PartialOrd {
    fn from_bigint(value: &BigInt) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_bigint(&BigInt::from(value))
    }

    fn to_f64(&self) -> f64;
}

impl Scalar for BigRational {
    fn from_bigint(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn from_bigint(value: &BigInt) -> Self {
        value.to_f64().unwrap_or(f64::NAN)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_bigint(value: &BigInt) -> Self {
        value.to_f32().unwrap_or(f32::NAN)
    }

    fn to_f64(&self) -> f64 {
        f64::from(*self)
    }
}

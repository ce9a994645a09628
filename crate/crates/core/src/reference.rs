//! Published reference values used by the demos and the acceptance checks.

use crate::constructions::KVector;
use crate::poly::{IntegerPolynomial, Reliability};

/// h-part of the Royle–Sokal reliability, ascending.
pub const ROYLE_SOKAL_H: [i64; 14] = [1, 3, 6, 10, 14, 18, 22, 26, 26, 22, 18, 14, 10, 6];
pub const ROYLE_SOKAL_UNIT_ROOTS: usize = 3;
/// Published to two significant figures after the point.
pub const ROYLE_SOKAL_MAX_MODULUS: f64 = 1.0017;
/// Royle–Sokal as replacements on the cographic matroid of `K_4`.
pub const ROYLE_SOKAL_KVEC: [usize; 6] = [6, 1, 6, 1, 1, 1];

/// h-part of the Fano matroid under `FANO_KVEC`, ascending.
pub const FANO_H: [i64; 24] = [
    1, 4, 10, 20, 35, 56, 84, 120, 165, 218, 278, 343, 411, 476, 528, 557, 552, 504, 418, 311, 200,
    106, 46, 13,
];
pub const FANO_UNIT_ROOTS: usize = 4;
pub const FANO_KVEC: [usize; 7] = [1, 4, 4, 4, 5, 4, 5];

/// Notable k-vectors for the Fano matroid with their maximum root modulus.
pub const FANO_TABLE: [([usize; 7], f64); 6] = [
    ([1, 4, 4, 4, 5, 4, 5], 1.0018475452848614),
    ([2, 2, 5, 2, 5, 5, 5], 1.003722670361891),
    ([3, 3, 3, 5, 5, 5, 3], 1.001595847748084),
    ([3, 3, 5, 3, 5, 5, 5], 1.0070841870536522),
    ([4, 4, 4, 5, 5, 5, 4], 1.0076584896344196),
    ([4, 4, 5, 4, 5, 5, 5], 1.0087285165185493),
];

pub fn royle_sokal_reliability() -> Reliability {
    Reliability {
        h: IntegerPolynomial::from_i64s(&ROYLE_SOKAL_H),
        unit_root_multiplicity: ROYLE_SOKAL_UNIT_ROOTS,
    }
}

pub fn fano_reliability() -> Reliability {
    Reliability {
        h: IntegerPolynomial::from_i64s(&FANO_H),
        unit_root_multiplicity: FANO_UNIT_ROOTS,
    }
}

pub fn kvec(k: &[usize]) -> KVector {
    KVector::new(k.to_vec()).expect("positive entries")
}

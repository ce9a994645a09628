//! Thickening, k-replacement, the substituted generating polynomial and the
//! exhaustive k-vector search.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex, MAX_GROUND_SET};
use crate::error::{Error, Result};
use crate::poly::{IntegerPolynomial, Polynomial, Reliability};
use crate::roots::{find_roots, round_significant, Verdict, REPORT_DIGITS};

/// Multiplicities `k_1..k_m`, one per ground element, each at least 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KVector(Vec<usize>);

impl KVector {
    pub fn new(k: Vec<usize>) -> Result<Self> {
        if k.contains(&0) {
            return Err(Error::Domain("every k_i must be at least 1".into()));
        }
        Ok(KVector(k))
    }

    pub fn ones(m: usize) -> Self {
        KVector(vec![1; m])
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total ground-set size after replacement.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Display for KVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for KVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '[', '{'])
            .trim_end_matches([')', ']', '}']);
        let k = trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Malformed(format!("bad k-vector entry {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        KVector::new(k)
    }
}

impl Serialize for KVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

fn check_element(c: &SimplicialComplex, v: usize, k: usize) -> Result<()> {
    if v >= c.ground_size() {
        return Err(Error::Domain(format!(
            "element {v} is not in the ground set"
        )));
    }
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    if c.ground_size() + k - 1 > MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(c.ground_size() + k - 1));
    }
    Ok(())
}

/// Copies of `v`: `v` itself followed by the `k - 1` appended elements.
fn copies(m: usize, v: usize, k: usize) -> Vec<usize> {
    std::iter::once(v).chain(m..m + k - 1).collect()
}

/// Places `k - 1` new elements in parallel with `v`; they are appended after
/// the existing ground set.
pub fn thicken(c: &SimplicialComplex, v: usize, k: usize) -> Result<SimplicialComplex> {
    check_element(c, v, k)?;
    let m = c.ground_size();
    let facets = c.facets().iter().flat_map(|&f| {
        if f.contains(v) {
            let base = f.without(v);
            copies(m, v, k).into_iter().map(|x| base.with(x)).collect()
        } else {
            vec![f]
        }
    });
    SimplicialComplex::from_facets(m + k - 1, facets.collect::<Vec<_>>())
}

/// Replaces `v` by `k` elements that enter faces either all together (where
/// `v` did) or as a proper subset (where `v` did not).
pub fn replace(c: &SimplicialComplex, v: usize, k: usize) -> Result<SimplicialComplex> {
    check_element(c, v, k)?;
    let m = c.ground_size();
    let block = Face::from_elements(copies(m, v, k))?;
    let facets = c.facets().iter().flat_map(|&f| {
        if f.contains(v) {
            vec![f.without(v).union(block)]
        } else if k == 1 {
            vec![f]
        } else {
            block.iter().map(|x| f.union(block.without(x))).collect()
        }
    });
    SimplicialComplex::from_facets(m + k - 1, facets.collect::<Vec<_>>())
}

/// Sequential replacement at every element with multiplicities `kvec`.
pub fn replace_all(c: &SimplicialComplex, kvec: &KVector) -> Result<SimplicialComplex> {
    check_length(c, kvec)?;
    kvec.as_slice()
        .iter()
        .enumerate()
        .try_fold(c.clone(), |acc, (v, &k)| replace(&acc, v, k))
}

fn check_length(c: &SimplicialComplex, kvec: &KVector) -> Result<()> {
    if kvec.len() != c.ground_size() {
        return Err(Error::Domain(format!(
            "k-vector has {} entries for {} elements",
            kvec.len(),
            c.ground_size()
        )));
    }
    Ok(())
}

/// Reliability of the full k-replacement: the generating polynomial with
/// `q_i -> q^k_i`, `p_i -> 1 - q^k_i`, evaluated face by face.
pub fn gen_substitute(c: &SimplicialComplex, kvec: &KVector) -> Result<Reliability> {
    check_length(c, kvec)?;
    if c.is_void() {
        return Err(Error::ZeroReliability);
    }
    let k = kvec.as_slice();
    let absent: Vec<IntegerPolynomial> = k
        .iter()
        .map(|&ki| IntegerPolynomial::one_minus_q_pow(ki))
        .collect();
    let all = Face::full(c.ground_size());
    let total = c
        .enumerate_faces()
        .into_iter()
        .fold(Polynomial::zero(), |acc, face| {
            let shift: usize = face.iter().map(|i| k[i]).sum();
            let term = all
                .difference(face)
                .iter()
                .fold(IntegerPolynomial::monomial(shift), |t, j| &t * &absent[j]);
            &acc + &term
        });
    Ok(Reliability {
        h: total,
        unit_root_multiplicity: 0,
    }
    .normalized())
}

/// Möbius coefficients `c_T = sum over faces s of T of (-1)^|T \ s|`, so that
/// the substituted generating polynomial is `sum_T c_T q^(sum of k over T)`.
#[derive(Clone, Debug)]
pub struct GenTable {
    m: usize,
    terms: Vec<(u64, i64)>,
}

pub const MAX_TABLE_ELEMENTS: usize = 24;

impl GenTable {
    pub fn new(c: &SimplicialComplex) -> Result<Self> {
        let m = c.ground_size();
        if m > MAX_TABLE_ELEMENTS {
            return Err(Error::Resource(format!(
                "{m} elements is too many for a subset table"
            )));
        }
        let mut values = vec![0i64; 1 << m];
        for face in c.enumerate_faces() {
            values[face.bits() as usize] = 1;
        }
        // subset-sum transform with signs
        for bit in 0..m {
            for t in 0..1usize << m {
                if t >> bit & 1 == 1 {
                    values[t] -= values[t ^ (1 << bit)];
                }
            }
        }
        let terms = values
            .into_iter()
            .enumerate()
            .filter(|&(_, v)| v != 0)
            .map(|(t, v)| (t as u64, v))
            .collect();
        Ok(GenTable { m, terms })
    }

    pub fn substitute(&self, kvec: &KVector) -> Reliability {
        let k = kvec.as_slice();
        assert_eq!(k.len(), self.m, "k-vector length");
        let mut coeffs = vec![0i64; kvec.total() + 1];
        for &(t, v) in &self.terms {
            let degree: usize = Face::from_bits(t).iter().map(|i| k[i]).sum();
            coeffs[degree] += v;
        }
        Reliability {
            h: IntegerPolynomial::new(coeffs.into_iter().map(BigInt::from).collect()),
            unit_root_multiplicity: 0,
        }
        .normalized()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchRecord {
    pub kvec: KVector,
    /// h-part with the factor `(1-q)^unit_root_multiplicity` removed.
    #[serde(serialize_with = "serialize_poly")]
    pub h_poly: IntegerPolynomial,
    pub unit_root_multiplicity: usize,
    #[serde(serialize_with = "crate::roots::serialize_modulus")]
    pub max_modulus: f64,
    pub residual_bound: f64,
    /// `max_modulus > 1 + residual_bound`.
    pub outside: bool,
    pub verdict: Verdict,
}

fn serialize_poly<S: serde::Serializer>(
    p: &IntegerPolynomial,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    p.to_strings().serialize(s)
}

/// Default cap on the number of k-vectors in one search.
pub const DEFAULT_SEARCH_BUDGET: u64 = 2_000_000;

/// Root report for every k-vector in `[k_min, k_max]^m`, in lexicographic order.
pub fn k_search(
    c: &SimplicialComplex,
    k_min: usize,
    k_max: usize,
    budget: u64,
) -> Result<Vec<SearchRecord>> {
    if k_min == 0 || k_min > k_max {
        return Err(Error::Domain(format!("bad k range [{k_min}, {k_max}]")));
    }
    let m = c.ground_size();
    let width = (k_max - k_min + 1) as u64;
    let count = u32::try_from(m)
        .ok()
        .and_then(|m| width.checked_pow(m))
        .filter(|&n| n <= budget)
        .ok_or_else(|| {
            Error::Resource(format!(
                "{width}^{m} k-vectors exceeds the search budget of {budget}"
            ))
        })?;
    let table = GenTable::new(c)?;
    let mut records = (0..count)
        .into_par_iter()
        .map(|index| {
            let mut k = vec![k_min; m];
            let mut rest = index;
            for slot in k.iter_mut().rev() {
                *slot += (rest % width) as usize;
                rest /= width;
            }
            search_record(KVector(k), &table)
        })
        .collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.kvec.cmp(&b.kvec));
    Ok(records)
}

fn search_record(kvec: KVector, table: &GenTable) -> Result<SearchRecord> {
    let rel = table.substitute(&kvec);
    record_from(kvec, rel)
}

/// Builds a record from an already substituted reliability.
pub fn record_from(kvec: KVector, rel: Reliability) -> Result<SearchRecord> {
    let (max_modulus, residual_bound, verdict) = if rel.h.degree().unwrap_or(0) == 0 {
        (0.0, 0.0, Verdict::AllInClosedDisk)
    } else {
        let report = find_roots(&rel.h)?;
        (report.max_modulus, report.residual_bound, report.verdict)
    };
    Ok(SearchRecord {
        kvec,
        h_poly: rel.h,
        unit_root_multiplicity: rel.unit_root_multiplicity,
        max_modulus,
        residual_bound,
        outside: max_modulus > 1.0 + residual_bound,
        verdict,
    })
}

/// `kvec;max_modulus;outside;h_coeffs` rows; coefficients ascending, comma separated.
pub fn write_search_csv<W: Write>(records: &[SearchRecord], writer: W) -> Result<()> {
    let mut csv = csv::WriterBuilder::new()
        .delimiter(b';')
        .from_writer(writer);
    csv.write_record(["kvec", "max_modulus", "outside", "h_coeffs"])?;
    for r in records {
        csv.write_record([
            r.kvec.to_string(),
            round_significant(r.max_modulus, REPORT_DIGITS).to_string(),
            r.outside.to_string(),
            r.h_poly.to_strings().join(","),
        ])?;
    }
    csv.flush()?;
    Ok(())
}

//! Random pure complexes: every `d`-subset of `[m]` is a facet independently
//! with probability `p`.
//!
//! Trial `t` of an experiment draws from `ChaCha8Rng::seed_from_u64(seed)`
//! switched to stream `t`, so results do not depend on scheduling.

use num_bigint::BigInt;
use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::roots::{enestrom_kakeya_applies, find_roots, Verdict};

/// Largest number of candidate facets a sampler will enumerate.
pub const MAX_CANDIDATES: u64 = 5_000_000;

fn check_params(m: usize, d: usize, p: f64) -> Result<()> {
    if d < 2 || d > m {
        return Err(Error::Domain(format!(
            "need 2 <= d <= m, got d = {d}, m = {m}"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Domain(format!("p = {p} is not a probability")));
    }
    if m > crate::complex::MAX_GROUND_SET {
        return Err(Error::GroundSetTooLarge(m));
    }
    let candidates = binomial(m as u64, d as u64);
    if candidates > MAX_CANDIDATES {
        return Err(Error::Resource(format!("{candidates} candidate facets")));
    }
    Ok(())
}

fn draw(m: usize, d: usize, p: f64, rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let facets: Vec<Face> = Face::full(m)
        .subsets_of_size(d)
        .into_iter()
        .filter(|_| rng.random_bool(p))
        .collect();
    SimplicialComplex::from_facets(m, facets).expect("subsets of the ground set")
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// One sample, drawn from stream 0 of `seed`. Candidates are visited in
/// lexicographic order.
pub fn sample_pure_complex(m: usize, d: usize, p: f64, seed: u64) -> Result<SimplicialComplex> {
    trial_complex(m, d, p, seed, 0)
}

/// The complex drawn in trial `trial` of an experiment with this seed.
pub fn trial_complex(
    m: usize,
    d: usize,
    p: f64,
    seed: u64,
    trial: u64,
) -> Result<SimplicialComplex> {
    check_params(m, d, p)?;
    Ok(draw(m, d, p, &mut trial_rng(seed, trial)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentParams {
    pub m: usize,
    pub d: usize,
    pub p: f64,
    pub trials: usize,
    pub seed: u64,
    pub epsilon: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub trial: usize,
    pub facets: usize,
    /// No loops.
    pub e1: bool,
    /// Every `(d-1)`-subset lies in a facet.
    pub e2: bool,
    /// More than `(1 - epsilon) p C(m, d)` facets.
    pub e3: bool,
    /// h-coefficients positive and nondecreasing.
    pub h_nondecreasing: bool,
    /// `None` for the void complex.
    pub verdict: Option<Verdict>,
    /// The verdict from the computed roots alone.
    pub numeric_verdict: Option<Verdict>,
    #[serde(serialize_with = "crate::roots::serialize_optional_modulus")]
    pub max_modulus: Option<f64>,
    pub residual_bound: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EventFractions {
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
    pub all_three: f64,
    pub h_nondecreasing: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentSummary {
    pub params: ExperimentParams,
    pub per_event_fractions: EventFractions,
    pub disk_fraction: f64,
    pub trials: Vec<TrialOutcome>,
}

impl ExperimentSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

pub const DEFAULT_EPSILON: f64 = 0.1;

fn run_trial(params: &ExperimentParams, t: usize) -> Result<TrialOutcome> {
    let (m, d) = (params.m, params.d);
    let c = draw(m, d, params.p, &mut trial_rng(params.seed, t as u64));
    let facets = c.facets().len();
    let threshold = (1.0 - params.epsilon) * params.p * binomial(m as u64, d as u64) as f64;
    let e2 = !c.is_void()
        && c.dimension() == Some(d)
        && c.f_vector().0[d - 1] == binomial(BigInt::from(m), BigInt::from(d - 1));
    let mut outcome = (false, None, None, None, None);
    if let Ok(rel) = c.reliability() {
        let ek = enestrom_kakeya_applies(&rel.h);
        outcome = if rel.h.degree().unwrap_or(0) == 0 {
            let inside = Some(Verdict::AllInClosedDisk);
            (ek, inside, inside, Some(0.0), Some(0.0))
        } else {
            let r = find_roots(&rel.h)?;
            (
                ek,
                Some(r.verdict),
                Some(r.numeric_verdict),
                Some(r.max_modulus),
                Some(r.residual_bound),
            )
        };
    }
    let (h_nondecreasing, verdict, numeric_verdict, max_modulus, residual_bound) = outcome;
    Ok(TrialOutcome {
        trial: t,
        facets,
        e1: !c.has_loops(),
        e2,
        e3: facets as f64 > threshold,
        h_nondecreasing,
        verdict,
        numeric_verdict,
        max_modulus,
        residual_bound,
    })
}

/// Runs `trials` independent samples on `jobs` threads (all cores by default).
pub fn experiment(params: ExperimentParams, jobs: Option<usize>) -> Result<ExperimentSummary> {
    check_params(params.m, params.d, params.p)?;
    if params.trials == 0 {
        return Err(Error::Domain("at least one trial is needed".into()));
    }
    if !(0.0..1.0).contains(&params.epsilon) {
        return Err(Error::Domain(format!(
            "epsilon = {} outside [0, 1)",
            params.epsilon
        )));
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Resource(format!("thread pool: {e}")))?;
    let trials: Vec<TrialOutcome> = pool.install(|| {
        (0..params.trials)
            .into_par_iter()
            .map(|t| run_trial(&params, t))
            .collect::<Result<Vec<_>>>()
    })?;
    let n = trials.len() as f64;
    let frac =
        |f: &dyn Fn(&TrialOutcome) -> bool| trials.iter().filter(|t| f(t)).count() as f64 / n;
    Ok(ExperimentSummary {
        per_event_fractions: EventFractions {
            e1: frac(&|t| t.e1),
            e2: frac(&|t| t.e2),
            e3: frac(&|t| t.e3),
            all_three: frac(&|t| t.e1 && t.e2 && t.e3),
            h_nondecreasing: frac(&|t| t.h_nondecreasing),
        },
        disk_fraction: frac(&|t| t.verdict == Some(Verdict::AllInClosedDisk)),
        params,
        trials,
    })
}

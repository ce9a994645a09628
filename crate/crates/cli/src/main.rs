//! `relroots`: reliability polynomials and their roots from the command line.
//!
//! Machine-readable output goes to stdout, diagnostics to stderr. Element
//! labels in flags and reports are 1-based; files use 0-based indices.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use relroots::complex::Face;
use relroots::constructions::{gen_substitute, k_search, write_search_csv, DEFAULT_SEARCH_BUDGET};
use relroots::graphs::{chromatic_reliability_identity, cographic_matroid, k4, royle_sokal};
use relroots::matroid::{exchange_check, fano, shelling_order, DEFAULT_SHELLING_FACET_CAP};
use relroots::poly::PolynomialFile;
use relroots::reference::{
    fano_reliability, royle_sokal_reliability, FANO_KVEC, FANO_TABLE, ROYLE_SOKAL_KVEC,
};
use relroots::roots::{round_significant, write_scatter, REPORT_DIGITS};
use relroots::{
    find_roots, BigInt, Error, IntegerPolynomial, KVector, Multigraph, Reliability, RootReport,
    SimplicialComplex,
};

/// Largest deviation from a published modulus that the demos accept.
const PUBLISHED_MODULUS_TOLERANCE: f64 = 1e-9;

#[derive(Parser)]
#[command(
    name = "relroots",
    version,
    about = "Reliability roots of complexes and matroids"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report invariants, the reliability polynomial and its roots for a complex file.
    Analyze {
        file: PathBuf,
        /// Largest facet count for the shellability search.
        #[arg(long, default_value_t = DEFAULT_SHELLING_FACET_CAP)]
        shelling_cap: usize,
    },
    /// Roots of a polynomial file or of an inline coefficient list.
    Roots {
        #[arg(required_unless_present = "coeffs")]
        file: Option<PathBuf>,
        /// Coefficients from the constant term up, e.g. `1,4,-1`.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            conflicts_with = "file"
        )]
        coeffs: Option<Vec<String>>,
        /// Write the roots as `re,im,modulus` CSV here.
        #[arg(long)]
        scatter: Option<PathBuf>,
    },
    /// Rebuild a published example and check it.
    Demo {
        name: DemoName,
        /// Replacement sizes, one per element, e.g. `1,4,4,4,5,4,5`.
        #[arg(long)]
        kvec: Option<KVector>,
    },
    /// Sweep every k-vector in `[kmin, kmax]^m` over a base matroid.
    Search {
        /// `fano` or a complex file.
        #[arg(long, default_value = "fano")]
        base: String,
        #[arg(long, default_value_t = 1)]
        kmin: usize,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
        /// Keep only rows with a root outside the closed disk.
        #[arg(long)]
        report_outside: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Largest number of k-vectors to try.
        #[arg(long, env = "RELROOTS_SEARCH_BUDGET", default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Sample random pure complexes and summarize where their roots lie.
    Random {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = relroots::random_model::DEFAULT_EPSILON)]
        epsilon: f64,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Compare the chromatic polynomial with the broken-circuit reliability.
    ChromaticCheck {
        file: PathBuf,
        /// Edges from least to greatest, 1-based, e.g. `3,1,2`.
        #[arg(long, value_delimiter = ',')]
        order: Option<Vec<usize>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DemoName {
    Rs,
    Fano,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

/// `Ok(false)` means the output was written but a check failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze { file, shelling_cap } => analyze(&file, shelling_cap),
        Command::Roots {
            file,
            coeffs,
            scatter,
        } => roots(file.as_deref(), coeffs, scatter.as_deref()),
        Command::Demo { name, kvec } => demo(name, kvec),
        Command::Search {
            base,
            kmin,
            kmax,
            report_outside,
            jobs,
            format,
            budget,
        } => search(&base, kmin, kmax, report_outside, jobs, format, budget),
        Command::Random {
            m,
            d,
            p,
            trials,
            seed,
            epsilon,
            jobs,
        } => {
            let params = relroots::random_model::ExperimentParams {
                m,
                d,
                p,
                trials,
                seed,
                epsilon,
            };
            let summary = relroots::random_model::experiment(params, jobs)?;
            emit_text(&summary.to_json())?;
            Ok(true)
        }
        Command::ChromaticCheck { file, order } => chromatic_check(&file, order),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(value: &Value) -> Result<()> {
    emit_text(&serde_json::to_string_pretty(value)?)
}

fn emit_text(text: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "{text}")?;
    Ok(())
}

fn labels(face: Face) -> Vec<usize> {
    face.iter().map(|x| x + 1).collect()
}

fn strings(p: &IntegerPolynomial) -> Vec<String> {
    p.to_strings()
}

fn modulus(x: f64) -> f64 {
    round_significant(x, REPORT_DIGITS)
}

fn root_json(r: &RootReport<f64>) -> Value {
    let roots: Vec<Value> = r
        .roots
        .iter()
        .map(|z| json!({ "re": z.re, "im": z.im, "modulus": modulus(z.norm()) }))
        .collect();
    json!({
        "roots": roots,
        "max_modulus": modulus(r.max_modulus),
        "residual_bound": r.residual_bound,
        "outside": r.max_modulus > 1.0 + r.residual_bound,
        "verdict": r.verdict,
        "decided_by": r.decided_by,
        "numeric_verdict": r.numeric_verdict,
        "converged": r.converged,
    })
}

/// Root report of `p`; constants have no roots.
fn roots_of(p: &IntegerPolynomial) -> Result<Value> {
    match p.degree() {
        None => bail!("the zero polynomial has no root set"),
        Some(0) => Ok(json!({
            "roots": [],
            "max_modulus": 0.0,
            "residual_bound": 0.0,
            "outside": false,
            "verdict": relroots::Verdict::AllInClosedDisk,
            "decided_by": relroots::DecidedBy::Trivial,
            "numeric_verdict": relroots::Verdict::AllInClosedDisk,
            "converged": true,
        })),
        Some(_) => Ok(root_json(&find_roots(p)?)),
    }
}

fn analyze(path: &Path, shelling_cap: usize) -> Result<bool> {
    let c = SimplicialComplex::from_json(&read(path)?)
        .with_context(|| format!("parsing complex {}", path.display()))?;
    let to_labels = |xs: Vec<usize>| xs.into_iter().map(|x| x + 1).collect::<Vec<_>>();
    let exchange = exchange_check(&c);
    let witness = match &exchange {
        Err(Some(v)) => json!({ "sigma": labels(v.sigma), "alpha": labels(v.alpha) }),
        _ => Value::Null,
    };
    let shellable = match shelling_order(&c, shelling_cap) {
        Ok(order) => json!(order.is_some()),
        Err(Error::Resource(_)) => json!("capped"),
        Err(Error::Precondition(_)) if !c.is_void() => json!(false),
        Err(_) => Value::Null,
    };
    let (reliability, roots) = match c.reliability() {
        Ok(rel) => {
            let rel = rel.normalized();
            let roots = roots_of(&rel.h)?;
            (json!(PolynomialFile::from(&rel)), roots)
        }
        Err(Error::ZeroReliability) => (Value::Null, Value::Null),
        Err(e) => return Err(e.into()),
    };
    emit(&json!({
        "m": c.ground_size(),
        "dimension": c.dimension(),
        "pure": c.is_pure(),
        "f_vector": c.f_vector().0.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "h_vector": c.h_vector().to_strings(),
        "loops": to_labels(c.loops()),
        "coloops": to_labels(c.coloops()),
        "is_matroid": exchange.is_ok(),
        "exchange_violation": witness,
        "is_shellable": shellable,
        "reliability": reliability,
        "roots": roots,
    }))?;
    Ok(true)
}

fn parse_coeffs(coeffs: &[String]) -> Result<IntegerPolynomial> {
    let parsed = coeffs
        .iter()
        .map(|s| {
            s.trim()
                .parse::<BigInt>()
                .map_err(|_| anyhow!("coefficient {s:?} is not an integer"))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntegerPolynomial::new(parsed))
}

fn roots(file: Option<&Path>, coeffs: Option<Vec<String>>, scatter: Option<&Path>) -> Result<bool> {
    let rel = match (file, coeffs) {
        (_, Some(coeffs)) => Reliability {
            h: parse_coeffs(&coeffs)?,
            unit_root_multiplicity: 0,
        },
        (Some(path), None) => {
            let parsed: PolynomialFile = serde_json::from_str(&read(path)?)
                .with_context(|| format!("parsing polynomial {}", path.display()))?;
            Reliability::try_from(&parsed)?
        }
        (None, None) => bail!("give a polynomial file or --coeffs"),
    };
    let p = rel.expand();
    if p.degree().unwrap_or(0) == 0 {
        bail!("a constant polynomial has no roots to find");
    }
    let report = find_roots(&p)?;
    if let Some(path) = scatter {
        let file =
            fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_scatter(&report.roots, file)?;
    }
    emit(&json!({
        "polynomial": PolynomialFile::from(&rel),
        "roots": root_json(&report),
    }))?;
    Ok(true)
}

fn demo(name: DemoName, kvec: Option<KVector>) -> Result<bool> {
    let (label, base, default_k, published) = match name {
        DemoName::Rs => (
            "rs",
            cographic_matroid(&k4())?,
            &ROYLE_SOKAL_KVEC[..],
            royle_sokal_reliability(),
        ),
        DemoName::Fano => ("fano", fano(), &FANO_KVEC[..], fano_reliability()),
    };
    let default_k = KVector::new(default_k.to_vec())?;
    let kvec = kvec.unwrap_or_else(|| default_k.clone());
    if kvec.len() != base.ground_size() {
        bail!(
            "the k-vector needs {} entries, got {}",
            base.ground_size(),
            kvec.len()
        );
    }
    let rel = gen_substitute(&base, &kvec)?;
    let roots = roots_of(&rel.h)?;
    let max_modulus = roots["max_modulus"].as_f64().unwrap_or(0.0);

    let mut checks = serde_json::Map::new();
    if kvec == default_k {
        checks.insert(
            "matches_published_polynomial".into(),
            json!(rel == published),
        );
        if let DemoName::Rs = name {
            let graph = cographic_matroid(&royle_sokal())?
                .reliability()?
                .normalized();
            checks.insert("matches_graph_reliability".into(), json!(graph == rel));
        }
    }
    if let Some((_, expected)) = FANO_TABLE
        .iter()
        .find(|(k, _)| matches!(name, DemoName::Fano) && k[..] == *kvec.as_slice())
    {
        checks.insert("published_max_modulus".into(), json!(expected));
        checks.insert(
            "matches_published_modulus".into(),
            json!((max_modulus - expected).abs() <= PUBLISHED_MODULUS_TOLERANCE),
        );
    }
    let ok = checks.values().all(|v| v.as_bool() != Some(false));
    emit(&json!({
        "demo": label,
        "kvec": kvec,
        "polynomial": PolynomialFile::from(&rel),
        "checks": checks,
        "roots": roots,
    }))?;
    if !ok {
        eprintln!("demo {label}: the rebuilt example does not match the published values");
    }
    Ok(ok)
}

fn search(
    base: &str,
    kmin: usize,
    kmax: usize,
    report_outside: bool,
    jobs: Option<usize>,
    format: Format,
    budget: u64,
) -> Result<bool> {
    let complex = if base == "fano" {
        fano()
    } else {
        let path = Path::new(base);
        SimplicialComplex::from_json(&read(path)?)
            .with_context(|| format!("parsing complex {}", path.display()))?
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs {
        pool = pool.num_threads(n.max(1));
    }
    let mut records = pool
        .build()?
        .install(|| k_search(&complex, kmin, kmax, budget))?;
    if report_outside {
        records.retain(|r| r.outside);
    }
    match format {
        Format::Csv => write_search_csv(&records, io::stdout().lock())?,
        Format::Json => emit_text(&serde_json::to_string_pretty(&records)?)?,
    }
    Ok(true)
}

fn chromatic_check(path: &Path, order: Option<Vec<usize>>) -> Result<bool> {
    let g = Multigraph::from_json(&read(path)?)
        .with_context(|| format!("parsing graph {}", path.display()))?;
    let order = order
        .map(|o| {
            o.into_iter()
                .map(|e| {
                    e.checked_sub(1)
                        .ok_or_else(|| anyhow!("edge labels start at 1"))
                })
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    let report = chromatic_reliability_identity(&g, order.as_deref())?;
    let holds = report.holds_full();
    emit(&json!({
        "holds": holds,
        "lhs": strings(&report.lhs),
        "rhs": strings(&report.rhs_full),
        "components": report.components,
        "h_form": {
            "holds": report.holds_h_form(),
            "rhs": strings(&report.rhs_h_form),
        },
    }))?;
    if !holds {
        eprintln!(
            "identity fails: lhs [{}] vs rhs [{}]",
            strings(&report.lhs).join(", "),
            strings(&report.rhs_full).join(", ")
        );
    }
    Ok(holds)
}

//! Scans a family of instances for small maximum independent transversals.
//!
//! Every instance gets an exact optimum and the size reached by the
//! augmenting heuristic. Instances whose optimum falls below `n - 1` are
//! candidates against the conjectured bound; each is re-solved without a node
//! budget, checked, and written out as an instance file before it is listed.

use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::harness::format::InstanceFile;
use crate::harness::generate::{random_embedding, GenKind, PRNG_NAME};
use crate::latin::LatinSquare;
use crate::mls::Mls;
use crate::transversal::{augment_until, exact_max, is_valid_transversal, two_thirds_bound};

/// Largest order for which every Latin square can be enumerated.
pub const MAX_ENUMERATION_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    /// Every Latin square of order `n` (Latin generator only).
    All,
    /// `count` seeded random instances; instance `i` uses seed `seed + i`.
    Count(usize),
}

#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub n: usize,
    pub generator: GenKind,
    pub selection: Selection,
    pub seed: u64,
    /// Fields for `theorem2` (one instance per prime) and `embed` (instance
    /// `i` uses `primes[i % len]`).
    pub primes: Vec<u64>,
    pub node_budget: u64,
    /// Where candidate instance files are written, if anywhere.
    pub dump_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceResult {
    pub index: usize,
    /// How to regenerate the instance.
    pub source: String,
    /// The per-instance maximum found by branch and bound.
    pub exact: usize,
    pub optimal: bool,
    /// Size reached by greedy + exchange steps, without the exact fallback.
    pub heuristic: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub index: usize,
    pub source: String,
    /// Optimum from an unbudgeted re-run.
    pub verified_max: usize,
    /// The re-verified optimum is also below `⌈2n/3⌉`.
    pub below_two_thirds: bool,
    pub file: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub generator: GenKind,
    pub n: usize,
    pub prng: &'static str,
    pub seed: u64,
    pub primes: Vec<u64>,
    pub instance_count: usize,
    /// Smallest per-instance maximum over the family.
    pub minimum: Option<usize>,
    /// `n - 1`
    pub conjectured_bound: usize,
    /// `⌈2n/3⌉`
    pub two_thirds_bound: usize,
    pub instances: Vec<InstanceResult>,
    pub candidates: Vec<Candidate>,
}

impl ScanReport {
    /// Whether some candidate's verified optimum lies below `⌈2n/3⌉`.
    pub fn contradicts_two_thirds(&self) -> bool {
        self.candidates.iter().any(|c| c.below_two_thirds)
    }
}

/// The instances a config describes, with their regeneration notes.
pub fn instances(config: &ScanConfig) -> Result<Vec<(String, Mls)>> {
    let n = config.n;
    if n == 0 {
        return Err(Error::Format("degree must be at least 1".into()));
    }
    let fields = || -> Result<Vec<FieldSpec>> {
        if config.primes.is_empty() {
            return Err(Error::Format(format!(
                "generator {} needs at least one prime",
                config.generator
            )));
        }
        config.primes.iter().map(|&p| FieldSpec::new(p)).collect()
    };
    match (config.generator, &config.selection) {
        (GenKind::Latin, Selection::All) => {
            if n > MAX_ENUMERATION_ORDER {
                return Err(Error::Format(format!(
                    "enumerating all Latin squares is limited to n <= {MAX_ENUMERATION_ORDER}"
                )));
            }
            Ok(LatinSquare::enumerate(n)
                .iter()
                .enumerate()
                .map(|(i, sq)| (format!("latin all n={n} #{i}"), Mls::from_latin_square(sq)))
                .collect())
        }
        (_, Selection::All) => Err(Error::Format(
            "--all is only available for the latin generator".into(),
        )),
        (GenKind::Latin, &Selection::Count(count)) => Ok((0..count)
            .map(|i| {
                let seed = config.seed.wrapping_add(i as u64);
                (
                    format!("latin n={n} seed={seed}"),
                    Mls::from_latin_square(&LatinSquare::random(n, seed)),
                )
            })
            .collect()),
        (GenKind::Embed, &Selection::Count(count)) => {
            let fields = fields()?;
            (0..count)
                .map(|i| {
                    let seed = config.seed.wrapping_add(i as u64);
                    let field = fields[i % fields.len()];
                    let square = LatinSquare::random(n, seed);
                    Ok((
                        format!("embed n={n} p={} seed={seed}", field.modulus()),
                        random_embedding(&square, field, seed)?,
                    ))
                })
                .collect()
        }
        (GenKind::Theorem2, Selection::Count(_)) => Ok(fields()?
            .into_iter()
            .map(|f| {
                (
                    format!("theorem2 n={n} p={}", f.modulus()),
                    Mls::theorem2(n, f),
                )
            })
            .collect()),
    }
}

pub fn scan(config: &ScanConfig) -> Result<ScanReport> {
    let n = config.n;
    let family = instances(config)?;
    let target = two_thirds_bound(n);
    let results: Vec<InstanceResult> = family
        .par_iter()
        .enumerate()
        .map(|(index, (source, mls))| {
            let exact = exact_max(mls, config.node_budget);
            let (heuristic, _) = augment_until(mls, target)?;
            Ok(InstanceResult {
                index,
                source: source.clone(),
                exact: exact.size(),
                optimal: exact.optimal,
                heuristic: heuristic.len(),
            })
        })
        .collect::<Result<_>>()?;

    let mut candidates = Vec::new();
    for r in results.iter().filter(|r| r.exact + 1 < n) {
        let mls = &family[r.index].1;
        let verified = exact_max(mls, 0);
        if !is_valid_transversal(mls, verified.transversal.cells()) {
            return Err(Error::ExchangeAnomaly(format!(
                "re-verification of instance {} returned a dependent set",
                r.index
            )));
        }
        if verified.size() + 1 >= n {
            continue; // the budgeted run had stopped early
        }
        let file = match &config.dump_dir {
            Some(dir) => {
                std::fs::create_dir_all(dir)?;
                let path = dir.join(format!(
                    "candidate-{}-n{n}-{}.json",
                    config.generator, r.index
                ));
                std::fs::write(&path, InstanceFile::from_mls(mls).to_text())?;
                Some(path.display().to_string())
            }
            None => None,
        };
        candidates.push(Candidate {
            index: r.index,
            source: r.source.clone(),
            verified_max: verified.size(),
            below_two_thirds: verified.size() < target,
            file,
        });
    }

    Ok(ScanReport {
        generator: config.generator,
        n,
        prng: PRNG_NAME,
        seed: config.seed,
        primes: config.primes.clone(),
        instance_count: results.len(),
        minimum: results.iter().map(|r| r.exact).min(),
        conjectured_bound: n.saturating_sub(1),
        two_thirds_bound: target,
        instances: results,
        candidates,
    })
}

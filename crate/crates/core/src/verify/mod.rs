//! Exhaustive search for minimal-ABC trees and structural claim checks on
//! the minimizers.

mod claims;
mod controls;
mod greedy_check;
mod report;

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::abc::WeightTable;
use crate::enumerate::{canonical_code, CanonicalCode, FreeTreeGenerator};
use crate::error::{Error, Result};
use crate::io::write_atomic;
use crate::tree::Tree;

pub use claims::{check_claim, check_tree, evaluate_claim, verify_lemma2_obs1, Claim, ClaimEntry, Status};
pub use claims::{STRUCTURE_N_MIN, THM8_N_MIN};
pub use controls::{negative_control, t_k_control, thm7_boundary};
pub use greedy_check::{verify_thm1, GreedyCheck, GreedyMismatch, THM1_N_MAX};
pub use report::{claim_reports, csv_summary, run_verify, ClaimReport, OrderReport, VerifyReport};

/// Largest order searched unless configured otherwise.
pub const DEFAULT_N_MAX: usize = 24;
/// Orders above this are always refused.
pub const HARD_CAP: usize = 26;
/// Two index values within this distance are treated as equal.
pub const EPSILON: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub n_max: usize,
    pub epsilon: f64,
    pub parallel: bool,
    /// Trees generated between two checkpoints.
    pub segment: usize,
    pub checkpoint_dir: Option<PathBuf>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            n_max: DEFAULT_N_MAX,
            epsilon: EPSILON,
            parallel: true,
            segment: 1 << 18,
            checkpoint_dir: None,
        }
    }
}

/// All trees of order `n` attaining the minimum index, up to `epsilon`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimizerRecord {
    pub n: usize,
    pub min_abc: f64,
    pub epsilon: f64,
    pub minimizer_codes: Vec<CanonicalCode>,
    pub trees_examined: u64,
}

impl MinimizerRecord {
    /// One tree per minimizer code, in code order.
    pub fn witnesses(&self) -> Vec<Tree> {
        self.minimizer_codes
            .iter()
            .map(|c| c.to_tree().expect("stored codes decode"))
            .collect()
    }
}

/// Asymptotic count of free trees, used to explain refusals.
pub fn estimated_tree_count(n: usize) -> f64 {
    0.534_949_6 * 2.955_765_3f64.powi(n as i32) / (n as f64).powf(2.5)
}

/// Running minimum with every candidate within `epsilon` of it. Merging is
/// associative and commutative: a candidate dropped by one part is more
/// than `epsilon` above that part's minimum, hence above the global one.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
struct Best {
    min: Option<f64>,
    candidates: Vec<(f64, Vec<u8>)>,
}

impl Best {
    fn push(&mut self, value: f64, parents: &[u8], eps: f64) {
        match self.min {
            Some(m) if value > m + eps => return,
            Some(m) if value >= m => {}
            _ => {
                self.min = Some(value);
                self.candidates.retain(|(v, _)| *v <= value + eps);
            }
        }
        self.candidates.push((value, parents.to_vec()));
    }

    fn merge(mut self, other: Best, eps: f64) -> Best {
        let min = match (self.min, other.min) {
            (Some(a), Some(b)) => a.min(b),
            (a, b) => match a.or(b) {
                Some(m) => m,
                None => return self,
            },
        };
        self.min = Some(min);
        self.candidates.extend(other.candidates);
        self.candidates.retain(|(v, _)| *v <= min + eps);
        self
    }
}

fn evaluate_segment(buf: &[u8], width: usize, table: &WeightTable, eps: f64, parallel: bool) -> Best {
    let step = |(mut best, mut deg): (Best, Vec<usize>), p: &[u8]| {
        let value = table.index_of_parents(p, &mut deg);
        best.push(value, p, eps);
        (best, deg)
    };
    if parallel {
        buf.par_chunks(width)
            .fold(|| (Best::default(), Vec::new()), step)
            .map(|(b, _)| b)
            .reduce(Best::default, |a, b| a.merge(b, eps))
    } else {
        buf.chunks(width).fold((Best::default(), Vec::new()), step).0
    }
}

#[derive(Serialize, Deserialize)]
struct Snapshot {
    n: usize,
    epsilon: f64,
    generator: FreeTreeGenerator,
    examined: u64,
    best: Best,
}

fn record_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("n{n}.json"))
}

fn snapshot_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("n{n}.partial.json"))
}

fn load_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Option<T>> {
    match std::fs::read(path) {
        Ok(bytes) => Ok(Some(serde_json::from_slice(&bytes)?)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn check_budget(n: usize, config: &SearchConfig) -> Result<()> {
    if n < 2 {
        return Err(Error::Domain(format!("search needs n >= 2, got {n}")));
    }
    let limit = config.n_max.min(HARD_CAP);
    if n > limit {
        return Err(Error::Budget(format!(
            "n = {n} exceeds the search limit {limit} (about {:.2e} trees to examine)",
            estimated_tree_count(n)
        )));
    }
    Ok(())
}

/// Exhaustive minimum over all trees of order `n`, resuming from and
/// writing to `config.checkpoint_dir` when set.
pub fn find_minimal_abc_trees_with(n: usize, config: &SearchConfig) -> Result<MinimizerRecord> {
    check_budget(n, config)?;
    let eps = config.epsilon;
    let dir = config.checkpoint_dir.as_deref();
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir)?;
        if let Some(rec) = load_json::<MinimizerRecord>(&record_path(dir, n))? {
            if rec.n == n && rec.epsilon == eps {
                return Ok(rec);
            }
        }
    }

    let resumed = match dir {
        Some(dir) => load_json::<Snapshot>(&snapshot_path(dir, n))?.filter(|s| s.n == n && s.epsilon == eps),
        None => None,
    };
    let (mut generator, mut examined, mut best) = match resumed {
        Some(s) => (s.generator, s.examined, s.best),
        None => (FreeTreeGenerator::new(n), 0, Best::default()),
    };

    let width = n - 1;
    let table = WeightTable::new(n);
    let segment = config.segment.max(1);
    let mut buf: Vec<u8> = Vec::with_capacity(segment * width);
    let mut scratch = Vec::with_capacity(width);
    loop {
        buf.clear();
        let mut count = 0usize;
        while count < segment && generator.advance() {
            generator.write_parents(&mut scratch);
            buf.extend(scratch.iter().map(|&p| p as u8));
            count += 1;
        }
        if count == 0 {
            break;
        }
        let part = evaluate_segment(&buf, width, &table, eps, config.parallel);
        best = best.merge(part, eps);
        examined += count as u64;
        if let Some(dir) = dir {
            let snap = Snapshot {
                n,
                epsilon: eps,
                generator: generator.clone(),
                examined,
                best: best.clone(),
            };
            write_atomic(&snapshot_path(dir, n), &serde_json::to_vec(&snap)?)?;
        }
    }

    let min_abc = best.min.expect("at least one tree");
    let mut codes: Vec<CanonicalCode> = best
        .candidates
        .iter()
        .map(|(_, p)| {
            let parents: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            canonical_code(&Tree::from_parents(&parents).expect("generator emits trees"))
        })
        .collect();
    codes.sort();
    codes.dedup();
    let record = MinimizerRecord {
        n,
        min_abc,
        epsilon: eps,
        minimizer_codes: codes,
        trees_examined: examined,
    };
    if let Some(dir) = dir {
        write_atomic(&record_path(dir, n), &serde_json::to_vec_pretty(&record)?)?;
        let _ = std::fs::remove_file(snapshot_path(dir, n));
    }
    Ok(record)
}

/// [`find_minimal_abc_trees_with`] under the default configuration.
pub fn find_minimal_abc_trees(n: usize) -> Result<MinimizerRecord> {
    find_minimal_abc_trees_with(n, &SearchConfig::default())
}

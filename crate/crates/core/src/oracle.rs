//! Brute-force searches that check the case analysis by enumeration.
//!
//! Every scan iterates the base `y` of the power and square-tests the
//! remaining term, which keeps the candidate count far below an `x` scan.
//! Work is partitioned into independent cells and merged in sorted order,
//! so results do not depend on the thread count.

use std::fs::{File, OpenOptions};
use std::io::{self, BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{as_perfect_square, int_nth_root, pow, pow11, Nat};
use crate::solution::{sort_solutions, Solution};

pub use crate::bounds::{BoundsError, SearchBounds};

/// Candidate evaluations between progress reports.
pub const PROGRESS_EVERY: u64 = 1_000_000;

/// A solution `(x, y, n)` of one of the auxiliary equations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PowerHit {
    #[serde(with = "crate::decimal")]
    pub x: Nat,
    #[serde(with = "crate::decimal")]
    pub y: Nat,
    #[serde(with = "crate::decimal")]
    pub n: u32,
}

impl PowerHit {
    fn new(x: Nat, y: u64, n: u32) -> Self {
        PowerHit { x, y: Nat::from(y), n }
    }
}

/// A completed `(m, n)` cell of the brute-force search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    #[serde(with = "crate::decimal")]
    pub m: u32,
    #[serde(with = "crate::decimal")]
    pub n: u32,
    #[serde(with = "crate::decimal")]
    pub y_max: u64,
    pub hits: Vec<Solution>,
}

/// Append-only JSON-lines file of completed cells.
pub struct Checkpoint {
    path: PathBuf,
    writer: Mutex<File>,
}

impl Checkpoint {
    pub fn open(path: impl AsRef<Path>) -> io::Result<Self> {
        let path = path.as_ref().to_path_buf();
        let writer = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Checkpoint {
            path,
            writer: Mutex::new(writer),
        })
    }

    /// Cells already recorded in the file.
    pub fn completed(&self) -> io::Result<Vec<CellRecord>> {
        let reader = BufReader::new(File::open(&self.path)?);
        let mut out = Vec::new();
        for line in reader.lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec = serde_json::from_str(&line)
                .map_err(|e| io::Error::new(io::ErrorKind::InvalidData, e))?;
            out.push(rec);
        }
        Ok(out)
    }

    pub fn record(&self, cell: &CellRecord) -> io::Result<()> {
        let line = serde_json::to_string(cell).map_err(io::Error::other)?;
        let mut w = self.writer.lock().expect("checkpoint writer poisoned");
        writeln!(w, "{line}")?;
        w.flush()
    }
}

struct Progress {
    evaluated: AtomicU64,
}

impl Progress {
    fn new() -> Self {
        Progress {
            evaluated: AtomicU64::new(0),
        }
    }

    fn tick(&self, count: u64) {
        let before = self.evaluated.fetch_add(count, Ordering::Relaxed);
        let after = before + count;
        if before / PROGRESS_EVERY != after / PROGRESS_EVERY {
            log::info!("{after} candidates evaluated");
        }
    }
}

/// All `(x, y)` with `x ≥ 1`, `2 ≤ y ≤ y_max` and `x² + 11^m = yⁿ`.
pub fn scan_cell(m: u32, n: u32, y_max: u64) -> Vec<Solution> {
    scan_cell_with(m, n, y_max, &Progress::new())
}

fn scan_cell_with(m: u32, n: u32, y_max: u64, progress: &Progress) -> Vec<Solution> {
    let c = pow11(m);
    // yⁿ ≤ 11^m can never leave a positive square
    let first = int_nth_root(&c, n).expect("n >= 1") + 1u32;
    let first: u64 = first.try_into().unwrap_or(u64::MAX).max(2);
    let mut hits = Vec::new();
    let mut pending = 0;
    for y in first..=y_max {
        let rest = pow(&Nat::from(y), n) - &c;
        if let Some(x) = as_perfect_square(&rest) {
            hits.push(Solution { x, y: Nat::from(y), m, n });
        }
        pending += 1;
        if pending == 4096 {
            progress.tick(pending);
            pending = 0;
        }
    }
    progress.tick(pending);
    hits
}

/// Exhaustive search over odd `m ∈ [3, m_max]`, `n ∈ [3, n_max]`,
/// `y ∈ [2, y_max]`, sorted by `(m, n, x)`.
pub fn brute_force(bounds: &SearchBounds) -> Vec<Solution> {
    brute_force_cells(bounds, &[], None).expect("no checkpoint I/O")
}

/// [`brute_force`] with resumable progress: cells already present in the
/// checkpoint (for the same `y_max`) are reused, new cells are appended as
/// they finish.
pub fn brute_force_resumable(
    bounds: &SearchBounds,
    checkpoint: &Checkpoint,
) -> io::Result<Vec<Solution>> {
    let done = checkpoint.completed()?;
    brute_force_cells(bounds, &done, Some(checkpoint))
}

fn brute_force_cells(
    bounds: &SearchBounds,
    done: &[CellRecord],
    checkpoint: Option<&Checkpoint>,
) -> io::Result<Vec<Solution>> {
    let cells: Vec<(u32, u32)> = (3..=bounds.m_max)
        .step_by(2)
        .flat_map(|m| (3..=bounds.n_max).map(move |n| (m, n)))
        .collect();
    let progress = Progress::new();
    let per_cell: Vec<Vec<Solution>> = cells
        .par_iter()
        .map(|&(m, n)| {
            let previous = done
                .iter()
                .find(|c| c.m == m && c.n == n && c.y_max == bounds.y_max);
            if let Some(cell) = previous {
                return Ok(cell.hits.clone());
            }
            let hits = scan_cell_with(m, n, bounds.y_max, &progress);
            if let Some(cp) = checkpoint {
                cp.record(&CellRecord {
                    m,
                    n,
                    y_max: bounds.y_max,
                    hits: hits.clone(),
                })?;
            }
            Ok(hits)
        })
        .collect::<io::Result<_>>()?;
    let mut all: Vec<Solution> = per_cell.into_iter().flatten().collect();
    sort_solutions(&mut all);
    Ok(all)
}

/// Solutions of `11x² + 1 = yⁿ` with `1 ≤ x ≤ x_max` for one exponent.
pub fn nagell_scan_exponent(x_max: u64, n: u32) -> Vec<PowerHit> {
    let limit = Nat::from(x_max) * Nat::from(x_max) * 11u32 + 1u32;
    let eleven = Nat::from(11u32);
    let mut hits = Vec::new();
    for y in 2u64.. {
        let yn = pow(&Nat::from(y), n);
        if yn > limit {
            break;
        }
        let (q, r) = (yn - 1u32).div_rem(&eleven);
        if !r.is_zero() {
            continue;
        }
        if let Some(x) = as_perfect_square(&q) {
            if !x.is_zero() {
                hits.push(PowerHit::new(x, y, n));
            }
        }
    }
    hits
}

/// Solutions of `11x² + 1 = yⁿ`, `1 ≤ x ≤ x_max`, odd `n ∈ [3, n_max]`.
pub fn nagell_scan(x_max: u64, n_max: u32) -> Vec<PowerHit> {
    let exps: Vec<u32> = (3..=n_max).step_by(2).collect();
    collect_hits(exps, |n| nagell_scan_exponent(x_max, n))
}

/// Solutions of `x² + 11 = yⁿ` with `1 ≤ x ≤ x_max` for one exponent.
pub fn cohn_scan_exponent(x_max: u64, n: u32) -> Vec<PowerHit> {
    let limit = Nat::from(x_max) * Nat::from(x_max) + 11u32;
    let eleven = Nat::from(11u32);
    let mut hits = Vec::new();
    for y in 2u64.. {
        let yn = pow(&Nat::from(y), n);
        if yn > limit {
            break;
        }
        if yn <= eleven {
            continue;
        }
        if let Some(x) = as_perfect_square(&(yn - &eleven)) {
            hits.push(PowerHit::new(x, y, n));
        }
    }
    hits
}

/// Solutions of `x² + 11 = yⁿ`, `1 ≤ x ≤ x_max`, `n ∈ [3, n_max]`.
pub fn cohn_base_scan(x_max: u64, n_max: u32) -> Vec<PowerHit> {
    collect_hits((3..=n_max).collect(), |n| cohn_scan_exponent(x_max, n))
}

fn collect_hits(exps: Vec<u32>, scan: impl Fn(u32) -> Vec<PowerHit> + Sync + Send) -> Vec<PowerHit> {
    let mut hits: Vec<PowerHit> = exps.into_par_iter().flat_map_iter(scan).collect();
    hits.sort_by(|a, b| (&a.x, a.n).cmp(&(&b.x, b.n)));
    hits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family;

    fn hit(x: u32, y: u64, n: u32) -> PowerHit {
        PowerHit::new(Nat::from(x), y, n)
    }

    #[test]
    fn brute_force_small() {
        let b = SearchBounds { y_max: 500, m_max: 3, n_max: 10, ..Default::default() };
        assert_eq!(brute_force(&b), vec![family::member(0)]);
    }

    #[test]
    fn brute_force_m5_m7_small() {
        // the m = 7 hit is Cohn's (4, 3) lifted by 11^3 and 11^2
        let b = SearchBounds { y_max: 500, m_max: 7, n_max: 10, ..Default::default() };
        let hits: Vec<Solution> = brute_force(&b).into_iter().filter(|s| s.m != 3).collect();
        assert_eq!(hits, vec![Solution::new(5324u32, 363u32, 7, 3)]);
        assert!(hits[0].holds());
    }

    #[test]
    fn nagell_small() {
        // 11x² + 1 for x = 1..10 against cubes
        let cubes: Vec<u64> = (1..=40u64).map(|y| y * y * y).collect();
        assert!((1..=10u64).all(|x| !cubes.contains(&(11 * x * x + 1))));
        assert!(nagell_scan(10, 3).is_empty());
        assert!(nagell_scan(0, 25).is_empty());
        assert!(nagell_scan(10_000, 25).is_empty());
    }

    #[test]
    fn cohn_examples() {
        assert_eq!(cohn_base_scan(100_000, 20), vec![hit(4, 3, 3), hit(58, 15, 3)]);
        assert!(cohn_base_scan(3, 20).is_empty());
        assert_eq!(cohn_base_scan(4, 20), vec![hit(4, 3, 3)]);
    }

    #[test]
    fn checkpoint_resume_reuses_cells() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cells.jsonl");
        let b = SearchBounds { y_max: 600, m_max: 5, n_max: 4, ..Default::default() };
        let cp = Checkpoint::open(&path).unwrap();
        let first = brute_force_resumable(&b, &cp).unwrap();
        assert_eq!(cp.completed().unwrap().len(), 4);
        let second = brute_force_resumable(&b, &cp).unwrap();
        assert_eq!(first, second);
        assert_eq!(cp.completed().unwrap().len(), 4);
        assert_eq!(first, brute_force(&b));
    }
}

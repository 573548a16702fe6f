//! Exhaustive enumeration of words, the GT census and the invariant battery.
//!
//! Work is split into jobs by length and leading symbols; every job yields
//! its words in shortlex order and the jobs are concatenated in order, so
//! output never depends on the number of worker threads.

mod battery;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use battery::{verify_theorems, verify_theorems_with, InvariantResult, Predicates, Status, INVARIANTS};

use crate::complexity::{rk_identity, FactorIndex};
use crate::error::{Error, Result};
use crate::palindromes::is_rich;
use crate::trapezoid::{heart, trapezoid_shape};
use crate::word::{alphabet_size, Symbol, Word};

pub const MAX_ALPHABET: usize = 6;
pub const MAX_LENGTH: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSpec {
    pub alphabet_size: usize,
    pub max_length: usize,
    /// Only words whose letters first appear in the order `a, b, c, ...`.
    pub canonical_only: bool,
}

impl EnumerationSpec {
    pub fn new(alphabet_size: usize, max_length: usize, canonical_only: bool) -> Result<Self> {
        let spec = EnumerationSpec {
            alphabet_size,
            max_length,
            canonical_only,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=MAX_ALPHABET).contains(&self.alphabet_size) {
            return Err(Error::Bounds(format!(
                "alphabet size {} outside 1..={MAX_ALPHABET}",
                self.alphabet_size
            )));
        }
        if !(1..=MAX_LENGTH).contains(&self.max_length) {
            return Err(Error::Bounds(format!(
                "maximum length {} outside 1..={MAX_LENGTH}",
                self.max_length
            )));
        }
        Ok(())
    }
}

/// Words of one length that start with a fixed prefix.
#[derive(Clone, Debug)]
struct Job {
    prefix: Vec<u8>,
    length: usize,
}

/// Calls `visit` on every word of `job` in lexicographic order.
fn walk_job(spec: &EnumerationSpec, job: &Job, visit: &mut dyn FnMut(&[Symbol])) {
    fn go(spec: &EnumerationSpec, buf: &mut Vec<Symbol>, length: usize, used: usize, visit: &mut dyn FnMut(&[Symbol])) {
        if buf.len() == length {
            visit(buf);
            return;
        }
        let bound = if spec.canonical_only {
            (used + 1).min(spec.alphabet_size)
        } else {
            spec.alphabet_size
        };
        for id in 0..bound {
            buf.push(Symbol(id as u8));
            go(spec, buf, length, used.max(id + 1), visit);
            buf.pop();
        }
    }
    let mut buf: Vec<Symbol> = job.prefix.iter().map(|&id| Symbol(id)).collect();
    let used = job.prefix.iter().map(|&id| id as usize + 1).max().unwrap_or(0);
    go(spec, &mut buf, job.length, used, visit);
}

/// Prefixes of up to three symbols for each length, in lexicographic order.
fn jobs(spec: &EnumerationSpec) -> Vec<Job> {
    let mut out = Vec::new();
    for length in 1..=spec.max_length {
        let depth = length.min(3);
        let prefix_spec = EnumerationSpec {
            max_length: depth,
            ..*spec
        };
        walk_job(
            &prefix_spec,
            &Job {
                prefix: Vec::new(),
                length: depth,
            },
            &mut |p| {
                out.push(Job {
                    prefix: p.iter().map(|s| s.0).collect(),
                    length,
                })
            },
        );
    }
    out
}

/// Every word of length `1..=max_length` in shortlex order.
pub fn enumerate_words(spec: &EnumerationSpec) -> Result<Vec<Word>> {
    spec.validate()?;
    let mut out = Vec::new();
    for job in jobs(spec) {
        walk_job(spec, &job, &mut |w| out.push(Word::from(w)));
    }
    Ok(out)
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Bounds(format!("cannot start {jobs} worker threads: {e}")))
}

/// Applies `per_job` to every job on `threads` workers and returns the
/// results in job order.
pub(crate) fn map_jobs<T: Send>(
    spec: &EnumerationSpec,
    threads: usize,
    per_job: impl Fn(&mut dyn FnMut(&mut dyn FnMut(&[Symbol]))) -> T + Sync,
) -> Result<Vec<T>> {
    spec.validate()?;
    let all = jobs(spec);
    Ok(pool(threads)?.install(|| {
        all.par_iter()
            .map(|job| per_job(&mut |visit| walk_job(spec, job, visit)))
            .collect()
    }))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub length: usize,
    pub total_words: u64,
    pub gt_count: u64,
    pub rich_gt_count: u64,
    pub triangular_gt_count: u64,
    pub rk_condition_count: u64,
}

impl CensusRow {
    fn add(&mut self, other: &CensusRow) {
        self.total_words += other.total_words;
        self.gt_count += other.gt_count;
        self.rich_gt_count += other.rich_gt_count;
        self.triangular_gt_count += other.triangular_gt_count;
        self.rk_condition_count += other.rk_condition_count;
    }
}

pub const CENSUS_HEADER: &str = "length,total,gt,rich_gt,triangular_gt,rk_condition";

fn census_word(w: &[Symbol], row: &mut CensusRow) {
    row.total_words += 1;
    let index = FactorIndex::new(w).expect("enumerated words are non-empty");
    let k = alphabet_size(w);
    if trapezoid_shape(&index.profile().values, k).is_none() {
        return;
    }
    row.gt_count += 1;
    if is_rich(w) {
        row.rich_gt_count += 1;
    }
    if k >= 2 {
        let v = FactorIndex::new(heart(w).expect("non-empty")).expect("non-empty");
        if v.r() == v.k() {
            row.triangular_gt_count += 1;
        }
    }
    if rk_identity(w.len(), index.r(), index.k(), k) {
        row.rk_condition_count += 1;
    }
}

/// One row per length with the number of words, GT-words, rich GT-words,
/// triangular GT-words and words satisfying the RK-condition.
pub fn census(spec: &EnumerationSpec, threads: usize) -> Result<Vec<CensusRow>> {
    let partial = map_jobs(spec, threads, |walk| {
        let mut row = CensusRow::default();
        walk(&mut |w| {
            row.length = w.len();
            census_word(w, &mut row);
        });
        row
    })?;
    let mut rows: Vec<CensusRow> = (1..=spec.max_length)
        .map(|length| CensusRow {
            length,
            ..CensusRow::default()
        })
        .collect();
    for part in partial.iter().filter(|p| p.total_words > 0) {
        rows[part.length - 1].add(part);
    }
    Ok(rows)
}

pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = format!("{CENSUS_HEADER}\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.length, r.total_words, r.gt_count, r.rich_gt_count, r.triangular_gt_count, r.rk_condition_count
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::is_canonical;

    fn words(k: usize, n: usize, canonical: bool) -> Vec<String> {
        enumerate_words(&EnumerationSpec::new(k, n, canonical).unwrap())
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(words(2, 2, true), ["a", "aa", "ab"]);
        assert_eq!(words(1, 3, false), ["a", "aa", "aaa"]);
        assert_eq!(words(3, 3, true).len(), 1 + 2 + 5);
        assert_eq!(words(2, 2, false), ["a", "b", "aa", "ab", "ba", "bb"]);
    }

    #[test]
    fn enumeration_is_complete_and_ordered() {
        for k in 1..=3 {
            for n in 1..=6 {
                let all = enumerate_words(&EnumerationSpec::new(k, n, false).unwrap()).unwrap();
                let expected: usize = (1..=n).map(|i| k.pow(i as u32)).sum();
                assert_eq!(all.len(), expected);
                assert!(all.windows(2).all(|p| p[0].shortlex_cmp(&p[1]).is_lt()));
                let canonical = enumerate_words(&EnumerationSpec::new(k, n, true).unwrap()).unwrap();
                let filtered: Vec<Word> = all.into_iter().filter(|w| is_canonical(w)).collect();
                assert_eq!(canonical, filtered);
            }
        }
    }

    #[test]
    fn bounds() {
        assert!(matches!(EnumerationSpec::new(0, 3, true), Err(Error::Bounds(_))));
        assert!(matches!(EnumerationSpec::new(7, 3, true), Err(Error::Bounds(_))));
        assert!(matches!(EnumerationSpec::new(2, 0, true), Err(Error::Bounds(_))));
        assert!(matches!(EnumerationSpec::new(2, 17, true), Err(Error::Bounds(_))));
        let bad = EnumerationSpec {
            alphabet_size: 9,
            max_length: 10,
            canonical_only: false,
        };
        assert!(matches!(enumerate_words(&bad), Err(Error::Bounds(_))));
        assert!(matches!(census(&bad, 1), Err(Error::Bounds(_))));
    }

    #[test]
    fn census_examples() {
        let rows = census(&EnumerationSpec::new(1, 6, false).unwrap(), 2).unwrap();
        assert!(rows.iter().all(|r| r.gt_count == 1 && r.total_words == 1));
        let rows = census(&EnumerationSpec::new(2, 8, false).unwrap(), 3).unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.rich_gt_count == r.gt_count));
        assert!(rows
            .iter()
            .all(|r| r.rk_condition_count <= r.gt_count && r.gt_count <= r.total_words));
        assert_eq!(census_csv(&rows).lines().next(), Some(CENSUS_HEADER));
    }

    #[test]
    fn census_is_thread_independent() {
        let spec = EnumerationSpec::new(3, 7, true).unwrap();
        let one = census_csv(&census(&spec, 1).unwrap());
        let many = census_csv(&census(&spec, 4).unwrap());
        assert_eq!(one, many);
    }
}

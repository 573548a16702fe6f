//! Factor complexity, special factors, the parameters `R`, `K`, `L`, `H`
//! and the minimal period.
//!
//! `R` is the smallest positive length with no right special factor and `K`
//! the length of the shortest unrepeated suffix; `L` and `H` are their left
//! analogues (left special factors, shortest unrepeated prefix). All four are
//! read off suffix automata: one for the word and one for its reversal, since
//! left extensions of `w` are right extensions of the reversal.
//!
//! A power of a single letter gets `R = L = 1` and `K = H = |w|`; this falls
//! out of the definitions because no factor of `x^n` is special.

mod automaton;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

pub use automaton::SuffixAutomaton;

use crate::error::{Error, Result};
use crate::word::{reverse, Symbol, Word};

/// The sequence `C(0), C(1), ..., C(|w|)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityProfile {
    pub values: Vec<usize>,
    pub word_length: usize,
}

impl ComplexityProfile {
    /// `C(n)`; zero beyond the word length.
    pub fn get(&self, n: usize) -> usize {
        self.values.get(n).copied().unwrap_or(0)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.values
    }

    pub fn max(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0)
    }

    /// `n,C(n)` rows without a header.
    pub fn csv_rows(&self) -> String {
        self.values
            .iter()
            .enumerate()
            .map(|(n, c)| format!("{n},{c}\n"))
            .collect()
    }
}

/// The four de Luca parameters of a non-empty word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    pub r: usize,
    pub k: usize,
    pub l: usize,
    pub h: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialFactorReport {
    pub r: usize,
    pub k: usize,
    pub l: usize,
    pub h: usize,
    /// Length to the right special factors of that length with their right valence.
    pub right_special_by_length: BTreeMap<usize, BTreeSet<(Word, usize)>>,
    /// Length to the left special factors of that length with their left valence.
    pub left_special_by_length: BTreeMap<usize, BTreeSet<(Word, usize)>>,
    pub bispecial: BTreeSet<Word>,
}

impl SpecialFactorReport {
    pub fn parameters(&self) -> Parameters {
        Parameters {
            r: self.r,
            k: self.k,
            l: self.l,
            h: self.h,
        }
    }

    pub fn right_special(&self) -> impl Iterator<Item = &(Word, usize)> {
        self.right_special_by_length.values().flatten()
    }

    pub fn left_special(&self) -> impl Iterator<Item = &(Word, usize)> {
        self.left_special_by_length.values().flatten()
    }
}

/// Suffix automata of a word and of its reversal.
#[derive(Clone, Debug)]
pub struct FactorIndex {
    right: SuffixAutomaton,
    left: SuffixAutomaton,
}

impl FactorIndex {
    pub fn new(w: &[Symbol]) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(FactorIndex {
            right: SuffixAutomaton::new(w),
            left: SuffixAutomaton::new(&reverse(w)),
        })
    }

    pub fn len(&self) -> usize {
        self.right.word_len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn profile(&self) -> ComplexityProfile {
        ComplexityProfile {
            values: self.right.factor_counts(),
            word_length: self.len(),
        }
    }

    pub fn r(&self) -> usize {
        first_positive_zero(&self.right.right_special_counts())
    }

    pub fn k(&self) -> usize {
        self.right.shortest_unrepeated_suffix()
    }

    pub fn l(&self) -> usize {
        first_positive_zero(&self.left.right_special_counts())
    }

    pub fn h(&self) -> usize {
        self.left.shortest_unrepeated_suffix()
    }

    pub fn parameters(&self) -> Parameters {
        Parameters {
            r: self.r(),
            k: self.k(),
            l: self.l(),
            h: self.h(),
        }
    }

    /// Sum of right valences over all factors of each length.
    pub fn right_valence_sums(&self) -> Vec<usize> {
        self.right.valence_sums()
    }

    pub fn right_valence(&self, u: &[Symbol]) -> Option<usize> {
        self.right.walk(u).map(|s| self.right.out_degree(s))
    }

    pub fn left_valence(&self, u: &[Symbol]) -> Option<usize> {
        self.left.walk(&reverse(u)).map(|s| self.left.out_degree(s))
    }

    pub fn special_factor_report(&self) -> SpecialFactorReport {
        let mut right_special_by_length: BTreeMap<usize, BTreeSet<(Word, usize)>> = BTreeMap::new();
        for (u, deg) in self.right.right_special_factors() {
            right_special_by_length.entry(u.len()).or_default().insert((u, deg));
        }
        let mut left_special_by_length: BTreeMap<usize, BTreeSet<(Word, usize)>> = BTreeMap::new();
        for (u, deg) in self.left.right_special_factors() {
            let u = reverse(&u);
            left_special_by_length.entry(u.len()).or_default().insert((u, deg));
        }
        let right: BTreeSet<&Word> = right_special_by_length.values().flatten().map(|(u, _)| u).collect();
        let bispecial = left_special_by_length
            .values()
            .flatten()
            .filter(|(u, _)| right.contains(u))
            .map(|(u, _)| u.clone())
            .collect();
        SpecialFactorReport {
            r: self.r(),
            k: self.k(),
            l: self.l(),
            h: self.h(),
            right_special_by_length,
            left_special_by_length,
            bispecial,
        }
    }
}

fn first_positive_zero(counts: &[usize]) -> usize {
    // The whole word is never right special, so a zero always exists.
    (1..counts.len()).find(|&n| counts[n] == 0).unwrap_or(counts.len())
}

pub fn complexity_profile(w: &[Symbol]) -> Result<ComplexityProfile> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(ComplexityProfile {
        values: SuffixAutomaton::new(w).factor_counts(),
        word_length: w.len(),
    })
}

/// Number of distinct letters `x` with `u·x` a factor of `w`.
pub fn right_valence(w: &[Symbol], u: &[Symbol]) -> Result<usize> {
    let sam = SuffixAutomaton::new(w);
    sam.walk(u)
        .map(|s| sam.out_degree(s))
        .ok_or_else(|| Error::NotAFactor(Word::from(u)))
}

/// Number of distinct letters `x` with `x·u` a factor of `w`.
pub fn left_valence(w: &[Symbol], u: &[Symbol]) -> Result<usize> {
    right_valence(&reverse(w), &reverse(u)).map_err(|_| Error::NotAFactor(Word::from(u)))
}

pub fn special_factor_report(w: &[Symbol]) -> Result<SpecialFactorReport> {
    Ok(FactorIndex::new(w)?.special_factor_report())
}

pub fn parameters(w: &[Symbol]) -> Result<Parameters> {
    Ok(FactorIndex::new(w)?.parameters())
}

/// Smallest `p >= 1` with `w[i] = w[i + p]` wherever both sides exist.
pub fn minimal_period(w: &[Symbol]) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    // Longest proper border via the prefix function.
    let mut border = vec![0usize; w.len()];
    for i in 1..w.len() {
        let mut j = border[i - 1];
        while j > 0 && w[i] != w[j] {
            j = border[j - 1];
        }
        if w[i] == w[j] {
            j += 1;
        }
        border[i] = j;
    }
    Ok(w.len() - border[w.len() - 1])
}

/// `|w| = R + K + |Alph(w)| - 2`, given the parameters of `w`.
pub fn rk_identity(len: usize, r: usize, k: usize, alphabet: usize) -> bool {
    len + 2 == r + k + alphabet
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn profile(s: &str) -> Vec<usize> {
        complexity_profile(&w(s)).unwrap().values
    }

    #[test]
    fn profiles() {
        assert_eq!(profile("aaabb"), [1, 2, 3, 3, 2, 1]);
        assert_eq!(profile("ababadac"), [1, 4, 5, 5, 5, 4, 3, 2, 1]);
        assert_eq!(profile("abbcc"), [1, 3, 4, 3, 2, 1]);
        assert_eq!(profile("a"), [1, 1]);
        assert_eq!(complexity_profile(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn valences() {
        let u = w("ababadac");
        assert_eq!(right_valence(&u, &w("a")), Ok(3));
        assert_eq!(right_valence(&u, &w("c")), Ok(0));
        assert_eq!(right_valence(&u, &w("b")), Ok(1));
        assert_eq!(right_valence(&u, &w("d")), Ok(1));
        assert_eq!(right_valence(&u, &w("")), Ok(4));
        assert_eq!(right_valence(&u, &w("cc")), Err(Error::NotAFactor(w("cc"))));
        assert_eq!(left_valence(&u, &w("a")), Ok(2));
        assert_eq!(left_valence(&u, &w("b")), Ok(1));
    }

    #[test]
    fn reference_parameters() {
        let p = parameters(&w("aaabb")).unwrap();
        assert_eq!((p.r, p.k), (3, 2));
        let p = parameters(&w("ababadac")).unwrap();
        assert_eq!((p.r, p.k), (4, 1));
        let p = parameters(&w("abbcc")).unwrap();
        assert_eq!(p, Parameters { r: 2, k: 2, l: 2, h: 1 });
        let p = parameters(&w("abbac")).unwrap();
        assert_eq!((p.r, p.k), (2, 1));
        let p = parameters(&w("ccbba")).unwrap();
        assert_eq!((p.r, p.k), (2, 1));
    }

    #[test]
    fn one_letter_convention() {
        let p = parameters(&w("aaaa")).unwrap();
        assert_eq!(p, Parameters { r: 1, k: 4, l: 1, h: 4 });
        assert_eq!(parameters(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn report_lists_special_factors() {
        let report = special_factor_report(&w("ababadac")).unwrap();
        let len1: Vec<_> = report.right_special_by_length[&1].iter().cloned().collect();
        assert_eq!(len1, vec![(w("a"), 3)]);
        assert!(report.right_special_by_length[&0].contains(&(w(""), 4)));
        assert!(report.bispecial.contains(&w("a")));
        assert!(report.right_special().all(|(_, v)| *v >= 2));
        assert!(report.left_special().all(|(_, v)| *v >= 2));

        // abbac: two right special letters, a and b.
        let report = special_factor_report(&w("abbac")).unwrap();
        let len1: Vec<_> = report.right_special_by_length[&1]
            .iter()
            .map(|(u, _)| u.clone())
            .collect();
        assert_eq!(len1, vec![w("a"), w("b")]);
    }

    #[test]
    fn periods() {
        assert_eq!(minimal_period(&w("aaabb")), Ok(5));
        assert_eq!(minimal_period(&w("aaaa")), Ok(1));
        assert_eq!(minimal_period(&w("ababa")), Ok(2));
        assert_eq!(minimal_period(&w("abc")), Ok(3));
        assert_eq!(minimal_period(&[]), Err(Error::EmptyWord));
    }
}

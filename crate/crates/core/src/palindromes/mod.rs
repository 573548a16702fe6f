//! Palindromic factors and richness.
//!
//! A word of length `n` has at most `n + 1` distinct palindromic factors
//! (counting the empty word) and is *rich* when it reaches that bound.
//! Richness is decided here in three ways that share no code path:
//!
//! * [`is_rich_by_count`] counts eertree nodes;
//! * [`is_rich_by_ups`] checks, prefix by prefix, that the longest
//!   palindromic suffix occurs exactly once in that prefix (if it does not,
//!   no shorter palindromic suffix can, as each one is also a prefix of it);
//! * [`is_rich_by_returns`] checks that every complete return to every
//!   palindromic factor is itself a palindrome.

mod eertree;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use eertree::Eertree;

use crate::error::{Error, Result};
use crate::word::{is_factor, is_palindrome, occurrences, Symbol, Word};

/// Longest palindromic suffix of one prefix and whether it is unioccurrent there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrefixUps {
    pub prefix_len: usize,
    pub longest_palindromic_suffix_len: usize,
    pub unioccurrent: bool,
}

#[derive(Clone, Debug)]
pub struct PalindromeIndex {
    tree: Eertree,
    len: usize,
    prefix_ups: Vec<PrefixUps>,
}

impl PalindromeIndex {
    pub fn new(w: &[Symbol]) -> Self {
        let tree = Eertree::new(w);
        let prefix_ups = (0..w.len())
            .map(|i| {
                let lps = tree.longest_suffix_len(i);
                let prefix = &w[..=i];
                PrefixUps {
                    prefix_len: i + 1,
                    longest_palindromic_suffix_len: lps,
                    unioccurrent: occurrences(&prefix[i + 1 - lps..], prefix).len() == 1,
                }
            })
            .collect();
        PalindromeIndex {
            tree,
            len: w.len(),
            prefix_ups,
        }
    }

    /// Number of distinct palindromic factors, the empty word included.
    pub fn distinct_count(&self) -> usize {
        self.tree.node_count() + 1
    }

    pub fn palindromes(&self) -> BTreeSet<Word> {
        std::iter::once(Word::empty()).chain(self.tree.palindromes()).collect()
    }

    /// `P(0), P(1), ..., P(|w|)`: distinct palindromic factors per length.
    pub fn per_length_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.len + 1];
        counts[0] = 1;
        for len in self.tree.lengths() {
            counts[len] += 1;
        }
        counts
    }

    pub fn prefix_ups(&self) -> &[PrefixUps] {
        &self.prefix_ups
    }
}

/// All distinct palindromic factors of `w`, the empty word included.
pub fn palindromic_factors(w: &[Symbol]) -> BTreeSet<Word> {
    PalindromeIndex::new(w).palindromes()
}

pub fn is_rich_by_count(w: &[Symbol]) -> bool {
    Eertree::new(w).node_count() == w.len()
}

pub fn is_rich(w: &[Symbol]) -> bool {
    is_rich_by_count(w)
}

/// Every non-empty prefix has a unioccurrent palindromic suffix.
pub fn is_rich_by_ups(w: &[Symbol]) -> bool {
    PalindromeIndex::new(w).prefix_ups().iter().all(|p| p.unioccurrent)
}

/// Factors of `w` with exactly two occurrences of `u`, one as a prefix and
/// one as a suffix, listed once each in order of first starting position.
pub fn complete_returns(w: &[Symbol], u: &[Symbol]) -> Result<Vec<Word>> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    if !is_factor(u, w) {
        return Err(Error::NotAFactor(Word::from(u)));
    }
    let positions = occurrences(u, w);
    let mut seen = BTreeSet::new();
    Ok(positions
        .windows(2)
        .map(|pair| Word::from(&w[pair[0]..pair[1] + u.len()]))
        .filter(|r| seen.insert(r.clone()))
        .collect())
}

/// Distinct non-empty palindromic factors by expansion around every centre.
fn palindromes_by_centre(w: &[Symbol]) -> BTreeSet<&[Symbol]> {
    let n = w.len();
    let mut found = BTreeSet::new();
    for centre in 0..2 * n {
        // Odd centres sit on a letter, even ones between two letters.
        let (mut lo, mut hi) = (centre / 2, centre / 2 + centre % 2);
        while hi < n && w[lo] == w[hi] {
            found.insert(&w[lo..=hi]);
            if lo == 0 {
                break;
            }
            lo -= 1;
            hi += 1;
        }
    }
    found
}

/// Every complete return to every non-empty palindromic factor is a palindrome.
pub fn is_rich_by_returns(w: &[Symbol]) -> bool {
    palindromes_by_centre(w).into_iter().all(|u| {
        let positions = occurrences(u, w);
        positions
            .windows(2)
            .all(|pair| is_palindrome(&w[pair[0]..pair[1] + u.len()]))
    })
}

pub fn longest_palindromic_prefix_len(w: &[Symbol]) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((1..=w.len()).rev().find(|&n| is_palindrome(&w[..n])).unwrap_or(1))
}

pub fn longest_palindromic_suffix_len(w: &[Symbol]) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    Ok((1..=n).rev().find(|&l| is_palindrome(&w[n - l..])).unwrap_or(1))
}

pub fn longest_palindromic_prefix(w: &[Symbol]) -> Result<Word> {
    longest_palindromic_prefix_len(w).map(|n| Word::from(&w[..n]))
}

pub fn longest_palindromic_suffix(w: &[Symbol]) -> Result<Word> {
    longest_palindromic_suffix_len(w).map(|n| Word::from(&w[w.len() - n..]))
}

/// Whether the longest palindromic prefix and suffix of `w` leave no gap:
/// `w = p = q`, `w = p·q`, or the two occurrences overlap.
pub fn is_unseparated(w: &[Symbol]) -> Result<bool> {
    let p = longest_palindromic_prefix_len(w)?;
    let q = longest_palindromic_suffix_len(w)?;
    Ok(p + q >= w.len())
}

//! Quadratic-or-worse reference implementations computed straight from the
//! definitions over materialized factor sets.
//!
//! Nothing here shares code with the indexed structures (suffix automata,
//! eertree); the verification battery and the test suites compare the two.

use std::collections::BTreeSet;

use crate::word::{alphabet_size, factors_of_length, is_palindrome, occurrences, Symbol, Word};

pub fn complexity_profile(w: &[Symbol]) -> Vec<usize> {
    (0..=w.len()).map(|n| factors_of_length(w, n).len()).collect()
}

fn extensions(w: &[Symbol], u: &[Symbol], right: bool) -> BTreeSet<Symbol> {
    occurrences(u, w)
        .into_iter()
        .filter_map(|i| {
            if right {
                w.get(i + u.len()).copied()
            } else {
                i.checked_sub(1).map(|j| w[j])
            }
        })
        .collect()
}

pub fn right_valence(w: &[Symbol], u: &[Symbol]) -> usize {
    extensions(w, u, true).len()
}

pub fn left_valence(w: &[Symbol], u: &[Symbol]) -> usize {
    extensions(w, u, false).len()
}

/// Right special factors of length `n`.
pub fn right_special(w: &[Symbol], n: usize) -> BTreeSet<Word> {
    factors_of_length(w, n)
        .into_iter()
        .filter(|u| right_valence(w, u) >= 2)
        .collect()
}

pub fn left_special(w: &[Symbol], n: usize) -> BTreeSet<Word> {
    factors_of_length(w, n)
        .into_iter()
        .filter(|u| left_valence(w, u) >= 2)
        .collect()
}

fn first_length_without(w: &[Symbol], special: impl Fn(&[Symbol], usize) -> BTreeSet<Word>) -> usize {
    (1..=w.len()).find(|&n| special(w, n).is_empty()).unwrap_or(w.len() + 1)
}

pub fn r(w: &[Symbol]) -> usize {
    first_length_without(w, right_special)
}

pub fn l(w: &[Symbol]) -> usize {
    first_length_without(w, left_special)
}

pub fn k(w: &[Symbol]) -> usize {
    (1..=w.len())
        .find(|&n| occurrences(&w[w.len() - n..], w).len() == 1)
        .unwrap_or(w.len())
}

pub fn h(w: &[Symbol]) -> usize {
    (1..=w.len())
        .find(|&n| occurrences(&w[..n], w).len() == 1)
        .unwrap_or(w.len())
}

pub fn minimal_period(w: &[Symbol]) -> usize {
    (1..=w.len())
        .find(|&p| (0..w.len() - p).all(|i| w[i] == w[i + p]))
        .unwrap_or(w.len())
}

/// All distinct palindromic factors, including the empty word.
pub fn palindromic_factors(w: &[Symbol]) -> BTreeSet<Word> {
    (0..=w.len())
        .flat_map(|n| factors_of_length(w, n))
        .filter(|u| is_palindrome(u))
        .collect()
}

pub fn is_rich(w: &[Symbol]) -> bool {
    palindromic_factors(w).len() == w.len() + 1
}

/// Definitional GT test on a brute-force profile.
pub fn is_gt(w: &[Symbol]) -> bool {
    let k = alphabet_size(w);
    if k <= 1 {
        return !w.is_empty();
    }
    let c = complexity_profile(w);
    let n = w.len();
    // Try every admissible (m, M).
    (1..=n).any(|m| {
        (m..=n).any(|big_m| {
            c[0] == 1
                && (1..=m).all(|i| c[i] == k + i - 1)
                && (m..big_m).all(|i| c[i + 1] == c[i])
                && (big_m..n).all(|i| c[i + 1] + 1 == c[i])
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn reference_values() {
        assert_eq!(complexity_profile(&w("aaabb")), [1, 2, 3, 3, 2, 1]);
        assert_eq!((r(&w("aaabb")), k(&w("aaabb"))), (3, 2));
        assert_eq!(
            (r(&w("abbcc")), k(&w("abbcc")), l(&w("abbcc")), h(&w("abbcc"))),
            (2, 2, 2, 1)
        );
        assert_eq!(
            (r(&w("aaaa")), k(&w("aaaa")), l(&w("aaaa")), h(&w("aaaa"))),
            (1, 4, 1, 4)
        );
        assert_eq!(minimal_period(&w("aaabb")), 5);
        assert_eq!(palindromic_factors(&w("aaabb")).len(), 6);
        assert!(is_gt(&w("ababadac")));
        assert!(!is_gt(&w("aabbaa")));
        assert!(is_gt(&w("aaaa")));
    }
}

//! Finite words over a small dense alphabet.
//!
//! Symbols are small integers; the letters `a..z` are only a rendering of
//! ids `0..26`. Everything in this module works on plain slices so callers can
//! pass a [`Word`], a sub-slice of one, or a scratch buffer without copying.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A letter, identified by a small non-negative id.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u8);

impl Symbol {
    pub const fn new(id: u8) -> Self {
        Symbol(id)
    }

    pub const fn id(self) -> u8 {
        self.0
    }

    /// Parses a single ASCII letter; `a`/`A` is id 0.
    pub fn from_char(ch: char) -> Option<Self> {
        if ch.is_ascii_lowercase() {
            Some(Symbol(ch as u8 - b'a'))
        } else if ch.is_ascii_uppercase() {
            Some(Symbol(ch as u8 - b'A'))
        } else {
            None
        }
    }

    pub fn to_char(self) -> char {
        if self.0 < 26 {
            (b'a' + self.0) as char
        } else {
            '?'
        }
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

impl Serialize for Symbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Symbol {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        let mut chars = s.chars();
        match (chars.next().and_then(Symbol::from_char), chars.next()) {
            (Some(sym), None) => Ok(sym),
            _ => Err(serde::de::Error::custom(format!("invalid symbol {s:?}"))),
        }
    }
}

/// An immutable finite word.
///
/// Dereferences to `[Symbol]`, so slicing and iteration come for free and
/// every analysis function taking `&[Symbol]` accepts `&Word` directly.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_ids(ids: &[u8]) -> Self {
        Word(ids.iter().copied().map(Symbol).collect())
    }

    /// Parses a string of ASCII letters. The empty string is the empty word.
    pub fn parse(text: &str) -> Result<Self> {
        text.chars()
            .enumerate()
            .map(|(pos, ch)| Symbol::from_char(ch).ok_or(Error::Parse { ch, pos }))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }

    pub fn concat(parts: &[&[Symbol]]) -> Self {
        Word(parts.concat())
    }

    /// Orders by length first, then lexicographically.
    pub fn shortlex_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl AsRef<[Symbol]> for Word {
    fn as_ref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<&[Symbol]> for Word {
    fn from(symbols: &[Symbol]) -> Self {
        Word(symbols.to_vec())
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(&self.0, f)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Word(\"")?;
        render(&self.0, f)?;
        f.write_str("\")")
    }
}

fn render(symbols: &[Symbol], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for s in symbols {
        write!(f, "{}", s.to_char())?;
    }
    Ok(())
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Renders a slice of symbols as letters.
pub fn to_letters(w: &[Symbol]) -> String {
    w.iter().map(|s| s.to_char()).collect()
}

/// The set of distinct symbols occurring in `w`.
pub fn alphabet(w: &[Symbol]) -> BTreeSet<Symbol> {
    w.iter().copied().collect()
}

pub fn alphabet_size(w: &[Symbol]) -> usize {
    let mut seen = [false; 256];
    let mut count = 0;
    for s in w {
        if !std::mem::replace(&mut seen[s.0 as usize], true) {
            count += 1;
        }
    }
    count
}

/// Occurrence count of every symbol, indexed by id.
pub fn letter_counts(w: &[Symbol]) -> [usize; 256] {
    let mut counts = [0usize; 256];
    for s in w {
        counts[s.0 as usize] += 1;
    }
    counts
}

/// Distinct factors of length `n`. This is the materializing reference
/// implementation; the indexed structures in `complexity` must agree with it.
pub fn factors_of_length(w: &[Symbol], n: usize) -> BTreeSet<Word> {
    match n {
        _ if n > w.len() => BTreeSet::new(),
        0 => BTreeSet::from([Word::empty()]),
        _ => w.windows(n).map(Word::from).collect(),
    }
}

/// All distinct factors of `w`, including the empty word.
pub fn all_factors(w: &[Symbol]) -> BTreeSet<Word> {
    (0..=w.len()).flat_map(|n| factors_of_length(w, n)).collect()
}

/// Starting positions of every (possibly overlapping) occurrence of `u` in `w`.
pub fn occurrences(u: &[Symbol], w: &[Symbol]) -> Vec<usize> {
    if u.is_empty() {
        return (0..=w.len()).collect();
    }
    if u.len() > w.len() {
        return Vec::new();
    }
    w.windows(u.len())
        .enumerate()
        .filter_map(|(i, win)| (win == u).then_some(i))
        .collect()
}

pub fn occurrence_count(u: &[Symbol], w: &[Symbol]) -> Result<usize> {
    if u.is_empty() {
        return Err(Error::EmptyPattern);
    }
    Ok(occurrences(u, w).len())
}

pub fn is_factor(u: &[Symbol], w: &[Symbol]) -> bool {
    u.is_empty() || (u.len() <= w.len() && w.windows(u.len()).any(|win| win == u))
}

pub fn reverse(w: &[Symbol]) -> Word {
    w.iter().rev().copied().collect()
}

pub fn is_palindrome(w: &[Symbol]) -> bool {
    w.iter().eq(w.iter().rev())
}

/// Renames symbols so that first occurrences appear as 0, 1, 2, ...
pub fn canonical_form(w: &[Symbol]) -> Word {
    let mut map = [u8::MAX; 256];
    let mut next = 0u8;
    w.iter()
        .map(|s| {
            let slot = &mut map[s.0 as usize];
            if *slot == u8::MAX {
                *slot = next;
                next += 1;
            }
            Symbol(*slot)
        })
        .collect()
}

pub fn is_canonical(w: &[Symbol]) -> bool {
    let mut next = 0u8;
    for s in w {
        if s.0 > next {
            return false;
        }
        if s.0 == next {
            next += 1;
        }
    }
    true
}

/// Applies a symbol renaming given as a lookup table indexed by id.
pub fn rename(w: &[Symbol], table: &[Symbol]) -> Word {
    w.iter().map(|s| table[s.0 as usize]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn set(items: &[&str]) -> BTreeSet<Word> {
        items.iter().map(|s| w(s)).collect()
    }

    #[test]
    fn alphabet_examples() {
        assert_eq!(alphabet(&w("aaabb")), w("ab").iter().copied().collect());
        assert!(alphabet(&w("")).is_empty());
        assert_eq!(alphabet(&w("ababadac")).len(), 4);
        assert_eq!(alphabet(&w("ababadac")), w("abcd").iter().copied().collect());
        assert_eq!(alphabet_size(&w("ababadac")), 4);
    }

    #[test]
    fn factors_examples() {
        assert_eq!(factors_of_length(&w("aaabb"), 2), set(&["aa", "ab", "bb"]));
        assert_eq!(factors_of_length(&w("aaabb"), 0), set(&[""]));
        assert_eq!(factors_of_length(&w(""), 0), set(&[""]));
        assert!(factors_of_length(&w("aaabb"), 6).is_empty());
        assert_eq!(factors_of_length(&w("aaabb"), 5), set(&["aaabb"]));
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(occurrence_count(&w("a"), &w("aaabb")), Ok(3));
        assert_eq!(occurrence_count(&w("aba"), &w("ababa")), Ok(2));
        assert_eq!(occurrence_count(&w("ababa"), &w("ababadac")), Ok(1));
        assert_eq!(occurrence_count(&w(""), &w("ab")), Err(Error::EmptyPattern));
        assert_eq!(occurrences(&w("aba"), &w("ababa")), vec![0, 2]);
    }

    #[test]
    fn reversal_and_palindromes() {
        assert_eq!(reverse(&w("abbcc")), w("ccbba"));
        assert_eq!(reverse(&w("")), w(""));
        assert_eq!(reverse(&w("aba")), w("aba"));
        assert!(is_palindrome(&w("abacaba")));
        assert!(!is_palindrome(&w("ab")));
        assert!(is_palindrome(&w("")));
    }

    #[test]
    fn parsing() {
        assert_eq!(w("abz").as_slice(), &[Symbol(0), Symbol(1), Symbol(25)]);
        assert_eq!(w("AbC"), w("abc"));
        assert_eq!(Word::parse("ab1"), Err(Error::Parse { ch: '1', pos: 2 }));
        assert!(Word::parse("é").is_err());
        assert_eq!(w("ababadac").to_string(), "ababadac");
    }

    #[test]
    fn canonical_renaming() {
        assert_eq!(canonical_form(&w("cbca")), w("abac"));
        assert!(is_canonical(&w("abac")));
        assert!(!is_canonical(&w("ba")));
        assert!(is_canonical(&w("")));
    }

    #[test]
    fn serde_as_letters() {
        let json = serde_json::to_string(&w("abc")).unwrap();
        assert_eq!(json, "\"abc\"");
        assert_eq!(serde_json::from_str::<Word>(&json).unwrap(), w("abc"));
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn word(k: u8, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0..k, 0..=max_len).prop_map(|ids| Word::from_ids(&ids))
    }

    proptest! {
        #[test]
        fn factor_count_bound(w in word(4, 12), n in 0usize..14) {
            let count = factors_of_length(&w, n).len();
            if n <= w.len() {
                let k = alphabet_size(&w) as u32;
                let cap = (w.len() - n + 1).min(k.checked_pow(n as u32).unwrap_or(u32::MAX) as usize);
                prop_assert!(count <= cap);
            } else {
                prop_assert_eq!(count, 0);
            }
        }

        #[test]
        fn reversal_is_involution(w in word(4, 12)) {
            prop_assert_eq!(reverse(&reverse(&w)), w.clone());
            prop_assert_eq!(alphabet(&reverse(&w)), alphabet(&w));
        }

        #[test]
        fn reversal_maps_factor_sets(w in word(3, 12), n in 0usize..13) {
            let reversed: BTreeSet<Word> = factors_of_length(&w, n).iter().map(|u| reverse(u)).collect();
            prop_assert_eq!(factors_of_length(&reverse(&w), n), reversed);
        }
    }
}

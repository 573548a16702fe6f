//! Suffix automaton over a finite word.
//!
//! Each state stands for an end-position class: the factors with the same set
//! of end positions. Those factors are the suffixes of the longest one whose
//! lengths lie in `(len(link), len]`, and they share their right extensions,
//! so per-length counts of factors, right special factors and right valences
//! are all range updates over the states.

use crate::word::{Symbol, Word};

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
struct State {
    len: u32,
    link: u32,
    /// End position (inclusive index) of the first occurrence.
    first_end: u32,
    next: Vec<(Symbol, u32)>,
}

impl State {
    fn transition(&self, s: Symbol) -> Option<u32> {
        self.next.iter().find(|(c, _)| *c == s).map(|&(_, t)| t)
    }

    fn set_transition(&mut self, s: Symbol, target: u32) {
        match self.next.iter_mut().find(|(c, _)| *c == s) {
            Some(slot) => slot.1 = target,
            None => self.next.push((s, target)),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuffixAutomaton {
    word: Vec<Symbol>,
    states: Vec<State>,
    last: u32,
}

impl SuffixAutomaton {
    pub fn new(word: &[Symbol]) -> Self {
        let mut sam = SuffixAutomaton {
            word: word.to_vec(),
            states: Vec::with_capacity(2 * word.len() + 1),
            last: 0,
        };
        sam.states.push(State {
            len: 0,
            link: NONE,
            first_end: NONE,
            next: Vec::new(),
        });
        for (i, &s) in word.iter().enumerate() {
            sam.extend(s, i as u32);
        }
        sam
    }

    fn extend(&mut self, s: Symbol, pos: u32) {
        let cur = self.states.len() as u32;
        self.states.push(State {
            len: self.states[self.last as usize].len + 1,
            link: 0,
            first_end: pos,
            next: Vec::new(),
        });
        let mut p = self.last;
        while p != NONE && self.states[p as usize].transition(s).is_none() {
            self.states[p as usize].set_transition(s, cur);
            p = self.states[p as usize].link;
        }
        if p != NONE {
            let q = self.states[p as usize].transition(s).unwrap();
            if self.states[p as usize].len + 1 == self.states[q as usize].len {
                self.states[cur as usize].link = q;
            } else {
                let clone = self.states.len() as u32;
                let mut cloned = self.states[q as usize].clone();
                cloned.len = self.states[p as usize].len + 1;
                self.states.push(cloned);
                while p != NONE && self.states[p as usize].transition(s) == Some(q) {
                    self.states[p as usize].set_transition(s, clone);
                    p = self.states[p as usize].link;
                }
                self.states[q as usize].link = clone;
                self.states[cur as usize].link = clone;
            }
        }
        self.last = cur;
    }

    pub fn word_len(&self) -> usize {
        self.word.len()
    }

    /// Length range `(lo, hi]` of the factors represented by a non-root state.
    fn range(&self, state: usize) -> (usize, usize) {
        let st = &self.states[state];
        (self.states[st.link as usize].len as usize, st.len as usize)
    }

    /// State reached by reading `u` from the root, if `u` is a factor.
    pub fn walk(&self, u: &[Symbol]) -> Option<usize> {
        let mut state = 0u32;
        for &s in u {
            state = self.states[state as usize].transition(s)?;
        }
        Some(state as usize)
    }

    pub fn out_degree(&self, state: usize) -> usize {
        self.states[state].next.len()
    }

    pub fn extensions(&self, state: usize) -> impl Iterator<Item = Symbol> + '_ {
        self.states[state].next.iter().map(|&(c, _)| c)
    }

    /// Number of distinct factors of each length `0..=|w|`.
    pub fn factor_counts(&self) -> Vec<usize> {
        self.range_sum(|_| 1)
    }

    /// Number of right special factors of each length `0..=|w|`.
    pub fn right_special_counts(&self) -> Vec<usize> {
        self.range_sum(|deg| usize::from(deg >= 2))
    }

    /// Sum of right valences over the factors of each length `0..=|w|`.
    pub fn valence_sums(&self) -> Vec<usize> {
        self.range_sum(|deg| deg)
    }

    /// Adds `weight(out_degree)` to every length represented by each state.
    fn range_sum(&self, weight: impl Fn(usize) -> usize) -> Vec<usize> {
        let n = self.word.len();
        let mut diff = vec![0isize; n + 2];
        let mut out = vec![0usize; n + 1];
        out[0] = weight(self.out_degree(0));
        for state in 1..self.states.len() {
            let wgt = weight(self.out_degree(state)) as isize;
            if wgt == 0 {
                continue;
            }
            let (lo, hi) = self.range(state);
            diff[lo + 1] += wgt;
            diff[hi + 1] -= wgt;
        }
        let mut acc = 0isize;
        for (len, slot) in out.iter_mut().enumerate().skip(1) {
            acc += diff[len];
            *slot = acc as usize;
        }
        out
    }

    /// Every right special factor together with its right valence.
    pub fn right_special_factors(&self) -> Vec<(Word, usize)> {
        let mut found = Vec::new();
        if self.out_degree(0) >= 2 {
            found.push((Word::empty(), self.out_degree(0)));
        }
        for state in 1..self.states.len() {
            let deg = self.out_degree(state);
            if deg < 2 {
                continue;
            }
            let (lo, hi) = self.range(state);
            let end = self.states[state].first_end as usize + 1;
            for len in lo + 1..=hi {
                found.push((Word::from(&self.word[end - len..end]), deg));
            }
        }
        found
    }

    /// Length of the shortest suffix occurring exactly once.
    ///
    /// The state of the whole word has end-position set `{|w|}`, so all of
    /// its members are unrepeated; everything shorter lives in a state whose
    /// end-position set is strictly larger.
    pub fn shortest_unrepeated_suffix(&self) -> usize {
        let link = self.states[self.last as usize].link;
        self.states[link as usize].len as usize + 1
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }
}

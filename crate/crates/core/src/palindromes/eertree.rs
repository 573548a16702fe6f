//! Palindromic tree (eertree).
//!
//! One node per distinct non-empty palindromic factor plus two roots: an
//! imaginary root of length -1 and the empty palindrome. Suffix links point
//! to the longest proper palindromic suffix. Appending a letter adds at most
//! one node, namely the longest palindromic suffix of the new prefix when it
//! had not been seen before.

use crate::word::{Symbol, Word};

const IMAGINARY: usize = 0;
const EMPTY: usize = 1;

#[derive(Clone, Debug)]
struct Node {
    len: isize,
    link: usize,
    /// End position (inclusive) of the first occurrence.
    first_end: usize,
    next: Vec<(Symbol, usize)>,
}

impl Node {
    fn child(&self, s: Symbol) -> Option<usize> {
        self.next.iter().find(|(c, _)| *c == s).map(|&(_, t)| t)
    }
}

#[derive(Clone, Debug)]
pub struct Eertree {
    word: Vec<Symbol>,
    nodes: Vec<Node>,
    /// Node of the longest palindromic suffix after each prefix `w[..=i]`.
    suffix_node: Vec<usize>,
}

impl Eertree {
    pub fn new(word: &[Symbol]) -> Self {
        let mut tree = Eertree {
            word: word.to_vec(),
            nodes: vec![
                Node {
                    len: -1,
                    link: IMAGINARY,
                    first_end: 0,
                    next: Vec::new(),
                },
                Node {
                    len: 0,
                    link: IMAGINARY,
                    first_end: 0,
                    next: Vec::new(),
                },
            ],
            suffix_node: Vec::with_capacity(word.len()),
        };
        let mut last = EMPTY;
        for i in 0..word.len() {
            last = tree.push(i, last);
            tree.suffix_node.push(last);
        }
        tree
    }

    /// Walks suffix links from `node` until `x·P·x` fits ending at `i`.
    fn extendable(&self, mut node: usize, i: usize) -> usize {
        loop {
            let len = self.nodes[node].len;
            let before = i as isize - 1 - len;
            if before >= 0 && self.word[before as usize] == self.word[i] {
                return node;
            }
            node = self.nodes[node].link;
        }
    }

    fn push(&mut self, i: usize, last: usize) -> usize {
        let s = self.word[i];
        let parent = self.extendable(last, i);
        if let Some(existing) = self.nodes[parent].child(s) {
            return existing;
        }
        let len = self.nodes[parent].len + 2;
        let link = if len == 1 {
            EMPTY
        } else {
            let from = self.extendable(self.nodes[parent].link, i);
            self.nodes[from]
                .child(s)
                .expect("proper palindromic suffix already indexed")
        };
        let id = self.nodes.len();
        self.nodes.push(Node {
            len,
            link,
            first_end: i,
            next: Vec::new(),
        });
        self.nodes[parent].next.push((s, id));
        id
    }

    /// Distinct non-empty palindromic factors.
    pub fn node_count(&self) -> usize {
        self.nodes.len() - 2
    }

    fn node_word(&self, node: usize) -> Word {
        let len = self.nodes[node].len as usize;
        let end = self.nodes[node].first_end + 1;
        Word::from(&self.word[end - len..end])
    }

    /// Every distinct non-empty palindromic factor.
    pub fn palindromes(&self) -> impl Iterator<Item = Word> + '_ {
        (2..self.nodes.len()).map(|n| self.node_word(n))
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes[2..].iter().map(|n| n.len as usize)
    }

    /// Length of the longest palindromic suffix of `w[..=i]`.
    pub fn longest_suffix_len(&self, i: usize) -> usize {
        self.nodes[self.suffix_node[i]].len as usize
    }
}

//! Closed-form heart shapes and their matchers.
//!
//! Every matcher reads candidate parameters off the palindromic prefix and
//! suffix, rebuilds the word with [`Form::instantiate`] and accepts only an
//! exact reproduction, so a returned form always re-instantiates to its input.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::word::{alphabet, reverse, Symbol, Word};

/// The six shapes of a rich heart whose palindromic prefix and suffix have
/// disjoint alphabets. Mirrored instances are the reversals of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DisjointVariant {
    I,
    Ii,
    Iii,
    Iv,
    V,
    Vi,
}

impl DisjointVariant {
    pub const ALL: [DisjointVariant; 6] = [Self::I, Self::Ii, Self::Iii, Self::Iv, Self::V, Self::Vi];

    pub fn numeral(self) -> &'static str {
        match self {
            Self::I => "i",
            Self::Ii => "ii",
            Self::Iii => "iii",
            Self::Iv => "iv",
            Self::V => "v",
            Self::Vi => "vi",
        }
    }

    /// Whether the shape has a second letter `b` in the prefix.
    pub fn has_b(self) -> bool {
        matches!(self, Self::I | Self::Ii | Self::Iv | Self::V)
    }

    /// Whether the shape has a second letter `y` in the suffix.
    pub fn has_y(self) -> bool {
        matches!(self, Self::I | Self::Ii | Self::Iii | Self::V)
    }

    /// Whether the separator must contain letters outside the prefix and suffix.
    pub fn needs_z(self) -> bool {
        matches!(self, Self::Iv | Self::V | Self::Vi)
    }
}

/// A closed-form heart shape with its parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Form {
    /// One of the disjoint-alphabet shapes:
    ///
    /// * (i) `(ab)^m a · Z x · (yx)^n y`
    /// * (ii) `(ba)^m b · a Z x · (yx)^n y`
    /// * (iii) `a^(m+1) · Z x · (yx)^n y`
    /// * (iv) `(ab)^m a · Z · x^(n+1)`
    /// * (v) `(ab)^m a · Z · (xy)^n x`
    /// * (vi) `a^m · Z · x^n`
    ///
    /// `Z` is a product of distinct letters foreign to the prefix and suffix.
    /// When `mirrored` the word is the reversal of that shape.
    Disjoint {
        variant: DisjointVariant,
        mirrored: bool,
        a: Symbol,
        b: Option<Symbol>,
        x: Symbol,
        y: Option<Symbol>,
        m: usize,
        n: usize,
        z: Word,
    },
    /// `[b (xa)^m x]^k b (xa)^(n+1)` with `n >= m`, or its reversal when `mirrored`.
    SepByX {
        mirrored: bool,
        a: Symbol,
        b: Symbol,
        x: Symbol,
        k: usize,
        m: usize,
        n: usize,
    },
    /// `(ax)^n a x (bx)^m b`.
    GtRichLemma {
        a: Symbol,
        b: Symbol,
        x: Symbol,
        n: usize,
        m: usize,
    },
    /// `a Z1 a Z2 a` (never rich).
    Type1 { a: Symbol, z1: Word, z2: Word },
    /// `(ab)^(m+1) Z (ab)^(n-1) a` (never rich).
    Type2 {
        a: Symbol,
        b: Symbol,
        m: usize,
        n: usize,
        z: Word,
    },
    /// `a (ba)^(n-1) Z (ba)^(m+1)`, the reversal of type 2 (never rich).
    Type3 {
        a: Symbol,
        b: Symbol,
        m: usize,
        n: usize,
        z: Word,
    },
}

impl Form {
    pub fn instantiate(&self) -> Word {
        match *self {
            Form::Disjoint {
                variant,
                mirrored,
                a,
                b,
                x,
                y,
                m,
                n,
                ref z,
            } => {
                let b = b.unwrap_or(a);
                let y = y.unwrap_or(x);
                let mut v = match variant {
                    DisjointVariant::I => [
                        alternating(a, b, m, true),
                        z.to_vec(),
                        vec![x],
                        alternating(y, x, n, true),
                    ]
                    .concat(),
                    DisjointVariant::Ii => [
                        alternating(b, a, m, true),
                        vec![a],
                        z.to_vec(),
                        vec![x],
                        alternating(y, x, n, true),
                    ]
                    .concat(),
                    DisjointVariant::Iii => [power(a, m + 1), z.to_vec(), vec![x], alternating(y, x, n, true)].concat(),
                    DisjointVariant::Iv => [alternating(a, b, m, true), z.to_vec(), power(x, n + 1)].concat(),
                    DisjointVariant::V => [alternating(a, b, m, true), z.to_vec(), alternating(x, y, n, true)].concat(),
                    DisjointVariant::Vi => [power(a, m), z.to_vec(), power(x, n)].concat(),
                };
                if mirrored {
                    v.reverse();
                }
                Word::new(v)
            }
            Form::SepByX {
                mirrored,
                a,
                b,
                x,
                k,
                m,
                n,
            } => {
                let block = [vec![b], alternating(x, a, m, false), vec![x]].concat();
                let mut v = [block.repeat(k), vec![b], alternating(x, a, n + 1, false)].concat();
                if mirrored {
                    v.reverse();
                }
                Word::new(v)
            }
            Form::GtRichLemma { a, b, x, n, m } => {
                Word::new([alternating(a, x, n, true), vec![x], alternating(b, x, m, true)].concat())
            }
            Form::Type1 { a, ref z1, ref z2 } => Word::concat(&[&[a], z1, &[a], z2, &[a]]),
            Form::Type2 { a, b, m, n, ref z } => Word::new(
                [
                    alternating(a, b, m + 1, false),
                    z.to_vec(),
                    alternating(a, b, n - 1, true),
                ]
                .concat(),
            ),
            Form::Type3 { a, b, m, n, ref z } => Word::new(
                [
                    alternating(a, b, n - 1, true),
                    z.to_vec(),
                    alternating(b, a, m + 1, false),
                ]
                .concat(),
            ),
        }
    }

    /// Short name such as `rich-disjoint(iii)` or `sep-by-x~` (the tilde marks a mirror).
    pub fn name(&self) -> String {
        let tilde = |mirrored: bool| if mirrored { "~" } else { "" };
        match self {
            Form::Disjoint { variant, mirrored, .. } => {
                if *mirrored {
                    format!("rich-disjoint(vii:{})", variant.numeral())
                } else {
                    format!("rich-disjoint({})", variant.numeral())
                }
            }
            Form::SepByX { mirrored, .. } => format!("sep-by-x{}", tilde(*mirrored)),
            Form::GtRichLemma { .. } => "gt-rich".to_string(),
            Form::Type1 { .. } => "type1".to_string(),
            Form::Type2 { .. } => "type2".to_string(),
            Form::Type3 { .. } => "type3".to_string(),
        }
    }

    /// Whether the shape is one of the rich ones.
    pub fn is_rich_shape(&self) -> bool {
        !matches!(self, Form::Type1 { .. } | Form::Type2 { .. } | Form::Type3 { .. })
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// `(ab)^pairs`, followed by a final `a` when `close` is set.
fn alternating(a: Symbol, b: Symbol, pairs: usize, close: bool) -> Vec<Symbol> {
    let mut out = [a, b].repeat(pairs);
    if close {
        out.push(a);
    }
    out
}

fn power(a: Symbol, n: usize) -> Vec<Symbol> {
    vec![a; n]
}

/// `a^n` with `n >= 1`.
fn as_power(w: &[Symbol]) -> Option<(Symbol, usize)> {
    let a = *w.first()?;
    w.iter().all(|&s| s == a).then_some((a, w.len()))
}

/// `(ab)^m a` with `a != b` and `m >= 1`.
fn as_odd_alternation(w: &[Symbol]) -> Option<(Symbol, Symbol, usize)> {
    if w.len() < 3 || w.len().is_multiple_of(2) || w[0] == w[1] {
        return None;
    }
    let (a, b) = (w[0], w[1]);
    w.iter()
        .enumerate()
        .all(|(i, &s)| s == if i % 2 == 0 { a } else { b })
        .then_some((a, b, w.len() / 2))
}

/// A product of distinct letters none of which lies in `forbidden`.
fn is_foreign_distinct(z: &[Symbol], forbidden: &BTreeSet<Symbol>) -> bool {
    let letters = alphabet(z);
    letters.len() == z.len() && letters.is_disjoint(forbidden)
}

fn distinct(letters: &[Symbol]) -> bool {
    letters.iter().collect::<BTreeSet<_>>().len() == letters.len()
}

/// Tries the six disjoint shapes on `v = p·u·q` read left to right.
pub(crate) fn match_disjoint_direct(p: &[Symbol], u: &[Symbol], q: &[Symbol]) -> Option<Form> {
    let mut outer = alphabet(p);
    outer.extend(alphabet(q));
    let v = Word::concat(&[p, u, q]);
    // Candidate parameters per variant; the rebuild check below does the rest.
    let candidates = DisjointVariant::ALL.into_iter().filter_map(|variant| {
        let (a, b, m) = match variant {
            DisjointVariant::I | DisjointVariant::Iv | DisjointVariant::V => {
                let (a, b, m) = as_odd_alternation(p)?;
                (a, Some(b), m)
            }
            DisjointVariant::Ii => {
                let (b, a, m) = as_odd_alternation(p)?;
                (a, Some(b), m)
            }
            DisjointVariant::Iii => {
                let (a, len) = as_power(p)?;
                (a, None, len.checked_sub(1).filter(|&m| m >= 1)?)
            }
            DisjointVariant::Vi => {
                let (a, len) = as_power(p)?;
                (a, None, len)
            }
        };
        let (x, y, n) = match variant {
            DisjointVariant::I | DisjointVariant::Ii | DisjointVariant::Iii => {
                let (y, x, n) = as_odd_alternation(q)?;
                (x, Some(y), n)
            }
            DisjointVariant::V => {
                let (x, y, n) = as_odd_alternation(q)?;
                (x, Some(y), n)
            }
            DisjointVariant::Iv => {
                let (x, len) = as_power(q)?;
                (x, None, len.checked_sub(1).filter(|&n| n >= 1)?)
            }
            DisjointVariant::Vi => {
                let (x, len) = as_power(q)?;
                (x, None, len)
            }
        };
        let z = match variant {
            DisjointVariant::I | DisjointVariant::Iii => u.strip_suffix(&[x])?,
            DisjointVariant::Ii => u.strip_prefix(&[a])?.strip_suffix(&[x])?,
            DisjointVariant::Iv | DisjointVariant::V | DisjointVariant::Vi => u,
        };
        if variant.needs_z() && z.is_empty() {
            return None;
        }
        let letters: Vec<Symbol> = [Some(a), b, Some(x), y].into_iter().flatten().collect();
        if !distinct(&letters) || !is_foreign_distinct(z, &outer) {
            return None;
        }
        Some(Form::Disjoint {
            variant,
            mirrored: false,
            a,
            b,
            x,
            y,
            m,
            n,
            z: Word::from(z),
        })
    });
    candidates.into_iter().find(|form| form.instantiate() == v)
}

/// Matches `v = p·x·q` against `[b (xa)^m x]^k b (xa)^(n+1)` with `n >= m`,
/// read left to right. With `n < m` the prefix and suffix overlap.
pub(crate) fn match_sep_by_x_direct(p: &[Symbol], x: Symbol, q: &[Symbol]) -> Option<Form> {
    let (a, qx, n) = as_odd_alternation(q)?;
    let b = *p.first()?;
    if qx != x || !distinct(&[a, b, x]) {
        return None;
    }
    // m is the number of `xa` pairs after the leading b.
    let m = p[1..].chunks_exact(2).take_while(|pair| *pair == [x, a]).count();
    let block = 2 * m + 2;
    if m == 0 || n < m || !(p.len() - 1).is_multiple_of(block) {
        return None;
    }
    let form = Form::SepByX {
        mirrored: false,
        a,
        b,
        x,
        k: (p.len() - 1) / block,
        m,
        n,
    };
    (form.instantiate() == Word::concat(&[p, &[x], q])).then_some(form)
}

/// Matches `(ax)^n a x (bx)^m b` given its palindromic prefix and suffix.
pub(crate) fn match_gt_rich_direct(p: &[Symbol], u: &[Symbol], q: &[Symbol]) -> Option<Form> {
    let (a, x, n) = as_odd_alternation(p)?;
    let (b, qx, m) = as_odd_alternation(q)?;
    if u != [x] || qx != x || !distinct(&[a, b, x]) {
        return None;
    }
    Some(Form::GtRichLemma { a, b, x, n, m })
}

pub(crate) fn match_type1(v: &[Symbol]) -> Option<Form> {
    let a = *v.first()?;
    let positions: Vec<usize> = (0..v.len()).filter(|&i| v[i] == a).collect();
    let &[0, mid, last] = positions.as_slice() else {
        return None;
    };
    if last != v.len() - 1 {
        return None;
    }
    let (z1, z2) = (&v[1..mid], &v[mid + 1..last]);
    let ok = z1.len() >= 2
        && z2.len() >= 2
        && is_foreign_distinct(z1, &BTreeSet::from([a]))
        && is_foreign_distinct(z2, &alphabet(z1).into_iter().chain([a]).collect());
    ok.then(|| Form::Type1 {
        a,
        z1: Word::from(z1),
        z2: Word::from(z2),
    })
}

pub(crate) fn match_type2(v: &[Symbol]) -> Option<Form> {
    if v.len() < 2 || v[0] == v[1] {
        return None;
    }
    let (a, b) = (v[0], v[1]);
    let pairs = v.chunks_exact(2).take_while(|pair| *pair == [a, b]).count();
    let rest = &v[2 * pairs..];
    let z_len = rest.iter().take_while(|&&s| s != a && s != b).count();
    let (z, tail) = rest.split_at(z_len);
    let (ta, tb, tail_pairs) = match tail {
        [s] => (*s, b, 0),
        _ => as_odd_alternation(tail)?,
    };
    if pairs < 2 || z.is_empty() || ta != a || tb != b || !is_foreign_distinct(z, &BTreeSet::from([a, b])) {
        return None;
    }
    Some(Form::Type2 {
        a,
        b,
        m: pairs - 1,
        n: tail_pairs + 1,
        z: Word::from(z),
    })
}

pub(crate) fn match_type3(v: &[Symbol]) -> Option<Form> {
    match match_type2(&reverse(v))? {
        Form::Type2 { a, b, m, n, z } => Some(Form::Type3 {
            a,
            b,
            m,
            n,
            z: reverse(&z),
        }),
        _ => None,
    }
}

/// Reverses a form found on the reversal of a word.
pub(crate) fn mirror(form: Form) -> Form {
    match form {
        Form::Disjoint {
            variant,
            mirrored,
            a,
            b,
            x,
            y,
            m,
            n,
            z,
        } => Form::Disjoint {
            variant,
            mirrored: !mirrored,
            a,
            b,
            x,
            y,
            m,
            n,
            z,
        },
        Form::SepByX {
            mirrored,
            a,
            b,
            x,
            k,
            m,
            n,
        } => Form::SepByX {
            mirrored: !mirrored,
            a,
            b,
            x,
            k,
            m,
            n,
        },
        other => other,
    }
}

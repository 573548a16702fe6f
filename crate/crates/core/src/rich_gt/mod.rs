//! Classification of rich GT-words by the shape of their heart.
//!
//! Let `v` be the heart of a GT-word `w`, `p` its longest palindromic prefix
//! and `q` its longest palindromic suffix. Then `w` is rich exactly when
//!
//! 1. `p` and `q` are unseparated in `v`; or
//! 2. `v = p·x·q` for a letter `x`, the alphabets of `p` and `q` meet, and
//!    `x` occurs in `p` or `q`; or
//! 3. `v = p·u1·Z·u2·q` where `p` and `q` have disjoint alphabets, `u1` uses
//!    letters of `p`, `u2` letters of `q`, and `Z` letters of neither.
//!
//! [`classify_rich_gt`] routes on how `Alph(p)` and `Alph(q)` relate and
//! reports the closed form the heart instantiates. It never counts
//! palindromes, so comparing it with [`crate::palindromes::is_rich`] is a
//! genuine cross-check.

mod forms;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

pub use forms::{DisjointVariant, Form};

use crate::error::{Error, Result};
use crate::palindromes::{longest_palindromic_prefix_len, longest_palindromic_suffix_len};
use crate::trapezoid::{heart, is_gt};
use crate::word::{alphabet, reverse, Symbol, Word};

/// How the longest palindromic prefix and suffix of a word sit inside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SeparationKind {
    Unseparated,
    SeparatedByLetter { x: Symbol },
    SeparatedByWord { u: Word },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparationAnalysis {
    pub p: Word,
    pub q: Word,
    pub kind: SeparationKind,
}

impl SeparationAnalysis {
    /// The separator `u` in `v = p·u·q`; empty when unseparated.
    pub fn separator(&self) -> Word {
        match &self.kind {
            SeparationKind::Unseparated => Word::empty(),
            SeparationKind::SeparatedByLetter { x } => Word::new(vec![*x]),
            SeparationKind::SeparatedByWord { u } => u.clone(),
        }
    }
}

/// How `Alph(p)` and `Alph(q)` relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlphabetRelation {
    Disjoint,
    Nested,
    Incomparable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonRichReason {
    /// `v = p·x·q` with nested alphabets and `x` in neither.
    ForeignSeparatingLetter,
    /// `v = p·u·q` with nested alphabets and `|u| >= 2`.
    LongSeparatorNestedAlphabets,
    /// Disjoint alphabets, but `u` does not split as `u1·Z·u2`.
    NoDisjointDecomposition,
    /// Incomparable alphabets without the `(ax)^n a x (bx)^m b` shape.
    IncomparableAlphabets,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum RichCondition {
    Unseparated,
    LetterSeparated,
    DisjointAlphabets,
    NonRich { reason: NonRichReason },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichGtClassification {
    pub is_rich: bool,
    pub condition: RichCondition,
    pub matched_form: Option<Form>,
}

/// Flat JSON view of a classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RichGtRecord {
    pub word: Word,
    pub heart: Word,
    pub p: Word,
    pub q: Word,
    pub kind: SeparationKind,
    pub is_rich: bool,
    pub condition: RichCondition,
    pub form: Option<String>,
    pub params: Option<Form>,
}

pub fn separation_analysis(v: &[Symbol]) -> Result<SeparationAnalysis> {
    let p_len = longest_palindromic_prefix_len(v)?;
    let q_len = longest_palindromic_suffix_len(v)?;
    let kind = if p_len + q_len >= v.len() {
        SeparationKind::Unseparated
    } else {
        let u = &v[p_len..v.len() - q_len];
        match u {
            [x] => SeparationKind::SeparatedByLetter { x: *x },
            _ => SeparationKind::SeparatedByWord { u: Word::from(u) },
        }
    };
    Ok(SeparationAnalysis {
        p: Word::from(&v[..p_len]),
        q: Word::from(&v[v.len() - q_len..]),
        kind,
    })
}

pub fn alphabet_relation(p: &[Symbol], q: &[Symbol]) -> AlphabetRelation {
    let (a, b) = (alphabet(p), alphabet(q));
    if a.is_disjoint(&b) {
        AlphabetRelation::Disjoint
    } else if a.is_subset(&b) || b.is_subset(&a) {
        AlphabetRelation::Nested
    } else {
        AlphabetRelation::Incomparable
    }
}

/// Splits `u` as `u1·Z·u2` with `u1` over `Alph(p)`, `u2` over `Alph(q)` and
/// `Z` avoiding both. With disjoint alphabets the greedy split is the only
/// candidate.
pub fn disjoint_decomposition(p: &[Symbol], u: &[Symbol], q: &[Symbol]) -> Option<(Word, Word, Word)> {
    let (ap, aq) = (alphabet(p), alphabet(q));
    let u1_len = u.iter().take_while(|s| ap.contains(s)).count();
    let rest = &u[u1_len..];
    let u2_len = rest.iter().rev().take_while(|s| aq.contains(s)).count();
    let (z, u2) = rest.split_at(rest.len() - u2_len);
    z.iter()
        .all(|s| !ap.contains(s) && !aq.contains(s))
        .then(|| (Word::from(&u[..u1_len]), Word::from(z), Word::from(u2)))
}

fn separated_parts(v: &[Symbol]) -> Result<(SeparationAnalysis, Word)> {
    let analysis = separation_analysis(v)?;
    let u = analysis.separator();
    if u.is_empty() {
        return Err(Error::Precondition(format!(
            "p and q are unseparated in {}",
            Word::from(v)
        )));
    }
    Ok((analysis, u))
}

/// Matches a heart with separated `p`, `q` and disjoint alphabets against the
/// six disjoint shapes, then against the reversals of those shapes.
pub fn match_rich_disjoint_form(v: &[Symbol]) -> Result<Option<Form>> {
    let (s, u) = separated_parts(v)?;
    if alphabet_relation(&s.p, &s.q) != AlphabetRelation::Disjoint {
        return Err(Error::Precondition("Alph(p) and Alph(q) must be disjoint".into()));
    }
    if let Some(form) = forms::match_disjoint_direct(&s.p, &u, &s.q) {
        return Ok(Some(form));
    }
    Ok(forms::match_disjoint_direct(&reverse(&s.q), &reverse(&u), &reverse(&s.p)).map(forms::mirror))
}

/// Matches `v = p·x·q` with nested alphabets against
/// `[b (xa)^m x]^k b (xa)^(n+1)` and its reversal.
pub fn match_sep_by_x_form(v: &[Symbol]) -> Result<Option<Form>> {
    let (s, u) = separated_parts(v)?;
    let &[x] = u.as_slice() else {
        return Err(Error::Precondition(
            "p and q must be separated by a single letter".into(),
        ));
    };
    if alphabet_relation(&s.p, &s.q) != AlphabetRelation::Nested {
        return Err(Error::Precondition(
            "one of Alph(p), Alph(q) must contain the other".into(),
        ));
    }
    if let Some(form) = forms::match_sep_by_x_direct(&s.p, x, &s.q) {
        return Ok(Some(form));
    }
    Ok(forms::match_sep_by_x_direct(&reverse(&s.q), x, &reverse(&s.p)).map(forms::mirror))
}

/// Matches `v = (ax)^n a x (bx)^m b` when `Alph(p)` and `Alph(q)` meet but
/// neither contains the other.
pub fn match_gt_rich_lemma_form(v: &[Symbol]) -> Result<Option<Form>> {
    let (s, u) = separated_parts(v)?;
    if alphabet_relation(&s.p, &s.q) != AlphabetRelation::Incomparable {
        return Err(Error::Precondition(
            "Alph(p) and Alph(q) must intersect with neither containing the other".into(),
        ));
    }
    Ok(forms::match_gt_rich_direct(&s.p, &u, &s.q))
}

/// Matches the three never-rich shapes `a Z1 a Z2 a`, `(ab)^(m+1) Z (ab)^(n-1) a`
/// and the reversal of the latter.
pub fn match_nonrich_types(v: &[Symbol]) -> Option<Form> {
    forms::match_type1(v)
        .or_else(|| forms::match_type2(v))
        .or_else(|| forms::match_type3(v))
}

/// `x ↦ x` and `y ↦ y·x` for every other letter `y`.
pub fn apply_phi_x(w: &[Symbol], x: Symbol) -> Word {
    w.iter()
        .flat_map(|&s| if s == x { vec![x] } else { vec![s, x] })
        .collect()
}

/// Decides richness of a GT-word from the shape of its heart.
pub fn classify_rich_gt(w: &[Symbol]) -> Result<RichGtClassification> {
    if !is_gt(w)? {
        return Err(Error::NotGt(Word::from(w)));
    }
    let v = heart(w)?;
    let s = separation_analysis(v)?;
    let u = s.separator();
    let rich = |condition, matched_form| RichGtClassification {
        is_rich: true,
        condition,
        matched_form,
    };
    let non_rich = |reason| RichGtClassification {
        is_rich: false,
        condition: RichCondition::NonRich { reason },
        matched_form: match_nonrich_types(v),
    };
    if u.is_empty() {
        return Ok(rich(RichCondition::Unseparated, None));
    }
    let in_p_or_q = |x: &Symbol| s.p.contains(x) || s.q.contains(x);
    Ok(match alphabet_relation(&s.p, &s.q) {
        AlphabetRelation::Disjoint => match disjoint_decomposition(&s.p, &u, &s.q) {
            Some(_) => rich(RichCondition::DisjointAlphabets, match_rich_disjoint_form(v)?),
            None => non_rich(NonRichReason::NoDisjointDecomposition),
        },
        AlphabetRelation::Nested => match u.as_slice() {
            [x] if in_p_or_q(x) => rich(RichCondition::LetterSeparated, match_sep_by_x_form(v)?),
            [_] => non_rich(NonRichReason::ForeignSeparatingLetter),
            _ => non_rich(NonRichReason::LongSeparatorNestedAlphabets),
        },
        AlphabetRelation::Incomparable => match match_gt_rich_lemma_form(v)? {
            Some(form) => rich(RichCondition::LetterSeparated, Some(form)),
            None => match u.as_slice() {
                [x] if in_p_or_q(x) => rich(RichCondition::LetterSeparated, None),
                _ => non_rich(NonRichReason::IncomparableAlphabets),
            },
        },
    })
}

pub fn rich_gt_record(w: &[Symbol]) -> Result<RichGtRecord> {
    let c = classify_rich_gt(w)?;
    let v = heart(w)?;
    let s = separation_analysis(v)?;
    Ok(RichGtRecord {
        word: Word::from(w),
        heart: Word::from(v),
        p: s.p,
        q: s.q,
        kind: s.kind,
        is_rich: c.is_rich,
        condition: c.condition,
        form: c.matched_form.as_ref().map(Form::name),
        params: c.matched_form,
    })
}

/// Letters of `u` outside `Alph(p) ∪ Alph(q)`.
pub fn foreign_letters(p: &[Symbol], u: &[Symbol], q: &[Symbol]) -> BTreeSet<Symbol> {
    let mut outer = alphabet(p);
    outer.extend(alphabet(q));
    alphabet(u).difference(&outer).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn sym(c: char) -> Symbol {
        Symbol::from_char(c).unwrap()
    }

    #[test]
    fn separation_examples() {
        let s = separation_analysis(&w("ababada")).unwrap();
        assert_eq!((s.p, s.q, s.kind), (w("ababa"), w("ada"), SeparationKind::Unseparated));
        let s = separation_analysis(&w("bacabacac")).unwrap();
        assert_eq!((s.p, s.q), (w("bacab"), w("cac")));
        assert_eq!(s.kind, SeparationKind::SeparatedByLetter { x: sym('a') });
        let s = separation_analysis(&w("aaadcbcb")).unwrap();
        assert_eq!(s.kind, SeparationKind::SeparatedByWord { u: w("dc") });
        assert_eq!(separation_analysis(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn classification_examples() {
        let c = classify_rich_gt(&w("abacabade")).unwrap();
        assert!(c.is_rich);
        assert_eq!(c.condition, RichCondition::Unseparated);
        let c = classify_rich_gt(&w("acacbcb")).unwrap();
        assert!(c.is_rich);
        assert_eq!(c.condition, RichCondition::LetterSeparated);
        let c = classify_rich_gt(&w("ababadbc")).unwrap();
        assert!(!c.is_rich);
        assert_eq!(
            c.condition,
            RichCondition::NonRich {
                reason: NonRichReason::ForeignSeparatingLetter
            }
        );
        assert_eq!(classify_rich_gt(&w("aabbaa")), Err(Error::NotGt(w("aabbaa"))));
    }

    #[test]
    fn disjoint_form_examples() {
        let form = match_rich_disjoint_form(&w("aabcc")).unwrap().unwrap();
        assert_eq!(
            form,
            Form::Disjoint {
                variant: DisjointVariant::Vi,
                mirrored: false,
                a: sym('a'),
                b: None,
                x: sym('c'),
                y: None,
                m: 2,
                n: 2,
                z: w("b"),
            }
        );
        let form = match_rich_disjoint_form(&w("aaadcbcb")).unwrap().unwrap();
        assert_eq!(
            form,
            Form::Disjoint {
                variant: DisjointVariant::Iii,
                mirrored: false,
                a: sym('a'),
                b: None,
                x: sym('c'),
                y: Some(sym('b')),
                m: 2,
                n: 1,
                z: w("d"),
            }
        );
        let v = heart(&w("aaaaaadebcad")).unwrap().to_vec();
        assert_eq!(match_rich_disjoint_form(&v), Ok(None));
        let mirrored = match_rich_disjoint_form(&reverse(&w("aaadcbcb"))).unwrap().unwrap();
        assert_eq!(mirrored.name(), "rich-disjoint(vii:iii)");
        assert_eq!(mirrored.instantiate(), w("bcbcdaaa"));
        assert!(matches!(
            match_rich_disjoint_form(&w("ababada")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sep_by_x_examples() {
        let form = match_sep_by_x_form(&w("bacabacac")).unwrap().unwrap();
        assert_eq!(
            form,
            Form::SepByX {
                mirrored: false,
                a: sym('c'),
                b: sym('b'),
                x: sym('a'),
                k: 1,
                m: 1,
                n: 1,
            }
        );
        assert_eq!(form.instantiate(), w("bacabacac"));
        assert_eq!(match_sep_by_x_form(&w("ababadb")), Ok(None));
        let mirrored = match_sep_by_x_form(&reverse(&w("bacabacac"))).unwrap().unwrap();
        assert!(matches!(
            mirrored,
            Form::SepByX {
                mirrored: true,
                k: 1,
                m: 1,
                n: 1,
                ..
            }
        ));
        assert_eq!(mirrored.instantiate(), reverse(&w("bacabacac")));
    }

    #[test]
    fn gt_rich_lemma_examples() {
        let form = match_gt_rich_lemma_form(&w("acacbcb")).unwrap().unwrap();
        assert_eq!(
            form,
            Form::GtRichLemma {
                a: sym('a'),
                b: sym('b'),
                x: sym('c'),
                n: 1,
                m: 1
            }
        );
        // Alph(p) = Alph(q) routes to the nested case instead.
        assert!(matches!(
            match_gt_rich_lemma_form(&w("abacbab")),
            Err(Error::Precondition(_))
        ));
        let shortest = Word::concat(&[&apply_phi_x(&w("aab"), sym('x')), &w("b")]);
        assert_eq!(shortest, w("axaxbxb"));
        assert!(matches!(
            match_gt_rich_lemma_form(&shortest),
            Ok(Some(Form::GtRichLemma { n: 1, m: 1, .. }))
        ));
    }

    #[test]
    fn nonrich_type_examples() {
        assert_eq!(
            match_nonrich_types(&w("abcadea")),
            Some(Form::Type1 {
                a: sym('a'),
                z1: w("bc"),
                z2: w("de")
            })
        );
        assert_eq!(
            match_nonrich_types(&w("ababcaba")),
            Some(Form::Type2 {
                a: sym('a'),
                b: sym('b'),
                m: 1,
                n: 2,
                z: w("c")
            })
        );
        let t3 = match_nonrich_types(&w("adcbaba")).unwrap();
        assert!(matches!(t3, Form::Type3 { m: 1, n: 1, .. }));
        assert_eq!(t3.instantiate(), w("adcbaba"));
        assert_eq!(match_nonrich_types(&w("abacaba")), None);
    }

    #[test]
    fn phi_x_examples() {
        assert_eq!(apply_phi_x(&w("aab"), sym('x')), w("axaxbx"));
        assert_eq!(apply_phi_x(&w("x"), sym('x')), w("x"));
        assert_eq!(apply_phi_x(&w(""), sym('x')), w(""));
    }

    #[test]
    fn record_round_trips() {
        let record = rich_gt_record(&w("aaadcbcb")).unwrap();
        let json = serde_json::to_string(&record).unwrap();
        let back: RichGtRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, record);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}

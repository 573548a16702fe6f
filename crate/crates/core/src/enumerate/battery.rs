//! The invariant battery run by `verify`.
//!
//! Every invariant is checked on every enumerated word it applies to. The
//! first failing word of each job is kept; since jobs are in shortlex order,
//! the first failure over all jobs is the shortlex-least counterexample.

use serde::{Deserialize, Serialize};

use super::{map_jobs, EnumerationSpec};
use crate::complexity::{rk_identity, FactorIndex};
use crate::error::Result;
use crate::oracle;
use crate::palindromes::{
    is_rich_by_count, is_rich_by_returns, is_rich_by_ups, is_unseparated, longest_palindromic_suffix_len, Eertree,
};
use crate::rich_gt::{
    alphabet_relation, classify_rich_gt, disjoint_decomposition, foreign_letters, match_gt_rich_lemma_form,
    match_nonrich_types, match_rich_disjoint_form, match_sep_by_x_form, separation_analysis, AlphabetRelation,
};
use crate::trapezoid::{heart, is_gt_by_definition, is_gt_by_heart, is_gt_by_heart_lh, trapezoid_shape};
use crate::word::{alphabet_size, canonical_form, is_palindrome, occurrences, rename, reverse, Symbol, Word};

/// Predicates under test. Replacing one with a faulty version lets the
/// harness check that the battery notices.
#[derive(Clone, Copy)]
pub struct Predicates {
    pub is_gt_by_definition: fn(&[Symbol]) -> bool,
    pub is_gt_by_heart: fn(&[Symbol]) -> bool,
    pub is_gt_by_heart_lh: fn(&[Symbol]) -> bool,
    pub is_rich_by_count: fn(&[Symbol]) -> bool,
    pub is_rich_by_ups: fn(&[Symbol]) -> bool,
    pub is_rich_by_returns: fn(&[Symbol]) -> bool,
    /// Richness verdict of the rich-GT classifier on a GT-word.
    pub classify_is_rich: fn(&[Symbol]) -> bool,
}

impl Default for Predicates {
    fn default() -> Self {
        Predicates {
            is_gt_by_definition: |w| is_gt_by_definition(w).expect("non-empty").is_some(),
            is_gt_by_heart: |w| is_gt_by_heart(w).expect("non-empty"),
            is_gt_by_heart_lh: |w| is_gt_by_heart_lh(w).expect("non-empty"),
            is_rich_by_count,
            is_rich_by_ups,
            is_rich_by_returns,
            classify_is_rich: |w| classify_rich_gt(w).expect("GT-word").is_rich,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult {
    pub invariant_id: String,
    pub status: Status,
    /// Number of enumerated words the invariant applied to.
    pub checked: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Word>,
}

macro_rules! invariants {
    ($($variant:ident => $id:literal),* $(,)?) => {
        #[derive(Clone, Copy)]
        enum Inv { $($variant),* }

        /// Identifiers of all invariants, in report order.
        pub const INVARIANTS: &[&str] = &[$($id),*];
    };
}

invariants! {
    ProfileBruteForce => "profile-matches-bruteforce",
    ParametersBruteForce => "parameters-match-bruteforce",
    PeriodBruteForce => "period-matches-bruteforce",
    ValenceIdentity => "first-difference-valence-identity",
    ComplexityShape => "complexity-shape",
    RkInequality => "rk-lh-inequality",
    ReversalDuality => "reversal-duality",
    MaxRkLh => "max-rk-equals-max-lh",
    MaximalSpecial => "maximal-special-factor",
    PeriodBound => "period-bound",
    GtEquivalence => "gt-definition-heart-heart-lh",
    GtBruteForce => "gt-definition-matches-bruteforce",
    RkImpliesGt => "rk-condition-implies-gt",
    RightSpecialStructure => "rk-iff-right-special-structure",
    LeftSpecialStructure => "lh-iff-left-special-structure",
    HeartPlateau => "heart-gt-and-plateau",
    HeartRklh => "heart-rklh",
    GtReversal => "gt-reversal-closure",
    GtFactors => "gt-factor-closure",
    Triangle => "triangle-iff-rv-equals-kv",
    PalindromeBound => "palindrome-count-bound",
    EertreeBruteForce => "eertree-matches-bruteforce",
    RichEquivalence => "rich-count-ups-returns",
    RichBruteForce => "rich-count-matches-bruteforce",
    RichClosure => "rich-reversal-and-factor-closure",
    UpsLongest => "ups-is-longest-palindromic-suffix",
    BinaryRich => "binary-gt-rich",
    BinaryUnseparated => "binary-gt-unseparated",
    RichHeart => "rich-iff-heart-rich",
    Classifier => "rich-gt-classifier",
    SepByX => "sep-by-x",
    SepByXForm => "sep-by-x-form",
    SepByU => "sep-by-u",
    GtRichLemma => "incomparable-alphabets-lemma-form",
    DisjointForms => "rich-disjoint-forms",
    NonRichTypes => "nonrich-types",
    FormRebuild => "form-reinstantiation",
    PalindromicHeart => "palindromic-heart-rich",
    TernaryK1 => "ternary-k1-rich",
    Renaming => "renaming-invariance",
}

#[derive(Clone)]
struct Tally {
    checked: Vec<u64>,
    first_failure: Vec<Option<Word>>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: vec![0; INVARIANTS.len()],
            first_failure: vec![None; INVARIANTS.len()],
        }
    }

    fn record(&mut self, inv: Inv, w: &[Symbol], ok: bool) {
        let i = inv as usize;
        self.checked[i] += 1;
        if !ok && self.first_failure[i].is_none() {
            self.first_failure[i] = Some(canonical_form(w));
        }
    }

    fn merge(&mut self, other: Tally) {
        for (i, failure) in other.first_failure.into_iter().enumerate() {
            self.checked[i] += other.checked[i];
            if self.first_failure[i].is_none() {
                self.first_failure[i] = failure;
            }
        }
    }
}

/// Runs every invariant over `spec` with the shipped predicates.
pub fn verify_theorems(spec: &EnumerationSpec, threads: usize) -> Result<Vec<InvariantResult>> {
    verify_theorems_with(spec, threads, &Predicates::default())
}

pub fn verify_theorems_with(
    spec: &EnumerationSpec,
    threads: usize,
    predicates: &Predicates,
) -> Result<Vec<InvariantResult>> {
    let parts = map_jobs(spec, threads, |walk| {
        let mut tally = Tally::new();
        walk(&mut |w| check_word(w, predicates, &mut tally));
        tally
    })?;
    let mut total = Tally::new();
    for part in parts {
        total.merge(part);
    }
    Ok(INVARIANTS
        .iter()
        .enumerate()
        .map(|(i, id)| InvariantResult {
            invariant_id: id.to_string(),
            status: if total.first_failure[i].is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            checked: total.checked[i],
            counterexample: total.first_failure[i].clone(),
        })
        .collect())
}

fn gt(w: &[Symbol]) -> bool {
    is_gt_by_definition(w).expect("non-empty").is_some()
}

fn check_word(w: &[Symbol], pred: &Predicates, t: &mut Tally) {
    let n = w.len();
    let k = alphabet_size(w);
    let index = FactorIndex::new(w).expect("non-empty");
    let profile = index.profile().values;
    let params = index.parameters();
    let (r, kk, l, h) = (params.r, params.k, params.l, params.h);
    let brute_profile = oracle::complexity_profile(w);

    t.record(Inv::ProfileBruteForce, w, profile == brute_profile);
    t.record(
        Inv::ParametersBruteForce,
        w,
        (r, kk, l, h) == (oracle::r(w), oracle::k(w), oracle::l(w), oracle::h(w)),
    );
    let period = crate::complexity::minimal_period(w).expect("non-empty");
    t.record(Inv::PeriodBruteForce, w, period == oracle::minimal_period(w));

    // C(n+1) - C(n) = sum over right special u of length n of (valence - 1),
    // minus one when the suffix of length n is unrepeated (it has no extension).
    let valence_ok = (0..n).all(|len| {
        let gain: usize = oracle::right_special(w, len)
            .iter()
            .map(|u| oracle::right_valence(w, u) - 1)
            .sum();
        profile[len + 1] + usize::from(len >= kk) == profile[len] + gain
    });
    t.record(Inv::ValenceIdentity, w, valence_ok);

    if k >= 2 {
        let (m, big_m) = (r.min(kk), r.max(kk));
        let shape = (0..m).all(|i| profile[i + 1] > profile[i])
            && (m..big_m).all(|i| profile[i + 1] >= profile[i])
            && (big_m..n).all(|i| profile[i + 1] + 1 == profile[i])
            && (r >= kk || (m..big_m).all(|i| profile[i + 1] == profile[i]));
        t.record(Inv::ComplexityShape, w, shape);
    }
    t.record(Inv::RkInequality, w, n + 2 >= r + kk + k && n + 2 >= l + h + k);

    let rev = reverse(w);
    let rev_index = FactorIndex::new(&rev).expect("non-empty");
    t.record(
        Inv::ReversalDuality,
        w,
        rev_index.l() == r && rev_index.h() == kk && rev_index.profile().values == profile,
    );
    t.record(Inv::MaxRkLh, w, r.max(kk) == l.max(h));

    if k >= 2 {
        t.record(Inv::MaximalSpecial, w, maximal_special_ok(w, r, l, kk, h));
    }
    t.record(
        Inv::PeriodBound,
        w,
        period + 1 >= r + k && (period + 1 != r + k || rk_identity(n, r, kk, k)),
    );

    let by_def = (pred.is_gt_by_definition)(w);
    let by_heart = (pred.is_gt_by_heart)(w);
    let by_heart_lh = (pred.is_gt_by_heart_lh)(w);
    t.record(Inv::GtEquivalence, w, by_def == by_heart && by_heart == by_heart_lh);
    let is_gt = gt(w);
    t.record(Inv::GtBruteForce, w, is_gt == oracle::is_gt(w));
    let rk = rk_identity(n, r, kk, k);
    t.record(Inv::RkImpliesGt, w, !rk || is_gt);
    if k >= 2 {
        t.record(Inv::RightSpecialStructure, w, rk == special_structure(w, r, true));
        t.record(
            Inv::LeftSpecialStructure,
            w,
            rk_identity(n, l, h, k) == special_structure(w, l, false),
        );
    }

    let v = heart(w).expect("non-empty");
    let v_index = FactorIndex::new(v).expect("non-empty");
    let v_params = v_index.parameters();
    let shape_w = trapezoid_shape(&profile, k);
    let shape_v = trapezoid_shape(&v_index.profile().values, alphabet_size(v));
    let plateau = |s: Option<crate::trapezoid::TrapezoidParams>| s.map(|p| (p.m, p.big_m));
    t.record(Inv::HeartPlateau, w, plateau(shape_w) == plateau(shape_v));
    if rk_identity(n, v_params.r, v_params.k, k) {
        t.record(
            Inv::HeartRklh,
            w,
            v_params.r.min(v_params.k) == v_params.l.min(v_params.h) && rk_identity(n, v_params.l, v_params.h, k),
        );
    }
    t.record(Inv::GtReversal, w, is_gt == gt(&rev));
    if is_gt && n >= 2 {
        t.record(Inv::GtFactors, w, gt(&w[1..]) && gt(&w[..n - 1]));
    }
    if k >= 2 && is_gt {
        t.record(
            Inv::Triangle,
            w,
            is_triangle_graph(&brute_profile, k) == (v_params.r == v_params.k),
        );
    }

    let tree = Eertree::new(w);
    t.record(Inv::PalindromeBound, w, tree.node_count() <= n);
    let brute_pals = oracle::palindromic_factors(w);
    let mut tree_pals: Vec<Word> = tree.palindromes().collect();
    tree_pals.push(Word::empty());
    tree_pals.sort();
    t.record(
        Inv::EertreeBruteForce,
        w,
        tree_pals.len() == brute_pals.len() && tree_pals.iter().eq(brute_pals.iter()),
    );
    let rich = (pred.is_rich_by_count)(w);
    t.record(
        Inv::RichEquivalence,
        w,
        rich == (pred.is_rich_by_ups)(w) && rich == (pred.is_rich_by_returns)(w),
    );
    let brute_rich = brute_pals.len() == n + 1;
    t.record(Inv::RichBruteForce, w, rich == brute_rich);
    let closure_ok = is_rich_by_count(&rev) == rich
        && (!rich || n < 2 || (is_rich_by_count(&w[1..]) && is_rich_by_count(&w[..n - 1])));
    t.record(Inv::RichClosure, w, closure_ok);
    if brute_rich {
        t.record(Inv::UpsLongest, w, ups_is_longest(w));
    }

    if k == 2 && is_gt {
        t.record(Inv::BinaryRich, w, brute_rich);
        t.record(Inv::BinaryUnseparated, w, is_unseparated(w).expect("non-empty"));
    }

    if let Some(form) = match_nonrich_types(w) {
        t.record(Inv::NonRichTypes, w, !brute_rich);
        t.record(Inv::FormRebuild, w, form.instantiate().as_slice() == w);
    }

    let mut renaming: Vec<Symbol> = (0..k as u8).rev().map(Symbol).collect();
    renaming.resize(256, Symbol(0));
    let renamed = rename(w, &renaming);
    let renamed_index = FactorIndex::new(&renamed).expect("non-empty");
    t.record(
        Inv::Renaming,
        w,
        canonical_form(&canonical_form(w)) == canonical_form(w)
            && canonical_form(&renamed) == canonical_form(w)
            && renamed_index.parameters() == params
            && gt(&renamed) == is_gt
            && is_rich_by_count(&renamed) == rich,
    );

    if !is_gt {
        return;
    }
    check_rich_gt(w, v, brute_rich, pred, t);
    if k == 3 && kk == 1 {
        t.record(Inv::TernaryK1, w, brute_rich);
    }
}

fn check_rich_gt(w: &[Symbol], v: &[Symbol], brute_rich: bool, pred: &Predicates, t: &mut Tally) {
    t.record(Inv::Classifier, w, (pred.classify_is_rich)(w) == brute_rich);
    t.record(Inv::RichHeart, w, oracle::is_rich(v) == brute_rich);
    if is_palindrome(v) {
        t.record(Inv::PalindromicHeart, w, brute_rich);
    }
    let classification = classify_rich_gt(w).expect("GT-word");
    if let Some(form) = &classification.matched_form {
        t.record(Inv::FormRebuild, w, form.instantiate().as_slice() == v);
    }

    let s = separation_analysis(v).expect("non-empty");
    let u = s.separator();
    if u.is_empty() {
        return;
    }
    match alphabet_relation(&s.p, &s.q) {
        AlphabetRelation::Nested if u.len() == 1 => {
            let x_inside = s.p.contains(&u[0]) || s.q.contains(&u[0]);
            t.record(Inv::SepByX, w, brute_rich == x_inside);
            let form = match_sep_by_x_form(v).expect("precondition holds");
            t.record(Inv::SepByXForm, w, form.is_some() == brute_rich);
        }
        AlphabetRelation::Nested => {
            t.record(
                Inv::SepByU,
                w,
                !brute_rich && !foreign_letters(&s.p, &u, &s.q).is_empty(),
            );
        }
        AlphabetRelation::Incomparable => {
            let form = match_gt_rich_lemma_form(v).expect("precondition holds");
            t.record(Inv::GtRichLemma, w, form.is_some() && brute_rich);
        }
        AlphabetRelation::Disjoint => {
            let form = match_rich_disjoint_form(v).expect("precondition holds");
            let decomposes = disjoint_decomposition(&s.p, &u, &s.q).is_some();
            t.record(
                Inv::DisjointForms,
                w,
                form.is_some() == brute_rich && decomposes == brute_rich,
            );
        }
    }
}

/// Right (or left) special factor of maximal length: a prefix (suffix) of
/// `w` or bispecial, and bispecial when `R > H` (`L > K`).
fn maximal_special_ok(w: &[Symbol], r: usize, l: usize, k: usize, h: usize) -> bool {
    let n = w.len();
    let right_ok = oracle::right_special(w, r - 1).iter().all(|u| {
        let bispecial = oracle::left_valence(w, u) >= 2;
        (w.starts_with(u) || bispecial) && (r <= h || bispecial)
    });
    let left_ok = oracle::left_special(w, l - 1).iter().all(|u| {
        let bispecial = oracle::right_valence(w, u) >= 2;
        (w[n - u.len()..] == u[..] || bispecial) && (l <= k || bispecial)
    });
    right_ok && left_ok
}

/// Exactly one special factor of each length below `bound`, each non-empty
/// one with valence 2.
fn special_structure(w: &[Symbol], bound: usize, right: bool) -> bool {
    (0..bound).all(|len| {
        let special = if right {
            oracle::right_special(w, len)
        } else {
            oracle::left_special(w, len)
        };
        special.len() == 1
            && special.iter().all(|u| {
                let valence = if right {
                    oracle::right_valence(w, u)
                } else {
                    oracle::left_valence(w, u)
                };
                u.is_empty() || valence == 2
            })
    })
}

/// `C` rises by one per step from `n = 1` to a peak, then falls by one per
/// step until `n = |w| - |Alph(w)| + 1`.
fn is_triangle_graph(profile: &[usize], k: usize) -> bool {
    let end = profile.len() - k;
    let mut i = 1;
    while i < end && profile[i + 1] == profile[i] + 1 {
        i += 1;
    }
    while i < end && profile[i + 1] + 1 == profile[i] {
        i += 1;
    }
    i == end
}

/// In every prefix, the only unioccurrent palindromic suffix is the longest one.
fn ups_is_longest(w: &[Symbol]) -> bool {
    (1..=w.len()).all(|end| {
        let prefix = &w[..end];
        let longest = longest_palindromic_suffix_len(prefix).expect("non-empty");
        (1..=end)
            .filter(|&len| is_palindrome(&prefix[end - len..]) && occurrences(&prefix[end - len..], prefix).len() == 1)
            .eq([longest])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let spec = EnumerationSpec::new(3, 7, true).unwrap();
        let report = verify_theorems(&spec, 2).unwrap();
        let failures: Vec<_> = report.iter().filter(|r| r.status == Status::Fail).collect();
        assert!(failures.is_empty(), "{failures:?}");
    }

    #[test]
    fn seeded_bug_is_caught() {
        let spec = EnumerationSpec::new(2, 4, true).unwrap();
        let broken = Predicates {
            is_gt_by_heart: |w| !is_gt_by_heart(w).unwrap(),
            ..Predicates::default()
        };
        let report = verify_theorems_with(&spec, 2, &broken).unwrap();
        let gt = report
            .iter()
            .find(|r| r.invariant_id == "gt-definition-heart-heart-lh")
            .unwrap();
        assert_eq!(gt.status, Status::Fail);
        assert_eq!(gt.counterexample, Some(Word::parse("a").unwrap()));
        assert!(report
            .iter()
            .filter(|r| r.invariant_id != gt.invariant_id)
            .all(|r| r.status == Status::Pass));
    }
}

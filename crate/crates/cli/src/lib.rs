//! Per-word analysis records and renderers behind the `trapeze` binary.

use serde::{Deserialize, Serialize};
use trapeze::complexity::{minimal_period, rk_identity, FactorIndex};
use trapeze::palindromes::is_rich;
use trapeze::rich_gt::{rich_gt_record, RichGtRecord};
use trapeze::trapezoid::{heart_decompose, trapezoid_shape, HeartDecomposition, TrapezoidParams};
use trapeze::word::alphabet_size;
use trapeze::{Error, Result, Word};

/// Everything the library knows about one word.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub word: Word,
    pub alphabet_size: usize,
    pub profile: Vec<usize>,
    #[serde(rename = "R")]
    pub r: usize,
    #[serde(rename = "K")]
    pub k: usize,
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "H")]
    pub h: usize,
    pub minimal_period: usize,
    pub heart: HeartDecomposition,
    pub gt: bool,
    /// Plateau ends when the word is GT.
    pub trapezoid: Option<TrapezoidParams>,
    /// Absent for one-letter words.
    pub triangular: Option<bool>,
    pub rk_condition: bool,
    pub rich: bool,
    /// Present for GT-words.
    pub rich_gt: Option<RichGtRecord>,
}

impl AnalysisRecord {
    pub fn new(w: &Word) -> Result<Self> {
        let index = FactorIndex::new(w)?;
        let profile = index.profile().values;
        let params = index.parameters();
        let k = alphabet_size(w);
        let trapezoid = trapezoid_shape(&profile, k);
        let heart = heart_decompose(w)?;
        let triangular = (k >= 2).then(|| {
            let v = FactorIndex::new(&heart.heart).expect("hearts are non-empty");
            v.r() == v.k()
        });
        Ok(AnalysisRecord {
            word: w.clone(),
            alphabet_size: k,
            r: params.r,
            k: params.k,
            l: params.l,
            h: params.h,
            minimal_period: minimal_period(w)?,
            heart,
            gt: trapezoid.is_some(),
            trapezoid,
            triangular,
            rk_condition: rk_identity(w.len(), params.r, params.k, k),
            rich: is_rich(w),
            rich_gt: trapezoid.is_some().then(|| rich_gt_record(w)).transpose()?,
            profile,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn to_table(&self) -> String {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let flag = |b: bool| if b { "yes" } else { "no" };
        let mut rows: Vec<(&str, String)> = vec![
            ("word", self.word.to_string()),
            ("alphabet size", self.alphabet_size.to_string()),
            ("complexity", join(&self.profile)),
            ("R, K, L, H", format!("{}, {}, {}, {}", self.r, self.k, self.l, self.h)),
            ("minimal period", self.minimal_period.to_string()),
            (
                "heart (r | v | s)",
                format!(
                    "{} | {} | {}",
                    shown(&self.heart.prefix),
                    self.heart.heart,
                    shown(&self.heart.suffix)
                ),
            ),
            (
                "GT",
                match self.trapezoid {
                    Some(t) => format!("yes (m = {}, M = {})", t.m, t.big_m),
                    None => "no".into(),
                },
            ),
            ("triangular", self.triangular.map_or("n/a", flag).into()),
            ("RK-condition", flag(self.rk_condition).into()),
            ("rich", flag(self.rich).into()),
        ];
        if let Some(c) = &self.rich_gt {
            rows.push(("heart p, q", format!("{}, {}", c.p, c.q)));
            rows.push((
                "rich-GT condition",
                serde_json::to_string(&c.condition).expect("serializes"),
            ));
            rows.push(("form", c.form.clone().unwrap_or_else(|| "none".into())));
        }
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        rows.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
    }
}

fn shown(w: &Word) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.to_string()
    }
}

/// Parses a command-line word; the empty word is rejected.
pub fn parse_word(text: &str) -> Result<Word> {
    let w = Word::parse(text)?;
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(w)
}

/// `n,C(n)` rows with a header line.
pub fn graph_csv(profile: &[usize]) -> String {
    let mut out = String::from("n,C(n)\n");
    for (n, c) in profile.iter().enumerate() {
        out.push_str(&format!("{n},{c}\n"));
    }
    out
}

/// Plots `C(n)` with one column per `n`, highest values on top.
pub fn graph_ascii(profile: &[usize]) -> String {
    let top = profile.iter().copied().max().unwrap_or(0);
    let label = top.to_string().len();
    let mut out = String::new();
    for level in (1..=top).rev() {
        let cells: String = profile.iter().map(|&c| if c == level { " *" } else { "  " }).collect();
        out.push_str(&format!("{level:>label$} |{}\n", cells.trim_end()));
    }
    out.push_str(&format!("{:>label$} +{}\n", "", "--".repeat(profile.len())));
    let ticks: String = (0..profile.len()).map(|n| format!(" {}", n % 10)).collect();
    out.push_str(&format!("{:>label$}  {}\n", "", ticks.trim_start()));
    out
}

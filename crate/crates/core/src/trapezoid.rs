//! Membership tests for generalized trapezoidal words and the heart
//! decomposition.
//!
//! Three GT predicates live here and are deliberately kept apart:
//! [`is_gt_by_definition`] reads the shape of the complexity profile, while
//! [`is_gt_by_heart`] and [`is_gt_by_heart_lh`] only look at the parameters of
//! the heart. The verification battery checks that they agree.

use serde::{Deserialize, Serialize};

use crate::complexity::{self, rk_identity, FactorIndex};
use crate::error::{Error, Result};
use crate::word::{all_factors, alphabet_size, letter_counts, Symbol, Word};

/// Ends of the plateau of a GT profile and its height.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrapezoidParams {
    pub m: usize,
    #[serde(rename = "M")]
    pub big_m: usize,
    pub plateau_height: usize,
}

/// `w = prefix · heart · suffix`, where prefix and suffix are the longest
/// runs at either end made of letters occurring once in `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeartDecomposition {
    pub prefix: Word,
    pub heart: Word,
    pub suffix: Word,
}

/// Reads `(m, M)` off a complexity profile when it has the trapezoid shape
/// for an alphabet of `alphabet` letters.
pub fn trapezoid_shape(profile: &[usize], alphabet: usize) -> Option<TrapezoidParams> {
    let n = profile.len().checked_sub(1)?;
    if n == 0 || profile[0] != 1 {
        return None;
    }
    if alphabet == 1 {
        return profile[1..].iter().all(|&c| c == 1).then_some(TrapezoidParams {
            m: 1,
            big_m: n,
            plateau_height: 1,
        });
    }
    if profile[1] != alphabet {
        return None;
    }
    // The increasing, flat and decreasing runs are each read greedily; a
    // bare peak gives m = M.
    let mut m = 1;
    while m < n && profile[m + 1] == profile[m] + 1 {
        m += 1;
    }
    let mut big_m = m;
    while big_m < n && profile[big_m + 1] == profile[big_m] {
        big_m += 1;
    }
    (big_m..n)
        .all(|i| profile[i + 1] + 1 == profile[i])
        .then_some(TrapezoidParams {
            m,
            big_m,
            plateau_height: profile[m],
        })
}

/// Definitional GT test. Returns the plateau ends when `w` is GT.
pub fn is_gt_by_definition(w: &[Symbol]) -> Result<Option<TrapezoidParams>> {
    let profile = complexity::complexity_profile(w)?;
    Ok(trapezoid_shape(&profile.values, alphabet_size(w)))
}

pub fn is_gt(w: &[Symbol]) -> Result<bool> {
    Ok(is_gt_by_definition(w)?.is_some())
}

pub fn heart_decompose(w: &[Symbol]) -> Result<HeartDecomposition> {
    let (start, end) = heart_bounds(w)?;
    Ok(HeartDecomposition {
        prefix: Word::from(&w[..start]),
        heart: Word::from(&w[start..end]),
        suffix: Word::from(&w[end..]),
    })
}

/// Start and end of the heart inside `w`.
///
/// When every letter of `w` is distinct the heart is the whole word and both
/// flanks are reported empty, so that `w = r·v·s` holds literally.
pub fn heart_bounds(w: &[Symbol]) -> Result<(usize, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let counts = letter_counts(w);
    let once = |s: &Symbol| counts[s.0 as usize] == 1;
    let start = w.iter().take_while(|s| once(s)).count();
    if start == w.len() {
        return Ok((0, w.len()));
    }
    let end = w.len() - w.iter().rev().take_while(|s| once(s)).count();
    Ok((start, end))
}

pub fn heart(w: &[Symbol]) -> Result<&[Symbol]> {
    let (start, end) = heart_bounds(w)?;
    Ok(&w[start..end])
}

/// `|w| = R + K + |Alph(w)| - 2`.
pub fn satisfies_rk_condition(w: &[Symbol]) -> Result<bool> {
    let index = FactorIndex::new(w)?;
    Ok(rk_identity(w.len(), index.r(), index.k(), alphabet_size(w)))
}

/// `|w| = L + H + |Alph(w)| - 2`.
pub fn satisfies_lh_condition(w: &[Symbol]) -> Result<bool> {
    let index = FactorIndex::new(w)?;
    Ok(rk_identity(w.len(), index.l(), index.h(), alphabet_size(w)))
}

/// GT test through the heart: `|w| = R_v + K_v + |Alph(w)| - 2`.
pub fn is_gt_by_heart(w: &[Symbol]) -> Result<bool> {
    let index = FactorIndex::new(heart(w)?)?;
    Ok(rk_identity(w.len(), index.r(), index.k(), alphabet_size(w)))
}

/// GT test through the heart: `|w| = L_v + H_v + |Alph(w)| - 2`.
pub fn is_gt_by_heart_lh(w: &[Symbol]) -> Result<bool> {
    let index = FactorIndex::new(heart(w)?)?;
    Ok(rk_identity(w.len(), index.l(), index.h(), alphabet_size(w)))
}

/// Whether the complexity graph is a triangle, decided by `K_v = R_v` on the heart.
pub fn is_triangular(w: &[Symbol]) -> Result<bool> {
    if alphabet_size(w) < 2 {
        return Err(Error::AlphabetTooSmall);
    }
    let index = FactorIndex::new(heart(w)?)?;
    Ok(index.r() == index.k())
}

/// Checks that every non-empty factor of the GT-word `w` is GT.
pub fn gt_factor_closure_check(w: &[Symbol]) -> Result<bool> {
    if !is_gt(w)? {
        return Err(Error::NotGt(Word::from(w)));
    }
    for u in all_factors(w) {
        if !u.is_empty() && !is_gt(&u)? {
            return Ok(false);
        }
    }
    Ok(true)
}

//! Analysis of generalized trapezoidal words.
//!
//! A finite word is *generalized trapezoidal* (GT) when its factor complexity
//! rises by one per length, stays flat, then falls by one per length down to
//! `C(|w|) = 1`. This crate computes complexity profiles and the de Luca
//! parameters with suffix automata, decomposes words into prefix, heart and
//! suffix, decides GT membership through three independent routes, tests
//! palindromic richness through three independent criteria, and classifies
//! rich GT-words by the shape of their heart. The [`enumerate`] module runs
//! all of these against each other over exhaustive enumerations.

pub mod complexity;
pub mod enumerate;
pub mod error;
pub mod oracle;
pub mod palindromes;
pub mod rich_gt;
pub mod trapezoid;
pub mod word;

pub use error::{Error, Result};
pub use word::{Symbol, Word};

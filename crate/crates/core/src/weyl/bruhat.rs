use super::WeylElement;
use crate::error::{Error, Result};

/// `u ≤ w` in Bruhat order: some reduced word of `w` contains a reduced word
/// of `u` as a subword.
///
/// Scans the canonical reduced word of `w` (see [`WeylElement::reduced_word`]).
pub fn bruhat_leq(u: &WeylElement, w: &WeylElement) -> Result<bool> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch { left: u.n(), right: w.n() });
    }
    Ok(bruhat_leq_along(u, &w.reduced_word()))
}

/// Subword test of `u` against a given reduced word `s_{i_1} ⋯ s_{i_ℓ}`.
///
/// Reads the word from the right. Whenever the current letter `s` is a right
/// descent of what remains of `u`, it is matched and `u ← u s`; `u` lies below
/// the word's product iff it is used up. The word must be reduced and its
/// letters below `u.n()`.
pub fn bruhat_leq_along(u: &WeylElement, reduced_word: &[usize]) -> bool {
    let mut rest = u.clone();
    let mut remaining = rest.length();
    for &s in reduced_word.iter().rev() {
        if remaining == 0 {
            break;
        }
        if rest.has_right_descent(s) {
            rest = rest.mul_simple_right(s);
            remaining -= 1;
        }
    }
    remaining == 0
}

//! Type-A Coxeter combinatorics: `S_n` with adjacent transpositions
//! `s_1, …, s_{n-1}` as simple reflections.

use std::fmt;

use crate::error::{Error, Result};
use crate::moduli::Composition;

mod bruhat;
mod cosets;

pub use bruhat::{bruhat_leq, bruhat_leq_along};
pub use cosets::{
    coset_rep_from_matrix, double_coset_size, is_minimal_rep, matrix_from_rep, matrix_margins,
    min_double_coset_reps, MAX_ENUMERATION_N,
};

/// A permutation of `{1, …, n}`, stored zero-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    images: Vec<usize>,
}

impl WeylElement {
    /// From one-line notation `[w(1), …, w(n)]`, one-based.
    pub fn new(one_line: &[usize]) -> Result<Self> {
        let images = one_line
            .iter()
            .map(|&v| v.checked_sub(1).ok_or(Error::NotAPermutation { n: one_line.len() }))
            .collect::<Result<Vec<_>>>()?;
        WeylElement::from_zero_based(images)
    }

    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation { n });
            }
        }
        Ok(WeylElement { images })
    }

    pub fn identity(n: usize) -> Self {
        WeylElement { images: (0..n).collect() }
    }

    /// `w_0 = [n, n-1, …, 1]`.
    pub fn longest(n: usize) -> Self {
        WeylElement { images: (0..n).rev().collect() }
    }

    /// The product `s_{word[0]} s_{word[1]} ⋯` of simple reflections.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = WeylElement::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::SizeMismatch { left: i, right: n });
            }
            w.swap_positions(i);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|v| v + 1).collect()
    }

    pub fn zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v] = i;
        }
        WeylElement { images: inv }
    }

    /// `(self · other)(a) = self(other(a))`.
    pub fn compose(&self, other: &WeylElement) -> Self {
        assert_eq!(self.n(), other.n(), "composing permutations of different sizes");
        WeylElement { images: other.images.iter().map(|&v| self.images[v]).collect() }
    }

    /// Coxeter length: the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w(i) > w(i+1)`. `i` is one-based.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. `w^{-1}(i) > w^{-1}(i+1)`. `i` is one-based.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v| self.images.iter().position(|&x| x == v).expect("bijection");
        pos(i - 1) > pos(i)
    }

    /// `w ↦ w s_i`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.swap_positions(i);
        w
    }

    /// `w ↦ s_i w`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&v| match v {
                v if v == i - 1 => i,
                v if v == i => i - 1,
                v => v,
            })
            .collect();
        WeylElement { images }
    }

    fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// A reduced word `[i_1, …, i_ℓ]` with `w = s_{i_1} ⋯ s_{i_ℓ}`.
    ///
    /// Produced by sorting `w` with adjacent swaps, always undoing the right
    /// descent of smallest index first; the recorded swaps read backwards.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.images.clone();
        let mut undone = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.len()).find(|&i| w[i - 1] > w[i]) {
            w.swap(i - 1, i);
            undone.push(i);
        }
        undone.reverse();
        undone
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeylElement{self}")
    }
}

/// The Young subgroup `S_{h_1} × ⋯ × S_{h_k}` permuting consecutive blocks;
/// the Weyl group of the standard Levi `GL_{h_1} × ⋯ × GL_{h_k}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct YoungSubgroup {
    composition: Composition,
}

impl YoungSubgroup {
    pub fn new(composition: Composition) -> Self {
        YoungSubgroup { composition }
    }

    pub fn from_parts(parts: Vec<i64>) -> Result<Self> {
        Ok(YoungSubgroup::new(Composition::new(parts)?))
    }

    /// The trivial subgroup of `S_n` (all blocks of size one). Panics if `n = 0`.
    pub fn trivial(n: usize) -> Self {
        YoungSubgroup::new(Composition::new(vec![1; n]).expect("n >= 1"))
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn n(&self) -> usize {
        self.composition.total() as usize
    }

    pub fn blocks(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.composition.parts().iter().scan(0usize, |start, &h| {
            let r = *start..*start + h as usize;
            *start = r.end;
            Some(r)
        })
    }

    /// Block index of each zero-based point.
    pub fn block_labels(&self) -> Vec<usize> {
        self.blocks()
            .enumerate()
            .flat_map(|(b, r)| r.map(move |_| b))
            .collect()
    }

    /// One-based indices `i` with `s_i` in the subgroup.
    pub fn simple_reflections(&self) -> Vec<usize> {
        self.blocks().flat_map(|r| r.start + 1..r.end).collect()
    }

    /// `Π h_i!`.
    pub fn order(&self) -> u128 {
        self.composition.parts().iter().map(|&h| factorial(h as u32)).product()
    }
}

pub(crate) fn factorial(n: u32) -> u128 {
    (1..=n as u128).product()
}

//! Double cosets `W_{M_1} \ S_n / W_{M_2}` of Young subgroups.
//!
//! The left subgroup permutes values and the right subgroup permutes
//! positions. A double coset is determined by its rank matrix
//! `h_ij = #{a in right block j : w(a) in left block i}`, whose row sums are
//! the left composition and column sums the right composition.

use super::{factorial, WeylElement, YoungSubgroup};
use crate::error::{Error, Result};
use crate::moduli::Composition;

/// Largest `n` for which [`min_double_coset_reps`] enumerates.
pub const MAX_ENUMERATION_N: usize = 10;

fn check_sizes(w: &WeylElement, left: &YoungSubgroup, right: &YoungSubgroup) -> Result<()> {
    for other in [left.n(), right.n()] {
        if w.n() != other {
            return Err(Error::SizeMismatch { left: w.n(), right: other });
        }
    }
    Ok(())
}

/// Whether `w` has minimal length in `W_{M_1} w W_{M_2}`.
///
/// Descent criterion: no simple reflection of the right subgroup is a right
/// descent of `w`, and none of the left subgroup is a left descent.
pub fn is_minimal_rep(w: &WeylElement, left: &YoungSubgroup, right: &YoungSubgroup) -> Result<bool> {
    check_sizes(w, left, right)?;
    let inv = w.inverse();
    Ok(right.simple_reflections().into_iter().all(|i| !w.has_right_descent(i))
        && left.simple_reflections().into_iter().all(|i| !inv.has_right_descent(i)))
}

/// The minimal-length representatives of `W_{M_1} \ S_n / W_{M_2}`, one per
/// double coset, in lexicographic order of one-line notation.
///
/// Builds permutations position by position: a minimal representative is
/// increasing on each right block, and uses the values of each left block in
/// increasing order, so each step only chooses which left block the next
/// value comes from.
pub fn min_double_coset_reps(
    n: usize,
    left: &YoungSubgroup,
    right: &YoungSubgroup,
) -> Result<Vec<WeylElement>> {
    if n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationBound { n, max: MAX_ENUMERATION_N });
    }
    for other in [left.n(), right.n()] {
        if other != n {
            return Err(Error::SizeMismatch { left: n, right: other });
        }
    }

    struct Search {
        next_value: Vec<usize>,
        block_end: Vec<usize>,
        right_labels: Vec<usize>,
        current: Vec<usize>,
        out: Vec<WeylElement>,
    }

    impl Search {
        fn run(&mut self, pos: usize) {
            if pos == self.right_labels.len() {
                self.out.push(WeylElement { images: self.current.clone() });
                return;
            }
            let floor = (pos > 0 && self.right_labels[pos - 1] == self.right_labels[pos])
                .then(|| self.current[pos - 1]);
            for b in 0..self.next_value.len() {
                let v = self.next_value[b];
                if v == self.block_end[b] || floor.is_some_and(|f| v < f) {
                    continue;
                }
                self.next_value[b] += 1;
                self.current.push(v);
                self.run(pos + 1);
                self.current.pop();
                self.next_value[b] -= 1;
            }
        }
    }

    let mut search = Search {
        next_value: left.blocks().map(|r| r.start).collect(),
        block_end: left.blocks().map(|r| r.end).collect(),
        right_labels: right.block_labels(),
        current: Vec::with_capacity(n),
        out: Vec::new(),
    };
    search.run(0);
    let mut reps = search.out;
    reps.sort();
    Ok(reps)
}

/// Rank matrix of the double coset containing `w`.
pub fn matrix_from_rep(
    w: &WeylElement,
    left: &YoungSubgroup,
    right: &YoungSubgroup,
) -> Result<Vec<Vec<i64>>> {
    check_sizes(w, left, right)?;
    let value_block = left.block_labels();
    let mut h = vec![vec![0i64; right.composition().len()]; left.composition().len()];
    for (a, j) in right.block_labels().into_iter().enumerate() {
        h[value_block[w.zero_based()[a]]][j] += 1;
    }
    Ok(h)
}

/// Row and column sums of a rank matrix as compositions (left, right).
pub fn matrix_margins(h: &[Vec<i64>]) -> Result<(Composition, Composition)> {
    let width = h.first().map_or(0, Vec::len);
    if width == 0 || h.iter().any(|r| r.len() != width) {
        return Err(Error::MalformedMatrix);
    }
    for (row, r) in h.iter().enumerate() {
        if let Some(col) = r.iter().position(|&x| x < 0) {
            return Err(Error::NegativeEntry { row, col });
        }
    }
    let rows: Vec<i64> = h.iter().map(|r| r.iter().sum()).collect();
    let cols: Vec<i64> = (0..width).map(|j| h.iter().map(|r| r[j]).sum()).collect();
    if let Some(index) = rows.iter().position(|&s| s == 0) {
        return Err(Error::EmptyLine { axis: "row", index });
    }
    if let Some(index) = cols.iter().position(|&s| s == 0) {
        return Err(Error::EmptyLine { axis: "column", index });
    }
    Ok((Composition::new(rows)?, Composition::new(cols)?))
}

/// The minimal-length representative of the double coset whose rank matrix
/// is `h`; the double coset is taken for the Young subgroups given by the
/// row sums (left) and column sums (right).
pub fn coset_rep_from_matrix(h: &[Vec<i64>]) -> Result<WeylElement> {
    let (rows, _) = matrix_margins(h)?;
    let left = YoungSubgroup::new(rows);
    let mut next_value: Vec<usize> = left.blocks().map(|r| r.start).collect();
    let mut images = Vec::with_capacity(left.n());
    for j in 0..h[0].len() {
        for (i, row) in h.iter().enumerate() {
            for _ in 0..row[j] {
                images.push(next_value[i]);
                next_value[i] += 1;
            }
        }
    }
    Ok(WeylElement { images })
}

/// Largest `n` for which [`double_coset_size`] fits in a `u128`.
const MAX_SIZE_N: usize = 20;

/// `|W_{M_1} w W_{M_2}| = |W_{M_1}| · |W_{M_2}| / Π_ij h_ij!`.
pub fn double_coset_size(w: &WeylElement, left: &YoungSubgroup, right: &YoungSubgroup) -> Result<u128> {
    if w.n() > MAX_SIZE_N {
        return Err(Error::EnumerationBound { n: w.n(), max: MAX_SIZE_N });
    }
    let h = matrix_from_rep(w, left, right)?;
    let stabilizer: u128 = h.iter().flatten().map(|&m| factorial(m as u32)).product();
    Ok(left.order() * right.order() / stabilizer)
}

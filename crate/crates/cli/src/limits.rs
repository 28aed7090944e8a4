//! Input size bounds applied before any computation.
//!
//! Within these bounds every intermediate value (including `End(E)` of the
//! largest admissible bundle) fits comfortably in `i64`.

use ffcalc_core::wire::{BifiltrationRepr, BundleRepr, TorsionRepr};

pub const MAX_SUMMANDS: usize = 64;
pub const MAX_SLOPE_ENTRY: i64 = 10_000;
pub const MAX_MULT: u64 = 10_000;
pub const MAX_RANK: i64 = 1_000_000;

pub const MAX_STALKS: usize = 64;
pub const MAX_LENGTHS_PER_POINT: usize = 64;
pub const MAX_LENGTH: u64 = 1_000_000;
pub const MAX_POINT_LABEL: usize = 256;

pub const MAX_BLOCKS: usize = 64;
pub const MAX_PART: i64 = 1_000;
pub const MAX_ABS_DEGREE: i64 = 1_000_000;

pub const MAX_BIFILTRATION_SIDE: usize = 16;
pub const MAX_ABS_MARGINAL: i64 = 100_000_000;

/// Largest number of double-coset representatives returned in one response.
pub const MAX_REPS: u128 = 100_000;

pub const MAX_BRUHAT_N: usize = 256;
pub const MAX_MATRIX_SIDE: usize = 64;
pub const MAX_MATRIX_N: i64 = 100_000;

pub const MAX_BUDGET: u64 = 100_000;

pub type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn bundle(b: &BundleRepr) -> Check {
    ensure(b.summands.len() <= MAX_SUMMANDS, || format!("at most {MAX_SUMMANDS} summands"))?;
    let mut rank: i64 = 0;
    for s in &b.summands {
        let [num, den] = s.slope;
        ensure(num.unsigned_abs() <= MAX_SLOPE_ENTRY as u64 && den.unsigned_abs() <= MAX_SLOPE_ENTRY as u64, || {
            format!("slope entries must lie in [-{MAX_SLOPE_ENTRY}, {MAX_SLOPE_ENTRY}]")
        })?;
        ensure(s.mult <= MAX_MULT, || format!("multiplicities must be at most {MAX_MULT}"))?;
        rank += s.mult as i64 * den.abs();
    }
    ensure(rank <= MAX_RANK, || format!("total rank must be at most {MAX_RANK}"))
}

pub fn torsion(q: &TorsionRepr) -> Check {
    ensure(q.stalks.len() <= MAX_STALKS, || format!("at most {MAX_STALKS} stalks"))?;
    for s in &q.stalks {
        ensure(s.point.len() <= MAX_POINT_LABEL, || format!("point labels are at most {MAX_POINT_LABEL} bytes"))?;
        ensure(s.lengths.len() <= MAX_LENGTHS_PER_POINT, || {
            format!("at most {MAX_LENGTHS_PER_POINT} lengths per stalk")
        })?;
        ensure(s.lengths.iter().all(|&m| m <= MAX_LENGTH), || format!("lengths must be at most {MAX_LENGTH}"))?;
    }
    Ok(())
}

pub fn composition(parts: &[i64]) -> Check {
    ensure(parts.len() <= MAX_BLOCKS, || format!("at most {MAX_BLOCKS} blocks"))?;
    ensure(parts.iter().all(|&h| h <= MAX_PART), || format!("parts must be at most {MAX_PART}"))
}

pub fn degrees(d: &[i64]) -> Check {
    ensure(d.len() <= MAX_BLOCKS, || format!("at most {MAX_BLOCKS} blocks"))?;
    ensure(d.iter().all(|x| x.unsigned_abs() <= MAX_ABS_DEGREE as u64), || {
        format!("degrees must lie in [-{MAX_ABS_DEGREE}, {MAX_ABS_DEGREE}]")
    })
}

pub fn bifiltration(b: &BifiltrationRepr) -> Check {
    let side = |v: usize| v <= MAX_BIFILTRATION_SIDE;
    ensure(
        side(b.h.len()) && side(b.d.len()) && b.h.iter().chain(&b.d).all(|r| side(r.len())),
        || format!("matrices are at most {MAX_BIFILTRATION_SIDE}x{MAX_BIFILTRATION_SIDE}"),
    )?;
    ensure(b.h.iter().chain(&b.d).flatten().all(|x| x.unsigned_abs() <= MAX_ABS_DEGREE as u64), || {
        format!("matrix entries must lie in [-{MAX_ABS_DEGREE}, {MAX_ABS_DEGREE}]")
    })?;
    let marginals = [&b.row_ranks, &b.col_ranks, &b.row_degs, &b.col_degs];
    ensure(marginals.iter().all(|v| side(v.len())), || {
        format!("marginals have at most {MAX_BIFILTRATION_SIDE} entries")
    })?;
    ensure(marginals.iter().flat_map(|v| v.iter()).all(|x| x.unsigned_abs() <= MAX_ABS_MARGINAL as u64), || {
        format!("marginals must lie in [-{MAX_ABS_MARGINAL}, {MAX_ABS_MARGINAL}]")
    })
}

pub fn permutation_len(n: usize, max: usize) -> Check {
    ensure(n <= max, || format!("permutations have at most {max} entries"))
}

pub fn rank_matrix(h: &[Vec<i64>]) -> Check {
    ensure(h.len() <= MAX_MATRIX_SIDE && h.iter().all(|r| r.len() <= MAX_MATRIX_SIDE), || {
        format!("matrices are at most {MAX_MATRIX_SIDE}x{MAX_MATRIX_SIDE}")
    })?;
    ensure(h.iter().flatten().all(|&x| x <= MAX_MATRIX_N), || format!("entries must be at most {MAX_MATRIX_N}"))?;
    let total: i64 = h.iter().flatten().filter(|&&x| x > 0).sum();
    ensure(total <= MAX_MATRIX_N, || format!("entries must sum to at most {MAX_MATRIX_N}"))
}

pub fn rep_count(count: u128) -> Check {
    ensure(count <= MAX_REPS, || format!("{count} representatives exceed the output bound {MAX_REPS}"))
}

pub fn budget(b: u64) -> Check {
    ensure(b <= MAX_BUDGET, || format!("budget must be at most {MAX_BUDGET}"))
}

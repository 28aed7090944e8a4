//! Built-in cross-check suites. Each suite draws from its own seeded stream
//! and runs `budget` cases, so output depends only on `(seed, budget)`.

use std::collections::HashMap;

use ffcalc_core::weyl::{double_coset_size, min_double_coset_reps};
use ffcalc_core::{
    bun_g_dim, complex_h_dims, d_nu, d_nu_pairing, ext1_torsion_bundle_dim, filtered_end_degree,
    h0_dim, h1_dim, picard_dim, relpos_stratum_dim, torsion_hom_ext_dims, BifiltrationData,
    GradedFlagData, SmoothDim, YoungSubgroup,
};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::sample::{self, BundleBounds};

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SuiteReport {
    pub cases: u64,
    pub failed: u64,
    pub name: &'static str,
    pub passed: u64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SelftestReport {
    pub all_passed: bool,
    pub budget: u64,
    pub seed: u64,
    pub suites: Vec<SuiteReport>,
}

type Suite = fn(&mut ChaCha8Rng, u64) -> bool;

const SUITES: &[(&str, Suite)] = &[
    ("bun_g_zero", bun_g_zero),
    ("d_nu_triple_agreement", d_nu_triple_agreement),
    ("sign_law", sign_law),
    ("euler_characteristic", euler_characteristic),
    ("picard_identity", picard_identity),
    ("exact_sequence", exact_sequence),
    ("relpos_reduction", relpos_reduction),
    ("torsion_hom_ext", torsion_hom_ext),
    ("coset_counts", coset_counts),
];

pub fn selftest(seed: u64, budget: u64) -> SelftestReport {
    let suites: Vec<SuiteReport> = SUITES
        .iter()
        .zip(0u64..)
        .map(|(&(name, case), stream)| {
            let mut rng = sample::rng(seed, stream);
            let passed = (0..budget).filter(|&i| case(&mut rng, i)).count() as u64;
            SuiteReport { cases: budget, failed: budget - passed, name, passed }
        })
        .collect();
    SelftestReport { all_passed: suites.iter().all(|s| s.failed == 0), budget, seed, suites }
}

fn bun_g_zero(rng: &mut ChaCha8Rng, _: u64) -> bool {
    let e = sample::random_bundle(rng, BundleBounds::STANDARD);
    bun_g_dim(&e) == Ok(0) && e.endomorphisms().degree() == 0
}

fn d_nu_triple_agreement(rng: &mut ChaCha8Rng, _: u64) -> bool {
    let (h, d) = sample::random_blocks(rng);
    let explicit = d_nu(&h, &d).expect("matching lengths");
    let pairing = d_nu_pairing(&h, &d).expect("matching lengths");
    let end = filtered_end_degree(&GradedFlagData::from_blocks(&h, &d).expect("matching lengths"));
    explicit == pairing && explicit == -end
}

/// Alternates increasing and decreasing block slopes.
fn sign_law(rng: &mut ChaCha8Rng, i: u64) -> bool {
    let (h, d) = sample::random_increasing_blocks(rng);
    if i.is_multiple_of(2) {
        d_nu(&h, &d).is_ok_and(|x| x > 0)
    } else {
        d_nu(&h.reversed(), &d.reversed()).is_ok_and(|x| x < 0)
    }
}

fn euler_characteristic(rng: &mut ChaCha8Rng, _: u64) -> bool {
    let e = sample::random_bundle_without_slope_zero(rng, BundleBounds::STANDARD);
    match (h0_dim(&e), h1_dim(&e)) {
        (SmoothDim::Smooth(a), SmoothDim::Smooth(b)) => a - b == e.degree(),
        _ => false,
    }
}

fn picard_identity(rng: &mut ChaCha8Rng, _: u64) -> bool {
    let c = sample::random_complex_without_slope_zero(rng, BundleBounds::STANDARD);
    let dims = complex_h_dims(&c);
    match (picard_dim(&c), dims.h0, dims.hminus1) {
        (SmoothDim::Smooth(p), SmoothDim::Smooth(a), SmoothDim::Smooth(b)) => p == a - b,
        _ => false,
    }
}

fn exact_sequence(rng: &mut ChaCha8Rng, _: u64) -> bool {
    let c = sample::random_complex_without_slope_zero(rng, BundleBounds::STANDARD);
    match (complex_h_dims(&c).h0, h0_dim(&c.e_zero), h1_dim(&c.e_minus1)) {
        (SmoothDim::Smooth(x), SmoothDim::Smooth(a), SmoothDim::Smooth(b)) => x == a + b,
        _ => false,
    }
}

fn relpos_reduction(rng: &mut ChaCha8Rng, _: u64) -> bool {
    let (h, d) = sample::random_blocks(rng);
    let column = |v: &[i64]| v.iter().map(|&x| vec![x]).collect::<Vec<_>>();
    let mut b = BifiltrationData::from_matrices(column(h.parts()), column(d.degrees()));
    b.row_ranks = h.parts().to_vec();
    b.row_degs = d.degrees().to_vec();
    b.col_ranks = vec![h.total()];
    b.col_degs = vec![d.degrees().iter().sum()];
    relpos_stratum_dim(&b) == d_nu(&h, &d)
}

fn torsion_hom_ext(rng: &mut ChaCha8Rng, _: u64) -> bool {
    let (q1, q2) = (sample::random_torsion(rng), sample::random_torsion(rng));
    let g = sample::random_bundle(rng, BundleBounds::STANDARD);
    let dims = torsion_hom_ext_dims(&q1, &q2);
    let total: u64 = q1.stalks().flat_map(|(_, l)| l.iter()).sum();
    dims.hom == dims.ext
        && dims.hom.is_smooth()
        && ext1_torsion_bundle_dim(&q1, &g) == SmoothDim::Smooth(total as i64 * g.rank())
}

/// Walks all composition pairs of `n = 1, 2, …` in order, one pair per case.
fn coset_counts(_: &mut ChaCha8Rng, i: u64) -> bool {
    let (left, right) = nth_composition_pair(i);
    let n = left.iter().sum::<i64>();
    let (l, r) = (
        YoungSubgroup::from_parts(left.clone()).expect("composition"),
        YoungSubgroup::from_parts(right.clone()).expect("composition"),
    );
    let Ok(reps) = min_double_coset_reps(n as usize, &l, &r) else {
        return false;
    };
    let sizes: u128 = reps
        .iter()
        .map(|w| double_coset_size(w, &l, &r).expect("n is small"))
        .sum();
    reps.len() as u128 == contingency_count(&left, &right) && sizes == (1..=n as u128).product()
}

/// Largest `n` visited by the coset suite before it wraps around.
const COSET_SUITE_MAX_N: i64 = 6;

fn nth_composition_pair(i: u64) -> (Vec<i64>, Vec<i64>) {
    let per_n = |n: i64| 1u64 << (2 * (n - 1));
    let cycle: u64 = (1..=COSET_SUITE_MAX_N).map(per_n).sum();
    let mut i = i % cycle;
    for n in 1..=COSET_SUITE_MAX_N {
        if i < per_n(n) {
            let side = 1u64 << (n - 1);
            let all = sample::compositions(n);
            return (all[(i / side) as usize].clone(), all[(i % side) as usize].clone());
        }
        i -= per_n(n);
    }
    unreachable!("i was reduced modulo the cycle length")
}

/// Number of nonnegative integer matrices with the given row and column
/// sums, by filling one row at a time and memoizing on the remaining column
/// sums.
pub fn contingency_count(rows: &[i64], cols: &[i64]) -> u128 {
    fn fill_row(
        left: i64,
        j: usize,
        cols: &mut Vec<i64>,
        rest: &[i64],
        memo: &mut HashMap<(usize, Vec<i64>), u128>,
    ) -> u128 {
        if j == cols.len() {
            return if left == 0 { count(rest, cols, memo) } else { 0 };
        }
        let mut total = 0;
        for x in 0..=left.min(cols[j]) {
            cols[j] -= x;
            total += fill_row(left - x, j + 1, cols, rest, memo);
            cols[j] += x;
        }
        total
    }

    fn count(rows: &[i64], cols: &mut Vec<i64>, memo: &mut HashMap<(usize, Vec<i64>), u128>) -> u128 {
        let Some((&first, rest)) = rows.split_first() else {
            return u128::from(cols.iter().all(|&c| c == 0));
        };
        let key = (rows.len(), cols.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let v = fill_row(first, 0, cols, rest, memo);
        memo.insert(key, v);
        v
    }

    if rows.iter().sum::<i64>() != cols.iter().sum::<i64>() {
        return 0;
    }
    count(rows, &mut cols.to_vec(), &mut HashMap::new())
}

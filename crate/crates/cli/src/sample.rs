//! Seeded generators and exhaustive enumerators for the cross-check suites.

use ffcalc_core::{Bundle, Composition, DegreeVector, Slope, TorsionSheaf, TwoTermComplex};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Bounds on generated bundles: rank, slope denominator and `|slope|`.
#[derive(Clone, Copy, Debug)]
pub struct BundleBounds {
    pub max_rank: i64,
    pub max_den: i64,
    pub max_abs_slope: i64,
}

impl BundleBounds {
    pub const STANDARD: BundleBounds = BundleBounds { max_rank: 6, max_den: 4, max_abs_slope: 3 };
}

/// Independent stream `stream` of the generator seeded by `seed`.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Reduced slopes `s/r` with `r ≤ max_den` and `|s/r| ≤ max_abs`, ascending.
pub fn slopes(max_den: i64, max_abs: i64) -> Vec<Slope> {
    let mut out: Vec<Slope> = (1..=max_den)
        .flat_map(|r| (-max_abs * r..=max_abs * r).map(move |s| (s, r)))
        .filter(|&(s, r)| num_integer::gcd(s, r) == 1)
        .map(|(s, r)| Slope::new(s, r).expect("reduced"))
        .collect();
    out.sort();
    out
}

fn random_slope<R: Rng>(rng: &mut R, max_den: i64, max_abs: i64, nonzero: bool) -> Slope {
    loop {
        let r = rng.gen_range(1..=max_den);
        let s = rng.gen_range(-max_abs * r..=max_abs * r);
        if num_integer::gcd(s, r) == 1 && !(nonzero && s == 0) {
            return Slope::new(s, r).expect("reduced");
        }
    }
}

fn fill<R: Rng>(rng: &mut R, rank: i64, b: BundleBounds, nonzero: bool) -> Bundle {
    let mut left = rank;
    let mut pieces = Vec::new();
    while left > 0 {
        let s = random_slope(rng, b.max_den.min(left), b.max_abs_slope, nonzero);
        let mult = rng.gen_range(1..=left / s.denominator());
        left -= mult * s.denominator();
        pieces.push((s, mult as u64));
    }
    Bundle::from_summands(pieces)
}

/// A nonzero bundle of rank in `1..=max_rank`.
pub fn random_bundle<R: Rng>(rng: &mut R, b: BundleBounds) -> Bundle {
    let rank = rng.gen_range(1..=b.max_rank);
    fill(rng, rank, b, false)
}

/// A possibly zero bundle with no slope-0 summand.
pub fn random_bundle_without_slope_zero<R: Rng>(rng: &mut R, b: BundleBounds) -> Bundle {
    let rank = rng.gen_range(0..=b.max_rank);
    fill(rng, rank, b, true)
}

pub fn random_complex_without_slope_zero<R: Rng>(rng: &mut R, b: BundleBounds) -> TwoTermComplex {
    TwoTermComplex::new(
        random_bundle_without_slope_zero(rng, b),
        random_bundle_without_slope_zero(rng, b),
    )
}

/// Block data with `k ≤ 4`, parts `≤ 4` and degrees in `[−5, 5]`.
pub fn random_blocks<R: Rng>(rng: &mut R) -> (Composition, DegreeVector) {
    let k = rng.gen_range(1..=4);
    let h = (0..k).map(|_| rng.gen_range(1..=4)).collect();
    let d = (0..k).map(|_| rng.gen_range(-5..=5)).collect();
    (Composition::new(h).expect("parts ≥ 1"), DegreeVector::new(d))
}

/// Block data with `2 ≤ k ≤ 4` whose block slopes `d_i/h_i` strictly increase.
pub fn random_increasing_blocks<R: Rng>(rng: &mut R) -> (Composition, DegreeVector) {
    let k = rng.gen_range(2..=4);
    let mut chosen: Vec<Slope> = Vec::with_capacity(k);
    while chosen.len() < k {
        let s = random_slope(rng, 4, 3, false);
        if !chosen.contains(&s) {
            chosen.push(s);
        }
    }
    chosen.sort();
    let (mut h, mut d) = (Vec::new(), Vec::new());
    for s in chosen {
        let m = rng.gen_range(1..=2);
        h.push(m * s.denominator());
        d.push(m * s.numerator());
    }
    (Composition::new(h).expect("parts ≥ 1"), DegreeVector::new(d))
}

const POINTS: [&str; 3] = ["x", "y", "z"];

/// Up to three points, up to three cyclic summands of length `≤ 5` each.
pub fn random_torsion<R: Rng>(rng: &mut R) -> TorsionSheaf {
    let mut stalks: Vec<(&str, Vec<u64>)> = Vec::new();
    for p in POINTS {
        if rng.gen_bool(0.6) {
            let n = rng.gen_range(1..=3);
            stalks.push((p, (0..n).map(|_| rng.gen_range(1..=5)).collect()));
        }
    }
    TorsionSheaf::from_stalks(stalks).expect("lengths ≥ 1")
}

/// Every bundle (including zero) with rank `≤ max_rank` whose slopes come from
/// [`slopes`]`(max_den, max_abs)`.
pub fn all_bundles(max_rank: i64, max_den: i64, max_abs: i64) -> Vec<Bundle> {
    fn go(slopes: &[Slope], left: i64, acc: &mut Vec<(Slope, u64)>, out: &mut Vec<Bundle>) {
        let Some((&s, rest)) = slopes.split_first() else {
            out.push(Bundle::from_summands(acc.iter().copied()));
            return;
        };
        go(rest, left, acc, out);
        let r = s.denominator();
        for m in 1..=left / r {
            acc.push((s, m as u64));
            go(rest, left - m * r, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(&slopes(max_den, max_abs), max_rank, &mut Vec::new(), &mut out);
    out
}

/// Every composition of `n`, in lexicographic order.
pub fn compositions(n: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Every tuple of length `1..=max_k` with entries in `1..=max_part`.
pub fn bounded_compositions(max_k: usize, max_part: i64) -> Vec<Vec<i64>> {
    tuples(max_k, 1..=max_part)
}

/// Every tuple of length exactly `k` with entries in `range`.
pub fn tuples_of_len(k: usize, range: std::ops::RangeInclusive<i64>) -> Vec<Vec<i64>> {
    (0..k).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|t| {
                range.clone().map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect()
    })
}

fn tuples(max_k: usize, range: std::ops::RangeInclusive<i64>) -> Vec<Vec<i64>> {
    (1..=max_k).flat_map(|k| tuples_of_len(k, range.clone())).collect()
}

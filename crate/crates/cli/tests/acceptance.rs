//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p ffcalc-cli --test acceptance`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::io::Write;
use std::process::{Command, ExitCode, Stdio};
use std::time::Instant;

use ffcalc_cli::sample::{self, BundleBounds};
use ffcalc_core::weyl::{
    bruhat_leq, bruhat_leq_along, coset_rep_from_matrix, double_coset_size, matrix_from_rep,
    min_double_coset_reps,
};
use ffcalc_core::{
    bun_g_dim, complex_h_dims, d_nu, d_nu_pairing, ext1_torsion_bundle_dim, filtered_end_degree,
    h0_dim, h1_dim, picard_dim, relpos_stratum_dim, torsion_hom_ext_dims, validate_bifiltration,
    BifiltrationData, Bundle, Composition, DegreeVector, GradedFlagData, Slope, SmoothDim,
    WeylElement, YoungSubgroup,
};
use rand::Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

type Verdict = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Verdict + 'a>);

fn check(ok: bool, pass: String, fail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Ok(pass)
    } else {
        Err(fail())
    }
}

const SEED: u64 = 20_240_601;

// 1 ---------------------------------------------------------------------------

fn bun_g_zero() -> Verdict {
    const N: u64 = 100_000;
    let bad: Vec<String> = (0..N)
        .into_par_iter()
        .filter_map(|i| {
            let e = sample::random_bundle(&mut sample::rng(SEED, i), BundleBounds::STANDARD);
            let ok = bun_g_dim(&e) == Ok(0) && e.endomorphisms().degree() == 0;
            (!ok).then(|| e.to_string())
        })
        .collect();
    check(bad.is_empty(), format!("{N} random bundles: dim Bun_G = 0 and deg End = 0"), || {
        format!("{} failures, first {}", bad.len(), bad[0])
    })
}

// 2, 7 ------------------------------------------------------------------------

fn block_data() -> Vec<(Vec<i64>, Vec<i64>)> {
    sample::bounded_compositions(4, 4)
        .into_iter()
        .flat_map(|h| {
            sample::tuples_of_len(h.len(), -5..=5).into_iter().map(move |d| (h.clone(), d))
        })
        .collect()
}

fn triple_agreement(data: &[(Vec<i64>, Vec<i64>)]) -> Verdict {
    let bad: Vec<_> = data
        .par_iter()
        .filter(|(h, d)| {
            let (hc, dv) = (Composition::new(h.clone()).unwrap(), DegreeVector::new(d.clone()));
            let explicit = d_nu(&hc, &dv).unwrap();
            let pairing = d_nu_pairing(&hc, &dv).unwrap();
            let pieces = h.iter().copied().zip(d.iter().copied()).collect();
            let end = filtered_end_degree(&GradedFlagData::new(pieces).unwrap());
            !(explicit == pairing && explicit == -end)
        })
        .collect();
    check(
        bad.is_empty(),
        format!("{} block data (k<=4, parts<=4, d in [-5,5]): explicit = pairing = -filtered End", data.len()),
        || format!("{} disagreements, first {:?}", bad.len(), bad[0]),
    )
}

fn relpos_reduction(data: &[(Vec<i64>, Vec<i64>)]) -> Verdict {
    let bad: Vec<_> = data
        .par_iter()
        .filter(|(h, d)| {
            let column = |v: &[i64]| v.iter().map(|&x| vec![x]).collect::<Vec<_>>();
            let mut b = BifiltrationData::from_matrices(column(h), column(d));
            b.row_ranks = h.clone();
            b.row_degs = d.clone();
            b.col_ranks = vec![h.iter().sum()];
            b.col_degs = vec![d.iter().sum()];
            let expected = d_nu(&Composition::new(h.clone()).unwrap(), &DegreeVector::new(d.clone()));
            relpos_stratum_dim(&b) != expected
        })
        .collect();
    if !bad.is_empty() {
        return Err(format!("k'=1 reduction fails on {} data, first {:?}", bad.len(), bad[0]));
    }

    let h = vec![vec![1, 0, 2], vec![1, 1, 0]];
    let d = vec![vec![0, 1, -1], vec![2, 0, 3]];
    let mut valid = BifiltrationData::from_matrices(h.clone(), d.clone());
    valid.row_ranks = h.iter().map(|r| r.iter().sum()).collect();
    valid.row_degs = d.iter().map(|r| r.iter().sum()).collect();
    valid.col_ranks = (0..3).map(|j| h.iter().map(|r| r[j]).sum()).collect();
    valid.col_degs = (0..3).map(|j| d.iter().map(|r| r[j]).sum()).collect();
    if !validate_bifiltration(&valid).is_empty() {
        return Err("base 2x3 instance is not valid".into());
    }
    let mut perturbations = 0;
    let mut accepted = Vec::new();
    let mut perturb = |f: &dyn Fn(&mut BifiltrationData) -> &mut i64, label: String| {
        for delta in [-1, 1] {
            let mut b = valid.clone();
            *f(&mut b) += delta;
            perturbations += 1;
            if validate_bifiltration(&b).is_empty() {
                accepted.push(format!("{label}{delta:+}"));
            }
        }
    };
    for i in 0..2 {
        for j in 0..3 {
            perturb(&move |b| &mut b.h[i][j], format!("h[{i}][{j}]"));
            perturb(&move |b| &mut b.d[i][j], format!("d[{i}][{j}]"));
        }
        perturb(&move |b| &mut b.row_ranks[i], format!("row_ranks[{i}]"));
        perturb(&move |b| &mut b.row_degs[i], format!("row_degs[{i}]"));
    }
    for j in 0..3 {
        perturb(&move |b| &mut b.col_ranks[j], format!("col_ranks[{j}]"));
        perturb(&move |b| &mut b.col_degs[j], format!("col_degs[{j}]"));
    }
    check(
        accepted.is_empty(),
        format!(
            "{} k'=1 bifiltrations match d_nu; all {perturbations} single-entry perturbations of a valid 2x3 instance rejected",
            data.len()
        ),
        || format!("perturbations accepted: {accepted:?}"),
    )
}

// 3 ---------------------------------------------------------------------------

fn sign_law() -> Verdict {
    let mut rng = sample::rng(SEED, 3);
    let (mut inc_bad, mut dec_bad) = (0, 0);
    for _ in 0..1000 {
        let (h, d) = sample::random_increasing_blocks(&mut rng);
        let slopes: Vec<Slope> =
            h.parts().iter().zip(d.degrees()).map(|(&h, &d)| Slope::reduced(d, h).unwrap()).collect();
        assert!(slopes.windows(2).all(|w| w[0] < w[1]), "generator produced {slopes:?}");
        inc_bad += usize::from(d_nu(&h, &d).unwrap() <= 0);
        dec_bad += usize::from(d_nu(&h.reversed(), &d.reversed()).unwrap() >= 0);
    }
    check(inc_bad + dec_bad == 0, "1000 increasing tuples d_nu > 0, 1000 decreasing d_nu < 0".into(), || {
        format!("{inc_bad} increasing and {dec_bad} decreasing violations")
    })
}

// 4 ---------------------------------------------------------------------------

fn euler_characteristic() -> Verdict {
    let family: Vec<Bundle> = sample::all_bundles(5, 4, 3)
        .into_iter()
        .filter(|e| !e.has_slope(Slope::ZERO))
        .collect();
    let bad: Vec<&Bundle> = family
        .par_iter()
        .filter(|e| match (h0_dim(e), h1_dim(e)) {
            (SmoothDim::Smooth(a), SmoothDim::Smooth(b)) => a - b != e.degree(),
            _ => true,
        })
        .collect();
    check(
        bad.is_empty(),
        format!("{} bundles (rank<=5, den<=4, |slope|<=3, no slope 0): h0 - h1 = deg", family.len()),
        || format!("{} failures, first {}", bad.len(), bad[0]),
    )
}

// 5, 6 ------------------------------------------------------------------------

fn complex_sample() -> Vec<ffcalc_core::TwoTermComplex> {
    let mut rng = sample::rng(SEED, 5);
    (0..10_000)
        .map(|_| sample::random_complex_without_slope_zero(&mut rng, BundleBounds::STANDARD))
        .collect()
}

fn picard_identity(sample: &[ffcalc_core::TwoTermComplex]) -> Verdict {
    let bad = sample
        .iter()
        .filter(|c| {
            let dims = complex_h_dims(c);
            match (picard_dim(c), dims.h0, dims.hminus1) {
                (SmoothDim::Smooth(p), SmoothDim::Smooth(a), SmoothDim::Smooth(b)) => p != a - b,
                _ => true,
            }
        })
        .count();
    check(bad == 0, format!("{} complexes: picard = h^0 - h^-1", sample.len()), || format!("{bad} failures"))
}

fn exact_sequence(sample: &[ffcalc_core::TwoTermComplex]) -> Verdict {
    let bad = sample
        .iter()
        .filter(|c| match (complex_h_dims(c).h0, h0_dim(&c.e_zero), h1_dim(&c.e_minus1)) {
            (SmoothDim::Smooth(x), SmoothDim::Smooth(a), SmoothDim::Smooth(b)) => x != a + b,
            _ => true,
        })
        .count();
    check(bad == 0, format!("{} complexes: h^0(E*) = h^0(E^0) + h^1(E^-1)", sample.len()), || {
        format!("{bad} failures")
    })
}

// 8 ---------------------------------------------------------------------------

fn torsion_formulas() -> Verdict {
    let mut rng = sample::rng(SEED, 8);
    let mut bad_hom = 0;
    let mut bad_ext1 = 0;
    for _ in 0..10_000 {
        let (q1, q2) = (sample::random_torsion(&mut rng), sample::random_torsion(&mut rng));
        let d = torsion_hom_ext_dims(&q1, &q2);
        bad_hom += usize::from(d.hom != d.ext || !d.hom.is_smooth());
    }
    for _ in 0..10_000 {
        let q = sample::random_torsion(&mut rng);
        let g = if rng.gen_bool(0.1) { Bundle::zero() } else { sample::random_bundle(&mut rng, BundleBounds::STANDARD) };
        let length: u64 = q.stalks().flat_map(|(_, l)| l.iter()).sum();
        let rank: i64 = g.summands().iter().map(|s| s.mult as i64 * s.slope.denominator()).sum();
        bad_ext1 += usize::from(ext1_torsion_bundle_dim(&q, &g) != SmoothDim::Smooth(length as i64 * rank));
    }
    check(
        bad_hom + bad_ext1 == 0,
        "10000 pairs hom = ext; 10000 pairs ext1(Q, G) = deg Q * rank G".into(),
        || format!("{bad_hom} hom/ext and {bad_ext1} ext1 failures"),
    )
}

// 9 ---------------------------------------------------------------------------

/// Matrices with the given margins, counted by choosing the first row
/// entry-wise and recursing on the reduced margins.
fn contingency_oracle(rows: &[i64], cols: &[i64], memo: &mut HashMap<(Vec<i64>, Vec<i64>), u128>) -> u128 {
    let Some((&r, rest)) = rows.split_first() else {
        return u128::from(cols.iter().all(|&c| c == 0));
    };
    let key = (rows.to_vec(), cols.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut stack = vec![(0usize, r, cols.to_vec())];
    while let Some((j, left, c)) = stack.pop() {
        if j == c.len() {
            if left == 0 {
                total += contingency_oracle(rest, &c, memo);
            }
            continue;
        }
        for x in 0..=left.min(c[j]) {
            let mut c2 = c.clone();
            c2[j] -= x;
            stack.push((j + 1, left - x, c2));
        }
    }
    memo.insert(key, total);
    total
}

fn weyl_counts() -> Verdict {
    let mut memo = HashMap::new();
    let mut pairs = 0;
    let mut errors = Vec::new();
    let mut round_trips = 0;
    for n in 1..=7i64 {
        let comps = sample::compositions(n);
        let n_fact: u128 = (1..=n as u128).product();
        for a in &comps {
            for b in &comps {
                pairs += 1;
                let (l, r) = (YoungSubgroup::from_parts(a.clone()).unwrap(), YoungSubgroup::from_parts(b.clone()).unwrap());
                let reps = min_double_coset_reps(n as usize, &l, &r).unwrap();
                let expected = contingency_oracle(a, b, &mut memo);
                if reps.len() as u128 != expected {
                    errors.push(format!("{a:?} {b:?}: {} reps vs {expected} matrices", reps.len()));
                }
                let total: u128 = reps.iter().map(|w| double_coset_size(w, &l, &r).unwrap()).sum();
                if total != n_fact {
                    errors.push(format!("{a:?} {b:?}: sizes sum to {total}, not {n}!"));
                }
                if n <= 6 {
                    for w in &reps {
                        let h = matrix_from_rep(w, &l, &r).unwrap();
                        let back = coset_rep_from_matrix(&h).unwrap();
                        round_trips += 1;
                        if &back != w || matrix_from_rep(&back, &l, &r).unwrap() != h {
                            errors.push(format!("{a:?} {b:?}: round trip fails at {w}"));
                        }
                    }
                }
            }
        }
    }
    check(
        errors.is_empty(),
        format!("{pairs} composition pairs (n<=7): counts = contingency DP, sizes partition n!; {round_trips} rep/matrix round trips (n<=6)"),
        || format!("{} failures, first {}", errors.len(), errors[0]),
    )
}

// 10 --------------------------------------------------------------------------

fn all_perms(n: usize) -> Vec<WeylElement> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<WeylElement>) {
        if cur.len() == n {
            out.push(WeylElement::from_zero_based(cur.clone()).unwrap());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Bruhat order from its definition: the reflexive-transitive closure of
/// `x < x t` for transpositions `t` with `ℓ(x t) > ℓ(x)`. Returns, for `w`,
/// the set of everything below it.
fn below_by_reflections(w: &WeylElement) -> HashSet<WeylElement> {
    let n = w.n();
    let mut seen = HashSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for a in 0..n {
            for b in a + 1..n {
                let mut images = x.zero_based().to_vec();
                images.swap(a, b);
                let y = WeylElement::from_zero_based(images).unwrap();
                if y.length() < x.length() && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    seen
}

fn reduced_words(w: &WeylElement) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![vec![]];
    }
    (1..w.n())
        .filter(|&i| w.has_right_descent(i))
        .flat_map(|i| {
            reduced_words(&w.mul_simple_right(i)).into_iter().map(move |mut word| {
                word.push(i);
                word
            })
        })
        .collect()
}

fn bruhat() -> Verdict {
    let mut pairs = 0;
    let mut words = 0;
    let mut errors = Vec::new();
    for n in 1..=5 {
        let perms = all_perms(n);
        for w in &perms {
            let below = below_by_reflections(w);
            let ws = reduced_words(w);
            words += ws.len();
            for u in &perms {
                pairs += 1;
                let expected = below.contains(u);
                if bruhat_leq(u, w).unwrap() != expected {
                    errors.push(format!("{u} <= {w}: expected {expected}"));
                }
                if ws.iter().any(|word| bruhat_leq_along(u, word) != expected) {
                    errors.push(format!("{u} <= {w}: depends on the reduced word"));
                }
            }
        }
    }
    check(
        errors.is_empty(),
        format!("{pairs} pairs (n<=5) match the reflection-chain definition; {words} reduced words agree"),
        || format!("{} failures, first {}", errors.len(), errors[0]),
    )
}

// 11 --------------------------------------------------------------------------

fn dominance_poset() -> Verdict {
    let mut classes: BTreeMap<(i64, i64), Vec<Bundle>> = BTreeMap::new();
    for e in sample::all_bundles(4, 4, 3) {
        if e.degree().abs() <= 3 {
            classes.entry((e.rank(), e.degree())).or_default().push(e);
        }
    }
    let total: usize = classes.values().map(Vec::len).sum();
    let errors: Vec<String> = classes
        .par_iter()
        .flat_map_iter(|(key, class)| {
            let m = class.len();
            let rel: Vec<Vec<bool>> = class.iter().map(|a| class.iter().map(|b| a.dominates(b)).collect()).collect();
            let mut errs = Vec::new();
            for i in 0..m {
                if !rel[i][i] {
                    errs.push(format!("{key:?}: {} not reflexive", class[i]));
                }
                for j in 0..m {
                    if i != j && rel[i][j] && rel[j][i] {
                        errs.push(format!("{key:?}: {} and {} dominate each other", class[i], class[j]));
                    }
                    if rel[i][j] {
                        for k in 0..m {
                            if rel[j][k] && !rel[i][k] {
                                errs.push(format!("{key:?}: transitivity fails at {}, {}, {}", class[i], class[j], class[k]));
                            }
                        }
                    }
                }
            }
            errs
        })
        .collect();
    check(
        errors.is_empty(),
        format!("{total} bundles in {} (rank, deg) classes (rank<=4, |deg|<=3, den<=4, |slope|<=3): partial order", classes.len()),
        || format!("{} failures, first {}", errors.len(), errors[0]),
    )
}

// 12 --------------------------------------------------------------------------

fn ffcalc(stdin: &[u8]) -> (Option<i32>, Vec<u8>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ffcalc"))
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ffcalc");
    let mut pipe = child.stdin.take().unwrap();
    let input = stdin.to_vec();
    let writer = std::thread::spawn(move || pipe.write_all(&input));
    let out = child.wait_with_output().unwrap();
    writer.join().unwrap().unwrap();
    (out.status.code(), out.stdout)
}

const EXAMPLES: [(&str, &str, Option<i32>); 3] = [
    (r#"{"command":"bunp-dim","payload":{"h":[1,1],"d":[0,1]}}"#, r#"{"ok":true,"result":{"dim":1}}"#, Some(0)),
    (
        r#"{"command":"h0","payload":{"summands":[{"slope":[0,1],"mult":1}]}}"#,
        r#"{"ok":true,"result":{"smooth":false,"dim":null}}"#,
        Some(0),
    ),
    (r#"{"command":"bunp-dim","payload":{"h":[1,1],"d":[0]}}"#, "", Some(1)),
];

const COMMANDS: [&str; 16] = [
    "bundle-info", "h0", "h1", "complex-dims", "picard", "smooth-check", "torsion", "bunp-dim",
    "laumon-dim", "bung-dim", "relpos-dim", "weyl-reps", "weyl-bruhat", "weyl-matrix",
    "polygon-dominates", "selftest",
];

fn wild_int<R: Rng>(rng: &mut R) -> Value {
    match rng.gen_range(0..40) {
        0 => json!(i64::MAX),
        1 => json!(i64::MIN),
        2 => json!(u64::MAX),
        3 => json!(rng.gen_range(-1_000_000_000i64..1_000_000_000)),
        4 => json!(rng.gen::<f64>() * 10.0),
        5 => json!(10_000),
        _ => json!(rng.gen_range(-3i64..=12)),
    }
}

fn int_list<R: Rng>(rng: &mut R) -> Value {
    let n = rng.gen_range(0..8);
    Value::Array((0..n).map(|_| wild_int(rng)).collect())
}

fn bundle_json<R: Rng>(rng: &mut R) -> Value {
    let n = rng.gen_range(0..5);
    let summands: Vec<Value> = (0..n)
        .map(|_| json!({"slope": [wild_int(rng), wild_int(rng)], "mult": wild_int(rng)}))
        .collect();
    json!({"summands": summands})
}

fn torsion_json<R: Rng>(rng: &mut R) -> Value {
    let n = rng.gen_range(0..4);
    let stalks: Vec<Value> = (0..n)
        .map(|_| {
            let point = ["x", "y", "", "\u{1F600}"][rng.gen_range(0..4)];
            json!({"point": point, "lengths": int_list(rng)})
        })
        .collect();
    json!({"stalks": stalks})
}

fn matrix_json<R: Rng>(rng: &mut R) -> Value {
    let n = rng.gen_range(0..4);
    Value::Array((0..n).map(|_| int_list(rng)).collect())
}

fn small_perm_json<R: Rng>(rng: &mut R) -> Value {
    let n = rng.gen_range(0..7);
    let mut v: Vec<usize> = (1..=n).collect();
    for i in (1..v.len()).rev() {
        v.swap(i, rng.gen_range(0..=i));
    }
    if rng.gen_bool(0.2) {
        return int_list(rng);
    }
    json!(v)
}

fn payload_for<R: Rng>(rng: &mut R, command: &str) -> Value {
    match command {
        "bundle-info" | "h0" | "h1" | "bung-dim" => bundle_json(rng),
        "complex-dims" | "picard" | "smooth-check" => json!({"e_minus1": bundle_json(rng), "e_zero": bundle_json(rng)}),
        "torsion" => json!({"q": torsion_json(rng), "q2": torsion_json(rng), "g": bundle_json(rng)}),
        "bunp-dim" | "laumon-dim" => json!({"h": int_list(rng), "d": int_list(rng)}),
        "relpos-dim" => json!({
            "h": matrix_json(rng), "d": matrix_json(rng),
            "row_ranks": int_list(rng), "col_ranks": int_list(rng),
            "row_degs": int_list(rng), "col_degs": int_list(rng),
        }),
        "weyl-reps" => json!({"left": int_list(rng), "right": int_list(rng)}),
        "weyl-bruhat" => json!({"u": small_perm_json(rng), "w": small_perm_json(rng)}),
        "weyl-matrix" if rng.gen_bool(0.5) => json!({"h": matrix_json(rng)}),
        "weyl-matrix" => json!({"w": small_perm_json(rng), "left": int_list(rng), "right": int_list(rng)}),
        "polygon-dominates" => json!({"b": bundle_json(rng), "b2": bundle_json(rng)}),
        _ => json!({"seed": wild_int(rng), "budget": rng.gen_range(0..20)}),
    }
}

fn random_json<R: Rng>(rng: &mut R, depth: u32) -> Value {
    match rng.gen_range(0..if depth > 3 { 4 } else { 7 }) {
        0 => Value::Null,
        1 => json!(rng.gen_bool(0.5)),
        2 => wild_int(rng),
        3 => {
            let word = ["command", "payload", "summands", "h0", "ü"][rng.gen_range(0..5)];
            json!(word)
        }
        4 => Value::Array((0..rng.gen_range(0..4)).map(|_| random_json(rng, depth + 1)).collect()),
        _ => {
            let keys = ["command", "payload", "h", "d", "slope", "mult", "q"];
            Value::Object(
                (0..rng.gen_range(0..4))
                    .map(|_| (keys[rng.gen_range(0..keys.len())].to_string(), random_json(rng, depth + 1)))
                    .collect(),
            )
        }
    }
}

fn fuzz_line<R: Rng>(rng: &mut R) -> Vec<u8> {
    let mut line = match rng.gen_range(0..10) {
        0 | 1 => (0..rng.gen_range(0..80)).map(|_| rng.gen::<u8>()).collect(),
        2 | 3 => random_json(rng, 0).to_string().into_bytes(),
        4 | 5 => {
            let base = EXAMPLES[rng.gen_range(0..3)].0.as_bytes().to_vec();
            let mut b = base;
            for _ in 0..rng.gen_range(1..4) {
                let pos = rng.gen_range(0..b.len().max(1));
                match rng.gen_range(0..3) {
                    0 if !b.is_empty() => {
                        b.remove(pos.min(b.len() - 1));
                    }
                    1 => b.insert(pos.min(b.len()), rng.gen()),
                    _ if !b.is_empty() => {
                        let p = pos.min(b.len() - 1);
                        b[p] = rng.gen();
                    }
                    _ => {}
                }
            }
            b
        }
        _ => {
            let command = COMMANDS[rng.gen_range(0..COMMANDS.len())];
            let payload = payload_for(rng, command);
            json!({"command": command, "payload": payload}).to_string().into_bytes()
        }
    };
    line.retain(|&b| b != b'\n');
    line
}

fn cli() -> Verdict {
    for (input, expected, code) in EXAMPLES {
        let (status, out) = ffcalc(format!("{input}\n").as_bytes());
        let out = String::from_utf8(out).map_err(|e| e.to_string())?;
        let line = out.trim_end_matches('\n');
        if status != code {
            return Err(format!("{input}: exit {status:?}, expected {code:?}"));
        }
        if !expected.is_empty() && line != expected {
            return Err(format!("{input}: got {line}, expected {expected}"));
        }
        if expected.is_empty() {
            let v: Value = serde_json::from_str(line).map_err(|e| e.to_string())?;
            let msg = v["error"]["message"].as_str().unwrap_or("");
            if v["error"]["code"] != 1 || !msg.contains("length mismatch") {
                return Err(format!("{input}: got {line}, expected a length-mismatch error with code 1"));
            }
        }
    }

    let mut rng = sample::rng(SEED, 12);
    let mut input = Vec::new();
    let mut nonblank = 0;
    for _ in 0..100_000 {
        let line = fuzz_line(&mut rng);
        nonblank += usize::from(!line.iter().all(u8::is_ascii_whitespace));
        input.extend_from_slice(&line);
        input.push(b'\n');
    }
    let (status, first) = ffcalc(&input);
    if !matches!(status, Some(0..=2)) {
        return Err(format!("fuzz batch exited with {status:?}"));
    }
    let text = String::from_utf8(first.clone()).map_err(|_| "fuzz output is not UTF-8".to_string())?;
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() != nonblank {
        return Err(format!("{} responses for {nonblank} nonblank lines", lines.len()));
    }
    let (mut ok, mut domain, mut parse) = (0, 0, 0);
    for l in &lines {
        let v: Value = serde_json::from_str(l).map_err(|e| format!("unparseable response {l}: {e}"))?;
        match (v["ok"].as_bool(), v["error"]["code"].as_u64()) {
            (Some(true), None) if v.get("result").is_some() => ok += 1,
            (Some(false), Some(1)) if v.get("result").is_none() => domain += 1,
            (Some(false), Some(2)) if v.get("result").is_none() => parse += 1,
            _ => return Err(format!("malformed response {l}")),
        }
    }
    let (status2, second) = ffcalc(&input);
    check(
        status2 == status && second == first,
        format!(
            "3 worked examples bit-exact; 100000 fuzzed lines ({ok} ok, {domain} domain, {parse} parse errors), no crash, byte-identical rerun"
        ),
        || "rerun of the fuzz batch differs".into(),
    )
}

fn main() -> ExitCode {
    let blocks = block_data();
    let complexes = complex_sample();
    let criteria: Vec<Criterion> = vec![
        ("bun_g dimension zero", Box::new(bun_g_zero)),
        ("d_nu triple agreement", Box::new(|| triple_agreement(&blocks))),
        ("sign law", Box::new(sign_law)),
        ("Euler characteristic", Box::new(euler_characteristic)),
        ("Picard identity", Box::new(|| picard_identity(&complexes))),
        ("exact-sequence additivity", Box::new(|| exact_sequence(&complexes))),
        ("relative-position reduction", Box::new(|| relpos_reduction(&blocks))),
        ("torsion formulas", Box::new(torsion_formulas)),
        ("Weyl counts", Box::new(weyl_counts)),
        ("Bruhat order", Box::new(bruhat)),
        ("dominance poset", Box::new(dominance_poset)),
        ("CLI determinism and robustness", Box::new(cli)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{secs:.1}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

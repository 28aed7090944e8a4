#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use ffcalc_core::{Bundle, Slope, WeylElement, YoungSubgroup};
use proptest::prelude::*;

/// Reduced slopes `s/r` with `r <= max_den` and `|s/r| <= max_abs`.
pub fn slopes(max_den: i64, max_abs: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    for r in 1..=max_den {
        for s in -max_abs * r..=max_abs * r {
            if let Ok(sl) = Slope::new(s, r) {
                out.push(sl);
            }
        }
    }
    out.sort();
    out
}

/// Every bundle of rank `1..=max_rank` built from the given slopes.
pub fn all_bundles(max_rank: i64, max_den: i64, max_abs: i64) -> Vec<Bundle> {
    fn go(sl: &[Slope], budget: i64, acc: &mut Vec<(Slope, u64)>, out: &mut Vec<Bundle>) {
        if !acc.is_empty() {
            out.push(Bundle::from_summands(acc.iter().copied()));
        }
        for (i, &s) in sl.iter().enumerate() {
            let r = s.denominator();
            let mut m = 1;
            while m as i64 * r <= budget {
                acc.push((s, m));
                go(&sl[i + 1..], budget - m as i64 * r, acc, out);
                acc.pop();
                m += 1;
            }
        }
    }
    let sl = slopes(max_den, max_abs);
    let mut out = Vec::new();
    go(&sl, max_rank, &mut Vec::new(), &mut out);
    out
}

pub fn slope_strategy() -> impl Strategy<Value = Slope> {
    (1i64..=5, -12i64..=12).prop_map(|(r, s)| Slope::reduced(s, r).unwrap())
}

pub fn bundle_strategy() -> impl Strategy<Value = Bundle> {
    proptest::collection::vec((slope_strategy(), 1u64..=3), 0..5).prop_map(Bundle::from_summands)
}

/// Compositions of `n` into positive parts.
pub fn compositions(n: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn all_permutations(n: usize) -> Vec<WeylElement> {
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

/// Partition of `S_n` into `W_left \ S_n / W_right` orbits by breadth-first
/// search over left and right multiplication by the subgroups' generators.
pub fn double_coset_partition(
    n: usize,
    left: &YoungSubgroup,
    right: &YoungSubgroup,
) -> Vec<Vec<WeylElement>> {
    let mut seen: HashMap<WeylElement, usize> = HashMap::new();
    let mut cosets = Vec::new();
    for start in all_permutations(n) {
        if seen.contains_key(&start) {
            continue;
        }
        let id = cosets.len();
        let mut members = vec![start.clone()];
        seen.insert(start.clone(), id);
        let mut queue = VecDeque::from([start]);
        while let Some(w) = queue.pop_front() {
            let lefts = left.simple_reflections().into_iter().map(|i| w.mul_simple_left(i));
            let rights = right.simple_reflections().into_iter().map(|i| w.mul_simple_right(i));
            for x in lefts.chain(rights).collect::<Vec<_>>() {
                if !seen.contains_key(&x) {
                    seen.insert(x.clone(), id);
                    members.push(x.clone());
                    queue.push_back(x);
                }
            }
        }
        cosets.push(members);
    }
    cosets
}

/// All reduced words of `w`, by peeling off right descents.
pub fn all_reduced_words(w: &WeylElement) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 1..w.n() {
        if w.has_right_descent(i) {
            for mut word in all_reduced_words(&w.mul_simple_right(i)) {
                word.push(i);
                out.push(word);
            }
        }
    }
    out
}

/// `{u : u is the product of a subword of word}` — the definitional lower
/// Bruhat interval of the word's product.
pub fn subword_products(n: usize, word: &[usize]) -> BTreeSet<WeylElement> {
    let mut out = BTreeSet::new();
    for mask in 0u32..1 << word.len() {
        let sub: Vec<usize> = (0..word.len()).filter(|b| mask >> b & 1 == 1).map(|b| word[b]).collect();
        out.insert(WeylElement::from_word(n, &sub).unwrap());
    }
    out
}

/// Ehresmann's tableau criterion: `u ≤ w` iff for every `k` the sorted
/// first `k` values of `u` are entrywise at most those of `w`.
pub fn tableau_leq(u: &WeylElement, w: &WeylElement) -> bool {
    (1..=u.n()).all(|k| {
        let mut a = u.zero_based()[..k].to_vec();
        let mut b = w.zero_based()[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

/// Nonnegative integer matrices with given margins.
pub fn contingency_tables(rows: &[i64], cols: &[i64]) -> Vec<Vec<Vec<i64>>> {
    fn fill_row(cols_left: &mut Vec<i64>, want: i64, j: usize, row: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if j == cols_left.len() {
            if want == 0 {
                out.push(row.clone());
            }
            return;
        }
        for x in 0..=want.min(cols_left[j]) {
            cols_left[j] -= x;
            row.push(x);
            fill_row(cols_left, want - x, j + 1, row, out);
            row.pop();
            cols_left[j] += x;
        }
    }
    fn go(rows: &[i64], cols_left: &mut Vec<i64>, acc: &mut Vec<Vec<i64>>, out: &mut Vec<Vec<Vec<i64>>>) {
        if rows.is_empty() {
            if cols_left.iter().all(|&c| c == 0) {
                out.push(acc.clone());
            }
            return;
        }
        let mut choices = Vec::new();
        fill_row(cols_left, rows[0], 0, &mut Vec::new(), &mut choices);
        for row in choices {
            for (c, x) in cols_left.iter_mut().zip(&row) {
                *c -= x;
            }
            acc.push(row.clone());
            go(&rows[1..], cols_left, acc, out);
            acc.pop();
            for (c, x) in cols_left.iter_mut().zip(&row) {
                *c += x;
            }
        }
    }
    let mut out = Vec::new();
    go(rows, &mut cols.to_vec(), &mut Vec::new(), &mut out);
    out
}

//! Dimension formulas for moduli of `GL_n`-type bundles with parabolic
//! structure: `Bun_G`, the components `Bun_P^ν`, Laumon quasi-flag strata and
//! relative-position strata of pairs of parabolic reductions.

use std::fmt;

use num_rational::Ratio;

use crate::banach_colmez::{picard_dim, SmoothDim, TwoTermComplex};
use crate::bundle::Bundle;
use crate::error::{Error, Result};

/// Block sizes `(h_1, …, h_k)` of a standard Levi `GL_{h_1} × ⋯ × GL_{h_k}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition(Vec<i64>);

impl Composition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if let Some((index, &value)) = parts.iter().enumerate().find(|(_, &p)| p < 1) {
            return Err(Error::NonPositivePart { index, value });
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n = Σ h_i`.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn reversed(&self) -> Composition {
        Composition(self.0.iter().rev().copied().collect())
    }
}

/// Degrees `(d_1, …, d_k)` of the semistable blocks of a basic `M`-bundle.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DegreeVector(Vec<i64>);

impl DegreeVector {
    pub fn new(degrees: Vec<i64>) -> Self {
        DegreeVector(degrees)
    }

    pub fn degrees(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> DegreeVector {
        DegreeVector(self.0.iter().rev().copied().collect())
    }
}

/// Ranks and degrees of the graded pieces of a flag or quasi-flag.
/// Rank-0 pieces stand for torsion subquotients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GradedFlagData {
    pieces: Vec<(i64, i64)>,
}

impl GradedFlagData {
    pub fn new(pieces: Vec<(i64, i64)>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::EmptyComposition);
        }
        if let Some((index, &(rank, _))) = pieces.iter().enumerate().find(|(_, p)| p.0 < 0) {
            return Err(Error::NegativeRank { index, rank });
        }
        Ok(GradedFlagData { pieces })
    }

    pub fn from_blocks(h: &Composition, d: &DegreeVector) -> Result<Self> {
        check_lengths(h, d)?;
        GradedFlagData::new(h.parts().iter().copied().zip(d.degrees().iter().copied()).collect())
    }

    pub fn pieces(&self) -> &[(i64, i64)] {
        &self.pieces
    }
}

fn check_lengths(h: &Composition, d: &DegreeVector) -> Result<()> {
    if h.len() != d.len() {
        return Err(Error::LengthMismatch { expected: h.len(), found: d.len() });
    }
    Ok(())
}

/// `d_ν = Σ_{j>i} (h_i d_j − h_j d_i)`.
pub fn d_nu(h: &Composition, d: &DegreeVector) -> Result<i64> {
    check_lengths(h, d)?;
    let (h, d) = (h.parts(), d.degrees());
    let mut total = 0;
    for i in 0..h.len() {
        for j in i + 1..h.len() {
            total += h[i] * d[j] - h[j] * d[i];
        }
    }
    Ok(total)
}

/// Slope cocharacter of the block-diagonal bundle: `d_i/h_i` repeated
/// `h_i` times, in block order.
pub fn slope_cocharacter(h: &Composition, d: &DegreeVector) -> Result<Vec<Ratio<i64>>> {
    check_lengths(h, d)?;
    Ok(h.parts()
        .iter()
        .zip(d.degrees())
        .flat_map(|(&hi, &di)| std::iter::repeat_n(Ratio::new(di, hi), hi as usize))
        .collect())
}

/// Coordinates of `2ρ` for `GL_n` as a cocharacter, `Σ_{α>0} α^∨`.
///
/// Positive roots are `e_b − e_a` for `a < b`. This orientation makes the
/// pairing with the slope cocharacter equal to the explicit sum in [`d_nu`]
/// (increasing block slopes give a positive dimension). With `e_a − e_b` the
/// pairing would come out as `−d_ν`.
pub fn two_rho(n: usize) -> Vec<i64> {
    (0..n as i64).map(|c| 2 * c - n as i64 + 1).collect()
}

/// `d_ν = ⟨2ρ_G, μ⟩`, computed on the full cocharacter lattice.
///
/// Also checks that `⟨2ρ_M, μ⟩ = 0`, which holds because `μ` is constant on
/// each block. The pairing is accumulated block by block: each block's share
/// is an integer, which keeps the rational arithmetic within one denominator.
pub fn d_nu_pairing(h: &Composition, d: &DegreeVector) -> Result<i64> {
    let mu = slope_cocharacter(h, d)?;
    let pair = |rho: &[i64], mu: &[Ratio<i64>]| -> Ratio<i64> {
        rho.iter().zip(mu).map(|(&r, &m)| m * r).sum()
    };

    let rho_g = two_rho(mu.len());
    let mut total = 0;
    let mut start = 0;
    for &hi in h.parts() {
        let end = start + hi as usize;
        let levi = pair(&two_rho(hi as usize), &mu[start..end]);
        assert_eq!(levi, Ratio::from_integer(0), "<2rho_M, mu> must vanish");
        let share = pair(&rho_g[start..end], &mu[start..end]);
        assert!(share.is_integer(), "block share {share} of <2rho_G, mu> is not an integer");
        total += share.to_integer();
        start = end;
    }
    Ok(total)
}

/// Degree of the bundle of flag-preserving endomorphisms,
/// `Σ_{i<j} deg Hom(gr_j, gr_i) = Σ_{i<j} (h_j d_i − h_i d_j)`.
/// This is `−d_ν` on block data.
pub fn filtered_end_degree(gr: &GradedFlagData) -> i64 {
    let p = gr.pieces();
    let hom_degree = |from: (i64, i64), to: (i64, i64)| from.0 * to.1 - to.0 * from.1;
    let mut total = 0;
    for i in 0..p.len() {
        for j in i..p.len() {
            total += hom_degree(p[j], p[i]);
        }
    }
    total
}

/// ℓ-dimension of the component `Bun_P^ν`.
///
/// Panics if the explicit sum, the root pairing and the endomorphism degree
/// ever disagree.
pub fn bun_p_stratum_dim(h: &Composition, d: &DegreeVector) -> Result<i64> {
    let explicit = d_nu(h, d)?;
    let pairing = d_nu_pairing(h, d)?;
    let end = filtered_end_degree(&GradedFlagData::from_blocks(h, d)?);
    assert_eq!(explicit, pairing, "d_nu: explicit sum vs pairing for {h:?}, {d:?}");
    assert_eq!(explicit, -end, "d_nu: explicit sum vs filtered End for {h:?}, {d:?}");
    Ok(explicit)
}

/// ℓ-dimension of a Laumon compactification stratum `Bun_P^{L,ν}`; equal to
/// that of `Bun_P^ν`.
pub fn laumon_stratum_dim(h: &Composition, d: &DegreeVector) -> Result<i64> {
    bun_p_stratum_dim(h, d)
}

/// ℓ-dimension of `Bun_{GL_n}` at `e`: the Picard groupoid of `End(e)[1]`.
pub fn bun_g_dim(e: &Bundle) -> Result<i64> {
    if e.is_zero() {
        return Err(Error::ZeroBundle);
    }
    let adjoint = e.endomorphisms();
    assert_eq!(adjoint.degree(), 0, "End({e}) must have degree 0");
    match picard_dim(&TwoTermComplex::new(adjoint, Bundle::zero())) {
        SmoothDim::Smooth(dim) => Ok(dim),
        SmoothDim::NotSmooth => unreachable!("E^0 = 0 has no slope-0 summand"),
    }
}

/// Ranks `h_ij` and degrees `d_ij` of the graded pieces of a bifiltration,
/// with the marginals they are required to reproduce.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BifiltrationData {
    pub h: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
    pub row_ranks: Vec<i64>,
    pub col_ranks: Vec<i64>,
    pub row_degs: Vec<i64>,
    pub col_degs: Vec<i64>,
}

impl BifiltrationData {
    /// Data whose marginals are read off the matrices themselves.
    pub fn from_matrices(h: Vec<Vec<i64>>, d: Vec<Vec<i64>>) -> Self {
        let rows = |m: &[Vec<i64>]| m.iter().map(|r| r.iter().sum()).collect::<Vec<i64>>();
        let cols = |m: &[Vec<i64>]| {
            let width = m.first().map_or(0, Vec::len);
            (0..width)
                .map(|j| m.iter().map(|r| r.get(j).copied().unwrap_or(0)).sum())
                .collect::<Vec<i64>>()
        };
        BifiltrationData {
            row_ranks: rows(&h),
            col_ranks: cols(&h),
            row_degs: rows(&d),
            col_degs: cols(&d),
            h,
            d,
        }
    }

    pub fn rows(&self) -> usize {
        self.h.len()
    }

    pub fn cols(&self) -> usize {
        self.h.first().map_or(0, Vec::len)
    }

    pub fn transposed(&self) -> Self {
        BifiltrationData {
            h: transpose(&self.h),
            d: transpose(&self.d),
            row_ranks: self.col_ranks.clone(),
            col_ranks: self.row_ranks.clone(),
            row_degs: self.col_degs.clone(),
            col_degs: self.row_degs.clone(),
        }
    }
}

fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let width = m.first().map_or(0, Vec::len);
    (0..width)
        .map(|j| m.iter().map(|r| r.get(j).copied().unwrap_or(0)).collect())
        .collect()
}

/// A failed marginal constraint. Indices are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Violation {
    Shape(String),
    NegativeRank { i: usize, j: usize },
    RowRank { i: usize, expected: i64, found: i64 },
    ColRank { j: usize, expected: i64, found: i64 },
    RowDegree { i: usize, expected: i64, found: i64 },
    ColDegree { j: usize, expected: i64, found: i64 },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::Shape(_) => "shape",
            Violation::NegativeRank { .. } => "negative-rank",
            Violation::RowRank { .. } => "row-rank",
            Violation::ColRank { .. } => "col-rank",
            Violation::RowDegree { .. } => "row-degree",
            Violation::ColDegree { .. } => "col-degree",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape(msg) => write!(f, "shape violation: {msg}"),
            Violation::NegativeRank { i, j } => {
                write!(f, "negative-rank violation at (i={i}, j={j})")
            }
            Violation::RowRank { i, expected, found }
            | Violation::RowDegree { i, expected, found } => write!(
                f,
                "{} violation at i={i}: expected {expected}, found {found}",
                self.kind()
            ),
            Violation::ColRank { j, expected, found }
            | Violation::ColDegree { j, expected, found } => write!(
                f,
                "{} violation at j={j}: expected {expected}, found {found}",
                self.kind()
            ),
        }
    }
}

/// All constraint violations of `b`; empty iff both marginal systems hold.
pub fn validate_bifiltration(b: &BifiltrationData) -> Vec<Violation> {
    let (k, kp) = (b.rows(), b.cols());
    let mut out = Vec::new();
    if k == 0 || kp == 0 {
        out.push(Violation::Shape("matrices must be nonempty".into()));
        return out;
    }
    for (name, m) in [("h", &b.h), ("d", &b.d)] {
        if m.len() != k || m.iter().any(|r| r.len() != kp) {
            out.push(Violation::Shape(format!("{name} must be a {k}x{kp} matrix")));
        }
    }
    for (name, v, want) in [
        ("row_ranks", &b.row_ranks, k),
        ("col_ranks", &b.col_ranks, kp),
        ("row_degs", &b.row_degs, k),
        ("col_degs", &b.col_degs, kp),
    ] {
        if v.len() != want {
            out.push(Violation::Shape(format!("{name} must have {want} entries, found {}", v.len())));
        }
    }
    if !out.is_empty() {
        return out;
    }

    for (i, row) in b.h.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if x < 0 {
                out.push(Violation::NegativeRank { i: i + 1, j: j + 1 });
            }
        }
    }
    for i in 0..k {
        let found = b.h[i].iter().sum();
        if found != b.row_ranks[i] {
            out.push(Violation::RowRank { i: i + 1, expected: b.row_ranks[i], found });
        }
    }
    for j in 0..kp {
        let found = b.h.iter().map(|r| r[j]).sum();
        if found != b.col_ranks[j] {
            out.push(Violation::ColRank { j: j + 1, expected: b.col_ranks[j], found });
        }
    }
    for i in 0..k {
        let found = b.d[i].iter().sum();
        if found != b.row_degs[i] {
            out.push(Violation::RowDegree { i: i + 1, expected: b.row_degs[i], found });
        }
    }
    for j in 0..kp {
        let found = b.d.iter().map(|r| r[j]).sum();
        if found != b.col_degs[j] {
            out.push(Violation::ColDegree { j: j + 1, expected: b.col_degs[j], found });
        }
    }
    out
}

/// ℓ-dimension of a relative-position stratum for `GL_n`:
/// `Σ_{i≤p, j≤q} (h_ij d_pq − h_pq d_ij)`.
pub fn relpos_stratum_dim(b: &BifiltrationData) -> Result<i64> {
    let violations = validate_bifiltration(b);
    if !violations.is_empty() {
        return Err(Error::Bifiltration(violations));
    }
    let (k, kp) = (b.rows(), b.cols());
    let mut total = 0;
    for i in 0..k {
        for j in 0..kp {
            for p in i..k {
                for q in j..kp {
                    total += b.h[i][j] * b.d[p][q] - b.h[p][q] * b.d[i][j];
                }
            }
        }
    }
    Ok(total)
}

//! ℓ-dimensions and smoothness of Banach-Colmez spaces, hypercohomology of
//! two-term complexes, Picard v-groupoids and torsion Hom/Ext spaces, all
//! over a geometric point.
//!
//! Every number here is a degree of a slope truncation. The differential of
//! a two-term complex is never consulted.

use crate::bundle::{Bundle, Cut};
use crate::slope::Slope;
use crate::torsion::TorsionSheaf;

/// Smoothness verdict together with the ℓ-dimension when smooth.
///
/// Spaces with a slope-0 part contain a locally profinite factor; those are
/// reported as [`SmoothDim::NotSmooth`] with no dimension attached.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SmoothDim {
    Smooth(i64),
    NotSmooth,
}

impl SmoothDim {
    pub fn is_smooth(&self) -> bool {
        matches!(self, SmoothDim::Smooth(_))
    }

    pub fn dim(&self) -> Option<i64> {
        match *self {
            SmoothDim::Smooth(d) => Some(d),
            SmoothDim::NotSmooth => None,
        }
    }

    fn when(smooth: bool, dim: i64) -> Self {
        if smooth {
            SmoothDim::Smooth(dim)
        } else {
            SmoothDim::NotSmooth
        }
    }
}

/// `E^* = {E^{-1} → E^0}` in degrees `[-1, 0]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TwoTermComplex {
    pub e_minus1: Bundle,
    pub e_zero: Bundle,
}

impl TwoTermComplex {
    pub fn new(e_minus1: Bundle, e_zero: Bundle) -> Self {
        TwoTermComplex { e_minus1, e_zero }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ComplexDims {
    pub hminus1: SmoothDim,
    pub h0: SmoothDim,
    pub h1: SmoothDim,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct HomExtDims {
    pub hom: SmoothDim,
    pub ext: SmoothDim,
}

fn deg(e: &Bundle, cut: Cut) -> i64 {
    e.truncate(cut).degree()
}

fn has_slope_zero(e: &Bundle) -> bool {
    e.has_slope(Slope::ZERO)
}

/// `H^0(E)`: smooth of dimension `deg(E^{>0})` iff `E` has no slope-0 summand.
pub fn h0_dim(e: &Bundle) -> SmoothDim {
    SmoothDim::when(!has_slope_zero(e), deg(e, Cut::Above(Slope::ZERO)))
}

/// `H^1(E)`: always smooth of dimension `−deg(E^{<0})`.
pub fn h1_dim(e: &Bundle) -> SmoothDim {
    SmoothDim::Smooth(-deg(e, Cut::Below(Slope::ZERO)))
}

pub fn complex_h_dims(c: &TwoTermComplex) -> ComplexDims {
    let (em1, e0) = (&c.e_minus1, &c.e_zero);
    ComplexDims {
        hminus1: SmoothDim::when(!has_slope_zero(em1), deg(em1, Cut::Above(Slope::ZERO))),
        h0: SmoothDim::when(
            !has_slope_zero(e0),
            deg(e0, Cut::Above(Slope::ZERO)) - deg(em1, Cut::Below(Slope::ZERO)),
        ),
        h1: SmoothDim::Smooth(-deg(e0, Cut::Below(Slope::ZERO))),
    }
}

/// The Picard v-groupoid `[H^0(E^*)/H^{-1}(E^*)]`: smooth iff `E^0` has no
/// slope-0 summand, of dimension `deg((E^0)^{≥0}) − deg(E^{-1})`.
pub fn picard_dim(c: &TwoTermComplex) -> SmoothDim {
    SmoothDim::when(
        !has_slope_zero(&c.e_zero),
        deg(&c.e_zero, Cut::AtLeast(Slope::ZERO)) - c.e_minus1.degree(),
    )
}

/// Whether a section whose pulled-back tangent complex is `c` lies in the
/// smooth locus: every HN slope of `E^0` is strictly positive. The zero
/// bundle qualifies vacuously.
pub fn section_is_smooth_point(c: &TwoTermComplex) -> bool {
    c.e_zero.slopes().all(|s| s.is_positive())
}

pub fn torsion_h0_dim(q: &TorsionSheaf) -> SmoothDim {
    SmoothDim::Smooth(q.degree())
}

/// `Ext^1(Q, G)`, of dimension `deg(Q)·rank(G)`.
pub fn ext1_torsion_bundle_dim(q: &TorsionSheaf, g: &Bundle) -> SmoothDim {
    SmoothDim::Smooth(q.degree() * g.rank())
}

/// `Hom(Q1, Q2)` and `Ext^1(Q1, Q2)`. Per common point, every pair of cyclic
/// summands of lengths `m1`, `m2` contributes `min(m1, m2)` to both.
pub fn torsion_hom_ext_dims(q1: &TorsionSheaf, q2: &TorsionSheaf) -> HomExtDims {
    let dim: i64 = q1
        .stalks()
        .map(|(point, ls1)| {
            let ls2 = q2.lengths_at(point);
            ls1.iter()
                .flat_map(|&a| ls2.iter().map(move |&b| a.min(b) as i64))
                .sum::<i64>()
        })
        .sum();
    HomExtDims { hom: SmoothDim::Smooth(dim), ext: SmoothDim::Smooth(dim) }
}

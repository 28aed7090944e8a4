//! Vector bundles on the curve over a geometric point, stored by their split
//! Harder-Narasimhan decomposition `⊕ O(λ_i)^{m_i}` with `λ_1 > ⋯ > λ_k`.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;

use crate::slope::Slope;
use crate::error::{Error, Result};

/// One isotypic piece `O(slope)^{⊕mult}` of a bundle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Summand {
    pub slope: Slope,
    pub mult: u64,
}

impl Summand {
    pub fn rank(&self) -> i64 {
        self.mult as i64 * self.slope.denominator()
    }

    pub fn degree(&self) -> i64 {
        self.mult as i64 * self.slope.numerator()
    }
}

/// A formal direct sum of stable bundles in canonical form.
///
/// Summands have pairwise distinct slopes, multiplicity at least one, and
/// are kept in strictly decreasing slope order, which is the HN order.
/// Equality is therefore multiset equality of stable summands.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bundle {
    summands: Vec<Summand>,
}

/// Which part of the slope filtration to keep.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Cut {
    /// `E^{≥λ}`
    AtLeast(Slope),
    /// `E^{>λ}`
    Above(Slope),
    /// `E^{<λ}`
    Below(Slope),
    /// `E^{≤λ}`
    AtMost(Slope),
    /// `E^{=λ}`
    Exactly(Slope),
}

impl Cut {
    pub fn admits(&self, s: Slope) -> bool {
        match *self {
            Cut::AtLeast(l) => s >= l,
            Cut::Above(l) => s > l,
            Cut::Below(l) => s < l,
            Cut::AtMost(l) => s <= l,
            Cut::Exactly(l) => s == l,
        }
    }
}

impl Bundle {
    pub fn zero() -> Self {
        Bundle::default()
    }

    /// The stable bundle `O(slope)`.
    pub fn stable(slope: Slope) -> Self {
        Bundle::semistable(slope, 1)
    }

    /// `O(slope)^{⊕mult}`.
    pub fn semistable(slope: Slope, mult: u64) -> Self {
        Bundle::from_summands([(slope, mult)])
    }

    /// Canonicalizes an arbitrary list of pieces: repeated slopes are merged
    /// and zero multiplicities dropped.
    pub fn from_summands<I>(pieces: I) -> Self
    where
        I: IntoIterator<Item = (Slope, u64)>,
    {
        let mut acc: BTreeMap<Slope, u64> = BTreeMap::new();
        for (slope, mult) in pieces {
            if mult > 0 {
                *acc.entry(slope).or_default() += mult;
            }
        }
        let summands = acc
            .into_iter()
            .rev()
            .map(|(slope, mult)| Summand { slope, mult })
            .collect();
        Bundle { summands }
    }

    /// Summands in decreasing slope order.
    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn slopes(&self) -> impl Iterator<Item = Slope> + '_ {
        self.summands.iter().map(|s| s.slope)
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn multiplicity(&self, slope: Slope) -> u64 {
        self.summands
            .iter()
            .find(|s| s.slope == slope)
            .map_or(0, |s| s.mult)
    }

    pub fn has_slope(&self, slope: Slope) -> bool {
        self.multiplicity(slope) > 0
    }

    pub fn max_slope(&self) -> Option<Slope> {
        self.summands.first().map(|s| s.slope)
    }

    pub fn min_slope(&self) -> Option<Slope> {
        self.summands.last().map(|s| s.slope)
    }

    pub fn rank(&self) -> i64 {
        self.summands.iter().map(Summand::rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.summands.iter().map(Summand::degree).sum()
    }

    pub fn direct_sum(&self, other: &Bundle) -> Bundle {
        Bundle::from_summands(
            self.summands
                .iter()
                .chain(&other.summands)
                .map(|s| (s.slope, s.mult)),
        )
    }

    pub fn dual(&self) -> Bundle {
        Bundle {
            summands: self
                .summands
                .iter()
                .rev()
                .map(|s| Summand { slope: -s.slope, mult: s.mult })
                .collect(),
        }
    }

    pub fn truncate(&self, cut: Cut) -> Bundle {
        Bundle {
            summands: self
                .summands
                .iter()
                .filter(|s| cut.admits(s.slope))
                .copied()
                .collect(),
        }
    }

    /// Tensor with `O(n)`: each slope `s/r` becomes `(s + n r)/r`.
    pub fn twist(&self, n: i64) -> Bundle {
        Bundle {
            summands: self
                .summands
                .iter()
                .map(|s| Summand { slope: s.slope + Slope::integer(n), mult: s.mult })
                .collect(),
        }
    }

    /// `O(λ)^a ⊗ O(μ)^b = O(λ+μ)^{a b r_λ r_μ / r_{λ+μ}}`, extended bilinearly.
    pub fn tensor(&self, other: &Bundle) -> Bundle {
        Bundle::from_summands(self.summands.iter().flat_map(|a| {
            other.summands.iter().map(move |b| {
                let slope = a.slope + b.slope;
                let rank = a.rank() as u64 * b.rank() as u64;
                (slope, rank / slope.denominator() as u64)
            })
        }))
    }

    /// `E^∨ ⊗ E`.
    pub fn endomorphisms(&self) -> Bundle {
        self.dual().tensor(self)
    }

    pub fn hn_polygon(&self) -> HnPolygon {
        let mut vertices = Vec::with_capacity(self.summands.len() + 1);
        let (mut x, mut y) = (0, 0);
        vertices.push((x, y));
        for s in &self.summands {
            x += s.rank();
            y += s.degree();
            vertices.push((x, y));
        }
        HnPolygon { vertices }
    }

    /// Dominance of HN polygons with matching endpoints: `self ⪰ other`.
    ///
    /// For `GL_n` this is the order on `B(GL_n)`: `ν_self − ν_other` is a
    /// nonnegative combination of positive roots and the Kottwitz invariants
    /// (rank and degree) agree.
    pub fn dominates(&self, other: &Bundle) -> bool {
        self.rank() == other.rank()
            && self.degree() == other.degree()
            && self.hn_polygon().lies_on_or_above(&other.hn_polygon())
    }
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊕ ")?;
            }
            write!(f, "O({})", s.slope)?;
            if s.mult > 1 {
                write!(f, "^{}", s.mult)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bundle[{self}]")
    }
}

/// Concave HN polygon from `(0, 0)` to `(rank, degree)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HnPolygon {
    vertices: Vec<(i64, i64)>,
}

impl HnPolygon {
    /// Accepts a vertex list starting at the origin with strictly increasing
    /// abscissae and strictly decreasing segment slopes.
    pub fn from_vertices(vertices: Vec<(i64, i64)>) -> Result<Self> {
        if vertices.first() != Some(&(0, 0)) {
            return Err(Error::MalformedPolygon("must start at (0, 0)"));
        }
        if vertices.windows(2).any(|w| w[1].0 <= w[0].0) {
            return Err(Error::MalformedPolygon("abscissae must increase strictly"));
        }
        let slope = |w: &[(i64, i64)]| Ratio::new(w[1].1 - w[0].1, w[1].0 - w[0].0);
        let slopes: Vec<_> = vertices.windows(2).map(slope).collect();
        if slopes.windows(2).any(|s| s[1] >= s[0]) {
            return Err(Error::MalformedPolygon("segment slopes must decrease strictly"));
        }
        Ok(HnPolygon { vertices })
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn endpoint(&self) -> (i64, i64) {
        *self.vertices.last().expect("polygon always contains the origin")
    }

    /// Piecewise-linear value at `x`, or `None` outside `[0, rank]`.
    pub fn value_at(&self, x: i64) -> Option<Ratio<i64>> {
        if x == 0 {
            return Some(Ratio::from_integer(0));
        }
        self.vertices.windows(2).find_map(|seg| {
            let ((x0, y0), (x1, y1)) = (seg[0], seg[1]);
            (x0 < x && x <= x1).then(|| {
                Ratio::from_integer(y0) + Ratio::new((y1 - y0) * (x - x0), x1 - x0)
            })
        })
    }

    /// Compares at every integer abscissa; vertex sets may differ.
    pub fn lies_on_or_above(&self, other: &HnPolygon) -> bool {
        let (len, _) = self.endpoint();
        if other.endpoint().0 != len {
            return false;
        }
        // Both polygons are piecewise linear with breakpoints at integers, so
        // integer abscissae suffice. Walk both vertex lists in step.
        let (mut i, mut j) = (0, 0);
        (1..=len).all(|x| {
            while self.vertices[i + 1].0 < x {
                i += 1;
            }
            while other.vertices[j + 1].0 < x {
                j += 1;
            }
            segment_value(&self.vertices, i, x) >= segment_value(&other.vertices, j, x)
        })
    }
}

fn segment_value(v: &[(i64, i64)], i: usize, x: i64) -> Ratio<i64> {
    let ((x0, y0), (x1, y1)) = (v[i], v[i + 1]);
    Ratio::from_integer(y0) + Ratio::new((y1 - y0) * (x - x0), x1 - x0)
}

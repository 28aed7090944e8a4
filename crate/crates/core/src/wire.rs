//! JSON representations of the domain types.
//!
//! Rationals are `[numerator, denominator]` integer pairs. Decoding goes
//! through the plain `*Repr` structs, then a validating conversion, so shape
//! errors (serde) and precondition errors ([`Error`]) stay distinguishable.

use serde::{Deserialize, Serialize};

use crate::banach_colmez::{ComplexDims, HomExtDims, SmoothDim, TwoTermComplex};
use crate::bundle::{Bundle, HnPolygon};
use crate::error::{Error, Result};
use crate::moduli::{BifiltrationData, Composition, DegreeVector, Violation};
use crate::slope::Slope;
use crate::torsion::TorsionSheaf;
use crate::weyl::WeylElement;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandRepr {
    pub slope: [i64; 2],
    pub mult: u64,
}

/// `{"summands":[{"slope":[s,r],"mult":n}, …]}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleRepr {
    pub summands: Vec<SummandRepr>,
}

impl TryFrom<BundleRepr> for Bundle {
    type Error = Error;

    /// Slopes must be reduced and multiplicities positive; order and
    /// repetition are normalized.
    fn try_from(repr: BundleRepr) -> Result<Bundle> {
        let pieces = repr
            .summands
            .into_iter()
            .map(|s| {
                if s.mult == 0 {
                    return Err(Error::ZeroMultiplicity);
                }
                Ok((Slope::new(s.slope[0], s.slope[1])?, s.mult))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Bundle::from_summands(pieces))
    }
}

impl From<&Bundle> for BundleRepr {
    fn from(e: &Bundle) -> Self {
        BundleRepr {
            summands: e
                .summands()
                .iter()
                .map(|s| SummandRepr {
                    slope: [s.slope.numerator(), s.slope.denominator()],
                    mult: s.mult,
                })
                .collect(),
        }
    }
}

impl From<Bundle> for BundleRepr {
    fn from(e: Bundle) -> Self {
        BundleRepr::from(&e)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StalkRepr {
    pub point: String,
    pub lengths: Vec<u64>,
}

/// `{"stalks":[{"point":"x0","lengths":[m1,…]}, …]}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorsionRepr {
    pub stalks: Vec<StalkRepr>,
}

impl TryFrom<TorsionRepr> for TorsionSheaf {
    type Error = Error;

    fn try_from(repr: TorsionRepr) -> Result<TorsionSheaf> {
        TorsionSheaf::from_stalks(repr.stalks.into_iter().map(|s| (s.point, s.lengths)))
    }
}

impl From<&TorsionSheaf> for TorsionRepr {
    fn from(q: &TorsionSheaf) -> Self {
        TorsionRepr {
            stalks: q
                .stalks()
                .map(|(p, l)| StalkRepr { point: p.to_owned(), lengths: l.to_vec() })
                .collect(),
        }
    }
}

impl From<TorsionSheaf> for TorsionRepr {
    fn from(q: TorsionSheaf) -> Self {
        TorsionRepr::from(&q)
    }
}

/// `{"e_minus1": <Bundle>, "e_zero": <Bundle>}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexRepr {
    pub e_minus1: BundleRepr,
    pub e_zero: BundleRepr,
}

impl TryFrom<ComplexRepr> for TwoTermComplex {
    type Error = Error;

    fn try_from(repr: ComplexRepr) -> Result<TwoTermComplex> {
        Ok(TwoTermComplex::new(repr.e_minus1.try_into()?, repr.e_zero.try_into()?))
    }
}

impl From<TwoTermComplex> for ComplexRepr {
    fn from(c: TwoTermComplex) -> Self {
        ComplexRepr { e_minus1: (&c.e_minus1).into(), e_zero: (&c.e_zero).into() }
    }
}

/// `{"smooth": bool, "dim": int|null}`, in that key order.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SmoothDimRepr {
    pub smooth: bool,
    pub dim: Option<i64>,
}

impl TryFrom<SmoothDimRepr> for SmoothDim {
    type Error = String;

    fn try_from(r: SmoothDimRepr) -> std::result::Result<SmoothDim, String> {
        match (r.smooth, r.dim) {
            (true, Some(d)) => Ok(SmoothDim::Smooth(d)),
            (false, None) => Ok(SmoothDim::NotSmooth),
            _ => Err("dim must be present exactly when smooth is true".into()),
        }
    }
}

impl From<SmoothDim> for SmoothDimRepr {
    fn from(s: SmoothDim) -> Self {
        SmoothDimRepr { smooth: s.is_smooth(), dim: s.dim() }
    }
}

impl TryFrom<Vec<i64>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Composition> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<i64> {
    fn from(c: Composition) -> Self {
        c.parts().to_vec()
    }
}

impl From<Vec<i64>> for DegreeVector {
    fn from(d: Vec<i64>) -> Self {
        DegreeVector::new(d)
    }
}

impl From<DegreeVector> for Vec<i64> {
    fn from(d: DegreeVector) -> Self {
        d.degrees().to_vec()
    }
}

impl TryFrom<Vec<usize>> for WeylElement {
    type Error = Error;

    fn try_from(one_line: Vec<usize>) -> Result<WeylElement> {
        WeylElement::new(&one_line)
    }
}

impl From<WeylElement> for Vec<usize> {
    fn from(w: WeylElement) -> Self {
        w.one_line()
    }
}

/// `{"h":[[…]],"d":[[…]],"row_ranks":[…],"col_ranks":[…],"row_degs":[…],"col_degs":[…]}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BifiltrationRepr {
    pub h: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
    pub row_ranks: Vec<i64>,
    pub col_ranks: Vec<i64>,
    pub row_degs: Vec<i64>,
    pub col_degs: Vec<i64>,
}

impl From<BifiltrationRepr> for BifiltrationData {
    fn from(r: BifiltrationRepr) -> Self {
        BifiltrationData {
            h: r.h,
            d: r.d,
            row_ranks: r.row_ranks,
            col_ranks: r.col_ranks,
            row_degs: r.row_degs,
            col_degs: r.col_degs,
        }
    }
}

impl From<BifiltrationData> for BifiltrationRepr {
    fn from(b: BifiltrationData) -> Self {
        BifiltrationRepr {
            h: b.h,
            d: b.d,
            row_ranks: b.row_ranks,
            col_ranks: b.col_ranks,
            row_degs: b.row_degs,
            col_degs: b.col_degs,
        }
    }
}

impl Serialize for HnPolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<[i64; 2]> = self.vertices().iter().map(|&(x, y)| [x, y]).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HnPolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<[i64; 2]>::deserialize(d)?;
        HnPolygon::from_vertices(v.into_iter().map(|[x, y]| (x, y)).collect())
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexDimsRepr {
    h0: SmoothDimRepr,
    h1: SmoothDimRepr,
    hminus1: SmoothDimRepr,
}

impl Serialize for ComplexDims {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ComplexDimsRepr { h0: self.h0.into(), h1: self.h1.into(), hminus1: self.hminus1.into() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComplexDims {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ComplexDimsRepr::deserialize(d)?;
        let conv = |x: SmoothDimRepr| SmoothDim::try_from(x).map_err(serde::de::Error::custom);
        Ok(ComplexDims { hminus1: conv(r.hminus1)?, h0: conv(r.h0)?, h1: conv(r.h1)? })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HomExtRepr {
    ext: SmoothDimRepr,
    hom: SmoothDimRepr,
}

impl Serialize for HomExtDims {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        HomExtRepr { ext: self.ext.into(), hom: self.hom.into() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomExtDims {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = HomExtRepr::deserialize(d)?;
        let conv = |x: SmoothDimRepr| SmoothDim::try_from(x).map_err(serde::de::Error::custom);
        Ok(HomExtDims { ext: conv(r.ext)?, hom: conv(r.hom)? })
    }
}

/// `{"kind": …, "message": …}`.
impl Serialize for Violation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Violation", 2)?;
        st.serialize_field("kind", self.kind())?;
        st.serialize_field("message", &self.to_string())?;
        st.end()
    }
}

macro_rules! via_repr {
    ($ty:ty, $repr:ty) => {
        impl Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                <$repr>::from(self.clone()).serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                <$repr>::deserialize(d)?.try_into().map_err(serde::de::Error::custom)
            }
        }
    };
}

via_repr!(Bundle, BundleRepr);
via_repr!(TorsionSheaf, TorsionRepr);
via_repr!(TwoTermComplex, ComplexRepr);
via_repr!(SmoothDim, SmoothDimRepr);
via_repr!(Composition, Vec<i64>);
via_repr!(DegreeVector, Vec<i64>);
via_repr!(WeylElement, Vec<usize>);
via_repr!(BifiltrationData, BifiltrationRepr);

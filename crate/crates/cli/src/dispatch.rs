//! Request dispatch: payload decoding, input limits, and result encoding.
//!
//! Decoding happens in three stages with distinct failure codes: the payload
//! must match the command's JSON shape (code 2), stay within [`crate::limits`]
//! (code 1), and satisfy the domain preconditions (code 1).

use ffcalc_core::weyl::{bruhat_leq, coset_rep_from_matrix, matrix_from_rep, matrix_margins, min_double_coset_reps, MAX_ENUMERATION_N};
use ffcalc_core::wire::{BifiltrationRepr, BundleRepr, ComplexRepr, TorsionRepr};
use ffcalc_core::{
    bun_g_dim, bun_p_stratum_dim, complex_h_dims, ext1_torsion_bundle_dim, h0_dim, h1_dim,
    laumon_stratum_dim, picard_dim, relpos_stratum_dim, section_is_smooth_point, torsion_h0_dim,
    torsion_hom_ext_dims, BifiltrationData, Bundle, Composition, DegreeVector, Error, HnPolygon,
    SmoothDim, TorsionSheaf, TwoTermComplex, WeylElement, YoungSubgroup,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::limits;
use crate::request::{Command, ErrorBody, Request, Response};
use crate::selftest::{contingency_count, selftest};

type Outcome<T> = Result<T, ErrorBody>;

/// Evaluates one request. Never panics on well-formed JSON within limits.
pub fn run(request: &Request) -> Response {
    match dispatch(request) {
        Ok(v) => Response::success(v),
        Err(e) => Response::failure(e),
    }
}

fn dispatch(request: &Request) -> Outcome<Value> {
    let p = &request.payload;
    match request.command {
        Command::BundleInfo => {
            let e = bundle(decode(p)?, "payload")?;
            encode(BundleInfo { bundle: &e, degree: e.degree(), dual: e.dual(), polygon: e.hn_polygon(), rank: e.rank() })
        }
        Command::H0 => encode(h0_dim(&bundle(decode(p)?, "payload")?)),
        Command::H1 => encode(h1_dim(&bundle(decode(p)?, "payload")?)),
        Command::ComplexDims => encode(complex_h_dims(&complex(decode(p)?)?)),
        Command::Picard => encode(picard_dim(&complex(decode(p)?)?)),
        Command::SmoothCheck => {
            encode(SmoothPoint { smooth_point: section_is_smooth_point(&complex(decode(p)?)?) })
        }
        Command::Torsion => torsion(decode(p)?),
        Command::BunpDim => blocks(decode(p)?, bun_p_stratum_dim),
        Command::LaumonDim => blocks(decode(p)?, laumon_stratum_dim),
        Command::BungDim => {
            let e = bundle(decode(p)?, "payload")?;
            encode(Dim { dim: bun_g_dim(&e).map_err(domain("payload"))? })
        }
        Command::RelposDim => {
            let repr: BifiltrationRepr = decode(p)?;
            limits::bifiltration(&repr).map_err(limit("payload"))?;
            let dim = relpos_stratum_dim(&BifiltrationData::from(repr)).map_err(domain("payload"))?;
            encode(Dim { dim })
        }
        Command::WeylReps => weyl_reps(decode(p)?),
        Command::WeylBruhat => weyl_bruhat(decode(p)?),
        Command::WeylMatrix => weyl_matrix(decode(p)?),
        Command::PolygonDominates => {
            let q: PolygonPayload = decode(p)?;
            let (b, b2) = (bundle(q.b, "payload.b")?, bundle(q.b2, "payload.b2")?);
            encode(Dominates { dominates: b.dominates(&b2) })
        }
        Command::Selftest => {
            let q: SelftestPayload = decode(p)?;
            limits::budget(q.budget).map_err(limit("payload.budget"))?;
            encode(selftest(q.seed, q.budget))
        }
    }
}

/// Shape-checks the payload; `null` stands for `{}`.
fn decode<T: DeserializeOwned>(payload: &Value) -> Outcome<T> {
    let value = match payload {
        Value::Null => Value::Object(Map::new()),
        v => v.clone(),
    };
    serde_json::from_value(value).map_err(|e| ErrorBody::parse(e.to_string(), Some("payload".into())))
}

fn encode<T: Serialize>(v: T) -> Outcome<Value> {
    Ok(serde_json::to_value(v).expect("result types serialize infallibly"))
}

fn domain(location: &str) -> impl Fn(Error) -> ErrorBody + '_ {
    move |e| ErrorBody::domain(e.to_string(), Some(location.into()))
}

fn limit(location: &str) -> impl Fn(String) -> ErrorBody + '_ {
    move |m| ErrorBody::domain(format!("input limit exceeded: {m}"), Some(location.into()))
}

fn bundle(repr: BundleRepr, location: &str) -> Outcome<Bundle> {
    limits::bundle(&repr).map_err(limit(location))?;
    Bundle::try_from(repr).map_err(domain(location))
}

fn torsion_sheaf(repr: TorsionRepr, location: &str) -> Outcome<TorsionSheaf> {
    limits::torsion(&repr).map_err(limit(location))?;
    TorsionSheaf::try_from(repr).map_err(domain(location))
}

fn complex(repr: ComplexRepr) -> Outcome<TwoTermComplex> {
    Ok(TwoTermComplex::new(
        bundle(repr.e_minus1, "payload.e_minus1")?,
        bundle(repr.e_zero, "payload.e_zero")?,
    ))
}

fn composition(parts: Vec<i64>, location: &str) -> Outcome<Composition> {
    limits::composition(&parts).map_err(limit(location))?;
    Composition::new(parts).map_err(domain(location))
}

#[derive(Serialize)]
struct BundleInfo<'a> {
    bundle: &'a Bundle,
    degree: i64,
    dual: Bundle,
    polygon: HnPolygon,
    rank: i64,
}

#[derive(Serialize)]
struct Dim {
    dim: i64,
}

#[derive(Serialize)]
struct SmoothPoint {
    smooth_point: bool,
}

#[derive(Serialize)]
struct Dominates {
    dominates: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonPayload {
    b: BundleRepr,
    b2: BundleRepr,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SelftestPayload {
    #[serde(default)]
    seed: u64,
    #[serde(default = "default_budget")]
    budget: u64,
}

fn default_budget() -> u64 {
    1000
}

/// `q` alone gives `H^0(q)`; `q2` adds `Hom`/`Ext^1(q, q2)`; `g` adds
/// `Ext^1(q, g)`.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TorsionPayload {
    q: TorsionRepr,
    #[serde(default)]
    q2: Option<TorsionRepr>,
    #[serde(default)]
    g: Option<BundleRepr>,
}

#[derive(Serialize)]
struct TorsionResult {
    #[serde(skip_serializing_if = "Option::is_none")]
    ext: Option<SmoothDim>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ext1_bundle: Option<SmoothDim>,
    h0: SmoothDim,
    #[serde(skip_serializing_if = "Option::is_none")]
    hom: Option<SmoothDim>,
}

fn torsion(p: TorsionPayload) -> Outcome<Value> {
    let q = torsion_sheaf(p.q, "payload.q")?;
    let q2 = p.q2.map(|r| torsion_sheaf(r, "payload.q2")).transpose()?;
    let g = p.g.map(|r| bundle(r, "payload.g")).transpose()?;
    let hom_ext = q2.map(|q2| torsion_hom_ext_dims(&q, &q2));
    encode(TorsionResult {
        ext: hom_ext.map(|d| d.ext),
        ext1_bundle: g.map(|g| ext1_torsion_bundle_dim(&q, &g)),
        h0: torsion_h0_dim(&q),
        hom: hom_ext.map(|d| d.hom),
    })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BlocksPayload {
    h: Vec<i64>,
    d: Vec<i64>,
}

fn blocks(p: BlocksPayload, f: fn(&Composition, &DegreeVector) -> ffcalc_core::Result<i64>) -> Outcome<Value> {
    let h = composition(p.h, "payload.h")?;
    limits::degrees(&p.d).map_err(limit("payload.d"))?;
    let dim = f(&h, &DegreeVector::new(p.d)).map_err(domain("payload.d"))?;
    encode(Dim { dim })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeylRepsPayload {
    #[serde(default)]
    n: Option<usize>,
    left: Vec<i64>,
    right: Vec<i64>,
}

#[derive(Serialize)]
struct WeylRepsResult {
    count: usize,
    reps: Vec<WeylElement>,
}

fn weyl_reps(p: WeylRepsPayload) -> Outcome<Value> {
    let left = YoungSubgroup::new(composition(p.left, "payload.left")?);
    let right = YoungSubgroup::new(composition(p.right, "payload.right")?);
    let n = p.n.unwrap_or(left.n());
    if n <= MAX_ENUMERATION_N && left.n() == n && right.n() == n {
        let count = contingency_count(left.composition().parts(), right.composition().parts());
        limits::rep_count(count).map_err(limit("payload"))?;
    }
    let reps = min_double_coset_reps(n, &left, &right).map_err(domain("payload"))?;
    encode(WeylRepsResult { count: reps.len(), reps })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeylBruhatPayload {
    u: Vec<usize>,
    w: Vec<usize>,
}

#[derive(Serialize)]
struct WeylBruhatResult {
    u_leq_w: bool,
    w_leq_u: bool,
}

fn permutation(one_line: Vec<usize>, max: usize, location: &str) -> Outcome<WeylElement> {
    limits::permutation_len(one_line.len(), max).map_err(limit(location))?;
    WeylElement::new(&one_line).map_err(domain(location))
}

fn weyl_bruhat(p: WeylBruhatPayload) -> Outcome<Value> {
    let u = permutation(p.u, limits::MAX_BRUHAT_N, "payload.u")?;
    let w = permutation(p.w, limits::MAX_BRUHAT_N, "payload.w")?;
    encode(WeylBruhatResult {
        u_leq_w: bruhat_leq(&u, &w).map_err(domain("payload"))?,
        w_leq_u: bruhat_leq(&w, &u).map_err(domain("payload"))?,
    })
}

/// `{"h": matrix}` gives the representative; `{"w", "left", "right"}` gives
/// the rank matrix.
#[derive(Deserialize)]
#[serde(untagged)]
enum WeylMatrixPayload {
    FromMatrix(MatrixOnly),
    FromRep(RepWithSubgroups),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixOnly {
    h: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepWithSubgroups {
    w: Vec<usize>,
    left: Vec<i64>,
    right: Vec<i64>,
}

#[derive(Serialize)]
struct RepResult {
    left: Composition,
    rep: WeylElement,
    right: Composition,
}

#[derive(Serialize)]
struct MatrixResult {
    matrix: Vec<Vec<i64>>,
}

fn weyl_matrix(p: WeylMatrixPayload) -> Outcome<Value> {
    match p {
        WeylMatrixPayload::FromMatrix(MatrixOnly { h }) => {
            limits::rank_matrix(&h).map_err(limit("payload.h"))?;
            let (left, right) = matrix_margins(&h).map_err(domain("payload.h"))?;
            let rep = coset_rep_from_matrix(&h).map_err(domain("payload.h"))?;
            encode(RepResult { left, rep, right })
        }
        WeylMatrixPayload::FromRep(RepWithSubgroups { w, left, right }) => {
            let w = permutation(w, limits::MAX_MATRIX_N as usize, "payload.w")?;
            let left = YoungSubgroup::new(composition(left, "payload.left")?);
            let right = YoungSubgroup::new(composition(right, "payload.right")?);
            let matrix = matrix_from_rep(&w, &left, &right).map_err(domain("payload"))?;
            encode(MatrixResult { matrix })
        }
    }
}

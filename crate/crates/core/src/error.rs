use thiserror::Error;

use crate::moduli::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Precondition violations reported by the computations in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("slope {numerator}/{denominator} is not a reduced fraction with positive denominator")]
    InvalidSlope { numerator: i64, denominator: i64 },
    #[error("multiplicity must be at least 1")]
    ZeroMultiplicity,
    #[error("torsion length at point {point:?} must be at least 1")]
    ZeroLength { point: String },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("composition must be nonempty")]
    EmptyComposition,
    #[error("composition part {index} is {value}, parts must be at least 1")]
    NonPositivePart { index: usize, value: i64 },
    #[error("graded piece {index} has negative rank {rank}")]
    NegativeRank { index: usize, rank: i64 },
    #[error("the zero bundle does not define a GL_n-bundle")]
    ZeroBundle,
    #[error("bifiltration data violates {} constraint(s): {}", .0.len(), display_list(.0))]
    Bifiltration(Vec<Violation>),
    #[error("matrix entry ({row}, {col}) is negative")]
    NegativeEntry { row: usize, col: usize },
    #[error("matrix must be nonempty and rectangular")]
    MalformedMatrix,
    #[error("matrix {axis} {index} sums to zero")]
    EmptyLine { axis: &'static str, index: usize },
    #[error("not a permutation of 1..={n}")]
    NotAPermutation { n: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("not an HN polygon: {0}")]
    MalformedPolygon(&'static str),
    #[error("enumeration of S_{n} exceeds the bound n <= {max}")]
    EnumerationBound { n: usize, max: usize },
}

fn display_list(vs: &[Violation]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

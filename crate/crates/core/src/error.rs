use thiserror::Error;

use crate::graph::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Broad classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed text input.
    Parse,
    /// A value violates a structural invariant of its type.
    Validation,
    /// Well-formed input on which a mathematical precondition fails.
    Precondition,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: i64, n: usize },
    #[error("subsets have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("ground sets differ ({left} vs {right})")]
    GroundSetMismatch { left: usize, right: usize },
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("window has length {found}, expected {expected}")]
    WindowLength { expected: usize, found: usize },
    #[error("f({position}) = {value} violates {position} <= f(i) <= {position} + n")]
    Unbounded { position: usize, value: i64 },
    #[error("residues of the window collide at position {position}")]
    NotBijective { position: usize },
    #[error("sum of f(i) - i is {sum}, not divisible by n = {n}")]
    NonIntegralType { sum: i64, n: usize },
    #[error("malformed Grassmann necklace at position {position}")]
    MalformedNecklace { position: usize },
    #[error("malformed dual Grassmann necklace at position {position}")]
    MalformedDualNecklace { position: usize },
    #[error("empty collection of subsets")]
    EmptyCollection,
    #[error("ground set of size {0} is odd; reflection needs an even boundary")]
    OddGroundSet(usize),
    #[error("object has type ({k}, {n}); reflection symmetry needs type (n/2, n)")]
    NotHalfType { k: usize, n: usize },
    #[error("no bridge between positions {left} and {right}")]
    NoBridge { left: usize, right: usize },
    #[error("{0} is not symmetric")]
    NotSymmetric(&'static str),

    #[error("invalid plabic graph: {}", format_violations(.0))]
    InvalidGraph(Vec<Violation>),
    #[error("graph is not reduced: {0}")]
    NotReduced(String),
    #[error("vertex {0} is not an interior vertex")]
    NotInterior(usize),
    #[error("graph carries no symmetry involution")]
    MissingSymmetry,
    #[error("graph admits no almost perfect matching")]
    NoMatching,
    #[error("not an almost perfect matching: {0}")]
    InvalidMatching(String),
    #[error("weight must be positive, got {0}")]
    NonPositiveWeight(String),
    #[error("expected {expected} edge weights, got {found}")]
    WeightCount { expected: usize, found: usize },
    #[error("invalid gauge forest: {0}")]
    InvalidForest(String),

    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("coordinates violate the Plücker relations")]
    PluckerRelations,
    #[error("point is not totally nonnegative")]
    NotTotallyNonnegative,
    #[error("bridge ratio {0} is not positive")]
    NonPositiveRatio(String),
    #[error("vanishing denominator in bridge ratio at ({left}, {right})")]
    ZeroDenominator { left: usize, right: usize },
    #[error("mirror bridge ratios differ: {0}")]
    RatioMismatch(String),
    #[error("invalid bridge script: {0}")]
    InvalidScript(String),
}

fn format_violations(violations: &[Violation]) -> String {
    violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        use Error::*;
        match self {
            Parse(_) => ErrorClass::Parse,
            IndexOutOfRange { .. }
            | SizeMismatch { .. }
            | GroundSetMismatch { .. }
            | InvalidSubset(_)
            | WindowLength { .. }
            | Unbounded { .. }
            | NotBijective { .. }
            | NonIntegralType { .. }
            | MalformedNecklace { .. }
            | MalformedDualNecklace { .. }
            | EmptyCollection
            | InvalidGraph(_)
            | NonPositiveWeight(_)
            | WeightCount { .. }
            | Dimension(_)
            | InvalidScript(_) => ErrorClass::Validation,
            _ => ErrorClass::Precondition,
        }
    }

    /// Short stable identifier, suitable for machine-readable diagnostics.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            Parse(_) => "parse",
            IndexOutOfRange { .. } => "index-out-of-range",
            SizeMismatch { .. } => "size-mismatch",
            GroundSetMismatch { .. } => "ground-set-mismatch",
            InvalidSubset(_) => "invalid-subset",
            WindowLength { .. } => "window-length",
            Unbounded { .. } => "unbounded",
            NotBijective { .. } => "not-bijective",
            NonIntegralType { .. } => "non-integral-type",
            MalformedNecklace { .. } => "malformed-necklace",
            MalformedDualNecklace { .. } => "malformed-dual-necklace",
            EmptyCollection => "empty-collection",
            OddGroundSet(_) => "odd-ground-set",
            NotHalfType { .. } => "not-half-type",
            NoBridge { .. } => "no-bridge",
            NotSymmetric(_) => "not-symmetric",
            InvalidGraph(_) => "invalid-graph",
            NotReduced(_) => "not-reduced",
            NotInterior(_) => "not-interior",
            MissingSymmetry => "missing-symmetry",
            NoMatching => "no-matching",
            InvalidMatching(_) => "invalid-matching",
            NonPositiveWeight(_) => "non-positive-weight",
            WeightCount { .. } => "weight-count",
            InvalidForest(_) => "invalid-forest",
            Dimension(_) => "dimension",
            RankDeficient => "rank-deficient",
            PluckerRelations => "plucker-relations",
            NotTotallyNonnegative => "not-tnn",
            NonPositiveRatio(_) => "non-positive-ratio",
            ZeroDenominator { .. } => "zero-denominator",
            RatioMismatch(_) => "ratio-mismatch",
            InvalidScript(_) => "invalid-script",
        }
    }
}

//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable spaces do not match: {0} vs {1}")]
    VarSpaceMismatch(String, String),
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("derivation direction {0} is invalid for a {1} ring")]
    InvalidDirection(String, String),
    #[error("weight vector has length {got}, expected {expected}")]
    WeightLength { got: usize, expected: usize },
    #[error("generators are not a verified Groebner basis (pair ({0}, {1}) fails)")]
    NotAGroebnerBasis(usize, usize),
    #[error("a Groebner verification report is required before taking the initial ideal")]
    MissingVerification,
    #[error("polytope is unbounded in coordinate {0}")]
    Unbounded(usize),
    #[error("counting requires nonnegative row coefficients (row {0})")]
    NegativeRow(usize),
    #[error("interpolated polynomial disagrees with the lattice count at t = {0}")]
    InterpolationMismatch(u32),
    #[error("dimension {0} exceeds the vertex-enumeration cap of {1}")]
    DimensionCap(usize, usize),
    #[error("graph with {0} vertices exceeds the enumeration cap of {1}")]
    GraphCap(usize, usize),
    #[error("grid with {0} points exceeds the enumeration cap of {1}")]
    GridCap(usize, usize),
    #[error("degree cap {0} exceeded during Buchberger completion")]
    DegreeCapExceeded(u32),
    #[error("height vector is not generic: {0}")]
    NonGenericHeights(String),
    #[error("not a valid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("triangulation is not regular")]
    IrregularTriangulation,
    #[error("n = 0 has no bounded chain polytope; use the Groebner route")]
    ChainPolytopeEmpty,
    #[error("parse error: {0}")]
    Parse(String),
}

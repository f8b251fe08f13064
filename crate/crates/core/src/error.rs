use num_bigint::BigUint;
use thiserror::Error;

use crate::roots::FamilyKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("edge list contains no edges")]
    EmptyGraph,

    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("explicit construction needs {predicted} vertices, cap is {cap}")]
    CapExceeded { predicted: BigUint, cap: u64 },

    #[error("family {kind:?} does not apply to n = {n}")]
    ParityMismatch { kind: FamilyKind, n: u32 },

    #[error("root isolation found {found} sign changes, expected {expected}")]
    RootIsolation { found: usize, expected: usize },

    #[error("polynomial has a zero root")]
    ZeroRoot,

    #[error("inconsistent spectrum: {0}")]
    InconsistentSpectrum(String),

    #[error("multiplicity ledger totals {total}, expected {expected}")]
    LedgerMismatch { total: BigUint, expected: BigUint },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("mu = {mu} is a special-family root (a_(n-1)(mu) = {value:e})")]
    DegenerateLift { mu: f64, value: f64 },

    #[error("{0}")]
    Arithmetic(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

use std::fmt;

use thiserror::Error;

use crate::matroid::ElementId;

/// A row or column of a grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

/// Coarse classification of an [`Error`], used to pick process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Bad input: unknown ids, malformed grids, parse failures.
    Input,
    /// A caller broke an operation's precondition.
    Contract,
    /// An element is outside the closure an operation needs.
    Domain,
    /// An instance was parsed but is not a matroidal Latin square.
    Validation,
    /// A proven bound was contradicted, or an exchange produced a dependent set.
    Anomaly,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u64),
    #[error("element {id} does not exist (ground set has {len} elements)")]
    UnknownElement { id: ElementId, len: usize },
    #[error("element {index} has {got} coordinates, expected {dim}")]
    DimensionMismatch {
        index: usize,
        got: usize,
        dim: usize,
    },
    #[error("element {index} has coordinate {value} outside [0, {p})")]
    ResidueOutOfRange { index: usize, value: u32, p: u32 },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("the supplied set is dependent")]
    DependentSet,
    #[error("element {0} is not spanned by the supplied set")]
    NotSpanned(ElementId),
    #[error("malformed grid: {0}")]
    MalformedGrid(String),
    #[error("not a Latin square: {line} {index} {reason}")]
    NotLatin {
        line: Line,
        index: usize,
        reason: String,
    },
    #[error("not a matroidal Latin square: {0}")]
    NotAnMls(String),
    #[error("basis matrix is singular mod {p}")]
    SingularBasis { p: u32 },
    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),
    #[error("transversal already has size {0}; nothing to augment")]
    NothingToAugment(usize),
    #[error("exchange produced a dependent transversal: {0}")]
    ExchangeAnomaly(String),
    #[error(
        "degree {n}: exhaustive search proves the optimum is {optimum}, below the bound {target}"
    )]
    TheoremViolation {
        n: usize,
        optimum: usize,
        target: usize,
    },
    #[error("set family precondition violated: {0}")]
    Lemma1Precondition(String),
    #[error("instance file: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            NotPrime(_)
            | UnknownElement { .. }
            | DimensionMismatch { .. }
            | ResidueOutOfRange { .. }
            | ZeroDimension
            | MalformedGrid(_)
            | NotLatin { .. }
            | SingularBasis { .. }
            | Format(_)
            | Json(_)
            | Io(_) => ErrorKind::Input,
            DependentSet | InvalidTransversal(_) | NothingToAugment(_) | Lemma1Precondition(_) => {
                ErrorKind::Contract
            }
            NotSpanned(_) => ErrorKind::Domain,
            NotAnMls(_) => ErrorKind::Validation,
            ExchangeAnomaly(_) | TheoremViolation { .. } => ErrorKind::Anomaly,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

/// Errors reported by the fallible operations of this crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("residue {r} is outside 1..{p}")]
    ResidueRange { r: u32, p: u32 },
    #[error("{what} {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u32,
        cap: u32,
    },
    #[error("word {0:?} is not canonical (must be empty or start with 1)")]
    NotCanonical(String),
    #[error("string {0:?} is not a binary word")]
    NotBinary(String),
    #[error("pair ({u}, {v}) does not satisfy the star condition mod {p} residue {r}")]
    NotStar {
        u: String,
        v: String,
        p: u32,
        r: u32,
    },
    #[error("segment words require |u| >= |v| >= 1, got ({u}, {v})")]
    BadSegmentWords { u: String, v: String },
    #[error("completion precondition failed: {0}")]
    BadCompletion(String),
    #[error("operand has no pieces")]
    EmptyPieces,
    #[error("grid exponent {0} exceeds cap 16")]
    GridExpRange(u32),
    #[error("vertical doubling leaves the unit square")]
    HeightRange,
    #[error("zoom window is empty")]
    EmptyWindow,
    #[error("malformed bitmap: {0}")]
    BadBitmap(String),
    #[error("empty range: {lo} > {hi}")]
    EmptyRange { lo: u32, hi: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

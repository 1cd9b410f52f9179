use std::path::PathBuf;

use thiserror::Error;

use crate::units::Dimension;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot convert {from:?} quantity to {to:?}")]
    IncompatibleDimension { from: Dimension, to: Dimension },

    #[error("invalid rotor: {0}")]
    InvalidSystem(String),

    #[error("angular momentum quantum number {0} exceeds the supported maximum {max}", max = crate::energy::L_MAX)]
    QuantumNumberTooLarge(u64),

    #[error("homonuclear model requested for unequal masses (relative difference {0:e})")]
    NotHomonuclear(f64),

    #[error("model {0} is not defined for this operation")]
    UnsupportedModel(&'static str),

    #[error("observed wavenumber {observed} cm^-1 lies outside the reachable range [{low}, {high}] cm^-1 for bond lengths in [{a_min:e}, {a_max:e}] m")]
    BracketFailure {
        observed: f64,
        low: f64,
        high: f64,
        a_min: f64,
        a_max: f64,
    },

    #[error("no spectral lines supplied")]
    NoLines,

    #[error("duplicate quantum number l = {0} in line list")]
    DuplicateLine(u64),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: u64,
        msg: String,
    },

    #[error("duplicate symbol `{symbol}` at line {line}")]
    DuplicateSymbol { symbol: String, line: u64 },

    #[error("non-positive value for `{symbol}` at line {line}")]
    NonPositive { symbol: String, line: u64 },

    #[error("unknown isotope `{0}`")]
    UnknownSymbol(String),

    #[error("unknown molecule preset `{0}`")]
    UnknownPreset(String),

    #[error("system `{0}` needs a bond length (iso1:iso2:angstrom or PRESET)")]
    MissingBondLength(String),

    #[error("malformed system `{0}`")]
    MalformedSystem(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

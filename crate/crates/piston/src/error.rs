//! Error types shared across the library.

use thiserror::Error;

/// Errors produced by the physics layers of the library.
#[derive(Debug, Error)]
pub enum PistonError {
    /// The scattering denominator D(k) vanished (evaluation at a bound-state
    /// momentum or a degenerate wall).
    #[error("degenerate wall: |D(k)| = {magnitude:e} below threshold at k = {k}")]
    DegenerateWall { k: String, magnitude: f64 },

    /// The secular function changed sign on the imaginary axis, signalling a
    /// negative mode / bound state, i.e. an inadmissible configuration.
    #[error("secular function changes sign on the imaginary axis near z = {z} (inadmissible configuration)")]
    ZeroCrossing { z: f64 },

    /// The k^2 coefficient of the secular function vanishes; the normalization
    /// that removes the spurious double zero at the origin fails.
    #[error("longitudinal zero mode: secular k^2 coefficient {coefficient:e} is consistent with zero")]
    ZeroMode { coefficient: f64 },

    /// `s` lies outside the strip of validity of the direct zeta representation.
    #[error("Re(s) = {re_s} outside the strip (1/2, 1)")]
    OutOfStrip { re_s: f64 },

    /// A requested meromorphic datum of the transverse zeta function was not supplied.
    #[error("missing transverse zeta data at half-integer index {index}")]
    MissingZetaData { index: usize },

    /// Iterative refinement (Bessel zero polishing) failed to converge.
    #[error("root refinement failed to converge: {context}")]
    ConvergenceFailure { context: String },

    /// The requested accuracy could not be certified.
    #[error("tolerance not met: achieved {achieved:e}, requested {requested:e}")]
    ToleranceNotMet { achieved: f64, requested: f64 },

    /// The piston configuration admits wall bound states and was not opened in
    /// diagnostic mode.
    #[error("inadmissible configuration: {count} bound state(s) on the wall")]
    Inadmissible { count: usize },

    /// A spectrum file failed to parse.
    #[error("spectrum parse error at line {line}: {message}")]
    ParseError { line: usize, message: String },

    /// A spectrum file was not sorted by nondecreasing lambda.
    #[error("spectrum ordering error at line {line}: lambda decreases")]
    OrderingError { line: usize },

    /// A constructor argument violated a type invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, PistonError>;

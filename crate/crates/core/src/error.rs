use std::io;
use thiserror::Error;

/// Error type shared by every module in this crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Radial degree must be non-negative.
    #[error("invalid radial degree: n = {n} is negative")]
    NegativeDegree { n: i64 },
    /// Azimuthal frequency must satisfy |m| <= n.
    #[error("azimuthal frequency out of bound: |m| = {} exceeds n = {n}", m.unsigned_abs())]
    FrequencyBound { n: i64, m: i64 },
    /// n - m must be even.
    #[error("parity violation: n - m = {} is odd (n = {n}, m = {m})", n - m)]
    Parity { n: i64, m: i64 },
    /// Noll indices start at 1.
    #[error("invalid Noll index: j = {j} is outside [1, ..)")]
    NollRange { j: u64 },
    /// Binomial coefficients C(a, b) require b <= a.
    #[error("binomial domain violation: b = {b} exceeds a = {a}")]
    BinomialDomain { a: u64, b: u64 },
    /// A value no longer fits the backing integer type.
    #[error("integer overflow while computing {context}")]
    Overflow { context: &'static str },
    /// Radial coordinate must lie in the closed unit interval.
    #[error("evaluation point out of domain: rho = {rho} is not in [0, 1]")]
    RhoDomain { rho: f64 },
    /// Quadrature node counts below the supported minimum.
    #[error("invalid quadrature configuration: {reason}")]
    QuadratureConfig { reason: &'static str },
    /// Empty tokens would make emitted expressions unreadable.
    #[error("invalid syntax profile: {reason}")]
    SyntaxProfile { reason: &'static str },
    /// Table bounds or column labels are inconsistent.
    #[error("invalid table specification: {reason}")]
    TableSpec { reason: String },
    /// Failure writing to the output sink.
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

//! Exact integer data for a Zernike polynomial: radial coefficients, the
//! normalization coefficient and the angular factor.
//!
//! The radial polynomial is
//!
//! ```text
//! R_n^|m|(rho) = sum_{s=0}^{k} (-1)^s C(k, s) C(n-s, k) rho^(n-2s),   k = (n - |m|) / 2
//! ```
//!
//! and every coefficient is computed in exact integer arithmetic (`i128`
//! with checked multiplication, so overflow is reported instead of wrapping).
//! An independent route through big-integer factorials backs the binomial
//! form and exists purely for cross-checking.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::indexing::{self, BwIndex, NollIndex};

/// Real-valued binomial coefficient `C(alpha, i)` for real upper argument,
/// as the product `prod_{t=0}^{i-1} (alpha - t) / (i - t)`.
///
/// Factors are applied in that interleaved multiply/divide order, which keeps
/// intermediates near the result's magnitude but is not exact; use
/// [`binom_exact`] whenever both arguments are integers.
pub fn binom_real(alpha: f64, i: u64) -> f64 {
    let mut acc = 1.0;
    for t in 0..i {
        acc = acc * (alpha - t as f64) / ((i - t) as f64);
    }
    acc
}

/// Integer binomial coefficient `C(a, b)` by the multiplicative recurrence
/// `C(a, t+1) = C(a, t) (a - t) / (t + 1)`, in which every division is exact.
///
/// Overflow of the `i128` accumulator is reported as an error.
pub fn binom_exact(a: u64, b: u64) -> Result<i128> {
    if b > a {
        return Err(Error::BinomialDomain { a, b });
    }
    let b = b.min(a - b);
    let mut acc: i128 = 1;
    for t in 0..b {
        acc = acc.checked_mul((a - t) as i128).ok_or(Error::Overflow {
            context: "binomial coefficient",
        })?;
        // acc held C(a, t) (t+1 | C(a,t)(a-t)), so this division is exact
        acc /= (t + 1) as i128;
    }
    Ok(acc)
}

/// Radial polynomial as exact coefficient and power sequences.
///
/// `coeffs[s]` belongs to `powers[s]`; powers descend from `n` to `|m|` in
/// steps of two, signs alternate starting positive, and the coefficients sum
/// to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialPoly {
    n: u64,
    m_abs: u64,
    coeffs: Vec<i128>,
    powers: Vec<u64>,
}

impl RadialPoly {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m_abs(&self) -> u64 {
        self.m_abs
    }

    /// Highest term index: the polynomial has `k + 1` terms.
    pub fn k(&self) -> u64 {
        self.coeffs.len() as u64 - 1
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn powers(&self) -> &[u64] {
        &self.powers
    }
}

/// Radial coefficients of `R_n^|m|` through the binomial product route.
pub fn radial_coefficients(idx: BwIndex) -> Result<RadialPoly> {
    let n = idx.n();
    let k = indexing::nm_to_k(idx);
    let mut coeffs = Vec::with_capacity(k as usize + 1);
    let mut powers = Vec::with_capacity(k as usize + 1);
    let mut sign: i128 = 1;
    for s in 0..=k {
        let c = binom_exact(k, s)?
            .checked_mul(binom_exact(n - s, k)?)
            .ok_or(Error::Overflow {
                context: "radial coefficient",
            })?;
        coeffs.push(sign * c);
        powers.push(n - 2 * s);
        sign = -sign;
    }
    Ok(RadialPoly {
        n,
        m_abs: idx.m_abs(),
        coeffs,
        powers,
    })
}

/// Radial coefficients through the factorial route,
/// `(-1)^s (n-s)! / (s! ((n+|m|)/2 - s)! ((n-|m|)/2 - s)!)`, carried out in
/// arbitrary precision. Exists as an independent cross-check for
/// [`radial_coefficients`]; the two must agree for every valid index.
pub fn radial_coefficients_oracle(idx: BwIndex) -> Result<RadialPoly> {
    let n = idx.n() as usize;
    let m_abs = idx.m_abs() as usize;
    let k = (n - m_abs) / 2;
    let half_sum = (n + m_abs) / 2;
    let mut fact = Vec::with_capacity(n + 1);
    fact.push(BigInt::from(1u32));
    for i in 1..=n {
        let next = &fact[i - 1] * i;
        fact.push(next);
    }
    let mut coeffs = Vec::with_capacity(k + 1);
    let mut powers = Vec::with_capacity(k + 1);
    for s in 0..=k {
        let denom = &fact[s] * &fact[half_sum - s] * &fact[k - s];
        let quotient = &fact[n - s] / denom;
        let magnitude = i128::try_from(quotient).map_err(|_| Error::Overflow {
            context: "radial coefficient oracle",
        })?;
        coeffs.push(if s % 2 == 0 { magnitude } else { -magnitude });
        powers.push((n - 2 * s) as u64);
    }
    Ok(RadialPoly {
        n: idx.n(),
        m_abs: idx.m_abs(),
        coeffs,
        powers,
    })
}

/// Normalization coefficient `sqrt(radicand)` of a polynomial, kept as the
/// exact radicand: `n + 1` for `m = 0`, otherwise `2(n + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Normalization {
    radicand: u64,
}

impl Normalization {
    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn value(&self) -> f64 {
        (self.radicand as f64).sqrt()
    }
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({})", self.radicand)
    }
}

/// Normalization radicand of a double index.
pub fn normalization_radicand(idx: BwIndex) -> Normalization {
    let radicand = if idx.m() == 0 {
        idx.n() + 1
    } else {
        2 * (idx.n() + 1)
    };
    Normalization { radicand }
}

/// Shape of the angular factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AngularKind {
    Unity,
    Cosine,
    Sine,
}

/// Angular factor: `1`, `cos(m theta)` or `sin(m theta)` with `m = |m|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AngularFactor {
    kind: AngularKind,
    frequency: u64,
}

impl AngularFactor {
    pub fn kind(&self) -> AngularKind {
        self.kind
    }

    pub fn frequency(&self) -> u64 {
        self.frequency
    }
}

/// Angular factor of a double index: unity for `m = 0`, otherwise cosine for
/// even Noll index and sine for odd.
pub fn angular_factor(idx: BwIndex) -> AngularFactor {
    if idx.m() == 0 {
        return AngularFactor {
            kind: AngularKind::Unity,
            frequency: 0,
        };
    }
    let j = indexing::nm_to_j(idx);
    let kind = if j.get() % 2 == 0 {
        AngularKind::Cosine
    } else {
        AngularKind::Sine
    };
    AngularFactor {
        kind,
        frequency: idx.m_abs(),
    }
}

/// Everything needed to print or evaluate one polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ZernikeSpec {
    j: NollIndex,
    idx: BwIndex,
    norm: Normalization,
    radial: RadialPoly,
    angular: AngularFactor,
}

impl ZernikeSpec {
    pub fn j(&self) -> NollIndex {
        self.j
    }

    pub fn idx(&self) -> BwIndex {
        self.idx
    }

    pub fn norm(&self) -> Normalization {
        self.norm
    }

    pub fn radial(&self) -> &RadialPoly {
        &self.radial
    }

    pub fn angular(&self) -> AngularFactor {
        self.angular
    }

    /// Flat serialization view; integer coefficients are rendered exactly.
    pub fn record(&self) -> CoefficientRecord {
        CoefficientRecord {
            j: self.j.get(),
            n: self.idx.n(),
            m: self.idx.m(),
            radicand: self.norm.radicand(),
            coeffs: self.radial.coeffs.clone(),
            powers: self.radial.powers.clone(),
            angular_kind: self.angular.kind,
            angular_frequency: self.angular.frequency,
        }
    }
}

/// Serializable record of one polynomial's exact data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientRecord {
    pub j: u64,
    pub n: u64,
    pub m: i64,
    pub radicand: u64,
    pub coeffs: Vec<i128>,
    pub powers: Vec<u64>,
    pub angular_kind: AngularKind,
    pub angular_frequency: u64,
}

/// Assembles the full description of the polynomial with Noll index `j`.
pub fn zernike_spec(j: NollIndex) -> Result<ZernikeSpec> {
    let idx = indexing::j_to_nm(j);
    Ok(ZernikeSpec {
        j,
        idx,
        norm: normalization_radicand(idx),
        radial: radial_coefficients(idx)?,
        angular: angular_factor(idx),
    })
}

//! Index schemes for Zernike circular polynomials and conversions between them.
//!
//! A polynomial is identified either by the double index `(n, m)` with radial
//! degree `n >= 0`, signed azimuthal frequency `|m| <= n` and `n - m` even, or
//! by a single index. Two single-index schemes are supported: the Noll index
//! `j >= 1` and the ANSI index `>= 0`. The start of the Noll sequence:
//!
//! | j | 1 | 2 | 3 | 4 | 5 | 6 | 7 | 8 | 9 | 10 |
//! |---|---|---|---|---|---|---|---|---|---|----|
//! | n | 0 | 1 | 1 | 2 | 2 | 2 | 3 | 3 | 3 | 3  |
//! | m | 0 | -1| 1 | 0 | -2| 2 | -1| 1 | -3| 3  |
//!
//! Radial degree `n` groups rows `T(n) < j <= T(n) + n + 1` where
//! `T(n) = n(n+1)/2`; within a group the frequencies interleave so that the
//! sign of `m` alternates with the parity of `j`. All conversions here are
//! pure integer arithmetic, so they are exact over the whole `u64` range.

use std::fmt;

use crate::error::{Error, Result};

/// Double index: radial degree `n` and signed azimuthal frequency `m`.
///
/// Only validated pairs can exist: `|m| <= n` and `n - m` even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BwIndex {
    n: u64,
    m: i64,
}

impl BwIndex {
    /// Validates and builds a double index; see [`validate_nm`].
    pub fn new(n: i64, m: i64) -> Result<Self> {
        validate_nm(n, m)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn m_abs(&self) -> u64 {
        self.m.unsigned_abs()
    }
}

impl fmt::Display for BwIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.m)
    }
}

/// Noll single index, at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NollIndex(u64);

impl NollIndex {
    pub fn new(j: u64) -> Result<Self> {
        if j == 0 {
            return Err(Error::NollRange { j });
        }
        Ok(NollIndex(j))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for NollIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// ANSI single index, zero-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AnsiIndex(u64);

impl AnsiIndex {
    pub fn new(value: u64) -> Self {
        AnsiIndex(value)
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for AnsiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Position of a polynomial inside its degree group, `1 <= r <= n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SeqPosition(u64);

impl SeqPosition {
    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for SeqPosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Checks degree, frequency bound and parity for a double index.
pub fn validate_nm(n: i64, m: i64) -> Result<BwIndex> {
    if n < 0 {
        return Err(Error::NegativeDegree { n });
    }
    if m.unsigned_abs() > n.unsigned_abs() {
        return Err(Error::FrequencyBound { n, m });
    }
    if (n - m) % 2 != 0 {
        return Err(Error::Parity { n, m });
    }
    Ok(BwIndex { n: n as u64, m })
}

/// Number of radial terms minus one: `k = (n - |m|) / 2`.
pub fn nm_to_k(idx: BwIndex) -> u64 {
    (idx.n - idx.m_abs()) / 2
}

fn triangular(n: u64) -> u128 {
    n as u128 * (n as u128 + 1) / 2
}

/// Discrete unit step: 1 for `m >= 0`, 0 for `m < 0`.
fn unit_step(m: i64) -> u64 {
    (m >= 0) as u64
}

/// Noll index of a double index: `j = T(n) + |m| + step(m)`.
///
/// Panics if the result exceeds `u64`, which needs `n` above six billion.
pub fn nm_to_j(idx: BwIndex) -> NollIndex {
    let j = triangular(idx.n) + idx.m_abs() as u128 + unit_step(idx.m) as u128;
    NollIndex(u64::try_from(j).expect("Noll index exceeds u64"))
}

/// Position of the index inside its degree group: `r = |m| + step(m)`.
pub fn seq_position(idx: BwIndex) -> SeqPosition {
    SeqPosition(idx.m_abs() + unit_step(idx.m))
}

/// Smallest degree n whose group reaches j, i.e. the n with
/// `T(n) < j <= T(n+1)`. Integer square root plus correction, never floats.
fn radial_degree(j: u64) -> u64 {
    let s = (8 * j as u128 + 1).isqrt() as u64;
    let mut n = s.saturating_sub(3) / 2;
    while triangular(n + 1) < j as u128 {
        n += 1;
    }
    while n > 0 && triangular(n) >= j as u128 {
        n -= 1;
    }
    n
}

/// Double index of a Noll index.
///
/// The sign of `m` follows the parity rule: within the degree-n group at
/// position `r = j - T(n)`, matching parities of `n` and `r` give `m = -r`
/// and mixed parities give `m = r - 1`.
pub fn j_to_nm(j: NollIndex) -> BwIndex {
    let j = j.get();
    let n = radial_degree(j);
    let r = j - triangular(n) as u64;
    let m = if (n % 2) == (r % 2) {
        -(r as i64)
    } else {
        r as i64 - 1
    };
    debug_assert!(m.unsigned_abs() <= n && (n as i64 - m) % 2 == 0);
    BwIndex { n, m }
}

/// ANSI index of a double index: `(n(n+2) + m) / 2`, an exact division.
pub fn nm_to_ansi(idx: BwIndex) -> AnsiIndex {
    let t = idx.n as i128 * (idx.n as i128 + 2) + idx.m as i128;
    AnsiIndex(u64::try_from(t / 2).expect("ANSI index exceeds u64"))
}

/// Double index of an ANSI index, the inverse of [`nm_to_ansi`].
pub fn ansi_to_nm(idx: AnsiIndex) -> BwIndex {
    let a = idx.get();
    // largest n with T(n) <= a, then m falls out of the forward formula
    let mut n = ((8 * a as u128 + 1).isqrt() as u64).saturating_sub(1) / 2;
    while triangular(n + 1) <= a as u128 {
        n += 1;
    }
    while triangular(n) > a as u128 {
        n -= 1;
    }
    let m = 2 * a as i128 - n as i128 * (n as i128 + 2);
    let idx = BwIndex { n, m: m as i64 };
    debug_assert!(idx.m_abs() <= n && (n as i64 - idx.m) % 2 == 0);
    idx
}

/// Double index from a Noll index by the closed-form floor expressions found
/// in the older literature, kept as a differential oracle:
/// `n = floor(sqrt(2j - 1) + 1/2) - 1`, then `m = 2 floor((2j + 1 - n(n+1)) / 4)`
/// for even `n` and `m = 2 floor((2(j + 1) - n(n+1)) / 4) - 1` for odd `n`.
///
/// The returned `m` is never negative, so its sign disagrees with
/// [`j_to_nm`] for half of the pairs; `n` and `|m|` always agree. Uses
/// floating point, so it is only trusted for moderate `j`. Not part of the
/// canonical conversion.
pub fn legacy_j_to_nm(j: NollIndex) -> (u64, i64) {
    let jf = j.get() as f64;
    let n = ((2.0 * jf - 1.0).sqrt() + 0.5).floor() as u64 - 1;
    let base = (n * (n + 1)) as i64;
    let m = if n % 2 == 0 {
        2 * (2 * j.get() as i64 + 1 - base).div_euclid(4)
    } else {
        2 * (2 * (j.get() as i64 + 1) - base).div_euclid(4) - 1
    };
    (n, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: i64, m: i64) -> BwIndex {
        validate_nm(n, m).unwrap()
    }

    #[test]
    fn validation_rejects_bad_pairs() {
        assert!(matches!(
            validate_nm(-1, 1),
            Err(Error::NegativeDegree { .. })
        ));
        assert!(matches!(
            validate_nm(2, -4),
            Err(Error::FrequencyBound { .. })
        ));
        assert!(matches!(validate_nm(3, 2), Err(Error::Parity { .. })));
        assert!(validate_nm(3, -3).is_ok());
    }

    #[test]
    fn noll_index_starts_at_one() {
        assert!(matches!(NollIndex::new(0), Err(Error::NollRange { j: 0 })));
        assert_eq!(NollIndex::new(1).unwrap().get(), 1);
    }

    #[test]
    fn nm_to_j_known_values() {
        assert_eq!(nm_to_j(bw(0, 0)).get(), 1);
        assert_eq!(nm_to_j(bw(1, -1)).get(), 2);
        assert_eq!(nm_to_j(bw(1, 1)).get(), 3);
        assert_eq!(nm_to_j(bw(2, 0)).get(), 4);
        assert_eq!(nm_to_j(bw(4, 0)).get(), 11);
        assert_eq!(nm_to_j(bw(29, 29)).get(), 465);
    }

    #[test]
    fn j_to_nm_known_values() {
        assert_eq!(j_to_nm(NollIndex::new(1).unwrap()), bw(0, 0));
        assert_eq!(j_to_nm(NollIndex::new(5).unwrap()), bw(2, -2));
        assert_eq!(j_to_nm(NollIndex::new(11).unwrap()), bw(4, 0));
        assert_eq!(j_to_nm(NollIndex::new(46).unwrap()), bw(9, -1));
        assert_eq!(j_to_nm(NollIndex::new(465).unwrap()), bw(29, 29));
    }

    #[test]
    fn group_position_is_in_range() {
        for j in 1..=10_000u64 {
            let idx = j_to_nm(NollIndex::new(j).unwrap());
            let r = seq_position(idx).get();
            assert!(r >= 1 && r <= idx.n() + 1, "j={j} gave r={r}");
            assert_eq!(j - (idx.n() * (idx.n() + 1) / 2), r);
        }
    }

    #[test]
    fn ansi_known_values_and_inverse() {
        assert_eq!(nm_to_ansi(bw(0, 0)).get(), 0);
        assert_eq!(nm_to_ansi(bw(1, -1)).get(), 1);
        assert_eq!(nm_to_ansi(bw(4, 2)).get(), 13);
        for a in 0..=10_000u64 {
            assert_eq!(nm_to_ansi(ansi_to_nm(AnsiIndex::new(a))).get(), a);
        }
    }

    #[test]
    fn legacy_formulas_match_on_magnitudes() {
        let (n, m) = legacy_j_to_nm(NollIndex::new(11).unwrap());
        assert_eq!((n, m), (4, 0));
        // sign convention differs: the parity rule gives (2, -2) here
        let (n, m) = legacy_j_to_nm(NollIndex::new(5).unwrap());
        assert_eq!((n, m), (2, 2));
        // and (1, -1) here
        let (n, m) = legacy_j_to_nm(NollIndex::new(2).unwrap());
        assert_eq!((n, m), (1, 1));
        let (n, m) = legacy_j_to_nm(NollIndex::new(9).unwrap());
        assert_eq!((n, m), (3, 3));
    }

    #[test]
    fn k_counts_radial_terms() {
        assert_eq!(nm_to_k(bw(4, 0)), 2);
        assert_eq!(nm_to_k(bw(9, 1)), 4);
        assert_eq!(nm_to_k(bw(29, 29)), 0);
    }
}

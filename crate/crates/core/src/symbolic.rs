//! Text emitters for polynomials and Zernike factors.
//!
//! The polynomial emitters write through a [`SyntaxProfile`] so the same
//! logic serves LaTeX, plain text and code-like targets. Emission is
//! deterministic: equal inputs produce byte-identical output. Each term ends
//! with a single space, unit coefficients in front of a variable are
//! suppressed, zero terms are skipped, and the first emitted term carries no
//! leading plus.
//!
//! The angular and normalization emitters are LaTeX-specific because their
//! output feeds the table generator directly.

use std::io::Write;

use crate::coefficients::{normalization_radicand, radial_coefficients};
use crate::error::{Error, Result};
use crate::indexing::{self, BwIndex};

/// Variable and power tokens for one emission target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyntaxProfile {
    variable_token: String,
    power_operator: String,
    power_braces: bool,
}

impl SyntaxProfile {
    /// Builds a profile from tokens; both must be non-empty.
    pub fn new(
        variable_token: impl Into<String>,
        power_operator: impl Into<String>,
        power_braces: bool,
    ) -> Result<Self> {
        let variable_token = variable_token.into();
        let power_operator = power_operator.into();
        if variable_token.is_empty() {
            return Err(Error::SyntaxProfile {
                reason: "variable token is empty",
            });
        }
        if power_operator.is_empty() {
            return Err(Error::SyntaxProfile {
                reason: "power operator is empty",
            });
        }
        Ok(SyntaxProfile {
            variable_token,
            power_operator,
            power_braces,
        })
    }

    /// `\rho^{p}` style exponents.
    pub fn latex() -> Self {
        SyntaxProfile::new("\\rho", "^", true).expect("tokens are non-empty")
    }

    /// `r^p` style exponents.
    pub fn plain() -> Self {
        SyntaxProfile::new("r", "^", false).expect("tokens are non-empty")
    }

    /// `rho**p` style exponents.
    pub fn code() -> Self {
        SyntaxProfile::new("rho", "**", false).expect("tokens are non-empty")
    }

    pub fn variable_token(&self) -> &str {
        &self.variable_token
    }

    pub fn power_operator(&self) -> &str {
        &self.power_operator
    }

    pub fn power_braces(&self) -> bool {
        self.power_braces
    }
}

/// Writes the sign of term `i`: minus for negative coefficients, plus for
/// non-negative ones except in first position, where it is omitted.
pub fn emit_sign<W: Write>(sink: &mut W, c: i128, i: usize) -> Result<()> {
    if c < 0 {
        write!(sink, "-")?;
    } else if i != 0 {
        write!(sink, "+")?;
    }
    Ok(())
}

/// Writes `|c| var^p ` with the profile's tokens. The magnitude is dropped
/// when it is one and a variable follows; `var^1` collapses to `var`; `p = 0`
/// leaves only the magnitude. Every term ends with one space.
pub fn emit_unsigned_term<W: Write>(
    sink: &mut W,
    profile: &SyntaxProfile,
    c: i128,
    p: u64,
) -> Result<()> {
    let magnitude = c.unsigned_abs();
    if p == 0 {
        write!(sink, "{magnitude} ")?;
        return Ok(());
    }
    if magnitude != 1 {
        write!(sink, "{magnitude}")?;
    }
    if p == 1 {
        write!(sink, "{} ", profile.variable_token)?;
    } else if profile.power_braces {
        write!(
            sink,
            "{}{}{{{p}}} ",
            profile.variable_token, profile.power_operator
        )?;
    } else {
        write!(
            sink,
            "{}{}{p} ",
            profile.variable_token, profile.power_operator
        )?;
    }
    Ok(())
}

/// Writes one signed term at emitted position `i`.
pub fn emit_term<W: Write>(
    sink: &mut W,
    i: usize,
    profile: &SyntaxProfile,
    c: i128,
    p: u64,
) -> Result<()> {
    emit_sign(sink, c, i)?;
    emit_unsigned_term(sink, profile, c, p)
}

/// Writes a full polynomial, skipping zero coefficients. Sign placement uses
/// the position among emitted terms, so a leading run of zeros still yields
/// a first term without a plus. An all-zero polynomial prints as `0 `.
pub fn emit_polynomial<W: Write>(
    sink: &mut W,
    profile: &SyntaxProfile,
    coeffs: &[i128],
    powers: &[u64],
) -> Result<()> {
    assert_eq!(
        coeffs.len(),
        powers.len(),
        "coefficient and power sequences differ in length"
    );
    let mut emitted = 0usize;
    for (&c, &p) in coeffs.iter().zip(powers) {
        if c == 0 {
            continue;
        }
        emit_term(sink, emitted, profile, c, p)?;
        emitted += 1;
    }
    if emitted == 0 {
        write!(sink, "0 ")?;
    }
    Ok(())
}

/// Writes the radial polynomial of a double index.
pub fn emit_radial<W: Write>(sink: &mut W, idx: BwIndex, profile: &SyntaxProfile) -> Result<()> {
    let poly = radial_coefficients(idx)?;
    emit_polynomial(sink, profile, poly.coeffs(), poly.powers())
}

/// Writes the LaTeX angular factor: nothing for `m = 0`, otherwise
/// `\cos(M\theta)` or `\sin(M\theta)` by the parity of the Noll index, with
/// `M = |m|` suppressed when it is one.
pub fn emit_angular<W: Write>(sink: &mut W, idx: BwIndex) -> Result<()> {
    if idx.m() == 0 {
        return Ok(());
    }
    let j = indexing::nm_to_j(idx);
    let name = if j.get() % 2 == 0 { "cos" } else { "sin" };
    let frequency = idx.m_abs();
    if frequency == 1 {
        write!(sink, "\\{name}(\\theta)")?;
    } else {
        write!(sink, "\\{name}({frequency}\\theta)")?;
    }
    Ok(())
}

/// Writes the LaTeX normalization coefficient `\sqrt{radicand}`.
pub fn emit_normalization<W: Write>(sink: &mut W, idx: BwIndex) -> Result<()> {
    write!(sink, "\\sqrt{{{}}}", normalization_radicand(idx).radicand())?;
    Ok(())
}

/// Writes the unnormalized LaTeX polynomial `R_n^|m|(\rho) \Theta_m(\theta)`.
/// The radial part is parenthesized when a multi-term polynomial meets an
/// angular factor.
pub fn emit_unnormalized_zernike<W: Write>(sink: &mut W, idx: BwIndex) -> Result<()> {
    let profile = SyntaxProfile::latex();
    let multi_term = indexing::nm_to_k(idx) > 0;
    if idx.m() != 0 && multi_term {
        write!(sink, "(")?;
        emit_radial(sink, idx, &profile)?;
        write!(sink, ")")?;
    } else {
        emit_radial(sink, idx, &profile)?;
    }
    emit_angular(sink, idx)
}

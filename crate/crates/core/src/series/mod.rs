//! Polynomials and truncated power series over `S_k`.

mod irreducible;
mod poly;
mod window;

pub use irreducible::{factorization_oracle, factorization_oracle_within, quadratic_irreducible};
pub use poly::{Degree, Poly};
pub use window::{idempotent_series_from_generators, numerical_semigroup, TruncSeries};

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Elem, Error, Result, SemiringCtx};

/// Writes `c0 + c1 X + c2 X^2 …`, skipping zero terms and writing `X^i` for `1 X^i`; the all-zero
/// sequence renders as `0`.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[Elem]) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        if i > 0 && c == Elem::ONE {
            f.write_str("X")?;
        } else if i > 0 {
            write!(f, "{c} X")?;
        } else {
            write!(f, "{c}")?;
        }
        if i > 1 {
            write!(f, "^{i}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Parses `c0 + c1 X + c2 X^2 …` into a dense coefficient vector.
///
/// Terms may come in any order and repeat (repeats are added); the
/// coefficient may be omitted (`X^2` means `1 X^2`) or written without a
/// space (`mX`, `2X^3`). A bare `*` between coefficient and `X` is allowed.
pub(crate) fn parse_terms(ctx: &SemiringCtx, input: &str) -> Result<Vec<Elem>> {
    let bad = |reason| Error::Parse { input: input.to_string(), reason };
    let mut coeffs: Vec<Elem> = Vec::new();
    if input.trim().is_empty() {
        return Err(bad("empty polynomial"));
    }
    for raw in input.split('+') {
        let term: String = raw.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
        if term.is_empty() {
            return Err(bad("empty term"));
        }
        let (coeff_text, exponent) = match term.find(['X', 'x']) {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let rest = &term[pos + 1..];
                let exponent = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| bad("malformed exponent"))?
                };
                (&term[..pos], exponent)
            }
        };
        let coeff = if coeff_text.is_empty() {
            Elem::ONE
        } else {
            ctx.check(coeff_text.parse::<Elem>().map_err(|_| bad("malformed coefficient"))?)?
        };
        if exponent >= 1 << 16 {
            return Err(bad("exponent too large"));
        }
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, Elem::Zero);
        }
        coeffs[exponent] = ctx.plus(coeffs[exponent], coeff);
    }
    Ok(coeffs)
}

/// Coefficient arithmetic shared by polynomials and windows.
pub(crate) fn convolve(ctx: &SemiringCtx, f: &[Elem], g: &[Elem], len: usize) -> Vec<Elem> {
    let mut out = alloc::vec![Elem::Zero; len];
    for (i, &a) in f.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] = ctx.plus(out[i + j], ctx.times(a, b));
        }
    }
    out
}

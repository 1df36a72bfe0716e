use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{convolve, parse_terms, write_terms};
use crate::{Elem, Error, Result, SemiringCtx};

/// A power series in `S_k[[X]]` seen through the window of degrees `0 ..= depth`.
///
/// The window is never trimmed. Claims about full series become claims
/// about windows: idempotency here means `f · f = f` on degrees `<= depth`,
/// which a series may satisfy while failing beyond the window.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    ctx: SemiringCtx,
    coeffs: Vec<Elem>,
}

impl TruncSeries {
    /// Pads `coeffs` with zeros up to `depth`; rejects longer input.
    pub fn new(ctx: &SemiringCtx, depth: usize, coeffs: &[Elem]) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidArgument("window depth must be at least 1"));
        }
        if coeffs.len() > depth + 1 {
            return Err(Error::InvalidArgument("more coefficients than the window holds"));
        }
        for &c in coeffs {
            ctx.check(c)?;
        }
        let mut window = coeffs.to_vec();
        window.resize(depth + 1, Elem::Zero);
        Ok(TruncSeries { ctx: *ctx, coeffs: window })
    }

    pub fn zero(ctx: &SemiringCtx, depth: usize) -> Result<Self> {
        Self::new(ctx, depth, &[])
    }

    pub fn constant(ctx: &SemiringCtx, depth: usize, c: Elem) -> Result<Self> {
        Self::new(ctx, depth, &[c])
    }

    /// Parses the polynomial text form; terms beyond `depth` are rejected.
    pub fn parse(ctx: &SemiringCtx, depth: usize, text: &str) -> Result<Self> {
        let mut coeffs = parse_terms(ctx, text)?;
        while coeffs.len() > depth + 1 && coeffs.last() == Some(&Elem::Zero) {
            coeffs.pop();
        }
        Self::new(ctx, depth, &coeffs)
    }

    pub fn ctx(&self) -> &SemiringCtx {
        &self.ctx
    }

    pub fn depth(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn checked_add(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.compatible(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(&a, &b)| self.ctx.plus(a, b)).collect();
        Ok(TruncSeries { ctx: self.ctx, coeffs })
    }

    /// Convolution truncated at the window depth.
    pub fn checked_mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        self.compatible(other)?;
        let coeffs = convolve(&self.ctx, &self.coeffs, &other.coeffs, self.coeffs.len());
        Ok(TruncSeries { ctx: self.ctx, coeffs })
    }

    fn compatible(&self, other: &TruncSeries) -> Result<()> {
        self.ctx.same_order(&other.ctx)?;
        if self.depth() != other.depth() {
            return Err(Error::DepthMismatch { left: self.depth(), right: other.depth() });
        }
        Ok(())
    }

    /// Only the constant-one window is a unit.
    pub fn is_unit(&self) -> bool {
        self.coeffs[0] == Elem::ONE && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Searches every window `g` with `f · g = 1`, fixing `g`'s coefficients
    /// one degree at a time: the product's coefficient of `X^i` depends only
    /// on `g_0 … g_i`, so any prefix that already misses `1` is abandoned.
    pub fn find_inverse(&self) -> Option<TruncSeries> {
        let carrier: Vec<Elem> = self.ctx.elements().collect();
        let mut g = vec![Elem::Zero; self.coeffs.len()];
        self.extend_inverse(&carrier, &mut g, 0).then_some(TruncSeries { ctx: self.ctx, coeffs: g })
    }

    fn extend_inverse(&self, carrier: &[Elem], g: &mut [Elem], i: usize) -> bool {
        if i == g.len() {
            return true;
        }
        let target = if i == 0 { Elem::ONE } else { Elem::Zero };
        for &b in carrier {
            g[i] = b;
            let coeff = (0..=i).fold(Elem::Zero, |acc, j| self.ctx.plus(acc, self.ctx.times(self.coeffs[i - j], g[j])));
            if coeff == target && self.extend_inverse(carrier, g, i + 1) {
                return true;
            }
        }
        g[i] = Elem::Zero;
        false
    }

    /// Structural test: the zero window, or `a₀ + Σ m X^s` with `a₀ ∈ {1, m}`
    /// and the support closed under addition within the window.
    pub fn is_idempotent_window(&self) -> bool {
        let c = &self.coeffs;
        match c[0] {
            Elem::Zero => c.iter().all(|a| a.is_zero()),
            Elem::Many => self.support_is_closed_semigroup(),
            a if a == Elem::ONE => self.support_is_closed_semigroup(),
            _ => false,
        }
    }

    fn support_is_closed_semigroup(&self) -> bool {
        let c = &self.coeffs;
        let n = self.depth();
        c[1..].iter().all(|&a| matches!(a, Elem::Zero | Elem::Many))
            && (1..=n).all(|i| c[i].is_zero() || (i..=n - i).all(|j| c[j].is_zero() || !c[i + j].is_zero()))
    }

    /// Direct test: `f · f = f` on the window.
    pub fn squares_to_itself(&self) -> bool {
        self.checked_mul(self).is_ok_and(|sq| sq == *self)
    }

    /// Exponents `s >= 1` with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (1..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }

    /// Every window over `S_k` at the given depth.
    pub fn all_windows(ctx: &SemiringCtx, depth: usize) -> Vec<TruncSeries> {
        let n = ctx.len();
        let carrier: Vec<Elem> = ctx.elements().collect();
        (0..n.pow(depth as u32 + 1))
            .map(|mut code| {
                let coeffs = (0..=depth)
                    .map(|_| {
                        let c = carrier[code % n];
                        code /= n;
                        c
                    })
                    .collect();
                TruncSeries { ctx: *ctx, coeffs }
            })
            .collect()
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)?;
        write!(f, " + O(X^{})", self.coeffs.len())
    }
}

/// The subsemigroup of `(N, +)` generated by `gens`, cut to `1 ..= depth`.
pub fn numerical_semigroup(gens: &[usize], depth: usize) -> Vec<usize> {
    let mut member = vec![false; depth + 1];
    for s in 1..=depth {
        member[s] = gens.iter().any(|&g| g == s || (g >= 1 && g < s && member[s - g]));
    }
    (1..=depth).filter(|&s| member[s]).collect()
}

/// `a₀ + Σ m X^s` over the numerical semigroup generated by `gens`.
pub fn idempotent_series_from_generators(
    ctx: &SemiringCtx,
    a0: Elem,
    gens: &[usize],
    depth: usize,
) -> Result<TruncSeries> {
    if a0 != Elem::ONE && a0 != Elem::Many {
        return Err(Error::InvalidArgument("the constant term must be 1 or m"));
    }
    if gens.is_empty() {
        return Err(Error::InvalidArgument("at least one generator is required"));
    }
    if gens.contains(&0) {
        return Err(Error::InvalidArgument("generators must be positive"));
    }
    let mut coeffs = vec![Elem::Zero; depth + 1];
    coeffs[0] = a0;
    for s in numerical_semigroup(gens, depth) {
        coeffs[s] = Elem::Many;
    }
    TruncSeries::new(ctx, depth, &coeffs)
}

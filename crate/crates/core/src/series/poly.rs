use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;

use super::{convolve, parse_terms, write_terms};
use crate::{Elem, Result, SemiringCtx};

/// Degree of a polynomial; `NegInfinity` only for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

/// Degree addition: `-∞` absorbs.
impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A polynomial in `S_k[X]`; coefficients from degree 0 upward with
/// trailing zeros trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ctx: SemiringCtx,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(ctx: &SemiringCtx, coeffs: &[Elem]) -> Result<Self> {
        for &c in coeffs {
            ctx.check(c)?;
        }
        Ok(Self::from_valid(ctx, coeffs.to_vec()))
    }

    pub(crate) fn from_valid(ctx: &SemiringCtx, mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&Elem::Zero) {
            coeffs.pop();
        }
        Poly { ctx: *ctx, coeffs }
    }

    pub fn zero(ctx: &SemiringCtx) -> Self {
        Poly { ctx: *ctx, coeffs: Vec::new() }
    }

    pub fn constant(ctx: &SemiringCtx, c: Elem) -> Result<Self> {
        Self::new(ctx, &[c])
    }

    /// `c X^degree`.
    pub fn monomial(ctx: &SemiringCtx, c: Elem, degree: usize) -> Result<Self> {
        let mut coeffs = alloc::vec![Elem::Zero; degree + 1];
        coeffs[degree] = c;
        Self::new(ctx, &coeffs)
    }

    /// Parses the text form `c0 + c1 X + c2 X^2 …`.
    pub fn parse(ctx: &SemiringCtx, text: &str) -> Result<Self> {
        Ok(Self::from_valid(ctx, parse_terms(ctx, text)?))
    }

    pub fn ctx(&self) -> &SemiringCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::Zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.ctx.same_order(&other.ctx)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.ctx.plus(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::from_valid(&self.ctx, coeffs))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.ctx.same_order(&other.ctx)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ctx));
        }
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        Ok(Poly::from_valid(&self.ctx, convolve(&self.ctx, &self.coeffs, &other.coeffs, len)))
    }

    /// Only the constant `1` is a unit.
    pub fn is_unit(&self) -> bool {
        self.coeffs == [Elem::ONE]
    }

    /// Closed form: the idempotents are the constants `0`, `1` and `m`.
    pub fn is_idempotent(&self) -> bool {
        matches!(self.coeffs.as_slice(), [] | [Elem::Many]) || self.is_unit()
    }

    /// Direct check `f · f = f`.
    pub fn squares_to_itself(&self) -> bool {
        self.checked_mul(self).is_ok_and(|sq| sq == *self)
    }

    /// Every polynomial over `S_k` of degree at most `max_degree`, zero included.
    pub fn all_up_to_degree(ctx: &SemiringCtx, max_degree: usize) -> Vec<Poly> {
        let n = ctx.len();
        let carrier: Vec<Elem> = ctx.elements().collect();
        let count = n.pow(max_degree as u32 + 1);
        (0..count)
            .map(|mut code| {
                let coeffs = (0..=max_degree)
                    .map(|_| {
                        let c = carrier[code % n];
                        code /= n;
                        c
                    })
                    .collect();
                Poly::from_valid(ctx, coeffs)
            })
            .collect()
    }

    /// Every polynomial of exactly the given degree.
    pub fn all_of_degree(ctx: &SemiringCtx, degree: usize) -> Vec<Poly> {
        Self::all_up_to_degree(ctx, degree).into_iter().filter(|p| p.degree() == Degree::Finite(degree)).collect()
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        (self.ctx.k() == other.ctx.k()).then(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs)
    }
}

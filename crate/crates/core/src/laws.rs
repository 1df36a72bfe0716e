//! Exhaustive verification of the semiring axioms of `S_k`.
//!
//! Every law is checked over all tuples of the carrier. The homomorphism
//! laws for the canonical map are checked on the natural numbers `0 ..= 3k`:
//! any `x > k` already maps to `m`, so that window exercises every
//! behaviourally distinct case.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{limits, Elem, Result, SemiringCtx};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    AddCommutative,
    AddAssociative,
    MulCommutative,
    MulAssociative,
    Distributive,
    AdditiveIdentity,
    MultiplicativeIdentity,
    ZeroAbsorbs,
    Entire,
    Zerosumfree,
    OrderReflexive,
    OrderAntisymmetric,
    OrderTransitive,
    OrderTotal,
    OrderCompatibleAdd,
    OrderCompatibleMul,
    CanonicalMapAdditive,
    CanonicalMapMultiplicative,
}

impl Law {
    pub const ALL: [Law; 18] = [
        Law::AddCommutative,
        Law::AddAssociative,
        Law::MulCommutative,
        Law::MulAssociative,
        Law::Distributive,
        Law::AdditiveIdentity,
        Law::MultiplicativeIdentity,
        Law::ZeroAbsorbs,
        Law::Entire,
        Law::Zerosumfree,
        Law::OrderReflexive,
        Law::OrderAntisymmetric,
        Law::OrderTransitive,
        Law::OrderTotal,
        Law::OrderCompatibleAdd,
        Law::OrderCompatibleMul,
        Law::CanonicalMapAdditive,
        Law::CanonicalMapMultiplicative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::AddCommutative => "add-commutative",
            Law::AddAssociative => "add-associative",
            Law::MulCommutative => "mul-commutative",
            Law::MulAssociative => "mul-associative",
            Law::Distributive => "distributive",
            Law::AdditiveIdentity => "additive-identity",
            Law::MultiplicativeIdentity => "multiplicative-identity",
            Law::ZeroAbsorbs => "zero-absorbs",
            Law::Entire => "entire",
            Law::Zerosumfree => "zerosumfree",
            Law::OrderReflexive => "order-reflexive",
            Law::OrderAntisymmetric => "order-antisymmetric",
            Law::OrderTransitive => "order-transitive",
            Law::OrderTotal => "order-total",
            Law::OrderCompatibleAdd => "order-compatible-add",
            Law::OrderCompatibleMul => "order-compatible-mul",
            Law::CanonicalMapAdditive => "canonical-map-additive",
            Law::CanonicalMapMultiplicative => "canonical-map-multiplicative",
        }
    }

    fn arity(self) -> usize {
        match self {
            Law::AdditiveIdentity | Law::MultiplicativeIdentity | Law::ZeroAbsorbs | Law::OrderReflexive => 1,
            Law::AddAssociative
            | Law::MulAssociative
            | Law::Distributive
            | Law::OrderTransitive
            | Law::OrderCompatibleAdd
            | Law::OrderCompatibleMul => 3,
            _ => 2,
        }
    }

    fn over_naturals(self) -> bool {
        matches!(self, Law::CanonicalMapAdditive | Law::CanonicalMapMultiplicative)
    }

    /// Evaluates the law on one tuple of elements.
    fn holds_on_elems(self, ctx: &SemiringCtx, t: &[Elem]) -> bool {
        let add = |a, b| ctx.plus(a, b);
        let mul = |a, b| ctx.times(a, b);
        let implies = |p: bool, q: bool| !p || q;
        let le = |a: Elem, b: Elem| a <= b;
        match (self, t) {
            (Law::AddCommutative, &[a, b]) => add(a, b) == add(b, a),
            (Law::AddAssociative, &[a, b, c]) => add(add(a, b), c) == add(a, add(b, c)),
            (Law::MulCommutative, &[a, b]) => mul(a, b) == mul(b, a),
            (Law::MulAssociative, &[a, b, c]) => mul(mul(a, b), c) == mul(a, mul(b, c)),
            (Law::Distributive, &[a, b, c]) => mul(a, add(b, c)) == add(mul(a, b), mul(a, c)),
            (Law::AdditiveIdentity, &[a]) => add(a, Elem::Zero) == a && add(Elem::Zero, a) == a,
            (Law::MultiplicativeIdentity, &[a]) => mul(a, Elem::ONE) == a && mul(Elem::ONE, a) == a,
            (Law::ZeroAbsorbs, &[a]) => mul(a, Elem::Zero) == Elem::Zero && mul(Elem::Zero, a) == Elem::Zero,
            (Law::Entire, &[a, b]) => implies(mul(a, b) == Elem::Zero, a.is_zero() || b.is_zero()),
            (Law::Zerosumfree, &[a, b]) => implies(add(a, b) == Elem::Zero, a.is_zero() && b.is_zero()),
            (Law::OrderReflexive, &[a]) => le(a, a),
            (Law::OrderAntisymmetric, &[a, b]) => implies(le(a, b) && le(b, a), a == b),
            (Law::OrderTransitive, &[a, b, c]) => implies(le(a, b) && le(b, c), le(a, c)),
            (Law::OrderTotal, &[a, b]) => le(a, b) || le(b, a),
            (Law::OrderCompatibleAdd, &[a, b, c]) => implies(le(a, b), le(add(a, c), add(b, c))),
            (Law::OrderCompatibleMul, &[a, b, c]) => implies(le(a, b), le(mul(a, c), mul(b, c))),
            _ => unreachable!("law {self:?} evaluated on {} elements", t.len()),
        }
    }

    fn holds_on_naturals(self, ctx: &SemiringCtx, x: u64, y: u64) -> bool {
        let f = |n| ctx.canonical_map(n);
        match self {
            Law::CanonicalMapAdditive => f(x + y) == ctx.plus(f(x), f(y)),
            Law::CanonicalMapMultiplicative => f(x * y) == ctx.times(f(x), f(y)),
            _ => unreachable!("law {self:?} is not stated over the naturals"),
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Counterexample {
    Elems(Vec<Elem>),
    Naturals(u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub law: Law,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

impl LawReport {
    /// Re-evaluates the recorded counterexample; `true` when it still
    /// violates the law in `ctx`.
    pub fn counterexample_violates(&self, ctx: &SemiringCtx) -> bool {
        match &self.counterexample {
            None => false,
            Some(Counterexample::Elems(t)) => {
                t.len() == self.law.arity() && t.iter().all(|&e| ctx.contains(e)) && !self.law.holds_on_elems(ctx, t)
            }
            Some(Counterexample::Naturals(x, y)) => {
                self.law.over_naturals() && !self.law.holds_on_naturals(ctx, *x, *y)
            }
        }
    }
}

/// Checks every [`Law`] exhaustively, for `k <= limits::LAWS`.
pub fn verify_laws(ctx: &SemiringCtx) -> Result<Vec<LawReport>> {
    verify_laws_within(ctx, limits::LAWS)
}

pub fn verify_laws_within(ctx: &SemiringCtx, limit: u32) -> Result<Vec<LawReport>> {
    ctx.ensure_within("law verification", limit)?;
    let carrier: Vec<Elem> = ctx.elements().collect();
    Ok(Law::ALL
        .iter()
        .map(|&law| {
            let counterexample = if law.over_naturals() {
                find_natural_counterexample(ctx, law)
            } else {
                find_elem_counterexample(ctx, law, &carrier)
            };
            LawReport { law, holds: counterexample.is_none(), counterexample }
        })
        .collect())
}

fn find_natural_counterexample(ctx: &SemiringCtx, law: Law) -> Option<Counterexample> {
    let top = 3 * u64::from(ctx.k());
    (0..=top)
        .flat_map(|x| (0..=top).map(move |y| (x, y)))
        .find(|&(x, y)| !law.holds_on_naturals(ctx, x, y))
        .map(|(x, y)| Counterexample::Naturals(x, y))
}

fn find_elem_counterexample(ctx: &SemiringCtx, law: Law, carrier: &[Elem]) -> Option<Counterexample> {
    let arity = law.arity();
    let n = carrier.len();
    let mut digits = vec![0usize; arity];
    let mut tuple = vec![Elem::Zero; arity];
    loop {
        for (slot, &d) in tuple.iter_mut().zip(&digits) {
            *slot = carrier[d];
        }
        if !law.holds_on_elems(ctx, &tuple) {
            return Some(Counterexample::Elems(tuple));
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == arity {
                return None;
            }
            digits[pos] += 1;
            if digits[pos] < n {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
    }
}

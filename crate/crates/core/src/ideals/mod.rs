//! Ideals of `S_k`: enumeration, generation, the prime / maximal /
//! subtractive / radical predicates, the spectrum, the ideal semiring and
//! localizations.
//!
//! Ideals are stored as packed membership bitsets indexed by
//! [`Elem::index`], which limits this module to `k <= limits::ELEM_SET`.

mod ideal_semiring;
mod localization;
mod spectrum;

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

pub use ideal_semiring::{nilpotency_guarantee, nilpotency_index, IdealSemiring};
pub use localization::{multiplicative_sets, LocalizedSemiring};
pub use spectrum::SpectrumView;

use crate::{limits, Elem, Error, Result, SemiringCtx};

/// An ideal of `S_k`: contains `0`, closed under `⊕`, absorbs `⊙`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ideal {
    ctx: SemiringCtx,
    mask: u128,
}

fn bit(ctx: &SemiringCtx, a: Elem) -> u128 {
    1u128 << a.index(ctx.k())
}

fn set_of(ctx: &SemiringCtx, elems: impl IntoIterator<Item = Elem>) -> u128 {
    elems.into_iter().fold(0, |m, a| m | bit(ctx, a))
}

fn members_of(ctx: &SemiringCtx, mask: u128) -> impl Iterator<Item = Elem> + '_ {
    ctx.elements().filter(move |&a| mask & bit(ctx, a) != 0)
}

fn ensure_packable(ctx: &SemiringCtx) -> Result<()> {
    ctx.ensure_within("ideal computations", limits::ELEM_SET)
}

/// Why `mask` fails to be an ideal, or `None` if it is one.
fn ideal_violation(ctx: &SemiringCtx, mask: u128) -> Option<&'static str> {
    if mask & 1 == 0 {
        return Some("does not contain 0");
    }
    let members: Vec<Elem> = members_of(ctx, mask).collect();
    for &a in &members {
        if ctx.elements().any(|s| mask & bit(ctx, ctx.times(s, a)) == 0) {
            return Some("not closed under multiplication by S_k");
        }
        if members.iter().any(|&b| mask & bit(ctx, ctx.plus(a, b)) == 0) {
            return Some("not closed under addition");
        }
    }
    None
}

/// Smallest superset of `mask` closed under addition and absorption.
fn close(ctx: &SemiringCtx, mut mask: u128) -> u128 {
    mask |= 1;
    loop {
        let members: Vec<Elem> = members_of(ctx, mask).collect();
        let mut next = mask;
        for &a in &members {
            for s in ctx.elements() {
                next |= bit(ctx, ctx.times(s, a));
            }
            for &b in &members {
                next |= bit(ctx, ctx.plus(a, b));
            }
        }
        if next == mask {
            return mask;
        }
        mask = next;
    }
}

impl Ideal {
    /// Validates `members` (with `0` added) as an ideal.
    pub fn new(ctx: &SemiringCtx, members: &[Elem]) -> Result<Self> {
        ensure_packable(ctx)?;
        for &a in members {
            ctx.check(a)?;
        }
        let mask = set_of(ctx, members.iter().copied()) | 1;
        match ideal_violation(ctx, mask) {
            None => Ok(Ideal { ctx: *ctx, mask }),
            Some(reason) => Err(Error::NotAnIdeal(reason)),
        }
    }

    pub(crate) fn from_mask(ctx: &SemiringCtx, mask: u128) -> Self {
        Ideal { ctx: *ctx, mask }
    }

    /// `{0}`.
    pub fn zero(ctx: &SemiringCtx) -> Result<Self> {
        ensure_packable(ctx)?;
        Ok(Ideal::from_mask(ctx, 1))
    }

    /// `S_k` itself.
    pub fn whole(ctx: &SemiringCtx) -> Result<Self> {
        ensure_packable(ctx)?;
        Ok(Ideal::from_mask(ctx, set_of(ctx, ctx.elements())))
    }

    /// `{0, m}`, the smallest nonzero ideal.
    pub fn smallest_nonzero(ctx: &SemiringCtx) -> Result<Self> {
        ensure_packable(ctx)?;
        Ok(Ideal::from_mask(ctx, 1 | bit(ctx, Elem::Many)))
    }

    /// `S_k \ {1}`, the unique maximal ideal.
    pub fn maximal(ctx: &SemiringCtx) -> Result<Self> {
        ensure_packable(ctx)?;
        Ok(Ideal::from_mask(ctx, set_of(ctx, ctx.elements()) & !bit(ctx, Elem::ONE)))
    }

    pub fn ctx(&self) -> &SemiringCtx {
        &self.ctx
    }

    pub fn members(&self) -> Vec<Elem> {
        members_of(&self.ctx, self.mask).collect()
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.ctx.contains(a) && self.mask & bit(&self.ctx, a) != 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.mask == 1
    }

    /// Proper means `1 ∉ I`.
    pub fn is_proper(&self) -> bool {
        !self.contains(Elem::ONE)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.mask & !other.mask == 0
    }

    /// `ab ∈ P ⇒ a ∈ P or b ∈ P`, for proper `P`.
    pub fn is_prime(&self) -> bool {
        let ctx = &self.ctx;
        self.is_proper()
            && ctx.elements().all(|a| {
                ctx.elements().all(|b| !self.contains(ctx.times(a, b)) || self.contains(a) || self.contains(b))
            })
    }

    /// Maximality among all ideals, enumerated up to `limits::IDEALS`.
    pub fn is_maximal(&self) -> Result<bool> {
        Ok(self.is_maximal_among(&enumerate_ideals(&self.ctx)?))
    }

    /// Proper, and no ideal of `ideals` lies strictly between `self` and `S_k`.
    pub fn is_maximal_among(&self, ideals: &[Ideal]) -> bool {
        self.is_proper() && !ideals.iter().any(|j| j.is_proper() && self.is_subset(j) && j.mask != self.mask)
    }

    /// `a ∈ I` and `a ⊕ b ∈ I` imply `b ∈ I`.
    pub fn is_subtractive(&self) -> bool {
        let ctx = &self.ctx;
        members_of(ctx, self.mask).all(|a| ctx.elements().all(|b| !self.contains(ctx.plus(a, b)) || self.contains(b)))
    }

    /// `{ a : aⁿ ∈ I for some n >= 1 }`. Powers of an element are eventually
    /// periodic, so each orbit is followed until it revisits an element.
    pub fn radical(&self) -> Ideal {
        let ctx = &self.ctx;
        let mask = ctx
            .elements()
            .filter(|&a| {
                let mut seen = 0u128;
                let mut p = a;
                while seen & bit(ctx, p) == 0 {
                    if self.contains(p) {
                        return true;
                    }
                    seen |= bit(ctx, p);
                    p = ctx.times(p, a);
                }
                false
            })
            .fold(0, |m, a| m | bit(ctx, a));
        Ideal::from_mask(ctx, mask)
    }

    pub fn is_radical(&self) -> bool {
        self.radical() == *self
    }

    /// `{ a ⊕ b }` closed into an ideal.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ctx.same_order(&other.ctx)?;
        let ctx = &self.ctx;
        let raw = members_of(ctx, self.mask)
            .flat_map(|a| members_of(ctx, other.mask).map(move |b| ctx.plus(a, b)))
            .fold(0, |m, c| m | bit(ctx, c));
        Ok(Ideal::from_mask(ctx, close(ctx, raw)))
    }

    /// The ideal generated by all products `ab`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ctx.same_order(&other.ctx)?;
        let ctx = &self.ctx;
        let raw = members_of(ctx, self.mask)
            .flat_map(|a| members_of(ctx, other.mask).map(move |b| ctx.times(a, b)))
            .fold(0, |m, c| m | bit(ctx, c));
        Ok(Ideal::from_mask(ctx, close(ctx, raw)))
    }
}

/// Canonical order: cardinality first, then lexicographic on sorted members.
impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ctx
            .k()
            .cmp(&other.ctx.k())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.members().cmp(&other.members()))
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.members().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

/// The least ideal containing `gens`, by closure iteration to a fixpoint.
pub fn ideal_generated(ctx: &SemiringCtx, gens: &[Elem]) -> Result<Ideal> {
    ensure_packable(ctx)?;
    for &g in gens {
        ctx.check(g)?;
    }
    Ok(Ideal::from_mask(ctx, close(ctx, set_of(ctx, gens.iter().copied()))))
}

pub fn principal(ctx: &SemiringCtx, a: Elem) -> Result<Ideal> {
    ideal_generated(ctx, &[a])
}

/// All ideals of `S_k` in canonical order, for `k <= limits::IDEALS`.
pub fn enumerate_ideals(ctx: &SemiringCtx) -> Result<Vec<Ideal>> {
    enumerate_ideals_within(ctx, limits::IDEALS)
}

/// Brute force over every subset containing `0`.
pub fn enumerate_ideals_within(ctx: &SemiringCtx, limit: u32) -> Result<Vec<Ideal>> {
    ctx.ensure_within("ideal enumeration", limit.min(limits::ELEM_SET.min(62)))?;
    let n = ctx.len();
    let idx = |a: Elem| a.index(ctx.k());
    let carrier: Vec<Elem> = ctx.elements().collect();
    let mul: Vec<Vec<usize>> =
        carrier.iter().map(|&a| carrier.iter().map(|&b| idx(ctx.times(a, b))).collect()).collect();
    let add: Vec<Vec<usize>> =
        carrier.iter().map(|&a| carrier.iter().map(|&b| idx(ctx.plus(a, b))).collect()).collect();
    // everything a single element forces into an ideal through absorption
    let absorbs: Vec<u64> = (0..n).map(|a| (0..n).fold(0u64, |m, s| m | (1 << mul[s][a]))).collect();

    let mut ideals = Vec::new();
    for rest in 0u64..(1u64 << (n - 1)) {
        let mask = (rest << 1) | 1;
        let members = || (0..n).filter(move |&i| mask & (1 << i) != 0);
        let closed = members().all(|a| absorbs[a] & !mask == 0 && members().all(|b| mask & (1 << add[a][b]) != 0));
        if closed {
            ideals.push(Ideal::from_mask(ctx, u128::from(mask)));
        }
    }
    ideals.sort();
    Ok(ideals)
}

/// Prime ideals among `ideals`.
pub fn primes(ideals: &[Ideal]) -> Vec<Ideal> {
    ideals.iter().filter(|i| i.is_prime()).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn s(k: u32) -> SemiringCtx {
        SemiringCtx::new(k).unwrap()
    }

    fn ideal(k: u32, members: &[Elem]) -> Ideal {
        Ideal::new(&s(k), members).unwrap()
    }

    use Elem::{Fin, Many, Zero};

    #[test]
    fn enumeration_small_orders() {
        let listed = |k| enumerate_ideals(&s(k)).unwrap().iter().map(|i| i.members()).collect::<Vec<_>>();
        assert_eq!(listed(1), vec![vec![Zero], vec![Zero, Many], vec![Zero, Fin(1), Many]]);
        assert_eq!(
            listed(2),
            vec![vec![Zero], vec![Zero, Many], vec![Zero, Fin(2), Many], vec![Zero, Fin(1), Fin(2), Many]]
        );
        for k in 1..=10 {
            let all = enumerate_ideals(&s(k)).unwrap();
            assert!(all.contains(&Ideal::smallest_nonzero(&s(k)).unwrap()));
            assert!(all.contains(&Ideal::maximal(&s(k)).unwrap()));
            assert!(all.contains(&Ideal::whole(&s(k)).unwrap()));
        }
    }

    #[test]
    fn generated_ideals() {
        for k in 1..=8 {
            assert_eq!(principal(&s(k), Many).unwrap().members(), [Zero, Many]);
            assert!(principal(&s(k), Zero).unwrap().is_zero());
        }
        assert_eq!(principal(&s(3), Fin(2)).unwrap().members(), [Zero, Fin(2), Many]);
        assert_eq!(principal(&s(4), Fin(2)).unwrap().members(), [Zero, Fin(2), Fin(4), Many]);
        assert!(principal(&s(4), Fin(5)).is_err());
    }

    #[test]
    fn new_rejects_non_ideals() {
        assert_eq!(Ideal::new(&s(4), &[Fin(2)]), Err(Error::NotAnIdeal("not closed under multiplication by S_k")));
        assert!(Ideal::new(&s(4), &[Fin(2), Fin(4), Many]).is_ok());
        assert!(Ideal::new(&s(4), &[Fin(3), Many]).is_ok());
        assert_eq!(
            Ideal::new(&s(4), &[Fin(2), Many]),
            Err(Error::NotAnIdeal("not closed under multiplication by S_k"))
        );
        // absorbing but 2 + 3 = 5 is missing
        let absorbing_only = [Fin(2), Fin(3), Fin(4), Fin(6), Many];
        assert_eq!(Ideal::new(&s(7), &absorbing_only), Err(Error::NotAnIdeal("not closed under addition")));
    }

    #[test]
    fn prime_examples() {
        for k in 1..=6 {
            assert!(Ideal::zero(&s(k)).unwrap().is_prime());
            assert!(Ideal::maximal(&s(k)).unwrap().is_prime());
            assert!(!Ideal::whole(&s(k)).unwrap().is_prime());
        }
        assert!(!ideal(3, &[Fin(2), Many]).is_prime());
    }

    #[test]
    fn maximal_examples() {
        assert_eq!(Ideal::maximal(&s(5)).unwrap().is_maximal(), Ok(true));
        assert_eq!(Ideal::smallest_nonzero(&s(5)).unwrap().is_maximal(), Ok(false));
        assert_eq!(Ideal::smallest_nonzero(&s(1)).unwrap().is_maximal(), Ok(true));
        assert!(Ideal::maximal(&s(17)).unwrap().is_maximal().is_err());
    }

    #[test]
    fn subtractive_examples() {
        assert!(Ideal::zero(&s(4)).unwrap().is_subtractive());
        assert!(!Ideal::smallest_nonzero(&s(4)).unwrap().is_subtractive());
        assert!(Ideal::whole(&s(4)).unwrap().is_subtractive());
    }

    #[test]
    fn radical_examples() {
        let c = s(4);
        assert_eq!(Ideal::smallest_nonzero(&c).unwrap().radical(), Ideal::maximal(&c).unwrap());
        assert_eq!(Ideal::zero(&c).unwrap().radical(), Ideal::zero(&c).unwrap());
        assert_eq!(Ideal::whole(&c).unwrap().radical(), Ideal::whole(&c).unwrap());
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let c = s(5);
        let a = ideal(5, &[Fin(3), Fin(4), Many]);
        let b = ideal(5, &[Fin(4), Fin(5), Many]);
        assert!(a < b);
        assert!(Ideal::zero(&c).unwrap() < Ideal::smallest_nonzero(&c).unwrap());
        assert_eq!(format!("{}", ideal(3, &[Fin(2), Many])), "{0, 2, m}");
    }

    #[test]
    fn sums_and_products_mix_orders_only_with_error() {
        let a = Ideal::whole(&s(3)).unwrap();
        let b = Ideal::whole(&s(4)).unwrap();
        assert!(a.sum(&b).is_err());
        assert!(a.product(&b).is_err());
    }

    use alloc::format;
}

use crate::elem::Elem;
use crate::error::{Error, Result};

/// The Indigenous semiring `S_k` of a fixed order `k`.
///
/// Owns all arithmetic over [`Elem`]. The checked operations reject finite
/// values above `k`; elements from a different order are never silently
/// saturated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SemiringCtx {
    k: u32,
    #[cfg(feature = "fault-injection")]
    fault: Option<Fault>,
}

/// A deliberately broken arithmetic rule, used to check that the
/// verification suite notices corrupted semirings.
#[cfg(feature = "fault-injection")]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fault {
    /// Finite sums saturate at `a + b >= k` instead of `a + b > k`.
    AddSaturatesAtK,
    /// `0 ⊙ m = m` instead of `0`.
    ZeroDoesNotAbsorbMany,
    /// `m ⊙ a = a` for finite `a`.
    ManyIsMultiplicativeIdentity,
}

#[cfg(feature = "fault-injection")]
impl Fault {
    pub const ALL: [Fault; 3] =
        [Fault::AddSaturatesAtK, Fault::ZeroDoesNotAbsorbMany, Fault::ManyIsMultiplicativeIdentity];

    fn add(self, k: u32, a: Elem, b: Elem) -> Option<Elem> {
        match (self, a, b) {
            (Fault::AddSaturatesAtK, Elem::Fin(x), Elem::Fin(y)) if u64::from(x) + u64::from(y) >= u64::from(k) => {
                Some(Elem::Many)
            }
            _ => None,
        }
    }

    fn mul(self, a: Elem, b: Elem) -> Option<Elem> {
        match (self, a, b) {
            (Fault::ZeroDoesNotAbsorbMany, Elem::Zero, Elem::Many)
            | (Fault::ZeroDoesNotAbsorbMany, Elem::Many, Elem::Zero) => Some(Elem::Many),
            (Fault::ManyIsMultiplicativeIdentity, Elem::Many, Elem::Fin(x))
            | (Fault::ManyIsMultiplicativeIdentity, Elem::Fin(x), Elem::Many) => Some(Elem::Fin(x)),
            _ => None,
        }
    }
}

impl SemiringCtx {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(SemiringCtx {
            k,
            #[cfg(feature = "fault-injection")]
            fault: None,
        })
    }

    /// A context whose arithmetic deviates from `S_k` by one rule.
    #[cfg(feature = "fault-injection")]
    pub fn with_fault(k: u32, fault: Fault) -> Result<Self> {
        let mut ctx = Self::new(k)?;
        ctx.fault = Some(fault);
        Ok(ctx)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of elements of `S_k`, i.e. `k + 2`.
    pub fn len(&self) -> usize {
        self.k as usize + 2
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All elements in ascending order: `0, 1, …, k, m`.
    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + Clone {
        core::iter::once(Elem::Zero).chain((1..=self.k).map(Elem::Fin)).chain(core::iter::once(Elem::Many))
    }

    /// The presemiring `I_k = S_k \ {0}`.
    pub fn nonzero_elements(&self) -> impl DoubleEndedIterator<Item = Elem> + Clone {
        (1..=self.k).map(Elem::Fin).chain(core::iter::once(Elem::Many))
    }

    /// Inverse of [`Elem::index`].
    pub fn elem_at(&self, index: usize) -> Option<Elem> {
        match index {
            0 => Some(Elem::Zero),
            i if i <= self.k as usize => Some(Elem::Fin(i as u32)),
            i if i == self.k as usize + 1 => Some(Elem::Many),
            _ => None,
        }
    }

    pub fn contains(&self, a: Elem) -> bool {
        match a {
            Elem::Fin(n) => (1..=self.k).contains(&n),
            Elem::Zero | Elem::Many => true,
        }
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        match a {
            Elem::Fin(n) if !self.contains(a) => Err(Error::ContextMismatch { value: n, k: self.k }),
            _ => Ok(a),
        }
    }

    /// Parses a rendered element and checks it belongs to `S_k`.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        self.check(s.parse()?)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.plus(self.check(a)?, self.check(b)?))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.times(self.check(a)?, self.check(b)?))
    }

    /// The total order `0 < 1 < … < k < m`.
    pub fn leq(&self, a: Elem, b: Elem) -> Result<bool> {
        Ok(self.check(a)? <= self.check(b)?)
    }

    /// The epimorphism `N -> S_k`: `0 ↦ 0`, `n ↦ n` for `n <= k`, otherwise `m`.
    pub fn canonical_map(&self, n: u64) -> Elem {
        match n {
            0 => Elem::Zero,
            n if n <= u64::from(self.k) => Elem::Fin(n as u32),
            _ => Elem::Many,
        }
    }

    /// Closed form: the only unit of `S_k` is `1`.
    pub fn is_unit(&self, a: Elem) -> Result<bool> {
        Ok(self.check(a)? == Elem::ONE)
    }

    pub fn is_idempotent(&self, a: Elem) -> Result<bool> {
        let a = self.check(a)?;
        Ok(self.times(a, a) == a)
    }

    /// `a^n` with `a^0 = 1`.
    pub fn pow(&self, a: Elem, n: u32) -> Result<Elem> {
        let a = self.check(a)?;
        Ok((0..n).fold(Elem::ONE, |acc, _| self.times(acc, a)))
    }

    /// Unchecked addition; operands must already belong to `S_k`.
    pub(crate) fn plus(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.contains(a) && self.contains(b));
        #[cfg(feature = "fault-injection")]
        if let Some(r) = self.fault.and_then(|f| f.add(self.k, a, b)) {
            return r;
        }
        match (a, b) {
            (Elem::Zero, x) | (x, Elem::Zero) => x,
            (Elem::Many, _) | (_, Elem::Many) => Elem::Many,
            (Elem::Fin(x), Elem::Fin(y)) => self.canonical_map(u64::from(x) + u64::from(y)),
        }
    }

    /// Unchecked multiplication; operands must already belong to `S_k`.
    pub(crate) fn times(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!(self.contains(a) && self.contains(b));
        #[cfg(feature = "fault-injection")]
        if let Some(r) = self.fault.and_then(|f| f.mul(a, b)) {
            return r;
        }
        match (a, b) {
            (Elem::Zero, _) | (_, Elem::Zero) => Elem::Zero,
            (Elem::Many, _) | (_, Elem::Many) => Elem::Many,
            (Elem::Fin(x), Elem::Fin(y)) => self.canonical_map(u64::from(x) * u64::from(y)),
        }
    }

    pub(crate) fn ensure_within(&self, what: &'static str, limit: u32) -> Result<()> {
        if self.k > limit {
            Err(Error::BoundExceeded { what, k: self.k, limit })
        } else {
            Ok(())
        }
    }

    pub(crate) fn same_order(&self, other: &SemiringCtx) -> Result<()> {
        if self.k == other.k {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.k, right: other.k })
        }
    }
}

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{enumerate_ideals_within, Ideal};
use crate::tables::OperationTables;
use crate::{limits, Error, Result, SemiringCtx};

/// `Id(S_k)`: all ideals under ideal sum and ideal product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSemiring {
    ctx: SemiringCtx,
    /// Canonically ordered; index `0` is `{0}`, the last is `S_k`.
    pub elements: Vec<Ideal>,
    pub sum: Vec<Vec<usize>>,
    pub product: Vec<Vec<usize>>,
}

impl IdealSemiring {
    pub fn new(ctx: &SemiringCtx) -> Result<Self> {
        Self::within(ctx, limits::IDEALS)
    }

    pub fn within(ctx: &SemiringCtx, limit: u32) -> Result<Self> {
        let elements = enumerate_ideals_within(ctx, limit)?;
        let position = |i: &Ideal| {
            elements.binary_search(i).map_err(|_| Error::NotAnIdeal("ideal operation left the enumerated lattice"))
        };
        let table = |op: fn(&Ideal, &Ideal) -> Result<Ideal>| -> Result<Vec<Vec<usize>>> {
            elements.iter().map(|a| elements.iter().map(|b| position(&op(a, b)?)).collect()).collect()
        };
        let sum = table(Ideal::sum)?;
        let product = table(Ideal::product)?;
        Ok(IdealSemiring { ctx: *ctx, elements, sum, product })
    }

    pub fn ctx(&self) -> &SemiringCtx {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, ideal: &Ideal) -> Option<usize> {
        self.elements.binary_search(ideal).ok()
    }

    pub fn zero_index(&self) -> usize {
        self.elements.iter().position(Ideal::is_zero).unwrap_or(0)
    }

    pub fn one_index(&self) -> usize {
        self.elements.iter().position(|i| !i.is_proper()).unwrap_or(self.len() - 1)
    }

    pub fn tables(&self) -> OperationTables {
        OperationTables {
            add: self.sum.clone(),
            mul: self.product.clone(),
            zero: self.zero_index(),
            one: self.one_index(),
        }
    }

    pub fn is_additively_idempotent(&self) -> bool {
        (0..self.len()).all(|i| self.sum[i][i] == i)
    }

    /// `{0}` is the additive identity and `S_k` the multiplicative one.
    pub fn has_identities(&self) -> bool {
        let (z, o) = (self.zero_index(), self.one_index());
        (0..self.len())
            .all(|i| self.sum[z][i] == i && self.sum[i][z] == i && self.product[o][i] == i && self.product[i][o] == i)
    }

    pub fn is_zerosumfree(&self) -> bool {
        self.tables().is_zerosumfree()
    }

    pub fn is_entire(&self) -> bool {
        self.tables().is_entire()
    }

    pub fn is_information_algebra(&self) -> bool {
        self.is_zerosumfree() && self.is_entire()
    }

    /// `{0} ⊆ {0, m} ⊆ I ⊆ S_k \ {1} ⊆ S_k` for every proper nonzero `I`.
    pub fn chain_holds(&self) -> bool {
        let (Ok(small), Ok(maximal)) = (Ideal::smallest_nonzero(&self.ctx), Ideal::maximal(&self.ctx)) else {
            return false;
        };
        self.elements
            .iter()
            .filter(|i| !i.is_zero() && i.is_proper())
            .all(|i| small.is_subset(i) && i.is_subset(&maximal))
    }

    /// `I · {0, m} = {0, m}` for every nonzero ideal `I`.
    pub fn smallest_nonzero_absorbs(&self) -> bool {
        let Some(s) = Ideal::smallest_nonzero(&self.ctx).ok().and_then(|s| self.index_of(&s)) else {
            return false;
        };
        (0..self.len())
            .filter(|&i| !self.elements[i].is_zero())
            .all(|i| self.product[i][s] == s && self.product[s][i] == s)
    }

    /// Indices of the nonzero proper ideals.
    pub fn nonzero_proper(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.elements[i].is_zero() && self.elements[i].is_proper()).collect()
    }

    /// Every distinct product of `n` nonzero proper ideals, `n >= 1`.
    pub fn products_of_length(&self, n: u32) -> BTreeSet<usize> {
        let base: BTreeSet<usize> = self.nonzero_proper().into_iter().collect();
        let mut current = base.clone();
        for _ in 1..n {
            current = current
                .iter()
                .flat_map(|&p| base.iter().map(move |&q| (p, q)))
                .map(|(p, q)| self.product[p][q])
                .collect();
        }
        current
    }

    /// Least `n` such that every product of `n` nonzero proper ideals is
    /// `{0, m}`; `None` if the products never settle there.
    pub fn nilpotency_index(&self) -> Option<u32> {
        let s = self.index_of(&Ideal::smallest_nonzero(&self.ctx).ok()?)?;
        let base: BTreeSet<usize> = self.nonzero_proper().into_iter().collect();
        let mut current = base.clone();
        let mut seen = Vec::new();
        for n in 1.. {
            if current.len() == 1 && current.contains(&s) {
                return Some(n);
            }
            if seen.contains(&current) {
                return None;
            }
            seen.push(current.clone());
            current = current.iter().flat_map(|&p| base.iter().map(move |&q| self.product[p][q])).collect();
        }
        None
    }
}

/// Least `n` with `2ⁿ > k`: products of this many nonzero proper ideals
/// are always `{0, m}`.
pub fn nilpotency_guarantee(k: u32) -> u32 {
    u32::BITS - k.leading_zeros()
}

pub fn nilpotency_index(ctx: &SemiringCtx) -> Result<u32> {
    IdealSemiring::new(ctx)?
        .nilpotency_index()
        .ok_or(Error::NotAnIdeal("products of nonzero proper ideals never reach {0, m}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Elem;

    #[test]
    fn guarantee_is_least_power_of_two_exponent() {
        for k in 1..=1000u32 {
            let n = nilpotency_guarantee(k);
            assert!(2u64.pow(n) > u64::from(k));
            assert!(2u64.pow(n - 1) <= u64::from(k));
        }
    }

    #[test]
    fn nilpotency_examples() {
        let s = |k| SemiringCtx::new(k).unwrap();
        assert!(nilpotency_index(&s(4)).unwrap() <= 3);
        assert_eq!(nilpotency_index(&s(1)), Ok(1));
        assert!(nilpotency_index(&s(8)).unwrap() <= 4);
    }

    #[test]
    fn k2_products() {
        let ctx = SemiringCtx::new(2).unwrap();
        let ids = IdealSemiring::new(&ctx).unwrap();
        let small = ids.index_of(&Ideal::smallest_nonzero(&ctx).unwrap()).unwrap();
        let two = ids.index_of(&Ideal::new(&ctx, &[Elem::Fin(2), Elem::Many]).unwrap()).unwrap();
        assert_eq!(ids.product[small][two], small);
        assert_eq!(ids.product[two][two], small);
        assert!(ids.is_additively_idempotent() && ids.has_identities());
    }

    #[test]
    fn chain_for_k4() {
        let ids = IdealSemiring::new(&SemiringCtx::new(4).unwrap()).unwrap();
        assert!(ids.chain_holds());
        assert!(ids.smallest_nonzero_absorbs());
        assert!(ids.is_information_algebra());
    }
}

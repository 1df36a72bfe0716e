use alloc::vec::Vec;

use super::{enumerate_ideals_within, Ideal};
use crate::{limits, Result, SemiringCtx};

/// The prime spectrum with its Zariski closed sets `V(I) = { P ⊇ I }`,
/// computed extensionally over every ideal `I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumView {
    /// Prime ideals, canonically ordered.
    pub points: Vec<Ideal>,
    /// Each closed set lists indices into `points`; the family is sorted
    /// and free of duplicates.
    pub closed_sets: Vec<Vec<usize>>,
}

impl SpectrumView {
    pub fn new(ctx: &SemiringCtx) -> Result<Self> {
        Self::within(ctx, limits::IDEALS)
    }

    pub fn within(ctx: &SemiringCtx, limit: u32) -> Result<Self> {
        Ok(Self::from_ideals(&enumerate_ideals_within(ctx, limit)?))
    }

    pub fn from_ideals(ideals: &[Ideal]) -> Self {
        let points = super::primes(ideals);
        let mut closed_sets: Vec<Vec<usize>> =
            ideals.iter().map(|i| (0..points.len()).filter(|&p| i.is_subset(&points[p])).collect()).collect();
        closed_sets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        closed_sets.dedup();
        SpectrumView { points, closed_sets }
    }

    /// `V(I)` as indices into `points`.
    pub fn vanishing_set(&self, ideal: &Ideal) -> Vec<usize> {
        (0..self.points.len()).filter(|&p| ideal.is_subset(&self.points[p])).collect()
    }

    /// Two points and exactly three closed sets: the only such topology is
    /// the Sierpiński space.
    pub fn is_sierpinski(&self) -> bool {
        let full: Vec<usize> = (0..self.points.len()).collect();
        self.points.len() == 2
            && self.closed_sets.len() == 3
            && self.closed_sets.contains(&Vec::new())
            && self.closed_sets.contains(&full)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_for_small_orders() {
        for k in [1, 3, 7] {
            let spec = SpectrumView::new(&SemiringCtx::new(k).unwrap()).unwrap();
            assert_eq!(spec.points.len(), 2, "k={k}");
            assert_eq!(spec.closed_sets.len(), 3, "k={k}");
            assert!(spec.is_sierpinski());
        }
    }

    #[test]
    fn vanishing_set_of_smallest_nonzero_ideal() {
        let ctx = SemiringCtx::new(10).unwrap();
        let spec = SpectrumView::new(&ctx).unwrap();
        let v = spec.vanishing_set(&Ideal::smallest_nonzero(&ctx).unwrap());
        assert_eq!(v.len(), 1);
        assert_eq!(spec.points[v[0]], Ideal::maximal(&ctx).unwrap());
    }
}

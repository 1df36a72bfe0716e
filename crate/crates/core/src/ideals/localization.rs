use alloc::vec;
use alloc::vec::Vec;

use crate::tables::OperationTables;
use crate::{limits, Elem, Error, Result, SemiringCtx};

/// `U⁻¹S_k`: fractions `a/u` modulo `a/u ~ b/v ⇔ ∃t ∈ U: t·a·v = t·b·u`.
///
/// Construction checks that the relation is an equivalence and that both
/// operations are independent of the chosen representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalizedSemiring {
    ctx: SemiringCtx,
    units: Vec<Elem>,
    /// Each class lists its fractions `(numerator, denominator)`.
    pub classes: Vec<Vec<(Elem, Elem)>>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero_class: usize,
    pub one_class: usize,
}

fn validate_multiplicative_set(ctx: &SemiringCtx, units: &[Elem]) -> Result<Vec<Elem>> {
    let mut u: Vec<Elem> = units.iter().map(|&a| ctx.check(a)).collect::<Result<_>>()?;
    u.sort();
    u.dedup();
    if !u.contains(&Elem::ONE) {
        return Err(Error::InvalidMultiplicativeSet("must contain 1"));
    }
    if u.contains(&Elem::Zero) {
        return Err(Error::InvalidMultiplicativeSet("must not contain 0"));
    }
    if u.iter().any(|&a| u.iter().any(|&b| u.binary_search(&ctx.times(a, b)).is_err())) {
        return Err(Error::InvalidMultiplicativeSet("not closed under multiplication"));
    }
    Ok(u)
}

impl LocalizedSemiring {
    pub fn new(ctx: &SemiringCtx, units: &[Elem]) -> Result<Self> {
        let units = validate_multiplicative_set(ctx, units)?;
        let times = |a, b| ctx.times(a, b);
        let related = |(a, u): (Elem, Elem), (b, v): (Elem, Elem)| {
            units.iter().any(|&t| times(t, times(a, v)) == times(t, times(b, u)))
        };

        let fractions: Vec<(Elem, Elem)> = ctx.elements().flat_map(|a| units.iter().map(move |&u| (a, u))).collect();
        let mut classes: Vec<Vec<(Elem, Elem)>> = Vec::new();
        // class id of fraction number `a.index * |U| + position of u`
        let mut class_of = vec![usize::MAX; fractions.len()];
        for (f, &p) in fractions.iter().enumerate() {
            match classes.iter().position(|c| related(c[0], p)) {
                Some(c) => {
                    classes[c].push(p);
                    class_of[f] = c;
                }
                None => {
                    class_of[f] = classes.len();
                    classes.push(vec![p]);
                }
            }
        }
        for (i, ci) in classes.iter().enumerate() {
            for (j, cj) in classes.iter().enumerate() {
                let expect = i == j;
                if ci.iter().any(|&p| cj.iter().any(|&q| related(p, q) != expect)) {
                    return Err(Error::IllDefinedQuotient("the fraction relation is not an equivalence"));
                }
            }
        }

        let k = ctx.k();
        let locate = |(a, u): (Elem, Elem)| -> usize {
            let pos = units.binary_search(&u).unwrap_or(0);
            class_of[a.index(k) * units.len() + pos]
        };
        let table = |op: &dyn Fn((Elem, Elem), (Elem, Elem)) -> (Elem, Elem), what| -> Result<Vec<Vec<usize>>> {
            classes
                .iter()
                .map(|ci| {
                    classes
                        .iter()
                        .map(|cj| {
                            let first = locate(op(ci[0], cj[0]));
                            let agrees = ci.iter().all(|&p| cj.iter().all(|&q| locate(op(p, q)) == first));
                            if agrees {
                                Ok(first)
                            } else {
                                Err(Error::IllDefinedQuotient(what))
                            }
                        })
                        .collect()
                })
                .collect()
        };
        let add = table(
            &|(a, u), (b, v)| (ctx.plus(times(a, v), times(b, u)), times(u, v)),
            "addition depends on representatives",
        )?;
        let mul = table(&|(a, u), (b, v)| (times(a, b), times(u, v)), "multiplication depends on representatives")?;
        let zero_class = locate((Elem::Zero, Elem::ONE));
        let one_class = locate((Elem::ONE, Elem::ONE));
        Ok(LocalizedSemiring { ctx: *ctx, units, classes, add, mul, zero_class, one_class })
    }

    pub fn ctx(&self) -> &SemiringCtx {
        &self.ctx
    }

    /// The multiplicative set, sorted.
    pub fn units(&self) -> &[Elem] {
        &self.units
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn tables(&self) -> OperationTables {
        OperationTables { add: self.add.clone(), mul: self.mul.clone(), zero: self.zero_class, one: self.one_class }
    }

    pub fn is_entire(&self) -> bool {
        self.tables().is_entire()
    }

    pub fn is_zerosumfree(&self) -> bool {
        self.tables().is_zerosumfree()
    }

    pub fn is_boolean(&self) -> bool {
        self.tables().is_isomorphic_to(&OperationTables::boolean())
    }

    /// Whether the quotient is isomorphic to `S_k` itself.
    pub fn is_isomorphic_to_base(&self) -> bool {
        self.tables().is_isomorphic_to(&OperationTables::of_semiring(&self.ctx))
    }

    /// Whether `U` contains a finite element `a > 1`.
    pub fn has_finite_nonunit(&self) -> bool {
        self.units.iter().any(|&u| matches!(u, Elem::Fin(n) if n > 1))
    }
}

/// Every multiplicatively closed `U ⊆ S_k \ {0}` with `1 ∈ U`, for
/// `k <= limits::IDEALS`.
pub fn multiplicative_sets(ctx: &SemiringCtx) -> Result<Vec<Vec<Elem>>> {
    ctx.ensure_within("multiplicative set enumeration", limits::IDEALS)?;
    let others: Vec<Elem> = ctx.nonzero_elements().filter(|&a| a != Elem::ONE).collect();
    Ok((0u64..1 << others.len())
        .filter_map(|mask| {
            let u: Vec<Elem> = core::iter::once(Elem::ONE)
                .chain(others.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &a)| a))
                .collect();
            validate_multiplicative_set(ctx, &u).ok()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Elem::{Fin, Many, Zero};

    fn s(k: u32) -> SemiringCtx {
        SemiringCtx::new(k).unwrap()
    }

    #[test]
    fn trivial_set_reproduces_base() {
        let q = LocalizedSemiring::new(&s(5), &[Elem::ONE]).unwrap();
        assert_eq!(q.class_count(), 7);
        assert!(q.is_isomorphic_to_base());
    }

    #[test]
    fn finite_nonunit_collapses_to_boolean() {
        let q = LocalizedSemiring::new(&s(3), &[Fin(1), Fin(2), Many]).unwrap();
        assert_eq!(q.class_count(), 2);
        assert!(q.is_boolean());
    }

    #[test]
    fn many_alone_also_collapses() {
        let q = LocalizedSemiring::new(&s(2), &[Fin(1), Many]).unwrap();
        assert_eq!(q.class_count(), 2);
        assert!(q.is_boolean());
        assert!(!q.has_finite_nonunit());
    }

    #[test]
    fn invalid_sets_are_rejected() {
        assert!(matches!(LocalizedSemiring::new(&s(3), &[Fin(2), Many]), Err(Error::InvalidMultiplicativeSet(_))));
        assert!(matches!(LocalizedSemiring::new(&s(3), &[Fin(1), Zero]), Err(Error::InvalidMultiplicativeSet(_))));
        // 2·2 = 4 is missing
        assert!(matches!(
            LocalizedSemiring::new(&s(5), &[Fin(1), Fin(2), Many]),
            Err(Error::InvalidMultiplicativeSet(_))
        ));
        assert!(LocalizedSemiring::new(&s(3), &[Fin(1), Fin(4)]).is_err());
    }

    #[test]
    fn multiplicative_sets_of_s2() {
        let sets = multiplicative_sets(&s(2)).unwrap();
        assert_eq!(sets, vec![vec![Fin(1)], vec![Fin(1), Many], vec![Fin(1), Fin(2), Many]]);
    }
}

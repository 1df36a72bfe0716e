//! Finite semirings given by Cayley tables, and isomorphism search between them.

use alloc::vec;
use alloc::vec::Vec;

use crate::SemiringCtx;

/// Addition and multiplication tables over the indices `0 .. len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperationTables {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub zero: usize,
    pub one: usize,
}

impl OperationTables {
    pub fn len(&self) -> usize {
        self.add.len()
    }

    pub fn is_empty(&self) -> bool {
        self.add.is_empty()
    }

    /// The Boolean semiring `{0, 1}` with `1 + 1 = 1`.
    pub fn boolean() -> Self {
        OperationTables { add: vec![vec![0, 1], vec![1, 1]], mul: vec![vec![0, 0], vec![0, 1]], zero: 0, one: 1 }
    }

    /// Tables of `S_k`, indexed by [`crate::Elem::index`].
    pub fn of_semiring(ctx: &SemiringCtx) -> Self {
        let k = ctx.k();
        let carrier: Vec<_> = ctx.elements().collect();
        let table = |op: &dyn Fn(_, _) -> crate::Elem| {
            carrier.iter().map(|&a| carrier.iter().map(|&b| op(a, b).index(k)).collect()).collect()
        };
        OperationTables { add: table(&|a, b| ctx.plus(a, b)), mul: table(&|a, b| ctx.times(a, b)), zero: 0, one: 1 }
    }

    /// No `x + y = 0` with `x, y` not both zero.
    pub fn is_zerosumfree(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| self.add[x][y] != self.zero || (x == self.zero && y == self.zero)))
    }

    /// No zero divisors.
    pub fn is_entire(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| self.mul[x][y] != self.zero || x == self.zero || y == self.zero))
    }

    /// Searches for a bijection `φ` with `φ(x + y) = φ(x) + φ(y)` and
    /// `φ(xy) = φ(x)φ(y)`. Backtracks over partial assignments, pruning any
    /// assignment that already contradicts a fully assigned table entry.
    pub fn find_isomorphism(&self, other: &OperationTables) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let mut image = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.extend(other, 0, &mut image, &mut used) {
            Some(image)
        } else {
            None
        }
    }

    pub fn is_isomorphic_to(&self, other: &OperationTables) -> bool {
        self.find_isomorphism(other).is_some()
    }

    fn extend(&self, other: &OperationTables, next: usize, image: &mut [usize], used: &mut [bool]) -> bool {
        let n = self.len();
        if next == n {
            return image[self.zero] == other.zero && image[self.one] == other.one && self.preserved_by(other, image);
        }
        for target in 0..n {
            if used[target] {
                continue;
            }
            image[next] = target;
            used[target] = true;
            if self.consistent(other, next, image) && self.extend(other, next + 1, image, used) {
                return true;
            }
            used[target] = false;
            image[next] = usize::MAX;
        }
        false
    }

    fn preserved_by(&self, other: &OperationTables, image: &[usize]) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                other.add[image[a]][image[b]] == image[self.add[a][b]]
                    && other.mul[image[a]][image[b]] == image[self.mul[a][b]]
            })
        })
    }

    /// Checks every table entry involving `newest` whose operands and result
    /// are all assigned.
    fn consistent(&self, other: &OperationTables, newest: usize, image: &[usize]) -> bool {
        let assigned = |x: usize| image[x] != usize::MAX;
        (0..=newest).all(|x| {
            [(newest, x), (x, newest)].iter().all(|&(a, b)| {
                [(&self.add, &other.add), (&self.mul, &other.mul)].iter().all(|(mine, theirs)| {
                    let r = mine[a][b];
                    !assigned(r) || theirs[image[a]][image[b]] == image[r]
                })
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semiring_is_isomorphic_to_itself_only_by_identity() {
        for k in 1..=6 {
            let t = OperationTables::of_semiring(&SemiringCtx::new(k).unwrap());
            let phi = t.find_isomorphism(&t).unwrap();
            assert_eq!(phi, (0..t.len()).collect::<Vec<_>>());
            assert!(t.is_entire() && t.is_zerosumfree());
        }
    }

    #[test]
    fn different_orders_are_not_isomorphic() {
        let s2 = OperationTables::of_semiring(&SemiringCtx::new(2).unwrap());
        let s3 = OperationTables::of_semiring(&SemiringCtx::new(3).unwrap());
        assert!(!s2.is_isomorphic_to(&s3));
        assert!(!OperationTables::boolean().is_isomorphic_to(&s2));
    }

    #[test]
    fn s1_is_not_boolean_but_boolean_is_boolean() {
        let b = OperationTables::boolean();
        assert!(b.is_isomorphic_to(&b));
        assert!(b.is_zerosumfree() && b.is_entire());
        // Z/2 addition breaks zerosumfree and the isomorphism.
        let z2 = OperationTables { add: vec![vec![0, 1], vec![1, 0]], ..b.clone() };
        assert!(!z2.is_zerosumfree());
        assert!(!z2.is_isomorphic_to(&b));
    }
}

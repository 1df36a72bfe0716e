use alloc::vec::Vec;

use num_integer::Integer;

use super::{Degree, Poly};
use crate::{limits, Elem, Error, Result, SemiringCtx};

/// Closed-form irreducibility of `αX² + β` over `S_k`, `α ≠ 0`.
///
/// Irreducible exactly when both coefficients are finite and coprime, or
/// `{α, β} = {m, 1}` with `α = m, β = 1` or `α = 1, β = m`. `m` never enters
/// a gcd, and `β = 0` is reducible (`αX² = X · αX`).
pub fn quadratic_irreducible(ctx: &SemiringCtx, alpha: Elem, beta: Elem) -> Result<bool> {
    let (alpha, beta) = (ctx.check(alpha)?, ctx.check(beta)?);
    if alpha.is_zero() {
        return Err(Error::InvalidArgument("the leading coefficient must be nonzero"));
    }
    Ok(match (alpha, beta) {
        (Elem::Fin(a), Elem::Fin(b)) => a.gcd(&b) == 1,
        (Elem::Many, b) | (b, Elem::Many) => b == Elem::ONE,
        _ => false,
    })
}

/// Exhaustive search for `f = g · h` with `g`, `h` nonunits, over
/// `deg f <= 2` and `k <= limits::FACTOR_ORACLE`.
pub fn factorization_oracle(f: &Poly) -> Result<Option<(Poly, Poly)>> {
    factorization_oracle_within(f, limits::FACTOR_ORACLE)
}

pub fn factorization_oracle_within(f: &Poly, limit: u32) -> Result<Option<(Poly, Poly)>> {
    let ctx = f.ctx();
    ctx.ensure_within("factorization oracle", limit)?;
    let degree = match f.degree() {
        Degree::NegInfinity => return Err(Error::InvalidArgument("the zero polynomial has no factorizations")),
        Degree::Finite(d) if d > 2 => return Err(Error::InvalidArgument("the oracle handles degree <= 2")),
        Degree::Finite(d) => d,
    };
    let nonunits = |d| -> Vec<Poly> { Poly::all_of_degree(ctx, d).into_iter().filter(|p| !p.is_unit()).collect() };
    // degrees split as (0, d), (1, d - 1), …; the product is commutative
    for low in 0..=degree / 2 {
        let (gs, hs) = (nonunits(low), nonunits(degree - low));
        for g in &gs {
            for h in &hs {
                if g.checked_mul(h)? == *f {
                    return Ok(Some((g.clone(), h.clone())));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Elem::{Fin, Many, Zero};

    fn s(k: u32) -> SemiringCtx {
        SemiringCtx::new(k).unwrap()
    }

    fn quadratic(k: u32, alpha: Elem, beta: Elem) -> Poly {
        Poly::new(&s(k), &[beta, Zero, alpha]).unwrap()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(quadratic_irreducible(&s(5), Fin(2), Fin(3)), Ok(true));
        for k in 1..=6 {
            assert_eq!(quadratic_irreducible(&s(k), Many, Fin(1)), Ok(true));
            assert_eq!(quadratic_irreducible(&s(k), Fin(1), Many), Ok(true));
            assert_eq!(quadratic_irreducible(&s(k), Many, Many), Ok(false));
            assert_eq!(quadratic_irreducible(&s(k), Fin(1), Zero), Ok(false));
        }
        assert_eq!(quadratic_irreducible(&s(4), Fin(2), Fin(4)), Ok(false));
        assert!(quadratic_irreducible(&s(4), Zero, Fin(1)).is_err());
        assert!(quadratic_irreducible(&s(4), Fin(5), Fin(1)).is_err());
    }

    #[test]
    fn oracle_examples() {
        let (g, h) = factorization_oracle(&quadratic(3, Many, Many)).unwrap().unwrap();
        assert_eq!(g.checked_mul(&h).unwrap(), quadratic(3, Many, Many));
        assert!(!g.is_unit() && !h.is_unit());

        assert_eq!(factorization_oracle(&quadratic(5, Fin(2), Fin(3))), Ok(None));

        // the witness factor is the constant γ = 2
        for f in [quadratic(4, Many, Fin(2)), quadratic(4, Fin(2), Fin(4))] {
            let (g, h) = factorization_oracle(&f).unwrap().unwrap();
            assert_eq!(g, Poly::constant(&s(4), Fin(2)).unwrap());
            assert_eq!(g.checked_mul(&h).unwrap(), f);
        }
        let (_, h) = factorization_oracle(&quadratic(4, Fin(2), Fin(4))).unwrap().unwrap();
        assert_eq!(h, quadratic(4, Fin(1), Fin(2)));
    }

    #[test]
    fn oracle_limits() {
        assert!(matches!(factorization_oracle(&quadratic(7, Fin(2), Fin(3))), Err(Error::BoundExceeded { .. })));
        assert!(factorization_oracle(&Poly::zero(&s(3))).is_err());
        assert!(factorization_oracle(&Poly::monomial(&s(3), Fin(1), 3).unwrap()).is_err());
    }
}

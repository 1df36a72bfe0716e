//! Exact algebra over the Indigenous semirings `S_k`.
//!
//! `S_k` is the carrier `{0, 1, …, k, m}` where `m` ("many") absorbs every
//! finite result that would exceed `k`. Addition and multiplication agree
//! with the natural numbers until they saturate at `m`; `0` is the additive
//! identity and multiplicative absorber.
//!
//! The crate is `no_std` (with `alloc`) and covers:
//!
//! - [`SemiringCtx`] / [`Elem`]: element arithmetic, the total order and the
//!   canonical map `N -> S_k`;
//! - [`laws`]: exhaustive verification of the semiring axioms;
//! - [`graphs`]: the graph `IG_k` joining `a != b` whenever `a ⊙ b = m`;
//! - [`ideals`]: the ideal lattice, primes, radicals, the spectrum, the ideal
//!   semiring and localizations;
//! - [`series`]: polynomials, truncated power series and quadratic
//!   irreducibility;
//! - [`theorems`]: every structural property above packaged as named claims.
//!
//! ```
//! use indigenous_core::{Elem, SemiringCtx};
//!
//! let s4 = SemiringCtx::new(4).unwrap();
//! assert_eq!(s4.add(Elem::Fin(1), Elem::Fin(2)).unwrap(), Elem::Fin(3));
//! assert_eq!(s4.add(Elem::Fin(2), Elem::Fin(3)).unwrap(), Elem::Many);
//! assert_eq!(s4.mul(Elem::Fin(2), Elem::Fin(2)).unwrap(), Elem::Fin(4));
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod ctx;
mod elem;
mod error;
pub mod graphs;
pub mod ideals;
pub mod laws;
pub mod series;
pub mod tables;
pub mod theorems;

#[cfg(feature = "fault-injection")]
pub use ctx::Fault;
pub use ctx::SemiringCtx;
pub use elem::Elem;
pub use error::{Error, Result};

/// Default exhaustive-check limits, one per subsystem.
pub mod limits {
    /// Largest `k` accepted by [`crate::laws::verify_laws`].
    pub const LAWS: u32 = 64;
    /// Largest `k` for which the ideal lattice is enumerated.
    pub const IDEALS: u32 = 16;
    /// Largest `k` for exact clique and chromatic numbers.
    pub const GRAPH_EXACT: u32 = 24;
    /// Largest `k` accepted by the brute-force factorization oracle.
    pub const FACTOR_ORACLE: u32 = 6;
    /// Largest `k` for which every multiplicative set is localized.
    pub const LOCALIZATION: u32 = 10;
    /// Largest `k` for which the full ideal semiring tables are built.
    pub const IDEAL_SEMIRING: u32 = 12;
    /// Largest `k` for exhaustive checks over polynomials of degree <= 2.
    pub const POLY_EXHAUSTIVE: u32 = 4;
    /// Largest `k` for exhaustive checks over truncated series windows.
    pub const WINDOW_EXHAUSTIVE: u32 = 3;
    /// Deepest window used by the exhaustive window checks.
    pub const WINDOW_DEPTH: usize = 6;
    /// Largest `k` for which element sets fit the packed bitset representation.
    pub const ELEM_SET: u32 = 126;
}

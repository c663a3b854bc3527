//! Canon labelings of Dyck paths and their descent polynomials.
//!
//! A Dyck path `d` of semilength `n` and a permutation `sigma` of `[n]` give
//! the canon word `can(d, sigma)`: the k-th up-step and the k-th down-step
//! both carry `sigma_k`. Summing `t^des` over all of `S_n` gives the canon
//! descent polynomial `C_d(t)`.
//!
//! The arithmetic is generic over the coefficient type through
//! [`Coefficient`]; [`DescentPolynomial`] is the arbitrary-precision default
//! and [`SmallPolynomial`] the fast `u64` variant.

pub mod canon;
pub mod counting;
pub mod descent;
pub mod dyck;
pub mod error;
pub mod maximizers;
pub mod perm;
pub mod poly;
pub mod sequences;
pub mod verify;

pub use canon::{can, can_tableau, des, CanonWord, DescentCounter, RectTableau};
pub use descent::{
    canon_descent_poly, canon_poly_all, eulerian, eulerian_tilde, fixed_sigma_poly, narayana, tableau_descent_poly,
    tilde_poly, RefinedEulerian, DEFAULT_BRUTE_FORCE_BOUND,
};
pub use dyck::{BounceFactorization, Composition, DyckPath, Step};
pub use error::{Error, Result};
pub use perm::Permutation;
pub use poly::{Coefficient, Polynomial};

pub use num_bigint::BigUint;

/// Exact coefficients, never overflow.
pub type DescentPolynomial = Polynomial<BigUint>;
/// `u64` coefficients; exact for every semilength the brute force can reach.
pub type SmallPolynomial = Polynomial<u64>;

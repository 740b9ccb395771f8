//! Infinite rings handled through monomials: commutative monomial quotients
//! and the algebras `A_n`.

pub mod an;
pub mod comm;

pub use an::{
    an_build, an_localize_normal, an_min_primes, an_verify, centre_scan, AnAlgebra, AnLocalization,
    AnReport, NCMonomial, Product,
};
pub use comm::{
    localize_monomial, min_covers, min_covers_brute, min_primes_monomial, saturate_monomial,
    CommMonomialRing, MonomialLocalization, MonomialPrime,
};

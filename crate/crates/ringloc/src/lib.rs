//! Minimal primes and localizations of finite rings and monomial algebras.

pub mod centre;
pub mod dsl;
pub mod error;
pub mod finring;
pub mod harness;
pub mod ideals;
pub mod localization;
pub mod monomial;

pub use error::{Error, Result};

//! Exact rational algebra kernel: structure-constant algebras, Jordan triple
//! systems, Tits–Kantor–Koecher Lie algebras and universal central
//! extensions, with checkers for the identities and isomorphisms that tie
//! them together.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod corpus;
pub mod error;
pub mod homology;
pub mod jordan;
pub mod linalg;
pub mod scalar;
pub mod uce;

pub use error::{Error, Result};
pub use scalar::Scalar;

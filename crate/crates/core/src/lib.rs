//! Exact-arithmetic model of para-quaternionic Hermitian vector spaces `H ⊗ E`
//! and the classification of their subspaces.
//!
//! Everything is computed over ℚ with arbitrary-precision rationals.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod factor;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod error;
pub mod model;
pub mod pq;
pub mod subspace;
pub mod uft;
pub mod quadratic;
pub mod classify;
pub mod gen;

pub use error::{Error, Result};
pub use model::{AdmissibleBasis, HBasisChange, ModelSpace, Operator, Vector};
pub use pq::ParaQuaternion;
pub use rational::Rational;
pub use subspace::{SignatureTriple, Subspace};

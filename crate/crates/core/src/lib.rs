//! Exact enumeration and verification toolkit for transitive star,
//! monotone Hurwitz and monotone double Hurwitz factorisations in the
//! symmetric group, the bijections between them, and the group-algebra
//! identities for Jucys-Murphy elements under the transitivity operator.

pub mod algebra;
pub mod bijections;
pub mod error;
pub mod factorisations;
pub mod formulas;
pub mod numeric;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{Partition, Permutation, TotalOrder, Transposition};

//! Exact character theory for finite groups, Clifford theory over normal
//! subgroups of prime index, and Artin conductor arithmetic from ramification
//! filtrations.
//!
//! Everything is exact: character values are elements of cyclotomic fields
//! with big-rational coordinates, and conductor norms are big integers.

pub mod character;
pub mod clifford;
pub mod conductor;
pub mod error;
pub mod group;
pub mod scalar;

pub use error::{Error, Result};

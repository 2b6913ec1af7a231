//! Exact integer-lattice algebra.
//!
//! Everything here is arbitrary-precision: Smith normal form on modest
//! lattices already overflows 64-bit intermediates.

mod abelian;
mod group;
mod matrix;
mod module;
pub mod ratlin;

pub use abelian::FinAbGroup;
pub use group::FiniteGroup;
pub use matrix::{IntMatrix, Snf};
pub use module::{Coinvariants, GammaModule};

//! Exact-arithmetic toolkit for L-group combinatorics.
//!
//! The layers build on each other:
//! * [`zlat`] — integer lattices, Smith normal form, finite group modules,
//!   (co)invariants and Tate cohomology in degree -1;
//! * [`rootdata`] — based root data with Galois action, duality, presets;
//! * [`lgroup`] — parabolic/Levi classification of the L-group and the two
//!   positivity tests of the Langlands classification;
//! * [`galcoh`] — Tate-Nakayama and Kottwitz cohomology targets, B(T),
//!   gerbe band character modules, simple isocrystals;
//! * [`param`] — finite-level Langlands parameter data and endoscopic data;
//! * [`json`] — canonical JSON (de)serialization shared with the CLI.

pub mod error;
pub mod galcoh;
pub mod json;
pub mod lgroup;
pub mod param;
pub mod rootdata;
pub mod zlat;

pub use error::LgkError;

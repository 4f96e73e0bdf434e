//! Verification workbench for 3-dimensional Sklyanin algebras.
//!
//! The crate builds the algebras from Hesse-form elliptic curve data. Exact
//! elimination and certified numerics then check how the central element and
//! the simple representations relate to the curve, and how the blow-up
//! algebra's representation scheme looks near those representations.

pub mod blowup;
pub mod error;
pub mod freealg;
pub mod heisenberg;
pub mod hesse;
pub mod linalg;
pub mod repbuilder;
pub mod suite;

pub use error::{Error, Result};

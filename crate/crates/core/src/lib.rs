//! Finite magmas, magma-actions and semibiproducts.
//!
//! Every structure is a Cayley table over `{0, .., n-1}`. The crate verifies
//! semibiproduct diagrams `X ⇄ A ⇄ B`, converts between semibiproducts and
//! the six-tuple magma-actions that classify them, extracts the correction
//! system, pre-action and factor system of a semigroup semibiproduct, and
//! enumerates small cases exhaustively.

pub mod action;
pub mod algebra;
pub mod catalog;
pub mod enumeration;
pub mod error;
pub mod io;
pub mod props;
pub mod semibiproduct;

pub use action::{ActionReport, MagmaAction, RMagma};
pub use algebra::{FiniteMagma, FiniteMap, Verdict};
pub use error::{AlgebraError, Result};
pub use semibiproduct::{PseudoActionData, SbpReport, Semibiproduct};

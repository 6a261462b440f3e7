//! Black box groups and their morphisms.
//!
//! Groups are reached only through oracles: sampling, multiplication,
//! inversion and equality on fixed-length strings. On top of that interface
//! the crate builds graph-style morphisms, automorphism enrichment by cyclic
//! shift on bundled tuples, amalgamation of local automorphisms, and the
//! constructions that use them: Frobenius maps on (P)SL₂(q) and on groups
//! with a Curtis–Tits datum, reification of involutions in SL₂(2ⁿ), the
//! inverse-transpose map on SL_n(q), and SU_n(q) inside SL_n(q²).
//!
//! Explicit matrix groups over [`ffield::ExplicitField`] serve as backends.
//! The [`harness`] module holds the white-box projection used to verify
//! constructions; algorithm modules never see it.

pub mod bbcore;
pub mod bbfield;
pub mod cyclic;
pub mod error;
pub mod ffield;
pub mod frobenius;
pub mod harness;
pub mod morphisms;
pub mod twisted;

pub use bbcore::{BlackBox, GroupOracle, GroupString};
pub use error::{Error, Result};
pub use ffield::{ExplicitField, FieldElement};

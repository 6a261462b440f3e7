//! Verification tooling: white-box projection for matrix backends, trace-law
//! verifiers, Hermitian form solving, closure census, Miller–Rabin, reports
//! and the command line.
//!
//! Nothing under `harness` is visible to the constructions themselves;
//! they only ever hold a [`crate::BlackBox`].

pub mod census;
pub mod cli;
pub mod experiments;
pub mod hermitian;
pub mod primality;
pub mod report;
pub mod standard;
pub mod verify;
pub mod whitebox;

pub use report::Report;
pub use whitebox::WhiteBox;

//! Exact verification toolkit for the Sylvester ("clock-and-shift", or
//! 't Hooft) generators of sl(n) and sl(n|n).
//!
//! Everything is computed over cyclotomic fields Q(zeta_N) with exact
//! rational coefficients; there is no floating point anywhere in this
//! crate, so every identity check is a genuine zero test.
//!
//! The crate is `no_std` (alloc only); IO, JSON formats and the CLI live
//! in the companion `clockshift-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod constants;
pub mod cyclo;
pub mod genesis;
pub mod matrix;
pub mod relcheck;
pub mod sine;

pub use cyclo::CycNum;
pub use genesis::{AlgebraMode, BasisElement, Label};
pub use matrix::{ExactMatrix, Format, Parity};
pub use relcheck::{RelationRecord, Status};

//! Non-split toric cyclic codes over small finite fields.
//!
//! The crate builds the five anticanonical toric codes C3, C4, C6, C8, C9 as
//! cyclic codes from their parity-check polynomials, identifies them as BCH
//! codes, computes exact minimum distances by exhaustive search, and checks the
//! elliptic-curve point counts that bound those distances.

pub mod cli;
pub mod cyclic;
pub mod delpezzo;
pub mod distance;
pub mod elliptic;
pub mod finite_field;
mod linalg;
pub mod polynomial;
pub mod report;
pub mod tables;
pub mod verify;

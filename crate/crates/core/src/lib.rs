//! Exact symmetric powers of finite pointed simplicial sets.
//!
//! The crate computes symmetric powers as honest orbit quotients, the cube
//! filtration of `Y^∧n` induced by an inclusion `X -> Y` together with
//! explicit quotient certificates, corestriction of finite group actions,
//! slice formulas for free symmetric spectra, and zeta-functions with
//! integer coefficients.

pub mod chain_sym;
pub mod cli;
pub mod corpus;
pub mod cube;
pub mod error;
pub mod expr;
pub mod gset;
pub mod homology;
pub mod perm;
pub mod pss_json;
pub mod report;
pub mod series;
pub mod snf;
pub mod sset;
pub mod symseq;
pub mod zeta;

pub use error::{Error, Result};

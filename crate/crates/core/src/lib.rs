//! Exact representation theory of the classical Weyl groups.
//!
//! The three families are the symmetric groups `S_n` (type A), the signed
//! permutation groups `B_n` (type BC) and the even-signed permutation groups
//! `D_n` (type D). Everything here is computed over the rationals with no
//! floating point: character tables, Littlewood–Richardson branching,
//! decompositions of the free FI_W-modules `M_W(m)` and of `V(λ)`, stable
//! tensor coefficients, character polynomials in `X_i, Y_i`, and graded
//! pieces of diagonal coinvariant algebras.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the text
//! grammar and the command line live in the `weylrep-cli` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod branching;
pub mod charpoly;
pub mod coinv;
pub mod decomposition;
pub mod error;
pub mod fiw;
pub mod labels;
pub mod limits;
pub mod linalg;
pub mod lr;
pub mod partitions;
pub mod tensor;
pub mod weyl;

pub use decomposition::Decomposition;
pub use error::{Error, Result};
pub use labels::{DLabel, Family, Label, PaddedLabel, Sign, StableKey};
pub use limits::Limits;
pub use partitions::{DoublePartition, Partition};

/// Exact rational numbers used throughout.
pub type Rational = num_rational::BigRational;

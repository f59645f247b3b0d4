//! Exact algebra of set functions on the Boolean lattice `2^[n]` under
//! matroid circuit constraints.
//!
//! The crate is `no_std` (it needs `alloc`). Set functions are dense tables
//! indexed by subset bitmask and generic over a [`Scalar`] backend: exact
//! rationals ([`Rational`]) for every algebraic statement, `f64` for values
//! that come out of network evaluation.
//!
//! Module map:
//!
//! * [`lattice`]: subset masks, set functions, zeta/Möbius transforms.
//! * [`matroid`]: uniform and circuit-defined matroids.
//! * [`constraints`]: circuit functionals, the constraint map and its exact rank.
//! * [`structure`]: the Möbius basis, projection and low-order extension.
//! * [`cpwl`]: the braid-fan extension of a set function and affinity probes.
//! * [`netanalyze`]: ReLU networks restricted to the cube's vertices.
#![no_std]

extern crate alloc;

pub mod constraints;
pub mod cpwl;
pub mod error;
pub mod lattice;
pub mod linalg;
pub mod matroid;
pub mod netanalyze;
pub mod scalar;
pub mod structure;

pub use error::Error;
pub use lattice::{MoebiusSpectrum, SetFunction, SubsetMask};
pub use matroid::{CircuitMatroid, Matroid, UniformMatroid};
pub use scalar::{Rational, Scalar, ScalarMode, Tolerance};

pub type Result<T, E = Error> = core::result::Result<T, E>;

//! Exact simulation of the 2d-state Grover walk on `Z^d`.
//!
//! Amplitudes are Gaussian rationals, so eigen-equations, stationarity of
//! measures and minimal-support searches are all decided without rounding.
//! The crate is `no_std` and only needs `alloc`; file formats, the CLI and
//! the parallel search driver live in the `gwalk` crate.

#![no_std]

extern crate alloc;

pub mod catalog;
pub mod eigen;
mod error;
pub mod lattice;
pub mod linalg;
pub mod rational;
pub mod scalar;
pub mod search;
pub mod walk;
pub mod wave;

pub use catalog::ChiralityBit;
pub use eigen::{Eigenvalue, LemmaReport, Violation, ViolationKind};
pub use error::{Error, Result};
pub use lattice::LatticePoint;
pub use rational::Rational;
pub use scalar::Scalar;
pub use search::{SearchConfig, SearchResult, SupportCandidate};
pub use walk::{Coin, ShiftKind};
pub use wave::{Measure, WaveFunction};

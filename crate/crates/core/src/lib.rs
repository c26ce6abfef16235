//! Modular reduction of string Coxeter groups and Möbius rotation groups.
//!
//! The crate reduces reflection groups defined over `Z`, the golden-ratio
//! ring `Z[τ]` and the Gaussian integers `Z[i]` modulo primes and ideals,
//! enumerates the resulting finite matrix groups, analyses the invariant
//! symmetric bilinear form and certifies whether the reduced group is a
//! string C-group (the automorphism group of an abstract regular polytope)
//! or the rotation group of a chiral or directly regular polytope.
//!
//! Everything here is pure computation over `alloc`; file formats, the
//! command line and JSON output live in the `modpoly` companion crate.
#![cfg_attr(not(test), no_std)]
#![warn(missing_docs)]

extern crate alloc;

pub mod cgroup;
pub mod coxeter;
pub mod groupkit;
pub mod matrix;
pub mod mobius;
pub mod ortho;
pub mod rings;

pub use cgroup::{CGroupError, PolytopeReport, RotationKind, SelfDuality};
pub use coxeter::{parse_symbol, Diagram};
pub use groupkit::{GroupError, MatrixGroup, DEFAULT_BUDGET};
pub use matrix::{DomainMatrix, Matrix};
pub use ortho::{FormAnalysis, GroupLabel};
pub use rings::{Elem, GaussInt, Ideal, QuadInt, RingSpec};

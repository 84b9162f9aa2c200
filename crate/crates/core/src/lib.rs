//! Exact tropical-cycle calculus and tropical characteristic classes.
//!
//! All arithmetic is over arbitrary-precision integers and rationals.

#![allow(clippy::mutable_key_type)]

pub mod error;
pub mod lattice;
pub mod polyhedra;
pub mod cycles;
pub mod genericity;
pub mod classes;
pub mod semistable;
pub mod workbench;

pub use error::{Error, Result};
pub use lattice::{LatticeMatrix, LatticeVector};
pub use polyhedra::{Cone, Fan, LatticePolytope};
pub use cycles::TropicalCycle;
pub use genericity::ProjectionMap;
pub use classes::{Grading, MonomialSupport, TropicalClass};

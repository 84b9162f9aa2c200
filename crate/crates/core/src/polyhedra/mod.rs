//! Rational cones, fans and lattice polytopes.

mod cone;
pub mod convert;
mod fan;
mod polytope;

pub use cone::Cone;
pub use fan::{common_refinement, Fan};
pub use polytope::{face_normal_data, lattice_volume, minkowski_sum, trop_of_polytope, LatticePolytope, PolytopeFace};

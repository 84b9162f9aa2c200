//! Genericity of projections, generic-projection search and the oracle-driven
//! computation of tropical characteristic classes of surfaces.

mod driver;
mod oracle;
mod predicates;
mod projection;
mod search;

pub use driver::{compute_classes_surface3, SurfaceTrace};
pub use oracle::{answer_request_file, schon_response, ExternalOracle, OracleSpec, SchonMockOracle, TropOracle};
pub use predicates::{is_immersed, is_submersed, GenericityReport, GenericityWitness};
pub use projection::ProjectionMap;
pub use search::{find_generic_projection, generic_hyperplane, kernel_candidates, Mode, SearchOptions};

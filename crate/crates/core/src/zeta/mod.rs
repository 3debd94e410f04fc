//! Ihara zeta functions of finite graphs, straight-strip zeta functions of
//! operators, and the apartment-torus quotient at `q = 1`.

mod function;
mod graph;
mod ihara;
mod torus;

pub use function::{primitive_counts, strip_zeta, StripZeta, ZetaFunction};
pub use graph::{DirectedEdge, Graph};
pub use ihara::{geodesic_oracle, hashimoto_matrix, ihara_formula_check, ihara_zeta, IharaReport};
pub use torus::{torus_quotient_rep, verify_maintheorem2, MainTheorem2Report, StripTraceReport, TorusQuotient};

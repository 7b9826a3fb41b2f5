//! Perfect colorings on grid graphs: neighborhoods, torus configurations,
//! verification, periodicity verdicts and bounded search.

mod grid;
mod search;
mod torus;
mod verdict;

pub use grid::{neighborhood, GridKind};
pub use search::{search, Constraint, SearchParams};
pub use torus::{
    abelian_complexity, convolution_identity, extract_matrix, minimal_periods, neighborhood_counts, offset_collisions,
    pattern_complexity, verify_covering, ColoringMatrix, ExtractedMatrix, TorusConfig,
};
pub use verdict::{
    verdict_abelian, verdict_coloring, verdict_covering, verdict_covering_convex, ConvexCertificate, ConvexDirection,
    Evidence, Verdict, VerdictClass,
};

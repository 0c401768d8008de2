//! Exact seeded sampling of long-range percolation on a finite box.
//!
//! Each unordered pair `{x, y}` is an edge independently with probability
//! `p * min(1, beta/|x-y|)^(d*alpha)`. Pairs are grouped by displacement class;
//! each class draws a binomial count and then distinct positions.

mod classes;
mod graph;
mod params;
mod renorm;
mod sample;

pub use classes::{displacement_classes, DisplacementClass};
pub use graph::{Adjacency, SampledGraph};
pub use params::{connection_prob, integrability_check, CustomKernel, Kernel, LrpParams, SHELLS};
pub use renorm::{cells_per_axis, renormalize, RenormalizedConfig};
pub use sample::{
    expected_edge_count, mix_seed, reference_sample_graph, sample_graph, splitmix64, GraphSampler,
    REFERENCE_MAX_SITES,
};

use lattice_geometry::GeometryError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SamplerError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("distance must be positive, got {0}")]
    NonPositiveDistance(f64),
    #[error("box of {n} sites exceeds the limit of {max}")]
    TooLarge { n: usize, max: usize },
    #[error(
        "beta = {beta} is below 2 sqrt(d) for d = {d}; coarse cells would be smaller than a site"
    )]
    CoarseTooFine { beta: f64, d: usize },
    #[error("bad edge: {0}")]
    BadEdge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

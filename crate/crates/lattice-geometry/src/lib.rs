//! Lattice primitives on finite boxes of Z^d and the set geometry built on them:
//! block decomposition, closures and holes, vertex boundaries, isoperimetric
//! checks, hole typing, and axis projections.

mod blocks;
mod boundary;
mod holes;
mod projection;
mod region;
mod siteset;
mod text;

pub use blocks::{
    block_decompose, components, is_one_connected, is_star_connected, one_adjacent, Adjacency,
};
pub use boundary::{
    boundaries, delta_reference, isoperimetry_report, BoundaryReport, IsoperimetryReport,
};
pub use holes::{
    closure, closure_and_holes, fill, hole_type, hole_typing, i_star, principal_threshold, r2,
    HoleReport, HoleTyping,
};
pub use projection::{projections_and_fibers, ProjectionReport};
pub use region::{LatticeBox, Region};
pub use siteset::SiteSet;
pub use text::{parse_site_set, write_site_set};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("site {0:?} lies outside the region")]
    OutOfRegion(Vec<i64>),
    #[error("expected dimension {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("set is not 1-connected")]
    NotConnected,
    #[error("invalid box: {0}")]
    InvalidBox(String),
    #[error("parse error: {0}")]
    Parse(String),
}

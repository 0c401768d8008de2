//! Connected components of sampled graphs, block graphs, forward-degree trees,
//! and candidate checks for the two events that cover a large second component.

mod blocks;
mod events;
mod report;

pub use blocks::{block_graph, is_component, is_f_connected, BlockGraph, ForwardDegreeVector};
pub use events::{check_event_e1_candidate, check_event_e2_candidate};
pub use report::{
    component_summary, connected_components, summarize_edges, summarize_sample, ComponentLabels,
    ComponentReport, ComponentSummary, CSV_HEADER,
};

use lattice_geometry::GeometryError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComponentError {
    #[error("set is not a connected component of the graph")]
    NotAComponent,
    #[error("invalid forward-degree vector: {0}")]
    InvalidForwardDegrees(String),
    #[error("block family is not admissible: {0}")]
    NotSmall(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

//! Brute-force enumerations and exhaustive verifiers for the deterministic
//! combinatorics behind the second-component bounds, at sizes small enough to
//! be checked exactly.

mod animals;
mod combinatorics;
mod cross_pairs;
mod inclusion;
mod matching;
mod redelmeier;

pub use animals::{
    cached_census, census_cache_path, enumerate_hole_free_animals, peierls_envelope,
    polyomino_census, AnimalCensus, MAX_CENSUS_BOUNDARY,
};
pub use combinatorics::{
    ballot_count, binomial, count_boundary_compositions, enumerate_f_vectors,
    f_vector_count_by_compositions, MAX_F_VECTOR_BLOCKS,
};
pub use cross_pairs::{
    count_cross_pairs, cross_pair_bound, free_interior_boundary_size, shell_offsets,
};
pub use inclusion::{verify_second_event_inclusion, Verdict, Witness, MAX_INCLUSION_SITES};
pub use matching::{check_t_matching, greedy_t_matching};

use lattice_geometry::GeometryError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("outside the enumeration guard: {0}")]
    Guard(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("blocks {0} and {1} touch")]
    BlocksTouch(usize, usize),
    #[error("malformed census cache: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

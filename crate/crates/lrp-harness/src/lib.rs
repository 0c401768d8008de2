//! Monte Carlo sweeps, pilot scans, the geometry invariant suite, CSV and
//! image output, and the `lrp` command-line interface.

mod config;
mod csv;
mod geometry_suite;
mod pilot;
mod pool;
mod render;
mod sweeps;
mod tail;

pub use config::{regime_limit, replica_seed, ExperimentConfig, OUTPUT_DIR_ENV};
pub use csv::{schema_checksum, CsvTable};
pub use geometry_suite::{random_connected_set, run_geometry_suite, GeometrySuiteReport};
pub use pilot::{
    pilot_scan, reference_pilot, tail_pilot, PilotOutcome, PilotRow, PILOT_REPLICAS,
    REFERENCE_MIN_MEDIAN_C2, REFERENCE_P_GRID, TAIL_PILOT_MIN_COUNT, TAIL_P_GRID,
};
pub use pool::ReplicaPool;
pub use render::{render_components, Raster, C0_COLOR, C1_COLOR, C2_COLOR, OTHER_COLOR};
pub use sweeps::{
    replica_csv_header, replica_csv_row, run_lln_experiment, run_renorm_experiment,
    run_second_largest_sweep, LlnRow, LlnTable, RenormRow, RenormTable, ReplicaRecord, ScalingRow,
    ScalingTable,
};
pub use tail::{
    fit_exponent, run_tail_experiment, ExponentFit, TailCurve, MIN_FIT_COUNT, MIN_FIT_POINTS,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("csv schema mismatch: {0}")]
    Schema(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Sampler(#[from] lrp_sampler::SamplerError),
    #[error(transparent)]
    Geometry(#[from] lattice_geometry::GeometryError),
    #[error(transparent)]
    Oracle(#[from] lrp_oracles::OracleError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

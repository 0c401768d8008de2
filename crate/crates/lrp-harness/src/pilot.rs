use lattice_geometry::LatticeBox;
use lrp_components::summarize_sample;
use lrp_sampler::{mix_seed, GraphSampler, LrpParams};
use statrs::statistics::{Data, OrderStatistics};

use crate::{HarnessError, ReplicaPool};

/// Candidate `p` values for the supercritical reference configuration, scanned from the top.
pub const REFERENCE_P_GRID: [f64; 19] = [
    0.95, 0.90, 0.85, 0.80, 0.75, 0.70, 0.65, 0.60, 0.55, 0.50, 0.45, 0.40, 0.35, 0.30, 0.25, 0.20,
    0.15, 0.10, 0.05,
];

/// Candidate `p` values for tail measurements, scanned from the top.
pub const TAIL_P_GRID: [f64; 14] = [
    0.5, 0.4, 0.3, 0.25, 0.2, 0.15, 0.12, 0.1, 0.08, 0.06, 0.05, 0.04, 0.03, 0.02,
];

pub const PILOT_REPLICAS: usize = 2000;

/// Smallest median `|C2|` a reference candidate needs, so one unit moves the median by at most 20%.
pub const REFERENCE_MIN_MEDIAN_C2: f64 = 5.0;

/// Hits at the largest `k` a tail pilot needs, out of [`PILOT_REPLICAS`].
pub const TAIL_PILOT_MIN_COUNT: usize = 5;

/// Pilot statistics for one candidate `p`.
#[derive(Clone, Debug, PartialEq)]
pub struct PilotRow {
    pub p: f64,
    pub replicas: usize,
    pub mean_theta: f64,
    pub frac_c2_nonempty: f64,
    pub median_c2: f64,
    /// Replicas with `|C(0)| >= k_max` and the origin outside the giant.
    pub tail_hits: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PilotOutcome {
    pub rows: Vec<PilotRow>,
    pub selected: Option<f64>,
}

impl PilotOutcome {
    pub const HEADER: &'static str =
        "p,replicas,mean_theta,frac_c2_nonempty,median_c2,tail_hits,selected";

    pub fn to_csv(&self) -> crate::CsvTable {
        let mut t = crate::CsvTable::new(Self::HEADER);
        for r in &self.rows {
            t.push(format!(
                "{},{},{},{},{},{},{}",
                r.p,
                r.replicas,
                r.mean_theta,
                r.frac_c2_nonempty,
                r.median_c2,
                r.tail_hits,
                Some(r.p) == self.selected
            ));
        }
        t
    }
}

/// Scans `p_grid` in order at `n` sites and stops at the first row `accept`s.
#[allow(clippy::too_many_arguments)]
pub fn pilot_scan(
    base: &LrpParams,
    n: usize,
    p_grid: &[f64],
    replicas: usize,
    k_max: usize,
    master_seed: u64,
    pool: &ReplicaPool,
    accept: impl Fn(&PilotRow) -> bool,
) -> Result<PilotOutcome, HarnessError> {
    let lattice = LatticeBox::with_sites(base.d, n)?;
    let mut rows = Vec::new();
    for (i, &p) in p_grid.iter().enumerate() {
        let mut params = base.clone();
        params.p = p;
        let sampler = GraphSampler::new(&lattice, &params)?;
        let stream = mix_seed(master_seed, i as u64);
        let summaries = pool.map(replicas, |r| {
            summarize_sample(&sampler, mix_seed(stream, r as u64))
        });
        let row = PilotRow {
            p,
            replicas,
            mean_theta: summaries.iter().map(|s| s.theta_hat()).sum::<f64>() / replicas as f64,
            frac_c2_nonempty: summaries.iter().filter(|s| s.size_c2 > 0).count() as f64
                / replicas as f64,
            median_c2: Data::new(
                summaries
                    .iter()
                    .map(|s| s.size_c2 as f64)
                    .collect::<Vec<_>>(),
            )
            .median(),
            tail_hits: summaries
                .iter()
                .filter(|s| !s.origin_in_c1 && s.size_c0 >= k_max)
                .count(),
        };
        let ok = accept(&row);
        rows.push(row);
        if ok {
            return Ok(PilotOutcome {
                rows,
                selected: Some(p),
            });
        }
    }
    Ok(PilotOutcome {
        rows,
        selected: None,
    })
}

/// Largest `p` in [`REFERENCE_P_GRID`] with mean `theta_hat > 1/2` and median `|C2|`
/// at least [`REFERENCE_MIN_MEDIAN_C2`] over the pilot replicas at `n` sites.
pub fn reference_pilot(
    base: &LrpParams,
    n: usize,
    master_seed: u64,
    pool: &ReplicaPool,
) -> Result<PilotOutcome, HarnessError> {
    pilot_scan(
        base,
        n,
        &REFERENCE_P_GRID,
        PILOT_REPLICAS,
        1,
        master_seed,
        pool,
        |r| r.mean_theta > 0.5 && r.median_c2 >= REFERENCE_MIN_MEDIAN_C2,
    )
}

/// Largest `p` in [`TAIL_P_GRID`] with mean `theta_hat > 1/2` and at least
/// [`TAIL_PILOT_MIN_COUNT`] pilot replicas in the tail event at `k_max`.
pub fn tail_pilot(
    base: &LrpParams,
    n: usize,
    k_max: usize,
    master_seed: u64,
    pool: &ReplicaPool,
) -> Result<PilotOutcome, HarnessError> {
    pilot_scan(
        base,
        n,
        &TAIL_P_GRID,
        PILOT_REPLICAS,
        k_max,
        master_seed,
        pool,
        |r| r.mean_theta > 0.5 && r.tail_hits >= TAIL_PILOT_MIN_COUNT,
    )
}

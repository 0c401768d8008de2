use lrp_components::{component_summary, summarize_sample, ComponentSummary, CSV_HEADER};
use lrp_sampler::{renormalize, GraphSampler, LrpParams};
use statrs::statistics::{Data, OrderStatistics, Statistics};

use crate::{replica_seed, CsvTable, ExperimentConfig, HarnessError, ReplicaPool};

/// One replica at one box size.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReplicaRecord {
    pub n: usize,
    pub replica: usize,
    pub seed: u64,
    pub summary: ComponentSummary,
}

pub fn replica_csv_header() -> &'static str {
    CSV_HEADER
}

/// One row in the component-report schema.
pub fn replica_csv_row(params: &LrpParams, seed: u64, s: &ComponentSummary) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        seed,
        params.d,
        s.n,
        params.alpha,
        params.beta,
        params.p,
        s.size_c1,
        s.size_c2,
        s.size_c0,
        s.origin_in_c1,
        s.theta_hat()
    )
}

/// Summaries of every replica at every box size, ordered by size then replica.
pub(crate) fn sample_replicas(
    cfg: &ExperimentConfig,
    pool: &ReplicaPool,
) -> Result<Vec<Vec<ReplicaRecord>>, HarnessError> {
    cfg.validate()?;
    let mut out = Vec::with_capacity(cfg.n_grid.len());
    for b in cfg.boxes()? {
        let sampler = GraphSampler::new(&b, &cfg.params)?;
        let n = b.n();
        out.push(pool.map(cfg.replicas, |r| {
            let seed = replica_seed(cfg.master_seed, n, r);
            ReplicaRecord {
                n,
                replica: r,
                seed,
                summary: summarize_sample(&sampler, seed),
            }
        }));
    }
    Ok(out)
}

fn mean_theta(records: &[ReplicaRecord]) -> f64 {
    records.iter().map(|r| r.summary.theta_hat()).sum::<f64>() / records.len() as f64
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScalingRow {
    pub n: usize,
    pub replicas: usize,
    pub median_c2: f64,
    pub q1_c2: f64,
    pub q3_c2: f64,
    /// `(ln n)^{d/(d-1)}`.
    pub log_scale: f64,
    pub mean_theta: f64,
    pub frac_c2_empty: f64,
}

impl ScalingRow {
    pub fn median_norm(&self) -> f64 {
        self.median_c2 / self.log_scale
    }

    pub fn q1_norm(&self) -> f64 {
        self.q1_c2 / self.log_scale
    }

    pub fn q3_norm(&self) -> f64 {
        self.q3_c2 / self.log_scale
    }

    /// `mean theta_hat >= 1/2` is read as supercritical; anything lower is flagged.
    pub fn regime(&self) -> &'static str {
        if self.mean_theta >= 0.5 {
            "supercritical"
        } else {
            "near_or_subcritical"
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScalingTable {
    pub params: LrpParams,
    pub rows: Vec<ScalingRow>,
    pub records: Vec<ReplicaRecord>,
}

impl ScalingTable {
    pub const HEADER: &'static str = "n,replicas,median_c2,q1_c2,q3_c2,log_scale,median_norm,q1_norm,q3_norm,mean_theta,frac_c2_empty,regime";

    pub fn to_csv(&self) -> CsvTable {
        let mut t = CsvTable::new(Self::HEADER);
        for r in &self.rows {
            t.push(format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                r.n,
                r.replicas,
                r.median_c2,
                r.q1_c2,
                r.q3_c2,
                r.log_scale,
                r.median_norm(),
                r.q1_norm(),
                r.q3_norm(),
                r.mean_theta,
                r.frac_c2_empty,
                r.regime()
            ));
        }
        t
    }

    pub fn records_csv(&self) -> CsvTable {
        let mut t = CsvTable::new(replica_csv_header());
        for r in &self.records {
            t.push(replica_csv_row(&self.params, r.seed, &r.summary));
        }
        t
    }

    /// `max / min` of the normalized medians; infinite when some median is zero.
    pub fn band_ratio(&self) -> f64 {
        let v: Vec<f64> = self.rows.iter().map(ScalingRow::median_norm).collect();
        let (lo, hi) = (
            v.iter().copied().fold(f64::INFINITY, f64::min),
            v.iter().copied().fold(0.0, f64::max),
        );
        if lo > 0.0 {
            hi / lo
        } else {
            f64::INFINITY
        }
    }
}

/// Second-largest component sizes across the box sizes, normalized by `(ln n)^{d/(d-1)}`.
pub fn run_second_largest_sweep(
    cfg: &ExperimentConfig,
    pool: &ReplicaPool,
) -> Result<ScalingTable, HarnessError> {
    let d = cfg.params.d;
    if d < 2 {
        return Err(HarnessError::Unsupported(
            "scaling normalization needs d >= 2".into(),
        ));
    }
    let per_n = sample_replicas(cfg, pool)?;
    let mut rows = Vec::new();
    for records in &per_n {
        let n = records[0].n;
        let mut c2 = Data::new(
            records
                .iter()
                .map(|r| r.summary.size_c2 as f64)
                .collect::<Vec<_>>(),
        );
        rows.push(ScalingRow {
            n,
            replicas: records.len(),
            median_c2: c2.median(),
            q1_c2: c2.lower_quartile(),
            q3_c2: c2.upper_quartile(),
            log_scale: (n as f64).ln().powf(d as f64 / (d as f64 - 1.0)),
            mean_theta: mean_theta(records),
            frac_c2_empty: records.iter().filter(|r| r.summary.size_c2 == 0).count() as f64
                / records.len() as f64,
        });
    }
    Ok(ScalingTable {
        params: cfg.params.clone(),
        rows,
        records: per_n.into_iter().flatten().collect(),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct LlnRow {
    pub n: usize,
    pub replicas: usize,
    pub mean_theta: f64,
    /// Sample standard deviation (zero for one replica).
    pub std_theta: f64,
    pub rho: f64,
    /// Fraction of replicas with `|C(0)| >= rho n`.
    pub freq_origin_giant: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LlnTable {
    pub rows: Vec<LlnRow>,
}

impl LlnTable {
    pub const HEADER: &'static str = "n,replicas,mean_theta,std_theta,rho,freq_origin_giant";

    pub fn to_csv(&self) -> CsvTable {
        let mut t = CsvTable::new(Self::HEADER);
        for r in &self.rows {
            t.push(format!(
                "{},{},{},{},{},{}",
                r.n, r.replicas, r.mean_theta, r.std_theta, r.rho, r.freq_origin_giant
            ));
        }
        t
    }

    pub fn row(&self, n: usize, rho: f64) -> Option<&LlnRow> {
        self.rows.iter().find(|r| r.n == n && r.rho == rho)
    }
}

/// Mean and spread of `theta_hat`, and the frequency of a giant origin cluster, per box size.
pub fn run_lln_experiment(
    cfg: &ExperimentConfig,
    pool: &ReplicaPool,
) -> Result<LlnTable, HarnessError> {
    let per_n = sample_replicas(cfg, pool)?;
    let mut rows = Vec::new();
    for records in &per_n {
        let n = records[0].n;
        let thetas: Vec<f64> = records.iter().map(|r| r.summary.theta_hat()).collect();
        let std_theta = if thetas.len() > 1 {
            thetas.iter().std_dev()
        } else {
            0.0
        };
        for &rho in &cfg.rho {
            let hits = records
                .iter()
                .filter(|r| r.summary.size_c0 as f64 >= rho * n as f64)
                .count();
            rows.push(LlnRow {
                n,
                replicas: records.len(),
                mean_theta: mean_theta(records),
                std_theta,
                rho,
                freq_origin_giant: hits as f64 / records.len() as f64,
            });
        }
    }
    Ok(LlnTable { rows })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenormRow {
    pub n: usize,
    pub replica: usize,
    pub seed: u64,
    pub beta: f64,
    pub cells_per_axis: usize,
    pub active_fraction: f64,
    pub open_fraction: f64,
    pub largest_cluster: usize,
    pub min_occupancy: usize,
    pub certified_bound: usize,
    pub size_c1: usize,
}

impl RenormRow {
    pub fn bound_holds(&self) -> bool {
        self.certified_bound <= self.size_c1
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenormTable {
    pub rows: Vec<RenormRow>,
}

impl RenormTable {
    pub const HEADER: &'static str = "n,replica,seed,beta,cells_per_axis,active_fraction,open_fraction,largest_cluster,min_occupancy,certified_bound,size_c1,bound_holds";

    pub fn to_csv(&self) -> CsvTable {
        let mut t = CsvTable::new(Self::HEADER);
        for r in &self.rows {
            t.push(format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}",
                r.n,
                r.replica,
                r.seed,
                r.beta,
                r.cells_per_axis,
                r.active_fraction,
                r.open_fraction,
                r.largest_cluster,
                r.min_occupancy,
                r.certified_bound,
                r.size_c1,
                r.bound_holds()
            ));
        }
        t
    }

    pub fn mean_active_fraction(&self) -> f64 {
        self.rows.iter().map(|r| r.active_fraction).sum::<f64>() / self.rows.len() as f64
    }
}

/// Coarse-cell statistics per replica, with the certified bound checked against the giant.
pub fn run_renorm_experiment(
    cfg: &ExperimentConfig,
    pool: &ReplicaPool,
) -> Result<RenormTable, HarnessError> {
    cfg.validate()?;
    let mut rows = Vec::new();
    for b in cfg.boxes()? {
        let sampler = GraphSampler::new(&b, &cfg.params)?;
        let n = b.n();
        let part: Vec<Result<RenormRow, HarnessError>> = pool.map(cfg.replicas, |r| {
            let seed = replica_seed(cfg.master_seed, n, r);
            let graph = sampler.sample(seed);
            let coarse = renormalize(&graph)?;
            let summary = component_summary(&graph);
            Ok(RenormRow {
                n,
                replica: r,
                seed,
                beta: cfg.params.beta,
                cells_per_axis: coarse.cells_per_axis,
                active_fraction: coarse.active_fraction(),
                open_fraction: coarse.open_fraction(),
                largest_cluster: coarse.largest_cluster(),
                min_occupancy: coarse.min_occupancy(),
                certified_bound: coarse.certified_bound(),
                size_c1: summary.size_c1,
            })
        });
        for row in part {
            rows.push(row?);
        }
    }
    Ok(RenormTable { rows })
}

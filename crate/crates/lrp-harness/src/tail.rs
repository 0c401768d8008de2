use statrs::distribution::{ContinuousCDF, StudentsT};

use crate::sweeps::sample_replicas;
use crate::{CsvTable, ExperimentConfig, HarnessError, ReplicaPool};

/// Points need at least this many hits to enter the exponent fit.
pub const MIN_FIT_COUNT: u64 = 25;
/// The exponent is reported only with at least this many fit points.
pub const MIN_FIT_POINTS: usize = 4;

/// Least-squares fit of `ln(-ln P)` on `ln k`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExponentFit {
    pub zeta_hat: f64,
    pub intercept: f64,
    /// 95% interval from the slope's t distribution.
    pub ci_low: f64,
    pub ci_high: f64,
    pub points: usize,
}

/// Estimates of `P(|C(0)| >= k, 0 not in C1)` over `k`.
#[derive(Clone, Debug, PartialEq)]
pub struct TailCurve {
    pub n: usize,
    pub replicas: usize,
    pub k: Vec<usize>,
    pub counts: Vec<u64>,
    pub estimate: Vec<f64>,
    pub stderr: Vec<f64>,
    pub fit: Option<ExponentFit>,
}

impl TailCurve {
    pub const HEADER: &'static str = "n,replicas,k,count,estimate,stderr";

    pub fn from_counts(n: usize, replicas: usize, k: Vec<usize>, counts: Vec<u64>) -> Self {
        let r = replicas as f64;
        let estimate: Vec<f64> = counts.iter().map(|&c| c as f64 / r).collect();
        let stderr = estimate
            .iter()
            .map(|&p| (p * (1.0 - p) / r).sqrt())
            .collect();
        let fit = fit_exponent(&k, &counts, &estimate);
        TailCurve {
            n,
            replicas,
            k,
            counts,
            estimate,
            stderr,
            fit,
        }
    }

    pub fn to_csv(&self) -> CsvTable {
        let mut t = CsvTable::new(Self::HEADER);
        for i in 0..self.k.len() {
            t.push(format!(
                "{},{},{},{},{},{}",
                self.n, self.replicas, self.k[i], self.counts[i], self.estimate[i], self.stderr[i]
            ));
        }
        t
    }
}

/// Fits over points with at least [`MIN_FIT_COUNT`] hits and `0 < P < 1`;
/// zero-count points are dropped, not smoothed.
pub fn fit_exponent(k: &[usize], counts: &[u64], estimate: &[f64]) -> Option<ExponentFit> {
    let pts: Vec<(f64, f64)> = k
        .iter()
        .zip(counts)
        .zip(estimate)
        .filter(|((_, &c), &p)| c >= MIN_FIT_COUNT && p > 0.0 && p < 1.0)
        .map(|((&k, _), &p)| ((k as f64).ln(), (-p.ln()).ln()))
        .collect();
    if pts.len() < MIN_FIT_POINTS {
        return None;
    }
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let sse: f64 = pts
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    let df = m - 2.0;
    let se = (sse / df / sxx).sqrt();
    let t = StudentsT::new(0.0, 1.0, df)
        .expect("df >= 2")
        .inverse_cdf(0.975);
    Some(ExponentFit {
        zeta_hat: slope,
        intercept,
        ci_low: slope - t * se,
        ci_high: slope + t * se,
        points: pts.len(),
    })
}

/// Joint tail of the origin's cluster size and its exclusion from the giant, per box size.
pub fn run_tail_experiment(
    cfg: &ExperimentConfig,
    pool: &ReplicaPool,
) -> Result<Vec<TailCurve>, HarnessError> {
    cfg.validate_tail()?;
    let per_n = sample_replicas(cfg, pool)?;
    Ok(per_n
        .iter()
        .map(|records| {
            let counts = cfg
                .k_grid
                .iter()
                .map(|&k| {
                    records
                        .iter()
                        .filter(|r| !r.summary.origin_in_c1 && r.summary.size_c0 >= k)
                        .count() as u64
                })
                .collect();
            TailCurve::from_counts(records[0].n, records.len(), cfg.k_grid.clone(), counts)
        })
        .collect())
}

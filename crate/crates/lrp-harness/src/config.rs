use std::path::PathBuf;

use lattice_geometry::LatticeBox;
use lrp_sampler::{mix_seed, LrpParams};
use serde::{Deserialize, Serialize};

use crate::HarnessError;

/// Environment variable naming the default output directory.
pub const OUTPUT_DIR_ENV: &str = "LRP_OUTPUT_DIR";

fn default_rho() -> Vec<f64> {
    vec![0.1]
}

/// One experiment: parameters, box sizes (site counts), replica count and seeding.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub params: LrpParams,
    /// Site counts; each must be a perfect `d`-th power.
    pub n_grid: Vec<usize>,
    pub replicas: usize,
    pub master_seed: u64,
    #[serde(default)]
    pub k_grid: Vec<usize>,
    /// Thresholds for the frequency of `|C(0)| >= rho n`.
    #[serde(default = "default_rho")]
    pub rho: Vec<f64>,
    #[serde(default)]
    pub output_path: Option<PathBuf>,
}

/// `n (ln n)^{-2d/(d-1)}`, the largest admissible tail threshold at `n` sites.
pub fn regime_limit(n: usize, d: usize) -> f64 {
    let n = n as f64;
    let d = d as f64;
    n * n.ln().powf(-2.0 * d / (d - 1.0))
}

/// Seed of replica `replica` at box size `n`.
pub fn replica_seed(master: u64, n: usize, replica: usize) -> u64 {
    mix_seed(mix_seed(master, n as u64), replica as u64)
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let cfg: ExperimentConfig = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn boxes(&self) -> Result<Vec<LatticeBox>, HarnessError> {
        self.n_grid
            .iter()
            .map(|&n| LatticeBox::with_sites(self.params.d, n).map_err(HarnessError::from))
            .collect()
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let bad = |m: String| Err(HarnessError::Config(m));
        self.params.validate()?;
        if self.replicas == 0 {
            return bad("replicas must be at least 1".into());
        }
        if self.n_grid.is_empty() {
            return bad("n_grid is empty".into());
        }
        if self.n_grid.windows(2).any(|w| w[0] >= w[1]) {
            return bad("n_grid must be strictly increasing".into());
        }
        self.boxes()?;
        if self.k_grid.windows(2).any(|w| w[0] >= w[1]) || self.k_grid.first() == Some(&0) {
            return bad("k_grid must be strictly increasing positive integers".into());
        }
        if self.rho.iter().any(|&r| !(r > 0.0 && r <= 1.0)) {
            return bad("rho values must lie in (0, 1]".into());
        }
        Ok(())
    }

    /// Tail mode additionally needs `d >= 2` and every `k` within the regime at the largest `n`.
    pub fn validate_tail(&self) -> Result<(), HarnessError> {
        self.validate()?;
        let d = self.params.d;
        if d < 2 {
            return Err(HarnessError::Config("tail mode needs d >= 2".into()));
        }
        if self.k_grid.is_empty() {
            return Err(HarnessError::Config("tail mode needs a k_grid".into()));
        }
        let n = *self.n_grid.last().expect("validated");
        let limit = regime_limit(n, d);
        if let Some(&k) = self.k_grid.iter().find(|&&k| k as f64 > limit) {
            return Err(HarnessError::Config(format!(
                "k = {k} exceeds n (ln n)^(-2d/(d-1)) = {limit:.3} at n = {n}"
            )));
        }
        Ok(())
    }
}

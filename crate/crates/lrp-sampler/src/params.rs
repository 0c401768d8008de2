use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::SamplerError;

/// Non-increasing profile `J` evaluated at `r / beta`; values must lie in `[0, 1]`.
#[derive(Clone)]
pub struct CustomKernel {
    pub name: String,
    pub profile: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl fmt::Debug for CustomKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CustomKernel({})", self.name)
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    /// `p * min(1, beta/r)^(d*alpha)`.
    #[default]
    Polynomial,
    /// `J(r / beta)`; `p` and `alpha` are ignored.
    #[serde(skip)]
    Custom(CustomKernel),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LrpParams {
    pub d: usize,
    pub alpha: f64,
    pub beta: f64,
    pub p: f64,
    #[serde(default)]
    pub kernel: Kernel,
}

impl LrpParams {
    pub fn new(d: usize, alpha: f64, beta: f64, p: f64) -> Result<Self, SamplerError> {
        let params = LrpParams {
            d,
            alpha,
            beta,
            p,
            kernel: Kernel::Polynomial,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn with_kernel(mut self, kernel: Kernel) -> Self {
        self.kernel = kernel;
        self
    }

    pub fn validate(&self) -> Result<(), SamplerError> {
        let bad = |m: String| Err(SamplerError::InvalidParams(m));
        if self.d == 0 {
            return bad("d must be at least 1".into());
        }
        if !(self.alpha.is_finite() && self.alpha > 1.0) {
            return bad(format!("alpha must exceed 1, got {}", self.alpha));
        }
        if !(self.beta.is_finite() && self.beta > 0.0) {
            return bad(format!("beta must be positive, got {}", self.beta));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return bad(format!("p must lie in [0, 1], got {}", self.p));
        }
        Ok(())
    }

    #[inline]
    fn prob_unchecked(&self, r: f64) -> f64 {
        match &self.kernel {
            Kernel::Polynomial => {
                if r <= self.beta {
                    self.p
                } else {
                    self.p * (self.beta / r).powf(self.d as f64 * self.alpha)
                }
            }
            Kernel::Custom(k) => (k.profile)(r / self.beta).clamp(0.0, 1.0),
        }
    }
}

/// Probability that two sites at Euclidean distance `r` are joined.
pub fn connection_prob(r: f64, params: &LrpParams) -> Result<f64, SamplerError> {
    if !(r > 0.0) {
        return Err(SamplerError::NonPositiveDistance(r));
    }
    Ok(params.prob_unchecked(r))
}

pub(crate) fn prob(r: f64, params: &LrpParams) -> f64 {
    params.prob_unchecked(r)
}

/// Doubling shells up to radius `2^SHELLS` are integrated for custom kernels.
pub const SHELLS: u32 = 40;

/// Whether `∫ |x| J(|x|) dx` over R^d is finite.
///
/// Exact (`alpha > 1 + 1/d`) for the polynomial kernel. Custom kernels are
/// integrated over doubling shells `[2^k, 2^{k+1}]`, `k < SHELLS`, and judged
/// finite when the two outermost shells shrink.
pub fn integrability_check(params: &LrpParams) -> bool {
    match &params.kernel {
        Kernel::Polynomial => params.alpha > 1.0 + 1.0 / params.d as f64,
        Kernel::Custom(k) => {
            let d = params.d as i32;
            let shell = |lo: f64| {
                // Simpson on a log-spaced grid: r^(d+1) J(r) d(ln r)
                let steps = 64;
                let h = std::f64::consts::LN_2 / steps as f64;
                let f = |t: f64| {
                    let r = lo * t.exp();
                    r.powi(d + 1) * (k.profile)(r)
                };
                let mut acc = f(0.0) + f(steps as f64 * h);
                for i in 1..steps {
                    acc += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
                }
                acc * h / 3.0
            };
            let last = shell(2f64.powi(SHELLS as i32 - 1));
            let prev = shell(2f64.powi(SHELLS as i32 - 2));
            if prev == 0.0 {
                return last == 0.0;
            }
            last / prev < 1.0 - 1e-6
        }
    }
}

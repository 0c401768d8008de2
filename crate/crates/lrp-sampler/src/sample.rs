use lattice_geometry::LatticeBox;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};
use rand_pcg::Pcg64Mcg;
use rayon::prelude::*;

use crate::classes::{displacement_classes, PairDecoder};
use crate::params::prob;
use crate::{LrpParams, SampledGraph, SamplerError};

/// SplitMix64 finalizer.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of substream `stream` under `master`: `splitmix64(master ^ splitmix64(stream))`.
pub fn mix_seed(master: u64, stream: u64) -> u64 {
    splitmix64(master ^ splitmix64(stream))
}

/// Stream id reserved for the per-pair reference sampler.
const REFERENCE_STREAM: u64 = u64::MAX;

const CLASS_CHUNK: usize = 2048;

/// Largest box the per-pair sampler accepts.
pub const REFERENCE_MAX_SITES: usize = 10_000;

fn check(lattice: &LatticeBox, params: &LrpParams) -> Result<(), SamplerError> {
    params.validate()?;
    if params.d != lattice.d() {
        return Err(SamplerError::InvalidParams(format!(
            "params have d={} but box has d={}",
            params.d,
            lattice.d()
        )));
    }
    Ok(())
}

/// `Σ_v M(v) q(v)` over displacement classes.
pub fn expected_edge_count(lattice: &LatticeBox, params: &LrpParams) -> Result<f64, SamplerError> {
    Ok(GraphSampler::new(lattice, params)?.expected_edges())
}

struct PreparedClass {
    id: u64,
    pairs: u64,
    q: f64,
    count: Option<Binomial>,
    decoder: PairDecoder,
}

/// Per-box, per-parameter class table, reusable across seeds.
pub struct GraphSampler {
    lattice: LatticeBox,
    params: LrpParams,
    classes: Vec<PreparedClass>,
}

impl GraphSampler {
    pub fn new(lattice: &LatticeBox, params: &LrpParams) -> Result<Self, SamplerError> {
        check(lattice, params)?;
        let classes = displacement_classes(lattice)
            .into_iter()
            .filter_map(|c| {
                let q = prob(c.distance, params);
                (q > 0.0).then(|| PreparedClass {
                    id: c.id as u64,
                    pairs: c.pairs,
                    q,
                    count: (q < 1.0).then(|| Binomial::new(c.pairs, q).expect("q in (0,1)")),
                    decoder: PairDecoder::new(lattice, &c.v),
                })
            })
            .collect();
        Ok(GraphSampler {
            lattice: lattice.clone(),
            params: params.clone(),
            classes,
        })
    }

    pub fn lattice(&self) -> &LatticeBox {
        &self.lattice
    }

    pub fn params(&self) -> &LrpParams {
        &self.params
    }

    /// `Σ_v M(v) q(v)`.
    pub fn expected_edges(&self) -> f64 {
        self.classes.iter().map(|c| c.pairs as f64 * c.q).sum()
    }

    fn sample_class(c: &PreparedClass, seed: u64, f: &mut impl FnMut(u32, u32)) {
        let mut emit = |t: u64| {
            let (i, j) = c.decoder.decode(t);
            f(i, j)
        };
        let Some(count) = &c.count else {
            (0..c.pairs).for_each(emit);
            return;
        };
        let mut rng = Pcg64Mcg::seed_from_u64(mix_seed(seed, c.id));
        let k = count.sample(&mut rng) as usize;
        match k {
            0 => {}
            1 => emit(rng.random_range(0..c.pairs)),
            _ => {
                for t in rand::seq::index::sample(&mut rng, c.pairs as usize, k) {
                    emit(t as u64);
                }
            }
        }
    }

    /// Streams the edges of `sample(seed)` on the calling thread without storing them.
    pub fn for_each_edge(&self, seed: u64, mut f: impl FnMut(u32, u32)) {
        for c in &self.classes {
            Self::sample_class(c, seed, &mut f);
        }
    }

    pub fn sample(&self, seed: u64) -> SampledGraph {
        let chunks: Vec<Vec<(u32, u32)>> = self
            .classes
            .par_chunks(CLASS_CHUNK)
            .map(|chunk| {
                let mut out = Vec::new();
                for c in chunk {
                    Self::sample_class(c, seed, &mut |i, j| out.push((i, j)));
                }
                out
            })
            .collect();
        SampledGraph::from_trusted(
            self.lattice.clone(),
            self.params.clone(),
            seed,
            chunks.concat(),
        )
    }
}

/// Samples the graph class by class: `K ~ Bin(M(v), q(v))` pairs chosen without replacement.
///
/// Each class draws from its own stream seeded by `mix_seed(seed, class id)`.
pub fn sample_graph(
    lattice: &LatticeBox,
    params: &LrpParams,
    seed: u64,
) -> Result<SampledGraph, SamplerError> {
    Ok(GraphSampler::new(lattice, params)?.sample(seed))
}

/// One uniform per unordered pair `i < j`, drawn in lexicographic pair order.
///
/// The same seed gives the same uniforms for every parameter choice, so edge
/// sets are monotone in `p` under a fixed seed.
pub fn reference_sample_graph(
    lattice: &LatticeBox,
    params: &LrpParams,
    seed: u64,
) -> Result<SampledGraph, SamplerError> {
    check(lattice, params)?;
    let n = lattice.n();
    if n > REFERENCE_MAX_SITES {
        return Err(SamplerError::TooLarge {
            n,
            max: REFERENCE_MAX_SITES,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, REFERENCE_STREAM));
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let u: f64 = rng.random();
            if u < prob(lattice.distance(i, j), params) {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Ok(SampledGraph::from_trusted(
        lattice.clone(),
        params.clone(),
        seed,
        edges,
    ))
}

use std::collections::HashSet;
use std::fmt::Write as _;
use std::sync::OnceLock;

use lattice_geometry::LatticeBox;

use crate::{LrpParams, SamplerError};

/// Compressed neighbor lists.
#[derive(Clone, Debug)]
pub struct Adjacency {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Adjacency {
    fn build(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut deg = vec![0usize; n + 1];
        for &(i, j) in edges {
            deg[i as usize + 1] += 1;
            deg[j as usize + 1] += 1;
        }
        for i in 0..n {
            deg[i + 1] += deg[i];
        }
        let offsets = deg;
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; 2 * edges.len()];
        for &(i, j) in edges {
            targets[fill[i as usize]] = j;
            fill[i as usize] += 1;
            targets[fill[j as usize]] = i;
            fill[j as usize] += 1;
        }
        Adjacency { offsets, targets }
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }
}

/// A sampled graph on a box: edges as index pairs `i < j`.
#[derive(Clone, Debug)]
pub struct SampledGraph {
    lattice: LatticeBox,
    edges: Vec<(u32, u32)>,
    seed: u64,
    params: LrpParams,
    adjacency: OnceLock<Adjacency>,
}

impl SampledGraph {
    pub(crate) fn from_trusted(
        lattice: LatticeBox,
        params: LrpParams,
        seed: u64,
        edges: Vec<(u32, u32)>,
    ) -> Self {
        SampledGraph {
            lattice,
            edges,
            seed,
            params,
            adjacency: OnceLock::new(),
        }
    }

    /// Graph with explicit edges; rejects self-loops, duplicates, and out-of-box endpoints.
    pub fn from_edges(
        lattice: LatticeBox,
        params: LrpParams,
        seed: u64,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, SamplerError> {
        let n = lattice.n();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(SamplerError::BadEdge(format!(
                    "{a}-{b} outside box of {n} sites"
                )));
            }
            if a == b {
                return Err(SamplerError::BadEdge(format!("self-loop at {a}")));
            }
            let e = (a.min(b) as u32, a.max(b) as u32);
            if !seen.insert(e) {
                return Err(SamplerError::BadEdge(format!("duplicate edge {a}-{b}")));
            }
            out.push(e);
        }
        Ok(Self::from_trusted(lattice, params, seed, out))
    }

    pub fn lattice(&self) -> &LatticeBox {
        &self.lattice
    }

    pub fn n(&self) -> usize {
        self.lattice.n()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn params(&self) -> &LrpParams {
        &self.params
    }

    pub fn adjacency(&self) -> &Adjacency {
        self.adjacency
            .get_or_init(|| Adjacency::build(self.lattice.n(), &self.edges))
    }

    /// Edge set as a sorted list, for comparisons.
    pub fn sorted_edges(&self) -> Vec<(u32, u32)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    pub fn to_text(&self) -> String {
        let p = &self.params;
        let mut out = format!(
            "{} {} {} {} {} {}\n",
            p.d,
            self.lattice.side(),
            self.seed,
            p.alpha,
            p.beta,
            p.p
        );
        out.reserve(self.edges.len() * 12);
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "{i} {j}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, SamplerError> {
        let parse_err = |m: String| SamplerError::Parse(m);
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<&str> = lines
            .next()
            .ok_or_else(|| parse_err("missing header".into()))?
            .split_whitespace()
            .collect();
        if header.len() != 6 {
            return Err(parse_err("header must be `d L seed alpha beta p`".into()));
        }
        let num = |i: usize| {
            header[i]
                .parse::<f64>()
                .map_err(|e| parse_err(format!("{e}")))
        };
        let int = |i: usize| {
            header[i]
                .parse::<u64>()
                .map_err(|e| parse_err(format!("{e}")))
        };
        let d = int(0)? as usize;
        let side = int(1)? as usize;
        let seed = int(2)?;
        let params = LrpParams::new(d, num(3)?, num(4)?, num(5)?)?;
        let lattice = LatticeBox::new(d, side)?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) => edges.push((a, b)),
                _ => return Err(parse_err(format!("bad edge line `{line}`"))),
            }
        }
        Self::from_edges(lattice, params, seed, edges)
    }
}

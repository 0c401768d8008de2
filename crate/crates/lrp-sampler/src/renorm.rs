use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;

use crate::{SampledGraph, SamplerError};

/// Coarse lattice of `K^d` cells over the box with active cells and open links.
#[derive(Clone, Debug)]
pub struct RenormalizedConfig {
    pub d: usize,
    /// Cells per axis, `K = ceil(L / (beta / (2 sqrt d)))`.
    pub cells_per_axis: usize,
    /// `m = K^d`.
    pub m: usize,
    /// Real side length `L / K` of every cell.
    pub cell_side: f64,
    /// `(L/K)^d / 2`.
    pub c_beta: f64,
    pub active: Vec<bool>,
    /// Face-adjacent active pairs `(a, b)`, `a < b`, joined by some fine edge.
    pub open_edges: BTreeSet<(usize, usize)>,
    /// Fine sites per cell.
    pub occupancy: Vec<usize>,
}

impl RenormalizedConfig {
    fn neighbor_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.cells_per_axis;
        (0..self.m).flat_map(move |c| {
            (0..self.d).filter_map(move |a| {
                let stride = k.pow(a as u32);
                ((c / stride) % k + 1 < k).then_some((c, c + stride))
            })
        })
    }

    pub fn active_fraction(&self) -> f64 {
        self.active.iter().filter(|&&a| a).count() as f64 / self.m as f64
    }

    /// Open links over face-adjacent pairs with both cells active; `NaN` if there are none.
    pub fn open_fraction(&self) -> f64 {
        let candidates = self
            .neighbor_pairs()
            .filter(|&(a, b)| self.active[a] && self.active[b])
            .count();
        if candidates == 0 {
            f64::NAN
        } else {
            self.open_edges.len() as f64 / candidates as f64
        }
    }

    /// Number of cells in the largest cluster of active cells under open links.
    pub fn largest_cluster(&self) -> usize {
        let mut uf = UnionFind::<u32>::new(self.m);
        for &(a, b) in &self.open_edges {
            uf.union(a as u32, b as u32);
        }
        let mut sizes = vec![0usize; self.m];
        for c in 0..self.m {
            if self.active[c] {
                sizes[uf.find_mut(c as u32) as usize] += 1;
            }
        }
        sizes.into_iter().max().unwrap_or(0)
    }

    pub fn min_occupancy(&self) -> usize {
        self.occupancy.iter().copied().min().unwrap_or(0)
    }

    /// Largest coarse cluster times the smallest cell occupancy.
    pub fn certified_bound(&self) -> usize {
        self.largest_cluster() * self.min_occupancy()
    }
}

pub fn cells_per_axis(side: usize, d: usize, beta: f64) -> Result<usize, SamplerError> {
    let s = beta / (2.0 * (d as f64).sqrt());
    if s < 1.0 {
        return Err(SamplerError::CoarseTooFine { beta, d });
    }
    Ok((side as f64 / s).ceil() as usize)
}

pub fn renormalize(graph: &SampledGraph) -> Result<RenormalizedConfig, SamplerError> {
    let lattice = graph.lattice();
    let d = lattice.d();
    let side = lattice.side();
    let k = cells_per_axis(side, d, graph.params().beta)?;
    let m = k.pow(d as u32);
    let region = lattice.region();
    // cell coordinate along an axis: floor(offset * K / L)
    let cell_of = |i: usize| -> usize {
        let mut c = 0;
        let mut stride = 1;
        for a in 0..d {
            let off = (region.coord(i, a) - region.lo()[a]) as usize;
            c += (off * k / side) * stride;
            stride *= k;
        }
        c
    };
    let n = lattice.n();
    let cell: Vec<usize> = (0..n).map(cell_of).collect();
    let mut occupancy = vec![0usize; m];
    for &c in &cell {
        occupancy[c] += 1;
    }

    let mut uf = UnionFind::<u32>::new(n);
    for &(i, j) in graph.edges() {
        if cell[i as usize] == cell[j as usize] {
            uf.union(i, j);
        }
    }
    let mut root: Vec<Option<u32>> = vec![None; m];
    let mut active = vec![true; m];
    for i in 0..n {
        let r = uf.find_mut(i as u32);
        let c = cell[i];
        match root[c] {
            None => root[c] = Some(r),
            Some(r0) if r0 != r => active[c] = false,
            _ => {}
        }
    }

    let mut open_edges = BTreeSet::new();
    for &(i, j) in graph.edges() {
        let (a, b) = (cell[i as usize], cell[j as usize]);
        if a == b || !active[a] || !active[b] {
            continue;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let diff = hi - lo;
        let face = (0..d).any(|ax| {
            let stride = k.pow(ax as u32);
            diff == stride && (lo / stride) % k + 1 < k
        });
        if face {
            open_edges.insert((lo, hi));
        }
    }

    let cell_side = side as f64 / k as f64;
    Ok(RenormalizedConfig {
        d,
        cells_per_axis: k,
        m,
        cell_side,
        c_beta: cell_side.powi(d as i32) / 2.0,
        active,
        open_edges,
        occupancy,
    })
}

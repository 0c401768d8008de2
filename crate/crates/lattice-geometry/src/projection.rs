use std::collections::BTreeSet;

use crate::{boundaries, LatticeBox, SiteSet};

/// Axis projections of a set and the fibers of its largest projection.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectionReport {
    /// `|S_i|`, where `S_i` drops coordinate `i`.
    pub sizes: Vec<usize>,
    pub loomis_whitney: bool,
    /// Axis of the largest projection, smallest axis on ties.
    pub star_axis: usize,
    pub star: BTreeSet<Vec<i64>>,
    /// Points of the largest projection whose line holds no box-interior-boundary site.
    pub fibers: BTreeSet<Vec<i64>>,
}

fn drop_axis(x: &[i64], axis: usize) -> Vec<i64> {
    x.iter()
        .enumerate()
        .filter(|&(a, _)| a != axis)
        .map(|(_, &v)| v)
        .collect()
}

/// `a^(d-1) <= prod` without overflow.
fn lw_holds(size: usize, d: usize, proj: &[usize]) -> bool {
    let lhs = (size as u128).checked_pow(d as u32 - 1);
    let rhs = proj
        .iter()
        .try_fold(1u128, |acc, &s| acc.checked_mul(s as u128));
    match (lhs, rhs) {
        (Some(l), Some(r)) => l <= r,
        _ => {
            let l = (d as f64 - 1.0) * (size as f64).ln();
            let r: f64 = proj.iter().map(|&s| (s as f64).ln()).sum();
            l <= r + 1e-12
        }
    }
}

pub fn projections_and_fibers(a: &SiteSet, lattice: &LatticeBox) -> ProjectionReport {
    let d = a.dim();
    let pts = a.coords();
    let sets: Vec<BTreeSet<Vec<i64>>> = (0..d)
        .map(|axis| pts.iter().map(|x| drop_axis(x, axis)).collect())
        .collect();
    let sizes: Vec<usize> = sets.iter().map(|s| s.len()).collect();
    let mut star_axis = 0;
    for (axis, &s) in sizes.iter().enumerate() {
        if s > sizes[star_axis] {
            star_axis = axis;
        }
    }
    let star = sets.into_iter().nth(star_axis).unwrap_or_default();
    let bd = boundaries(a, lattice);
    let blocked: BTreeSet<Vec<i64>> = bd
        .int_box
        .coords()
        .iter()
        .map(|x| drop_axis(x, star_axis))
        .collect();
    let fibers = star.difference(&blocked).cloned().collect();
    ProjectionReport {
        loomis_whitney: lw_holds(a.len(), d, &sizes),
        sizes,
        star_axis,
        star,
        fibers,
    }
}

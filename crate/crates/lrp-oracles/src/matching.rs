use std::collections::HashSet;

use lattice_geometry::{boundaries, one_adjacent, LatticeBox, SiteSet};

use crate::OracleError;

fn rebase_checked(blocks: &[SiteSet], lattice: &LatticeBox) -> Result<Vec<SiteSet>, OracleError> {
    let blocks: Vec<SiteSet> = blocks
        .iter()
        .map(|b| b.rebase(lattice.region()))
        .collect::<Result<_, _>>()?;
    for i in 0..blocks.len() {
        for j in i + 1..blocks.len() {
            if one_adjacent(&blocks[i], &blocks[j]) {
                return Err(OracleError::BlocksTouch(i, j));
            }
        }
    }
    Ok(blocks)
}

/// Greedy matching of interior-boundary sites to exterior-boundary sites (both
/// relative to the box): interior sites are scanned by increasing box index and
/// each takes its first unused exterior neighbor, axis by axis, lower side first.
pub fn greedy_t_matching(
    blocks: &[SiteSet],
    lattice: &LatticeBox,
) -> Result<Vec<(usize, usize)>, OracleError> {
    let blocks = rebase_checked(blocks, lattice)?;
    let region = lattice.region();
    let n = lattice.n();
    let mut inside = vec![false; n];
    for b in &blocks {
        for &i in b.indices() {
            inside[i] = true;
        }
    }
    let neighbors = |i: usize| {
        (0..lattice.d())
            .flat_map(move |axis| [false, true].map(|up| region.step(i, axis, up)))
            .flatten()
    };
    let mut used = vec![false; n];
    let mut pairs = Vec::new();
    for x in (0..n).filter(|&x| inside[x]) {
        if !neighbors(x).any(|y| !inside[y]) {
            continue;
        }
        if let Some(y) = neighbors(x).find(|&y| !inside[y] && !used[y]) {
            used[y] = true;
            pairs.push((x, y));
        }
    }
    Ok(pairs)
}

/// Checks a matching against the blocks: every pair joins a box interior-boundary
/// site to a neighboring box exterior-boundary site, no site appears twice, and
/// there are at least `Σ |interior boundary| / (2d)` pairs.
pub fn check_t_matching(
    blocks: &[SiteSet],
    lattice: &LatticeBox,
    t: &[(usize, usize)],
) -> Result<(), String> {
    let blocks = rebase_checked(blocks, lattice).map_err(|e| e.to_string())?;
    let region = lattice.region();
    let mut int = HashSet::new();
    let mut ext = HashSet::new();
    for b in &blocks {
        let r = boundaries(b, lattice);
        for x in r.int_box.coords() {
            int.insert(region.index(&x).expect("interior boundary lies in the box"));
        }
        for y in r.ext_box.coords() {
            ext.insert(
                region
                    .index(&y)
                    .expect("box exterior boundary lies in the box"),
            );
        }
    }
    let mut seen = HashSet::new();
    for &(x, y) in t {
        if !int.contains(&x) {
            return Err(format!("{x} is not an interior-boundary site"));
        }
        if !ext.contains(&y) {
            return Err(format!("{y} is not an exterior-boundary site"));
        }
        let (cx, cy) = (region.coords(x), region.coords(y));
        let dist: i64 = cx.iter().zip(&cy).map(|(a, b)| (a - b).abs()).sum();
        if dist != 1 {
            return Err(format!("{x} and {y} are not neighbors"));
        }
        if !seen.insert(x) || !seen.insert(y) {
            return Err(format!("pair ({x}, {y}) reuses a site"));
        }
    }
    let total: usize = blocks
        .iter()
        .map(|b| boundaries(b, lattice).int_box.len())
        .sum();
    if 2 * lattice.d() * t.len() < total {
        return Err(format!(
            "{} pairs for {total} interior-boundary sites in dimension {}",
            t.len(),
            lattice.d()
        ));
    }
    Ok(())
}

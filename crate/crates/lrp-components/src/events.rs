use lattice_geometry::{boundaries, closure_and_holes, is_one_connected, one_adjacent, SiteSet};
use lrp_sampler::SampledGraph;

use crate::{BlockGraph, ComponentError};

/// Whether some graph edge joins a site of `from` to a site of `to` (box indices).
fn joined(graph: &SampledGraph, from: &SiteSet, to: impl Fn(usize) -> bool) -> bool {
    let adj = graph.adjacency();
    from.indices()
        .iter()
        .any(|&i| adj.neighbors(i).iter().any(|&j| to(j as usize)))
}

/// Large-closure candidate: `|closure| > 3n/4`, `|A| <= n/2`, and no edge from `A` to its box exterior boundary.
pub fn check_event_e2_candidate(a: &SiteSet, graph: &SampledGraph) -> bool {
    let lattice = graph.lattice();
    let Ok(a) = a.rebase(lattice.region()) else {
        return false;
    };
    let n = lattice.n();
    if a.is_empty() || 2 * a.len() > n {
        return false;
    }
    let Ok(report) = closure_and_holes(&a) else {
        return false;
    };
    if 4 * report.closure.len() <= 3 * n {
        return false;
    }
    let ext = boundaries(&a, lattice)
        .ext_box
        .rebase(lattice.region())
        .expect("box exterior boundary lies in the box");
    !joined(graph, &a, |j| ext.contains_index(j))
}

/// Small-block candidate family: union of size at least `k`, connected block graph,
/// and no edge from the blocks' free interior boundaries to the rest of the box.
pub fn check_event_e1_candidate(
    blocks: &[SiteSet],
    k: usize,
    graph: &SampledGraph,
) -> Result<bool, ComponentError> {
    let lattice = graph.lattice();
    let region = lattice.region();
    let n = lattice.n();
    let blocks: Vec<SiteSet> = blocks
        .iter()
        .map(|b| b.rebase(region))
        .collect::<Result<_, _>>()?;
    for (i, b) in blocks.iter().enumerate() {
        if b.is_empty() || !is_one_connected(b) {
            return Err(ComponentError::NotSmall(format!(
                "block {i} is not 1-connected"
            )));
        }
        let closure = closure_and_holes(b)?.closure;
        if 4 * closure.len() > 3 * n {
            return Err(ComponentError::NotSmall(format!(
                "block {i} has closure above 3n/4"
            )));
        }
        if closure.len() != b.len() {
            return Err(ComponentError::NotSmall(format!("block {i} has holes")));
        }
        for (j, other) in blocks.iter().enumerate().skip(i + 1) {
            if one_adjacent(b, other) {
                return Err(ComponentError::NotSmall(format!(
                    "blocks {i} and {j} touch"
                )));
            }
        }
    }
    let mut union = SiteSet::new(region.clone());
    for b in &blocks {
        for &i in b.indices() {
            union.insert_index(i);
        }
    }
    if union.len() < k {
        return Ok(false);
    }
    let mut boundary = SiteSet::new(region.clone());
    for b in &blocks {
        let int_free = boundaries(b, lattice).int_free.rebase(region)?;
        for &i in int_free.indices() {
            boundary.insert_index(i);
        }
    }
    if joined(graph, &boundary, |j| !union.contains_index(j)) {
        return Ok(false);
    }
    Ok(BlockGraph::from_blocks(blocks, graph)?.is_connected())
}

use lattice_geometry::{
    block_decompose, boundaries, closure_and_holes, delta_reference, is_one_connected,
    is_star_connected, isoperimetry_report, one_adjacent, projections_and_fibers, LatticeBox,
    SiteSet,
};
use lrp_sampler::mix_seed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{HarnessError, ReplicaPool};

/// Grows a 1-connected set of up to `size` sites from a uniform random site by
/// repeatedly adding a uniformly chosen entry of the frontier list.
pub fn random_connected_set(lattice: &LatticeBox, size: usize, rng: &mut impl Rng) -> SiteSet {
    let region = lattice.region();
    let mut set = SiteSet::in_box(lattice);
    let mut frontier = vec![rng.random_range(0..lattice.n())];
    while set.len() < size && !frontier.is_empty() {
        let i = frontier.swap_remove(rng.random_range(0..frontier.len()));
        if !set.insert_index(i) {
            continue;
        }
        for axis in 0..lattice.d() {
            for up in [false, true] {
                if let Some(j) = region.step(i, axis, up) {
                    if !set.contains_index(j) {
                        frontier.push(j);
                    }
                }
            }
        }
    }
    set
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeometrySuiteReport {
    pub sets: usize,
    /// Disjoint block pairs checked for nesting or separation of closures.
    pub pairs: usize,
    pub failures: Vec<String>,
    /// Smallest `|box int boundary| / |free int boundary|` among sets meeting the size precondition.
    pub min_int_ratio: f64,
    pub min_ext_ratio: f64,
    pub delta_reference: f64,
}

/// Sites at l1 distance at least 2 from `a`.
fn away_from(b: &SiteSet, a: &SiteSet, lattice: &LatticeBox) -> SiteSet {
    let region = lattice.region();
    let near = |i: usize| {
        a.contains_index(i)
            || (0..lattice.d()).any(|ax| {
                [false, true]
                    .into_iter()
                    .any(|up| region.step(i, ax, up).is_some_and(|j| a.contains_index(j)))
            })
    };
    SiteSet::from_indices(
        region.clone(),
        b.indices().iter().copied().filter(|&i| !near(i)),
    )
}

struct SetOutcome {
    failures: Vec<String>,
    pair: bool,
    int_ratio: f64,
    ext_ratio: f64,
}

fn check_set(lattice: &LatticeBox, seed: u64) -> Result<SetOutcome, HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut fail = |what: &str| failures.push(format!("seed {seed}: {what}"));
    let size = rng.random_range(1..=lattice.n());
    let a = random_connected_set(lattice, size, &mut rng);
    if !is_one_connected(&a) {
        fail("generated set is not 1-connected");
    }

    let report = closure_and_holes(&a)?;
    let cl = &report.closure;
    if cl.rebase(lattice.region()).is_err() {
        fail("closure leaves the box");
    }
    if !a.is_subset(cl) {
        fail("set not contained in its closure");
    }
    let again = closure_and_holes(cl)?;
    if &again.closure != cl || !again.holes.is_empty() {
        fail("closure is not idempotent");
    }

    let ba = boundaries(&a, lattice);
    let bc = boundaries(cl, lattice);
    if !bc.int_free.is_subset(&ba.int_free) {
        fail("closure free interior boundary not inside the set's");
    }
    if !is_star_connected(&bc.int_free) || !is_star_connected(&bc.ext_free) {
        fail("closure boundary not *-connected");
    }
    for h in &report.holes {
        let hr = closure_and_holes(h)?;
        if !hr.holes.is_empty() || hr.closure != *h {
            fail("hole has holes");
        }
        let bh = boundaries(h, lattice);
        if !is_star_connected(&bh.int_free) || !is_star_connected(&bh.ext_free) {
            fail("hole boundary not *-connected");
        }
        if bh.int_box != bh.int_free || !bh.int_free.is_subset(&ba.ext_box) {
            fail("hole interior boundary not inside the set's box exterior boundary");
        }
    }

    // a second block, 1-disconnected from the first
    let other_size = rng.random_range(1..=lattice.n());
    let other = random_connected_set(lattice, other_size, &mut rng);
    let rest = away_from(&other, &a, lattice);
    let pair = match block_decompose(&rest).into_iter().next() {
        Some(b) => {
            let cb = closure_and_holes(&b)?.closure;
            let nested = cl.is_subset(&cb) || cb.is_subset(cl);
            let apart = !one_adjacent(cl, &cb);
            if cl.is_disjoint(&cb) {
                if !apart {
                    fail("disjoint closures touch");
                }
            } else if !nested {
                fail("intersecting closures are not nested");
            }
            if nested == apart {
                fail("closures both or neither nested and apart");
            }
            true
        }
        None => false,
    };

    let iso = isoperimetry_report(&a, lattice);
    if !iso.int_free_ok || !iso.ext_free_ok {
        fail("*-isoperimetry");
    }
    let (mut int_ratio, mut ext_ratio) = (f64::INFINITY, f64::INFINITY);
    if iso.precondition {
        if iso.int_box == 0 || iso.ext_box == 0 {
            fail("empty box boundary under the size precondition");
        }
        int_ratio = iso.int_ratio;
        ext_ratio = iso.ext_ratio;
    }
    let proj = projections_and_fibers(&a, lattice);
    if !proj.loomis_whitney {
        fail("Loomis-Whitney");
    }
    Ok(SetOutcome {
        failures,
        pair,
        int_ratio,
        ext_ratio,
    })
}

/// Checks closure, hole, boundary, isoperimetric and projection invariants on
/// `count` random connected sets in a box of side `side` (d = 2).
pub fn run_geometry_suite(
    count: usize,
    side: usize,
    master_seed: u64,
    pool: &ReplicaPool,
) -> Result<GeometrySuiteReport, HarnessError> {
    let lattice = LatticeBox::new(2, side)?;
    let outcomes = pool.map(count, |i| {
        check_set(&lattice, mix_seed(master_seed, i as u64))
    });
    let mut report = GeometrySuiteReport {
        sets: count,
        pairs: 0,
        failures: Vec::new(),
        min_int_ratio: f64::INFINITY,
        min_ext_ratio: f64::INFINITY,
        delta_reference: delta_reference(2),
    };
    for o in outcomes {
        let o = o?;
        report.pairs += usize::from(o.pair);
        report.failures.extend(o.failures);
        report.min_int_ratio = report.min_int_ratio.min(o.int_ratio);
        report.min_ext_ratio = report.min_ext_ratio.min(o.ext_ratio);
    }
    Ok(report)
}

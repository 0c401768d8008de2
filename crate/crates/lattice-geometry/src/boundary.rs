use fixedbitset::FixedBitSet;

use crate::{LatticeBox, SiteSet};

/// Interior and exterior vertex boundaries, relative to the box and to all of Z^d.
///
/// All four sets live on the set's region grown by one.
#[derive(Clone, Debug)]
pub struct BoundaryReport {
    pub int_box: SiteSet,
    pub ext_box: SiteSet,
    pub int_free: SiteSet,
    pub ext_free: SiteSet,
}

pub fn boundaries(a: &SiteSet, lattice: &LatticeBox) -> BoundaryReport {
    let region = a.region().grow(1);
    let mut int_box = SiteSet::new(region.clone());
    let mut ext_box = SiteSet::new(region.clone());
    let mut int_free = SiteSet::new(region.clone());
    let mut ext_free = SiteSet::new(region.clone());

    let d = a.dim();
    let mut inside = FixedBitSet::with_capacity(region.len());
    let mut buf = vec![0i64; d];
    let mut grown_idx = Vec::with_capacity(a.len());
    for i in a.mask().ones() {
        a.region().coords_into(i, &mut buf);
        let g = region.index(&buf).expect("grown region holds the set");
        inside.insert(g);
        grown_idx.push(g);
    }
    for &x in &grown_idx {
        for axis in 0..d {
            for up in [false, true] {
                let y = region.step(x, axis, up).expect("margin one");
                if inside.contains(y) {
                    continue;
                }
                ext_free.insert_index(y);
                int_free.insert_index(x);
                region.coords_into(y, &mut buf);
                if lattice.region().contains(&buf) {
                    ext_box.insert_index(y);
                    int_box.insert_index(x);
                }
            }
        }
    }
    BoundaryReport {
        int_box,
        ext_box,
        int_free,
        ext_free,
    }
}

/// Outcome of the isoperimetric checks for one set.
#[derive(Clone, Debug, PartialEq)]
pub struct IsoperimetryReport {
    pub size: usize,
    /// `|A|^{(d-1)/d}`.
    pub bound: f64,
    pub int_free: usize,
    pub ext_free: usize,
    pub int_box: usize,
    pub ext_box: usize,
    pub int_free_ok: bool,
    pub ext_free_ok: bool,
    /// `|∂_int A| / |∂̃_int A|`.
    pub int_ratio: f64,
    /// `|∂_ext A| / |∂̃_ext A|`.
    pub ext_ratio: f64,
    /// `|A| <= 3n/4` or A avoids the box's own interior boundary.
    pub precondition: bool,
}

pub fn isoperimetry_report(a: &SiteSet, lattice: &LatticeBox) -> IsoperimetryReport {
    let b = boundaries(a, lattice);
    let d = a.dim() as f64;
    let size = a.len();
    let bound = (size as f64).powf((d - 1.0) / d);
    let ratio = |num: usize, den: usize| {
        if den == 0 {
            f64::NAN
        } else {
            num as f64 / den as f64
        }
    };
    let touches_box_boundary = a.indices().iter().any(|&i| {
        let x = a.region().coords(i);
        (0..lattice.d())
            .any(|ax| x[ax] == lattice.region().lo()[ax] || x[ax] == lattice.region().hi(ax))
    });
    IsoperimetryReport {
        size,
        bound,
        int_free: b.int_free.len(),
        ext_free: b.ext_free.len(),
        int_box: b.int_box.len(),
        ext_box: b.ext_box.len(),
        int_free_ok: b.int_free.len() as f64 >= bound - 1e-9,
        ext_free_ok: b.ext_free.len() as f64 >= bound - 1e-9,
        int_ratio: ratio(b.int_box.len(), b.int_free.len()),
        ext_ratio: ratio(b.ext_box.len(), b.ext_free.len()),
        precondition: 4 * size <= 3 * lattice.n() || !touches_box_boundary,
    }
}

/// `(1 - (3/4)^{1/d}) / 3`, reported next to the empirical minimum ratio.
pub fn delta_reference(d: usize) -> f64 {
    (1.0 - 0.75f64.powf(1.0 / d as f64)) / 3.0
}

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use fixedbitset::FixedBitSet;

use crate::blocks::{block_decompose, is_one_connected, neighbors_one};
use crate::{GeometryError, SiteSet};

/// Closure of a block together with its holes.
#[derive(Clone, Debug)]
pub struct HoleReport {
    pub closure: SiteSet,
    pub holes: Vec<SiteSet>,
    /// Hole type to number of holes of that type.
    pub type_counts: BTreeMap<u32, usize>,
}

/// Principal-type analysis of a hole report.
#[derive(Clone, Debug, PartialEq)]
pub struct HoleTyping {
    /// Threshold `h_n(i)` for every type that occurs.
    pub thresholds: BTreeMap<u32, f64>,
    pub principal_types: BTreeSet<u32>,
    pub r2: Option<u64>,
    pub i_star: Option<u32>,
}

/// Sites unreachable from outside the bounding box of `s` by ℓ1 paths avoiding `s`,
/// together with `s` itself, over `s`'s region.
pub fn fill(s: &SiteSet) -> SiteSet {
    let Some(bbox) = s.bounding_region() else {
        return SiteSet::new(s.region().clone());
    };
    let work = bbox.grow(1);
    let mut inside = FixedBitSet::with_capacity(work.len());
    let mut buf = vec![0i64; s.dim()];
    for i in s.mask().ones() {
        s.region().coords_into(i, &mut buf);
        inside.insert(work.index(&buf).expect("bounding box holds the set"));
    }
    let mut reached = FixedBitSet::with_capacity(work.len());
    let mut queue = VecDeque::new();
    for i in 0..work.len() {
        if work.on_frame(i) {
            reached.insert(i);
            queue.push_back(i);
        }
    }
    while let Some(i) = queue.pop_front() {
        neighbors_one(&work, i, |j| {
            if !inside.contains(j) && !reached.put(j) {
                queue.push_back(j);
            }
        });
    }
    let mut out = SiteSet::new(s.region().clone());
    for i in 0..work.len() {
        if !reached.contains(i) {
            work.coords_into(i, &mut buf);
            out.insert(&buf)
                .expect("filled sites stay inside the bounding box");
        }
    }
    out
}

/// Type of a hole of the given size: `i` with size in `(2^{i-1}, 2^i]`, single sites in type 1.
pub fn hole_type(size: usize) -> u32 {
    assert!(size > 0);
    let t = usize::BITS - (size - 1).leading_zeros();
    t.max(1)
}

/// `2^{-i-3} i^{-2} n`.
pub fn principal_threshold(i: u32, n: usize) -> f64 {
    2f64.powi(-(i as i32) - 3) / (i as f64 * i as f64) * n as f64
}

/// `floor(beta / sqrt(d))`, at least 1.
pub fn r2(beta: f64, d: usize) -> u64 {
    ((beta / (d as f64).sqrt()).floor() as u64).max(1)
}

/// `1 + ceil(d/(d-1) * log2 R_2)`, defined for `d >= 2`.
pub fn i_star(beta: f64, d: usize) -> Option<u32> {
    if d < 2 {
        return None;
    }
    let r = r2(beta, d) as f64;
    let v = d as f64 / (d as f64 - 1.0) * r.log2();
    // guard against log2 of exact powers of two landing a hair above an integer
    let c = (v - 1e-12).ceil().max(0.0);
    Some(1 + c as u32)
}

pub fn closure_and_holes(a: &SiteSet) -> Result<HoleReport, GeometryError> {
    if a.is_empty() {
        return Ok(HoleReport {
            closure: a.clone(),
            holes: Vec::new(),
            type_counts: BTreeMap::new(),
        });
    }
    if !is_one_connected(a) {
        return Err(GeometryError::NotConnected);
    }
    let closure = fill(a);
    let holes = block_decompose(&closure.difference(a));
    let mut type_counts = BTreeMap::new();
    for h in &holes {
        *type_counts.entry(hole_type(h.len())).or_insert(0) += 1;
    }
    Ok(HoleReport {
        closure,
        holes,
        type_counts,
    })
}

/// Closure of a 1-connected set.
pub fn closure(a: &SiteSet) -> Result<SiteSet, GeometryError> {
    closure_and_holes(a).map(|r| r.closure)
}

pub fn hole_typing(report: &HoleReport, n: usize, d: usize, beta: Option<f64>) -> HoleTyping {
    let mut thresholds = BTreeMap::new();
    let mut principal_types = BTreeSet::new();
    for (&i, &count) in &report.type_counts {
        let h = principal_threshold(i, n);
        thresholds.insert(i, h);
        if count as f64 >= h {
            principal_types.insert(i);
        }
    }
    HoleTyping {
        thresholds,
        principal_types,
        r2: beta.map(|b| r2(b, d)),
        i_star: beta.and_then(|b| i_star(b, d)),
    }
}

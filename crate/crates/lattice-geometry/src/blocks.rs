use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::{Region, SiteSet};

/// Adjacency used for connectivity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adjacency {
    /// ℓ1 distance one.
    One,
    /// ℓ∞ distance one.
    Star,
}

fn for_each_neighbor(region: &Region, idx: usize, adj: Adjacency, mut f: impl FnMut(usize)) {
    match adj {
        Adjacency::One => {
            for a in 0..region.dim() {
                if let Some(j) = region.step(idx, a, false) {
                    f(j);
                }
                if let Some(j) = region.step(idx, a, true) {
                    f(j);
                }
            }
        }
        Adjacency::Star => {
            let d = region.dim();
            let total = 3usize.pow(d as u32);
            'offsets: for code in 0..total {
                if code == (total - 1) / 2 {
                    continue;
                }
                let mut c = code;
                let mut j = idx;
                for a in 0..d {
                    let digit = c % 3;
                    c /= 3;
                    match digit {
                        0 => match region.step(j, a, false) {
                            Some(t) => j = t,
                            None => continue 'offsets,
                        },
                        2 => match region.step(j, a, true) {
                            Some(t) => j = t,
                            None => continue 'offsets,
                        },
                        _ => {}
                    }
                }
                f(j);
            }
        }
    }
}

/// Connected components of `s` under the given adjacency, ordered by minimal index.
pub fn components(s: &SiteSet, adj: Adjacency) -> Vec<SiteSet> {
    let region = s.region();
    let mut seen = FixedBitSet::with_capacity(region.len());
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in s.mask().ones() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = SiteSet::new(region.clone());
        seen.insert(start);
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            comp.insert_index(i);
            for_each_neighbor(region, i, adj, |j| {
                if s.contains_index(j) && !seen.put(j) {
                    queue.push_back(j);
                }
            });
        }
        out.push(comp);
    }
    out
}

/// Partition into maximal 1-connected blocks, ordered by minimal site index.
pub fn block_decompose(s: &SiteSet) -> Vec<SiteSet> {
    components(s, Adjacency::One)
}

pub fn is_one_connected(s: &SiteSet) -> bool {
    components(s, Adjacency::One).len() == 1
}

pub fn is_star_connected(s: &SiteSet) -> bool {
    components(s, Adjacency::Star).len() == 1
}

/// Whether some site of `a` is at ℓ1-distance at most one from some site of `b`.
pub fn one_adjacent(a: &SiteSet, b: &SiteSet) -> bool {
    let region = a.region().grow(1);
    let mut buf = vec![0i64; a.dim()];
    for i in a.mask().ones() {
        a.region().coords_into(i, &mut buf);
        if b.contains(&buf) {
            return true;
        }
        let idx = region.index(&buf).expect("grown region holds the set");
        let mut hit = false;
        for_each_neighbor(&region, idx, Adjacency::One, |j| {
            if !hit && b.contains(&region.coords(j)) {
                hit = true;
            }
        });
        if hit {
            return true;
        }
    }
    false
}

pub(crate) fn neighbors_one(region: &Region, idx: usize, f: impl FnMut(usize)) {
    for_each_neighbor(region, idx, Adjacency::One, f)
}

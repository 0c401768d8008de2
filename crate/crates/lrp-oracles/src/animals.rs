use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use lattice_geometry::{boundaries, closure, LatticeBox, SiteSet};
use rayon::prelude::*;

use crate::redelmeier::{Redelmeier, EIGHT, FOUR};
use crate::OracleError;

/// Largest free interior boundary size the census will enumerate.
pub const MAX_CENSUS_BOUNDARY: usize = 14;

/// Number of hole-free blocks containing a fixed site, by free interior boundary size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnimalCensus {
    pub d: usize,
    pub m_max: usize,
    pub per_m: BTreeMap<usize, u64>,
}

impl AnimalCensus {
    pub fn count(&self, m: usize) -> u64 {
        self.per_m.get(&m).copied().unwrap_or(0)
    }

    /// `ln(count(m)) / m`, or `None` when the count is zero.
    pub fn growth_rate(&self, m: usize) -> Option<f64> {
        let c = self.count(m);
        (c > 0 && m > 0).then(|| (c as f64).ln() / m as f64)
    }

    /// Least-squares slope of `ln(count(m))` against `m` over the nonzero counts.
    pub fn fitted_rate(&self) -> Option<f64> {
        let pts: Vec<(f64, f64)> = self
            .per_m
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&m, &c)| (m as f64, (c as f64).ln()))
            .collect();
        if pts.len() < 2 {
            return None;
        }
        let k = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        Some(sxy / sxx)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("# d={} m_max={}\nm,count\n", self.d, self.m_max);
        for (m, c) in &self.per_m {
            writeln!(s, "{m},{c}").unwrap();
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, OracleError> {
        let bad = |what: &str| OracleError::Cache(what.to_string());
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty file"))?;
        let rest = header
            .strip_prefix("# d=")
            .ok_or_else(|| bad("missing header"))?;
        let (d, m_max) = rest
            .split_once(" m_max=")
            .ok_or_else(|| bad("missing m_max"))?;
        let d = d.parse().map_err(|_| bad("bad d"))?;
        let m_max = m_max.parse().map_err(|_| bad("bad m_max"))?;
        if lines.next() != Some("m,count") {
            return Err(bad("missing column header"));
        }
        let mut per_m = BTreeMap::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let (m, c) = line.split_once(',').ok_or_else(|| bad(line))?;
            per_m.insert(
                m.parse().map_err(|_| bad(line))?,
                c.parse().map_err(|_| bad(line))?,
            );
        }
        Ok(AnimalCensus { d, m_max, per_m })
    }
}

/// `ln(8e) + 2 ln(m) / m`: at most `m^2 (8e)^m` hole-free blocks through a site
/// have free interior boundary size `m`, since boundaries are *-connected
/// animals (at most `(8e)^m` translation classes) and each block fits in an
/// `m × m` bounding box.
pub fn peierls_envelope(m: usize) -> f64 {
    let m = m as f64;
    (8.0 * std::f64::consts::E).ln() + 2.0 * m.ln() / m
}

/// Exact census of hole-free blocks through the origin in Z^2 by free interior boundary size.
///
/// A hole-free block is the fill of its free interior boundary, which is
/// *-connected; so every *-connected animal `S` (up to translation) is filled,
/// kept if the fill is 1-connected with interior boundary exactly `S`, and
/// weighted by the fill's size (its translates containing the origin).
pub fn enumerate_hole_free_animals(d: usize, m_max: usize) -> Result<AnimalCensus, OracleError> {
    if d != 2 {
        return Err(OracleError::Unsupported(format!("census in dimension {d}")));
    }
    if m_max == 0 || m_max > MAX_CENSUS_BOUNDARY {
        return Err(OracleError::Guard(format!(
            "m_max = {m_max} outside 1..={MAX_CENSUS_BOUNDARY}"
        )));
    }
    let (_, first) = Redelmeier::with_anchor(&EIGHT, m_max);
    let mut counts = vec![0u64; m_max + 1];
    counts[1] = 1;
    if m_max > 1 {
        let parts: Vec<Vec<u64>> = (0..first.len())
            .into_par_iter()
            .map(|i| {
                let (mut e, first) = Redelmeier::with_anchor(&EIGHT, m_max);
                let mut local = vec![0u64; m_max + 1];
                e.branch(&first, i, &mut |cells| {
                    local[cells.len()] += filled_weight(cells);
                });
                local
            })
            .collect();
        for part in parts {
            for (c, x) in counts.iter_mut().zip(part) {
                *c += x;
            }
        }
    }
    let per_m = (1..=m_max).map(|m| (m, counts[m])).collect();
    Ok(AnimalCensus { d, m_max, per_m })
}

const ROWS: usize = MAX_CENSUS_BOUNDARY + 2;

/// Size of the fill of `cells` if it is a 1-connected set whose free interior
/// boundary is exactly `cells`, else 0. Rows are bitmasks with a one-cell margin.
fn filled_weight(cells: &[(i32, i32)]) -> u64 {
    let (mut minx, mut maxx, mut maxy) = (i32::MAX, i32::MIN, 0);
    for &(x, y) in cells {
        minx = minx.min(x);
        maxx = maxx.max(x);
        maxy = maxy.max(y);
    }
    let w = (maxx - minx + 3) as u32;
    let h = (maxy + 3) as usize;
    let full = (1u32 << w) - 1;
    let mut s = [0u32; ROWS];
    for &(x, y) in cells {
        s[(y + 1) as usize] |= 1 << (x - minx + 1);
    }
    let mut out = [0u32; ROWS];
    out[0] = full;
    out[h - 1] = full;
    for r in 1..h - 1 {
        out[r] = (1 | 1 << (w - 1)) & !s[r];
    }
    spread(&mut out, |r| full & !s[r], h);

    let mut a = [0u32; ROWS];
    for r in 1..h - 1 {
        a[r] = full & !out[r];
        let touching = a[r] & (out[r] << 1 | out[r] >> 1 | out[r - 1] | out[r + 1]);
        if touching != s[r] {
            return 0;
        }
    }
    let mut reach = [0u32; ROWS];
    reach[1] = s[1] & s[1].wrapping_neg();
    spread(&mut reach, |r| a[r], h);
    if reach[..h] != a[..h] {
        return 0;
    }
    a[..h].iter().map(|r| r.count_ones() as u64).sum()
}

/// Grows `set` by 4-adjacency within `allowed` until it stops changing.
fn spread(set: &mut [u32; ROWS], allowed: impl Fn(usize) -> u32, h: usize) {
    loop {
        let mut changed = false;
        let rows = (1..h - 1).chain((1..h - 1).rev());
        for r in rows {
            let ok = allowed(r);
            let mut v = (set[r] | set[r - 1] | set[r + 1]) & ok;
            loop {
                let nv = (v | v << 1 | v >> 1) & ok;
                if nv == v {
                    break;
                }
                v = nv;
            }
            if v != set[r] {
                set[r] = v;
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// Census by brute force over fixed polyominoes with up to `max_cells` cells,
/// using the general closure and boundary routines. Exact for every `m` whose
/// hole-free blocks all have at most `max_cells` cells.
pub fn polyomino_census(max_cells: usize) -> BTreeMap<usize, u64> {
    let big = LatticeBox::new(2, 1).expect("unit box");
    let mut per_m = BTreeMap::new();
    let mut visit = |cells: &[(i32, i32)]| {
        let set = SiteSet::free(2, cells.iter().map(|&(x, y)| [x as i64, y as i64]))
            .expect("two-dimensional cells");
        let hole_free = closure(&set).expect("polyominoes are blocks").len() == set.len();
        if hole_free {
            let m = boundaries(&set, &big).int_free.len();
            *per_m.entry(m).or_insert(0u64) += cells.len() as u64;
        }
    };
    let (mut e, first) = Redelmeier::with_anchor(&FOUR, max_cells);
    visit(e.cells());
    if max_cells > 1 {
        for i in 0..first.len() {
            e.branch(&first, i, &mut visit);
        }
    }
    per_m
}

pub fn census_cache_path(dir: &Path, d: usize, m_max: usize) -> PathBuf {
    dir.join(format!("census_d{d}_m{m_max}.txt"))
}

/// Loads the census for `(d, m_max)` from `dir`, computing and writing it if absent.
pub fn cached_census(dir: &Path, d: usize, m_max: usize) -> Result<AnimalCensus, OracleError> {
    let path = census_cache_path(dir, d, m_max);
    if let Ok(text) = std::fs::read_to_string(&path) {
        let census = AnimalCensus::from_text(&text)?;
        if census.d == d && census.m_max == m_max {
            return Ok(census);
        }
    }
    let census = enumerate_hole_free_animals(d, m_max)?;
    std::fs::create_dir_all(dir)?;
    std::fs::write(&path, census.to_text())?;
    Ok(census)
}

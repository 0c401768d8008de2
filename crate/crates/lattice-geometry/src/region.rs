use crate::GeometryError;

/// Axis-aligned rectangular window of Z^d with a row-major index.
///
/// Axis 0 varies fastest, so index order equals lexicographic order on
/// `(x_{d-1}, ..., x_0)` in every region. Blocks and holes are ordered by
/// this index, which makes the ordering independent of the window chosen.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    lo: Vec<i64>,
    ext: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl Region {
    pub fn new(lo: Vec<i64>, ext: Vec<usize>) -> Self {
        assert_eq!(
            lo.len(),
            ext.len(),
            "lo and ext must have the same dimension"
        );
        assert!(!lo.is_empty(), "dimension must be at least 1");
        let mut strides = Vec::with_capacity(ext.len());
        let mut len = 1usize;
        for &e in &ext {
            strides.push(len);
            len = len.checked_mul(e).expect("region too large");
        }
        Region {
            lo,
            ext,
            strides,
            len,
        }
    }

    /// Smallest region containing all the given points.
    pub fn bounding<'a, I>(d: usize, points: I) -> Option<Region>
    where
        I: IntoIterator<Item = &'a [i64]>,
    {
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        let mut any = false;
        for x in points {
            any = true;
            for a in 0..d {
                lo[a] = lo[a].min(x[a]);
                hi[a] = hi[a].max(x[a]);
            }
        }
        if !any {
            return None;
        }
        let ext = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| (h - l + 1) as usize)
            .collect();
        Some(Region::new(lo, ext))
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn ext(&self) -> &[usize] {
        &self.ext
    }

    pub fn stride(&self, axis: usize) -> usize {
        self.strides[axis]
    }

    /// Largest coordinate along `axis`.
    pub fn hi(&self, axis: usize) -> i64 {
        self.lo[axis] + self.ext[axis] as i64 - 1
    }

    pub fn index(&self, x: &[i64]) -> Option<usize> {
        if x.len() != self.dim() {
            return None;
        }
        let mut idx = 0usize;
        for a in 0..self.dim() {
            let off = x[a] - self.lo[a];
            if off < 0 || off >= self.ext[a] as i64 {
                return None;
            }
            idx += off as usize * self.strides[a];
        }
        Some(idx)
    }

    pub fn try_index(&self, x: &[i64]) -> Result<usize, GeometryError> {
        if x.len() != self.dim() {
            return Err(GeometryError::Dimension {
                expected: self.dim(),
                got: x.len(),
            });
        }
        self.index(x)
            .ok_or_else(|| GeometryError::OutOfRegion(x.to_vec()))
    }

    pub fn coord(&self, idx: usize, axis: usize) -> i64 {
        ((idx / self.strides[axis]) % self.ext[axis]) as i64 + self.lo[axis]
    }

    pub fn coords(&self, idx: usize) -> Vec<i64> {
        (0..self.dim()).map(|a| self.coord(idx, a)).collect()
    }

    pub fn coords_into(&self, idx: usize, out: &mut [i64]) {
        for (a, o) in out.iter_mut().enumerate() {
            *o = self.coord(idx, a);
        }
    }

    /// Index of the site one step along `axis` in direction `up`, if it stays inside.
    #[inline]
    pub fn step(&self, idx: usize, axis: usize, up: bool) -> Option<usize> {
        let off = (idx / self.strides[axis]) % self.ext[axis];
        if up {
            (off + 1 < self.ext[axis]).then(|| idx + self.strides[axis])
        } else {
            (off > 0).then(|| idx - self.strides[axis])
        }
    }

    /// Whether the site touches the outer layer of the window.
    pub fn on_frame(&self, idx: usize) -> bool {
        (0..self.dim()).any(|a| {
            let off = (idx / self.strides[a]) % self.ext[a];
            off == 0 || off + 1 == self.ext[a]
        })
    }

    pub fn grow(&self, margin: usize) -> Region {
        Region::new(
            self.lo.iter().map(|l| l - margin as i64).collect(),
            self.ext.iter().map(|e| e + 2 * margin).collect(),
        )
    }

    pub fn contains_region(&self, other: &Region) -> bool {
        self.dim() == other.dim()
            && (0..self.dim()).all(|a| other.lo[a] >= self.lo[a] && other.hi(a) <= self.hi(a))
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.index(x).is_some()
    }
}

/// The finite box with per-axis coordinates the integers in `[-L/2, L/2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeBox {
    d: usize,
    side: usize,
    region: Region,
}

impl LatticeBox {
    pub fn new(d: usize, side: usize) -> Result<Self, GeometryError> {
        if d == 0 || side == 0 {
            return Err(GeometryError::InvalidBox(format!("d={d}, L={side}")));
        }
        if (side as f64).powi(d as i32) > (u32::MAX as f64) {
            return Err(GeometryError::InvalidBox(format!(
                "L^d too large for d={d}, L={side}"
            )));
        }
        let lo = -((side / 2) as i64);
        let region = Region::new(vec![lo; d], vec![side; d]);
        Ok(LatticeBox { d, side, region })
    }

    /// Box with `n = L^d` sites; fails when `n` is not a perfect d-th power.
    pub fn with_sites(d: usize, n: usize) -> Result<Self, GeometryError> {
        let side = (n as f64).powf(1.0 / d as f64).round() as usize;
        if side.checked_pow(d as u32) != Some(n) {
            return Err(GeometryError::InvalidBox(format!(
                "{n} is not a {d}-th power"
            )));
        }
        Self::new(d, side)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn n(&self) -> usize {
        self.region.len()
    }

    /// Coordinate of the minimal corner along every axis.
    pub fn origin_offset(&self) -> i64 {
        self.region.lo()[0]
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn index(&self, x: &[i64]) -> Option<usize> {
        self.region.index(x)
    }

    pub fn coords(&self, idx: usize) -> Vec<i64> {
        self.region.coords(idx)
    }

    pub fn origin_index(&self) -> usize {
        self.region
            .index(&vec![0; self.d])
            .expect("origin lies in every box")
    }

    /// Euclidean distance between two sites given by index.
    pub fn distance(&self, i: usize, j: usize) -> f64 {
        (0..self.d)
            .map(|a| {
                let t = (self.region.coord(i, a) - self.region.coord(j, a)) as f64;
                t * t
            })
            .sum::<f64>()
            .sqrt()
    }
}

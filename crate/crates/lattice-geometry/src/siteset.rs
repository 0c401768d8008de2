use fixedbitset::FixedBitSet;

use crate::{GeometryError, LatticeBox, Region};

/// Finite set of sites inside a rectangular region.
///
/// Membership is a bit mask over the region index; `members` keeps insertion order.
#[derive(Clone, Debug)]
pub struct SiteSet {
    region: Region,
    mask: FixedBitSet,
    members: Vec<usize>,
}

impl SiteSet {
    pub fn new(region: Region) -> Self {
        let mask = FixedBitSet::with_capacity(region.len());
        SiteSet {
            region,
            mask,
            members: Vec::new(),
        }
    }

    pub fn in_box(b: &LatticeBox) -> Self {
        Self::new(b.region().clone())
    }

    pub fn full(region: Region) -> Self {
        let mut s = Self::new(region);
        for i in 0..s.region.len() {
            s.insert_index(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(region: Region, idx: I) -> Self {
        let mut s = Self::new(region);
        for i in idx {
            s.insert_index(i);
        }
        s
    }

    pub fn from_coords<I, C>(region: Region, points: I) -> Result<Self, GeometryError>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[i64]>,
    {
        let mut s = Self::new(region);
        for x in points {
            s.insert(x.as_ref())?;
        }
        Ok(s)
    }

    /// Set on the unbounded lattice: the region is the bounding box of the points.
    pub fn free<I, C>(d: usize, points: I) -> Result<Self, GeometryError>
    where
        I: IntoIterator<Item = C>,
        C: AsRef<[i64]>,
    {
        let pts: Vec<Vec<i64>> = points.into_iter().map(|p| p.as_ref().to_vec()).collect();
        if let Some(p) = pts.iter().find(|p| p.len() != d) {
            return Err(GeometryError::Dimension {
                expected: d,
                got: p.len(),
            });
        }
        let region = Region::bounding(d, pts.iter().map(|p| p.as_slice()))
            .unwrap_or_else(|| Region::new(vec![0; d], vec![1; d]));
        Self::from_coords(region, pts)
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn dim(&self) -> usize {
        self.region.dim()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn insert_index(&mut self, idx: usize) -> bool {
        if self.mask.put(idx) {
            false
        } else {
            self.members.push(idx);
            true
        }
    }

    pub fn insert(&mut self, x: &[i64]) -> Result<bool, GeometryError> {
        let idx = self.region.try_index(x)?;
        Ok(self.insert_index(idx))
    }

    #[inline]
    pub fn contains_index(&self, idx: usize) -> bool {
        self.mask.contains(idx)
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.region.index(x).is_some_and(|i| self.mask.contains(i))
    }

    /// Member indices in insertion order.
    pub fn indices(&self) -> &[usize] {
        &self.members
    }

    /// Member indices in ascending order.
    pub fn sorted_indices(&self) -> Vec<usize> {
        self.mask.ones().collect()
    }

    pub fn min_index(&self) -> Option<usize> {
        self.mask.minimum()
    }

    pub fn coords(&self) -> Vec<Vec<i64>> {
        self.mask.ones().map(|i| self.region.coords(i)).collect()
    }

    pub fn mask(&self) -> &FixedBitSet {
        &self.mask
    }

    /// Same sites expressed over another region.
    pub fn rebase(&self, region: &Region) -> Result<SiteSet, GeometryError> {
        if *region == self.region {
            return Ok(self.clone());
        }
        let mut out = SiteSet::new(region.clone());
        let mut buf = vec![0i64; self.dim()];
        for i in self.mask.ones() {
            self.region.coords_into(i, &mut buf);
            out.insert(&buf)?;
        }
        Ok(out)
    }

    /// Set equality on coordinates, regardless of the underlying regions.
    pub fn same_sites(&self, other: &SiteSet) -> bool {
        if self.len() != other.len() || self.dim() != other.dim() {
            return false;
        }
        if self.region == other.region {
            return self.mask == other.mask;
        }
        let mut buf = vec![0i64; self.dim()];
        self.mask.ones().all(|i| {
            self.region.coords_into(i, &mut buf);
            other.contains(&buf)
        })
    }

    /// Whether every site of `self` is in `other`.
    pub fn is_subset(&self, other: &SiteSet) -> bool {
        if self.region == other.region {
            return self.mask.is_subset(&other.mask);
        }
        let mut buf = vec![0i64; self.dim()];
        self.mask.ones().all(|i| {
            self.region.coords_into(i, &mut buf);
            other.contains(&buf)
        })
    }

    pub fn is_disjoint(&self, other: &SiteSet) -> bool {
        if self.region == other.region {
            return self.mask.is_disjoint(&other.mask);
        }
        let mut buf = vec![0i64; self.dim()];
        !self.mask.ones().any(|i| {
            self.region.coords_into(i, &mut buf);
            other.contains(&buf)
        })
    }

    /// Sites of `self` not in `other`, over `self`'s region.
    pub fn difference(&self, other: &SiteSet) -> SiteSet {
        let mut out = SiteSet::new(self.region.clone());
        let mut buf = vec![0i64; self.dim()];
        for i in self.mask.ones() {
            self.region.coords_into(i, &mut buf);
            if !other.contains(&buf) {
                out.insert_index(i);
            }
        }
        out
    }

    /// Union over `self`'s region; fails if `other` has sites outside it.
    pub fn union(&self, other: &SiteSet) -> Result<SiteSet, GeometryError> {
        let mut out = self.clone();
        let mut buf = vec![0i64; self.dim()];
        for i in other.mask.ones() {
            other.region.coords_into(i, &mut buf);
            out.insert(&buf)?;
        }
        Ok(out)
    }

    pub fn bounding_region(&self) -> Option<Region> {
        let pts = self.coords();
        Region::bounding(self.dim(), pts.iter().map(|p| p.as_slice()))
    }
}

impl PartialEq for SiteSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_sites(other)
    }
}

impl Eq for SiteSet {}

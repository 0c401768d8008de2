use lattice_geometry::SiteSet;
use lrp_components::component_summary;
use lrp_sampler::SampledGraph;

use crate::OracleError;

/// Largest box for the exhaustive subset scan.
pub const MAX_INCLUSION_SITES: usize = 20;

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    /// A block with closure above `3n/4`, size at most `n/2`, and no edge to its box exterior boundary.
    LargeClosure(SiteSet),
    /// Hole-free, pairwise 1-disconnected small blocks with total size at least `k`,
    /// connected block graph, and no edge from their free interior boundaries to the rest of the box.
    SmallBlocks(Vec<SiteSet>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    /// The second-largest component is smaller than `k`.
    NotApplicable,
    Holds(Witness),
    /// `|C2| >= k` but no subset of the box witnesses either event.
    Violation,
}

/// Per-site bitmasks over a box of at most 32 sites.
struct Masks {
    n: usize,
    full: u32,
    /// Box nearest neighbors.
    near: Vec<u32>,
    /// Graph neighbors.
    adj: Vec<u32>,
    /// Sites with a nearest neighbor outside the box.
    frame: u32,
}

impl Masks {
    fn new(graph: &SampledGraph) -> Self {
        let lattice = graph.lattice();
        let region = lattice.region();
        let n = lattice.n();
        let mut near = vec![0u32; n];
        let mut frame = 0u32;
        for (i, m) in near.iter_mut().enumerate() {
            for axis in 0..lattice.d() {
                for up in [false, true] {
                    match region.step(i, axis, up) {
                        Some(j) => *m |= 1 << j,
                        None => frame |= 1 << i,
                    }
                }
            }
        }
        let mut adj = vec![0u32; n];
        for &(i, j) in graph.edges() {
            adj[i as usize] |= 1 << j;
            adj[j as usize] |= 1 << i;
        }
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        Masks {
            n,
            full,
            near,
            adj,
            frame,
        }
    }

    fn union_over(table: &[u32], set: u32) -> u32 {
        let mut out = 0;
        let mut s = set;
        while s != 0 {
            out |= table[s.trailing_zeros() as usize];
            s &= s - 1;
        }
        out
    }

    fn near_of(&self, set: u32) -> u32 {
        Self::union_over(&self.near, set)
    }

    fn adj_of(&self, set: u32) -> u32 {
        Self::union_over(&self.adj, set)
    }

    /// Sites of `set` reachable from `seed` by nearest-neighbor steps inside `set`.
    fn flood(&self, seed: u32, set: u32) -> u32 {
        let mut reach = seed & set;
        loop {
            let next = (reach | self.near_of(reach)) & set;
            if next == reach {
                return reach;
            }
            reach = next;
        }
    }

    fn blocks(&self, set: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut rest = set;
        while rest != 0 {
            let b = self.flood(rest & rest.wrapping_neg(), rest);
            out.push(b);
            rest &= !b;
        }
        out
    }

    /// Sites not reachable from outside the box without crossing `set`.
    fn closure(&self, set: u32) -> u32 {
        let open = self.full & !set;
        self.full & !self.flood(self.frame & open, open)
    }

    fn free_interior(&self, set: u32) -> u32 {
        let mut out = set & self.frame;
        let mut s = set;
        while s != 0 {
            let i = s.trailing_zeros() as usize;
            if self.near[i] & !set != 0 {
                out |= 1 << i;
            }
            s &= s - 1;
        }
        out
    }

    fn large_closure(&self, a: u32) -> bool {
        let n = self.n as u32;
        if 2 * a.count_ones() > n || 4 * self.closure(a).count_ones() <= 3 * n {
            return false;
        }
        let ext = self.near_of(a) & !a;
        self.adj_of(a) & ext == 0
    }

    fn small_blocks(&self, union: u32, blocks: &[u32], k: usize) -> bool {
        let n = self.n as u32;
        if (union.count_ones() as usize) < k {
            return false;
        }
        for &b in blocks {
            if self.closure(b) != b || 4 * b.count_ones() > 3 * n {
                return false;
            }
        }
        let boundary = blocks.iter().fold(0, |acc, &b| acc | self.free_interior(b));
        if self.adj_of(boundary) & self.full & !union != 0 {
            return false;
        }
        // block graph connectivity
        let mut reached = blocks[0];
        let mut grew = true;
        while grew {
            grew = false;
            let touch = self.adj_of(reached);
            for &b in blocks {
                if b & reached == 0 && b & touch != 0 {
                    reached |= b;
                    grew = true;
                }
            }
        }
        reached == union
    }
}

/// Exhaustively checks that a second-largest component of size at least `k`
/// forces either a large-closure block isolated from its exterior boundary or a
/// connected, isolated family of small hole-free blocks of total size at least `k`.
///
/// Every nonempty subset of the box is scanned in increasing bitmask order and
/// split into its blocks; the first subset witnessing either event is returned.
pub fn verify_second_event_inclusion(
    graph: &SampledGraph,
    k: usize,
) -> Result<Verdict, OracleError> {
    let n = graph.n();
    if n > MAX_INCLUSION_SITES {
        return Err(OracleError::Guard(format!(
            "{n} sites exceeds {MAX_INCLUSION_SITES}"
        )));
    }
    if k == 0 {
        return Err(OracleError::Guard("k must be positive".into()));
    }
    if component_summary(graph).size_c2 < k {
        return Ok(Verdict::NotApplicable);
    }
    let masks = Masks::new(graph);
    let region = graph.lattice().region();
    let to_set =
        |m: u32| SiteSet::from_indices(region.clone(), (0..n).filter(move |&i| m >> i & 1 == 1));
    for u in 1..=masks.full {
        let blocks = masks.blocks(u);
        if blocks.len() == 1 && masks.large_closure(u) {
            return Ok(Verdict::Holds(Witness::LargeClosure(to_set(u))));
        }
        if masks.small_blocks(u, &blocks, k) {
            let sets = blocks.into_iter().map(to_set).collect();
            return Ok(Verdict::Holds(Witness::SmallBlocks(sets)));
        }
    }
    Ok(Verdict::Violation)
}

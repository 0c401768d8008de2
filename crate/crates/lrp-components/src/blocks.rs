use std::collections::{BTreeSet, VecDeque};

use lattice_geometry::{block_decompose, SiteSet};
use lrp_sampler::SampledGraph;

use crate::ComponentError;

/// Blocks of a vertex set, with an edge wherever a graph edge joins two blocks.
#[derive(Clone, Debug)]
pub struct BlockGraph {
    pub blocks: Vec<SiteSet>,
    /// Pairs `(i, j)`, `i < j`, of 0-based block indices.
    pub edges: BTreeSet<(usize, usize)>,
}

impl BlockGraph {
    /// Builds the block graph of already-decomposed blocks living in the graph's box.
    pub fn from_blocks(blocks: Vec<SiteSet>, graph: &SampledGraph) -> Result<Self, ComponentError> {
        let n = graph.n();
        let mut owner = vec![usize::MAX; n];
        let region = graph.lattice().region();
        let mut rebased = Vec::with_capacity(blocks.len());
        for (b, set) in blocks.into_iter().enumerate() {
            let set = set.rebase(region)?;
            for &i in set.indices() {
                owner[i] = b;
            }
            rebased.push(set);
        }
        let mut edges = BTreeSet::new();
        for &(i, j) in graph.edges() {
            let (a, b) = (owner[i as usize], owner[j as usize]);
            if a != usize::MAX && b != usize::MAX && a != b {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        Ok(BlockGraph {
            blocks: rebased,
            edges,
        })
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i.min(j), i.max(j)))
    }

    pub fn is_connected(&self) -> bool {
        let b = self.blocks.len();
        if b == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); b];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; b];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    count += 1;
                    queue.push_back(j);
                }
            }
        }
        count == b
    }
}

/// Whether `set` is exactly one connected component of `graph`.
pub fn is_component(set: &SiteSet, graph: &SampledGraph) -> Result<bool, ComponentError> {
    let set = set.rebase(graph.lattice().region())?;
    let Some(start) = set.min_index() else {
        return Ok(false);
    };
    let adj = graph.adjacency();
    let mut seen = vec![false; graph.n()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut count = 0;
    while let Some(i) = queue.pop_front() {
        count += 1;
        for &j in adj.neighbors(i) {
            let j = j as usize;
            if !set.contains_index(j) {
                return Ok(false);
            }
            if !seen[j] {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    Ok(count == set.len())
}

pub fn block_graph(
    component: &SiteSet,
    graph: &SampledGraph,
) -> Result<BlockGraph, ComponentError> {
    if !is_component(component, graph)? {
        return Err(ComponentError::NotAComponent);
    }
    let component = component.rebase(graph.lattice().region())?;
    BlockGraph::from_blocks(block_decompose(&component), graph)
}

/// Forward degrees `(f_1, ..., f_b)` with `Σ f = b - 1` and `f_1 + ... + f_j >= j` for `j < b`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForwardDegreeVector {
    f: Vec<usize>,
}

impl ForwardDegreeVector {
    pub fn new(f: Vec<usize>) -> Result<Self, ComponentError> {
        let b = f.len();
        if b == 0 {
            return Err(ComponentError::InvalidForwardDegrees("empty vector".into()));
        }
        let total: usize = f.iter().sum();
        if total != b - 1 {
            return Err(ComponentError::InvalidForwardDegrees(format!(
                "sum is {total}, expected {}",
                b - 1
            )));
        }
        let mut partial = 0;
        for (j, &x) in f.iter().enumerate().take(b - 1) {
            partial += x;
            if partial < j + 1 {
                return Err(ComponentError::InvalidForwardDegrees(format!(
                    "partial sum {partial} < {} at position {}",
                    j + 1,
                    j + 1
                )));
            }
        }
        Ok(ForwardDegreeVector { f })
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.f
    }

    pub fn len(&self) -> usize {
        self.f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.f.is_empty()
    }

    /// Tree edges `(parent, child)`, 0-based: vertex `j`'s children are the next
    /// `f_j` unused labels in order, starting after the root.
    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::with_capacity(self.f.len().saturating_sub(1));
        let mut next = 1;
        for (j, &fj) in self.f.iter().enumerate() {
            for c in next..next + fj {
                edges.push((j, c));
            }
            next += fj;
        }
        edges
    }
}

pub fn is_f_connected(bg: &BlockGraph, f: &ForwardDegreeVector) -> Result<bool, ComponentError> {
    if f.len() != bg.len() {
        return Err(ComponentError::InvalidForwardDegrees(format!(
            "vector has {} entries but the block graph has {} vertices",
            f.len(),
            bg.len()
        )));
    }
    Ok(f.tree_edges().iter().all(|&(i, j)| bg.has_edge(i, j)))
}

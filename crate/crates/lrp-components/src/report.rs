use lattice_geometry::SiteSet;
use lrp_sampler::{GraphSampler, SampledGraph};
use petgraph::unionfind::UnionFind;

/// Component labels of a graph, ranked by size (descending) then by smallest site index.
#[derive(Clone, Debug)]
pub struct ComponentLabels {
    /// Rank of the component of each site; rank 0 is the largest.
    pub rank: Vec<u32>,
    /// Size per rank.
    pub sizes: Vec<usize>,
}

impl ComponentLabels {
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut uf = UnionFind::<u32>::new(n);
        for (i, j) in edges {
            uf.union(i, j);
        }
        Self::from_union_find(n, &mut uf)
    }

    fn from_union_find(n: usize, uf: &mut UnionFind<u32>) -> Self {
        const NONE: u32 = u32::MAX;
        // components in order of first (smallest) site
        let mut local = vec![NONE; n];
        let mut label = vec![0u32; n];
        let mut sizes = Vec::new();
        for i in 0..n {
            let r = uf.find_mut(i as u32) as usize;
            if local[r] == NONE {
                local[r] = sizes.len() as u32;
                sizes.push(0usize);
            }
            label[i] = local[r];
            sizes[local[r] as usize] += 1;
        }
        // stable sort keeps smallest-index order among equal sizes
        let mut order: Vec<u32> = (0..sizes.len() as u32).collect();
        order.sort_by_key(|&c| std::cmp::Reverse(sizes[c as usize]));
        let mut rank_of = vec![0u32; sizes.len()];
        for (r, &c) in order.iter().enumerate() {
            rank_of[c as usize] = r as u32;
        }
        let rank = label.iter().map(|&c| rank_of[c as usize]).collect();
        let sizes = order.iter().map(|&c| sizes[c as usize]).collect();
        ComponentLabels { rank, sizes }
    }

    pub fn size_of_rank(&self, r: usize) -> usize {
        self.sizes.get(r).copied().unwrap_or(0)
    }

    pub fn members(&self, r: u32) -> impl Iterator<Item = usize> + '_ {
        self.rank
            .iter()
            .enumerate()
            .filter(move |&(_, &x)| x == r)
            .map(|(i, _)| i)
    }
}

/// The few numbers most experiments need, without materializing site sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComponentSummary {
    pub n: usize,
    pub size_c1: usize,
    pub size_c2: usize,
    pub size_c0: usize,
    pub origin_in_c1: bool,
}

impl ComponentSummary {
    pub fn from_labels(labels: &ComponentLabels, origin: usize) -> Self {
        let r0 = labels.rank[origin];
        ComponentSummary {
            n: labels.rank.len(),
            size_c1: labels.size_of_rank(0),
            size_c2: labels.size_of_rank(1),
            size_c0: labels.sizes[r0 as usize],
            origin_in_c1: r0 == 0,
        }
    }

    pub fn theta_hat(&self) -> f64 {
        self.size_c1 as f64 / self.n as f64
    }
}

/// Summary of the graph on `n` sites with the given edges, without ranking every component.
pub fn summarize_edges<I>(n: usize, origin: usize, edges: I) -> ComponentSummary
where
    I: IntoIterator<Item = (u32, u32)>,
{
    let mut uf = UnionFind::<u32>::new(n);
    for (i, j) in edges {
        uf.union(i, j);
    }
    summary_from_union_find(n, origin, &mut uf)
}

/// Samples one graph and summarizes it while streaming its edges.
pub fn summarize_sample(sampler: &GraphSampler, seed: u64) -> ComponentSummary {
    let lattice = sampler.lattice();
    let n = lattice.n();
    let mut uf = UnionFind::<u32>::new(n);
    sampler.for_each_edge(seed, |i, j| {
        uf.union(i, j);
    });
    summary_from_union_find(n, lattice.origin_index(), &mut uf)
}

fn summary_from_union_find(n: usize, origin: usize, uf: &mut UnionFind<u32>) -> ComponentSummary {
    let mut size = vec![0u32; n];
    // roots in order of their smallest site
    let mut roots = Vec::new();
    for i in 0..n as u32 {
        let r = uf.find_mut(i) as usize;
        if size[r] == 0 {
            roots.push(r);
        }
        size[r] += 1;
    }
    let mut first: Option<usize> = None;
    let mut second: Option<usize> = None;
    for &r in &roots {
        if first.is_none_or(|f| size[r] > size[f]) {
            second = first;
            first = Some(r);
        } else if second.is_none_or(|s| size[r] > size[s]) {
            second = Some(r);
        }
    }
    let c1 = first.expect("at least one site");
    let r0 = uf.find_mut(origin as u32) as usize;
    ComponentSummary {
        n,
        size_c1: size[c1] as usize,
        size_c2: second.map_or(0, |r| size[r] as usize),
        size_c0: size[r0] as usize,
        origin_in_c1: r0 == c1,
    }
}

pub fn component_summary(graph: &SampledGraph) -> ComponentSummary {
    let labels = ComponentLabels::from_edges(graph.n(), graph.edges().iter().copied());
    ComponentSummary::from_labels(&labels, graph.lattice().origin_index())
}

/// Components of a sampled graph.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    /// Component sizes in descending order.
    pub sizes: Vec<usize>,
    pub c1: SiteSet,
    /// Empty when the largest component spans the box.
    pub c2: SiteSet,
    pub c0: SiteSet,
    pub origin_in_c1: bool,
    pub theta_hat: f64,
    pub labels: ComponentLabels,
    seed: u64,
    d: usize,
    alpha: f64,
    beta: f64,
    p: f64,
}

pub const CSV_HEADER: &str = "seed,d,n,alpha,beta,p,size_c1,size_c2,size_c0,origin_in_c1,theta_hat";

impl ComponentReport {
    pub fn summary(&self) -> ComponentSummary {
        ComponentSummary {
            n: self.sizes.iter().sum(),
            size_c1: self.c1.len(),
            size_c2: self.c2.len(),
            size_c0: self.c0.len(),
            origin_in_c1: self.origin_in_c1,
        }
    }

    pub fn csv_row(&self) -> String {
        let s = self.summary();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.seed,
            self.d,
            s.n,
            self.alpha,
            self.beta,
            self.p,
            s.size_c1,
            s.size_c2,
            s.size_c0,
            s.origin_in_c1,
            self.theta_hat
        )
    }
}

pub fn connected_components(graph: &SampledGraph) -> ComponentReport {
    let lattice = graph.lattice();
    let labels = ComponentLabels::from_edges(graph.n(), graph.edges().iter().copied());
    let origin = lattice.origin_index();
    let region = lattice.region().clone();
    let set_of = |r: u32| SiteSet::from_indices(region.clone(), labels.members(r));
    let r0 = labels.rank[origin];
    let c1 = set_of(0);
    let c2 = if labels.sizes.len() > 1 {
        set_of(1)
    } else {
        SiteSet::new(region.clone())
    };
    let c0 = set_of(r0);
    let p = graph.params();
    ComponentReport {
        sizes: labels.sizes.clone(),
        theta_hat: c1.len() as f64 / graph.n() as f64,
        c1,
        c2,
        c0,
        origin_in_c1: r0 == 0,
        labels,
        seed: graph.seed(),
        d: p.d,
        alpha: p.alpha,
        beta: p.beta,
        p: p.p,
    }
}

use std::collections::VecDeque;

use lattice_geometry::{LatticeBox, SiteSet};
use lrp_components::*;
use lrp_sampler::{sample_graph, LrpParams, SampledGraph};

fn params(d: usize) -> LrpParams {
    LrpParams::new(d, 2.0, 1.0, 0.5).unwrap()
}

fn graph(d: usize, side: usize, edges: &[(usize, usize)]) -> SampledGraph {
    let b = LatticeBox::new(d, side).unwrap();
    SampledGraph::from_edges(b, params(d), 0, edges.iter().copied()).unwrap()
}

fn sites(g: &SampledGraph, pts: &[[i64; 2]]) -> SiteSet {
    SiteSet::from_coords(g.lattice().region().clone(), pts.iter()).unwrap()
}

fn idx(g: &SampledGraph, x: [i64; 2]) -> usize {
    g.lattice().index(&x).unwrap()
}

/// Breadth-first component sizes, sorted descending.
fn bfs_sizes(g: &SampledGraph) -> Vec<usize> {
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in g.edges() {
        adj[i as usize].push(j as usize);
        adj[j as usize].push(i as usize);
    }
    let mut seen = vec![false; n];
    let mut sizes = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        let mut c = 0;
        while let Some(i) = q.pop_front() {
            c += 1;
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    q.push_back(j);
                }
            }
        }
        sizes.push(c);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

#[test]
fn empty_graph_components() {
    let g = graph(2, 3, &[]);
    let r = connected_components(&g);
    assert_eq!(r.sizes, vec![1; 9]);
    assert_eq!(r.c2.len(), 1);
    assert_eq!(r.c1.min_index(), Some(0));
    assert_eq!(r.c2.min_index(), Some(1));
    assert!(!r.origin_in_c1);
    assert!((r.theta_hat - 1.0 / 9.0).abs() < 1e-15);
}

#[test]
fn complete_graph_has_no_second_component() {
    let b = LatticeBox::new(2, 4).unwrap();
    let g = sample_graph(&b, &LrpParams::new(2, 2.0, 10.0, 1.0).unwrap(), 0).unwrap();
    let r = connected_components(&g);
    assert_eq!(r.sizes, vec![16]);
    assert!(r.c2.is_empty());
    assert!(r.origin_in_c1);
    assert_eq!(r.theta_hat, 1.0);
}

#[test]
fn explicit_five_site_graph() {
    let g = graph(1, 5, &[(0, 1), (1, 2), (3, 4)]);
    let r = connected_components(&g);
    assert_eq!(r.sizes, vec![3, 2]);
    assert_eq!(r.c0.sorted_indices(), vec![0, 1, 2]);
    assert_eq!(r.c1.sorted_indices(), vec![0, 1, 2]);
    assert_eq!(r.c2.sorted_indices(), vec![3, 4]);
    assert!(r.origin_in_c1);
}

#[test]
fn ties_go_to_smallest_index() {
    let g = graph(1, 6, &[(4, 5), (0, 3), (1, 2)]);
    let r = connected_components(&g);
    assert_eq!(r.sizes, vec![2, 2, 2]);
    assert_eq!(r.c1.sorted_indices(), vec![0, 3]);
    assert_eq!(r.c2.sorted_indices(), vec![1, 2]);
}

#[test]
fn csv_row_layout() {
    let g = graph(1, 5, &[(0, 1), (1, 2), (3, 4)]);
    let row = connected_components(&g).csv_row();
    assert_eq!(row, "0,1,5,2,1,0.5,3,2,3,true,0.6");
    assert_eq!(CSV_HEADER.split(',').count(), row.split(',').count());
}

#[test]
fn union_find_matches_bfs() {
    for (d, side, alpha, beta, p) in [
        (1usize, 50usize, 1.5, 1.0, 0.3),
        (2, 20, 2.0, 1.0, 0.4),
        (2, 30, 1.3, 1.2, 0.1),
        (3, 8, 1.8, 1.0, 0.2),
    ] {
        let b = LatticeBox::new(d, side).unwrap();
        let pr = LrpParams::new(d, alpha, beta, p).unwrap();
        for seed in 0..25 {
            let g = sample_graph(&b, &pr, seed).unwrap();
            let r = connected_components(&g);
            assert_eq!(r.sizes, bfs_sizes(&g));
            assert_eq!(r.sizes.iter().sum::<usize>(), b.n());
            assert!(r.theta_hat >= 1.0 / b.n() as f64 && r.theta_hat <= 1.0);
            assert_eq!(r.c2.is_empty(), r.sizes == vec![b.n()]);
            assert!(r.c0.contains_index(b.origin_index()));
            assert!(is_component(&r.c0, &g).unwrap());
            assert_eq!(component_summary(&g), r.summary());
        }
    }
}

#[test]
fn block_graph_of_two_joined_singletons() {
    let b = LatticeBox::new(2, 9).unwrap();
    let g0 = SampledGraph::from_edges(b.clone(), params(2), 0, []).unwrap();
    let (x, y) = (idx(&g0, [-3, -3]), idx(&g0, [3, 2]));
    let g = SampledGraph::from_edges(b, params(2), 0, [(x, y)]).unwrap();
    let comp = sites(&g, &[[-3, -3], [3, 2]]);
    let bg = block_graph(&comp, &g).unwrap();
    assert_eq!(bg.len(), 2);
    assert_eq!(bg.edges.len(), 1);
    assert!(bg.is_connected());
}

#[test]
fn block_graph_of_solid_block() {
    let b = LatticeBox::new(2, 5).unwrap();
    let g0 = SampledGraph::from_edges(b.clone(), params(2), 0, []).unwrap();
    let (a, c) = (idx(&g0, [0, 0]), idx(&g0, [1, 0]));
    let g = SampledGraph::from_edges(b, params(2), 0, [(a, c)]).unwrap();
    let bg = block_graph(&sites(&g, &[[0, 0], [1, 0]]), &g).unwrap();
    assert_eq!(bg.len(), 1);
    assert!(bg.edges.is_empty());
}

#[test]
fn block_graph_path_of_three() {
    let b = LatticeBox::new(2, 11).unwrap();
    let g0 = SampledGraph::from_edges(b.clone(), params(2), 0, []).unwrap();
    let p = [[-5, -5], [0, 0], [5, 5]];
    let e = [
        (idx(&g0, p[0]), idx(&g0, p[1])),
        (idx(&g0, p[1]), idx(&g0, p[2])),
    ];
    let g = SampledGraph::from_edges(b, params(2), 0, e).unwrap();
    let bg = block_graph(&sites(&g, &p), &g).unwrap();
    assert_eq!(bg.len(), 3);
    assert_eq!(
        bg.edges.iter().copied().collect::<Vec<_>>(),
        vec![(0, 1), (1, 2)]
    );
}

#[test]
fn block_graph_rejects_non_components() {
    let g = graph(2, 4, &[(0, 1)]);
    let only_one = SiteSet::from_indices(g.lattice().region().clone(), [0]);
    assert_eq!(
        block_graph(&only_one, &g).unwrap_err(),
        ComponentError::NotAComponent
    );
    let two = SiteSet::from_indices(g.lattice().region().clone(), [0, 5]);
    assert!(block_graph(&two, &g).is_err());
}

#[test]
fn block_graphs_of_components_are_connected() {
    let b = LatticeBox::new(2, 12).unwrap();
    let mut checked = 0;
    for (i, (alpha, beta, p)) in [(1.2, 1.0, 0.1), (2.0, 2.0, 0.2), (1.6, 1.0, 0.3)]
        .into_iter()
        .enumerate()
    {
        let pr = LrpParams::new(2, alpha, beta, p).unwrap();
        for seed in 0..334 {
            let g = sample_graph(&b, &pr, (i as u64) << 32 | seed).unwrap();
            let labels = ComponentLabels::from_edges(g.n(), g.edges().iter().copied());
            for r in 0..labels.sizes.len().min(4) {
                let comp = SiteSet::from_indices(b.region().clone(), labels.members(r as u32));
                let bg = block_graph(&comp, &g).unwrap();
                assert!(bg.is_connected());
            }
            checked += 1;
        }
    }
    assert!(checked >= 1000);
}

#[test]
fn forward_degree_validation() {
    assert!(ForwardDegreeVector::new(vec![1, 0]).is_ok());
    assert!(ForwardDegreeVector::new(vec![0]).is_ok());
    assert!(ForwardDegreeVector::new(vec![0, 1]).is_err());
    assert!(ForwardDegreeVector::new(vec![1, 1]).is_err());
    assert!(ForwardDegreeVector::new(vec![1, 0, 1]).is_err());
    assert!(ForwardDegreeVector::new(vec![]).is_err());
    let f = ForwardDegreeVector::new(vec![2, 0, 1, 0]).unwrap();
    assert_eq!(f.tree_edges(), vec![(0, 1), (0, 2), (2, 3)]);
}

fn bg_with(b: usize, edges: &[(usize, usize)]) -> BlockGraph {
    let lattice = LatticeBox::new(1, 3 * b).unwrap();
    let blocks = (0..b)
        .map(|i| SiteSet::from_indices(lattice.region().clone(), [3 * i]))
        .collect();
    let g = SampledGraph::from_edges(
        lattice,
        params(1),
        0,
        edges.iter().map(|&(i, j)| (3 * i, 3 * j)),
    )
    .unwrap();
    BlockGraph::from_blocks(blocks, &g).unwrap()
}

#[test]
fn f_connectivity_examples() {
    let f = ForwardDegreeVector::new(vec![1, 0]).unwrap();
    assert!(is_f_connected(&bg_with(2, &[(0, 1)]), &f).unwrap());
    let star = bg_with(3, &[(0, 1), (0, 2)]);
    assert!(is_f_connected(&star, &ForwardDegreeVector::new(vec![2, 0, 0]).unwrap()).unwrap());
    assert!(!is_f_connected(&star, &ForwardDegreeVector::new(vec![1, 1, 0]).unwrap()).unwrap());
    assert!(is_f_connected(&star, &f).is_err());
}

#[test]
fn forward_vectors_give_trees() {
    // every composition of b-1 into b parts that passes validation yields a tree
    for b in 1..=8usize {
        let mut stack = vec![Vec::new()];
        while let Some(v) = stack.pop() {
            if v.len() == b {
                if let Ok(f) = ForwardDegreeVector::new(v.clone()) {
                    assert_eq!(f.as_slice()[b - 1], 0);
                    let edges = f.tree_edges();
                    assert_eq!(edges.len(), b - 1);
                    for &(p, c) in &edges {
                        assert!(p < c && c < b);
                    }
                    let children: std::collections::BTreeSet<_> =
                        edges.iter().map(|e| e.1).collect();
                    assert_eq!(children.len(), b - 1);
                }
                continue;
            }
            let used: usize = v.iter().sum();
            for x in 0..=(b - 1 - used) {
                let mut w = v.clone();
                w.push(x);
                stack.push(w);
            }
        }
    }
}

fn ring7() -> (SampledGraph, SiteSet) {
    let g = graph(2, 7, &[]);
    let b = g.lattice().clone();
    let mut ring = SiteSet::in_box(&b);
    for i in 0..b.n() {
        let x = b.coords(i);
        if x[0].abs() == 3 || x[1].abs() == 3 {
            ring.insert_index(i);
        }
    }
    (g, ring)
}

#[test]
fn e2_examples() {
    let (g, ring) = ring7();
    assert_eq!(ring.len(), 24);
    assert!(check_event_e2_candidate(&ring, &g));

    let b = g.lattice().clone();
    let inner = idx(&g, [2, 0]);
    let outer = idx(&g, [3, 0]);
    let g2 = SampledGraph::from_edges(b.clone(), params(2), 0, [(inner, outer)]).unwrap();
    assert!(!check_event_e2_candidate(&ring, &g2));

    // an edge from the ring to a site outside its box boundary does not matter
    let far = idx(&g, [0, 0]);
    let corner = idx(&g, [-3, -3]);
    let g3 = SampledGraph::from_edges(b.clone(), params(2), 0, [(corner, far)]).unwrap();
    assert!(check_event_e2_candidate(&ring, &g3));

    let big = SiteSet::full(b.region().clone());
    assert!(!check_event_e2_candidate(&big, &g));
}

#[test]
fn e1_examples() {
    let b = LatticeBox::new(2, 8).unwrap();
    let g0 = SampledGraph::from_edges(b.clone(), params(2), 0, []).unwrap();
    let a = sites(&g0, &[[0, 0], [1, 0]]);
    let g = SampledGraph::from_edges(
        b.clone(),
        params(2),
        0,
        [(idx(&g0, [0, 0]), idx(&g0, [1, 0]))],
    )
    .unwrap();
    assert!(check_event_e1_candidate(std::slice::from_ref(&a), 2, &g).unwrap());
    assert!(!check_event_e1_candidate(std::slice::from_ref(&a), 3, &g).unwrap());

    let c = sites(&g0, &[[-4, -4]]);
    assert!(!check_event_e1_candidate(&[a.clone(), c.clone()], 1, &g).unwrap());
    let joined = SampledGraph::from_edges(
        b.clone(),
        params(2),
        0,
        [
            (idx(&g0, [0, 0]), idx(&g0, [1, 0])),
            (idx(&g0, [1, 0]), idx(&g0, [-4, -4])),
        ],
    )
    .unwrap();
    assert!(check_event_e1_candidate(&[a.clone(), c.clone()], 3, &joined).unwrap());

    let leaky = SampledGraph::from_edges(
        b.clone(),
        params(2),
        0,
        [(idx(&g0, [0, 0]), idx(&g0, [3, 3]))],
    )
    .unwrap();
    assert!(!check_event_e1_candidate(std::slice::from_ref(&a), 1, &leaky).unwrap());

    let touching = sites(&g0, &[[2, 0]]);
    assert!(check_event_e1_candidate(&[a.clone(), touching], 1, &g).is_err());
    let (gr, ring) = ring7();
    let small_ring = {
        let mut s = SiteSet::in_box(gr.lattice());
        for x in -1..=1i64 {
            for y in -1..=1i64 {
                if (x, y) != (0, 0) {
                    s.insert(&[x, y]).unwrap();
                }
            }
        }
        s
    };
    assert!(check_event_e1_candidate(&[small_ring], 1, &gr).is_err());
    assert!(check_event_e1_candidate(&[ring], 1, &gr).is_err());
}

#[test]
fn sampler_summary_matches_stored_graph() {
    let b = LatticeBox::new(2, 30).unwrap();
    for (alpha, beta, p) in [(2.0, 1.0, 0.4), (1.2, 1.0, 0.2), (2.0, 2.0, 0.95)] {
        let pr = LrpParams::new(2, alpha, beta, p).unwrap();
        let sampler = lrp_sampler::GraphSampler::new(&b, &pr).unwrap();
        for seed in 0..20 {
            assert_eq!(
                summarize_sample(&sampler, seed),
                component_summary(&sampler.sample(seed))
            );
        }
    }
}

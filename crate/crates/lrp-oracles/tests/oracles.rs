use lattice_geometry::{block_decompose, LatticeBox, SiteSet};
use lrp_components::{check_event_e1_candidate, check_event_e2_candidate};
use lrp_oracles::*;
use lrp_sampler::{sample_graph, LrpParams, SampledGraph};

#[test]
fn census_small_counts() {
    let c = enumerate_hole_free_animals(2, 3).unwrap();
    assert_eq!(c.count(1), 1);
    assert_eq!(c.count(2), 4);
    assert_eq!(c.count(3), 18);
}

#[test]
fn census_matches_polyomino_enumeration() {
    // hole-free blocks with boundary size at most 7 have at most 10 sites
    let census = enumerate_hole_free_animals(2, 8).unwrap();
    let poly = polyomino_census(11);
    for m in 1..=7 {
        assert_eq!(census.count(m), poly[&m], "m = {m}");
    }
    // larger boundaries include blocks beyond the polyomino size cap
    assert!(census.count(8) > poly[&8]);
}

#[test]
fn census_growth_within_envelope() {
    let census = enumerate_hole_free_animals(2, 9).unwrap();
    for m in 1..=9 {
        let rate = census.growth_rate(m).unwrap();
        assert!(rate <= peierls_envelope(m), "m = {m}: {rate}");
    }
    let slope = census.fitted_rate().unwrap();
    assert!(slope > 0.0 && slope < peierls_envelope(9));
}

#[test]
fn census_guards() {
    assert!(matches!(
        enumerate_hole_free_animals(2, 0),
        Err(OracleError::Guard(_))
    ));
    assert!(matches!(
        enumerate_hole_free_animals(2, 15),
        Err(OracleError::Guard(_))
    ));
    assert!(matches!(
        enumerate_hole_free_animals(3, 4),
        Err(OracleError::Unsupported(_))
    ));
}

#[test]
fn census_cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("lrp-census-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let fresh = cached_census(&dir, 2, 5).unwrap();
    assert!(census_cache_path(&dir, 2, 5).exists());
    let again = cached_census(&dir, 2, 5).unwrap();
    assert_eq!(fresh, again);
    assert_eq!(AnimalCensus::from_text(&fresh.to_text()).unwrap(), fresh);
    assert!(AnimalCensus::from_text("m,count\n").is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn f_vector_examples() {
    let v = |b| {
        enumerate_f_vectors(b)
            .unwrap()
            .into_iter()
            .map(|f| f.as_slice().to_vec())
            .collect::<Vec<_>>()
    };
    assert_eq!(v(1), vec![vec![0]]);
    assert_eq!(v(2), vec![vec![1, 0]]);
    assert_eq!(v(3), vec![vec![1, 1, 0], vec![2, 0, 0]]);
    assert_eq!(v(5).len(), 14);
    assert!(enumerate_f_vectors(0).is_err());
    assert!(enumerate_f_vectors(13).is_err());
}

#[test]
fn f_vector_counts_agree_three_ways() {
    for b in 1..=MAX_F_VECTOR_BLOCKS {
        let list = enumerate_f_vectors(b).unwrap();
        assert!(list.windows(2).all(|w| w[0].as_slice() < w[1].as_slice()));
        assert_eq!(list.len() as u64, ballot_count(b), "b = {b}");
        assert_eq!(
            f_vector_count_by_compositions(b),
            ballot_count(b),
            "b = {b}"
        );
    }
    assert_eq!(ballot_count(12), 58786);
}

#[test]
fn boundary_compositions_bounded() {
    for b in 1..=12u64 {
        for l in 1..=12u64 {
            let c = count_boundary_compositions(b as usize, l as usize) as u128;
            assert_eq!(c, binomial(l - 1, b - 1));
            assert!(c <= binomial(l + b, b));
            if b <= l {
                assert!(binomial(l + b, b) <= binomial(2 * l, l));
            }
            assert!(c <= 1u128 << (2 * l));
        }
    }
}

fn free(pts: &[[i64; 2]]) -> SiteSet {
    SiteSet::free(2, pts.iter()).unwrap()
}

#[test]
fn cross_pairs_of_singleton() {
    let a = free(&[[0, 0]]);
    assert_eq!(count_cross_pairs(&a, 1), 8);
    for r in 0..20 {
        assert_eq!(count_cross_pairs(&a, r), shell_offsets(2, r).len() as u64);
    }
}

/// Direct scan of every pair inside a window around `a`.
fn cross_pairs_brute(a: &SiteSet, r: i64) -> u64 {
    let pts = a.coords();
    let reach = r + 1;
    let mut count = 0;
    for x in &pts {
        for dx in -reach..=reach {
            for dy in -reach..=reach {
                let y = [x[0] + dx, x[1] + dy];
                let n2 = dx * dx + dy * dy;
                if n2 > r * r && n2 <= (r + 1) * (r + 1) && !a.contains(&y) {
                    count += 1;
                }
            }
        }
    }
    count
}

#[test]
fn cross_pairs_match_brute_force_and_bound() {
    let mut square = Vec::new();
    for x in 0..6 {
        for y in 0..6 {
            square.push([x, y]);
        }
    }
    let line: Vec<_> = (0..15).map(|x| [x, 0]).collect();
    let plus = [[0, 0], [1, 0], [-1, 0], [0, 1], [0, -1]];
    let mut ratio: f64 = 0.0;
    for a in [free(&square), free(&line), free(&plus), free(&[[0, 0]])] {
        for r in 0..10u64 {
            let c = count_cross_pairs(&a, r);
            assert_eq!(c, cross_pairs_brute(&a, r as i64));
            assert!(c <= cross_pair_bound(&a, r));
            let scale = ((r.max(1)).pow(2) * free_interior_boundary_size(&a) as u64) as f64;
            ratio = ratio.max(c as f64 / scale);
        }
    }
    assert!(ratio.is_finite() && ratio > 0.0);
}

#[test]
fn matching_examples() {
    let b = LatticeBox::new(2, 21).unwrap();
    let single = SiteSet::from_coords(b.region().clone(), [[0i64, 0]].iter()).unwrap();
    let t = greedy_t_matching(std::slice::from_ref(&single), &b).unwrap();
    assert_eq!(t.len(), 1);
    check_t_matching(&[single], &b, &t).unwrap();

    let b9 = LatticeBox::new(2, 9).unwrap();
    let mut solid = SiteSet::in_box(&b9);
    for x in -1..=1 {
        for y in -1..=1 {
            solid.insert(&[x, y]).unwrap();
        }
    }
    let t = greedy_t_matching(std::slice::from_ref(&solid), &b9).unwrap();
    assert!(t.len() >= 2);
    check_t_matching(&[solid], &b9, &t).unwrap();

    let far = [
        SiteSet::from_coords(b.region().clone(), [[-5i64, -5]].iter()).unwrap(),
        SiteSet::from_coords(b.region().clone(), [[5i64, 5]].iter()).unwrap(),
    ];
    let t = greedy_t_matching(&far, &b).unwrap();
    assert_eq!(t.len(), 2);
    check_t_matching(&far, &b, &t).unwrap();

    let touching = [
        SiteSet::from_coords(b.region().clone(), [[0i64, 0]].iter()).unwrap(),
        SiteSet::from_coords(b.region().clone(), [[1i64, 0]].iter()).unwrap(),
    ];
    assert!(matches!(
        greedy_t_matching(&touching, &b),
        Err(OracleError::BlocksTouch(0, 1))
    ));
}

#[test]
fn matching_rejects_bad_pairs() {
    let b = LatticeBox::new(2, 9).unwrap();
    let a = SiteSet::from_coords(b.region().clone(), [[0i64, 0]].iter()).unwrap();
    let x = b.index(&[0, 0]).unwrap();
    let y = b.index(&[2, 0]).unwrap();
    assert!(check_t_matching(std::slice::from_ref(&a), &b, &[]).is_err());
    assert!(check_t_matching(&[a], &b, &[(x, y)]).is_err());
}

fn params() -> LrpParams {
    LrpParams::new(2, 2.0, 1.0, 0.5).unwrap()
}

#[test]
fn inclusion_isolated_singletons() {
    let b = LatticeBox::new(2, 3).unwrap();
    // sites 1..=7 on a path, sites 0 and 8 isolated
    let edges = (1..7).map(|i| (i, i + 1));
    let g = SampledGraph::from_edges(b, params(), 0, edges).unwrap();
    match verify_second_event_inclusion(&g, 1).unwrap() {
        Verdict::Holds(Witness::SmallBlocks(blocks)) => {
            assert_eq!(blocks.len(), 1);
            assert_eq!(blocks[0].len(), 1);
        }
        other => panic!("unexpected verdict {other:?}"),
    }
}

#[test]
fn inclusion_not_applicable_on_complete_graph() {
    let b = LatticeBox::new(2, 4).unwrap();
    let g = sample_graph(&b, &LrpParams::new(2, 2.0, 10.0, 1.0).unwrap(), 1).unwrap();
    for k in 1..4 {
        assert_eq!(
            verify_second_event_inclusion(&g, k).unwrap(),
            Verdict::NotApplicable
        );
    }
}

#[test]
fn inclusion_guards() {
    let big = SampledGraph::from_edges(LatticeBox::new(2, 5).unwrap(), params(), 0, []).unwrap();
    assert!(matches!(
        verify_second_event_inclusion(&big, 1),
        Err(OracleError::Guard(_))
    ));
    let small = SampledGraph::from_edges(LatticeBox::new(2, 4).unwrap(), params(), 0, []).unwrap();
    assert!(verify_second_event_inclusion(&small, 0).is_err());
}

#[test]
fn inclusion_witnesses_pass_candidate_checks() {
    let b = LatticeBox::new(2, 4).unwrap();
    let mut applicable = 0;
    for (i, (p, beta)) in [(0.2, 1.0), (0.5, 2.0), (0.8, 4.0), (0.3, 1.5)]
        .into_iter()
        .enumerate()
    {
        let pr = LrpParams::new(2, 2.0, beta, p).unwrap();
        for seed in 0..10 {
            let g = sample_graph(&b, &pr, (i as u64) * 1000 + seed).unwrap();
            match verify_second_event_inclusion(&g, 2).unwrap() {
                Verdict::NotApplicable => {}
                Verdict::Violation => panic!("violation at p={p}, beta={beta}, seed={seed}"),
                Verdict::Holds(Witness::LargeClosure(a)) => {
                    applicable += 1;
                    assert!(check_event_e2_candidate(&a, &g));
                }
                Verdict::Holds(Witness::SmallBlocks(blocks)) => {
                    applicable += 1;
                    let union = blocks
                        .iter()
                        .fold(SiteSet::in_box(&b), |u, s| u.union(s).unwrap());
                    assert_eq!(block_decompose(&union).len(), blocks.len());
                    assert!(check_event_e1_candidate(&blocks, 2, &g).unwrap());
                }
            }
        }
    }
    assert!(applicable > 0);
}

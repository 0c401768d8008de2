use lattice_geometry::*;

fn set2(b: &LatticeBox, pts: &[[i64; 2]]) -> SiteSet {
    SiteSet::from_coords(b.region().clone(), pts.iter()).unwrap()
}

fn square(b: &LatticeBox, lo: i64, hi: i64) -> SiteSet {
    let mut s = SiteSet::in_box(b);
    for x in lo..=hi {
        for y in lo..=hi {
            s.insert(&[x, y]).unwrap();
        }
    }
    s
}

#[test]
fn box_coordinates_even_and_odd() {
    let b = LatticeBox::new(2, 4).unwrap();
    assert_eq!(b.n(), 16);
    assert_eq!(b.origin_offset(), -2);
    assert_eq!(b.region().hi(0), 1);
    let b = LatticeBox::new(2, 5).unwrap();
    assert_eq!(b.origin_offset(), -2);
    assert_eq!(b.region().hi(1), 2);
    let b = LatticeBox::new(3, 1).unwrap();
    assert_eq!(b.coords(0), vec![0, 0, 0]);
    assert_eq!(b.origin_index(), 0);
}

#[test]
fn box_index_bijection() {
    for (d, l) in [(1, 7), (2, 4), (2, 5), (3, 3), (4, 2)] {
        let b = LatticeBox::new(d, l).unwrap();
        for i in 0..b.n() {
            let x = b.coords(i);
            assert!(x.iter().all(|&v| 2 * v >= -(l as i64) && 2 * v < l as i64));
            assert_eq!(b.index(&x), Some(i));
        }
    }
}

#[test]
fn box_rejects_degenerate() {
    assert!(LatticeBox::new(0, 3).is_err());
    assert!(LatticeBox::new(2, 0).is_err());
    assert!(LatticeBox::with_sites(2, 10).is_err());
    assert_eq!(LatticeBox::with_sites(2, 4096).unwrap().side(), 64);
}

#[test]
fn blocks_split_far_sites() {
    let b = LatticeBox::new(2, 12).unwrap();
    let s = set2(&b, &[[5, 5], [0, 1], [0, 0]]);
    let blocks = block_decompose(&s);
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[0], set2(&b, &[[0, 0], [0, 1]]));
    assert_eq!(blocks[1], set2(&b, &[[5, 5]]));
}

#[test]
fn blocks_diagonal_not_adjacent() {
    let b = LatticeBox::new(2, 4).unwrap();
    let s = set2(&b, &[[0, 0], [1, 1]]);
    assert_eq!(block_decompose(&s).len(), 2);
    assert!(is_star_connected(&s));
}

#[test]
fn blocks_full_box_and_empty() {
    let b = LatticeBox::new(2, 3).unwrap();
    assert_eq!(block_decompose(&SiteSet::full(b.region().clone())).len(), 1);
    assert!(block_decompose(&SiteSet::in_box(&b)).is_empty());
}

#[test]
fn ring_has_center_hole() {
    let b = LatticeBox::new(2, 7).unwrap();
    let mut ring = square(&b, -1, 1);
    ring = ring.difference(&set2(&b, &[[0, 0]]));
    let r = closure_and_holes(&ring).unwrap();
    assert_eq!(r.closure, square(&b, -1, 1));
    assert_eq!(r.holes.len(), 1);
    assert_eq!(r.holes[0], set2(&b, &[[0, 0]]));
    assert_eq!(r.type_counts.get(&1), Some(&1));
}

#[test]
fn solid_square_has_no_holes() {
    let b = LatticeBox::new(2, 7).unwrap();
    let s = square(&b, -1, 1);
    let r = closure_and_holes(&s).unwrap();
    assert_eq!(r.closure, s);
    assert!(r.holes.is_empty());
}

#[test]
fn u_heptomino_escapes() {
    let b = LatticeBox::new(2, 7).unwrap();
    let s = square(&b, -1, 1).difference(&set2(&b, &[[0, 0], [0, 1]]));
    assert_eq!(s.len(), 7);
    let r = closure_and_holes(&s).unwrap();
    assert!(r.holes.is_empty());
    assert_eq!(r.closure, s);
}

#[test]
fn closure_rejects_disconnected() {
    let b = LatticeBox::new(2, 7).unwrap();
    let s = set2(&b, &[[0, 0], [2, 2]]);
    assert_eq!(
        closure_and_holes(&s).unwrap_err(),
        GeometryError::NotConnected
    );
}

#[test]
fn closure_hole_touching_box_edge_region() {
    // ring hugging the box corner still encloses its hole
    let b = LatticeBox::new(2, 3).unwrap();
    let ring = SiteSet::full(b.region().clone()).difference(&set2(&b, &[[0, 0]]));
    let r = closure_and_holes(&ring).unwrap();
    assert_eq!(r.closure.len(), 9);
    assert_eq!(r.holes.len(), 1);
}

#[test]
fn boundaries_of_centered_square() {
    let b = LatticeBox::new(2, 7).unwrap();
    let s = square(&b, -1, 1);
    let r = boundaries(&s, &b);
    assert_eq!(r.int_free.len(), 8);
    assert_eq!(r.ext_free.len(), 12);
    assert_eq!(r.int_box, r.int_free);
    assert_eq!(r.ext_box, r.ext_free);
}

#[test]
fn boundaries_of_whole_box() {
    for l in [1usize, 2, 5, 6] {
        let b = LatticeBox::new(2, l).unwrap();
        let r = boundaries(&SiteSet::full(b.region().clone()), &b);
        assert!(r.ext_box.is_empty());
        assert!(r.int_box.is_empty());
        assert_eq!(r.ext_free.len(), 4 * l);
    }
}

#[test]
fn boundaries_of_corner_singleton() {
    let b = LatticeBox::new(2, 6).unwrap();
    let s = set2(&b, &[[-3, -3]]);
    let r = boundaries(&s, &b);
    assert_eq!(r.ext_box.len(), 2);
    assert_eq!(r.ext_free.len(), 4);
    assert_eq!(r.int_box.len(), 1);
}

#[test]
fn boundaries_of_empty_set() {
    let b = LatticeBox::new(2, 4).unwrap();
    let r = boundaries(&SiteSet::in_box(&b), &b);
    assert!(r.int_box.is_empty() && r.ext_box.is_empty());
    assert!(r.int_free.is_empty() && r.ext_free.is_empty());
}

#[test]
fn isoperimetry_examples() {
    let b = LatticeBox::new(2, 9).unwrap();
    let r = isoperimetry_report(&square(&b, -1, 1), &b);
    assert_eq!(r.int_free, 8);
    assert!((r.bound - 3.0).abs() < 1e-12);
    assert!(r.int_free_ok && r.ext_free_ok);
    assert!(r.precondition);

    let r = isoperimetry_report(&set2(&b, &[[0, 0]]), &b);
    assert_eq!(r.int_free, 1);
    assert!((r.bound - 1.0).abs() < 1e-12);
    assert!(r.int_free_ok);
}

#[test]
fn hole_type_intervals() {
    assert_eq!(hole_type(1), 1);
    assert_eq!(hole_type(2), 1);
    assert_eq!(hole_type(3), 2);
    assert_eq!(hole_type(4), 2);
    assert_eq!(hole_type(5), 3);
    assert_eq!(hole_type(8), 3);
    assert_eq!(hole_type(9), 4);
}

#[test]
fn principal_threshold_arithmetic() {
    assert!((principal_threshold(2, 1024) - 8.0).abs() < 1e-12);
    assert_eq!(r2(4.0, 2), 2);
    assert_eq!(i_star(4.0, 2), Some(3));
    assert_eq!(r2(0.5, 2), 1);
    assert_eq!(i_star(0.5, 2), Some(1));
    assert_eq!(i_star(3.0, 1), None);
}

#[test]
fn sieve_has_principal_type() {
    // lines every fifth row and column: |A| <= n/2, closure is the whole box
    let b = LatticeBox::new(2, 16).unwrap();
    let mut s = SiteSet::in_box(&b);
    for i in 0..b.n() {
        let x = b.coords(i);
        if (x[0] + 8) % 5 == 0 || (x[1] + 8) % 5 == 0 {
            s.insert_index(i);
        }
    }
    assert!(2 * s.len() <= b.n());
    let r = closure_and_holes(&s).unwrap();
    assert!(4 * r.closure.len() > 3 * b.n());
    assert_eq!(r.holes.len(), 9);
    assert_eq!(r.type_counts.get(&4), Some(&9));
    let t = hole_typing(&r, b.n(), 2, Some(4.0));
    assert!(t.principal_types.contains(&4));
    assert_eq!(t.i_star, Some(3));
}

#[test]
fn projections_filling_square() {
    let b = LatticeBox::new(2, 3).unwrap();
    let s = SiteSet::full(b.region().clone());
    let p = projections_and_fibers(&s, &b);
    assert_eq!(p.sizes, vec![3, 3]);
    assert_eq!(p.star_axis, 0);
    assert_eq!(p.fibers, p.star);
    assert!(p.loomis_whitney);
}

#[test]
fn projections_l_tromino() {
    let b = LatticeBox::new(2, 5).unwrap();
    let s = set2(&b, &[[0, 0], [1, 0], [0, 1]]);
    let p = projections_and_fibers(&s, &b);
    assert_eq!(p.sizes, vec![2, 2]);
    assert!(p.loomis_whitney);
}

#[test]
fn projections_centered_square_has_no_fibers() {
    let b = LatticeBox::new(2, 7).unwrap();
    let p = projections_and_fibers(&square(&b, -1, 1), &b);
    assert!(p.fibers.is_empty());
    assert_eq!(p.star.len(), 3);
}

#[test]
fn site_set_text_roundtrip() {
    let b = LatticeBox::new(2, 6).unwrap();
    let s = set2(&b, &[[0, 0], [-3, 2], [1, -1]]);
    let text = write_site_set(&s, &b);
    assert!(text.starts_with("2 6\n"));
    let (b2, s2) = parse_site_set(&text).unwrap();
    assert_eq!(b2, b);
    assert_eq!(s2, s);
    assert!(parse_site_set("2 6\n9 9\n").is_err());
    assert!(parse_site_set("2 6\n1\n").is_err());
}

#[test]
fn free_sets_and_rebase() {
    let s = SiteSet::free(2, [[100i64, 100], [101, 100]]).unwrap();
    assert_eq!(s.len(), 2);
    let r = closure_and_holes(&s).unwrap();
    assert_eq!(r.closure, s);
    let b = LatticeBox::new(2, 4).unwrap();
    assert!(s.rebase(b.region()).is_err());
}

#[test]
fn three_dimensional_cavity() {
    let b = LatticeBox::new(3, 5).unwrap();
    let mut s = SiteSet::in_box(&b);
    for i in 0..b.n() {
        let x = b.coords(i);
        if x.iter().all(|v| v.abs() <= 1) && x.iter().any(|&v| v != 0) {
            s.insert_index(i);
        }
    }
    let r = closure_and_holes(&s).unwrap();
    assert_eq!(r.holes.len(), 1);
    assert_eq!(r.closure.len(), 27);
    let bd = boundaries(&r.closure, &b);
    assert_eq!(bd.ext_free.len(), 6 * 9);
}

use lattice_geometry::SiteSet;

/// Offsets `v` in Z^d with `r < |v|_2 <= r + 1`.
pub fn shell_offsets(d: usize, r: u64) -> Vec<Vec<i64>> {
    let (lo, hi) = ((r * r) as i64, ((r + 1) * (r + 1)) as i64);
    let reach = r as i64 + 1;
    let mut out = Vec::new();
    let mut v = vec![-reach; d];
    loop {
        let n2: i64 = v.iter().map(|x| x * x).sum();
        if n2 > lo && n2 <= hi {
            out.push(v.clone());
        }
        let mut axis = 0;
        loop {
            if axis == d {
                return out;
            }
            if v[axis] < reach {
                v[axis] += 1;
                break;
            }
            v[axis] = -reach;
            axis += 1;
        }
    }
}

/// Ordered pairs `(x, y)` with `x` in `a`, `y` in Z^d outside `a`, and `r < |x - y|_2 <= r + 1`.
pub fn count_cross_pairs(a: &SiteSet, r: u64) -> u64 {
    let shell = shell_offsets(a.dim(), r);
    let mut y = vec![0i64; a.dim()];
    let mut count = 0;
    for x in a.coords() {
        for v in &shell {
            for (yi, (xi, vi)) in y.iter_mut().zip(x.iter().zip(v)) {
                *yi = xi + vi;
            }
            if !a.contains(&y) {
                count += 1;
            }
        }
    }
    count
}

/// Number of sites of `a` with a nearest neighbor in Z^d outside `a`.
pub fn free_interior_boundary_size(a: &SiteSet) -> usize {
    let d = a.dim();
    a.coords()
        .into_iter()
        .filter(|x| {
            let mut y = x.clone();
            (0..d).any(|axis| {
                [-1, 1].into_iter().any(|s| {
                    y[axis] = x[axis] + s;
                    let out = !a.contains(&y);
                    y[axis] = x[axis];
                    out
                })
            })
        })
        .count()
}

/// `(Σ_{v in shell} |v|_1) · |free interior boundary of a|`. A lattice path of
/// `|v|_1` unit steps from `x` in `a` to `x + v` outside `a` leaves `a` through a
/// boundary site at some step `j`, and for fixed `(v, j)` that site determines `x`.
pub fn cross_pair_bound(a: &SiteSet, r: u64) -> u64 {
    let l1: i64 = shell_offsets(a.dim(), r)
        .iter()
        .map(|v| v.iter().map(|x| x.abs()).sum::<i64>())
        .sum();
    l1 as u64 * free_interior_boundary_size(a) as u64
}

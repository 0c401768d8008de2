use lattice_geometry::LatticeBox;

/// One unordered displacement class: all pairs `{x, x + v}` inside the box.
#[derive(Clone, Debug, PartialEq)]
pub struct DisplacementClass {
    pub id: usize,
    /// Half-space representative: first nonzero coordinate is positive.
    pub v: Vec<i64>,
    /// Number of pairs in the box, `prod (L - |v_i|)`.
    pub pairs: u64,
    pub distance: f64,
}

/// All classes of the box in a fixed order; `id` is the position.
pub fn displacement_classes(b: &LatticeBox) -> Vec<DisplacementClass> {
    let d = b.d();
    let l = b.side() as i64;
    let mut out = Vec::new();
    let mut v = vec![-(l - 1); d];
    if l == 1 {
        return out;
    }
    loop {
        let first = v.iter().find(|&&c| c != 0);
        if first.is_some_and(|&c| c > 0) {
            let pairs = v.iter().map(|&c| (l - c.abs()) as u64).product();
            let distance = v.iter().map(|&c| (c * c) as f64).sum::<f64>().sqrt();
            out.push(DisplacementClass {
                id: out.len(),
                v: v.clone(),
                pairs,
                distance,
            });
        }
        // odometer with axis d-1 fastest
        let mut a = d;
        loop {
            if a == 0 {
                return out;
            }
            a -= 1;
            if v[a] < l - 1 {
                v[a] += 1;
                break;
            }
            v[a] = -(l - 1);
        }
    }
}

/// Maps the `t`-th pair of a class (mixed radix over `L - |v_i|`) to site indices.
#[derive(Clone, Debug)]
pub(crate) struct PairDecoder {
    radices: Vec<u64>,
    strides: Vec<u64>,
    base: u64,
    delta: i64,
}

impl PairDecoder {
    pub fn new(b: &LatticeBox, v: &[i64]) -> Self {
        let l = b.side() as i64;
        let mut strides = Vec::with_capacity(v.len());
        let mut s = 1u64;
        let mut base = 0u64;
        let mut delta = 0i64;
        for &c in v {
            strides.push(s);
            if c < 0 {
                base += (-c) as u64 * s;
            }
            delta += c * s as i64;
            s *= l as u64;
        }
        PairDecoder {
            radices: v.iter().map(|&c| (l - c.abs()) as u64).collect(),
            strides,
            base,
            delta,
        }
    }

    #[inline]
    pub fn decode(&self, mut t: u64) -> (u32, u32) {
        let mut x = self.base;
        for (r, s) in self.radices.iter().zip(&self.strides) {
            x += (t % r) * s;
            t /= r;
        }
        let y = (x as i64 + self.delta) as u64;
        if x < y {
            (x as u32, y as u32)
        } else {
            (y as u32, x as u32)
        }
    }
}

/// Fixed lattice animals in Z^2 under a given adjacency, enumerated once per
/// translation class by anchoring at the lowest cell (smallest y, then smallest x).
pub(crate) struct Redelmeier {
    offsets: &'static [(i32, i32)],
    max: usize,
    w: i32,
    seen: Vec<bool>,
    marked: Vec<u32>,
    pool: Vec<Vec<u32>>,
    cells: Vec<(i32, i32)>,
}

pub(crate) const FOUR: [(i32, i32); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];
pub(crate) const EIGHT: [(i32, i32); 8] = [
    (1, 0),
    (1, 1),
    (0, 1),
    (-1, 1),
    (-1, 0),
    (-1, -1),
    (0, -1),
    (1, -1),
];

impl Redelmeier {
    /// Engine with the anchor placed; returns it with the anchor's admissible neighbors.
    pub(crate) fn with_anchor(offsets: &'static [(i32, i32)], max: usize) -> (Self, Vec<u32>) {
        let m = max as i32;
        let w = 2 * m + 3;
        let h = m + 3;
        let mut seen = vec![false; (w * h) as usize];
        for row in 0..h {
            for col in 0..w {
                let (x, y) = (col - (m + 1), row - 1);
                if y < 0 || (y == 0 && x < 0) || col == 0 || col == w - 1 || row == h - 1 {
                    seen[(row * w + col) as usize] = true;
                }
            }
        }
        let mut e = Redelmeier {
            offsets,
            max,
            w,
            seen,
            marked: Vec::new(),
            pool: Vec::new(),
            cells: vec![(0, 0)],
        };
        let anchor = e.index(0, 0);
        e.seen[anchor as usize] = true;
        let mut first = Vec::new();
        e.expand(anchor, &mut first);
        (e, first)
    }

    fn index(&self, x: i32, y: i32) -> u32 {
        ((y + 1) * self.w + x + (self.max as i32 + 1)) as u32
    }

    fn coords(&self, c: u32) -> (i32, i32) {
        let c = c as i32;
        (c % self.w - (self.max as i32 + 1), c / self.w - 1)
    }

    fn expand(&mut self, c: u32, into: &mut Vec<u32>) {
        let (x, y) = self.coords(c);
        for &(dx, dy) in self.offsets {
            let n = self.index(x + dx, y + dy);
            if !self.seen[n as usize] {
                self.seen[n as usize] = true;
                self.marked.push(n);
                into.push(n);
            }
        }
    }

    pub(crate) fn cells(&self) -> &[(i32, i32)] {
        &self.cells
    }

    /// Explores every animal whose second cell is `first[i]`, skipping those
    /// reachable through `first[i+1..]`.
    pub(crate) fn branch<F: FnMut(&[(i32, i32)])>(&mut self, first: &[u32], i: usize, f: &mut F) {
        self.step(first[i], &first[..i], f);
    }

    fn step<F: FnMut(&[(i32, i32)])>(&mut self, c: u32, rest: &[u32], f: &mut F) {
        self.cells.push(self.coords(c));
        f(&self.cells);
        if self.cells.len() < self.max {
            let mut next = self.pool.pop().unwrap_or_default();
            next.clear();
            next.extend_from_slice(rest);
            let mark = self.marked.len();
            self.expand(c, &mut next);
            for i in (0..next.len()).rev() {
                let c = next[i];
                self.step(c, &next[..i], f);
            }
            for &n in &self.marked[mark..] {
                self.seen[n as usize] = false;
            }
            self.marked.truncate(mark);
            self.pool.push(next);
        }
        self.cells.pop();
    }
}

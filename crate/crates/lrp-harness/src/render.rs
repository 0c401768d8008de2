use lrp_components::ComponentLabels;
use lrp_sampler::SampledGraph;

use crate::HarnessError;

pub const C1_COLOR: [u8; 3] = [0, 0, 255];
pub const C2_COLOR: [u8; 3] = [255, 0, 0];
pub const C0_COLOR: [u8; 3] = [0, 160, 0];
pub const OTHER_COLOR: [u8; 3] = [128, 128, 128];

/// Row-major RGB image, top row first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Raster {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<[u8; 3]>,
}

impl Raster {
    pub fn pixel(&self, col: usize, row: usize) -> [u8; 3] {
        self.pixels[row * self.width + col]
    }

    /// Binary portable pixmap (`P6`).
    pub fn to_ppm(&self) -> Vec<u8> {
        let mut out = format!("P6\n{} {}\n255\n", self.width, self.height).into_bytes();
        for p in &self.pixels {
            out.extend_from_slice(p);
        }
        out
    }
}

/// One pixel per site: largest component blue, second red, the origin's
/// component green when it is neither, all other sites gray. Site `(x, y)` is
/// drawn at column `x - lo`, row `L - 1 - (y - lo)`.
pub fn render_components(graph: &SampledGraph) -> Result<Raster, HarnessError> {
    let lattice = graph.lattice();
    if lattice.d() != 2 {
        return Err(HarnessError::Unsupported(format!(
            "rendering needs d = 2, got {}",
            lattice.d()
        )));
    }
    let side = lattice.side();
    let labels = ComponentLabels::from_edges(graph.n(), graph.edges().iter().copied());
    let r0 = labels.rank[lattice.origin_index()];
    let lo = lattice.region().lo()[0];
    let mut pixels = vec![OTHER_COLOR; side * side];
    for (i, &r) in labels.rank.iter().enumerate() {
        let x = lattice.coords(i);
        let col = (x[0] - lo) as usize;
        let row = side - 1 - (x[1] - lo) as usize;
        pixels[row * side + col] = match r {
            0 => C1_COLOR,
            1 => C2_COLOR,
            _ if r == r0 => C0_COLOR,
            _ => OTHER_COLOR,
        };
    }
    Ok(Raster {
        width: side,
        height: side,
        pixels,
    })
}

//! Structural-consistency metric: images become 4-neighborhood grid graphs
//! over downsampled luma, a fixed-weight two-layer graph convolution pools
//! them into feature vectors, and the squared distance between two images'
//! pooled features scores how much structure changed between them.

use crate::error::{Error, Result};
use crate::raster::ImageBuffer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

/// Nodes per side of the default graph grid.
pub const DEFAULT_GRID: usize = 64;
/// Feature width of both convolution layers.
pub const FEATURE_DIM: usize = 16;

/// Grid graph with one luma value per node; edges are the implicit
/// 4-neighborhood of the grid.
#[derive(Debug, Clone)]
pub struct PixelGraph {
    pub grid_rows: usize,
    pub grid_cols: usize,
    /// Row-major node values in [0, 1].
    pub node_values: Vec<f64>,
}

impl PixelGraph {
    /// Neighbor count (2 at corners, 3 on edges, 4 inside).
    pub fn degree(&self, r: usize, c: usize) -> usize {
        usize::from(r > 0)
            + usize::from(r + 1 < self.grid_rows)
            + usize::from(c > 0)
            + usize::from(c + 1 < self.grid_cols)
    }
}

#[derive(Debug, Clone)]
pub struct GraphFeatures {
    /// One FEATURE_DIM vector per node, row-major.
    pub per_node: Vec<Vec<f64>>,
    /// Global mean pool over nodes.
    pub pooled: Vec<f64>,
}

/// Average the image's luma over a grid_rows×grid_cols partition and scale
/// to [0, 1]. With the grid equal to the image dimensions every node is a
/// single pixel's luma/255.
pub fn build_graph(img: &ImageBuffer, grid: (usize, usize)) -> Result<PixelGraph> {
    let (gr, gc) = grid;
    if gr == 0 || gc == 0 {
        return Err(Error::InvalidArg("empty graph grid".into()));
    }
    if gr > img.height() || gc > img.width() {
        return Err(Error::InvalidArg(format!(
            "graph grid {gr}x{gc} exceeds image {}x{}",
            img.height(),
            img.width()
        )));
    }
    let luma = img.luma();
    let mut node_values = Vec::with_capacity(gr * gc);
    for r in 0..gr {
        let r0 = r * img.height() / gr;
        let r1 = (r + 1) * img.height() / gr;
        for c in 0..gc {
            let c0 = c * img.width() / gc;
            let c1 = (c + 1) * img.width() / gc;
            let mut acc = 0.0;
            for rr in r0..r1 {
                for cc in c0..c1 {
                    acc += luma.get(rr, cc);
                }
            }
            node_values.push(acc / ((r1 - r0) * (c1 - c0)) as f64 / 255.0);
        }
    }
    Ok(PixelGraph {
        grid_rows: gr,
        grid_cols: gc,
        node_values,
    })
}

/// One step of symmetric-normalized propagation with self-loops:
/// y_i = Σ_{j ∈ N(i) ∪ {i}} x_j / √(d̃_i · d̃_j), d̃ = degree + 1.
/// `x` holds one row-major vector per node; all must share a width.
pub fn propagate_step(g: &PixelGraph, x: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let (gr, gc) = (g.grid_rows, g.grid_cols);
    let width = x.first().map_or(0, Vec::len);
    let dt = |r: usize, c: usize| (g.degree(r, c) + 1) as f64;
    let mut y = vec![vec![0.0; width]; gr * gc];
    for r in 0..gr {
        for c in 0..gc {
            let i = r * gc + c;
            let di = dt(r, c);
            let mut acc = vec![0.0; width];
            let mut take = |rr: usize, cc: usize| {
                let w = 1.0 / (di * dt(rr, cc)).sqrt();
                for (a, v) in acc.iter_mut().zip(&x[rr * gc + cc]) {
                    *a += w * v;
                }
            };
            take(r, c);
            if r > 0 {
                take(r - 1, c);
            }
            if r + 1 < gr {
                take(r + 1, c);
            }
            if c > 0 {
                take(r, c - 1);
            }
            if c + 1 < gc {
                take(r, c + 1);
            }
            y[i] = acc;
        }
    }
    y
}

/// Fixed random layer weights: uniform in ±1/√fan_in.
fn layer_weights(rng: &mut ChaCha20Rng, fan_in: usize, fan_out: usize) -> Vec<Vec<f64>> {
    let bound = 1.0 / (fan_in as f64).sqrt();
    (0..fan_in)
        .map(|_| (0..fan_out).map(|_| rng.gen_range(-bound..bound)).collect())
        .collect()
}

fn matmul(x: &[Vec<f64>], w: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let fan_out = w[0].len();
    x.iter()
        .map(|row| {
            let mut out = vec![0.0; fan_out];
            for (v, wrow) in row.iter().zip(w) {
                for (o, ww) in out.iter_mut().zip(wrow) {
                    *o += v * ww;
                }
            }
            out
        })
        .collect()
}

fn tanh_inplace(x: &mut [Vec<f64>]) {
    for row in x {
        for v in row {
            *v = v.tanh();
        }
    }
}

/// Two propagation layers, each followed by a seeded fixed linear map and
/// tanh, then a global mean pool. Deterministic for a fixed seed.
pub fn gcn_features(g: &PixelGraph, weights_seed: u64) -> GraphFeatures {
    let mut rng = ChaCha20Rng::seed_from_u64(weights_seed);
    let w1 = layer_weights(&mut rng, 1, FEATURE_DIM);
    let w2 = layer_weights(&mut rng, FEATURE_DIM, FEATURE_DIM);

    let x0: Vec<Vec<f64>> = g.node_values.iter().map(|v| vec![*v]).collect();
    let mut h = matmul(&propagate_step(g, &x0), &w1);
    tanh_inplace(&mut h);
    let mut h = matmul(&propagate_step(g, &h), &w2);
    tanh_inplace(&mut h);

    let n = h.len() as f64;
    let mut pooled = vec![0.0; FEATURE_DIM];
    for row in &h {
        for (p, v) in pooled.iter_mut().zip(row) {
            *p += v / n;
        }
    }
    GraphFeatures {
        per_node: h,
        pooled,
    }
}

/// Squared Euclidean distance between the two images' pooled graph
/// features. Zero for identical images; grows with structural damage.
pub fn consistency(i_o: &ImageBuffer, i_w: &ImageBuffer, seed: u64) -> Result<f64> {
    if i_o.width() != i_w.width() || i_o.height() != i_w.height() {
        return Err(Error::DimensionMismatch(format!(
            "consistency needs equal dims, got {}x{} vs {}x{}",
            i_o.width(),
            i_o.height(),
            i_w.width(),
            i_w.height()
        )));
    }
    let grid = (
        DEFAULT_GRID.min(i_o.height()),
        DEFAULT_GRID.min(i_o.width()),
    );
    let f_o = gcn_features(&build_graph(i_o, grid)?, seed);
    let f_w = gcn_features(&build_graph(i_w, grid)?, seed);
    Ok(f_o
        .pooled
        .iter()
        .zip(&f_w.pooled)
        .map(|(a, b)| (a - b) * (a - b))
        .sum())
}

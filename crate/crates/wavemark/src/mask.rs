//! Texture-energy embedding mask.
//!
//! The watermark hides best where the sub-band already has energy, so the
//! mask is the 3×3 local mean of coefficient magnitude, normalized by its
//! own 99th percentile and clamped to [0,1]: ≈1 in textured regions,
//! ≈0 in flat ones. Deterministic function of the cover image alone.

use crate::plane::{ComplexPlane, Plane};

#[derive(Debug, Clone)]
pub struct AttentionMask {
    pub m: Plane,
}

/// Nearest-rank percentile (p in 0..=100) of the values.
fn percentile(values: &[f64], p: f64) -> f64 {
    let mut v: Vec<f64> = values.to_vec();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let rank = ((p / 100.0) * v.len() as f64).ceil() as usize;
    v[rank.clamp(1, v.len()) - 1]
}

pub fn attention_mask(u_subband: &ComplexPlane) -> AttentionMask {
    let (rows, cols) = (u_subband.rows(), u_subband.cols());
    let mag = Plane::from_fn(rows, cols, |r, c| {
        (u_subband.re.get(r, c).powi(2) + u_subband.im.get(r, c).powi(2)).sqrt()
    });
    // 3×3 local mean; at borders, the mean of the in-bounds neighbors
    let local = Plane::from_fn(rows, cols, |r, c| {
        let mut acc = 0.0;
        let mut n = 0usize;
        for dr in -1i64..=1 {
            for dc in -1i64..=1 {
                let rr = r as i64 + dr;
                let cc = c as i64 + dc;
                if (0..rows as i64).contains(&rr) && (0..cols as i64).contains(&cc) {
                    acc += mag.get(rr as usize, cc as usize);
                    n += 1;
                }
            }
        }
        acc / n as f64
    });
    let p99 = percentile(local.data(), 99.0);
    if p99 <= 0.0 {
        // all-zero sub-band: 0/0 resolves to an all-zero mask
        return AttentionMask {
            m: Plane::zeros(rows, cols),
        };
    }
    AttentionMask {
        m: local.map(|v| (v / p99).clamp(0.0, 1.0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_subband_gives_zero_mask() {
        let z = ComplexPlane::zeros(16, 16);
        let m = attention_mask(&z);
        assert!(m.m.data().iter().all(|v| *v == 0.0));
    }

    #[test]
    fn constant_magnitude_gives_constant_mask() {
        let mut z = ComplexPlane::zeros(12, 12);
        for v in z.re.data_mut() {
            *v = 3.0;
        }
        for v in z.im.data_mut() {
            *v = 4.0;
        }
        let m = attention_mask(&z);
        for v in m.m.data() {
            assert!((v - 1.0).abs() < 1e-12, "{v}");
        }
    }

    #[test]
    fn mask_in_range_and_tracks_texture() {
        // left half flat (tiny magnitude), right half strong checkerboard
        let z = {
            let mut z = ComplexPlane::zeros(24, 24);
            for r in 0..24 {
                for c in 0..24 {
                    let v = if c >= 12 {
                        if (r + c) % 2 == 0 {
                            5.0
                        } else {
                            -5.0
                        }
                    } else {
                        0.01
                    };
                    z.re.set(r, c, v);
                    z.im.set(r, c, v * 0.5);
                }
            }
            z
        };
        let m = attention_mask(&z);
        assert!(m.m.data().iter().all(|v| (0.0..=1.0).contains(v)));
        let mean = m.m.data().iter().sum::<f64>() / m.m.data().len() as f64;
        assert!(mean > 0.0 && mean < 1.0, "mean {mean}");
        let left = m.m.get(12, 4);
        let right = m.m.get(12, 18);
        assert!(
            right > 10.0 * left,
            "textured {right} vs flat {left}"
        );
    }

    #[test]
    fn percentile_nearest_rank() {
        let v: Vec<f64> = (1..=100).map(|x| x as f64).collect();
        assert_eq!(percentile(&v, 99.0), 99.0);
        assert_eq!(percentile(&v, 100.0), 100.0);
        assert_eq!(percentile(&[5.0], 99.0), 5.0);
    }
}

//! Procedural portrait generator: deterministic face-like test images with
//! smooth skin regions, high-frequency hair/eye detail, and mild sensor
//! grain. No dataset download, no licensing baggage, byte-reproducible
//! from a seed — good enough to exercise embedding, masking, and the
//! distortion pool at realistic signal statistics.

use crate::error::Result;
use crate::plane::Plane;
use crate::raster::{save_png, ImageBuffer};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::path::{Path, PathBuf};

/// Keep every generated channel inside this range so embedding has
/// clamp-free headroom.
const LO: f64 = 15.0;
const HI: f64 = 240.0;

struct FaceParams {
    skin: [f64; 3],
    hair: [f64; 3],
    hair_tint: [f64; 3],
    bg: [f64; 3],
    bg_slope: (f64, f64),
    bg_wave: (f64, f64, f64, f64),
    bg_weave: (f64, f64, f64),
    bg_weave_tint: [f64; 3],
    center: (f64, f64),
    radii: (f64, f64),
    eye_y: f64,
    eye_dx: f64,
    eye_r: f64,
    iris: [f64; 3],
    mouth_y: f64,
    mouth_w: f64,
    lip: [f64; 3],
    hairline: f64,
    cloth: [f64; 3],
    cloth_weave: (f64, f64, f64),
    cloth_tint: [f64; 3],
    grain: f64,
}

impl FaceParams {
    fn draw(rng: &mut ChaCha20Rng, n: f64) -> Self {
        let r0 = rng.gen_range(165.0..205.0);
        let g0 = r0 - rng.gen_range(25.0..45.0);
        let b0 = g0 - rng.gen_range(15.0..35.0);
        let h = rng.gen_range(40.0..85.0);
        let tint = |rng: &mut ChaCha20Rng| {
            [
                rng.gen_range(0.5..1.4),
                rng.gen_range(0.5..1.4),
                rng.gen_range(0.5..1.4),
            ]
        };
        FaceParams {
            skin: [r0, g0, b0],
            hair: [h, h * rng.gen_range(0.75..0.95), h * rng.gen_range(0.55..0.85)],
            hair_tint: tint(rng),
            bg: [
                rng.gen_range(70.0..180.0),
                rng.gen_range(70.0..180.0),
                rng.gen_range(70.0..180.0),
            ],
            bg_slope: (rng.gen_range(-60.0..60.0), rng.gen_range(-60.0..60.0)),
            bg_wave: (
                rng.gen_range(0.05..0.16),
                rng.gen_range(0.05..0.16),
                rng.gen_range(0.0..std::f64::consts::TAU),
                rng.gen_range(8.0..22.0),
            ),
            bg_weave: (
                rng.gen_range(0.5..1.1),
                rng.gen_range(0.5..1.1),
                rng.gen_range(3.0..8.0),
            ),
            bg_weave_tint: tint(rng),
            center: (
                n * rng.gen_range(0.46..0.54),
                n * rng.gen_range(0.48..0.56),
            ),
            radii: (n * rng.gen_range(0.24..0.30), n * rng.gen_range(0.32..0.38)),
            eye_y: n * rng.gen_range(-0.13..-0.07),
            eye_dx: n * rng.gen_range(0.10..0.15),
            eye_r: n * rng.gen_range(0.035..0.05),
            iris: [
                rng.gen_range(40.0..90.0),
                rng.gen_range(40.0..95.0),
                rng.gen_range(45.0..120.0),
            ],
            mouth_y: n * rng.gen_range(0.15..0.21),
            mouth_w: n * rng.gen_range(0.10..0.16),
            lip: [
                rng.gen_range(130.0..175.0),
                rng.gen_range(55.0..85.0),
                rng.gen_range(55.0..90.0),
            ],
            hairline: rng.gen_range(0.16..0.24),
            cloth: [
                rng.gen_range(50.0..170.0),
                rng.gen_range(50.0..170.0),
                rng.gen_range(50.0..170.0),
            ],
            cloth_weave: (
                rng.gen_range(0.6..1.3),
                rng.gen_range(0.6..1.3),
                rng.gen_range(5.0..12.0),
            ),
            cloth_tint: tint(rng),
            grain: rng.gen_range(2.0..4.0),
        }
    }
}

/// Smoothstep blend of `b` over `a` by t ∈ [0,1].
fn blend(a: f64, b: f64, t: f64) -> f64 {
    let t = t.clamp(0.0, 1.0);
    let s = t * t * (3.0 - 2.0 * t);
    a + (b - a) * s
}

/// One deterministic synthetic portrait.
pub fn face(seed: u64, size: usize) -> ImageBuffer {
    let n = size as f64;
    let mut rng = ChaCha20Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(1));
    let p = FaceParams::draw(&mut rng, n);

    // streak phases for hair texture
    let streaks: Vec<f64> = (0..8).map(|_| rng.gen_range(0.0..std::f64::consts::TAU)).collect();

    let mut planes = [
        Plane::zeros(size, size),
        Plane::zeros(size, size),
        Plane::zeros(size, size),
    ];
    let (cx, cy) = p.center;
    let (rx, ry) = p.radii;

    for row in 0..size {
        for col in 0..size {
            let (x, y) = (col as f64, row as f64);
            let (wx, wy, ph, amp) = p.bg_wave;
            let wave = amp * (wx * x + ph).sin() * (wy * y).cos();
            let (fx, fy, famp) = p.bg_weave;
            let weave = famp * (fx * x).sin() * (fy * y + ph).sin();
            let mut px = [0.0f64; 3];
            for ch in 0..3 {
                px[ch] = p.bg[ch]
                    + p.bg_slope.0 * (x / n - 0.5)
                    + p.bg_slope.1 * (y / n - 0.5)
                    + wave
                    + weave * p.bg_weave_tint[ch];
            }

            // collar and shoulders under the head
            let shoulder_t = (y - (cy + 0.72 * ry)) / (0.06 * n);
            if shoulder_t > 0.0 {
                let (cfx, cfy, camp) = p.cloth_weave;
                let cloth_weave = camp * (cfx * x).sin() * (cfy * y).sin();
                for ch in 0..3 {
                    px[ch] = blend(
                        px[ch],
                        p.cloth[ch] + cloth_weave * p.cloth_tint[ch],
                        shoulder_t,
                    );
                }
            }

            // head ellipse with a soft rim
            let e = ((x - cx) / rx).powi(2) + ((y - cy) / ry).powi(2);
            if e < 1.15 {
                let shade = 1.0 - 0.22 * e + 0.06 * (x - cx) / rx;
                let mut skin = [0.0f64; 3];
                for ch in 0..3 {
                    skin[ch] = p.skin[ch] * shade;
                }

                // hair cap above the hairline
                let hair_t = ((cy - p.radii.1 * (1.0 - 2.0 * p.hairline)) - y) / (0.08 * n);
                if hair_t > 0.0 {
                    let streak: f64 = streaks
                        .iter()
                        .enumerate()
                        .map(|(i, phs)| ((0.25 + 0.11 * i as f64) * x + phs).sin())
                        .sum::<f64>()
                        * 3.0;
                    for ch in 0..3 {
                        skin[ch] = blend(skin[ch], p.hair[ch] + streak * p.hair_tint[ch], hair_t);
                    }
                }

                // eyes: sclera, iris, pupil, highlight
                for side in [-1.0, 1.0] {
                    let (ex, ey) = (cx + side * p.eye_dx, cy + p.eye_y);
                    let de = ((x - ex) / (1.6 * p.eye_r)).powi(2) + ((y - ey) / p.eye_r).powi(2);
                    if de < 1.0 {
                        for (ch, s) in skin.iter_mut().enumerate() {
                            *s = blend(*s, 228.0 - 8.0 * (ch as f64), 1.0 - de);
                        }
                        let di = ((x - ex).powi(2) + (y - ey).powi(2)).sqrt() / (0.8 * p.eye_r);
                        if di < 1.0 {
                            for (ch, s) in skin.iter_mut().enumerate() {
                                *s = blend(*s, p.iris[ch], 1.0 - di * di);
                            }
                        }
                        let dp = ((x - ex).powi(2) + (y - ey).powi(2)).sqrt() / (0.35 * p.eye_r);
                        if dp < 1.0 {
                            for s in skin.iter_mut() {
                                *s = blend(*s, 24.0, 1.0 - dp);
                            }
                        }
                        let dh = ((x - ex - 0.3 * p.eye_r).powi(2)
                            + (y - ey - 0.3 * p.eye_r).powi(2))
                        .sqrt()
                            / (0.18 * p.eye_r);
                        if dh < 1.0 {
                            for s in skin.iter_mut() {
                                *s += 50.0 * (1.0 - dh);
                            }
                        }
                    }
                    // eyebrow band
                    let by = ey - 1.9 * p.eye_r;
                    let db = ((x - ex) / (1.9 * p.eye_r)).powi(2)
                        + ((y - by) / (0.45 * p.eye_r)).powi(2);
                    if db < 1.0 {
                        for (ch, s) in skin.iter_mut().enumerate() {
                            *s = blend(*s, p.hair[ch] * 0.9, (1.0 - db) * 0.8);
                        }
                    }
                }

                // mouth
                let (mx, my) = (cx, cy + p.mouth_y);
                let dm = ((x - mx) / p.mouth_w).powi(2) + ((y - my) / (0.035 * n)).powi(2);
                if dm < 1.0 {
                    for (ch, s) in skin.iter_mut().enumerate() {
                        *s = blend(*s, p.lip[ch], 1.0 - dm);
                    }
                }

                // nose shadow: gentle vertical darkening
                let dn = ((x - cx) / (0.035 * n)).powi(2)
                    + ((y - (cy + 0.04 * n)) / (0.12 * n)).powi(2);
                if dn < 1.0 {
                    for s in skin.iter_mut() {
                        *s -= 9.0 * (1.0 - dn);
                    }
                }

                // rim blend into the background
                let t = if e < 0.92 { 1.0 } else { (1.15 - e) / 0.23 };
                for ch in 0..3 {
                    px[ch] = blend(px[ch], skin[ch], t);
                }
            }

            for (ch, plane) in planes.iter_mut().enumerate() {
                plane.set(row, col, px[ch]);
            }
        }
    }

    // sensor grain, independent per channel
    for plane in &mut planes {
        for v in plane.data_mut() {
            *v += rng.gen_range(-1.5 * p.grain..1.5 * p.grain);
        }
    }

    ImageBuffer::from_fn(size, size, |r, c| {
        [
            planes[0].get(r, c).round().clamp(LO, HI) as u8,
            planes[1].get(r, c).round().clamp(LO, HI) as u8,
            planes[2].get(r, c).round().clamp(LO, HI) as u8,
        ]
    })
}

/// Write `count` portraits into `dir` as face_000.png … and return the
/// sorted paths.
pub fn generate_corpus(dir: &Path, count: usize, size: usize, seed: u64) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| crate::error::Error::io(dir, e))?;
    let mut paths = Vec::with_capacity(count);
    for i in 0..count {
        let img = face(seed.wrapping_add(i as u64), size);
        let path = dir.join(format!("face_{i:03}.png"));
        save_png(&img, &path)?;
        paths.push(path);
    }
    Ok(paths)
}

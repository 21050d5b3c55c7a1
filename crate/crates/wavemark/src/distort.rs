//! Seedable image distortions: the benign pool (compression, filtering,
//! noise) plus two malicious surrogates that destroy high-frequency chroma
//! structure the way generative face editing does.

use crate::dtcwt;
use crate::error::{Error, Result};
use crate::plane::Plane;
use crate::raster::{rgb_to_yuv, yuv_to_rgb, ImageBuffer, YuvImage};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, Normal};

/// Sub-bands the malicious scramble targets (the embedder's defaults).
const SCRAMBLE_SUBBANDS: [usize; 2] = [1, 3];
const SCRAMBLE_LEVEL: usize = 2;
/// Sign field granularity of the scramble, in band cells. The transform is
/// overcomplete, so a per-cell i.i.d. sign field lies mostly outside the
/// range of the analysis operator: synthesis discards most of it and a
/// re-analysis still sees the original signs. Negating coherent 4x4 blocks
/// of a conjugate band pair is a local negation of that direction group's
/// content — image-realizable, so it survives the synthesis/analysis round
/// trip — while staying far smaller than any one bit's support (which
/// spreads over the whole band).
const SCRAMBLE_BLOCK: usize = 4;
/// Per-block flip probability. The first decomposition stage is undecimated,
/// so its lowpass/highpass transition bands overlap: re-analysis of a
/// scrambled image re-injects original-sign content from the untouched
/// finest-scale bands, capping the achievable flip depth well below 1. A
/// symmetric sign field therefore leaves every correlation positive no
/// matter the block size; biasing the flips is what actually drives the
/// correlations negative and destroys the message.
const SCRAMBLE_FLIP_P: f64 = 0.9;
/// Blur strength of the region-regeneration surrogate.
const REGEN_SIGMA: f64 = 4.0;
const REGEN_KERNEL: usize = 17;
/// Synthetic grain added back after the regeneration blur.
const REGEN_NOISE_SIGMA: f64 = 2.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DistortionKind {
    Identity,
    JpegTest { quality: u8 },
    Resize { scale: f64 },
    GaussianBlur { sigma: f64, kernel: usize },
    MedianBlur { kernel: usize },
    Dropout { p: f64 },
    SaltPepper { p: f64 },
    GaussianNoise { sigma: f64 },
    SubbandScramble { region: f64 },
    RegionRegenerate { region: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistortionSpec {
    pub kind: DistortionKind,
    pub seed: u64,
}

impl DistortionSpec {
    pub fn new(kind: DistortionKind) -> Self {
        DistortionSpec { kind, seed: 0 }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn validate(&self) -> Result<()> {
        use DistortionKind::*;
        let bad = |msg: String| Err(Error::InvalidArg(msg));
        match self.kind {
            Identity => Ok(()),
            JpegTest { quality } => {
                if !(10..=95).contains(&quality) {
                    return bad(format!("jpeg quality {quality} outside [10,95]"));
                }
                Ok(())
            }
            Resize { scale } => {
                if !(0.25..=2.0).contains(&scale) {
                    return bad(format!("resize scale {scale} outside [0.25,2]"));
                }
                Ok(())
            }
            GaussianBlur { sigma, kernel } => {
                if sigma <= 0.0 {
                    return bad(format!("blur sigma {sigma} must be positive"));
                }
                if kernel < 3 || kernel % 2 == 0 {
                    return bad(format!("blur kernel {kernel} must be odd and >= 3"));
                }
                Ok(())
            }
            MedianBlur { kernel } => {
                if kernel < 3 || kernel % 2 == 0 {
                    return bad(format!("median kernel {kernel} must be odd and >= 3"));
                }
                Ok(())
            }
            Dropout { p } | SaltPepper { p } => {
                if !(p > 0.0 && p < 1.0) {
                    return bad(format!("probability {p} outside (0,1)"));
                }
                Ok(())
            }
            GaussianNoise { sigma } => {
                if sigma <= 0.0 {
                    return bad(format!("noise sigma {sigma} must be positive"));
                }
                Ok(())
            }
            SubbandScramble { region } | RegionRegenerate { region } => {
                if !(region > 0.0 && region <= 1.0) {
                    return bad(format!("region fraction {region} outside (0,1]"));
                }
                Ok(())
            }
        }
    }

    /// Canonical text form, also used as the report's distortion label.
    pub fn name(&self) -> String {
        use DistortionKind::*;
        match self.kind {
            Identity => "identity".into(),
            JpegTest { quality } => format!("jpeg:q={quality}"),
            Resize { scale } => format!("resize:s={scale}"),
            GaussianBlur { sigma, kernel } => format!("gblur:sigma={sigma}:k={kernel}"),
            MedianBlur { kernel } => format!("median:k={kernel}"),
            Dropout { p } => format!("dropout:p={p}"),
            SaltPepper { p } => format!("saltpepper:p={p}"),
            GaussianNoise { sigma } => format!("gnoise:sigma={sigma}"),
            SubbandScramble { region } => format!("scramble:region={region}"),
            RegionRegenerate { region } => format!("regen:region={region}"),
        }
    }

    pub fn is_malicious(&self) -> bool {
        matches!(
            self.kind,
            DistortionKind::SubbandScramble { .. } | DistortionKind::RegionRegenerate { .. }
        )
    }

    /// Parse the canonical text form: a kind name optionally followed by
    /// `:key=value[:key=value]`, e.g. `jpeg:q=50` or `gblur:sigma=1:k=5`.
    /// Colon-separated so a comma can keep separating whole specs in list
    /// flags and CSV columns. Omitted parameters take the default severities.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let (head, rest) = match t.split_once(':') {
            Some((h, r)) => (h, Some(r)),
            None => (t, None),
        };
        let mut params = std::collections::BTreeMap::new();
        if let Some(rest) = rest {
            for kv in rest.split(':') {
                let (k, v) = kv.split_once('=').ok_or_else(|| {
                    Error::InvalidArg(format!("bad distortion parameter {kv:?} in {t:?}"))
                })?;
                params.insert(k.trim().to_string(), v.trim().to_string());
            }
        }
        let num = |params: &std::collections::BTreeMap<String, String>, k: &str, d: f64| -> Result<f64> {
            match params.get(k) {
                None => Ok(d),
                Some(v) => v
                    .parse::<f64>()
                    .map_err(|_| Error::InvalidArg(format!("bad number {v:?} for {k} in {t:?}"))),
            }
        };
        use DistortionKind::*;
        let kind = match head {
            "identity" => Identity,
            "jpeg" => JpegTest {
                quality: num(&params, "q", 50.0)? as u8,
            },
            "resize" => Resize {
                scale: num(&params, "s", 0.5)?,
            },
            "gblur" => GaussianBlur {
                sigma: num(&params, "sigma", 1.0)?,
                kernel: num(&params, "k", 5.0)? as usize,
            },
            "median" => MedianBlur {
                kernel: num(&params, "k", 3.0)? as usize,
            },
            "dropout" => Dropout {
                p: num(&params, "p", 0.3)?,
            },
            "saltpepper" => SaltPepper {
                p: num(&params, "p", 0.01)?,
            },
            "gnoise" => GaussianNoise {
                sigma: num(&params, "sigma", 5.0)?,
            },
            "scramble" => SubbandScramble {
                region: num(&params, "region", 1.0)?,
            },
            "regen" => RegionRegenerate {
                region: num(&params, "region", 1.0)?,
            },
            other => {
                return Err(Error::InvalidArg(format!(
                    "unknown distortion {other:?} (expected identity, jpeg, resize, gblur, \
                     median, dropout, saltpepper, gnoise, scramble, or regen)"
                )))
            }
        };
        let spec = DistortionSpec::new(kind);
        spec.validate()?;
        Ok(spec)
    }
}

/// The benign distortions at default severities.
pub fn common_pool() -> Vec<DistortionSpec> {
    use DistortionKind::*;
    [
        Identity,
        JpegTest { quality: 50 },
        Resize { scale: 0.5 },
        GaussianBlur {
            sigma: 1.0,
            kernel: 5,
        },
        MedianBlur { kernel: 3 },
        Dropout { p: 0.3 },
        SaltPepper { p: 0.01 },
        GaussianNoise { sigma: 5.0 },
    ]
    .into_iter()
    .map(DistortionSpec::new)
    .collect()
}

/// The malicious surrogates at default severities.
///
/// Both default to the full frame. The carrier supports spread uniformly over
/// each sub-band, so a surrogate confined to the central 60%x60% leaves ~64%
/// of every bit's support untouched and the detector still reads the mark;
/// tampering must cover the support for the semi-robust channel to break as
/// intended. Narrower regions remain expressible via the `region` parameter.
pub fn malicious_pool() -> Vec<DistortionSpec> {
    use DistortionKind::*;
    [
        SubbandScramble { region: 1.0 },
        RegionRegenerate { region: 1.0 },
    ]
    .into_iter()
    .map(DistortionSpec::new)
    .collect()
}

pub fn apply(
    img: &ImageBuffer,
    spec: &DistortionSpec,
    original: Option<&ImageBuffer>,
) -> Result<ImageBuffer> {
    spec.validate()?;
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed);
    use DistortionKind::*;
    match spec.kind {
        Identity => Ok(img.clone()),
        JpegTest { quality } => jpeg_roundtrip(img, quality),
        Resize { scale } => resize_down_up(img, scale),
        GaussianBlur { sigma, kernel } => Ok(blur_image(img, sigma, kernel)),
        MedianBlur { kernel } => Ok(median_image(img, kernel)),
        Dropout { p } => {
            let orig = original.ok_or_else(|| {
                Error::InvalidArg("dropout needs the original image as replacement source".into())
            })?;
            if orig.width() != img.width() || orig.height() != img.height() {
                return Err(Error::DimensionMismatch(format!(
                    "dropout original {}x{} vs image {}x{}",
                    orig.width(),
                    orig.height(),
                    img.width(),
                    img.height()
                )));
            }
            let mut out = img.clone();
            for row in 0..img.height() {
                for col in 0..img.width() {
                    if rng.gen::<f64>() < p {
                        out.set(row, col, orig.get(row, col));
                    }
                }
            }
            Ok(out)
        }
        SaltPepper { p } => {
            let mut out = img.clone();
            for row in 0..img.height() {
                for col in 0..img.width() {
                    if rng.gen::<f64>() < p {
                        let v = if rng.gen::<bool>() { 255 } else { 0 };
                        out.set(row, col, [v, v, v]);
                    }
                }
            }
            Ok(out)
        }
        GaussianNoise { sigma } => {
            let normal = Normal::new(0.0, sigma).expect("validated sigma");
            let mut out = img.clone();
            for row in 0..img.height() {
                for col in 0..img.width() {
                    let mut px = out.get(row, col);
                    for ch in &mut px {
                        let v = *ch as f64 + normal.sample(&mut rng);
                        *ch = v.round().clamp(0.0, 255.0) as u8;
                    }
                    out.set(row, col, px);
                }
            }
            Ok(out)
        }
        SubbandScramble { region } => scramble_subbands(img, region, &mut rng),
        RegionRegenerate { region } => Ok(regenerate_region(img, region, &mut rng)),
    }
}

/// Uniform seeded sampler over a fixed spec list.
pub struct Pool {
    specs: Vec<DistortionSpec>,
    rng: ChaCha20Rng,
}

impl Pool {
    pub fn new(specs: Vec<DistortionSpec>, seed: u64) -> Result<Self> {
        if specs.is_empty() {
            return Err(Error::InvalidArg("empty distortion pool".into()));
        }
        for s in &specs {
            s.validate()?;
        }
        Ok(Pool {
            specs,
            rng: ChaCha20Rng::seed_from_u64(seed),
        })
    }

    pub fn specs(&self) -> &[DistortionSpec] {
        &self.specs
    }

    pub fn draw(&mut self) -> DistortionSpec {
        let i = self.rng.gen_range(0..self.specs.len());
        self.specs[i]
    }
}

fn to_rgb_image(img: &ImageBuffer) -> image::RgbImage {
    image::RgbImage::from_fn(img.width() as u32, img.height() as u32, |x, y| {
        image::Rgb(img.get(y as usize, x as usize))
    })
}

fn from_rgb_image(r: &image::RgbImage) -> ImageBuffer {
    ImageBuffer::from_fn(r.width() as usize, r.height() as usize, |row, col| {
        r.get_pixel(col as u32, row as u32).0
    })
}

fn jpeg_roundtrip(img: &ImageBuffer, quality: u8) -> Result<ImageBuffer> {
    // always 4:2:0, regardless of quality
    let mut bytes = Vec::new();
    let mut enc = jpeg_encoder::Encoder::new(&mut bytes, quality);
    enc.set_sampling_factor(jpeg_encoder::SamplingFactor::F_2_2);
    let raw: Vec<u8> = img.pixels().iter().flatten().copied().collect();
    enc.encode(
        &raw,
        img.width() as u16,
        img.height() as u16,
        jpeg_encoder::ColorType::Rgb,
    )
    .map_err(|e| Error::Image(format!("jpeg encode: {e}")))?;
    let back = image::load_from_memory_with_format(&bytes, image::ImageFormat::Jpeg)
        .map_err(|e| Error::Image(format!("jpeg decode: {e}")))?
        .to_rgb8();
    Ok(from_rgb_image(&back))
}

fn resize_down_up(img: &ImageBuffer, scale: f64) -> Result<ImageBuffer> {
    let (w, h) = (img.width() as u32, img.height() as u32);
    let dw = ((w as f64 * scale).floor() as u32).max(1);
    let dh = ((h as f64 * scale).floor() as u32).max(1);
    let rgb = to_rgb_image(img);
    let small = image::imageops::resize(&rgb, dw, dh, image::imageops::FilterType::Triangle);
    let back = image::imageops::resize(&small, w, h, image::imageops::FilterType::Triangle);
    Ok(from_rgb_image(&back))
}

/// Mirror an out-of-range index back into [0, n): reflection without edge
/// repetition ([c b a | a b c] style).
fn mirror(i: isize, n: usize) -> usize {
    let n = n as isize;
    let mut i = i;
    loop {
        if i < 0 {
            i = -i - 1;
        } else if i >= n {
            i = 2 * n - i - 1;
        } else {
            return i as usize;
        }
    }
}

fn gaussian_kernel(sigma: f64, k: usize) -> Vec<f64> {
    let rad = (k / 2) as isize;
    let mut w: Vec<f64> = (-rad..=rad)
        .map(|i| (-((i * i) as f64) / (2.0 * sigma * sigma)).exp())
        .collect();
    let s: f64 = w.iter().sum();
    for v in &mut w {
        *v /= s;
    }
    w
}

/// Separable Gaussian blur of one plane with mirrored borders.
pub(crate) fn blur_plane(p: &Plane, sigma: f64, k: usize) -> Plane {
    let w = gaussian_kernel(sigma, k);
    let rad = (k / 2) as isize;
    let (rows, cols) = (p.rows(), p.cols());
    let mut tmp = Plane::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            let mut acc = 0.0;
            for (j, wj) in w.iter().enumerate() {
                acc += wj * p.get(r, mirror(c as isize + j as isize - rad, cols));
            }
            tmp.set(r, c, acc);
        }
    }
    let mut out = Plane::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            let mut acc = 0.0;
            for (j, wj) in w.iter().enumerate() {
                acc += wj * tmp.get(mirror(r as isize + j as isize - rad, rows), c);
            }
            out.set(r, c, acc);
        }
    }
    out
}

fn blur_image(img: &ImageBuffer, sigma: f64, k: usize) -> ImageBuffer {
    let planes = img.to_planes();
    let blurred: Vec<Plane> = planes.iter().map(|p| blur_plane(p, sigma, k)).collect();
    ImageBuffer::from_fn(img.width(), img.height(), |r, c| {
        let q = |p: &Plane| p.get(r, c).round().clamp(0.0, 255.0) as u8;
        [q(&blurred[0]), q(&blurred[1]), q(&blurred[2])]
    })
}

fn median_image(img: &ImageBuffer, k: usize) -> ImageBuffer {
    let rad = (k / 2) as isize;
    let mut window = vec![0u8; k * k];
    ImageBuffer::from_fn(img.width(), img.height(), |r, c| {
        let mut px = [0u8; 3];
        for (ch, out) in px.iter_mut().enumerate() {
            let mut n = 0;
            for dr in -rad..=rad {
                for dc in -rad..=rad {
                    let rr = mirror(r as isize + dr, img.height());
                    let cc = mirror(c as isize + dc, img.width());
                    window[n] = img.get(rr, cc)[ch];
                    n += 1;
                }
            }
            window.sort_unstable();
            *out = window[k * k / 2];
        }
        px
    })
}

/// Central `frac`×`frac` rectangle of an r×c grid as (r0, r1, c0, c1),
/// half-open.
fn central_region(rows: usize, cols: usize, frac: f64) -> (usize, usize, usize, usize) {
    let rh = ((rows as f64 * frac).round() as usize).clamp(1, rows);
    let cw = ((cols as f64 * frac).round() as usize).clamp(1, cols);
    let r0 = (rows - rh) / 2;
    let c0 = (cols - cw) / 2;
    (r0, r0 + rh, c0, c0 + cw)
}

fn scramble_subbands(img: &ImageBuffer, region: f64, rng: &mut ChaCha20Rng) -> Result<ImageBuffer> {
    let yuv = rgb_to_yuv(img);
    let mut dec = dtcwt::forward(&yuv.u, SCRAMBLE_LEVEL)?;
    for s in SCRAMBLE_SUBBANDS {
        // flipping one band of a conjugate quad pair alone is
        // synthesis-inconsistent (the round trip erases rather than negates
        // it), so the quad mate flips with the same sign field
        let mate = 7 - s;
        let (rows, cols) = {
            let band = &dec.levels[SCRAMBLE_LEVEL - 1][s - 1];
            (band.rows(), band.cols())
        };
        let (r0, r1, c0, c1) = central_region(rows, cols, region);
        for br in (r0..r1).step_by(SCRAMBLE_BLOCK) {
            for bc in (c0..c1).step_by(SCRAMBLE_BLOCK) {
                if rng.gen::<f64>() >= SCRAMBLE_FLIP_P {
                    continue;
                }
                for b in [s, mate] {
                    let band = &mut dec.levels[SCRAMBLE_LEVEL - 1][b - 1];
                    for r in br..(br + SCRAMBLE_BLOCK).min(r1) {
                        for c in bc..(bc + SCRAMBLE_BLOCK).min(c1) {
                            let idx = r * band.re.cols() + c;
                            band.re.data_mut()[idx] = -band.re.data()[idx];
                            band.im.data_mut()[idx] = -band.im.data()[idx];
                        }
                    }
                }
            }
        }
    }
    let u = dtcwt::inverse(&dec)?;
    Ok(yuv_to_rgb(&YuvImage {
        y: yuv.y,
        u,
        v: yuv.v,
    }))
}

fn regenerate_region(img: &ImageBuffer, region: f64, rng: &mut ChaCha20Rng) -> ImageBuffer {
    let planes = img.to_planes();
    let blurred: Vec<Plane> = planes
        .iter()
        .map(|p| blur_plane(p, REGEN_SIGMA, REGEN_KERNEL))
        .collect();
    let normal = Normal::new(0.0, REGEN_NOISE_SIGMA).expect("fixed sigma");
    let (r0, r1, c0, c1) = central_region(img.height(), img.width(), region);
    let mut out = img.clone();
    for r in r0..r1 {
        for c in c0..c1 {
            let mut px = [0u8; 3];
            for (ch, out_ch) in px.iter_mut().enumerate() {
                let v = blurred[ch].get(r, c) + normal.sample(rng);
                *out_ch = v.round().clamp(0.0, 255.0) as u8;
            }
            out.set(r, c, px);
        }
    }
    out
}

//! 8-bit RGB rasters, BT.601 YUV conversion, PSNR/SSIM, and PNG I/O.
//!
//! Color constants live here and nowhere else. The YUV split is BT.601
//! full range with zero-centered chroma (U,V ≈ [-128,128]) so additive
//! chroma perturbations are signed-symmetric around neutral gray.

use crate::error::{Error, Result};
use crate::plane::Plane;
use std::path::Path;

pub const KR: f64 = 0.299;
pub const KG: f64 = 0.587;
pub const KB: f64 = 0.114;

#[derive(Clone, PartialEq, Eq)]
pub struct ImageBuffer {
    width: usize,
    height: usize,
    pixels: Vec<[u8; 3]>,
}

// pixel dumps are useless in assertion output, so show dims only
impl std::fmt::Debug for ImageBuffer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ImageBuffer({}x{})", self.width, self.height)
    }
}

/// Round half-up, clamp to the 8-bit range.
fn quant(v: f64) -> u8 {
    v.round().clamp(0.0, 255.0) as u8
}

impl ImageBuffer {
    pub fn new(width: usize, height: usize) -> Self {
        assert!(width > 0 && height > 0, "empty image");
        ImageBuffer {
            width,
            height,
            pixels: vec![[0; 3]; width * height],
        }
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> [u8; 3]) -> Self {
        let mut img = ImageBuffer::new(width, height);
        for r in 0..height {
            for c in 0..width {
                img.pixels[r * width + c] = f(r, c);
            }
        }
        img
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn get(&self, row: usize, col: usize) -> [u8; 3] {
        self.pixels[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, px: [u8; 3]) {
        self.pixels[row * self.width + col] = px;
    }

    pub fn pixels(&self) -> &[[u8; 3]] {
        &self.pixels
    }

    /// The three channels as real planes (for filtering-style distortions).
    pub fn to_planes(&self) -> [Plane; 3] {
        let mk = |ch: usize| {
            Plane::from_fn(self.height, self.width, |r, c| self.get(r, c)[ch] as f64)
        };
        [mk(0), mk(1), mk(2)]
    }

    /// Quantize three real channel planes back to 8-bit RGB.
    pub fn from_planes(r: &Plane, g: &Plane, b: &Plane) -> Result<Self> {
        if r.rows() != g.rows()
            || r.rows() != b.rows()
            || r.cols() != g.cols()
            || r.cols() != b.cols()
        {
            return Err(Error::DimensionMismatch(
                "channel planes differ in size".into(),
            ));
        }
        Ok(ImageBuffer::from_fn(r.cols(), r.rows(), |row, col| {
            [
                quant(r.get(row, col)),
                quant(g.get(row, col)),
                quant(b.get(row, col)),
            ]
        }))
    }

    /// Grayscale visualization of a real plane (values quantized per pixel).
    pub fn from_plane_gray(p: &Plane) -> Self {
        ImageBuffer::from_fn(p.cols(), p.rows(), |r, c| {
            let v = quant(p.get(r, c));
            [v, v, v]
        })
    }

    /// BT.601 luma as a real plane.
    pub fn luma(&self) -> Plane {
        Plane::from_fn(self.height, self.width, |r, c| {
            let [pr, pg, pb] = self.get(r, c);
            KR * pr as f64 + KG * pg as f64 + KB * pb as f64
        })
    }
}

pub struct YuvImage {
    pub y: Plane,
    pub u: Plane,
    pub v: Plane,
}

impl YuvImage {
    pub fn width(&self) -> usize {
        self.y.cols()
    }

    pub fn height(&self) -> usize {
        self.y.rows()
    }
}

pub fn rgb_to_yuv(img: &ImageBuffer) -> YuvImage {
    let (h, w) = (img.height(), img.width());
    let mut y = Plane::zeros(h, w);
    let mut u = Plane::zeros(h, w);
    let mut v = Plane::zeros(h, w);
    for r in 0..h {
        for c in 0..w {
            let [pr, pg, pb] = img.get(r, c);
            let (pr, pg, pb) = (pr as f64, pg as f64, pb as f64);
            let yy = KR * pr + KG * pg + KB * pb;
            y.set(r, c, yy);
            u.set(r, c, (pb - yy) / (2.0 * (1.0 - KB)));
            v.set(r, c, (pr - yy) / (2.0 * (1.0 - KR)));
        }
    }
    YuvImage { y, u, v }
}

pub fn yuv_to_rgb(yuv: &YuvImage) -> ImageBuffer {
    ImageBuffer::from_fn(yuv.width(), yuv.height(), |r, c| {
        let y = yuv.y.get(r, c);
        let u = yuv.u.get(r, c);
        let v = yuv.v.get(r, c);
        let pr = y + 2.0 * (1.0 - KR) * v;
        let pb = y + 2.0 * (1.0 - KB) * u;
        let pg = (y - KR * pr - KB * pb) / KG;
        [quant(pr), quant(pg), quant(pb)]
    })
}

fn check_dims(a: &ImageBuffer, b: &ImageBuffer) -> Result<()> {
    if a.width() != b.width() || a.height() != b.height() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.width(),
            a.height(),
            b.width(),
            b.height()
        )));
    }
    Ok(())
}

/// Peak signal-to-noise ratio in dB over all RGB channels jointly.
/// Identical images return `f64::INFINITY`.
pub fn psnr(a: &ImageBuffer, b: &ImageBuffer) -> Result<f64> {
    check_dims(a, b)?;
    let mut acc: u64 = 0;
    for (pa, pb) in a.pixels().iter().zip(b.pixels()) {
        for ch in 0..3 {
            let d = pa[ch] as i64 - pb[ch] as i64;
            acc += (d * d) as u64;
        }
    }
    if acc == 0 {
        return Ok(f64::INFINITY);
    }
    let mse = acc as f64 / (a.pixels().len() * 3) as f64;
    Ok(10.0 * (255.0 * 255.0 / mse).log10())
}

const SSIM_WIN: usize = 11;
const SSIM_SIGMA: f64 = 1.5;

fn ssim_kernel() -> [f64; SSIM_WIN] {
    let mut k = [0.0; SSIM_WIN];
    let mut sum = 0.0;
    for (i, kv) in k.iter_mut().enumerate() {
        let x = i as f64 - (SSIM_WIN as f64 - 1.0) / 2.0;
        *kv = (-0.5 * (x / SSIM_SIGMA).powi(2)).exp();
        sum += *kv;
    }
    for kv in &mut k {
        *kv /= sum;
    }
    k
}

/// Separable Gaussian blur; only the interior (where the full window fits)
/// is meaningful, so the caller crops `SSIM_WIN/2` on each side.
fn blur(x: &Plane, k: &[f64; SSIM_WIN]) -> Plane {
    let (rows, cols) = (x.rows(), x.cols());
    let rad = SSIM_WIN / 2;
    let mut tmp = Plane::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            let mut acc = 0.0;
            for (t, kv) in k.iter().enumerate() {
                let cc = c as i64 + t as i64 - rad as i64;
                if (0..cols as i64).contains(&cc) {
                    acc += kv * x.get(r, cc as usize);
                }
            }
            tmp.set(r, c, acc);
        }
    }
    let mut out = Plane::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            let mut acc = 0.0;
            for (t, kv) in k.iter().enumerate() {
                let rr = r as i64 + t as i64 - rad as i64;
                if (0..rows as i64).contains(&rr) {
                    acc += kv * tmp.get(rr as usize, c);
                }
            }
            out.set(r, c, acc);
        }
    }
    out
}

/// Single-scale SSIM on BT.601 luma: 11×11 Gaussian window (σ = 1.5),
/// C1=(0.01·255)², C2=(0.03·255)², weighted population moments, mean over
/// the window positions where the full window fits.
pub fn ssim(a: &ImageBuffer, b: &ImageBuffer) -> Result<f64> {
    check_dims(a, b)?;
    if a.width() < SSIM_WIN || a.height() < SSIM_WIN {
        return Err(Error::DimensionMismatch(format!(
            "image {}x{} smaller than the {}x{} window",
            a.width(),
            a.height(),
            SSIM_WIN,
            SSIM_WIN
        )));
    }
    let x = a.luma();
    let y = b.luma();
    let k = ssim_kernel();
    let mx = blur(&x, &k);
    let my = blur(&y, &k);
    let mxx = blur(&x.zip(&x, |p, q| p * q), &k);
    let myy = blur(&y.zip(&y, |p, q| p * q), &k);
    let mxy = blur(&x.zip(&y, |p, q| p * q), &k);

    let c1 = (0.01 * 255.0) * (0.01 * 255.0);
    let c2 = (0.03 * 255.0) * (0.03 * 255.0);
    let rad = SSIM_WIN / 2;
    let mut acc = 0.0;
    let mut count = 0usize;
    for r in rad..x.rows() - rad {
        for c in rad..x.cols() - rad {
            let (ux, uy) = (mx.get(r, c), my.get(r, c));
            let vx = mxx.get(r, c) - ux * ux;
            let vy = myy.get(r, c) - uy * uy;
            let cxy = mxy.get(r, c) - ux * uy;
            let s = ((2.0 * ux * uy + c1) * (2.0 * cxy + c2))
                / ((ux * ux + uy * uy + c1) * (vx + vy + c2));
            acc += s;
            count += 1;
        }
    }
    Ok(acc / count as f64)
}

pub fn load_png(path: &Path) -> Result<ImageBuffer> {
    let reader = image::ImageReader::open(path).map_err(|e| Error::io(path, e))?;
    let img = reader
        .decode()
        .map_err(|e| Error::Image(format!("{}: {e}", path.display())))?;
    use image::DynamicImage::*;
    let rgb = match img {
        ImageRgb8(im) => im,
        ImageRgba8(im) => image::DynamicImage::ImageRgba8(im).to_rgb8(),
        ImageLuma8(im) => image::DynamicImage::ImageLuma8(im).to_rgb8(),
        ImageLumaA8(im) => image::DynamicImage::ImageLumaA8(im).to_rgb8(),
        other => {
            return Err(Error::Image(format!(
                "{}: unsupported pixel format {:?} (8-bit RGB/RGBA/gray only)",
                path.display(),
                other.color()
            )))
        }
    };
    let (w, h) = (rgb.width() as usize, rgb.height() as usize);
    Ok(ImageBuffer::from_fn(w, h, |r, c| {
        let p = rgb.get_pixel(c as u32, r as u32);
        [p.0[0], p.0[1], p.0[2]]
    }))
}

pub fn save_png(img: &ImageBuffer, path: &Path) -> Result<()> {
    let mut raw = Vec::with_capacity(img.pixels().len() * 3);
    for px in img.pixels() {
        raw.extend_from_slice(px);
    }
    let out = image::RgbImage::from_raw(img.width() as u32, img.height() as u32, raw)
        .expect("raw buffer matches dimensions");
    out.save_with_format(path, image::ImageFormat::Png)
        .map_err(|e| Error::Image(format!("{}: {e}", path.display())))
}

//! Blind watermark extraction.
//!
//! Both decoders correlate sub-band coefficients against the key-derived
//! carriers and take the sign of the aggregate per-bit score. The robust
//! tracer reads the embedded sub-bands {1,3} plus their quad-mate partners
//! {6,4}, which receive a deterministic echo of the embedding through the
//! reconstruct/decompose round trip; the deliberately fragile detector
//! reads only {1,3}, so destroying those bands erases its message.

use crate::carrier::{derive_carriers, CarrierSet, Key, Message};
use crate::dtcwt;
use crate::error::{Error, Result};
use crate::plane::{ComplexPlane, Plane};
use crate::raster::{rgb_to_yuv, ImageBuffer};

#[derive(Debug, Clone)]
pub struct DecodeConfig {
    pub tracer_subbands: Vec<usize>,
    pub detector_subbands: Vec<usize>,
    /// Sub-bands that physically carry carriers (the embedder's set).
    pub embed_subbands: Vec<usize>,
    pub level: usize,
    pub message_length: usize,
    /// BER above this fraction classifies the image as forged.
    pub decision_threshold: f64,
}

impl Default for DecodeConfig {
    fn default() -> Self {
        DecodeConfig {
            tracer_subbands: vec![1, 3, 4, 6],
            detector_subbands: vec![1, 3],
            embed_subbands: vec![1, 3],
            level: 2,
            message_length: 30,
            decision_threshold: 0.25,
        }
    }
}

impl DecodeConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.decision_threshold > 0.0 && self.decision_threshold < 0.5) {
            return Err(Error::Config(format!(
                "decision threshold must lie in (0, 0.5), got {}",
                self.decision_threshold
            )));
        }
        if !(1..=2).contains(&self.level) {
            return Err(Error::Config(format!("level must be 1 or 2, got {}", self.level)));
        }
        for set in [
            &self.tracer_subbands,
            &self.detector_subbands,
            &self.embed_subbands,
        ] {
            if set.is_empty() || set.iter().any(|s| !(1..=6).contains(s)) {
                return Err(Error::Config(format!(
                    "sub-band sets must be non-empty subsets of 1..6, got {set:?}"
                )));
            }
        }
        if self.message_length == 0 {
            return Err(Error::Config("message length must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct ExtractionResult {
    pub bits: Message,
    pub soft_scores: Vec<f64>,
}

impl ExtractionResult {
    pub fn ber_vs(&self, reference: &Message) -> Result<f64> {
        if reference.len() != self.bits.len() {
            return Err(Error::DimensionMismatch(format!(
                "extracted {} bits, reference has {}",
                self.bits.len(),
                reference.len()
            )));
        }
        let wrong = self
            .bits
            .bits()
            .iter()
            .zip(reference.bits())
            .filter(|(a, b)| a != b)
            .count();
        Ok(wrong as f64 / reference.len() as f64)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Authentic,
    Forged,
}

/// Mean of (Re + Im)·carrier over the carrier's support (its nonzero
/// entries). A sub-band that equals +carrier in both parts scores +2.
pub fn correlate_bit(subband: &ComplexPlane, carrier: &Plane) -> Result<f64> {
    if subband.rows() != carrier.rows() || subband.cols() != carrier.cols() {
        return Err(Error::DimensionMismatch(format!(
            "sub-band {}x{} vs carrier {}x{}",
            subband.rows(),
            subband.cols(),
            carrier.rows(),
            carrier.cols()
        )));
    }
    let mut acc = 0.0;
    let mut n = 0usize;
    for (idx, &c) in carrier.data().iter().enumerate() {
        if c != 0.0 {
            acc += (subband.re.data()[idx] + subband.im.data()[idx]) * c;
            n += 1;
        }
    }
    if n == 0 {
        return Ok(0.0);
    }
    Ok(acc / n as f64)
}

/// The echo of one embedded sub-band in its quad-mate, computed by pushing
/// the all-bits-positive carrier pattern through reconstruct → decompose.
/// Depends only on (key, message length, geometry), never on the image.
struct Replica {
    /// Propagated complex pattern in the mate band.
    pattern: ComplexPlane,
    /// Mean squared (Re+Im) of the pattern over the support cells — the
    /// propagation strength. Zero means nothing reached the mate band.
    kappa: f64,
}

/// Combining weight of mate-band scores relative to direct-band scores.
/// With correlate_bit's support-size normalization, a mate score's signal
/// mean and noise variance both scale with the propagation strength κ, so
/// inverse-variance combining gives a constant: signal/variance is
/// (κ·α·mask)/(κ·v) = α·mask/v against the direct bands' 2α·mask/v.
const MATE_WEIGHT: f64 = 0.5;

fn quad_mate(s: usize) -> usize {
    7 - s
}

fn propagate_replica(
    carriers: &CarrierSet,
    src_band: usize,
    dst_band: usize,
    rows: usize,
    cols: usize,
    level: usize,
) -> Result<Replica> {
    let mut dec = dtcwt::forward(&Plane::zeros(rows, cols), level)?;
    let dense = carriers.dense_all_positive();
    let z = ComplexPlane {
        re: dense.clone(),
        im: dense,
    };
    dec.levels[level - 1][src_band - 1] = z;
    let pixels = dtcwt::inverse(&dec)?;
    let rt = dtcwt::forward(&pixels, level)?;
    let pattern = dtcwt::subband(&rt, level, dst_band)?.clone();

    let mut sum_sq = 0.0;
    let mut n = 0usize;
    for c in &carriers.per_bit {
        for &(cell, _) in &c.support {
            let v = pattern.re.data()[cell as usize] + pattern.im.data()[cell as usize];
            sum_sq += v * v;
            n += 1;
        }
    }
    let kappa = sum_sq / n.max(1) as f64;
    Ok(Replica { pattern, kappa })
}

fn check_image_dims(img: &ImageBuffer) -> Result<()> {
    let (w, h) = (img.width(), img.height());
    if w < 64 || h < 64 || w % 2 != 0 || h % 2 != 0 {
        return Err(Error::BadPlaneSize(h, w));
    }
    Ok(())
}

fn decode_with_bands(
    img: &ImageBuffer,
    key: Key,
    cfg: &DecodeConfig,
    bands: &[usize],
) -> Result<ExtractionResult> {
    cfg.validate()?;
    check_image_dims(img)?;
    let yuv = rgb_to_yuv(img);
    let dec = dtcwt::forward(&yuv.u, cfg.level)?;
    let l = cfg.message_length;

    let mut scores = vec![0.0; l];
    for &s in bands {
        let band = dtcwt::subband(&dec, cfg.level, s)?;
        let shape = (band.rows(), band.cols());
        if cfg.embed_subbands.contains(&s) {
            // direct band: correlate with the band's own carriers
            let carriers = derive_carriers(key, l, shape, s)?;
            for i in 0..l {
                scores[i] += correlate_bit(band, &carriers.dense(i))?;
            }
        } else {
            // mate band: correlate with the propagated echo of the source
            // band's carriers
            let src = quad_mate(s);
            if !cfg.embed_subbands.contains(&src) {
                continue;
            }
            let carriers = derive_carriers(key, l, shape, src)?;
            let replica = propagate_replica(&carriers, src, s, yuv.height(), yuv.width(), cfg.level)?;
            if replica.kappa < 1e-12 {
                continue;
            }
            for (i, c) in carriers.per_bit.iter().enumerate() {
                let mut r = Plane::zeros(shape.0, shape.1);
                for &(cell, _) in &c.support {
                    let cell = cell as usize;
                    let v = replica.pattern.re.data()[cell] + replica.pattern.im.data()[cell];
                    r.data_mut()[cell] = v;
                }
                scores[i] += MATE_WEIGHT * correlate_bit(band, &r)?;
            }
        }
    }

    let bits = Message::from_bits(scores.iter().map(|s| u8::from(*s > 0.0)).collect())?;
    Ok(ExtractionResult {
        bits,
        soft_scores: scores,
    })
}

/// Robust decoder: reads the embedded sub-bands and their quad-mates.
pub fn trace(img: &ImageBuffer, key: Key, cfg: &DecodeConfig) -> Result<ExtractionResult> {
    decode_with_bands(img, key, cfg, &cfg.tracer_subbands)
}

/// Fragile decoder: reads only the embedded sub-bands, so targeted damage
/// there scrambles its output.
pub fn detect(img: &ImageBuffer, key: Key, cfg: &DecodeConfig) -> Result<ExtractionResult> {
    decode_with_bands(img, key, cfg, &cfg.detector_subbands)
}

/// Forged iff the detector's BER against the reference exceeds τ
/// (strictly; BER = τ still counts as authentic).
pub fn decide(det: &ExtractionResult, reference: &Message, tau: f64) -> Result<Verdict> {
    let ber = det.ber_vs(reference)?;
    Ok(if ber > tau {
        Verdict::Forged
    } else {
        Verdict::Authentic
    })
}

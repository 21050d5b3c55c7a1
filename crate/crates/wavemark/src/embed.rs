//! Additive spread-spectrum embedding in the chroma channel's wavelet
//! sub-bands: U' = U + α·M·Σ_i σ_i·C_i on both coefficient parts.

use crate::carrier::{derive_carriers, CarrierSet, Key, Message};
use crate::dtcwt;
use crate::error::{Error, Result};
use crate::mask::{attention_mask, AttentionMask};
use crate::plane::{ComplexPlane, Plane};
use crate::raster::{rgb_to_yuv, yuv_to_rgb, ImageBuffer, YuvImage};

/// Default embedding strength, calibrated once on the 50-image synthetic
/// corpus (128×128): the highest α whose corpus-mean PSNR stays ≥ 40 dB.
/// At this strength the clean round trip is exact, every non-JPEG common
/// distortion decodes with corpus-mean BER ≤ 0.1%, and fewer than one pixel
/// per image clamps. 4:2:0 JPEG at Q50 still destroys the chroma band the
/// mark lives in at any imperceptible strength; see the bench report.
pub const DEFAULT_ALPHA: f64 = 26.0;

/// Flat images would otherwise zero the mask and silently drop capacity,
/// so the effective mask never goes below this.
pub const MASK_FLOOR: f64 = 0.1;

#[derive(Debug, Clone)]
pub struct EmbedConfig {
    pub alpha: f64,
    pub level: usize,
    pub embed_subbands: Vec<usize>,
    pub message_length: usize,
    pub mask_enabled: bool,
}

impl Default for EmbedConfig {
    fn default() -> Self {
        EmbedConfig {
            alpha: DEFAULT_ALPHA,
            level: 2,
            embed_subbands: vec![1, 3],
            message_length: 30,
            mask_enabled: true,
        }
    }
}

impl EmbedConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha >= 0.0) {
            return Err(Error::Config(format!("alpha must be >= 0, got {}", self.alpha)));
        }
        if !(1..=2).contains(&self.level) {
            return Err(Error::Config(format!("level must be 1 or 2, got {}", self.level)));
        }
        if self.embed_subbands.is_empty()
            || self.embed_subbands.iter().any(|s| !(1..=6).contains(s))
        {
            return Err(Error::Config(format!(
                "embed sub-bands must be a non-empty subset of 1..6, got {:?}",
                self.embed_subbands
            )));
        }
        if self.message_length == 0 {
            return Err(Error::Config("message length must be positive".into()));
        }
        Ok(())
    }
}

/// Apply the additive rule to one sub-band. Only carrier-support cells
/// change; everything else is returned bit-identical.
pub fn embed_subband(
    u: &ComplexPlane,
    msg: &Message,
    carriers: &CarrierSet,
    m: &AttentionMask,
    alpha: f64,
) -> Result<ComplexPlane> {
    if u.rows() != carriers.rows || u.cols() != carriers.cols {
        return Err(Error::DimensionMismatch(format!(
            "sub-band {}x{} vs carriers {}x{}",
            u.rows(),
            u.cols(),
            carriers.rows,
            carriers.cols
        )));
    }
    if m.m.rows() != u.rows() || m.m.cols() != u.cols() {
        return Err(Error::DimensionMismatch(format!(
            "sub-band {}x{} vs mask {}x{}",
            u.rows(),
            u.cols(),
            m.m.rows(),
            m.m.cols()
        )));
    }
    if msg.len() != carriers.per_bit.len() {
        return Err(Error::DimensionMismatch(format!(
            "message has {} bits, carriers {}",
            msg.len(),
            carriers.per_bit.len()
        )));
    }
    let mut out = u.clone();
    for (i, c) in carriers.per_bit.iter().enumerate() {
        let sigma = msg.sign(i);
        for &(cell, sign) in &c.support {
            let cell = cell as usize;
            let delta = alpha * m.m.data()[cell] * sigma * sign as f64;
            out.re.data_mut()[cell] += delta;
            out.im.data_mut()[cell] += delta;
        }
    }
    Ok(out)
}

/// Mask used for embedding in one sub-band: the texture-energy mask with
/// the floor applied, or all-ones when masking is disabled.
pub fn effective_mask(u: &ComplexPlane, mask_enabled: bool) -> AttentionMask {
    if mask_enabled {
        let m = attention_mask(u);
        AttentionMask {
            m: m.m.map(|v| v.max(MASK_FLOOR)),
        }
    } else {
        AttentionMask {
            m: Plane::from_fn(u.rows(), u.cols(), |_, _| 1.0),
        }
    }
}

fn check_image_dims(img: &ImageBuffer) -> Result<()> {
    let (w, h) = (img.width(), img.height());
    if w < 64 || h < 64 || w % 2 != 0 || h % 2 != 0 {
        return Err(Error::BadPlaneSize(h, w));
    }
    Ok(())
}

/// Full embedding pipeline: split YUV, decompose U, add the modulated
/// carriers to the configured sub-bands, reconstruct, requantize.
pub fn embed_image(
    img: &ImageBuffer,
    msg: &Message,
    key: Key,
    cfg: &EmbedConfig,
) -> Result<ImageBuffer> {
    cfg.validate()?;
    check_image_dims(img)?;
    if msg.len() != cfg.message_length {
        return Err(Error::Config(format!(
            "message has {} bits but the configuration expects {}",
            msg.len(),
            cfg.message_length
        )));
    }
    let yuv = rgb_to_yuv(img);
    let mut dec = dtcwt::forward(&yuv.u, cfg.level)?;
    for &s in &cfg.embed_subbands {
        let band = dtcwt::subband(&dec, cfg.level, s)?;
        let shape = (band.rows(), band.cols());
        let carriers = derive_carriers(key, msg.len(), shape, s)?;
        let m = effective_mask(band, cfg.mask_enabled);
        let embedded = embed_subband(band, msg, &carriers, &m, cfg.alpha)?;
        dec.levels[cfg.level - 1][s - 1] = embedded;
    }
    let u2 = dtcwt::inverse(&dec)?;
    Ok(yuv_to_rgb(&YuvImage {
        y: yuv.y,
        u: u2,
        v: yuv.v,
    }))
}

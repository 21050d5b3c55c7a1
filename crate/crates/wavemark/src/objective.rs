//! Evaluation functionals over the pipeline's artifacts: embedding
//! distortion, tracing/detection fidelity, structural consistency, their
//! weighted total, and the bit error rate.

use crate::carrier::Message;
use crate::error::{Error, Result};
use crate::plane::ComplexPlane;

/// Slope of the logistic that maps raw correlation scores to [0, 1].
/// Chosen so a cleanly decoded image (aggregate score magnitude ≳ 2.3)
/// lands above 0.99.
pub const LOGISTIC_SLOPE: f64 = 2.0;

/// Raw correlation score → (0, 1); zero correlation maps to 0.5.
pub fn soft_to_unit(score: f64) -> f64 {
    1.0 / (1.0 + (-LOGISTIC_SLOPE * score).exp())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossWeights {
    pub gnn: f64,
    pub en: f64,
    pub tr: f64,
    pub de1: f64,
    pub de2: f64,
}

impl Default for LossWeights {
    fn default() -> Self {
        LossWeights {
            gnn: 0.01,
            en: 1.0,
            tr: 10.0,
            de1: 10.0,
            de2: 10.0,
        }
    }
}

impl LossWeights {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("gnn", self.gnn),
            ("en", self.en),
            ("tr", self.tr),
            ("de1", self.de1),
            ("de2", self.de2),
        ] {
            if !(v >= 0.0) {
                return Err(Error::Config(format!("loss weight {name} = {v} must be >= 0")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LossReport {
    pub l_en: f64,
    pub l_tr: f64,
    pub l_de1: f64,
    pub l_de2: f64,
    pub l_gnn: f64,
    pub l_total: f64,
}

impl LossReport {
    pub fn new(l_gnn: f64, l_en: f64, l_tr: f64, l_de1: f64, l_de2: f64, w: &LossWeights) -> Self {
        LossReport {
            l_en,
            l_tr,
            l_de1,
            l_de2,
            l_gnn,
            l_total: total_loss(l_gnn, l_en, l_tr, l_de1, l_de2, w),
        }
    }
}

/// Mean squared difference over the coefficients of paired sub-bands,
/// counting real and imaginary parts separately.
pub fn embedding_loss(u: &[ComplexPlane], u_embedded: &[ComplexPlane]) -> Result<f64> {
    if u.len() != u_embedded.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} sub-bands vs {}",
            u.len(),
            u_embedded.len()
        )));
    }
    let mut acc = 0.0;
    let mut n = 0usize;
    for (a, b) in u.iter().zip(u_embedded) {
        if a.rows() != b.rows() || a.cols() != b.cols() {
            return Err(Error::DimensionMismatch(format!(
                "sub-band {}x{} vs {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        for (x, y) in a.re.data().iter().zip(b.re.data()) {
            acc += (x - y) * (x - y);
        }
        for (x, y) in a.im.data().iter().zip(b.im.data()) {
            acc += (x - y) * (x - y);
        }
        n += 2 * a.rows() * a.cols();
    }
    if n == 0 {
        return Err(Error::InvalidArg("no sub-bands given".into()));
    }
    Ok(acc / n as f64)
}

/// MSE between the {0,1} message bits and the logistic-mapped soft scores.
pub fn tracing_loss(w_o: &Message, soft_scores: &[f64]) -> Result<f64> {
    if w_o.len() != soft_scores.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} bits vs {} scores",
            w_o.len(),
            soft_scores.len()
        )));
    }
    let acc: f64 = w_o
        .bits()
        .iter()
        .zip(soft_scores)
        .map(|(bit, s)| {
            let d = *bit as f64 - soft_to_unit(*s);
            d * d
        })
        .sum();
    Ok(acc / w_o.len() as f64)
}

/// Benign-channel and malicious-channel detection losses.
/// The first is the MSE between the message and the mapped benign scores;
/// the second pushes malicious scores toward zero correlation: MSE between
/// the zero vector and the mapped scores recentered to [-1, 1].
pub fn detection_losses(
    w_o: &Message,
    common_soft: &[f64],
    malicious_soft: &[f64],
) -> Result<(f64, f64)> {
    let l_de1 = tracing_loss(w_o, common_soft)?;
    let l_de2 = malicious_soft
        .iter()
        .map(|s| {
            let centered = 2.0 * soft_to_unit(*s) - 1.0;
            centered * centered
        })
        .sum::<f64>()
        / malicious_soft.len().max(1) as f64;
    Ok((l_de1, l_de2))
}

/// λ-weighted sum of the five components.
pub fn total_loss(l_gnn: f64, l_en: f64, l_tr: f64, l_de1: f64, l_de2: f64, w: &LossWeights) -> f64 {
    w.gnn * l_gnn + w.en * l_en + w.tr * l_tr + w.de1 * l_de1 + w.de2 * l_de2
}

/// Fraction of differing bits.
pub fn ber(w_rec: &Message, w_o: &Message) -> Result<f64> {
    if w_rec.len() != w_o.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} bits vs {}",
            w_rec.len(),
            w_o.len()
        )));
    }
    let wrong = w_rec
        .bits()
        .iter()
        .zip(w_o.bits())
        .filter(|(a, b)| a != b)
        .count();
    Ok(wrong as f64 / w_o.len() as f64)
}

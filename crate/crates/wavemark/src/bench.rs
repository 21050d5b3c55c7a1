//! Corpus benchmark: embed → distort → decode over every image × distortion,
//! emitting a deterministic CSV with per-row metrics and per-distortion
//! `__mean__` aggregate rows.

use crate::carrier::{Key, Message};
use crate::decode::{decide, detect, trace, DecodeConfig, Verdict};
use crate::distort::{apply, common_pool, malicious_pool, DistortionSpec};
use crate::dtcwt;
use crate::embed::{embed_image, EmbedConfig};
use crate::error::{Error, Result};
use crate::graph::consistency;
use crate::objective::{
    detection_losses, embedding_loss, total_loss, tracing_loss, LossWeights,
};
use crate::raster::{load_png, psnr, rgb_to_yuv, ssim, ImageBuffer};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};
use std::path::PathBuf;

/// Environment variable selecting the bench worker count; defaults to the
/// machine's available parallelism.
pub const WORKERS_ENV: &str = "WAVEMARK_WORKERS";

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub corpus_dir: PathBuf,
    pub image_size: usize,
    /// Defaults by image size (128 → 30 bits, 256 → 128 bits).
    pub message_length: Option<usize>,
    pub key: Key,
    pub alpha: f64,
    pub level: usize,
    /// Distortions the detector is expected to survive (drive `l_de1`).
    pub common: Vec<DistortionSpec>,
    /// Manipulations the detector is expected to flag (drive `l_de2`).
    pub malicious: Vec<DistortionSpec>,
    pub output: PathBuf,
    pub seed: u64,
    /// Derive a distinct key per image id (default); `false` shares the key.
    pub per_image_keys: bool,
    pub tau: f64,
    pub workers: Option<usize>,
}

impl BenchConfig {
    pub fn new(corpus_dir: PathBuf, output: PathBuf) -> Self {
        BenchConfig {
            corpus_dir,
            image_size: 128,
            message_length: None,
            key: Key(0),
            alpha: crate::embed::DEFAULT_ALPHA,
            level: 2,
            common: common_pool(),
            malicious: malicious_pool(),
            output,
            seed: 0,
            per_image_keys: true,
            tau: 0.25,
            workers: None,
        }
    }

    pub fn message_length(&self) -> usize {
        self.message_length
            .unwrap_or(if self.image_size >= 256 { 128 } else { 30 })
    }

    /// Benchmark order: the common list, then the malicious list. The flag
    /// says which loss column (`l_de1` vs `l_de2`) the row feeds.
    pub fn schedule(&self) -> Vec<(DistortionSpec, bool)> {
        self.common
            .iter()
            .map(|s| (*s, false))
            .chain(self.malicious.iter().map(|s| (*s, true)))
            .collect()
    }

    /// Split a flat distortion list into (common, malicious) by kind.
    pub fn partition(list: Vec<DistortionSpec>) -> (Vec<DistortionSpec>, Vec<DistortionSpec>) {
        list.into_iter().partition(|s| !s.is_malicious())
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.image_size == 128 || self.image_size == 256) {
            return Err(Error::Config(format!(
                "image size must be 128 or 256, got {}",
                self.image_size
            )));
        }
        if self.common.is_empty() && self.malicious.is_empty() {
            return Err(Error::Config("empty distortion list".into()));
        }
        for d in self.common.iter().chain(&self.malicious) {
            d.validate()?;
        }
        if !(self.tau > 0.0 && self.tau < 0.5) {
            return Err(Error::Config(format!("tau {} outside (0, 0.5)", self.tau)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub image: String,
    pub distortion: String,
    pub tracer_ber: f64,
    pub detector_ber: f64,
    pub psnr: f64,
    pub ssim: f64,
    pub sc_consistency: f64,
    pub l_en: f64,
    pub l_tr: f64,
    pub l_de1: f64,
    pub l_de2: f64,
    pub l_gnn: f64,
    pub l_total: f64,
    /// `authentic`/`forged` on image rows; on `__mean__` rows the fraction
    /// of member rows judged forged, printed as a number.
    pub decision: String,
}

/// Quantize to the CSV's printed precision so aggregate rows are exact
/// means of the values a reader parses back out of the file.
fn q12(v: f64) -> f64 {
    format!("{v:.12}").parse().expect("formatted float")
}

impl BenchRow {
    fn csv_line(&self) -> String {
        format!(
            "{},{},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{:.12},{}",
            self.image,
            self.distortion,
            self.tracer_ber,
            self.detector_ber,
            self.psnr,
            self.ssim,
            self.sc_consistency,
            self.l_en,
            self.l_tr,
            self.l_de1,
            self.l_de2,
            self.l_gnn,
            self.l_total,
            self.decision
        )
    }
}

pub const CSV_HEADER: &str = "image,distortion,tracer_ber,detector_ber,psnr,ssim,\
                              sc_consistency,l_en,l_tr,l_de1,l_de2,l_gnn,l_total,decision";

fn seed64(parts: &[&[u8]]) -> u64 {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_be_bytes());
        h.update(p);
    }
    u64::from_be_bytes(h.finalize()[..8].try_into().expect("sha256 length"))
}

/// Sorted (id, path) pairs for every PNG in the corpus directory.
pub fn corpus_entries(dir: &std::path::Path) -> Result<Vec<(String, PathBuf)>> {
    let mut entries = Vec::new();
    for e in std::fs::read_dir(dir).map_err(|e| Error::io(dir, e))? {
        let e = e.map_err(|e| Error::io(dir, e))?;
        let path = e.path();
        if path.extension().and_then(|s| s.to_str()) == Some("png") {
            let id = path
                .file_stem()
                .and_then(|s| s.to_str())
                .ok_or_else(|| Error::InvalidArg(format!("unreadable file name {path:?}")))?
                .to_string();
            entries.push((id, path));
        }
    }
    if entries.is_empty() {
        return Err(Error::InvalidArg(format!(
            "no .png images in {}",
            dir.display()
        )));
    }
    entries.sort();
    Ok(entries)
}

struct ImageReport {
    rows: Vec<BenchRow>,
}

fn bench_image(
    cfg: &BenchConfig,
    id: &str,
    img: &ImageBuffer,
) -> Result<ImageReport> {
    let key = if cfg.per_image_keys {
        cfg.key.for_image(id)
    } else {
        cfg.key
    };
    let mut msg_rng = ChaCha20Rng::seed_from_u64(seed64(&[
        b"bench-msg",
        &cfg.seed.to_be_bytes(),
        id.as_bytes(),
    ]));
    let msg = Message::random(&mut msg_rng, cfg.message_length());

    let ecfg = EmbedConfig {
        alpha: cfg.alpha,
        level: cfg.level,
        message_length: cfg.message_length(),
        ..EmbedConfig::default()
    };
    let dcfg = DecodeConfig {
        level: cfg.level,
        message_length: cfg.message_length(),
        decision_threshold: cfg.tau,
        ..DecodeConfig::default()
    };
    let w = embed_image(img, &msg, key, &ecfg)?;

    // embed-time metrics, constant across this image's rows
    let psnr_w = q12(psnr(img, &w)?);
    let ssim_w = q12(ssim(img, &w)?);
    let dec_o = dtcwt::forward(&rgb_to_yuv(img).u, ecfg.level)?;
    let dec_w = dtcwt::forward(&rgb_to_yuv(&w).u, ecfg.level)?;
    let bands_o: Vec<_> = ecfg
        .embed_subbands
        .iter()
        .map(|s| dec_o.levels[ecfg.level - 1][s - 1].clone())
        .collect();
    let bands_w: Vec<_> = ecfg
        .embed_subbands
        .iter()
        .map(|s| dec_w.levels[ecfg.level - 1][s - 1].clone())
        .collect();
    let l_en = q12(embedding_loss(&bands_o, &bands_w)?);

    let weights = LossWeights::default();
    let schedule = cfg.schedule();
    let mut rows = Vec::with_capacity(schedule.len());
    for (spec, malicious) in schedule {
        let spec = spec.with_seed(seed64(&[
            b"bench-distort",
            &cfg.seed.to_be_bytes(),
            id.as_bytes(),
            spec.name().as_bytes(),
        ]));
        let noisy = apply(&w, &spec, Some(img))?;
        let tr = trace(&noisy, key, &dcfg)?;
        let de = detect(&noisy, key, &dcfg)?;
        let verdict = decide(&de, &msg, cfg.tau)?;
        let gnn_seed = seed64(&[b"bench-gnn", &cfg.seed.to_be_bytes()]);
        let sc = q12(consistency(img, &noisy, gnn_seed)?);
        let l_tr = q12(tracing_loss(&msg, &tr.soft_scores)?);
        let (d1, d2) = detection_losses(&msg, &de.soft_scores, &de.soft_scores)?;
        let (l_de1, l_de2) = if malicious {
            (0.0, q12(d2))
        } else {
            (q12(d1), 0.0)
        };
        let l_gnn = sc;
        rows.push(BenchRow {
            image: id.to_string(),
            distortion: spec.name(),
            tracer_ber: q12(tr.ber_vs(&msg)?),
            detector_ber: q12(de.ber_vs(&msg)?),
            psnr: psnr_w,
            ssim: ssim_w,
            sc_consistency: sc,
            l_en,
            l_tr,
            l_de1,
            l_de2,
            l_gnn,
            l_total: q12(total_loss(l_gnn, l_en, l_tr, l_de1, l_de2, &weights)),
            decision: if verdict == Verdict::Forged {
                "forged".to_string()
            } else {
                "authentic".to_string()
            },
        });
    }
    Ok(ImageReport { rows })
}

fn mean_row(distortion: &str, members: &[&BenchRow]) -> BenchRow {
    let n = members.len() as f64;
    let mean = |f: fn(&BenchRow) -> f64| members.iter().map(|r| f(r)).sum::<f64>() / n;
    BenchRow {
        image: "__mean__".to_string(),
        distortion: distortion.to_string(),
        tracer_ber: mean(|r| r.tracer_ber),
        detector_ber: mean(|r| r.detector_ber),
        psnr: mean(|r| r.psnr),
        ssim: mean(|r| r.ssim),
        sc_consistency: mean(|r| r.sc_consistency),
        l_en: mean(|r| r.l_en),
        l_tr: mean(|r| r.l_tr),
        l_de1: mean(|r| r.l_de1),
        l_de2: mean(|r| r.l_de2),
        l_gnn: mean(|r| r.l_gnn),
        l_total: mean(|r| r.l_total),
        decision: format!(
            "{:.12}",
            members.iter().filter(|r| r.decision == "forged").count() as f64 / n
        ),
    }
}

/// Run the benchmark and return the CSV text (also written to cfg.output).
pub fn run_bench(cfg: &BenchConfig) -> Result<String> {
    cfg.validate()?;
    let entries = corpus_entries(&cfg.corpus_dir)?;

    let workers = cfg
        .workers
        .or_else(|| {
            std::env::var(WORKERS_ENV)
                .ok()
                .and_then(|v| v.parse::<usize>().ok())
        })
        .filter(|&w| w > 0)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        });
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Config(format!("worker pool: {e}")))?;

    let loaded: Vec<(String, ImageBuffer)> = entries
        .iter()
        .map(|(id, path)| {
            let img = load_png(path)?;
            if img.width() != cfg.image_size || img.height() != cfg.image_size {
                return Err(Error::InvalidArg(format!(
                    "{id}: {}x{} does not match --size {}",
                    img.width(),
                    img.height(),
                    cfg.image_size
                )));
            }
            Ok((id.clone(), img))
        })
        .collect::<Result<_>>()?;

    let reports: Vec<ImageReport> = pool.install(|| {
        loaded
            .par_iter()
            .map(|(id, img)| bench_image(cfg, id, img))
            .collect::<Result<_>>()
    })?;

    // group rows by distortion in schedule order, append a mean row per group
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for (d_idx, (spec, _)) in cfg.schedule().iter().enumerate() {
        let members: Vec<&BenchRow> = reports.iter().map(|r| &r.rows[d_idx]).collect();
        for row in &members {
            out.push_str(&row.csv_line());
            out.push('\n');
        }
        out.push_str(&mean_row(&spec.name(), &members).csv_line());
        out.push('\n');
    }

    if let Some(parent) = cfg.output.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
        }
    }
    std::fs::write(&cfg.output, &out).map_err(|e| Error::io(&cfg.output, e))?;
    Ok(out)
}

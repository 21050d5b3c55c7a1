//! Command-line frontend: single-image embed/trace/detect, corpus
//! benchmarking, synthetic corpus generation, and a fast self-test.
//!
//! Exit codes: 0 success, 1 runtime/I-O failure, 2 usage error,
//! 3 message-capacity error.

use clap::{Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use wavemark::bench::{run_bench, BenchConfig};
use wavemark::carrier::{derive_carriers, Key, Message};
use wavemark::config::ConfigFile;
use wavemark::decode::{decide, detect, trace, DecodeConfig, Verdict};
use wavemark::distort::DistortionSpec;
use wavemark::dtcwt;
use wavemark::embed::{embed_image, EmbedConfig, DEFAULT_ALPHA};
use wavemark::error::{Error, Result};
use wavemark::objective::ber;
use wavemark::raster::{load_png, psnr, save_png, ssim};
use wavemark::synth::generate_corpus;

#[derive(Parser)]
#[command(
    name = "wavemark",
    version,
    about = "Blind chroma-band image watermarking: embed, trace, detect, benchmark"
)]
struct Cli {
    /// key = value config file; flags override file values, [section] keys
    /// override top-level ones
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Embed a message into one image
    Embed {
        #[arg(long = "in", value_name = "PATH")]
        input: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        /// 16 hex digits
        #[arg(long)]
        key: Option<String>,
        /// bit string ("0101…") or 0x-prefixed hex
        #[arg(long)]
        msg: Option<String>,
        #[arg(long)]
        alpha: Option<f64>,
        /// decomposition depth, 1 or 2
        #[arg(long)]
        level: Option<usize>,
    },
    /// Recover a message with the robust tracer
    Trace {
        #[arg(long = "in", value_name = "PATH")]
        input: Option<PathBuf>,
        #[arg(long)]
        key: Option<String>,
        /// reference bits; when given, a BER against them is printed
        #[arg(long = "ref")]
        reference: Option<String>,
        /// bits to read when no --ref is given
        #[arg(long = "msg-len")]
        msg_len: Option<usize>,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Judge authenticity with the fragile detector
    Detect {
        #[arg(long = "in", value_name = "PATH")]
        input: Option<PathBuf>,
        #[arg(long)]
        key: Option<String>,
        /// the bits that were embedded
        #[arg(long = "ref")]
        reference: Option<String>,
        /// BER decision threshold
        #[arg(long)]
        tau: Option<f64>,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Embed → distort → decode over an image directory, writing a CSV
    Bench {
        #[arg(long, value_name = "DIR")]
        corpus: Option<PathBuf>,
        /// square image side, 128 or 256
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// comma-separated distortion specs, e.g. "identity,jpeg:q=50,scramble"
        #[arg(long)]
        distortions: Option<String>,
        #[arg(long)]
        key: Option<String>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        level: Option<usize>,
        #[arg(long)]
        tau: Option<f64>,
        /// message bits per image (defaults by size: 128→30, 256→128)
        #[arg(long = "msg-len")]
        msg_len: Option<usize>,
        /// reuse the base key for every image instead of per-image keys
        #[arg(long = "single-key", default_value_t = false)]
        single_key: bool,
    },
    /// Generate a synthetic portrait corpus
    Corpus {
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Fast invariant checks, no corpus needed
    Selftest {
        /// test hook: offset added to one analysis filter tap; any nonzero
        /// value must make the reconstruction check fail
        #[arg(long, hide = true, default_value_t = 0.0)]
        perturb: f64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match &cli.config {
        Some(p) => ConfigFile::load(p),
        None => Ok(ConfigFile::empty()),
    };
    match file.and_then(|f| dispatch(cli.cmd, &f)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::BadKey(_) | Error::BadMessage(_) | Error::InvalidArg(_) | Error::Config(_) => 2,
        Error::Capacity { .. } => 3,
        _ => 1,
    }
}

/// flag > [section].key > top-level key > None
struct Resolve<'a> {
    file: &'a ConfigFile,
    section: &'a str,
}

impl Resolve<'_> {
    fn string(&self, flag: Option<String>, key: &str) -> Result<Option<String>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.file.string(self.section, key),
        }
    }

    fn path(&self, flag: Option<PathBuf>, key: &str) -> Result<Option<PathBuf>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => Ok(self.file.string(self.section, key)?.map(PathBuf::from)),
        }
    }

    fn f64(&self, flag: Option<f64>, key: &str) -> Result<Option<f64>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.file.f64(self.section, key),
        }
    }

    fn u64(&self, flag: Option<u64>, key: &str) -> Result<Option<u64>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.file.u64(self.section, key),
        }
    }

    fn usize(&self, flag: Option<usize>, key: &str) -> Result<Option<usize>> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self.file.usize(self.section, key),
        }
    }

    fn flag_true(&self, flag: bool, key: &str) -> Result<bool> {
        if flag {
            return Ok(true);
        }
        Ok(self.file.bool(self.section, key)?.unwrap_or(false))
    }
}

fn require<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidArg(format!("missing {flag} (flag or config key)")))
}

fn parse_key(s: Option<String>) -> Result<Option<Key>> {
    s.map(|k| Key::from_hex(&k)).transpose()
}

fn dispatch(cmd: Cmd, file: &ConfigFile) -> Result<ExitCode> {
    match cmd {
        Cmd::Embed {
            input,
            out,
            key,
            msg,
            alpha,
            level,
        } => {
            let r = Resolve {
                file,
                section: "embed",
            };
            let input = require(r.path(input, "in")?, "--in")?;
            let out = require(r.path(out, "out")?, "--out")?;
            let key = require(parse_key(r.string(key, "key")?)?, "--key")?;
            let msg = Message::parse(&require(r.string(msg, "msg")?, "--msg")?)?;
            let mut cfg = EmbedConfig {
                alpha: r.f64(alpha, "alpha")?.unwrap_or(DEFAULT_ALPHA),
                message_length: msg.len(),
                ..EmbedConfig::default()
            };
            if let Some(l) = r.usize(level, "level")? {
                cfg.level = l;
            }
            let img = load_png(&input)?;
            let marked = embed_image(&img, &msg, key, &cfg)?;
            save_png(&marked, &out)?;
            println!(
                "psnr={:.6} ssim={:.6} out={}",
                psnr(&img, &marked)?,
                ssim(&img, &marked)?,
                out.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Trace {
            input,
            key,
            reference,
            msg_len,
            level,
        } => {
            let r = Resolve {
                file,
                section: "trace",
            };
            let input = require(r.path(input, "in")?, "--in")?;
            let key = require(parse_key(r.string(key, "key")?)?, "--key")?;
            let reference = r
                .string(reference, "ref")?
                .map(|s| Message::parse(&s))
                .transpose()?;
            let mut cfg = DecodeConfig::default();
            if let Some(l) = r.usize(level, "level")? {
                cfg.level = l;
            }
            cfg.message_length = match &reference {
                Some(m) => m.len(),
                None => r.usize(msg_len, "msg_len")?.unwrap_or(cfg.message_length),
            };
            let img = load_png(&input)?;
            let result = trace(&img, key, &cfg)?;
            match reference {
                Some(m) => println!(
                    "bits={} ber={:.6}",
                    result.bits.bit_string(),
                    result.ber_vs(&m)?
                ),
                None => println!("bits={}", result.bits.bit_string()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Detect {
            input,
            key,
            reference,
            tau,
            level,
        } => {
            let r = Resolve {
                file,
                section: "detect",
            };
            let input = require(r.path(input, "in")?, "--in")?;
            let key = require(parse_key(r.string(key, "key")?)?, "--key")?;
            let reference = Message::parse(&require(r.string(reference, "ref")?, "--ref")?)?;
            let tau = r.f64(tau, "tau")?.unwrap_or(0.25);
            let mut cfg = DecodeConfig {
                message_length: reference.len(),
                decision_threshold: tau,
                ..DecodeConfig::default()
            };
            if let Some(l) = r.usize(level, "level")? {
                cfg.level = l;
            }
            let img = load_png(&input)?;
            let result = detect(&img, key, &cfg)?;
            let verdict = decide(&result, &reference, tau)?;
            println!(
                "ber={:.6} tau={:.6} decision={}",
                result.ber_vs(&reference)?,
                tau,
                match verdict {
                    Verdict::Authentic => "AUTHENTIC",
                    Verdict::Forged => "FORGED",
                }
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bench {
            corpus,
            size,
            out,
            seed,
            distortions,
            key,
            alpha,
            level,
            tau,
            msg_len,
            single_key,
        } => {
            let r = Resolve {
                file,
                section: "bench",
            };
            let corpus = require(r.path(corpus, "corpus")?, "--corpus")?;
            let out = require(r.path(out, "out")?, "--out")?;
            let mut cfg = BenchConfig::new(corpus, out);
            if let Some(s) = r.usize(size, "size")? {
                cfg.image_size = s;
            }
            if let Some(s) = r.u64(seed, "seed")? {
                cfg.seed = s;
            }
            if let Some(k) = parse_key(r.string(key, "key")?)? {
                cfg.key = k;
            }
            if let Some(a) = r.f64(alpha, "alpha")? {
                cfg.alpha = a;
            }
            if let Some(l) = r.usize(level, "level")? {
                cfg.level = l;
            }
            if let Some(t) = r.f64(tau, "tau")? {
                cfg.tau = t;
            }
            cfg.message_length = r.usize(msg_len, "msg_len")?;
            cfg.per_image_keys = !r.flag_true(single_key, "single_key")?;
            if let Some(list) = r.string(distortions, "distortions")? {
                let specs: Vec<DistortionSpec> = list
                    .split(',')
                    .map(|s| DistortionSpec::parse(s.trim()))
                    .collect::<Result<_>>()?;
                let (common, malicious) = BenchConfig::partition(specs);
                cfg.common = common;
                cfg.malicious = malicious;
            }
            let n_dist = cfg.common.len() + cfg.malicious.len();
            let csv = run_bench(&cfg)?;
            let rows = csv.lines().count() - 1;
            println!(
                "report={} images={} distortions={} rows={}",
                cfg.output.display(),
                rows / n_dist.max(1) - 1,
                n_dist,
                rows
            );
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Corpus {
            out,
            count,
            size,
            seed,
        } => {
            let r = Resolve {
                file,
                section: "corpus",
            };
            let out = require(r.path(out, "out")?, "--out")?;
            let count = r.usize(count, "count")?.unwrap_or(50);
            let size = r.usize(size, "size")?.unwrap_or(128);
            let seed = r.u64(seed, "seed")?.unwrap_or(0);
            let files = generate_corpus(&out, count, size, seed)?;
            println!("dir={} images={} size={}", out.display(), files.len(), size);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Selftest { perturb } => selftest(perturb),
    }
}

fn selftest(perturb: f64) -> Result<ExitCode> {
    let started = std::time::Instant::now();
    let mut failures = 0usize;
    let mut check = |name: &str, passed: bool, detail: String| {
        if passed {
            println!("ok   {name} ({detail})");
        } else {
            failures += 1;
            println!("FAIL {name} ({detail})");
        }
    };

    let residual = dtcwt::roundtrip_residual(64, 2, perturb)?;
    check(
        "dtcwt reconstruction",
        residual < 1e-9,
        format!("max residual {residual:.3e}"),
    );
    let residual1 = dtcwt::roundtrip_residual(20, 1, perturb)?;
    check(
        "dtcwt reconstruction, one level, non-multiple-of-4 side",
        residual1 < 1e-9,
        format!("max residual {residual1:.3e}"),
    );

    let a = Message::parse("101010101010")?;
    let b = Message::parse("101010101011")?;
    let (e_same, e_one) = (ber(&a, &a)?, ber(&a, &b)?);
    check(
        "ber oracle",
        e_same == 0.0 && (e_one - 1.0 / 12.0).abs() < 1e-15,
        format!("self {e_same}, one-bit {e_one:.6}"),
    );

    let c1 = derive_carriers(Key(7), 8, (32, 32), 1)?;
    let c2 = derive_carriers(Key(7), 8, (32, 32), 1)?;
    let c3 = derive_carriers(Key(8), 8, (32, 32), 1)?;
    let same = c1.dense_all_positive().data() == c2.dense_all_positive().data();
    let differ = c1.dense_all_positive().data() != c3.dense_all_positive().data();
    check(
        "carrier determinism",
        same && differ,
        format!("same key reproduces: {same}, keys separate: {differ}"),
    );

    let img = wavemark::synth::face(5, 128);
    let mut rng = <rand_chacha::ChaCha20Rng as rand::SeedableRng>::seed_from_u64(11);
    let msg = Message::random(&mut rng, 30);
    let key = Key(0x00c0ffee00c0ffee);
    let marked = embed_image(&img, &msg, key, &EmbedConfig::default())?;
    let traced = trace(&marked, key, &DecodeConfig::default())?;
    let rt_ber = traced.ber_vs(&msg)?;
    check(
        "embed→trace round trip",
        rt_ber == 0.0,
        format!("ber {rt_ber:.6}"),
    );

    let total = 5;
    let elapsed = started.elapsed().as_secs_f64();
    if failures == 0 {
        println!("selftest: {total}/{total} checks passed in {elapsed:.2}s");
        Ok(ExitCode::SUCCESS)
    } else {
        println!(
            "selftest: {}/{total} checks passed in {elapsed:.2}s",
            total - failures
        );
        Ok(ExitCode::FAILURE)
    }
}

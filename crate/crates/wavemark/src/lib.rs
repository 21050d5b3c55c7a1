//! Blind image watermarking in the complex wavelet domain.
//!
//! A message is spread over key-derived ±1 carriers added to the
//! high-frequency sub-bands of the chroma (U) channel's dual-tree complex
//! wavelet decomposition. Two decoders read it back: a robust tracer that
//! pools the embedded sub-bands with their redundant partners, and a
//! deliberately fragile detector whose bit errors reveal content
//! manipulation. A distortion pool and a small metric suite support
//! benchmarking the whole pipeline.

pub mod bench;
pub mod carrier;
pub mod config;
pub mod decode;
pub mod distort;
pub mod dtcwt;
pub mod embed;
pub mod error;
pub mod graph;
pub mod mask;
pub mod objective;
pub mod plane;
pub mod raster;
pub mod synth;

pub use error::{Error, Result};
pub use plane::Plane;

//! Variational image-based rendering.
//!
//! Synthesizes a novel view from posed source images plus per-view depth maps
//! by minimizing an energy with a color data term, a gradient-domain data
//! term, and a total-variation prior. Per-view contribution weights are
//! derived from camera geometry and depth uncertainty.
//!
//! Pipeline: depth proxy ingestion -> per-pixel warps into the target view ->
//! sparse forward model `V = BU` -> weighted FISTA solve -> push/pull
//! inpainting of uncovered regions.

use std::path::PathBuf;

pub mod camera;
pub mod depth;
pub mod formation;
pub mod gradient;
pub mod grid;
pub mod io;
pub mod metrics;
pub mod pipeline;
pub mod solver;
pub mod synth;
pub mod warp;

pub use camera::PinholeCamera;
pub use depth::DepthMap;
pub use formation::ForwardSystem;
pub use grid::{Image, RgbImage};
pub use solver::RenderConfig;
pub use warp::{TargetDepth, WarpField};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("rotation matrix is not orthonormal (max deviation {0:.3e})")]
    NonOrthonormalRotation(f64),
    #[error("intrinsics must be upper-triangular with positive focals and K[2][2] = 1")]
    InvalidIntrinsics,
    #[error("point at infinity (|homogeneous depth| below threshold)")]
    PointAtInfinity,
    #[error("invalid depth {0}: depths must be strictly positive")]
    InvalidDepth(f64),
    #[error("point behind camera (target-frame depth {0:.3e})")]
    BehindCamera(f64),
    #[error("depth map has no valid pixels")]
    EmptyDepthMap,
    #[error("no covered pixels available")]
    EmptyCoverage,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("objective became non-finite at iteration {0}")]
    NonFiniteObjective(usize),
    #[error("degenerate scene: {0}")]
    DegenerateScene(String),
    #[error("SSIM window larger than image")]
    WindowTooLarge,
    #[error("{path}: {msg}")]
    Format { path: PathBuf, msg: String },
    #[error("failed to read {path}: {source}")]
    FileRead {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("failed to write {path}: {source}")]
    FileWrite {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Image {
        path: PathBuf,
        source: image::ImageError,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

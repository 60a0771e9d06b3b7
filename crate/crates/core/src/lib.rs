//! Sparse-voxel latent editing engine.
//!
//! The crate is organized around an editing loop for sparse voxel latent
//! grids:
//!
//! - [`voxel`] — grid primitives: coordinates, sparse latent grids, masks,
//!   nearest-neighbor and bounding-box geometry, set-distance metrics, file
//!   formats.
//! - [`flow`] — rectified-flow velocity fields, first- and second-order
//!   steppers, classifier-free guidance, inversion with trajectory recording,
//!   denoising and a toy per-voxel flow trainer.
//! - [`region`] — automatic edit-region detection: partitioning an asset into
//!   edit/preserve parts and classifying every grid voxel, with an
//!   independent brute-force reference implementation.
//! - [`edit`] — masked repaint denoising against an inversion trajectory,
//!   interleaved dual-field stepping, soft boundary blending, two-stage edit
//!   orchestration and the deletion shortcut.
//! - [`guidance`] — provider contracts and deterministic fixture-backed
//!   implementations for the external text/image/segmentation services.
//! - [`pipeline`] — end-to-end run orchestration, configuration, synthetic
//!   assets, manifests and exports.

pub mod edit;
pub mod flow;
pub mod guidance;
pub mod pipeline;
pub mod region;
pub mod voxel;

//! Sparse voxel grid primitives.
//!
//! Everything in this module is immutable after construction; the free
//! functions are pure and safe to call concurrently. Coordinates are unsigned
//! grid indices inside a cube of side `resolution`, ordered lexicographically
//! `(x, y, z)` so that every iteration over a grid, mask or labeling is
//! deterministic.

mod grid;
mod io;
mod knn;
mod labels;
mod mask;
mod metrics;

pub use grid::LatentGrid;
pub use io::{
    export_ply, read_ply_coords, read_vxg, read_vxg_binary, read_vxm, write_vxg, write_vxg_binary,
    write_vxm,
};
pub use knn::{dist_sq, knn, KnnIndex};
pub use labels::{majority_vote_labels, PartLabeling};
pub use mask::{downscale_mask, SoftMask, VoxelMask};
pub use metrics::{aabb_of, chamfer_distance, Aabb};

use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors produced by voxel-grid operations.
#[derive(Debug, thiserror::Error)]
pub enum VoxelError {
    /// An operation that needs at least one element got an empty set.
    #[error("empty set: {0}")]
    EmptySet(&'static str),
    /// Downscale factor does not divide the grid resolution.
    #[error("factor {factor} does not divide resolution {resolution}")]
    BadFactor { resolution: u32, factor: u32 },
    /// A coordinate lies outside the grid cube.
    #[error("coordinate {coord} outside grid of resolution {resolution}")]
    OutOfBounds { coord: VoxelCoord, resolution: u32 },
    /// A feature vector has the wrong number of channels.
    #[error("feature vector has {got} channels, grid expects {expected}")]
    BadFeatureLen { expected: usize, got: usize },
    /// A file did not conform to the expected format.
    #[error("format error: {0}")]
    Format(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Integer voxel coordinate inside a cubic grid.
///
/// The derived `Ord` is lexicographic in `(x, y, z)`, which is the canonical
/// iteration and tie-breaking order throughout the crate.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct VoxelCoord {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl VoxelCoord {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Self { x, y, z }
    }

    /// Center of the voxel in normalized `[0,1]^3` space for a grid of the
    /// given resolution.
    pub fn center(&self, resolution: u32) -> [f64; 3] {
        let r = resolution as f64;
        [
            (self.x as f64 + 0.5) / r,
            (self.y as f64 + 0.5) / r,
            (self.z as f64 + 0.5) / r,
        ]
    }
}

impl fmt::Display for VoxelCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.x, self.y, self.z)
    }
}

impl From<(u32, u32, u32)> for VoxelCoord {
    fn from((x, y, z): (u32, u32, u32)) -> Self {
        Self { x, y, z }
    }
}

/// Grid shape: cubic resolution `R` per axis and `D` feature channels per
/// voxel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridDims {
    pub resolution: u32,
    pub channels: u32,
}

impl GridDims {
    /// Panics if `resolution` or `channels` is zero; both must be >= 1.
    pub fn new(resolution: u32, channels: u32) -> Self {
        assert!(resolution >= 1, "resolution must be >= 1");
        assert!(channels >= 1, "channels must be >= 1");
        Self {
            resolution,
            channels,
        }
    }

    /// Dims for a structure mask (channel count is irrelevant for masks).
    pub fn mask(resolution: u32) -> Self {
        Self::new(resolution, 1)
    }

    pub fn contains(&self, c: VoxelCoord) -> bool {
        c.x < self.resolution && c.y < self.resolution && c.z < self.resolution
    }

    /// Number of cells in the full cube.
    pub fn cube_len(&self) -> usize {
        let r = self.resolution as usize;
        r * r * r
    }

    /// All cube coordinates in lexicographic order.
    pub fn all_coords(&self) -> impl Iterator<Item = VoxelCoord> + '_ {
        let r = self.resolution;
        (0..r).flat_map(move |x| {
            (0..r).flat_map(move |y| (0..r).map(move |z| VoxelCoord::new(x, y, z)))
        })
    }

    /// Map a normalized position in `[0,1]^3` to the voxel containing it,
    /// clamped to the grid: `floor(p * R)` capped at `R - 1`.
    pub fn voxel_of_position(&self, p: [f64; 3]) -> VoxelCoord {
        let r = self.resolution;
        let clamp = |v: f64| -> u32 {
            let idx = (v * r as f64).floor();
            if idx < 0.0 {
                0
            } else {
                (idx as u32).min(r - 1)
            }
        };
        VoxelCoord::new(clamp(p[0]), clamp(p[1]), clamp(p[2]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coord_order_is_lexicographic() {
        let a = VoxelCoord::new(0, 1, 0);
        let b = VoxelCoord::new(1, 0, 0);
        assert!(a < b);
        assert!(VoxelCoord::new(1, 0, 5) < VoxelCoord::new(1, 1, 0));
        assert!(VoxelCoord::new(2, 3, 4) < VoxelCoord::new(2, 3, 5));
    }

    #[test]
    fn position_maps_to_clamped_voxel() {
        let dims = GridDims::new(16, 1);
        assert_eq!(dims.voxel_of_position([0.0, 0.0, 0.0]), VoxelCoord::new(0, 0, 0));
        // 1.0 * 16 = 16 would be out of range; clamp to 15.
        assert_eq!(
            dims.voxel_of_position([1.0, 1.0, 1.0]),
            VoxelCoord::new(15, 15, 15)
        );
        assert_eq!(
            dims.voxel_of_position([0.5, 0.25, 0.999]),
            VoxelCoord::new(8, 4, 15)
        );
    }

    #[test]
    fn all_coords_covers_cube_in_order() {
        let dims = GridDims::new(3, 1);
        let coords: Vec<_> = dims.all_coords().collect();
        assert_eq!(coords.len(), 27);
        let mut sorted = coords.clone();
        sorted.sort();
        assert_eq!(coords, sorted);
    }
}

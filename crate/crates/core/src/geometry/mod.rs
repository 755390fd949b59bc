//! Scan geometry: OBJ parsing, horizontal cross-sections, and the ordered
//! 64-level circumference sequence over an annotated abdominal slab.
//!
//! All lengths are meters. Meshes are canonicalized so that the vertical
//! (height) direction is the third coordinate; [`VerticalAxis`] describes
//! which file-frame axis maps there.

mod mesh;
mod primitives;
mod sequence;
mod slice;

pub use mesh::{parse_obj, ObjParseOutcome, TriangleMesh, VerticalAxis};
pub use primitives::{cone, cylinder, revolve_profile, unit_cube, uv_sphere};
pub use sequence::{extract_sequence, CircumferenceSequence, SEQ_LEN};
pub use slice::{polygon_area, polygon_centroid, polygon_contains, slice_at_height, CrossSection};

use crate::error::{Classify, ErrorClass};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("line {line}: malformed {kind} record: {detail}")]
    Parse {
        line: usize,
        kind: &'static str,
        detail: String,
    },
    #[error("face at line {line} references vertex index {index}, valid range is 1..={count}")]
    IndexOutOfRange {
        line: usize,
        index: i64,
        count: usize,
    },
    #[error("invalid mesh: {0}")]
    Structural(String),
    #[error("slicing plane z={z} lies outside the mesh height range [{min}, {max}]")]
    EmptySection { z: f64, min: f64, max: f64 },
    #[error("degenerate slab: z_low={z_low} must be strictly below z_high={z_high}")]
    DegenerateSlab { z_low: f64, z_high: f64 },
    #[error("no usable cross-section loop at level {level} (z={z}): {detail}")]
    LevelFailed { level: usize, z: f64, detail: String },
    #[error("geometry failure: {0}")]
    Numeric(String),
}

impl Classify for GeometryError {
    fn class(&self) -> ErrorClass {
        match self {
            GeometryError::Numeric(_) => ErrorClass::Numeric,
            _ => ErrorClass::Data,
        }
    }
}

//! JSON disk documents.
//!
//! ```json
//! {"disks": [
//!   {"type": "circle", "center": [0, 0], "radius": 1},
//!   {"type": "halfplane", "normal": [0, 1], "offset": 0}
//! ]}
//! ```
//!
//! n-dimensional documents set `"dim"` and use `{"type": "sphere", ...}`.

use serde::{Deserialize, Serialize};

use crate::minkowski::Disk;
use crate::nsphere::NSphere;

/// Halfplane normals in documents may be off unit length by this much;
/// they are rescaled on ingest.
pub const DOCUMENT_NORMAL_TOL: f64 = 1e-9;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum DiskRecord {
    Circle { center: [f64; 2], radius: f64 },
    Halfplane { normal: [f64; 2], offset: f64 },
    Sphere { center: Vec<f64>, radius: f64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiskDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub disks: Vec<DiskRecord>,
}

/// Validated document contents.
#[derive(Debug, Clone, PartialEq)]
pub enum Configuration {
    Planar(Vec<Disk>),
    Spheres { dim: usize, spheres: Vec<NSphere> },
}

fn clean(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x
    }
}

impl DiskRecord {
    pub fn from_disk(d: &Disk) -> Self {
        match *d {
            Disk::Circle { center, radius } => DiskRecord::Circle { center: center.map(clean), radius },
            Disk::Halfplane { normal, offset } => {
                DiskRecord::Halfplane { normal: normal.map(clean), offset: clean(offset) }
            }
        }
    }
}

pub fn parse_document(text: &str) -> Result<DiskDocument, String> {
    serde_json::from_str(text).map_err(|e| format!("invalid disk document: {e}"))
}

impl DiskDocument {
    pub fn from_disks(disks: &[Disk]) -> Self {
        Self { dim: None, disks: disks.iter().map(DiskRecord::from_disk).collect() }
    }

    pub fn validate(&self) -> Result<Configuration, String> {
        match self.dim {
            None => self
                .disks
                .iter()
                .enumerate()
                .map(|(i, r)| planar_record(i, r))
                .collect::<Result<Vec<_>, _>>()
                .map(Configuration::Planar),
            Some(dim) => {
                if dim < 2 {
                    return Err(format!("dim must be at least 2, got {dim}"));
                }
                let spheres = self
                    .disks
                    .iter()
                    .enumerate()
                    .map(|(i, r)| match r {
                        DiskRecord::Sphere { center, radius } => {
                            if center.len() != dim {
                                return Err(format!(
                                    "disk {i}: center has {} components, expected {dim}",
                                    center.len()
                                ));
                            }
                            check_radius(i, *radius)?;
                            check_finite(i, center)?;
                            Ok(NSphere::new(center.clone(), *radius))
                        }
                        _ => Err(format!("disk {i}: documents with dim set hold sphere records only")),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Configuration::Spheres { dim, spheres })
            }
        }
    }
}

fn check_radius(i: usize, radius: f64) -> Result<(), String> {
    if !radius.is_finite() {
        return Err(format!("disk {i}: radius must be finite"));
    }
    if radius == 0.0 {
        return Err(format!("disk {i}: radius must be nonzero"));
    }
    Ok(())
}

fn check_finite(i: usize, xs: &[f64]) -> Result<(), String> {
    if xs.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(format!("disk {i}: coordinates must be finite"))
    }
}

fn planar_record(i: usize, record: &DiskRecord) -> Result<Disk, String> {
    match record {
        DiskRecord::Circle { center, radius } => {
            check_radius(i, *radius)?;
            check_finite(i, center)?;
            Ok(Disk::Circle { center: *center, radius: *radius })
        }
        DiskRecord::Halfplane { normal, offset } => {
            check_finite(i, normal)?;
            check_finite(i, &[*offset])?;
            let norm = normal[0].hypot(normal[1]);
            if (norm - 1.0).abs() > DOCUMENT_NORMAL_TOL {
                return Err(format!("disk {i}: halfplane normal has length {norm}, expected 1"));
            }
            Ok(Disk::Halfplane { normal: [normal[0] / norm, normal[1] / norm], offset: *offset })
        }
        DiskRecord::Sphere { .. } => Err(format!("disk {i}: sphere records require \"dim\"")),
    }
}

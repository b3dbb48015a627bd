//! Apollonian gaskets grown from a Descartes quadruple by repeated reflection.
//!
//! Generation is a breadth-first walk over quadruples. Each quadruple is
//! reflected at every slot except the one that produced it, since the
//! reflection is an involution and would just give back the parent.

mod svg;

use std::collections::{HashMap, VecDeque};

pub use svg::{render_svg, RenderStyle};

use crate::descartes::{reflected_member, solve_fourth_disk, Quadruple};
use crate::error::{Error, Result};
use crate::minkowski::{project, CircleVector, Disk};

/// Relative quantum used for disk deduplication and curvature grouping.
pub const DEDUP_QUANTUM: f64 = 1e-7;

/// Stopping rules for [`generate`]. At least one must be set.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GenerationLimits {
    pub max_depth: Option<u32>,
    /// Disks with curvature above this are neither emitted nor expanded.
    pub max_curvature: Option<f64>,
    pub max_count: Option<usize>,
}

impl GenerationLimits {
    pub fn depth(max_depth: u32) -> Self {
        Self { max_depth: Some(max_depth), ..Self::default() }
    }

    pub fn with_max_curvature(mut self, k: f64) -> Self {
        self.max_curvature = Some(k);
        self
    }

    pub fn with_max_count(mut self, n: usize) -> Self {
        self.max_count = Some(n);
        self
    }

    fn validate(&self) -> Result<()> {
        if let Some(k) = self.max_curvature {
            if !(k > 0.0) {
                return Err(Error::InvalidSeed(format!("max curvature must be positive, got {k}")));
            }
        }
        if self.max_depth.is_none() && self.max_curvature.is_none() && self.max_count.is_none() {
            return Err(Error::UnboundedLimits);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasketDisk {
    pub vector: CircleVector,
    pub depth: u32,
    /// Quadruple whose reflection created this disk; `None` for the seed.
    pub parent: Option<usize>,
}

/// A node of the reflection tree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadrupleRecord {
    /// Indices into [`Gasket::disks`].
    pub members: [usize; 4],
    pub depth: u32,
    pub parent: Option<usize>,
    /// Slot reflected to create this quadruple from its parent.
    pub reflected: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Gasket {
    seed: Quadruple,
    disks: Vec<GasketDisk>,
    quadruples: Vec<QuadrupleRecord>,
    limits: GenerationLimits,
}

impl Gasket {
    pub fn seed(&self) -> &Quadruple {
        &self.seed
    }

    pub fn disks(&self) -> &[GasketDisk] {
        &self.disks
    }

    pub fn quadruples(&self) -> &[QuadrupleRecord] {
        &self.quadruples
    }

    pub fn limits(&self) -> &GenerationLimits {
        &self.limits
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.disks.is_empty()
    }

    pub fn max_depth(&self) -> u32 {
        self.disks.iter().map(|d| d.depth).max().unwrap_or(0)
    }

    /// Number of quadruples created at the given depth.
    pub fn quadruple_count_at_depth(&self, depth: u32) -> usize {
        self.quadruples.iter().filter(|q| q.depth == depth).count()
    }

    /// The four circle vectors of a stored quadruple.
    pub fn quadruple_vectors(&self, id: usize) -> [CircleVector; 4] {
        self.quadruples[id].members.map(|d| self.disks[d].vector)
    }

    /// Smallest absolute radius among the circles, if any.
    pub fn min_radius(&self) -> Option<f64> {
        self.disks
            .iter()
            .filter(|d| d.vector.beta != 0.0)
            .map(|d| 1.0 / d.vector.beta.abs())
            .min_by(f64::total_cmp)
    }

    pub fn projected(&self) -> Result<Vec<(Disk, &GasketDisk)>> {
        self.disks.iter().map(|d| Ok((project(&d.vector)?, d))).collect()
    }
}

type DedupKey = [i64; 4];

/// Key equal for disks agreeing to `1e-7 · max(1, |β|)` in every coordinate.
pub fn dedup_key(v: &CircleVector) -> DedupKey {
    let q = DEDUP_QUANTUM * v.beta.abs().max(1.0);
    v.to_array().map(|x| (x / q).round() as i64)
}

/// Breadth-first gasket generation. The traversal order, and so the disk
/// order, depends only on the seed and limits.
pub fn generate(seed: &Quadruple, limits: GenerationLimits) -> Result<Gasket> {
    let seed = Quadruple::new(*seed.members()).map_err(|e| Error::InvalidSeed(e.to_string()))?;
    limits.validate()?;
    let max_count = limits.max_count.unwrap_or(usize::MAX);

    let mut gasket = Gasket { seed, disks: Vec::new(), quadruples: Vec::new(), limits };
    let mut seen: HashMap<DedupKey, usize> = HashMap::new();

    let mut members = [0usize; 4];
    for (slot, v) in seed.members().iter().enumerate() {
        if gasket.disks.len() >= max_count {
            return Ok(gasket);
        }
        members[slot] = gasket.disks.len();
        seen.insert(dedup_key(v), gasket.disks.len());
        gasket.disks.push(GasketDisk { vector: *v, depth: 0, parent: None });
    }
    gasket.quadruples.push(QuadrupleRecord { members, depth: 0, parent: None, reflected: None });

    let mut frontier = VecDeque::from([0usize]);
    while let Some(qid) = frontier.pop_front() {
        let record = gasket.quadruples[qid];
        if limits.max_depth.is_some_and(|d| record.depth >= d) {
            continue;
        }
        let vectors = gasket.quadruple_vectors(qid);
        for slot in 0..4 {
            if record.reflected == Some(slot) {
                continue;
            }
            let child = reflected_member(&vectors, slot);
            if limits.max_curvature.is_some_and(|k| child.beta > k) {
                continue;
            }
            let key = dedup_key(&child);
            if seen.contains_key(&key) {
                continue;
            }
            if gasket.disks.len() >= max_count {
                return Ok(gasket);
            }
            let disk_id = gasket.disks.len();
            seen.insert(key, disk_id);
            gasket.disks.push(GasketDisk { vector: child, depth: record.depth + 1, parent: Some(qid) });

            let mut members = record.members;
            members[slot] = disk_id;
            frontier.push_back(gasket.quadruples.len());
            gasket.quadruples.push(QuadrupleRecord {
                members,
                depth: record.depth + 1,
                parent: Some(qid),
                reflected: Some(slot),
            });
        }
    }
    Ok(gasket)
}

/// Distinct curvatures with multiplicities, ascending. Curvatures within the
/// dedup quantum of each other are merged and reported by their mean.
pub fn curvature_spectrum(g: &Gasket) -> Vec<(f64, usize)> {
    let mut betas: Vec<f64> = g.disks.iter().map(|d| d.vector.beta).collect();
    betas.sort_by(f64::total_cmp);
    let mut groups: Vec<(f64, f64, usize)> = Vec::new();
    for b in betas {
        match groups.last_mut() {
            Some((start, sum, count)) if (b - *start).abs() <= DEDUP_QUANTUM * start.abs().max(1.0) => {
                *sum += b;
                *count += 1;
            }
            _ => groups.push((b, b, 1)),
        }
    }
    groups.into_iter().map(|(_, sum, count)| (sum / count as f64, count)).collect()
}

/// Places a Descartes quadruple with the given curvatures.
///
/// Accepts three curvatures (the fourth is the larger root) or four (the
/// fourth must be one of the two roots for the three largest). The two
/// largest curvatures sit on the x-axis touching at the origin, the first
/// to the left; the third disk sits above the axis.
pub fn seed_from_curvatures(curvatures: &[f64]) -> Result<Quadruple> {
    if curvatures.len() != 3 && curvatures.len() != 4 {
        return Err(Error::InvalidSeed(format!(
            "expected 3 or 4 curvatures, got {}",
            curvatures.len()
        )));
    }
    if curvatures.iter().any(|k| !k.is_finite()) {
        return Err(Error::InvalidSeed("curvatures must be finite".into()));
    }
    let mut sorted = curvatures.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let (k1, k2, k3) = (sorted[0], sorted[1], sorted[2]);
    let target = sorted.get(3).copied();

    let p = k1 * k2 + k2 * k3 + k3 * k1;
    if p < -1e-12 {
        return Err(Error::ComplexRoots { discriminant: p });
    }
    if !(k1 > 0.0 && k2 >= 0.0) {
        return Err(Error::InvalidSeed(
            "need at least one positive curvature and at most one negative".into(),
        ));
    }

    // Touching at the origin: circle of curvature k1 at (-1/k1, 0), and
    // curvature k2 at (1/k2, 0) or the halfplane x >= 0 when k2 = 0.
    let c1 = CircleVector::new(-1.0, 0.0, k1, 0.0);
    let c2 = CircleVector::new(1.0, 0.0, k2, 0.0);
    let gamma = 4.0 / (k1 + k2);
    let xdot = (k2 - k1) / (k1 + k2);
    let ydot_sq = 1.0 - xdot * xdot + k3 * gamma;
    if ydot_sq < -1e-12 {
        return Err(Error::InvalidSeed(format!(
            "no disk of curvature {k3} touches disks of curvature {k1} and {k2}"
        )));
    }
    let ydot = ydot_sq.max(0.0).sqrt();
    let c3 = CircleVector::new(xdot, if k3 < 0.0 { -ydot } else { ydot }, k3, gamma);

    let (larger, smaller) =
        solve_fourth_disk(&c1, &c2, &c3).map_err(|e| Error::InvalidSeed(e.to_string()))?;
    let c4 = match target {
        None => larger,
        Some(d) => {
            let tol = 1e-6 * d.abs().max(1.0);
            if (larger.beta - d).abs() <= tol {
                larger
            } else if (smaller.beta - d).abs() <= tol {
                smaller
            } else {
                return Err(Error::InvalidSeed(format!(
                    "curvature {d} is not tangent to {k1}, {k2}, {k3} (roots {}, {})",
                    larger.beta, smaller.beta
                )));
            }
        }
    };
    Quadruple::new([c1, c2, c3, c4]).map_err(|e| Error::InvalidSeed(e.to_string()))
}

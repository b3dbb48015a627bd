//! Disks in the plane as unit space-like vectors of Minkowski space R^{3,1}.
//!
//! A circle with center `(x, y)` and signed radius `r` lifts to
//! `(x/r, y/r, 1/r, (x² + y² − r²)/r)`. Under the metric [`METRIC`] the
//! lifted vectors have self-product −1, and the product of two of them is
//! the inversive product `(d² − r₁² − r₂²) / (2 r₁ r₂)`: 1 for external
//! tangency, −1 for internal tangency, `cos φ` for circles crossing at angle φ.
//!
//! Negative radii describe the unbounded disk outside a circle; halfplanes
//! are the curvature-zero limit and lift to vectors with `beta == 0`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg::{accurate_dot_split, refined_inverse_split, sandwich_entry, Mat4, Matrix};

/// Tolerance used when a vector is accepted as a normalized circle vector.
/// Scaled by the squared largest component once that exceeds 1: a lifted
/// circle far from the origin has large coordinates, and rounding them
/// moves `⟨C, C⟩` by about one ulp of `|C|²`.
pub const NORMALIZATION_GATE: f64 = 1e-6;

/// Halfplane normals must be unit length to this tolerance.
pub const UNIT_NORMAL_TOL: f64 = 1e-12;

/// The quadratic form `g` on R^{3,1}.
pub const METRIC: Mat4 = [
    [-1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 0.5],
    [0.0, 0.0, 0.5, 0.0],
];

/// `G = g⁻¹`.
pub const METRIC_INVERSE: Mat4 = [
    [-1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, 0.0, 2.0],
    [0.0, 0.0, 2.0, 0.0],
];

/// A closed disk in the plane, possibly unbounded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Disk {
    /// Circle with signed radius; a negative radius means the exterior of the circle.
    Circle { center: [f64; 2], radius: f64 },
    /// The set `{ p : normal · p ≤ offset }`.
    Halfplane { normal: [f64; 2], offset: f64 },
}

impl Disk {
    pub fn circle(x: f64, y: f64, radius: f64) -> Self {
        Disk::Circle { center: [x, y], radius }
    }

    pub fn halfplane(nx: f64, ny: f64, offset: f64) -> Self {
        Disk::Halfplane { normal: [nx, ny], offset }
    }

    /// Signed curvature; zero for halfplanes.
    pub fn curvature(&self) -> f64 {
        match *self {
            Disk::Circle { radius, .. } => 1.0 / radius,
            Disk::Halfplane { .. } => 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            Disk::Circle { center, radius } => {
                if !(center[0].is_finite() && center[1].is_finite() && radius.is_finite()) {
                    return Err(Error::NonFinite);
                }
                if radius == 0.0 {
                    return Err(Error::ZeroRadius);
                }
            }
            Disk::Halfplane { normal, offset } => {
                if !(normal[0].is_finite() && normal[1].is_finite() && offset.is_finite()) {
                    return Err(Error::NonFinite);
                }
                let norm = normal[0].hypot(normal[1]);
                if (norm - 1.0).abs() > UNIT_NORMAL_TOL {
                    return Err(Error::NonUnitNormal { norm });
                }
            }
        }
        Ok(())
    }
}

/// Coordinates `(ẋ, ẏ, β, γ)` of a disk in Minkowski space.
///
/// Vectors produced by [`lift`] satisfy `⟨C, C⟩ = −1`. The type itself does
/// not enforce this so that raw 4-vectors can be inspected and rejected by
/// [`project`] or rescaled by [`normalize`].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CircleVector {
    /// Reduced x coordinate `x / r`.
    pub xdot: f64,
    /// Reduced y coordinate `y / r`.
    pub ydot: f64,
    /// Curvature `1 / r`.
    pub beta: f64,
    /// Co-curvature `(x² + y² − r²) / r`.
    pub gamma: f64,
}

impl CircleVector {
    pub const fn new(xdot: f64, ydot: f64, beta: f64, gamma: f64) -> Self {
        Self { xdot, ydot, beta, gamma }
    }

    pub const fn from_array(v: [f64; 4]) -> Self {
        Self::new(v[0], v[1], v[2], v[3])
    }

    pub const fn to_array(self) -> [f64; 4] {
        [self.xdot, self.ydot, self.beta, self.gamma]
    }

    /// Circle vector of the circle with the given center and curvature `k ≠ 0`.
    ///
    /// Keeps `beta` equal to `k` bit-for-bit, which [`lift`] cannot promise
    /// since it goes through `1 / r`.
    pub fn from_center_curvature(center: [f64; 2], k: f64) -> Self {
        let [x, y] = center;
        Self::new(x * k, y * k, k, (x * x + y * y) * k - 1.0 / k)
    }

    /// `⟨self, self⟩`.
    pub fn self_product(&self) -> f64 {
        inner(self, self)
    }

    pub fn is_halfplane(&self) -> bool {
        self.beta == 0.0
    }

    pub fn is_finite(&self) -> bool {
        self.to_array().iter().all(|x| x.is_finite())
    }

    pub fn max_abs(&self) -> f64 {
        self.to_array().iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

impl Add for CircleVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.xdot + o.xdot, self.ydot + o.ydot, self.beta + o.beta, self.gamma + o.gamma)
    }
}

impl Sub for CircleVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.xdot - o.xdot, self.ydot - o.ydot, self.beta - o.beta, self.gamma - o.gamma)
    }
}

impl Mul<f64> for CircleVector {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        Self::new(self.xdot * s, self.ydot * s, self.beta * s, self.gamma * s)
    }
}

impl Neg for CircleVector {
    type Output = Self;
    fn neg(self) -> Self {
        self * -1.0
    }
}

/// Maps a disk to its circle vector.
pub fn lift(d: &Disk) -> Result<CircleVector> {
    d.validate()?;
    Ok(match *d {
        Disk::Circle { center: [x, y], radius: r } => {
            CircleVector::new(x / r, y / r, 1.0 / r, (x * x + y * y - r * r) / r)
        }
        // Limit of Circle((c − R)·n, R) as R → ∞.
        Disk::Halfplane { normal: [nx, ny], offset } => {
            CircleVector::new(-nx, -ny, 0.0, -2.0 * offset)
        }
    })
}

/// Inverse of [`lift`]. Fails unless `⟨v, v⟩ = −1` within [`NORMALIZATION_GATE`].
pub fn project(v: &CircleVector) -> Result<Disk> {
    if !v.is_finite() {
        return Err(Error::NonFinite);
    }
    let self_product = v.self_product();
    if (self_product + 1.0).abs() > NORMALIZATION_GATE * v.max_abs().powi(2).max(1.0) {
        return Err(Error::NotNormalized { self_product });
    }
    if v.beta == 0.0 {
        Ok(Disk::Halfplane { normal: [-v.xdot, -v.ydot], offset: -v.gamma / 2.0 })
    } else {
        Ok(Disk::Circle { center: [v.xdot / v.beta, v.ydot / v.beta], radius: 1.0 / v.beta })
    }
}

/// Rescales a space-like vector to self-product −1, keeping its orientation.
pub fn normalize(v: &CircleVector) -> Result<CircleVector> {
    if !v.is_finite() {
        return Err(Error::NonFinite);
    }
    let self_product = v.self_product();
    if self_product >= -1e-12 {
        return Err(Error::NotSpacelike { self_product });
    }
    Ok(*v * (1.0 / (-self_product).sqrt()))
}

/// Minkowski product `uᵀ g v`.
pub fn inner(u: &CircleVector, v: &CircleVector) -> f64 {
    let (hi, lo) = inner_split(u, v);
    hi + lo
}

fn inner_split(u: &CircleVector, v: &CircleVector) -> (f64, f64) {
    accurate_dot_split(
        &[-u.xdot, -u.ydot, 0.5 * u.beta, 0.5 * v.beta],
        &[v.xdot, v.ydot, v.gamma, u.gamma],
    )
}

/// Inversive product computed from centers and radii.
///
/// Halfplanes have no finite radius, so any halfplane argument falls back
/// to the Minkowski product of the lifts.
pub fn inner_geometric(d1: &Disk, d2: &Disk) -> Result<f64> {
    match (*d1, *d2) {
        (Disk::Circle { center: a, radius: r1 }, Disk::Circle { center: b, radius: r2 }) => {
            d1.validate()?;
            d2.validate()?;
            let dx = b[0] - a[0];
            let dy = b[1] - a[1];
            Ok((dx * dx + dy * dy - r1 * r1 - r2 * r2) / (2.0 * r1 * r2))
        }
        _ => Ok(inner(&lift(d1)?, &lift(d2)?)),
    }
}

/// Angle in `[0, π]` at which two circles cross, or `None` if they are disjoint
/// or nested without touching.
pub fn intersection_angle(d1: &Disk, d2: &Disk) -> Result<Option<f64>> {
    let p = inner_geometric(d1, d2)?;
    Ok((p.abs() <= 1.0).then(|| p.acos()))
}

/// Symmetric 4×4 matrix of pairwise inversive products of four disks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConfigurationMatrix(pub Mat4);

impl ConfigurationMatrix {
    pub fn entries(&self) -> &Mat4 {
        &self.0
    }

    pub fn inverse(&self) -> Result<Mat4> {
        crate::linalg::invert4(&self.0)
    }
}

/// Gramian `f = Dᵀ g D` of four circle vectors, `D` holding them as columns.
pub fn gramian(c: &[CircleVector; 4]) -> ConfigurationMatrix {
    let mut f = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in i..4 {
            let p = inner(&c[i], &c[j]);
            f[i][j] = p;
            f[j][i] = p;
        }
    }
    ConfigurationMatrix(f)
}

/// Pieces of the generalized Descartes identity `D f⁻¹ Dᵀ = G`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedCheck {
    pub gramian: Mat4,
    pub inverse: Mat4,
    /// `D f⁻¹ Dᵀ`, which should equal [`METRIC_INVERSE`].
    pub reconstructed: Mat4,
    /// Largest absolute entry of `D f⁻¹ Dᵀ − G`.
    pub residual: f64,
}

pub fn check_generalized(c: &[CircleVector; 4]) -> Result<GeneralizedCheck> {
    let f = gramian(c);
    let f_lo = Matrix::from_fn(4, |i, j| inner_split(&c[i], &c[j]).1);
    let (inv_m, inv_lo) = refined_inverse_split(&Matrix::from(f.0), &f_lo).map_err(|e| match e {
        Error::SingularMatrix => Error::DegenerateConfiguration,
        other => other,
    })?;
    let inv: Mat4 = std::array::from_fn(|i| std::array::from_fn(|j| inv_m[(i, j)]));
    let cols = c.map(CircleVector::to_array);
    let col_refs: Vec<&[f64]> = cols.iter().map(|c| c.as_slice()).collect();
    let mut reconstructed = [[0.0; 4]; 4];
    let mut residual: f64 = 0.0;
    for r in 0..4 {
        for s in 0..4 {
            let acc = sandwich_entry(&col_refs, &inv_m, &inv_lo, r, s);
            reconstructed[r][s] = acc;
            residual = residual.max((acc - METRIC_INVERSE[r][s]).abs());
        }
    }
    Ok(GeneralizedCheck { gramian: f.0, inverse: inv, reconstructed, residual })
}

/// Residual of the generalized Descartes identity for four disks in any position.
pub fn verify_generalized(c: &[CircleVector; 4]) -> Result<f64> {
    check_generalized(c).map(|check| check.residual)
}

//! (n−1)-spheres in n-space lifted to Minkowski space R^{n+1,1}.
//!
//! Everything here reduces to [`crate::minkowski`] when `n = 2`: the lift is
//! `(x₁/r, …, xₙ/r, 1/r, (|x|² − r²)/r)` and the metric is `−Iₙ` followed by
//! the 2×2 block with ½ off the diagonal.

use crate::error::{Error, Result};
use crate::linalg::{accurate_dot_split, refined_inverse_split, sandwich_entry, Matrix};

/// A sphere of dimension n−1 in R^n with signed radius.
#[derive(Debug, Clone, PartialEq)]
pub struct NSphere {
    pub center: Vec<f64>,
    pub radius: f64,
}

impl NSphere {
    pub fn new(center: Vec<f64>, radius: f64) -> Self {
        Self { center, radius }
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn curvature(&self) -> f64 {
        1.0 / self.radius
    }
}

/// Lifted sphere: `n` reduced coordinates, then curvature, then co-curvature.
#[derive(Debug, Clone, PartialEq)]
pub struct NVector {
    coords: Vec<f64>,
}

impl NVector {
    /// Wraps raw coordinates; needs at least the curvature and co-curvature slots.
    pub fn from_coords(coords: Vec<f64>) -> Self {
        assert!(coords.len() >= 2, "an n-vector has n + 2 coordinates");
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 2
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn reduced(&self) -> &[f64] {
        &self.coords[..self.dim()]
    }

    pub fn beta(&self) -> f64 {
        self.coords[self.dim()]
    }

    pub fn gamma(&self) -> f64 {
        self.coords[self.dim() + 1]
    }

    pub fn self_product(&self) -> f64 {
        inner_n(self, self)
    }
}

/// The metric `g_n` and its inverse `G_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct NMetric {
    pub g: Matrix,
    pub g_inv: Matrix,
}

pub fn metric_g_n(n: usize) -> Result<NMetric> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    let size = n + 2;
    let block = |off: f64| {
        Matrix::from_fn(size, |i, j| match (i, j) {
            _ if i < n && i == j => -1.0,
            _ if i >= n && j >= n && i != j => off,
            _ => 0.0,
        })
    };
    Ok(NMetric { g: block(0.5), g_inv: block(2.0) })
}

pub fn lift_n(s: &NSphere) -> Result<NVector> {
    let n = s.dim();
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    if !s.radius.is_finite() || s.center.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    if s.radius == 0.0 {
        return Err(Error::ZeroRadius);
    }
    let r = s.radius;
    let norm_sq: f64 = s.center.iter().map(|x| x * x).sum();
    let mut coords: Vec<f64> = s.center.iter().map(|x| x / r).collect();
    coords.push(1.0 / r);
    coords.push((norm_sq - r * r) / r);
    Ok(NVector { coords })
}

/// `uᵀ g_n v`. Both vectors must have the same dimension.
pub fn inner_n(u: &NVector, v: &NVector) -> f64 {
    let (hi, lo) = inner_n_split(u, v);
    hi + lo
}

fn inner_n_split(u: &NVector, v: &NVector) -> (f64, f64) {
    assert_eq!(u.dim(), v.dim(), "dimension mismatch");
    let n = u.dim();
    let mut left: Vec<f64> = u.reduced().iter().map(|x| -x).collect();
    let mut right = v.reduced().to_vec();
    left.extend([0.5 * u.beta(), 0.5 * v.beta()]);
    right.extend([v.gamma(), u.gamma()]);
    debug_assert_eq!(left.len(), n + 2);
    accurate_dot_split(&left, &right)
}

pub fn gramian_n(vectors: &[NVector]) -> Matrix {
    let k = vectors.len();
    let mut f = Matrix::zeros(k);
    for i in 0..k {
        for j in i..k {
            let p = inner_n(&vectors[i], &vectors[j]);
            f[(i, j)] = p;
            f[(j, i)] = p;
        }
    }
    f
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneralizedCheckN {
    pub gramian: Matrix,
    pub inverse: Matrix,
    pub residual: f64,
}

/// Gramian, its inverse and the residual of `D f⁻¹ Dᵀ = G_n`.
pub fn check_generalized_n(spheres: &[NVector], n: usize) -> Result<GeneralizedCheckN> {
    let metric = metric_g_n(n)?;
    if spheres.len() != n + 2 {
        return Err(Error::WrongCount { expected: n + 2, got: spheres.len() });
    }
    if let Some(bad) = spheres.iter().find(|s| s.dim() != n) {
        return Err(Error::WrongCount { expected: n + 2, got: bad.coords.len() });
    }
    let f = gramian_n(spheres);
    let f_lo = Matrix::from_fn(n + 2, |i, j| inner_n_split(&spheres[i], &spheres[j]).1);
    let (hi, lo) = refined_inverse_split(&f, &f_lo).map_err(|e| match e {
        Error::SingularMatrix => Error::DegenerateConfiguration,
        other => other,
    })?;
    let inverse = hi.clone();
    let cols: Vec<&[f64]> = spheres.iter().map(NVector::coords).collect();
    let mut residual: f64 = 0.0;
    for r in 0..n + 2 {
        for s in 0..n + 2 {
            let entry = sandwich_entry(&cols, &hi, &lo, r, s);
            residual = residual.max((entry - metric.g_inv[(r, s)]).abs());
        }
    }
    Ok(GeneralizedCheckN { gramian: f, inverse, residual })
}

pub fn verify_generalized_n(spheres: &[NVector], n: usize) -> Result<f64> {
    check_generalized_n(spheres, n).map(|c| c.residual)
}

/// `(Σb)² − n·Σb²`, zero for n+2 mutually tangent spheres in R^n.
pub fn soddy_gosset_residual(curvatures: &[f64], n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    if curvatures.len() != n + 2 {
        return Err(Error::WrongCount { expected: n + 2, got: curvatures.len() });
    }
    let sum: f64 = curvatures.iter().sum();
    let sum_sq: f64 = curvatures.iter().map(|b| b * b).sum();
    Ok(sum * sum - n as f64 * sum_sq)
}

/// Inverse of the all-tangent Gramian (−1 on the diagonal, 1 elsewhere) of
/// size n+2: `J/(2n) − I/2`.
pub fn all_tangent_inverse(n: usize) -> Matrix {
    let size = n + 2;
    let j = 1.0 / (2.0 * n as f64);
    Matrix::from_fn(size, |r, c| if r == c { j - 0.5 } else { j })
}

/// Vertices of a regular n-simplex with edge 2, centered at the origin.
pub fn simplex_vertices(n: usize) -> Result<Vec<Vec<f64>>> {
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    // √2·e_i in R^{n+1}, centered, then written in the orthonormal Helmert
    // basis of the sum-zero hyperplane.
    let m = n + 1;
    let scale = std::f64::consts::SQRT_2;
    let basis: Vec<Vec<f64>> = (1..=n)
        .map(|k| {
            let norm = ((k * (k + 1)) as f64).sqrt();
            (0..m)
                .map(|i| match i {
                    _ if i < k => 1.0 / norm,
                    _ if i == k => -(k as f64) / norm,
                    _ => 0.0,
                })
                .collect()
        })
        .collect();
    Ok((0..m)
        .map(|v| basis.iter().map(|b| scale * b[v]).collect())
        .collect())
}

/// n+1 unit spheres on the vertices of a regular n-simplex with edge 2,
/// plus a central sphere touching all of them: inside (`outer = false`) or
/// enclosing them with negative radius (`outer = true`).
pub fn canonical_simplex_config(n: usize, outer: bool) -> Result<Vec<NSphere>> {
    let mut spheres: Vec<NSphere> =
        simplex_vertices(n)?.into_iter().map(|c| NSphere::new(c, 1.0)).collect();
    let circumradius = (2.0 * n as f64 / (n + 1) as f64).sqrt();
    let radius = if outer { -(circumradius + 1.0) } else { circumradius - 1.0 };
    spheres.push(NSphere::new(vec![0.0; n], radius));
    Ok(spheres)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::{lift, verify_generalized, CircleVector, Disk, METRIC, METRIC_INVERSE};

    #[test]
    fn planar_metric_matches() {
        let m = metric_g_n(2).unwrap();
        assert_eq!(m.g, Matrix::from(METRIC));
        assert_eq!(m.g_inv, Matrix::from(METRIC_INVERSE));
        assert_eq!(metric_g_n(1), Err(Error::BadDimension(1)));
    }

    #[test]
    fn metric_inverse_exact() {
        for n in 2..=6 {
            let m = metric_g_n(n).unwrap();
            assert_eq!(m.g.mul(&m.g_inv), Matrix::identity(n + 2));
        }
        let g3 = metric_g_n(3).unwrap().g;
        assert_eq!(g3.size(), 5);
        assert_eq!((g3[(0, 0)], g3[(1, 1)], g3[(2, 2)]), (-1.0, -1.0, -1.0));
        assert_eq!((g3[(3, 4)], g3[(4, 3)], g3[(3, 3)]), (0.5, 0.5, 0.0));
    }

    #[test]
    fn lift_examples() {
        let v = lift_n(&NSphere::new(vec![0.0; 3], 1.0)).unwrap();
        assert_eq!(v.coords(), &[0.0, 0.0, 0.0, 1.0, -1.0]);
        let v = lift_n(&NSphere::new(vec![1.0, 1.0, 1.0], -1.0)).unwrap();
        assert_eq!(v.coords(), &[-1.0, -1.0, -1.0, -1.0, -2.0]);
        assert_eq!(lift_n(&NSphere::new(vec![0.0; 3], 0.0)), Err(Error::ZeroRadius));
        assert_eq!(lift_n(&NSphere::new(vec![0.0], 1.0)), Err(Error::BadDimension(1)));
    }

    #[test]
    fn planar_lift_agrees() {
        for (x, y, r) in [(0.3, -2.0, 1.5), (4.0, 1.0, -0.25), (0.0, 0.0, 7.0)] {
            let a = lift_n(&NSphere::new(vec![x, y], r)).unwrap();
            let b = lift(&Disk::circle(x, y, r)).unwrap();
            assert_eq!(a.coords(), &b.to_array());
        }
    }

    #[test]
    fn soddy_gosset_examples() {
        assert_eq!(soddy_gosset_residual(&[-1.0, 2.0, 2.0, 3.0], 2).unwrap(), 0.0);
        let d = 2.0 + 6f64.sqrt();
        assert!(soddy_gosset_residual(&[1.0, 1.0, 1.0, 1.0, d], 3).unwrap().abs() < 1e-12);
        assert_eq!(soddy_gosset_residual(&[1.0; 5], 3).unwrap(), 10.0);
        assert_eq!(
            soddy_gosset_residual(&[1.0; 4], 3),
            Err(Error::WrongCount { expected: 5, got: 4 })
        );
    }

    #[test]
    fn simplex_is_regular() {
        for n in 2..=6 {
            let vs = simplex_vertices(n).unwrap();
            let r = (2.0 * n as f64 / (n + 1) as f64).sqrt();
            for (i, a) in vs.iter().enumerate() {
                let norm: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
                assert!((norm - r).abs() < 1e-12);
                for b in &vs[i + 1..] {
                    let d: f64 = a.iter().zip(b).map(|(p, q)| (p - q).powi(2)).sum::<f64>().sqrt();
                    assert!((d - 2.0).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn simplex_config_central_curvatures() {
        let s2 = canonical_simplex_config(2, false).unwrap();
        assert!((s2[3].curvature() - (3.0 + 2.0 * 3f64.sqrt())).abs() < 1e-9);
        let s2o = canonical_simplex_config(2, true).unwrap();
        assert!((s2o[3].curvature() - (3.0 - 2.0 * 3f64.sqrt())).abs() < 1e-9);
        let s3 = canonical_simplex_config(3, false).unwrap();
        assert!((s3[4].curvature() - (2.0 + 6f64.sqrt())).abs() < 1e-9);
    }

    #[test]
    fn all_tangent_inverse_is_exact_inverse() {
        for n in 2..=6 {
            let f = Matrix::from_fn(n + 2, |i, j| if i == j { -1.0 } else { 1.0 });
            let prod = f.mul(&all_tangent_inverse(n));
            assert!(prod.max_abs_diff(&Matrix::identity(n + 2)) < 1e-12);
        }
    }

    #[test]
    fn planar_verification_agrees() {
        let disks = [
            Disk::circle(0.0, 0.0, 1.0),
            Disk::circle(3.0, 0.5, 2.0),
            Disk::circle(-1.0, 4.0, 0.5),
            Disk::circle(2.0, -3.0, -1.5),
        ];
        let c: Vec<CircleVector> = disks.iter().map(|d| lift(d).unwrap()).collect();
        let v: Vec<NVector> = c.iter().map(|c| NVector::from_coords(c.to_array().to_vec())).collect();
        let planar = verify_generalized(&[c[0], c[1], c[2], c[3]]).unwrap();
        let general = verify_generalized_n(&v, 2).unwrap();
        assert!((planar - general).abs() < 1e-12);
    }

    #[test]
    fn repeated_sphere_is_degenerate() {
        let mut spheres: Vec<NVector> = canonical_simplex_config(3, false)
            .unwrap()
            .iter()
            .map(|s| lift_n(s).unwrap())
            .collect();
        spheres[4] = spheres[0].clone();
        assert_eq!(verify_generalized_n(&spheres, 3), Err(Error::DegenerateConfiguration));
    }
}

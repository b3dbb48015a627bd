//! Descartes quadruples: four pairwise externally tangent disks.

use crate::error::{Error, Result};
use crate::minkowski::{gramian, inner, CircleVector, ConfigurationMatrix, NORMALIZATION_GATE};

/// Pairwise products of a quadruple must be 1 to this tolerance.
pub const TANGENCY_TOL: f64 = 1e-6;

/// Self-products of a quadruple must be −1 to this tolerance (scaled by the
/// squared magnitude of the vector when that exceeds 1).
pub const QUADRUPLE_NORM_TOL: f64 = 1e-9;

/// Smallest pivot over largest pivot below which a triple is rank deficient.
pub const RANK_TOL: f64 = 1e-10;

/// Solved curvatures this small relative to the vector are set to exactly 0.
pub const FLAT_TOL: f64 = 1e-13;

/// `(a + b + c + d)² − 2(a² + b² + c² + d²)`.
pub fn descartes_residual(a: f64, b: f64, c: f64, d: f64) -> f64 {
    let s = a + b + c + d;
    s * s - 2.0 * (a * a + b * b + c * c + d * d)
}

/// Both curvatures of a disk tangent to three mutually tangent disks,
/// larger first.
pub fn solve_fourth_curvature(a: f64, b: f64, c: f64) -> Result<(f64, f64)> {
    let sum = a + b + c;
    let mut p = a * b + b * c + c * a;
    if p < -1e-12 {
        return Err(Error::ComplexRoots { discriminant: p });
    }
    p = p.max(0.0);
    let root = 2.0 * p.sqrt();
    // d+ · d- = sum² − 4p; take the larger-magnitude root directly.
    let product = a * a + b * b + c * c - 2.0 * (a * b + b * c + c * a);
    let (big, small) = if sum >= 0.0 {
        let big = sum + root;
        (big, if big == 0.0 { 0.0 } else { product / big })
    } else {
        let big = sum - root;
        (big, product / big)
    };
    Ok(if big >= small { (big, small) } else { (small, big) })
}

/// Largest deviation `|⟨c_i, c_j⟩ − 1|` over distinct pairs.
pub fn tangency_residual(c: &[CircleVector]) -> f64 {
    worst_pair(c).map_or(0.0, |(_, _, r)| r)
}

fn worst_pair(c: &[CircleVector]) -> Option<(usize, usize, f64)> {
    let mut worst: Option<(usize, usize, f64)> = None;
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let r = (inner(&c[i], &c[j]) - 1.0).abs();
            if worst.is_none_or(|(_, _, w)| r > w || r.is_nan()) {
                worst = Some((i, j, r));
            }
        }
    }
    worst
}

fn check_normalized(v: &CircleVector, tol: f64) -> Result<()> {
    let self_product = v.self_product();
    let scale = v.max_abs().powi(2).max(1.0);
    if !v.is_finite() {
        return Err(Error::NonFinite);
    }
    if (self_product + 1.0).abs() > tol * scale {
        return Err(Error::NotNormalized { self_product });
    }
    Ok(())
}

/// Four mutually externally tangent disks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadruple {
    c: [CircleVector; 4],
}

impl Quadruple {
    /// Validates normalization and pairwise tangency.
    pub fn new(c: [CircleVector; 4]) -> Result<Self> {
        for v in &c {
            check_normalized(v, QUADRUPLE_NORM_TOL)?;
        }
        if let Some((i, j, residual)) = worst_pair(&c) {
            if !(residual <= TANGENCY_TOL) {
                return Err(Error::NotTangent { i, j, residual });
            }
        }
        Ok(Self { c })
    }

    pub(crate) fn new_unchecked(c: [CircleVector; 4]) -> Self {
        Self { c }
    }

    pub fn members(&self) -> &[CircleVector; 4] {
        &self.c
    }

    pub fn curvatures(&self) -> [f64; 4] {
        self.c.map(|v| v.beta)
    }

    pub fn gramian(&self) -> ConfigurationMatrix {
        gramian(&self.c)
    }

    /// Replaces member `i` by the other disk tangent to the remaining three.
    pub fn reflect(&self, i: usize) -> Result<Self> {
        vieta_reflect(self, i)
    }
}

/// `c_i ← 2(c_j + c_k + c_l) − c_i`, applied to all four coordinates.
pub fn vieta_reflect(q: &Quadruple, i: usize) -> Result<Quadruple> {
    if i >= 4 {
        return Err(Error::InvalidIndex(i));
    }
    let mut c = q.c;
    c[i] = reflected_member(&q.c, i);
    Ok(Quadruple::new_unchecked(c))
}

pub(crate) fn reflected_member(c: &[CircleVector; 4], i: usize) -> CircleVector {
    let others = (0..4)
        .filter(|&j| j != i)
        .fold(CircleVector::default(), |acc, j| acc + c[j]);
    others * 2.0 - c[i]
}

/// The two disks tangent to three mutually tangent disks, larger curvature first.
///
/// The constraints `⟨X, c_i⟩ = 1` cut out a line `P + tN`; the two points of
/// that line with `⟨X, X⟩ = −1` are the solutions.
pub fn solve_fourth_disk(
    c1: &CircleVector,
    c2: &CircleVector,
    c3: &CircleVector,
) -> Result<(CircleVector, CircleVector)> {
    let triple = [*c1, *c2, *c3];
    for v in &triple {
        check_normalized(v, NORMALIZATION_GATE)?;
    }
    // Row i is g·c_i, so that row · X = ⟨c_i, X⟩.
    let rows = triple.map(|c| [-c.xdot, -c.ydot, 0.5 * c.gamma, 0.5 * c.beta]);
    let (p, n) = affine_solution_line(rows, [1.0; 3]).ok_or(Error::DegenerateTriple)?;
    if let Some((i, j, residual)) = worst_pair(&triple) {
        if !(residual <= TANGENCY_TOL) {
            return Err(Error::NotTangent { i, j, residual });
        }
    }
    let (p, n) = (CircleVector::from_array(p), CircleVector::from_array(n));

    let qa = inner(&n, &n);
    let qb = inner(&p, &n);
    let qc = inner(&p, &p) + 1.0;
    let (t1, t2) = stable_quadratic_roots(qa, qb, qc)?;
    let x1 = snap_flat(p + n * t1);
    let x2 = snap_flat(p + n * t2);
    Ok(order_by_curvature(x1, x2))
}

/// Roots of `a t² + 2 b t + c = 0` avoiding cancellation.
fn stable_quadratic_roots(a: f64, b: f64, c: f64) -> Result<(f64, f64)> {
    let mut disc = b * b - a * c;
    let scale = (b * b).max((a * c).abs());
    if disc < 0.0 {
        if disc < -1e-12 * scale.max(1e-300) {
            return Err(Error::ComplexRoots { discriminant: disc });
        }
        disc = 0.0;
    }
    if a == 0.0 {
        return Err(Error::DegenerateTriple);
    }
    let q = -(b + b.signum() * disc.sqrt());
    if q == 0.0 {
        return Ok((0.0, 0.0));
    }
    Ok((q / a, c / q))
}

/// Curvature within rounding noise of zero is a halfplane.
fn snap_flat(mut x: CircleVector) -> CircleVector {
    if x.beta.abs() <= FLAT_TOL * x.max_abs() {
        x.beta = 0.0;
    }
    x
}

fn order_by_curvature(x1: CircleVector, x2: CircleVector) -> (CircleVector, CircleVector) {
    let scale = x1.beta.abs().max(x2.beta.abs()).max(1.0);
    let first_wins = if (x1.beta - x2.beta).abs() > 1e-12 * scale {
        x1.beta > x2.beta
    } else {
        (x1.xdot, x1.ydot) >= (x2.xdot, x2.ydot)
    };
    if first_wins {
        (x1, x2)
    } else {
        (x2, x1)
    }
}

/// Solves the underdetermined 3×4 system `A x = b` by Gauss-Jordan
/// elimination with full pivoting. Returns a particular solution and a
/// null-space direction, or `None` if the rank is below 3.
fn affine_solution_line(mut a: [[f64; 4]; 3], mut b: [f64; 3]) -> Option<([f64; 4], [f64; 4])> {
    let mut perm = [0usize, 1, 2, 3];
    let mut pivots = [0.0f64; 3];

    for k in 0..3 {
        let (mut pr, mut pc, mut best) = (k, k, -1.0);
        for (r, row) in a.iter().enumerate().skip(k) {
            for (c, &value) in row.iter().enumerate().skip(k) {
                if value.abs() > best {
                    (pr, pc, best) = (r, c, value.abs());
                }
            }
        }
        if !(best > 0.0) {
            return None;
        }
        a.swap(k, pr);
        b.swap(k, pr);
        if pc != k {
            for row in a.iter_mut() {
                row.swap(k, pc);
            }
            perm.swap(k, pc);
        }
        pivots[k] = best;

        let inv = 1.0 / a[k][k];
        for value in a[k].iter_mut() {
            *value *= inv;
        }
        b[k] *= inv;
        for r in 0..3 {
            if r != k {
                let factor = a[r][k];
                let pivot_row = a[k];
                for (value, p) in a[r].iter_mut().zip(pivot_row) {
                    *value -= factor * p;
                }
                b[r] -= factor * b[k];
            }
        }
    }

    let largest = pivots.iter().fold(0.0f64, |m, &p| m.max(p));
    let smallest = pivots.iter().fold(f64::INFINITY, |m, &p| m.min(p));
    if smallest < RANK_TOL * largest {
        return None;
    }

    // Column 3 of the permuted system is the free variable.
    let mut particular = [0.0; 4];
    let mut null = [0.0; 4];
    for k in 0..3 {
        particular[perm[k]] = b[k];
        null[perm[k]] = -a[k][3];
    }
    null[perm[3]] = 1.0;
    Some((particular, null))
}

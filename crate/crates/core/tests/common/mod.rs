#![allow(dead_code)]

use inversive::linalg::Matrix;
use inversive::minkowski::{CircleVector, Disk};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Circle with center in [−100, 100]² and |r| log-uniform in [1e-3, 1e3], random sign.
pub fn random_circle(rng: &mut ChaCha8Rng) -> Disk {
    let magnitude = 10f64.powf(rng.gen_range(-3.0..=3.0));
    let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
    Disk::circle(rng.gen_range(-100.0..=100.0), rng.gen_range(-100.0..=100.0), sign * magnitude)
}

pub fn random_halfplane(rng: &mut ChaCha8Rng) -> Disk {
    let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    Disk::halfplane(angle.cos(), angle.sin(), rng.gen_range(-100.0..=100.0))
}

pub fn frobenius(m: &Matrix) -> f64 {
    m.rows().iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

/// Frobenius-norm condition number, an upper bound on the 2-norm one.
pub fn condition_number(m: &Matrix) -> Option<f64> {
    m.inverse().ok().map(|inv| frobenius(m) * frobenius(&inv))
}

/// Euclidean tangency check between two circles: external tangency means the
/// center distance equals |r₁ + r₂| with the radii signed.
pub fn center_gap(a: &Disk, b: &Disk) -> f64 {
    match (a, b) {
        (Disk::Circle { center: p, radius: r1 }, Disk::Circle { center: q, radius: r2 }) => {
            let d = (p[0] - q[0]).hypot(p[1] - q[1]);
            (d - (r1 + r2).abs()).abs()
        }
        _ => panic!("circles only"),
    }
}

/// Curvature quadruples of the reflection tree, computed in exact integer
/// arithmetic. Entry `d` holds the new curvatures created at depth `d`.
pub fn integer_tree_curvatures(seed: [i64; 4], max_depth: u32) -> Vec<Vec<i64>> {
    let mut per_depth = vec![seed.to_vec()];
    let mut frontier: Vec<([i64; 4], Option<usize>)> = vec![(seed, None)];
    for _ in 0..max_depth {
        let mut next = Vec::new();
        let mut created = Vec::new();
        for (q, skip) in frontier {
            for i in 0..4 {
                if Some(i) == skip {
                    continue;
                }
                let others: i64 = (0..4).filter(|&j| j != i).map(|j| q[j]).sum();
                let mut child = q;
                child[i] = 2 * others - q[i];
                created.push(child[i]);
                next.push((child, Some(i)));
            }
        }
        per_depth.push(created);
        frontier = next;
    }
    per_depth
}

/// All disks of the reflection tree up to `max_depth`, with no deduplication.
pub fn raw_tree(seed: [CircleVector; 4], max_depth: u32) -> Vec<(CircleVector, u32)> {
    let mut out: Vec<(CircleVector, u32)> = seed.iter().map(|&v| (v, 0)).collect();
    let mut frontier = vec![(seed, None::<usize>)];
    for depth in 1..=max_depth {
        let mut next = Vec::new();
        for (q, skip) in frontier {
            for i in 0..4 {
                if Some(i) == skip {
                    continue;
                }
                let mut sum = CircleVector::default();
                for j in (0..4).filter(|&j| j != i) {
                    sum = sum + q[j];
                }
                let mut child = q;
                child[i] = sum * 2.0 - q[i];
                out.push((child[i], depth));
                next.push((child, Some(i)));
            }
        }
        frontier = next;
    }
    out
}

/// Number of distinct disks by all-pairs comparison: two disks are the same
/// when every coordinate agrees to `tol · max(1, |β|)`.
pub fn brute_force_distinct(disks: &[CircleVector], tol: f64) -> usize {
    let mut kept: Vec<CircleVector> = Vec::new();
    for v in disks {
        let scale = tol * v.beta.abs().max(1.0);
        if !kept.iter().any(|k| (*k - *v).max_abs() <= scale) {
            kept.push(*v);
        }
    }
    kept.len()
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
#[allow(clippy::needless_range_loop)]
pub fn symmetric_eigenvalues(m: &Matrix) -> Vec<f64> {
    let n = m.size();
    let mut a = m.rows();
    for _sweep in 0..100 {
        let off: f64 = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| a[i][j] * a[i][j]).sum();
        if off < 1e-30 * frobenius(m).powi(2) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

/// 2-norm condition number of a symmetric matrix.
pub fn symmetric_condition(m: &Matrix) -> f64 {
    let ev = symmetric_eigenvalues(m);
    let max = ev.iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let min = ev.iter().fold(f64::INFINITY, |acc, x| acc.min(x.abs()));
    max / min
}

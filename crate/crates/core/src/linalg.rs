//! Dense inversion for the small square matrices that show up as Gramians.

/// Row-major 4×4 matrix.
pub type Mat4 = [[f64; 4]; 4];

use crate::error::{Error, Result};

pub const IDENTITY4: Mat4 = [
    [1.0, 0.0, 0.0, 0.0],
    [0.0, 1.0, 0.0, 0.0],
    [0.0, 0.0, 1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
];

/// Singularity threshold: relative determinant for [`invert4`], reciprocal
/// condition number for [`Matrix::inverse`].
pub const SINGULARITY_TOL: f64 = 1e-12;

/// Square matrix of runtime size, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds a matrix from rows; panics if the rows are ragged or not square.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            assert_eq!(row.len(), n, "matrix rows must be square");
            data.extend_from_slice(row);
        }
        Self { n, data }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        Self::from_fn(self.n, |i, j| (0..self.n).map(|k| self[(i, k)] * other[(k, j)]).sum())
    }

    pub fn scale(&self, s: f64) -> Matrix {
        Self { n: self.n, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Largest absolute entry of `self - other`.
    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting.
    ///
    /// Fails with [`Error::SingularMatrix`] when `‖m‖∞ ‖m⁻¹‖∞ > 1 / SINGULARITY_TOL`.
    pub fn inverse(&self) -> Result<Matrix> {
        let data = invert_in_place(self.n, self.data.clone(), Gate::Condition)?;
        Ok(Self { n: self.n, data })
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.n + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.n + j]
    }
}

impl From<Mat4> for Matrix {
    fn from(m: Mat4) -> Self {
        Self { n: 4, data: m.iter().flatten().copied().collect() }
    }
}

/// Inverts a 4×4 matrix by Gauss-Jordan elimination with partial pivoting.
///
/// Fails with [`Error::SingularMatrix`] when `|det m| < 1e-12 · (max |m_ij|)^4`.
pub fn invert4(m: &Mat4) -> Result<Mat4> {
    let data = invert_in_place(4, m.iter().flatten().copied().collect(), Gate::Determinant)?;
    let mut out = [[0.0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        row.copy_from_slice(&data[i * 4..i * 4 + 4]);
    }
    Ok(out)
}

pub fn mat4_mul(a: &Mat4, b: &Mat4) -> Mat4 {
    let mut out = [[0.0; 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

pub fn mat4_max_abs_diff(a: &Mat4, b: &Mat4) -> f64 {
    a.iter()
        .flatten()
        .zip(b.iter().flatten())
        .fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

#[inline]
fn two_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let z = s - a;
    (s, (a - (s - z)) + (b - z))
}

/// Compensated dot product: as accurate as evaluating in twice the working
/// precision and rounding once. Gramians of large circle vectors cancel
/// heavily, so plain summation loses most of the result.
pub fn accurate_dot(x: &[f64], y: &[f64]) -> f64 {
    let (hi, lo) = accurate_dot_split(x, y);
    hi + lo
}

/// [`accurate_dot`] without the final rounding: `hi + lo` carries roughly
/// twice the working precision.
pub fn accurate_dot_split(x: &[f64], y: &[f64]) -> (f64, f64) {
    debug_assert_eq!(x.len(), y.len());
    let mut hi = 0.0;
    let mut lo = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        let (p, e) = two_product(a, b);
        let (s, q) = two_sum(hi, p);
        hi = s;
        lo += q + e;
    }
    two_sum(hi, lo)
}

/// Entry `(r, s)` of `D (M + M_lo) Dᵀ` for `D` given by its columns, with
/// each triple product split exactly before the compensated sum.
pub(crate) fn sandwich_entry(cols: &[&[f64]], m: &Matrix, m_lo: &Matrix, r: usize, s: usize) -> f64 {
    let n = cols.len();
    let mut left = Vec::with_capacity(3 * n * n);
    let mut right = Vec::with_capacity(3 * n * n);
    for (i, ci) in cols.iter().enumerate() {
        for (j, cj) in cols.iter().enumerate() {
            let (p, e) = two_product(ci[r], m[(i, j)]);
            left.extend([p, e, ci[r] * m_lo[(i, j)]]);
            right.extend([cj[s]; 3]);
        }
    }
    accurate_dot(&left, &right)
}

/// Inverse of `m` as an unevaluated sum `hi + lo`, where `lo` is one
/// Newton correction `hi (I − m hi)` with the residual formed accurately.
pub fn refined_inverse(m: &Matrix) -> Result<(Matrix, Matrix)> {
    refined_inverse_split(m, &Matrix::zeros(m.size()))
}

/// [`refined_inverse`] of the unevaluated sum `m + m_lo`.
pub fn refined_inverse_split(m: &Matrix, m_lo: &Matrix) -> Result<(Matrix, Matrix)> {
    let hi = m.inverse()?;
    let n = m.size();
    let mut defect = Matrix::zeros(n);
    for i in 0..n {
        let row: Vec<f64> = (0..n).flat_map(|k| [m[(i, k)], m_lo[(i, k)]]).collect();
        for j in 0..n {
            let mut left = row.clone();
            let mut right: Vec<f64> = (0..n).flat_map(|k| [hi[(k, j)]; 2]).collect();
            left.push(if i == j { -1.0 } else { 0.0 });
            right.push(1.0);
            defect[(i, j)] = -accurate_dot(&left, &right);
        }
    }
    let lo = hi.mul(&defect);
    Ok((hi, lo))
}

#[derive(Clone, Copy)]
enum Gate {
    Determinant,
    Condition,
}

fn row_sum_norm(n: usize, a: &[f64]) -> f64 {
    a.chunks(n).map(|row| row.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

fn invert_in_place(n: usize, mut a: Vec<f64>, gate: Gate) -> Result<Vec<f64>> {
    let norm = row_sum_norm(n, &a);
    if a.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let scale = a.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if scale == 0.0 {
        return Err(Error::SingularMatrix);
    }
    let mut inv = Matrix::identity(n).data;
    let mut det = 1.0;

    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r, &s| a[r * n + col].abs().total_cmp(&a[s * n + col].abs()))
            .expect("non-empty pivot range");
        let pivot = a[pivot_row * n + col];
        if pivot == 0.0 {
            return Err(Error::SingularMatrix);
        }
        if pivot_row != col {
            for k in 0..n {
                a.swap(col * n + k, pivot_row * n + k);
                inv.swap(col * n + k, pivot_row * n + k);
            }
            det = -det;
        }
        det *= pivot;

        let recip = 1.0 / pivot;
        for k in 0..n {
            a[col * n + k] *= recip;
            inv[col * n + k] *= recip;
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let factor = a[r * n + col];
            if factor == 0.0 {
                continue;
            }
            for k in 0..n {
                a[r * n + k] -= factor * a[col * n + k];
                inv[r * n + k] -= factor * inv[col * n + k];
            }
        }
    }

    let singular = match gate {
        Gate::Determinant => det.abs() < SINGULARITY_TOL * scale.powi(n as i32),
        Gate::Condition => !(norm * row_sum_norm(n, &inv) * SINGULARITY_TOL <= 1.0),
    };
    if singular {
        return Err(Error::SingularMatrix);
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn descartes_f() -> Mat4 {
        let mut f = [[1.0; 4]; 4];
        for (i, row) in f.iter_mut().enumerate() {
            row[i] = -1.0;
        }
        f
    }

    #[test]
    fn accurate_dot_survives_cancellation() {
        let x = [1e16, 1.0, -1e16];
        let y = [1.0, 1.0, 1.0];
        assert_eq!(accurate_dot(&x, &y), 1.0);
        let x = [1e8 + 1.0, -1e8];
        let y = [1e8 - 1.0, 1e8];
        // (1e16 - 1) - 1e16 = -1
        assert_eq!(accurate_dot(&x, &y), -1.0);
    }

    #[test]
    fn identity_inverts_to_itself() {
        assert_eq!(invert4(&IDENTITY4).unwrap(), IDENTITY4);
    }

    #[test]
    fn descartes_gramian_inverse_is_quarter() {
        let f = descartes_f();
        let inv = invert4(&f).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((inv[i][j] - f[i][j] / 4.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn repeated_column_is_singular() {
        let m = [
            [1.0, 1.0, 2.0, 3.0],
            [4.0, 4.0, 5.0, 6.0],
            [7.0, 7.0, 8.0, 10.0],
            [2.0, 2.0, 1.0, 0.5],
        ];
        assert_eq!(invert4(&m), Err(Error::SingularMatrix));
    }

    #[test]
    fn zero_and_nan_rejected() {
        assert_eq!(invert4(&[[0.0; 4]; 4]), Err(Error::SingularMatrix));
        let mut m = IDENTITY4;
        m[2][1] = f64::NAN;
        assert_eq!(invert4(&m), Err(Error::NonFinite));
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        let m = [
            [0.0, 2.0, 0.0, 0.0],
            [3.0, 0.0, 0.0, 0.0],
            [0.0, 0.0, 0.0, 0.5],
            [0.0, 0.0, 0.5, 0.0],
        ];
        let inv = invert4(&m).unwrap();
        assert!(mat4_max_abs_diff(&mat4_mul(&m, &inv), &IDENTITY4) < 1e-15);
    }

    #[test]
    fn dynamic_inverse_matches_fixed() {
        let m = [
            [4.0, -2.0, 1.0, 0.5],
            [-2.0, 5.0, 0.3, 1.0],
            [1.0, 0.3, 3.0, -1.0],
            [0.5, 1.0, -1.0, 2.0],
        ];
        let fixed = Matrix::from(invert4(&m).unwrap());
        let dynamic = Matrix::from(m).inverse().unwrap();
        assert!(fixed.max_abs_diff(&dynamic) < 1e-15);
        let prod = Matrix::from(m).mul(&dynamic);
        assert!(prod.max_abs_diff(&Matrix::identity(4)) < 1e-12);
    }

    #[test]
    fn condition_gate_accepts_spread_spectrum() {
        let m = [
            [1e3, 0.0, 0.0, 0.0],
            [0.0, 1e-3, 0.0, 0.0],
            [0.0, 0.0, 1e-3, 0.0],
            [0.0, 0.0, 0.0, 1e-3],
        ];
        // det = 1e-6 is far below 1e-12 · (1e3)⁴, yet cond = 1e6.
        assert!(matches!(invert4(&m), Err(Error::SingularMatrix)));
        let inv = Matrix::from(m).inverse().unwrap();
        assert!((inv[(0, 0)] - 1e-3).abs() < 1e-18);
        assert!((inv[(3, 3)] - 1e3).abs() < 1e-9);
    }

    #[test]
    fn condition_gate_rejects_repeated_rows() {
        let m = Matrix::from_rows(&[
            vec![-1.0, 1.0, 1.0, 1.0],
            vec![1.0, -1.0, 1.0, 1.0],
            vec![1.0, 1.0, -1.0, 1.0],
            vec![1.0, 1.0, -1.0, 1.0],
        ]);
        assert!(matches!(m.inverse(), Err(Error::SingularMatrix)));
        let near = Matrix::from_fn(3, |i, j| if i == 2 && j == 2 { 1.0 + 1e-14 } else { 1.0 });
        assert!(matches!(near.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn split_dot_carries_the_rounding() {
        let x = [1e16, 1.0, -1e16];
        let y = [1.0, 1.0, 1.0];
        assert_eq!(accurate_dot_split(&x, &y), (1.0, 0.0));
        let (hi, lo) = accurate_dot_split(&[0.1, 0.2], &[1.0, 1.0]);
        assert_eq!(hi, 0.1 + 0.2);
        assert!(lo != 0.0 && lo.abs() < 1e-16);
    }
}

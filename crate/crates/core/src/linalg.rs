//! Small dense/sparse complex matrix helpers.

use nalgebra::DMatrix;
use num_complex::Complex64;

pub type CMatrix = DMatrix<Complex64>;


pub(crate) fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

pub fn identity(n: usize) -> CMatrix {
    CMatrix::identity(n, n)
}

pub fn diag(entries: &[Complex64]) -> CMatrix {
    CMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(entries))
}

/// Kronecker product; the left factor is the most significant index.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    a.kronecker(b)
}

/// Largest entry modulus.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().fold(0.0, |acc, z| acc.max(z.norm()))
}

pub fn residual(a: &CMatrix, b: &CMatrix) -> f64 {
    assert_eq!(a.shape(), b.shape(), "residual of mismatched shapes");
    max_abs(&(a - b))
}

/// Permutation `A⊗B → B⊗A`.
pub fn swap(na: usize, nb: usize) -> CMatrix {
    let mut p = CMatrix::zeros(na * nb, na * nb);
    for i in 0..na {
        for j in 0..nb {
            p[(j * na + i, i * nb + j)] = one();
        }
    }
    p
}

pub fn inverse(m: &CMatrix) -> Option<CMatrix> {
    m.clone().try_inverse()
}

/// Matrix power by repeated multiplication.
pub fn pow(m: &CMatrix, n: usize) -> CMatrix {
    let mut out = identity(m.nrows());
    for _ in 0..n {
        out = &out * m;
    }
    out
}

/// Coordinate-list sparse matrix used for applying local operators.
#[derive(Clone, Debug)]
pub struct Sparse {
    pub rows: usize,
    pub cols: usize,
    /// `(row, col, value)` triples.
    pub entries: Vec<(usize, usize, Complex64)>,
}

impl Sparse {
    pub fn from_dense(m: &CMatrix, cutoff: f64) -> Self {
        let mut entries = Vec::new();
        for j in 0..m.ncols() {
            for i in 0..m.nrows() {
                let z = m[(i, j)];
                if z.norm() > cutoff {
                    entries.push((i, j, z));
                }
            }
        }
        Sparse {
            rows: m.nrows(),
            cols: m.ncols(),
            entries,
        }
    }
}

/// If `m` is `s·Id` up to `residual`, return `(s, residual)`.
pub fn scalar_part(m: &CMatrix) -> (Complex64, f64) {
    let n = m.nrows();
    let s = (0..n).map(|i| m[(i, i)]).sum::<Complex64>() / n as f64;
    let res = residual(m, &(identity(n) * s));
    (s, res)
}

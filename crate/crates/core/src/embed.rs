//! The complex symplectic embedding `z + w j -> [[z, w], [-conj(w), conj(z)]]`.
//!
//! Two layouts are provided. The blocked layout `[[Z, W], [-conj(W), conj(Z)]]`
//! is the one used throughout the crate; the entrywise layout places the 2x2
//! cell of each entry in place. A fixed permutation links the two.

use crate::cla::CMatrix;
use crate::error::{Error, Result};
use crate::qmat::QMatrix;
use crate::quat::{Quaternion, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    Entrywise,
    Blocked,
}

/// A `2m x 2n` complex matrix together with the source dimensions `(m, n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddedMatrix {
    pub matrix: CMatrix,
    pub m: usize,
    pub n: usize,
    pub layout: Layout,
}

/// Relative tolerance on `||X - tau(X)||_F / ||X||_F` for range membership.
pub const RANGE_TOL: f64 = 1e-10;

fn cell(q: Quaternion) -> [[C64; 2]; 2] {
    let (z, w) = (q.z(), q.w());
    [[z, w], [-w.conj(), z.conj()]]
}

pub fn phi_entrywise(a: &QMatrix) -> EmbeddedMatrix {
    let (m, n) = a.dims();
    let mut x = CMatrix::zeros(2 * m, 2 * n);
    for i in 0..m {
        for j in 0..n {
            let c = cell(a[(i, j)]);
            for (r, row) in c.iter().enumerate() {
                for (s, &v) in row.iter().enumerate() {
                    x[(2 * i + r, 2 * j + s)] = v;
                }
            }
        }
    }
    EmbeddedMatrix {
        matrix: x,
        m,
        n,
        layout: Layout::Entrywise,
    }
}

pub fn phi_blocked(a: &QMatrix) -> EmbeddedMatrix {
    let (m, n) = a.dims();
    let mut x = CMatrix::zeros(2 * m, 2 * n);
    for i in 0..m {
        for j in 0..n {
            let c = cell(a[(i, j)]);
            x[(i, j)] = c[0][0];
            x[(i, n + j)] = c[0][1];
            x[(m + i, j)] = c[1][0];
            x[(m + i, n + j)] = c[1][1];
        }
    }
    EmbeddedMatrix {
        matrix: x,
        m,
        n,
        layout: Layout::Blocked,
    }
}

/// Applies the blocked embedding to each `s x t` block of a block matrix, so
/// block `(a, b)` of the result is the `2s x 2t` embedding of block `(a, b)`.
pub fn phi_blockwise(a: &QMatrix, s: usize, t: usize) -> Result<CMatrix> {
    let (rows, cols) = a.dims();
    if s == 0 || t == 0 || rows % s != 0 || cols % t != 0 {
        return Err(Error::InvalidArgument(format!(
            "{rows}x{cols} matrix is not tiled by {s}x{t} blocks"
        )));
    }
    let mut x = CMatrix::zeros(2 * rows, 2 * cols);
    for i in 0..rows {
        for j in 0..cols {
            let (bi, ri) = (i / s, i % s);
            let (bj, rj) = (j / t, j % t);
            let c = cell(a[(i, j)]);
            let r0 = 2 * s * bi;
            let c0 = 2 * t * bj;
            x[(r0 + ri, c0 + rj)] = c[0][0];
            x[(r0 + ri, c0 + t + rj)] = c[0][1];
            x[(r0 + s + ri, c0 + rj)] = c[1][0];
            x[(r0 + s + ri, c0 + t + rj)] = c[1][1];
        }
    }
    Ok(x)
}

/// The permutation `P_n = sum_i e_{2i-1} e_i^* + e_{2i} e_{n+i}^*` (1-based),
/// satisfying `P_m^* phi_entrywise(A) P_n = phi_blocked(A)`.
pub fn perm_matrix(n: usize) -> CMatrix {
    let mut p = CMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        p[(2 * i, i)] = C64::new(1.0, 0.0);
        p[(2 * i + 1, n + i)] = C64::new(1.0, 0.0);
    }
    p
}

fn check_even(x: &CMatrix) -> Result<(usize, usize)> {
    let (r, c) = x.shape();
    if r % 2 != 0 || c % 2 != 0 {
        return Err(Error::OddDimension { rows: r, cols: c });
    }
    Ok((r / 2, c / 2))
}

/// `tau(X) = -J_m conj(X) J_n` with `J_k = [[0, I_k], [-I_k, 0]]`; its fixed
/// points are exactly the blocked embeddings.
pub fn tau(x: &CMatrix) -> Result<CMatrix> {
    let (m, n) = check_even(x)?;
    // J_m Y J_n maps block [[A, B], [C, D]] to [[-D, C], [B, -A]].
    Ok(CMatrix::from_fn(2 * m, 2 * n, |i, j| {
        let (top, left) = (i < m, j < n);
        let (ii, jj) = (i % m, j % n);
        let src = |r: usize, c: usize| x[(r, c)].conj();
        // -J conj(X) J
        match (top, left) {
            (true, true) => src(m + ii, n + jj),
            (true, false) => -src(m + ii, jj),
            (false, true) => -src(ii, n + jj),
            (false, false) => src(ii, jj),
        }
    }))
}

/// Real-linear projector `(X + tau(X)) / 2` onto the range of the blocked embedding.
pub fn range_project(x: &CMatrix) -> Result<EmbeddedMatrix> {
    let (m, n) = check_even(x)?;
    let t = tau(x)?;
    let matrix = CMatrix::from_fn(2 * m, 2 * n, |i, j| 0.5 * (x[(i, j)] + t[(i, j)]));
    Ok(EmbeddedMatrix {
        matrix,
        m,
        n,
        layout: Layout::Blocked,
    })
}

/// `||X - tau(X)||_F / ||X||_F` (zero for the zero matrix).
pub fn range_residual(x: &CMatrix) -> Result<f64> {
    let t = tau(x)?;
    let norm = x.frob_norm();
    if norm == 0.0 {
        return Ok(0.0);
    }
    Ok(x.sub(&t)?.frob_norm() / norm)
}

/// Inverse of the blocked embedding on its range; reads `Z` and `W` from the top block row.
pub fn phi_pullback(x: &EmbeddedMatrix) -> Result<QMatrix> {
    let mat = match x.layout {
        Layout::Blocked => x.matrix.clone(),
        Layout::Entrywise => {
            let pm = perm_matrix(x.m);
            let pn = perm_matrix(x.n);
            pm.adjoint().matmul(&x.matrix)?.matmul(&pn)?
        }
    };
    let residual = range_residual(&mat)?;
    if residual > RANGE_TOL {
        return Err(Error::NotInRange { residual });
    }
    let (m, n) = (x.m, x.n);
    Ok(QMatrix::from_fn(m, n, |i, j| {
        Quaternion::from_slices(mat[(i, j)], mat[(i, n + j)])
    }))
}

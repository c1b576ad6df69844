//! Dense quaternion matrices. Spectral quantities (singular values, rank,
//! Schatten norms, canonical eigenvalues) are computed through the complex
//! embedding in [`crate::embed`].

use std::ops::{Index, IndexMut};

use crate::cla::{self, CMatrix};
use crate::embed;
use crate::error::{Error, Result};
use crate::quat::{Quaternion, C64};

/// Multilevel block structure: `rows = s * prod(nvec)`, `cols = t * prod(nvec)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockShape {
    pub nvec: Vec<usize>,
    pub s: usize,
    pub t: usize,
}

impl BlockShape {
    pub fn levels(&self) -> usize {
        self.nvec.len()
    }

    /// `N = prod(nvec)`.
    pub fn total(&self) -> usize {
        self.nvec.iter().product()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
    shape: Option<BlockShape>,
}

/// Canonical eigenvalues and singular values of a quaternion matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct QSpectrum {
    pub canonical_eigs: Vec<C64>,
    pub singular_values: Vec<f64>,
}

/// Relative tolerance for the conjugate-pair matching of embedded eigenvalues.
pub const PAIRING_TOL: f64 = 1e-8;

/// Relative singular value cutoff used for numerical rank.
pub const RANK_TOL: f64 = 1e-12;

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Quaternion::ZERO; rows * cols],
            shape: None,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Quaternion::ONE;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Quaternion>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(QMatrix {
            rows,
            cols,
            data,
            shape: None,
        })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Quaternion,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        QMatrix {
            rows,
            cols,
            data,
            shape: None,
        }
    }

    pub fn diag(d: &[Quaternion]) -> Self {
        let mut m = QMatrix::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    /// `Z + W j` from complex slice components.
    pub fn from_slices(z: &CMatrix, w: &CMatrix) -> Result<Self> {
        if z.shape() != w.shape() {
            return Err(Error::DimensionMismatch {
                op: "from_slices",
                left: z.shape(),
                right: w.shape(),
            });
        }
        Ok(QMatrix::from_fn(z.rows(), z.cols(), |i, j| {
            Quaternion::from_slices(z[(i, j)], w[(i, j)])
        }))
    }

    /// Embeds a complex matrix with zero `j` component.
    pub fn from_complex(z: &CMatrix) -> Self {
        QMatrix::from_fn(z.rows(), z.cols(), |i, j| {
            Quaternion::from_complex(z[(i, j)])
        })
    }

    /// Attaches block metadata; dimensions must agree.
    pub fn with_shape(mut self, shape: BlockShape) -> Result<Self> {
        let n = shape.total();
        if self.rows != n * shape.s || self.cols != n * shape.t {
            return Err(Error::InvalidArgument(format!(
                "block shape {:?} (s={}, t={}) does not fit a {}x{} matrix",
                shape.nvec, shape.s, shape.t, self.rows, self.cols
            )));
        }
        self.shape = Some(shape);
        Ok(self)
    }

    pub fn block_shape(&self) -> Option<&BlockShape> {
        self.shape.as_ref()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Quaternion] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn adjoint(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.dims(),
                right: other.dims(),
            });
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == Quaternion::ZERO {
                    continue;
                }
                for (o, &b) in orow.iter_mut().zip(other.row(k)) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &QMatrix) -> Result<QMatrix> {
        self.zip(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &QMatrix) -> Result<QMatrix> {
        self.zip(other, "sub", |a, b| a - b)
    }

    fn zip(
        &self,
        other: &QMatrix,
        op: &'static str,
        f: impl Fn(Quaternion, Quaternion) -> Quaternion,
    ) -> Result<QMatrix> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.dims(),
                right: other.dims(),
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Ok(QMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
            shape: self.shape.clone(),
        })
    }

    pub fn scale(&self, a: f64) -> QMatrix {
        self.map(|q| q.scale(a))
    }

    /// Left scalar multiplication `a A` by a slice scalar.
    pub fn lmul_complex(&self, a: C64) -> QMatrix {
        self.map(|q| q.lmul_complex(a))
    }

    pub fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> QMatrix {
        QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&q| f(q)).collect(),
            shape: self.shape.clone(),
        }
    }

    /// Entrywise slice split `A = Z + W j`.
    pub fn slice_split(&self) -> (CMatrix, CMatrix) {
        let z = CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].z());
        let w = CMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].w());
        (z, w)
    }

    pub fn submatrix(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> QMatrix {
        QMatrix::from_fn(nr, nc, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &QMatrix) {
        for i in 0..block.rows {
            let src = block.row(i);
            let start = (r0 + i) * self.cols + c0;
            self.data[start..start + block.cols].copy_from_slice(src);
        }
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &QMatrix) -> Result<f64> {
        Ok(self
            .sub(other)?
            .data
            .iter()
            .map(|q| q.norm())
            .fold(0.0, f64::max))
    }

    /// `||A - A*||_F`.
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut acc = 0.0;
        for i in 0..self.rows {
            for j in 0..self.cols {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Quaternion-Hermitian within `tol` relative to the Frobenius norm.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.is_square() && self.hermitian_defect() <= tol * self.frob_norm()
    }

    /// Singular values, nonincreasing, `min(rows, cols)` of them. Each appears
    /// twice among the singular values of the embedding; one copy of each pair is kept.
    pub fn singular_values(&self) -> Result<Vec<f64>> {
        let sv = cla::complex_svd_values(&embed::phi_blocked(self).matrix)?;
        Ok(sv.chunks(2).map(|p| p[0]).collect())
    }

    /// Quaternionic rank: half the numerical rank of the embedding.
    pub fn rank_h(&self) -> Result<usize> {
        let sv = cla::complex_svd_values(&embed::phi_blocked(self).matrix)?;
        let Some(&top) = sv.first() else { return Ok(0) };
        let cutoff = (2 * self.rows.max(self.cols)) as f64 * top * RANK_TOL;
        let rank_c = sv.iter().filter(|&&s| s > cutoff).count();
        Ok(rank_c.div_ceil(2))
    }

    /// Schatten `p`-norm, `p` in `[1, inf]` (`f64::INFINITY` for the spectral norm).
    pub fn schatten_norm(&self, p: f64) -> Result<f64> {
        check_schatten_p(p)?;
        Ok(schatten_of(&self.singular_values()?, p))
    }

    /// Canonical eigenvalues: one representative with nonnegative imaginary
    /// part from each conjugate pair of embedded eigenvalues.
    pub fn canonical_eigenvalues(&self) -> Result<Vec<C64>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let phi = embed::phi_blocked(self).matrix;
        if self.is_hermitian(1e-12) {
            let ev = cla::herm_eig(&phi)?;
            return Ok(ev
                .chunks(2)
                .map(|p| C64::new(0.5 * (p[0] + p[1]), 0.0))
                .collect());
        }
        let ev = cla::general_eig(&phi)?;
        pair_conjugates(&ev, PAIRING_TOL)
    }

    pub fn spectrum(&self) -> Result<QSpectrum> {
        Ok(QSpectrum {
            canonical_eigs: self.canonical_eigenvalues()?,
            singular_values: self.singular_values()?,
        })
    }
}

pub(crate) fn check_schatten_p(p: f64) -> Result<()> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidSchattenP(p));
    }
    Ok(())
}

/// `(sum s_i^p)^(1/p)`, or the maximum for `p = inf`.
pub fn schatten_of(sv: &[f64], p: f64) -> f64 {
    if p.is_infinite() {
        return sv.iter().copied().fold(0.0, f64::max);
    }
    let top = sv.iter().copied().fold(0.0, f64::max);
    if top == 0.0 {
        return 0.0;
    }
    top * sv
        .iter()
        .map(|s| (s / top).powf(p))
        .sum::<f64>()
        .powf(1.0 / p)
}

/// Greedy conjugate pairing of a conjugation-symmetric list of `2n` values.
/// Values are sorted by `(Re, |Im|)`; each unmatched value is paired with the
/// unmatched candidate `w` minimising `|z - conj(w)|`. Returns `n` values with
/// `Im >= 0`, snapping `|Im| < tol` to the real axis.
pub fn pair_conjugates(values: &[C64], rel_tol: f64) -> Result<Vec<C64>> {
    if values.len() % 2 != 0 {
        return Err(Error::PairingFailure {
            mismatch: f64::INFINITY,
            tol: 0.0,
        });
    }
    let radius = values.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let tol = rel_tol * radius.max(f64::MIN_POSITIVE);
    let mut sorted: Vec<C64> = values.to_vec();
    sorted.sort_by(|a, b| {
        a.re.total_cmp(&b.re)
            .then(a.im.abs().total_cmp(&b.im.abs()))
            .then(a.im.total_cmp(&b.im))
    });
    let mut used = vec![false; sorted.len()];
    let mut out = Vec::with_capacity(sorted.len() / 2);
    let mut worst: f64 = 0.0;
    for i in 0..sorted.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let z = sorted[i];
        let mut best: Option<(usize, f64)> = None;
        for (j, w) in sorted.iter().enumerate().skip(i + 1) {
            if used[j] {
                continue;
            }
            // Candidates are sorted by real part; stop once they are too far right.
            if w.re - z.re > (best.map_or(f64::INFINITY, |b| b.1)).min(radius + tol) {
                break;
            }
            let gap = (z - w.conj()).norm();
            if best.map_or(true, |b| gap < b.1) {
                best = Some((j, gap));
            }
        }
        let Some((j, gap)) = best else {
            return Err(Error::PairingFailure {
                mismatch: f64::INFINITY,
                tol,
            });
        };
        used[j] = true;
        worst = worst.max(gap);
        let mid = 0.5 * (z + sorted[j].conj());
        let im = mid.im.abs();
        out.push(C64::new(mid.re, if im < tol { 0.0 } else { im }));
    }
    if worst > tol {
        return Err(Error::PairingFailure {
            mismatch: worst,
            tol,
        });
    }
    Ok(out)
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    fn index(&self, (i, j): (usize, usize)) -> &Quaternion {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Quaternion {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

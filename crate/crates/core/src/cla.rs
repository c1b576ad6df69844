//! Dense complex matrices and the three eigen/singular value kernels the
//! rest of the crate relies on:
//!
//! * [`herm_eig`]: Householder tridiagonalization followed by implicit QL.
//! * [`complex_svd_values`]: Householder bidiagonalization; the real
//!   bidiagonal is solved through its Golub-Kahan tridiagonal form.
//! * [`general_eig`]: Householder reduction to Hessenberg form followed by
//!   single-shift complex QR with Wilkinson shifts.
//!
//! Only values are computed, never vectors.

use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};
use crate::quat::C64;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// Row-major dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: vec![ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidArgument(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(CMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    pub fn diag(d: &[C64]) -> Self {
        let mut m = CMatrix::zeros(d.len(), d.len());
        for (i, &x) in d.iter().enumerate() {
            m[(i, i)] = x;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn scale(&self, a: C64) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|z| a * z).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn add(&self, other: &CMatrix) -> Result<CMatrix> {
        self.check_same(other, "add")?;
        Ok(self.zip(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &CMatrix) -> Result<CMatrix> {
        self.check_same(other, "sub")?;
        Ok(self.zip(other, |a, b| a - b))
    }

    fn zip(&self, other: &CMatrix, f: impl Fn(C64, C64) -> C64) -> CMatrix {
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f(a, b))
            .collect();
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    fn check_same(&self, other: &CMatrix, op: &'static str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "matmul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for (k, &a) in self.row(i).iter().enumerate() {
                if a == ZERO {
                    continue;
                }
                for (o, &b) in orow.iter_mut().zip(other.row(k)) {
                    *o += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Copies the block `rows r0.., cols c0..` of size `nr x nc`.
    pub fn submatrix(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> CMatrix {
        CMatrix::from_fn(nr, nc, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &CMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)];
            }
        }
    }

    pub fn frob_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// `||H - H*||_F`.
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let n = self.rows;
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                acc += (self[(i, j)] - self[(j, i)].conj()).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &CMatrix) -> CMatrix {
        let (r, c) = other.shape();
        CMatrix::from_fn(self.rows * r, self.cols * c, |i, j| {
            self[(i / r, j / c)] * other[(i % r, j % c)]
        })
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

/// Relative Hermitian tolerance accepted by [`herm_eig`].
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Householder vector for `x`: returns `(v, beta, alpha)` with
/// `(I - beta v v*) x = alpha e_1`. `beta = 0` when `x` is already reduced.
fn householder(x: &[C64]) -> (Vec<C64>, f64, C64) {
    let amax = x.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if amax == 0.0 || !amax.is_finite() {
        return (x.to_vec(), 0.0, x.first().copied().unwrap_or(ZERO));
    }
    // Work with x / amax so squared moduli neither underflow nor overflow.
    let mut v: Vec<C64> = x.iter().map(|z| z / amax).collect();
    let tail = v[1..].iter().map(|z| z.norm_sqr()).sum::<f64>();
    if tail == 0.0 {
        return (x.to_vec(), 0.0, x[0]);
    }
    let norm = (v[0].norm_sqr() + tail).sqrt();
    let phase = if v[0].norm() > 0.0 {
        v[0] / v[0].norm()
    } else {
        ONE
    };
    v[0] += phase * norm;
    let vnorm2 = v.iter().map(|z| z.norm_sqr()).sum::<f64>();
    (v, 2.0 / vnorm2, -phase * (norm * amax))
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn herm_eig(h: &CMatrix) -> Result<Vec<f64>> {
    if !h.is_square() {
        return Err(Error::NotSquare {
            rows: h.rows,
            cols: h.cols,
        });
    }
    let scale = h.frob_norm();
    let defect = h.hermitian_defect();
    if defect > HERMITIAN_TOL * scale {
        return Err(Error::NotHermitian {
            what: "herm_eig input",
            residual: defect / scale.max(f64::MIN_POSITIVE),
        });
    }
    let (mut d, mut e) = tridiagonalize(h);
    tridiagonal_ql(&mut d, &mut e)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Reduces a Hermitian matrix to a real symmetric tridiagonal one with the same
/// eigenvalues. Returns the diagonal and the sub-diagonal (length n, last entry 0).
fn tridiagonalize(h: &CMatrix) -> (Vec<f64>, Vec<f64>) {
    let n = h.rows;
    // Symmetrize so rounding noise in the input does not leak into the result.
    let mut a = CMatrix::from_fn(n, n, |i, j| 0.5 * (h[(i, j)] + h[(j, i)].conj()));
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let mut p = vec![ZERO; n];
    for k in 0..n.saturating_sub(1) {
        let m = n - k - 1;
        let x: Vec<C64> = (0..m).map(|i| a[(k + 1 + i, k)]).collect();
        let (v, beta, alpha) = householder(&x);
        e[k] = alpha.norm();
        if beta == 0.0 {
            continue;
        }
        // p = beta * A22 v, K = beta/2 * v* p, q = p - K v, A22 -= v q* + q v*.
        for i in 0..m {
            let row = &a.data[(k + 1 + i) * n + k + 1..(k + 2 + i) * n];
            let s: C64 = row.iter().zip(&v).map(|(x, y)| x * y).sum();
            p[i] = s * beta;
        }
        let vp: C64 = v.iter().zip(&p[..m]).map(|(x, y)| x.conj() * y).sum();
        let kk = vp * (0.5 * beta);
        for i in 0..m {
            p[i] -= kk * v[i];
        }
        for i in 0..m {
            let (vi, qi) = (v[i], p[i]);
            let row = &mut a.data[(k + 1 + i) * n + k + 1..(k + 2 + i) * n];
            for ((x, &vj), &qj) in row.iter_mut().zip(&v).zip(&p[..m]) {
                *x -= vi * qj.conj() + qi * vj.conj();
            }
        }
    }
    for i in 0..n {
        d[i] = a[(i, i)].re;
    }
    e[n.saturating_sub(1)] = 0.0;
    (d, e)
}

/// Implicit QL on a real symmetric tridiagonal matrix, eigenvalues only.
/// `d` is overwritten with the eigenvalues; `e[i]` couples `i` and `i+1`.
fn tridiagonal_ql(d: &mut [f64], e: &mut [f64]) -> Result<()> {
    let n = d.len();
    if n == 0 {
        return Ok(());
    }
    const MAX_ITER: usize = 60;
    let anorm = d
        .iter()
        .zip(e.iter())
        .map(|(x, y)| x.abs() + y.abs())
        .fold(0.0, f64::max);
    let floor = f64::EPSILON * 0.5 * anorm;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd || e[m].abs() <= floor {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > MAX_ITER {
                return Err(Error::NoConvergence {
                    algorithm: "tridiagonal QL",
                    iterations: MAX_ITER,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut underflow = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Singular values, nonincreasing, `min(rows, cols)` of them.
pub fn complex_svd_values(a: &CMatrix) -> Result<Vec<f64>> {
    let work = if a.rows >= a.cols {
        a.clone()
    } else {
        a.adjoint()
    };
    let n = work.cols;
    if n == 0 {
        return Ok(Vec::new());
    }
    let (diag, sup) = bidiagonalize(work);
    // Golub-Kahan form: zero diagonal, off-diagonal d1, e1, d2, e2, ..., dn.
    let mut off = Vec::with_capacity(2 * n);
    for i in 0..n {
        off.push(diag[i]);
        if i + 1 < n {
            off.push(sup[i]);
        }
    }
    off.push(0.0);
    let mut d = vec![0.0; 2 * n];
    tridiagonal_ql(&mut d, &mut off)?;
    d.sort_by(|x, y| y.total_cmp(x));
    let mut sv: Vec<f64> = d[..n].iter().map(|x| x.max(0.0)).collect();
    sv.sort_by(|x, y| y.total_cmp(x));
    Ok(sv)
}

/// Householder bidiagonalization of a tall matrix (`rows >= cols`). Returns the
/// moduli of the diagonal and super-diagonal; a diagonal unitary scaling makes
/// the complex bidiagonal real without changing singular values.
fn bidiagonalize(mut a: CMatrix) -> (Vec<f64>, Vec<f64>) {
    let (m, n) = a.shape();
    let mut diag = vec![0.0; n];
    let mut sup = vec![0.0; n.saturating_sub(1)];
    let mut w = vec![ZERO; n];
    let mut z = vec![ZERO; m];
    for k in 0..n {
        // Left reflector on column k, rows k..m.
        let x: Vec<C64> = (k..m).map(|i| a[(i, k)]).collect();
        let (u, beta, alpha) = householder(&x);
        diag[k] = alpha.norm();
        if beta != 0.0 {
            // w = u* A[k.., k..]
            for wj in w[k..].iter_mut() {
                *wj = ZERO;
            }
            for (ii, &ui) in u.iter().enumerate() {
                let uc = ui.conj();
                let row = &a.data[(k + ii) * n + k..(k + ii + 1) * n];
                for (wj, &r) in w[k..].iter_mut().zip(row) {
                    *wj += uc * r;
                }
            }
            for (ii, &ui) in u.iter().enumerate() {
                let f = ui * beta;
                let row = &mut a.data[(k + ii) * n + k..(k + ii + 1) * n];
                for (r, &wj) in row.iter_mut().zip(&w[k..]) {
                    *r -= f * wj;
                }
            }
        }
        if k + 1 >= n {
            continue;
        }
        // Right reflector on row k, columns k+1..n, applied as A (I - beta v v*).
        let x: Vec<C64> = (k + 1..n).map(|j| a[(k, j)].conj()).collect();
        let (v, beta, alpha) = householder(&x);
        sup[k] = alpha.norm();
        if beta == 0.0 {
            continue;
        }
        for i in k..m {
            let row = &a.data[i * n + k + 1..(i + 1) * n];
            z[i] = row.iter().zip(&v).map(|(r, vj)| r * vj).sum();
        }
        for i in k..m {
            let f = z[i] * beta;
            let row = &mut a.data[i * n + k + 1..(i + 1) * n];
            for (r, vj) in row.iter_mut().zip(&v) {
                *r -= f * vj.conj();
            }
        }
    }
    (diag, sup)
}

/// Eigenvalues of a general square complex matrix, in the order they deflate.
pub fn general_eig(a: &CMatrix) -> Result<Vec<C64>> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let n = a.rows;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut h = hessenberg(a.clone());
    let mut eig = vec![ZERO; n];
    let max_iter = 40 * n;
    let mut total = 0;
    let mut hi = n - 1;
    let mut iter_here = 0;
    let norm = h.frob_norm().max(f64::MIN_POSITIVE);
    loop {
        // Find the start of the active unreduced block ending at `hi`.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let scale = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            let scale = if scale == 0.0 { norm } else { scale };
            if sub <= f64::EPSILON * scale {
                h[(lo, lo - 1)] = ZERO;
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eig[hi] = h[(hi, hi)];
            iter_here = 0;
            if hi == 0 {
                break;
            }
            hi -= 1;
            continue;
        }
        total += 1;
        iter_here += 1;
        if total > max_iter {
            return Err(Error::NoConvergence {
                algorithm: "Hessenberg QR",
                iterations: max_iter,
            });
        }
        let shift = if iter_here % 11 == 10 {
            // Exceptional shift to break cycles.
            h[(hi, hi)] + C64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };
        qr_sweep(&mut h, lo, hi, shift);
    }
    Ok(eig)
}

fn wilkinson_shift(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let m1 = (a + d) * 0.5 + disc;
    let m2 = (a + d) * 0.5 - disc;
    if (m1 - d).norm() <= (m2 - d).norm() {
        m1
    } else {
        m2
    }
}

/// Complex Givens rotation `G = [[c, s], [-conj(s), c]]` with `G [a; b] = [r; 0]`.
fn givens(a: C64, b: C64) -> (f64, C64) {
    let an = a.norm();
    let r = an.hypot(b.norm());
    if r == 0.0 {
        return (1.0, ZERO);
    }
    if an == 0.0 {
        return (0.0, ONE);
    }
    let c = an / r;
    let s = (a / an) * b.conj() / r;
    (c, s)
}

/// One explicit shifted QR step on the active window `lo..=hi`.
fn qr_sweep(h: &mut CMatrix, lo: usize, hi: usize, mu: C64) {
    for i in lo..=hi {
        h[(i, i)] -= mu;
    }
    let mut rots = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
        for j in k..=hi {
            let x = h[(k, j)];
            let y = h[(k + 1, j)];
            h[(k, j)] = x * c + s * y;
            h[(k + 1, j)] = -s.conj() * x + y * c;
        }
        rots.push((c, s));
    }
    for (idx, &(c, s)) in rots.iter().enumerate() {
        let k = lo + idx;
        for i in lo..=(k + 1).min(hi) {
            let x = h[(i, k)];
            let y = h[(i, k + 1)];
            h[(i, k)] = x * c + y * s.conj();
            h[(i, k + 1)] = -x * s + y * c;
        }
    }
    for i in lo..=hi {
        h[(i, i)] += mu;
    }
}

/// Unitary reduction to upper Hessenberg form.
fn hessenberg(mut a: CMatrix) -> CMatrix {
    let n = a.rows;
    for k in 0..n.saturating_sub(2) {
        let x: Vec<C64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        let (v, beta, _) = householder(&x);
        if beta == 0.0 {
            continue;
        }
        // Left: rows k+1.., columns k..
        let mut w = vec![ZERO; n];
        for (ii, &vi) in v.iter().enumerate() {
            let vc = vi.conj();
            let row = &a.data[(k + 1 + ii) * n + k..(k + 2 + ii) * n];
            for (wj, &r) in w[k..].iter_mut().zip(row) {
                *wj += vc * r;
            }
        }
        for (ii, &vi) in v.iter().enumerate() {
            let f = vi * beta;
            let row = &mut a.data[(k + 1 + ii) * n + k..(k + 2 + ii) * n];
            for (r, &wj) in row.iter_mut().zip(&w[k..]) {
                *r -= f * wj;
            }
        }
        // Right: all rows, columns k+1..
        for i in 0..n {
            let row = &a.data[i * n + k + 1..(i + 1) * n];
            let zi: C64 = row.iter().zip(&v).map(|(r, vj)| r * vj).sum();
            let f = zi * beta;
            let row = &mut a.data[i * n + k + 1..(i + 1) * n];
            for (r, vj) in row.iter_mut().zip(&v) {
                *r -= f * vj.conj();
            }
        }
        for i in k + 2..n {
            a[(i, k)] = ZERO;
        }
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn herm_eig_examples() {
        let h = CMatrix::from_vec(
            2,
            2,
            vec![c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)],
        )
        .unwrap();
        let ev = herm_eig(&h).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-14 && (ev[1] - 3.0).abs() < 1e-14);
        assert_eq!(herm_eig(&CMatrix::identity(4)).unwrap(), vec![1.0; 4]);
        assert_eq!(herm_eig(&CMatrix::diag(&[c(5.0, 0.0)])).unwrap(), vec![5.0]);
    }

    #[test]
    fn herm_eig_rejects_non_hermitian() {
        let h = CMatrix::from_vec(
            2,
            2,
            vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
        )
        .unwrap();
        assert!(matches!(herm_eig(&h), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn svd_examples() {
        let a = CMatrix::from_vec(
            2,
            2,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let sv = complex_svd_values(&a).unwrap();
        assert!((sv[0] - 1.0).abs() < 1e-15 && sv[1].abs() < 1e-15);
        let sv = complex_svd_values(&CMatrix::diag(&[c(-2.0, 0.0), c(0.0, 3.0)])).unwrap();
        assert!((sv[0] - 3.0).abs() < 1e-15 && (sv[1] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn general_eig_examples() {
        let a = CMatrix::from_vec(
            2,
            2,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0), c(0.0, 0.0)],
        )
        .unwrap();
        let mut ev = general_eig(&a).unwrap();
        ev.sort_by(|x, y| x.im.total_cmp(&y.im));
        assert!((ev[0] - c(0.0, -1.0)).norm() < 1e-14);
        assert!((ev[1] - c(0.0, 1.0)).norm() < 1e-14);

        let u = CMatrix::from_vec(
            3,
            3,
            vec![
                c(1.0, 1.0),
                c(2.0, 0.0),
                c(0.0, 3.0),
                c(0.0, 0.0),
                c(-2.0, 0.5),
                c(1.0, 1.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                c(4.0, 0.0),
            ],
        )
        .unwrap();
        let mut ev = general_eig(&u).unwrap();
        ev.sort_by(|x, y| x.re.total_cmp(&y.re));
        assert!((ev[0] - c(-2.0, 0.5)).norm() < 1e-14);
        assert!((ev[1] - c(1.0, 1.0)).norm() < 1e-14);
        assert!((ev[2] - c(4.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn kron_shape() {
        let a = CMatrix::identity(2);
        let b = CMatrix::from_fn(2, 3, |i, j| c((i + j) as f64, 0.0));
        let k = a.kron(&b);
        assert_eq!(k.shape(), (4, 6));
        assert_eq!(k[(3, 5)], c(3.0, 0.0));
        assert_eq!(k[(0, 5)], c(0.0, 0.0));
    }
}

//! Multilevel block Toeplitz matrices `T_n(F)` with block `(a, b)` equal to the
//! sandwich Fourier coefficient of `F` at `a - b`, multi-indices ordered
//! lexicographically (last level fastest).

use std::io::{self, Write};

use crate::cla::CMatrix;
use crate::embed;
use crate::error::{Error, Result};
use crate::qmat::{check_schatten_p, BlockShape, QMatrix};
use crate::symbol::{EmbeddedSymbol, KernelPartition, MultiIndex, SymbolSpec, TrigPoly};

/// Tolerance of the adjoint identities.
pub const ADJOINT_TOL: f64 = 1e-10;

/// `Lambda_n = prod {0, .., n_l - 1}` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiIndexSet {
    nvec: Vec<usize>,
}

impl MultiIndexSet {
    pub fn new(nvec: &[usize]) -> Result<Self> {
        if nvec.is_empty() || nvec.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "level sizes must be positive, got {nvec:?}"
            )));
        }
        Ok(MultiIndexSet {
            nvec: nvec.to_vec(),
        })
    }

    pub fn nvec(&self) -> &[usize] {
        &self.nvec
    }

    /// `N = prod n_l`.
    pub fn len(&self) -> usize {
        self.nvec.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index(&self, mut flat: usize) -> Vec<usize> {
        let mut out = vec![0; self.nvec.len()];
        for (slot, &n) in out.iter_mut().zip(&self.nvec).rev() {
            *slot = flat % n;
            flat /= n;
        }
        out
    }

    pub fn flat(&self, alpha: &[usize]) -> usize {
        alpha
            .iter()
            .zip(&self.nvec)
            .fold(0, |acc, (&a, &n)| acc * n + a)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.len()).map(move |f| self.index(f))
    }

    /// The difference set `Delta(n) = prod {-(n_l - 1), .., n_l - 1}`, lexicographic.
    pub fn differences(&self) -> Vec<MultiIndex> {
        let widths: Vec<usize> = self.nvec.iter().map(|n| 2 * n - 1).collect();
        let total: usize = widths.iter().product();
        (0..total)
            .map(|mut f| {
                let mut k = vec![0i64; widths.len()];
                for l in (0..widths.len()).rev() {
                    k[l] = (f % widths[l]) as i64 - (self.nvec[l] as i64 - 1);
                    f /= widths[l];
                }
                k
            })
            .collect()
    }

    /// Position of `a - b` in [`Self::differences`].
    pub fn difference_slot(&self, a: &[usize], b: &[usize]) -> usize {
        let mut acc = 0;
        for l in 0..self.nvec.len() {
            let n = self.nvec[l];
            acc = acc * (2 * n - 1) + (a[l] + n - 1 - b[l]);
        }
        acc
    }
}

/// Places `coeffs[slot(a - b)]` at block `(a, b)`.
fn fill_blocks<B: Clone>(set: &MultiIndexSet, coeffs: &[B], mut put: impl FnMut(usize, usize, &B)) {
    let idx: Vec<Vec<usize>> = set.iter().collect();
    for (fa, a) in idx.iter().enumerate() {
        for (fb, b) in idx.iter().enumerate() {
            put(fa, fb, &coeffs[set.difference_slot(a, b)]);
        }
    }
}

/// `T_n(F)` for the symbol's own partition, tagged with its block shape.
pub fn assemble(f: &SymbolSpec, nvec: &[usize]) -> Result<QMatrix> {
    let set = MultiIndexSet::new(nvec)?;
    if set.nvec().len() != f.d() {
        return Err(Error::InvalidArgument(format!(
            "{} level sizes for a symbol in {} variables",
            nvec.len(),
            f.d()
        )));
    }
    if let Some(m) = f.quadrature_grid() {
        let need = 4 * nvec.iter().copied().max().unwrap_or(1);
        if m < need {
            log::warn!("quadrature grid {m} is below 4*max(n) = {need}; high coefficients alias");
        }
    }
    let coeffs = f.fourier_coeffs(&set.differences());
    let (s, t) = (f.s(), f.t());
    let n = set.len();
    let mut out = QMatrix::zeros(n * s, n * t);
    fill_blocks(&set, &coeffs, |a, b, block| {
        out.set_block(a * s, b * t, block)
    });
    out.with_shape(BlockShape {
        nvec: nvec.to_vec(),
        s,
        t,
    })
}

/// Complex block Toeplitz `T_n(G)` of an embedded symbol, coefficients by
/// quadrature with `m` points per dimension.
pub fn assemble_embedded(g: &EmbeddedSymbol, nvec: &[usize], m: usize) -> Result<CMatrix> {
    let set = MultiIndexSet::new(nvec)?;
    let coeffs = g.fourier_coeffs(&set.differences(), m);
    let (r, c) = g.dims();
    let n = set.len();
    let mut out = CMatrix::zeros(n * r, n * c);
    fill_blocks(&set, &coeffs, |a, b, block| {
        out.set_block(a * r, b * c, block)
    });
    Ok(out)
}

/// `|| blockwise embedding of T_n(F) - T_n(G_tau) ||_F` for partition `kernel`.
/// The right side is assembled from quadrature of `G_tau` itself.
pub fn embedding_identity_check(
    f: &SymbolSpec,
    kernel: &KernelPartition,
    nvec: &[usize],
) -> Result<f64> {
    let fk = f.with_kernel(kernel.clone())?;
    let t = assemble(&fk, nvec)?;
    let lhs = embed::phi_blockwise(&t, f.s(), f.t())?;
    let g = f.embedded(kernel)?;
    let m = g.quadrature_grid(nvec.iter().copied().max().unwrap_or(1));
    let rhs = assemble_embedded(&g, nvec, m)?;
    Ok(lhs.sub(&rhs)?.frob_norm())
}

/// Residuals of the three adjoint identities.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointReport {
    /// `T^L(F)* - T^R(F*)`.
    pub left: f64,
    /// `T^R(F)* - T^L(F*)`.
    pub right: f64,
    /// `T^(SL,SR)(F)* - T^(SR,SL)(F*)` for the symbol's own partition.
    pub sandwich: f64,
    pub holds: bool,
}

/// Checks `T^{(S_L,S_R)}(F)* = T^{(S_R,S_L)}(F*)` for the left, right and own
/// partitions, entrywise to [`ADJOINT_TOL`] relative to the largest entry.
pub fn adjoint_identity_check(f: &SymbolSpec, nvec: &[usize]) -> Result<AdjointReport> {
    let residual = |g: &SymbolSpec| -> Result<(f64, f64)> {
        let t = assemble(g, nvec)?;
        let ta = assemble(&g.adjoint(), nvec)?;
        let scale = t.as_slice().iter().map(|q| q.norm()).fold(1.0, f64::max);
        Ok((t.adjoint().max_abs_diff(&ta)?, scale))
    };
    let (left, s1) = residual(&f.with_kernel(KernelPartition::left(f.d()))?)?;
    let (right, s2) = residual(&f.with_kernel(KernelPartition::right(f.d()))?)?;
    let (sandwich, s3) = residual(f)?;
    let holds =
        left <= ADJOINT_TOL * s1 && right <= ADJOINT_TOL * s2 && sandwich <= ADJOINT_TOL * s3;
    Ok(AdjointReport {
        left,
        right,
        sandwich,
        holds,
    })
}

/// `(||T_n(F)||_p, 4 (N/(2 pi)^d)^{1/p} ||F||_{L^p})` for partition `kernel`.
pub fn schatten_bound_check(
    f: &SymbolSpec,
    kernel: &KernelPartition,
    nvec: &[usize],
    p: f64,
) -> Result<(f64, f64)> {
    check_schatten_p(p)?;
    let t = assemble(&f.with_kernel(kernel.clone())?, nvec)?;
    let lhs = t.schatten_norm(p)?;
    Ok((lhs, schatten_bound_rhs(f, nvec, p)?))
}

/// `4 (N/(2 pi)^d)^{1/p} ||F||_{L^p}` with `N` the number of blocks.
pub fn schatten_bound_rhs(f: &SymbolSpec, nvec: &[usize], p: f64) -> Result<f64> {
    check_schatten_p(p)?;
    let n: f64 = nvec.iter().map(|&x| x as f64).product();
    let vol = (2.0 * std::f64::consts::PI).powi(f.d() as i32);
    let factor = if p.is_infinite() {
        1.0
    } else {
        (n / vol).powf(1.0 / p)
    };
    Ok(4.0 * factor * f.lp_norm(p)?)
}

/// Whether `What(k) = What(-k)` for every `k` in `Delta(n)`; this is exactly
/// when left and right Toeplitz matrices of size `n` coincide.
pub fn w_even_on_differences(p: &TrigPoly, nvec: &[usize]) -> Result<bool> {
    let set = MultiIndexSet::new(nvec)?;
    Ok(set.differences().iter().all(|k| {
        let neg: MultiIndex = k.iter().map(|v| -v).collect();
        p.what(k) == p.what(&neg)
    }))
}

/// Writes the entries of the embedding as CSV: one row per quaternion row and
/// eight columns per quaternion entry `q = z + w j`, holding the real and
/// imaginary parts of the 2x2 cell `[[z, w], [-conj(w), conj(z)]]` read row by row.
pub fn write_csv<W: Write>(a: &QMatrix, mut out: W) -> io::Result<()> {
    let mut header = Vec::with_capacity(8 * a.cols());
    for j in 0..a.cols() {
        for cell in ["00", "01", "10", "11"] {
            header.push(format!("c{j}_{cell}_re"));
            header.push(format!("c{j}_{cell}_im"));
        }
    }
    writeln!(out, "{}", header.join(","))?;
    for i in 0..a.rows() {
        let mut fields = Vec::with_capacity(8 * a.cols());
        for q in a.row(i) {
            let (z, w) = (q.z(), q.w());
            for v in [z, w, -w.conj(), z.conj()] {
                fields.push(format!("{}", v.re));
                fields.push(format!("{}", v.im));
            }
        }
        writeln!(out, "{}", fields.join(","))?;
    }
    Ok(())
}

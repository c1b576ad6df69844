//! Generating functions `F: T^d -> H^{s x t}` and everything derived from them:
//! sandwich Fourier coefficients, reduction to the right kernel, the
//! Hermitian criterion, embedded complex symbols, `L^p` norms and
//! spectral-range bounds.

pub mod builtin;
pub mod json;
mod kernel;
mod trigpoly;

use std::fmt;
use std::sync::Arc;

pub use kernel::KernelPartition;
pub use trigpoly::{MultiIndex, TrigPoly};

use crate::cla::{self, CMatrix};
use crate::error::{Error, Result};
use crate::qmat::{check_schatten_p, schatten_of, QMatrix};
use crate::quat::C64;
use crate::torus::{wrap_point, TorusGrid};

/// Default quadrature resolution per dimension for sampled symbols.
pub const DEFAULT_QUADRATURE: usize = 64;

/// Relative tolerance of the sampled Hermitian criterion.
pub const SAMPLED_HERMITIAN_TOL: f64 = 1e-10;

/// Relative tolerance of the coefficient-level Hermitian criterion.
pub const COEFF_HERMITIAN_TOL: f64 = 1e-12;

pub type Evaluator = Arc<dyn Fn(&[f64]) -> QMatrix + Send + Sync>;

/// A pointwise evaluator together with its quadrature resolution.
#[derive(Clone)]
pub struct Sampled {
    pub name: String,
    pub grid: usize,
    eval: Evaluator,
}

impl fmt::Debug for Sampled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Sampled")
            .field("name", &self.name)
            .field("grid", &self.grid)
            .finish()
    }
}

#[derive(Clone, Debug)]
pub enum SymbolBody {
    TrigPoly(TrigPoly),
    Sampled(Sampled),
}

/// A generating function with its kernel partition.
#[derive(Clone, Debug)]
pub struct SymbolSpec {
    d: usize,
    s: usize,
    t: usize,
    body: SymbolBody,
    kernel: KernelPartition,
}

/// Outcome of the Hermitian criterion: `Z(theta)` Hermitian and
/// `W(-theta) = -W(theta)^T`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianReport {
    pub hermitian: bool,
    /// Largest violation of the `Z` condition.
    pub z_defect: f64,
    /// Largest violation of the `W` condition.
    pub w_defect: f64,
    pub tolerance: f64,
}

/// Grid approximations of `ess inf lambda_min` and `ess sup lambda_max` of an
/// embedded symbol. `slack` is half the largest jump of either extreme
/// eigenvalue between neighbouring grid points.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralBounds {
    pub lower: f64,
    pub upper: f64,
    pub slack: f64,
}

impl SymbolSpec {
    pub fn trig_poly(poly: TrigPoly, kernel: KernelPartition) -> Result<Self> {
        if poly.d() != kernel.d() {
            return Err(Error::InvalidPartition(format!(
                "partition of {} variables for a symbol in {}",
                kernel.d(),
                poly.d()
            )));
        }
        let (s, t) = poly.block_dims();
        Ok(SymbolSpec {
            d: poly.d(),
            s,
            t,
            body: SymbolBody::TrigPoly(poly),
            kernel,
        })
    }

    /// Wraps a pure evaluator. Angles handed to it are reduced to `[-pi, pi)`.
    pub fn sampled(
        name: impl Into<String>,
        d: usize,
        s: usize,
        t: usize,
        grid: usize,
        kernel: KernelPartition,
        eval: impl Fn(&[f64]) -> QMatrix + Send + Sync + 'static,
    ) -> Result<Self> {
        if kernel.d() != d {
            return Err(Error::InvalidPartition(format!(
                "partition of {} variables for a symbol in {d}",
                kernel.d()
            )));
        }
        if grid < 2 {
            return Err(Error::InvalidArgument(format!(
                "quadrature grid {grid} is too coarse"
            )));
        }
        let sampled = Sampled {
            name: name.into(),
            grid,
            eval: Arc::new(eval),
        };
        Ok(SymbolSpec {
            d,
            s,
            t,
            body: SymbolBody::Sampled(sampled),
            kernel,
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn kernel(&self) -> &KernelPartition {
        &self.kernel
    }

    pub fn body(&self) -> &SymbolBody {
        &self.body
    }

    pub fn as_trig_poly(&self) -> Option<&TrigPoly> {
        match &self.body {
            SymbolBody::TrigPoly(p) => Some(p),
            SymbolBody::Sampled(_) => None,
        }
    }

    /// Quadrature resolution for sampled symbols, `None` for polynomials.
    pub fn quadrature_grid(&self) -> Option<usize> {
        match &self.body {
            SymbolBody::TrigPoly(_) => None,
            SymbolBody::Sampled(s) => Some(s.grid),
        }
    }

    /// Same function, different kernel partition.
    pub fn with_kernel(&self, kernel: KernelPartition) -> Result<Self> {
        if kernel.d() != self.d {
            return Err(Error::InvalidPartition(format!(
                "partition of {} variables for a symbol in {}",
                kernel.d(),
                self.d
            )));
        }
        Ok(SymbolSpec {
            kernel,
            ..self.clone()
        })
    }

    /// Same function sampled with a different quadrature resolution.
    pub fn with_quadrature(&self, grid: usize) -> Self {
        let mut out = self.clone();
        if let SymbolBody::Sampled(s) = &mut out.body {
            s.grid = grid.max(2);
        }
        out
    }

    pub fn eval(&self, theta: &[f64]) -> QMatrix {
        match &self.body {
            SymbolBody::TrigPoly(p) => p.eval(theta),
            SymbolBody::Sampled(s) => (s.eval)(&wrap_point(theta)),
        }
    }

    /// `(Z(theta), W(theta))`.
    pub fn slices(&self, theta: &[f64]) -> (CMatrix, CMatrix) {
        match &self.body {
            SymbolBody::TrigPoly(p) => p.eval_slices(theta),
            SymbolBody::Sampled(_) => self.eval(theta).slice_split(),
        }
    }

    /// Sandwich Fourier coefficient `(2 pi)^{-d} int e^{-i<m,theta>_L} F(theta) e^{-i<m,theta>_R}`.
    /// Exact for polynomials; uniform-grid quadrature for sampled symbols.
    pub fn fourier_coeff(&self, m: &[i64]) -> QMatrix {
        self.fourier_coeffs(std::slice::from_ref(&m.to_vec()))
            .pop()
            .expect("one coefficient")
    }

    /// Several coefficients at once; sampled symbols are evaluated on the grid only once.
    pub fn fourier_coeffs(&self, ms: &[MultiIndex]) -> Vec<QMatrix> {
        match &self.body {
            SymbolBody::TrigPoly(p) => ms.iter().map(|m| p.coeff(&self.kernel, m)).collect(),
            SymbolBody::Sampled(s) => {
                let grid = TorusGrid::new(self.d, s.grid);
                let idx: Vec<Vec<usize>> = (0..grid.len()).map(|f| grid.indices(f)).collect();
                let samples: Vec<QMatrix> =
                    (0..grid.len()).map(|f| (s.eval)(&grid.point(f))).collect();
                let lmask = self.kernel.left_mask();
                let rmask = self.kernel.right_mask();
                let weight = 1.0 / grid.len() as f64;
                ms.iter()
                    .map(|m| {
                        let mut acc = QMatrix::zeros(self.s, self.t);
                        for (f, sample) in samples.iter().enumerate() {
                            let el = grid.exp_minus_masked(m, &idx[f], &lmask);
                            let er = grid.exp_minus_masked(m, &idx[f], &rmask);
                            for i in 0..self.s {
                                for j in 0..self.t {
                                    acc[(i, j)] += sample[(i, j)].lmul_complex(el).rmul_complex(er);
                                }
                            }
                        }
                        acc.scale(weight)
                    })
                    .collect()
            }
        }
    }

    /// `H(theta) = Z(theta) + W(r(theta)) j` with the right kernel, where `r`
    /// negates the left variables. Its Toeplitz matrices equal those of `self`.
    pub fn reduce_to_right(&self) -> SymbolSpec {
        let right = KernelPartition::right(self.d);
        if self.kernel.is_right() {
            return self.clone();
        }
        match &self.body {
            SymbolBody::TrigPoly(p) => {
                SymbolSpec::trig_poly(p.reflect_w(&self.kernel), right).expect("same d")
            }
            SymbolBody::Sampled(s) => {
                let kernel = self.kernel.clone();
                let eval = s.eval.clone();
                SymbolSpec::sampled(
                    format!("{}:right", s.name),
                    self.d,
                    self.s,
                    self.t,
                    s.grid,
                    right,
                    move |th: &[f64]| {
                        let (z, _) = eval(th).slice_split();
                        let (_, w) = eval(&wrap_point(&kernel.reflect(th))).slice_split();
                        QMatrix::from_slices(&z, &w).expect("same shape")
                    },
                )
                .expect("same d")
            }
        }
    }

    /// Pointwise conjugate transpose `F*` with the partition swapped, so that
    /// `T(F)* = T(F*)` holds for the returned symbol.
    pub fn adjoint(&self) -> SymbolSpec {
        let kernel = self.kernel.swapped();
        match &self.body {
            SymbolBody::TrigPoly(p) => SymbolSpec::trig_poly(p.adjoint(), kernel).expect("same d"),
            SymbolBody::Sampled(s) => {
                let eval = s.eval.clone();
                SymbolSpec::sampled(
                    format!("{}*", s.name),
                    self.d,
                    self.t,
                    self.s,
                    s.grid,
                    kernel,
                    move |th: &[f64]| eval(th).adjoint(),
                )
                .expect("same d")
            }
        }
    }

    /// `a F + b G` for slice scalars acting from the left; kernels must agree.
    pub fn linear_combination(
        a: C64,
        f: &SymbolSpec,
        b: C64,
        g: &SymbolSpec,
    ) -> Result<SymbolSpec> {
        if f.kernel != g.kernel || (f.d, f.s, f.t) != (g.d, g.s, g.t) {
            return Err(Error::InvalidArgument(
                "symbols differ in shape or kernel".into(),
            ));
        }
        if let (Some(p), Some(q)) = (f.as_trig_poly(), g.as_trig_poly()) {
            return SymbolSpec::trig_poly(
                TrigPoly::linear_combination(a, p, b, q)?,
                f.kernel.clone(),
            );
        }
        let grid = f
            .quadrature_grid()
            .unwrap_or(0)
            .max(g.quadrature_grid().unwrap_or(0))
            .max(2);
        let (f2, g2) = (f.clone(), g.clone());
        SymbolSpec::sampled(
            "combination",
            f.d,
            f.s,
            f.t,
            grid,
            f.kernel.clone(),
            move |th: &[f64]| {
                f2.eval(th)
                    .lmul_complex(a)
                    .add(&g2.eval(th).lmul_complex(b))
                    .expect("same shape")
            },
        )
    }

    /// Tests `Z(theta)` Hermitian and `W(-theta) = -W(theta)^T`: exactly on the
    /// coefficients of a polynomial, on the quadrature grid otherwise.
    pub fn hermitian_criterion(&self) -> Result<HermitianReport> {
        if self.s != self.t {
            return Err(Error::InvalidArgument(format!(
                "Hermitian criterion needs square blocks, got {}x{}",
                self.s, self.t
            )));
        }
        match &self.body {
            SymbolBody::TrigPoly(p) => {
                let mut scale: f64 = 0.0;
                for c in p.z_coeffs().values().chain(p.w_coeffs().values()) {
                    scale = scale.max(c.max_abs());
                }
                let scale = if scale == 0.0 { 1.0 } else { scale };
                let neg = |m: &MultiIndex| m.iter().map(|v| -v).collect::<MultiIndex>();
                let mut z_defect: f64 = 0.0;
                for m in p.z_coeffs().keys() {
                    for q in [m.clone(), neg(m)] {
                        let diff = p.zhat(&q).sub(&p.zhat(&neg(&q)).adjoint())?;
                        z_defect = z_defect.max(diff.max_abs());
                    }
                }
                let mut w_defect: f64 = 0.0;
                for m in p.w_coeffs().keys() {
                    for q in [m.clone(), neg(m)] {
                        let diff = p.what(&q).add(&p.what(&neg(&q)).transpose())?;
                        w_defect = w_defect.max(diff.max_abs());
                    }
                }
                let tolerance = COEFF_HERMITIAN_TOL * scale;
                Ok(HermitianReport {
                    hermitian: z_defect <= tolerance && w_defect <= tolerance,
                    z_defect,
                    w_defect,
                    tolerance,
                })
            }
            SymbolBody::Sampled(s) => {
                let grid = TorusGrid::new(self.d, s.grid);
                let samples: Vec<(CMatrix, CMatrix)> = (0..grid.len())
                    .map(|f| (s.eval)(&grid.point(f)).slice_split())
                    .collect();
                let scale = samples
                    .iter()
                    .map(|(z, w)| z.max_abs().max(w.max_abs()))
                    .fold(0.0, f64::max);
                let scale = if scale == 0.0 { 1.0 } else { scale };
                let (mut z_defect, mut w_defect): (f64, f64) = (0.0, 0.0);
                for f in 0..grid.len() {
                    let (z, w) = &samples[f];
                    let (_, w_neg) = &samples[grid.negate(f)];
                    z_defect = z_defect.max(z.sub(&z.adjoint())?.max_abs());
                    w_defect = w_defect.max(w_neg.add(&w.transpose())?.max_abs());
                }
                let tolerance = SAMPLED_HERMITIAN_TOL * scale;
                Ok(HermitianReport {
                    hermitian: z_defect <= tolerance && w_defect <= tolerance,
                    z_defect,
                    w_defect,
                    tolerance,
                })
            }
        }
    }

    /// The embedded complex symbol `G_tau` for the partition `kernel`.
    pub fn embedded(&self, kernel: &KernelPartition) -> Result<EmbeddedSymbol> {
        let symbol = self.with_kernel(kernel.clone())?;
        Ok(EmbeddedSymbol { symbol })
    }

    /// Grid for pointwise sweeps: vertices (containing `0` and dyadic fractions
    /// of `pi`) for continuous polynomials, cell-centred for sampled symbols.
    pub fn evaluation_grid(&self, m: usize) -> TorusGrid {
        match &self.body {
            SymbolBody::TrigPoly(_) => TorusGrid::vertices(self.d, m),
            SymbolBody::Sampled(_) => TorusGrid::new(self.d, m),
        }
    }

    /// Resolution used for grid integrals over the symbol.
    pub fn integration_grid(&self) -> usize {
        match &self.body {
            SymbolBody::TrigPoly(p) => (4 * p.degree() + 8).max(DEFAULT_QUADRATURE),
            SymbolBody::Sampled(s) => s.grid,
        }
    }

    /// `||F||_{L^p} = (int ||F(theta)||_p^p dtheta)^{1/p}` over `[-pi, pi)^d`
    /// (no normalisation), or the grid maximum of the spectral norm for `p = inf`.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        check_schatten_p(p)?;
        let grid = self.evaluation_grid(self.integration_grid());
        let cell = (2.0 * std::f64::consts::PI / grid.m as f64).powi(self.d as i32);
        let mut acc: f64 = 0.0;
        for th in grid.points() {
            let sv = self.eval(&th).singular_values()?;
            let local = schatten_of(&sv, p);
            if p.is_infinite() {
                acc = acc.max(local);
            } else {
                acc += local.powf(p) * cell;
            }
        }
        Ok(if p.is_infinite() {
            acc
        } else {
            acc.powf(1.0 / p)
        })
    }

    /// Bounds for the spectrum of Hermitian Toeplitz matrices generated by
    /// `self` with partition `kernel`, on the default grid.
    pub fn spectral_range_bounds(&self, kernel: &KernelPartition) -> Result<SpectralBounds> {
        self.spectral_range_bounds_on(kernel, default_bounds_grid(self.d))
    }

    pub fn spectral_range_bounds_on(
        &self,
        kernel: &KernelPartition,
        m: usize,
    ) -> Result<SpectralBounds> {
        let report = self.hermitian_criterion()?;
        if !report.hermitian {
            return Err(Error::NotHermitian {
                what: "symbol",
                residual: report.z_defect.max(report.w_defect),
            });
        }
        let g = self.embedded(kernel)?;
        let grid = self.evaluation_grid(m);
        let mut lo = Vec::with_capacity(grid.len());
        let mut hi = Vec::with_capacity(grid.len());
        for f in 0..grid.len() {
            let ev = g.hermitian_eigs_at(&grid.point(f))?;
            lo.push(ev[0]);
            hi.push(*ev.last().expect("nonempty"));
        }
        let mut slack: f64 = 0.0;
        for f in 0..grid.len() {
            let idx = grid.indices(f);
            for l in 0..self.d {
                let mut nb = idx.clone();
                nb[l] = (nb[l] + 1) % m;
                let g2 = nb.iter().fold(0, |acc, &j| acc * m + j);
                slack = slack
                    .max((lo[f] - lo[g2]).abs())
                    .max((hi[f] - hi[g2]).abs());
            }
        }
        Ok(SpectralBounds {
            lower: lo.iter().copied().fold(f64::INFINITY, f64::min),
            upper: hi.iter().copied().fold(f64::NEG_INFINITY, f64::max),
            slack: 0.5 * slack,
        })
    }
}

/// 1024 points for one variable, 128 per axis for two, 16 per axis beyond.
pub fn default_bounds_grid(d: usize) -> usize {
    match d {
        0 | 1 => 1024,
        2 => 128,
        _ => 16,
    }
}

/// `G_tau(theta) = [[Z(theta), W(r(-theta))], [-conj W(r(theta)), conj Z(-theta)]]`,
/// `r` negating the left variables of the partition. For the right partition
/// this is `[[Z(theta), W(-theta)], [-conj W(theta), conj Z(-theta)]]`.
#[derive(Clone, Debug)]
pub struct EmbeddedSymbol {
    symbol: SymbolSpec,
}

impl EmbeddedSymbol {
    pub fn kernel(&self) -> &KernelPartition {
        &self.symbol.kernel
    }

    pub fn symbol(&self) -> &SymbolSpec {
        &self.symbol
    }

    pub fn d(&self) -> usize {
        self.symbol.d
    }

    /// Block dimensions `(2s, 2t)`.
    pub fn dims(&self) -> (usize, usize) {
        (2 * self.symbol.s, 2 * self.symbol.t)
    }

    pub fn eval(&self, theta: &[f64]) -> CMatrix {
        let k = &self.symbol.kernel;
        let neg: Vec<f64> = theta.iter().map(|x| -x).collect();
        let (z, _) = self.symbol.slices(theta);
        let (zn, _) = self.symbol.slices(&neg);
        let (_, w_rn) = self.symbol.slices(&k.reflect(&neg));
        let (_, w_r) = self.symbol.slices(&k.reflect(theta));
        let (s, t) = (self.symbol.s, self.symbol.t);
        let mut g = CMatrix::zeros(2 * s, 2 * t);
        g.set_block(0, 0, &z);
        g.set_block(0, t, &w_rn);
        g.set_block(s, 0, &w_r.conj().scale(C64::new(-1.0, 0.0)));
        g.set_block(s, t, &zn.conj());
        g
    }

    /// Eigenvalues of `G(theta)`, ascending; a non-Hermitian value is an error.
    pub fn hermitian_eigs_at(&self, theta: &[f64]) -> Result<Vec<f64>> {
        let g = self.eval(theta);
        let scale = g.frob_norm().max(f64::MIN_POSITIVE);
        let defect = g.hermitian_defect();
        if defect > SAMPLED_HERMITIAN_TOL * scale {
            return Err(Error::NotHermitian {
                what: "embedded symbol",
                residual: defect / scale,
            });
        }
        let h = g.add(&g.adjoint())?.scale(C64::new(0.5, 0.0));
        cla::herm_eig(&h)
    }

    /// Quadrature resolution giving the coefficients needed for sizes up to
    /// `max_n`: exact (alias-free) for polynomials, the symbol's own grid otherwise.
    pub fn quadrature_grid(&self, max_n: usize) -> usize {
        match &self.symbol.body {
            SymbolBody::TrigPoly(p) => (p.degree() + max_n + 1).max(8),
            SymbolBody::Sampled(s) => s.grid,
        }
    }

    /// Complex Fourier coefficients `(2 pi)^{-d} int G(theta) e^{-i<k,theta>}` by
    /// uniform quadrature with `m` points per dimension.
    pub fn fourier_coeffs(&self, ks: &[MultiIndex], m: usize) -> Vec<CMatrix> {
        let grid = TorusGrid::new(self.d(), m);
        let idx: Vec<Vec<usize>> = (0..grid.len()).map(|f| grid.indices(f)).collect();
        let samples: Vec<CMatrix> = (0..grid.len()).map(|f| self.eval(&grid.point(f))).collect();
        let mask = vec![true; self.d()];
        let weight = C64::new(1.0 / grid.len() as f64, 0.0);
        let (r, c) = self.dims();
        ks.iter()
            .map(|k| {
                let mut acc = vec![C64::new(0.0, 0.0); r * c];
                for (f, g) in samples.iter().enumerate() {
                    let e = grid.exp_minus_masked(k, &idx[f], &mask);
                    for (a, &v) in acc.iter_mut().zip(g.as_slice()) {
                        *a += v * e;
                    }
                }
                CMatrix::from_vec(r, c, acc).expect("shape").scale(weight)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn scalar(z: C64) -> CMatrix {
        CMatrix::from_vec(1, 1, vec![z]).unwrap()
    }

    /// `e^{-i theta} j`: `W(theta) = e^{-i theta}`, so `What(-1) = 1`.
    fn shifted_j(kernel: KernelPartition) -> SymbolSpec {
        let p =
            TrigPoly::from_slice_coeffs(1, 1, 1, [], [(vec![-1], scalar(c(1.0, 0.0)))]).unwrap();
        SymbolSpec::trig_poly(p, kernel).unwrap()
    }

    #[test]
    fn shifted_j_coefficients() {
        let right = shifted_j(KernelPartition::right(1));
        for m in -3..=3 {
            let want = if m == 1 {
                Quaternion::J
            } else {
                Quaternion::ZERO
            };
            assert_eq!(right.fourier_coeff(&[m])[(0, 0)], want, "right m={m}");
        }
        let left = shifted_j(KernelPartition::left(1));
        for m in -3..=3 {
            let want = if m == -1 {
                Quaternion::J
            } else {
                Quaternion::ZERO
            };
            assert_eq!(left.fourier_coeff(&[m])[(0, 0)], want, "left m={m}");
        }
    }

    #[test]
    fn sampled_quadrature_matches_polynomial() {
        for kernel in [KernelPartition::left(1), KernelPartition::right(1)] {
            let poly = shifted_j(kernel.clone());
            let p2 = poly.clone();
            let sampled =
                SymbolSpec::sampled("shift", 1, 1, 1, 16, kernel, move |th: &[f64]| p2.eval(th))
                    .unwrap();
            for m in -3..=3 {
                let diff = poly
                    .fourier_coeff(&[m])
                    .max_abs_diff(&sampled.fourier_coeff(&[m]))
                    .unwrap();
                assert!(diff < 1e-14, "m={m}: {diff}");
            }
        }
    }

    #[test]
    fn reduction_of_left_shift() {
        let f = shifted_j(KernelPartition::left(1));
        let h = f.reduce_to_right();
        assert!(h.kernel().is_right());
        let hv = h.eval(&[0.3]);
        let want = Quaternion::from_slices(c(0.0, 0.0), c(0.3f64.cos(), 0.3f64.sin()));
        assert!((hv[(0, 0)] - want).norm() < 1e-15);
        assert_eq!(f.fourier_coeff(&[-1]), h.fourier_coeff(&[-1]));
        let r = shifted_j(KernelPartition::right(1));
        assert_eq!(r.reduce_to_right().as_trig_poly(), r.as_trig_poly());
    }

    #[test]
    fn constant_symbol_coefficients() {
        let q = Quaternion::new(1.0, -2.0, 0.5, 3.0);
        let p = TrigPoly::from_sandwich(
            &KernelPartition::right(2),
            1,
            1,
            [(vec![0, 0], QMatrix::diag(&[q]))],
        )
        .unwrap();
        for kernel in KernelPartition::standard_classes(2) {
            let f = SymbolSpec::trig_poly(p.clone(), kernel).unwrap();
            assert_eq!(f.fourier_coeff(&[0, 0])[(0, 0)], q);
            assert_eq!(f.fourier_coeff(&[1, 0])[(0, 0)], Quaternion::ZERO);
        }
    }

    #[test]
    fn hermitian_criterion_examples() {
        let herm = builtin::builtin("herm_1d").unwrap();
        assert!(herm.hermitian_criterion().unwrap().hermitian);
        let non = builtin::builtin("nonherm_1d").unwrap();
        let rep = non.hermitian_criterion().unwrap();
        assert!(!rep.hermitian);
        assert!(rep.w_defect > 0.5);
    }

    #[test]
    fn embedded_symbol_of_hermitian_example() {
        let f = builtin::builtin("herm_1d").unwrap();
        let g = f.embedded(&KernelPartition::right(1)).unwrap();
        for th in [-2.0, -0.4, 0.0, 1.1, 3.0] {
            let (cs, sn) = (f64::cos(th), f64::sin(th));
            let want = CMatrix::from_vec(
                2,
                2,
                vec![c(2.0 + cs, 0.0), c(-sn, 0.0), c(-sn, 0.0), c(2.0 + cs, 0.0)],
            )
            .unwrap();
            assert!(g.eval(&[th]).sub(&want).unwrap().max_abs() < 1e-14);
        }
    }

    #[test]
    fn embedded_symbol_of_real_symbol_is_diagonal() {
        let p = TrigPoly::from_slice_coeffs(
            1,
            1,
            1,
            [
                (vec![0], scalar(c(1.0, 0.0))),
                (vec![1], scalar(c(0.0, 0.5))),
            ],
            [],
        )
        .unwrap();
        let f = SymbolSpec::trig_poly(p, KernelPartition::right(1)).unwrap();
        let g = f.embedded(&KernelPartition::left(1)).unwrap().eval(&[0.7]);
        let fz = f.slices(&[0.7]).0[(0, 0)];
        let fzn = f.slices(&[-0.7]).0[(0, 0)];
        assert!((g[(0, 0)] - fz).norm() < 1e-15);
        assert!((g[(1, 1)] - fzn.conj()).norm() < 1e-15);
        assert_eq!(g[(0, 1)], c(0.0, 0.0));
        assert_eq!(g[(1, 0)], c(0.0, 0.0));
    }

    #[test]
    fn lp_norm_examples() {
        let q = Quaternion::new(1.0, 1.0, 1.0, 1.0);
        let p = TrigPoly::from_sandwich(
            &KernelPartition::right(1),
            1,
            1,
            [(vec![0], QMatrix::diag(&[q]))],
        )
        .unwrap();
        let f = SymbolSpec::trig_poly(p, KernelPartition::right(1)).unwrap();
        assert!((f.lp_norm(f64::INFINITY).unwrap() - 2.0).abs() < 1e-14);
        assert!((f.lp_norm(1.0).unwrap() - 4.0 * PI).abs() < 1e-12);
        let h = builtin::builtin("herm_1d").unwrap();
        assert!((h.lp_norm(f64::INFINITY).unwrap() - 3.0).abs() < 1e-14);
        assert!(h.lp_norm(0.0).is_err());
    }

    #[test]
    fn spectral_bounds_examples() {
        let h = builtin::builtin("herm_1d").unwrap();
        let b = h.spectral_range_bounds(&KernelPartition::right(1)).unwrap();
        assert!((b.lower - (2.0 - 2f64.sqrt())).abs() < 1e-12);
        assert!((b.upper - (2.0 + 2f64.sqrt())).abs() < 1e-12);
        let five =
            TrigPoly::from_slice_coeffs(1, 1, 1, [(vec![0], scalar(c(5.0, 0.0)))], []).unwrap();
        let f = SymbolSpec::trig_poly(five, KernelPartition::right(1)).unwrap();
        let b = f.spectral_range_bounds(&KernelPartition::right(1)).unwrap();
        assert_eq!((b.lower, b.upper, b.slack), (5.0, 5.0, 0.0));
        let non = builtin::builtin("nonherm_1d").unwrap();
        assert!(matches!(
            non.spectral_range_bounds(&KernelPartition::right(1)),
            Err(Error::NotHermitian { .. })
        ));
    }
}

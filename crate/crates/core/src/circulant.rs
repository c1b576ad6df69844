//! Multilevel block quaternion circulants generated by right polynomials,
//! their canonical block-diagonal ("X") form under the complex DFT, fiber
//! spectra, and circulant approximating classes for Toeplitz sequences.
//!
//! A circulant with coefficient `p(rho) = z_rho + w_rho j` at residue `rho` has
//! block `(a, b)` equal to `p(a - b mod n)`. Its slice polynomials are
//! `Z(theta) = sum z_rho e^{-i<rho,theta>}` and `W(theta) = sum w_rho e^{-i<rho,theta>}`,
//! sampled at `theta_k = 2 pi k / n`.

use std::collections::BTreeMap;

use crate::cla::{self, CMatrix};
use crate::error::{Error, Result};
use crate::qmat::{pair_conjugates, BlockShape, QMatrix, QSpectrum, PAIRING_TOL};
use crate::quat::C64;
use crate::symbol::{KernelPartition, MultiIndex, SymbolSpec, TrigPoly};
use crate::toeplitz::{self, MultiIndexSet};

/// Relative Frobenius tolerance of the X-form reconstruction.
pub const RECONSTRUCTION_TOL: f64 = 1e-10;
/// Agreement required between fiber spectra and assembled-matrix spectra.
pub const SPECTRUM_TOL: f64 = 1e-9;
/// Coefficients at most this fraction of the largest count as outside the support.
pub const SUPPORT_TOL: f64 = 1e-12;

/// Coefficient table of a circulant, keyed by residue `rho mod n`.
#[derive(Clone, Debug, PartialEq)]
pub struct CirculantSpec {
    nvec: Vec<usize>,
    s: usize,
    t: usize,
    coeffs: BTreeMap<Vec<usize>, QMatrix>,
}

fn residue(rho: &[i64], nvec: &[usize]) -> Vec<usize> {
    rho.iter()
        .zip(nvec)
        .map(|(&r, &n)| r.rem_euclid(n as i64) as usize)
        .collect()
}

fn negate(k: &[usize], nvec: &[usize]) -> Vec<usize> {
    k.iter().zip(nvec).map(|(&v, &n)| (n - v) % n).collect()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `e^{-2 pi i num / den}`, exact at multiples of a quarter turn.
fn root_of_unity(num: usize, den: usize) -> C64 {
    let num = num % den;
    if (4 * num) % den == 0 {
        return match 4 * num / den {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, -1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, 1.0),
        };
    }
    let phase = -2.0 * std::f64::consts::PI * num as f64 / den as f64;
    C64::new(phase.cos(), phase.sin())
}

impl CirculantSpec {
    /// Reduces each `rho` modulo `nvec`; two coefficients on one residue are an error.
    pub fn new(
        nvec: &[usize],
        s: usize,
        t: usize,
        entries: impl IntoIterator<Item = (MultiIndex, QMatrix)>,
    ) -> Result<Self> {
        MultiIndexSet::new(nvec)?;
        let mut coeffs = BTreeMap::new();
        let mut origin: BTreeMap<Vec<usize>, MultiIndex> = BTreeMap::new();
        for (rho, block) in entries {
            if rho.len() != nvec.len() {
                return Err(Error::InvalidArgument(format!(
                    "index {rho:?} has {} levels, expected {}",
                    rho.len(),
                    nvec.len()
                )));
            }
            if block.dims() != (s, t) {
                return Err(Error::DimensionMismatch {
                    op: "circulant coefficient",
                    left: (s, t),
                    right: block.dims(),
                });
            }
            let r = residue(&rho, nvec);
            if let Some(prev) = origin.get(&r) {
                return Err(Error::InvalidArgument(format!(
                    "coefficients at {prev:?} and {rho:?} share residue {r:?} mod {nvec:?}"
                )));
            }
            origin.insert(r.clone(), rho);
            coeffs.insert(r, block);
        }
        Ok(CirculantSpec {
            nvec: nvec.to_vec(),
            s,
            t,
            coeffs,
        })
    }

    pub fn nvec(&self) -> &[usize] {
        &self.nvec
    }

    pub fn block_dims(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    pub fn coeffs(&self) -> &BTreeMap<Vec<usize>, QMatrix> {
        &self.coeffs
    }

    /// `(Z(theta_k), W(theta_k))`.
    pub fn slices_at(&self, k: &[usize]) -> (CMatrix, CMatrix) {
        let lcm = self.nvec.iter().fold(1, |acc, &n| acc / gcd(acc, n) * n);
        let mut z = CMatrix::zeros(self.s, self.t);
        let mut w = CMatrix::zeros(self.s, self.t);
        for (rho, block) in &self.coeffs {
            let num: usize = rho
                .iter()
                .zip(k)
                .zip(&self.nvec)
                .map(|((&r, &kk), &n)| (r * kk % n) * (lcm / n))
                .sum();
            let e = root_of_unity(num, lcm);
            let (bz, bw) = block.slice_split();
            z = z.add(&bz.scale(e)).expect("same shape");
            w = w.add(&bw.scale(e)).expect("same shape");
        }
        (z, w)
    }

    /// Embedded fiber `[[Z(theta_k), W(theta_k)], [-conj W(theta_-k), conj Z(theta_-k)]]`.
    pub fn embedded_fiber(&self, k: &[usize]) -> CMatrix {
        let (z, w) = self.slices_at(k);
        let (zn, wn) = self.slices_at(&negate(k, &self.nvec));
        let mut g = CMatrix::zeros(2 * self.s, 2 * self.t);
        g.set_block(0, 0, &z);
        g.set_block(0, self.t, &w);
        g.set_block(self.s, 0, &wn.conj().scale(C64::new(-1.0, 0.0)));
        g.set_block(self.s, self.t, &zn.conj());
        g
    }
}

/// `C_n(p)`, tagged with its block shape.
pub fn assemble_circulant(spec: &CirculantSpec) -> Result<QMatrix> {
    let set = MultiIndexSet::new(&spec.nvec)?;
    let (s, t) = (spec.s, spec.t);
    let mut out = QMatrix::zeros(set.len() * s, set.len() * t);
    for (fa, a) in set.iter().enumerate() {
        for (rho, block) in &spec.coeffs {
            let b: Vec<usize> = a
                .iter()
                .zip(rho)
                .zip(&spec.nvec)
                .map(|((&x, &r), &n)| (x + n - r) % n)
                .collect();
            out.set_block(fa * s, set.flat(&b) * t, block);
        }
    }
    out.with_shape(BlockShape {
        nvec: spec.nvec.clone(),
        s,
        t,
    })
}

/// Unitary DFT `[F]_{uv} = n^{-1/2} e^{-2 pi i uv/n}`.
pub fn qdft_matrix(n: usize) -> CMatrix {
    let scale = 1.0 / (n as f64).sqrt();
    CMatrix::from_fn(n, n, |u, v| root_of_unity(u * v % n, n) * scale)
}

/// Reversal `A_n e_s = e_{-s mod n}`.
pub fn reversal(n: usize) -> CMatrix {
    CMatrix::from_fn(n, n, |r, c| {
        if r == (n - c) % n {
            C64::new(1.0, 0.0)
        } else {
            C64::new(0.0, 0.0)
        }
    })
}

/// Kronecker product of the level DFTs, first level outermost.
pub fn qdft_multilevel(nvec: &[usize]) -> CMatrix {
    nvec.iter()
        .fold(CMatrix::identity(1), |acc, &n| acc.kron(&qdft_matrix(n)))
}

pub fn reversal_multilevel(nvec: &[usize]) -> CMatrix {
    nvec.iter()
        .fold(CMatrix::identity(1), |acc, &n| acc.kron(&reversal(n)))
}

/// Fixed indices (`2k = 0 mod n`), representatives `k < -k` of the remaining
/// pairs, and the flat ordering `[Fix.., k1, -k1, k2, -k2, ..]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixPairOrder {
    pub fixed: Vec<Vec<usize>>,
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    pub order: Vec<usize>,
}

impl FixPairOrder {
    /// `P` with `(P x)_i = x_{order[i]}`.
    pub fn permutation(&self) -> CMatrix {
        let n = self.order.len();
        let mut p = CMatrix::zeros(n, n);
        for (i, &o) in self.order.iter().enumerate() {
            p.set_block(i, o, &CMatrix::identity(1));
        }
        p
    }
}

pub fn fix_pair_order(nvec: &[usize]) -> Result<FixPairOrder> {
    let set = MultiIndexSet::new(nvec)?;
    let mut fixed = Vec::new();
    let mut pairs = Vec::new();
    for k in set.iter() {
        let neg = negate(&k, nvec);
        if neg == k {
            fixed.push(k);
        } else if k < neg {
            pairs.push((k, neg));
        }
    }
    let order = fixed
        .iter()
        .map(|k| set.flat(k))
        .chain(pairs.iter().flat_map(|(k, nk)| [set.flat(k), set.flat(nk)]))
        .collect();
    Ok(FixPairOrder {
        fixed,
        pairs,
        order,
    })
}

/// Deliberate corruption of the fiber computation, for negative controls.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FiberFault {
    #[default]
    None,
    /// Negates every `j` term of the fibers.
    FlipSign,
}

/// Canonical X form: `s x t` fibers `Z(theta_k) + W(theta_k) j` at fixed `k`
/// and `2s x 2t` fibers `[[Z_k, W_k j], [W_-k j, Z_-k]]` at each pair.
#[derive(Clone, Debug, PartialEq)]
pub struct FiberForm {
    pub nvec: Vec<usize>,
    pub s: usize,
    pub t: usize,
    pub fixed: Vec<(Vec<usize>, QMatrix)>,
    pub paired: Vec<((Vec<usize>, Vec<usize>), QMatrix)>,
    pub order: FixPairOrder,
    /// Relative Frobenius residual of the reconstruction.
    pub residual: f64,
}

impl FiberForm {
    pub fn block_diagonal(&self) -> QMatrix {
        let n: usize = self.nvec.iter().product();
        let mut out = QMatrix::zeros(n * self.s, n * self.t);
        for (i, (_, f)) in self.fixed.iter().enumerate() {
            out.set_block(i * self.s, i * self.t, f);
        }
        let base = self.fixed.len();
        for (p, (_, f)) in self.paired.iter().enumerate() {
            out.set_block((base + 2 * p) * self.s, (base + 2 * p) * self.t, f);
        }
        out
    }
}

pub fn canonical_x_form(spec: &CirculantSpec) -> Result<FiberForm> {
    canonical_x_form_with(spec, FiberFault::None)
}

/// Fibers from `(Z, W)` at `theta_k`, verified against the explicit product
/// `Pi_L U_L C U_R* Pi_R*` with `U = F (x) I`.
pub fn canonical_x_form_with(spec: &CirculantSpec, fault: FiberFault) -> Result<FiberForm> {
    let order = fix_pair_order(&spec.nvec)?;
    let (s, t) = (spec.s, spec.t);
    let slices = |k: &[usize]| {
        let (z, w) = spec.slices_at(k);
        match fault {
            FiberFault::None => (z, w),
            FiberFault::FlipSign => (z, w.scale(C64::new(-1.0, 0.0))),
        }
    };
    let zero = CMatrix::zeros(s, t);
    let fixed = order
        .fixed
        .iter()
        .map(|k| {
            let (z, w) = slices(k);
            (k.clone(), QMatrix::from_slices(&z, &w).expect("same shape"))
        })
        .collect();
    let paired = order
        .pairs
        .iter()
        .map(|(k, nk)| {
            let (z, w) = slices(k);
            let (zn, wn) = slices(nk);
            let mut f = QMatrix::zeros(2 * s, 2 * t);
            f.set_block(0, 0, &QMatrix::from_complex(&z));
            f.set_block(0, t, &QMatrix::from_slices(&zero, &w).expect("same shape"));
            f.set_block(s, 0, &QMatrix::from_slices(&zero, &wn).expect("same shape"));
            f.set_block(s, t, &QMatrix::from_complex(&zn));
            ((k.clone(), nk.clone()), f)
        })
        .collect();
    let mut form = FiberForm {
        nvec: spec.nvec.clone(),
        s,
        t,
        fixed,
        paired,
        order,
        residual: 0.0,
    };
    form.residual = reconstruction_residual(spec, &form)?;
    if !(form.residual < RECONSTRUCTION_TOL) {
        return Err(Error::Reconstruction {
            residual: form.residual,
            tol: RECONSTRUCTION_TOL,
        });
    }
    Ok(form)
}

/// `||Pi_L U_L C U_R* Pi_R* - blockdiag(fibers)||_F / ||C||_F` (absolute when `C = 0`).
pub fn reconstruction_residual(spec: &CirculantSpec, form: &FiberForm) -> Result<f64> {
    let c = assemble_circulant(spec)?;
    let pf = form
        .order
        .permutation()
        .matmul(&qdft_multilevel(&spec.nvec))?;
    let ul = QMatrix::from_complex(&pf.kron(&CMatrix::identity(spec.s)));
    let ur = QMatrix::from_complex(&pf.kron(&CMatrix::identity(spec.t)));
    let x = ul.matmul(&c)?.matmul(&ur.adjoint())?;
    let diff = x.sub(&form.block_diagonal())?.frob_norm();
    let scale = c.frob_norm();
    Ok(if scale == 0.0 { diff } else { diff / scale })
}

/// Spectra from the embedded fibers `G_R(theta_k)` over all `k`. Canonical
/// eigenvalues are filled only for square blocks.
pub fn circulant_spectrum(spec: &CirculantSpec) -> Result<QSpectrum> {
    let set = MultiIndexSet::new(&spec.nvec)?;
    let mut sv = Vec::with_capacity(2 * set.len() * spec.s.min(spec.t));
    let mut ev = Vec::new();
    for k in set.iter() {
        let g = spec.embedded_fiber(&k);
        sv.extend(cla::complex_svd_values(&g)?);
        if spec.s == spec.t {
            if g.hermitian_defect() <= 1e-12 * g.frob_norm() {
                ev.extend(
                    cla::herm_eig(&hermitian_part(&g))?
                        .into_iter()
                        .map(|x| C64::new(x, 0.0)),
                );
            } else {
                ev.extend(cla::general_eig(&g)?);
            }
        }
    }
    sv.sort_by(|a, b| b.total_cmp(a));
    let singular_values = sv.chunks(2).map(|p| p[0]).collect();
    let canonical_eigs = if spec.s == spec.t {
        pair_conjugates(&ev, PAIRING_TOL)?
    } else {
        Vec::new()
    };
    Ok(QSpectrum {
        canonical_eigs,
        singular_values,
    })
}

fn hermitian_part(g: &CMatrix) -> CMatrix {
    g.add(&g.adjoint())
        .expect("square")
        .scale(C64::new(0.5, 0.0))
}

/// Largest distance in a greedy nearest-neighbour matching of two point sets.
pub fn matching_distance(a: &[C64], b: &[C64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut used = vec![false; b.len()];
    let mut worst: f64 = 0.0;
    for x in a {
        let mut best = (usize::MAX, f64::INFINITY);
        for (j, y) in b.iter().enumerate() {
            let d = (x - y).norm();
            if !used[j] && d < best.1 {
                best = (j, d);
            }
        }
        used[best.0] = true;
        worst = worst.max(best.1);
    }
    worst
}

/// `(singular value deviation, canonical eigenvalue deviation)` between the
/// fiber spectra and a direct decomposition of the assembled circulant.
pub fn fiber_spectrum_check(spec: &CirculantSpec) -> Result<(f64, f64)> {
    let fibers = circulant_spectrum(spec)?;
    let c = assemble_circulant(spec)?;
    let direct_sv = c.singular_values()?;
    let sv_dev = fibers
        .singular_values
        .iter()
        .zip(&direct_sv)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let ev_dev = if spec.s == spec.t {
        matching_distance(&fibers.canonical_eigs, &c.canonical_eigenvalues()?)
    } else {
        0.0
    };
    Ok((sv_dev, ev_dev))
}

fn box_indices(d: usize, m: usize) -> Vec<MultiIndex> {
    let side = 2 * m + 1;
    (0..side.pow(d as u32))
        .map(|mut f| {
            let mut k = vec![0i64; d];
            for slot in k.iter_mut().rev() {
                *slot = (f % side) as i64 - m as i64;
                f /= side;
            }
            k
        })
        .collect()
}

/// `F_m`: the right-kernel form of `f` with coefficients outside `||rho||_inf <= m` dropped.
pub fn truncated_symbol(f: &SymbolSpec, m: usize) -> Result<SymbolSpec> {
    let right = KernelPartition::right(f.d());
    let g = f.reduce_to_right();
    let idx = box_indices(f.d(), m);
    let coeffs = g.fourier_coeffs(&idx);
    let poly = TrigPoly::from_sandwich(&right, f.s(), f.t(), idx.into_iter().zip(coeffs))?;
    SymbolSpec::trig_poly(poly, right)
}

fn check_truncation_sizes(f: &SymbolSpec, nvec: &[usize], m: usize) -> Result<()> {
    if nvec.len() != f.d() {
        return Err(Error::InvalidArgument(format!(
            "{} level sizes for a symbol in {} variables",
            nvec.len(),
            f.d()
        )));
    }
    if let Some(&n) = nvec.iter().find(|&&n| n < 2 * m + 1) {
        return Err(Error::InvalidArgument(format!(
            "level size {n} is below 2m+1 = {} for truncation level {m}",
            2 * m + 1
        )));
    }
    Ok(())
}

/// `B_{n,m}`: the right coefficients with `||rho||_inf <= m` placed at residues
/// `rho mod n`. Requires every `n_l >= 2m + 1` so that residues are distinct.
pub fn acs_truncate(f: &SymbolSpec, nvec: &[usize], m: usize) -> Result<CirculantSpec> {
    check_truncation_sizes(f, nvec, m)?;
    let g = f.reduce_to_right();
    let idx = box_indices(f.d(), m);
    let coeffs = g.fourier_coeffs(&idx);
    CirculantSpec::new(nvec, f.s(), f.t(), idx.into_iter().zip(coeffs))
}

/// Measured decomposition `T_n(F) - B_{n,m} = R + N` with
/// `R = T_n(F_m) - B_{n,m}` and `N = T_n(F) - T_n(F_m)`, normalised by
/// `r_n = N_n min(s, t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AcsWitness {
    pub nvec: Vec<usize>,
    pub m: usize,
    /// `rank(R) / r_n`.
    pub rank_part: f64,
    /// `||N||_1 / r_n`.
    pub norm_part: f64,
    /// `2 sum_l (1/n_l) sum_{rho in supp} |rho_l|` over the coefficient support of `F_m`.
    pub rank_bound: f64,
    /// `2 / ((2 pi)^d min(s, t)) ||F - F_m||_{L^1}`.
    pub norm_bound: f64,
    pub within_bound: bool,
    /// Spectral-norm split: threshold `omega = sqrt(norm_part)`.
    pub spectral_omega: f64,
    /// `(rank(R) + #{sigma_i(N) > omega}) / r_n`.
    pub spectral_rank_part: f64,
}

pub fn acs_witness(f: &SymbolSpec, nvec: &[usize], m: usize) -> Result<AcsWitness> {
    let b = assemble_circulant(&acs_truncate(f, nvec, m)?)?;
    let g = f.reduce_to_right();
    let fm = truncated_symbol(f, m)?;
    let t_fm = toeplitz::assemble(&fm, nvec)?;
    let r = t_fm.sub(&b)?;
    let nmat = toeplitz::assemble(&g, nvec)?.sub(&t_fm)?;
    let r_n = (nvec.iter().product::<usize>() * f.s().min(f.t())) as f64;

    let rank = r.rank_h()?;
    let sv_n = nmat.singular_values()?;
    let norm_part = sv_n.iter().sum::<f64>() / r_n;

    let poly = fm.as_trig_poly().expect("truncation is a polynomial");
    let entries = poly.sandwich_entries(fm.kernel());
    let largest = entries
        .values()
        .map(|c| c.as_slice().iter().map(|q| q.norm()).fold(0.0, f64::max))
        .fold(0.0, f64::max);
    let mut rank_bound = 0.0;
    for (rho, c) in &entries {
        let size = c.as_slice().iter().map(|q| q.norm()).fold(0.0, f64::max);
        if size > SUPPORT_TOL * largest {
            rank_bound += rho
                .iter()
                .zip(nvec)
                .map(|(&x, &n)| x.unsigned_abs() as f64 / n as f64)
                .sum::<f64>();
        }
    }
    rank_bound *= 2.0;

    let one = C64::new(1.0, 0.0);
    let diff = SymbolSpec::linear_combination(one, &g, -one, &fm)?;
    let norm_bound = 2.0
        / ((2.0 * std::f64::consts::PI).powi(f.d() as i32) * f.s().min(f.t()) as f64)
        * diff.lp_norm(1.0)?;

    let rank_part = rank as f64 / r_n;
    let spectral_omega = norm_part.sqrt();
    let above = sv_n.iter().filter(|&&x| x > spectral_omega).count();
    Ok(AcsWitness {
        nvec: nvec.to_vec(),
        m,
        rank_part,
        norm_part,
        rank_bound,
        norm_bound,
        within_bound: rank_part <= rank_bound + 1e-12,
        spectral_omega,
        spectral_rank_part: (rank + above) as f64 / r_n,
    })
}

/// For each threshold `M`, the fraction `#{i : sigma_i(A) > M} / min(rows, cols)`.
pub fn su_profile(a: &QMatrix, thresholds: &[f64]) -> Result<Vec<f64>> {
    if let Some(&bad) = thresholds.iter().find(|&&m| !(m > 0.0)) {
        return Err(Error::InvalidArgument(format!(
            "thresholds must be positive, got {bad}"
        )));
    }
    let sv = a.singular_values()?;
    let r = a.rows().min(a.cols()).max(1) as f64;
    Ok(thresholds
        .iter()
        .map(|&m| sv.iter().filter(|&&x| x > m).count() as f64 / r)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;

    fn scalar(q: Quaternion) -> QMatrix {
        QMatrix::diag(&[q])
    }

    fn shift_j(n: usize) -> CirculantSpec {
        CirculantSpec::new(&[n], 1, 1, [(vec![1], scalar(Quaternion::J))]).unwrap()
    }

    #[test]
    fn shift_circulant() {
        let c = assemble_circulant(&shift_j(4)).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                let want = if a == (b + 1) % 4 {
                    Quaternion::J
                } else {
                    Quaternion::ZERO
                };
                assert_eq!(c[(a, b)], want);
            }
        }
        let q = Quaternion::new(1.0, -1.0, 2.0, 0.5);
        let id =
            assemble_circulant(&CirculantSpec::new(&[3], 1, 1, [(vec![0], scalar(q))]).unwrap())
                .unwrap();
        assert_eq!(
            id,
            QMatrix::diag(&[q; 3])
                .with_shape(BlockShape {
                    nvec: vec![3],
                    s: 1,
                    t: 1
                })
                .unwrap()
        );
    }

    #[test]
    fn two_level_shift_is_kronecker() {
        let q = Quaternion::new(0.0, 1.0, 1.0, 0.0);
        let c = assemble_circulant(
            &CirculantSpec::new(&[2, 2], 1, 1, [(vec![1, 0], scalar(q))]).unwrap(),
        )
        .unwrap();
        let cycle = CMatrix::from_fn(2, 2, |r, c| {
            if r != c {
                C64::new(1.0, 0.0)
            } else {
                C64::new(0.0, 0.0)
            }
        });
        let pattern = cycle.kron(&CMatrix::identity(2));
        for r in 0..4 {
            for col in 0..4 {
                let want = if pattern[(r, col)].re == 1.0 {
                    q
                } else {
                    Quaternion::ZERO
                };
                assert_eq!(c[(r, col)], want);
            }
        }
    }

    #[test]
    fn colliding_residues_rejected() {
        let e = scalar(Quaternion::ONE);
        assert!(CirculantSpec::new(&[2], 1, 1, [(vec![1], e.clone()), (vec![-1], e)]).is_err());
    }

    #[test]
    fn dft_identities() {
        assert_eq!(qdft_matrix(1)[(0, 0)], C64::new(1.0, 0.0));
        let f2 = qdft_matrix(2);
        let h = 1.0 / 2f64.sqrt();
        assert_eq!(f2[(1, 1)], C64::new(-h, 0.0));
        assert_eq!(reversal(2), CMatrix::identity(2));
        let a3 = reversal(3);
        assert_eq!(a3[(0, 0)].re, 1.0);
        assert_eq!(a3[(2, 1)].re, 1.0);
        assert_eq!(a3[(1, 2)].re, 1.0);
        for n in 1..=8 {
            let f = qdft_matrix(n);
            let sq = f.matmul(&f).unwrap();
            assert!(sq.sub(&reversal(n)).unwrap().max_abs() < 1e-12, "n = {n}");
            assert!(
                f.matmul(&f.adjoint())
                    .unwrap()
                    .sub(&CMatrix::identity(n))
                    .unwrap()
                    .max_abs()
                    < 1e-12
            );
        }
    }

    #[test]
    fn orderings() {
        let o = fix_pair_order(&[4]).unwrap();
        assert_eq!(o.fixed, vec![vec![0], vec![2]]);
        assert_eq!(o.pairs, vec![(vec![1], vec![3])]);
        assert_eq!(o.order, vec![0, 2, 1, 3]);
        let o = fix_pair_order(&[2, 2]).unwrap();
        assert_eq!(o.fixed.len(), 4);
        assert!(o.pairs.is_empty());
        assert_eq!(fix_pair_order(&[3]).unwrap().order, vec![0, 1, 2]);
    }

    #[test]
    fn shift_fibers() {
        let form = canonical_x_form(&shift_j(4)).unwrap();
        assert_eq!(form.fixed[0], (vec![0], scalar(Quaternion::J)));
        assert_eq!(form.fixed[1], (vec![2], scalar(-Quaternion::J)));
        let minus_ij = Quaternion::new(0.0, 0.0, 0.0, -1.0);
        let want = QMatrix::from_vec(
            2,
            2,
            vec![Quaternion::ZERO, minus_ij, -minus_ij, Quaternion::ZERO],
        )
        .unwrap();
        assert_eq!(form.paired[0].1, want);
        assert!(form.residual < 1e-14);
    }

    #[test]
    fn flipped_fibers_fail_reconstruction() {
        let err = canonical_x_form_with(&shift_j(4), FiberFault::FlipSign).unwrap_err();
        assert!(matches!(err, Error::Reconstruction { .. }));
    }

    #[test]
    fn constant_fibers() {
        let q = Quaternion::new(1.0, 0.5, -0.5, 2.0);
        let form =
            canonical_x_form(&CirculantSpec::new(&[5], 1, 1, [(vec![0], scalar(q))]).unwrap())
                .unwrap();
        assert!(form.fixed.iter().all(|(_, f)| *f == scalar(q)));
        let (z, w) = (
            Quaternion::from_complex(q.z()),
            Quaternion::new(0.0, 0.0, q.q2, q.q3),
        );
        let x = QMatrix::from_vec(2, 2, vec![z, w, w, z]).unwrap();
        assert!(form.paired.iter().all(|(_, f)| *f == x));
        let c = Quaternion::new(1.0, 0.5, 0.0, 0.0);
        let form =
            canonical_x_form(&CirculantSpec::new(&[5], 1, 1, [(vec![0], scalar(c))]).unwrap())
                .unwrap();
        assert!(form
            .paired
            .iter()
            .all(|(_, f)| *f == QMatrix::diag(&[c, c])));
    }

    #[test]
    fn spectra_of_simple_circulants() {
        let sp = circulant_spectrum(&shift_j(4)).unwrap();
        assert!(sp.singular_values.iter().all(|s| (s - 1.0).abs() < 1e-14));
        let q = Quaternion::new(0.0, 2.0f64.sqrt(), 0.0, 2.0f64.sqrt());
        let spec = CirculantSpec::new(&[5], 1, 1, [(vec![0], scalar(q))]).unwrap();
        let sp = circulant_spectrum(&spec).unwrap();
        assert_eq!(sp.singular_values.len(), 5);
        assert!(sp.singular_values.iter().all(|s| (s - 2.0).abs() < 1e-14));
        let (sv, ev) = fiber_spectrum_check(&shift_j(4)).unwrap();
        assert!(sv < 1e-9 && ev < 1e-9);
    }

    #[test]
    fn shifted_j_witness() {
        let w = SymbolSpec::trig_poly(
            TrigPoly::from_slice_coeffs(1, 1, 1, [], [(vec![-1], CMatrix::identity(1))]).unwrap(),
            KernelPartition::right(1),
        )
        .unwrap();
        let b = assemble_circulant(&acs_truncate(&w, &[8], 1).unwrap()).unwrap();
        assert_eq!(b, assemble_circulant(&shift_j(8)).unwrap());
        let wit = acs_witness(&w, &[8], 1).unwrap();
        assert_eq!(wit.rank_part, 0.125);
        assert_eq!(wit.rank_bound, 0.25);
        assert_eq!(wit.norm_part, 0.0);
        assert!(wit.within_bound);
        assert!(acs_truncate(&w, &[2], 1).is_err());
    }

    #[test]
    fn profile() {
        let id = QMatrix::identity(4);
        assert_eq!(su_profile(&id, &[2.0, 0.5]).unwrap(), vec![0.0, 1.0]);
        assert!(su_profile(&id, &[0.0]).is_err());
    }
}

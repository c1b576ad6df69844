use std::collections::{BTreeMap, BTreeSet};

use crate::cla::CMatrix;
use crate::error::{Error, Result};
use crate::qmat::QMatrix;
use crate::quat::C64;

use super::kernel::KernelPartition;

pub type MultiIndex = Vec<i64>;

/// Quaternion trigonometric polynomial `F = Z + W j` stored through the
/// ordinary complex Fourier coefficients of its slice components:
/// `Z(theta) = sum_m Zhat(m) e^{i<m,theta>}` and likewise for `W`.
///
/// The sandwich coefficient for a kernel partition is read off as
/// `Zhat(m) + What(flip(m)) j`, so one table serves every partition.
#[derive(Clone, Debug, PartialEq)]
pub struct TrigPoly {
    d: usize,
    s: usize,
    t: usize,
    z: BTreeMap<MultiIndex, CMatrix>,
    w: BTreeMap<MultiIndex, CMatrix>,
}

impl TrigPoly {
    pub fn zero(d: usize, s: usize, t: usize) -> Self {
        TrigPoly {
            d,
            s,
            t,
            z: BTreeMap::new(),
            w: BTreeMap::new(),
        }
    }

    /// Builds the polynomial from slice coefficient tables.
    pub fn from_slice_coeffs(
        d: usize,
        s: usize,
        t: usize,
        z: impl IntoIterator<Item = (MultiIndex, CMatrix)>,
        w: impl IntoIterator<Item = (MultiIndex, CMatrix)>,
    ) -> Result<Self> {
        let mut p = TrigPoly::zero(d, s, t);
        for (m, c) in z {
            p.check_entry(&m, c.shape())?;
            accumulate(&mut p.z, m, c);
        }
        for (m, c) in w {
            p.check_entry(&m, c.shape())?;
            accumulate(&mut p.w, m, c);
        }
        p.prune();
        Ok(p)
    }

    /// Builds the polynomial whose sandwich coefficients for `kernel` are `entries`.
    pub fn from_sandwich(
        kernel: &KernelPartition,
        s: usize,
        t: usize,
        entries: impl IntoIterator<Item = (MultiIndex, QMatrix)>,
    ) -> Result<Self> {
        let d = kernel.d();
        let mut p = TrigPoly::zero(d, s, t);
        for (m, block) in entries {
            p.check_entry(&m, block.dims())?;
            let (bz, bw) = block.slice_split();
            let flipped = kernel.flip_index(&m);
            accumulate(&mut p.z, m, bz);
            accumulate(&mut p.w, flipped, bw);
        }
        p.prune();
        Ok(p)
    }

    fn check_entry(&self, m: &[i64], shape: (usize, usize)) -> Result<()> {
        if m.len() != self.d {
            return Err(Error::InvalidArgument(format!(
                "multi-index {m:?} has length {} but d = {}",
                m.len(),
                self.d
            )));
        }
        if shape != (self.s, self.t) {
            return Err(Error::InvalidArgument(format!(
                "coefficient block is {}x{} but the symbol is {}x{}",
                shape.0, shape.1, self.s, self.t
            )));
        }
        Ok(())
    }

    fn prune(&mut self) {
        self.z.retain(|_, c| c.max_abs() != 0.0);
        self.w.retain(|_, c| c.max_abs() != 0.0);
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn block_dims(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    pub fn z_coeffs(&self) -> &BTreeMap<MultiIndex, CMatrix> {
        &self.z
    }

    pub fn w_coeffs(&self) -> &BTreeMap<MultiIndex, CMatrix> {
        &self.w
    }

    pub fn zhat(&self, m: &[i64]) -> CMatrix {
        self.z
            .get(m)
            .cloned()
            .unwrap_or_else(|| CMatrix::zeros(self.s, self.t))
    }

    pub fn what(&self, m: &[i64]) -> CMatrix {
        self.w
            .get(m)
            .cloned()
            .unwrap_or_else(|| CMatrix::zeros(self.s, self.t))
    }

    /// Sandwich Fourier coefficient `Zhat(m) + What(flip(m)) j`.
    pub fn coeff(&self, kernel: &KernelPartition, m: &[i64]) -> QMatrix {
        let w = self.what(&kernel.flip_index(m));
        QMatrix::from_slices(&self.zhat(m), &w).expect("blocks share a shape")
    }

    /// All nonzero sandwich coefficients for `kernel`.
    pub fn sandwich_entries(&self, kernel: &KernelPartition) -> BTreeMap<MultiIndex, QMatrix> {
        let mut keys: BTreeSet<MultiIndex> = self.z.keys().cloned().collect();
        keys.extend(self.w.keys().map(|m| kernel.flip_index(m)));
        keys.into_iter()
            .map(|m| (m.clone(), self.coeff(kernel, &m)))
            .collect()
    }

    /// Union of the supports of both slice tables.
    pub fn support(&self) -> BTreeSet<MultiIndex> {
        self.z.keys().chain(self.w.keys()).cloned().collect()
    }

    /// `max ||m||_inf` over the support (0 for the zero polynomial).
    pub fn degree(&self) -> usize {
        self.support()
            .iter()
            .map(|m| {
                m.iter()
                    .map(|v| v.unsigned_abs() as usize)
                    .max()
                    .unwrap_or(0)
            })
            .max()
            .unwrap_or(0)
    }

    /// Slice components `(Z(theta), W(theta))`.
    pub fn eval_slices(&self, theta: &[f64]) -> (CMatrix, CMatrix) {
        let series = |table: &BTreeMap<MultiIndex, CMatrix>| {
            let mut acc = CMatrix::zeros(self.s, self.t);
            for (m, c) in table {
                let phase: f64 = m.iter().zip(theta).map(|(&k, &x)| k as f64 * x).sum();
                let e = C64::new(phase.cos(), phase.sin());
                acc = acc.add(&c.scale(e)).expect("same shape");
            }
            acc
        };
        (series(&self.z), series(&self.w))
    }

    pub fn eval(&self, theta: &[f64]) -> QMatrix {
        let (z, w) = self.eval_slices(theta);
        QMatrix::from_slices(&z, &w).expect("same shape")
    }

    /// Pointwise conjugate transpose: `Z -> Z*`, `W -> -W^T`.
    pub fn adjoint(&self) -> TrigPoly {
        let z = self
            .z
            .iter()
            .map(|(m, c)| (m.iter().map(|v| -v).collect(), c.adjoint()));
        let w = self
            .w
            .iter()
            .map(|(m, c)| (m.clone(), c.transpose().scale(C64::new(-1.0, 0.0))));
        TrigPoly::from_slice_coeffs(self.d, self.t, self.s, z, w).expect("consistent shapes")
    }

    /// `theta -> Z(theta) + W(r(theta)) j` where `r` negates the left variables of `kernel`.
    pub fn reflect_w(&self, kernel: &KernelPartition) -> TrigPoly {
        let w = self
            .w
            .iter()
            .map(|(m, c)| (kernel.reflect_index(m), c.clone()));
        TrigPoly::from_slice_coeffs(self.d, self.s, self.t, self.z.clone(), w)
            .expect("consistent shapes")
    }

    /// `a F + b G` for slice scalars `a, b` acting from the left.
    pub fn linear_combination(a: C64, f: &TrigPoly, b: C64, g: &TrigPoly) -> Result<TrigPoly> {
        if (f.d, f.s, f.t) != (g.d, g.s, g.t) {
            return Err(Error::InvalidArgument(
                "linear combination of symbols with different shapes".into(),
            ));
        }
        let scaled = |p: &TrigPoly, x: C64| {
            let z: Vec<_> = p.z.iter().map(|(m, c)| (m.clone(), c.scale(x))).collect();
            let w: Vec<_> = p.w.iter().map(|(m, c)| (m.clone(), c.scale(x))).collect();
            (z, w)
        };
        let (fz, fw) = scaled(f, a);
        let (gz, gw) = scaled(g, b);
        TrigPoly::from_slice_coeffs(
            f.d,
            f.s,
            f.t,
            fz.into_iter().chain(gz),
            fw.into_iter().chain(gw),
        )
    }

    /// Keeps coefficients with `||m||_inf <= m_max`.
    pub fn truncate(&self, m_max: usize) -> TrigPoly {
        let keep = |m: &MultiIndex| m.iter().all(|v| v.unsigned_abs() as usize <= m_max);
        TrigPoly {
            d: self.d,
            s: self.s,
            t: self.t,
            z: self
                .z
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            w: self
                .w
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

fn accumulate(table: &mut BTreeMap<MultiIndex, CMatrix>, m: MultiIndex, c: CMatrix) {
    match table.get_mut(&m) {
        Some(existing) => *existing = existing.add(&c).expect("same shape"),
        None => {
            table.insert(m, c);
        }
    }
}

//! Uniform grids on the torus `[-pi, pi)^d` and the Fourier exponentials on them.

use std::f64::consts::PI;

use crate::quat::C64;

/// Maps an angle to its representative in `[-pi, pi)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let r = theta - two_pi * ((theta + PI) / two_pi).floor();
    if r >= PI {
        r - two_pi
    } else {
        r
    }
}

pub fn wrap_point(theta: &[f64]) -> Vec<f64> {
    theta.iter().map(|&t| wrap_angle(t)).collect()
}

/// `m^d` points per coordinate, enumerated lexicographically with the last
/// coordinate fastest. The default grid is cell-centred,
/// `theta_j = -pi + 2 pi (j + 1/2) / m`: negation maps it onto itself and no
/// point lies on the seam `+-pi`. The vertex grid `theta_j = -pi + 2 pi j / m`
/// contains `0` and the seam, and suits continuous symbols.
#[derive(Clone, Debug)]
pub struct TorusGrid {
    pub d: usize,
    pub m: usize,
    centred: bool,
    /// `e^{-i pi r / m}` for `r` in `0..2m`.
    table: Vec<C64>,
}

impl TorusGrid {
    pub fn new(d: usize, m: usize) -> Self {
        TorusGrid::build(d, m, true)
    }

    pub fn vertices(d: usize, m: usize) -> Self {
        TorusGrid::build(d, m, false)
    }

    fn build(d: usize, m: usize, centred: bool) -> Self {
        let table = (0..2 * m)
            .map(|r| {
                let a = -PI * r as f64 / m as f64;
                C64::new(a.cos(), a.sin())
            })
            .collect();
        TorusGrid {
            d,
            m,
            centred,
            table,
        }
    }

    pub fn len(&self) -> usize {
        self.m.pow(self.d as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_centred(&self) -> bool {
        self.centred
    }

    fn half_steps(&self, j: usize) -> usize {
        2 * j + usize::from(self.centred)
    }

    /// Exactly odd on the centred grid: `angle(m - 1 - j) == -angle(j)` bit for bit.
    pub fn angle(&self, j: usize) -> f64 {
        (self.half_steps(j) as f64 - self.m as f64) * PI / self.m as f64
    }

    /// Per-coordinate grid indices of the flat index `flat`.
    pub fn indices(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.d];
        for slot in idx.iter_mut().rev() {
            *slot = flat % self.m;
            flat /= self.m;
        }
        idx
    }

    pub fn point(&self, flat: usize) -> Vec<f64> {
        self.indices(flat)
            .into_iter()
            .map(|j| self.angle(j))
            .collect()
    }

    pub fn points(&self) -> impl Iterator<Item = Vec<f64>> + '_ {
        (0..self.len()).map(move |f| self.point(f))
    }

    /// `e^{-i k theta_j} = (-1)^k e^{-i pi k h_j / m}` with `h_j` half steps from `-pi`.
    pub fn exp_minus(&self, k: i64, j: usize) -> C64 {
        let two_m = 2 * self.m as i64;
        let r = (k.rem_euclid(two_m) * self.half_steps(j) as i64).rem_euclid(two_m) as usize;
        let v = self.table[r];
        if k.rem_euclid(2) == 0 {
            v
        } else {
            -v
        }
    }

    /// `e^{-i <k, theta>}` restricted to the coordinates selected by `mask`.
    pub fn exp_minus_masked(&self, k: &[i64], idx: &[usize], mask: &[bool]) -> C64 {
        let mut acc = C64::new(1.0, 0.0);
        for l in 0..self.d {
            if mask[l] && k[l] != 0 {
                acc *= self.exp_minus(k[l], idx[l]);
            }
        }
        acc
    }

    /// Flat index of the point `-theta` (mod `2 pi`).
    pub fn negate(&self, flat: usize) -> usize {
        let m = self.m;
        let neg = |j: usize| if self.centred { m - 1 - j } else { (m - j) % m };
        self.indices(flat)
            .iter()
            .fold(0, |acc, &j| acc * m + neg(j))
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn centred_angles_negate_exactly() {
        for m in [7, 64, 128, 4096] {
            let g = super::TorusGrid::new(1, m);
            for j in 0..m {
                assert_eq!(g.angle(m - 1 - j), -g.angle(j));
            }
        }
    }

    use super::*;

    #[test]
    fn wrap() {
        assert_eq!(wrap_angle(PI), -PI);
        assert_eq!(wrap_angle(-PI), -PI);
        assert!((wrap_angle(3.0 * PI / 2.0) + PI / 2.0).abs() < 1e-15);
        assert_eq!(wrap_angle(0.25), 0.25);
    }

    #[test]
    fn exponentials_match_direct_evaluation() {
        for g in [TorusGrid::new(1, 12), TorusGrid::vertices(1, 12)] {
            for k in -7..=7 {
                for j in 0..12 {
                    let th = g.angle(j);
                    let direct = C64::new((k as f64 * th).cos(), -(k as f64 * th).sin());
                    assert!((g.exp_minus(k, j) - direct).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn negation_is_an_involution() {
        for g in [TorusGrid::new(2, 6), TorusGrid::vertices(2, 6)] {
            for f in 0..g.len() {
                assert_eq!(g.negate(g.negate(f)), f);
                let p = g.point(f);
                let q = g.point(g.negate(f));
                for (a, b) in p.iter().zip(&q) {
                    assert!((wrap_angle(-a) - b).abs() < 1e-12);
                }
            }
        }
        assert_eq!(TorusGrid::new(1, 4).angle(0), -0.75 * PI);
        assert_eq!(TorusGrid::vertices(1, 4).angle(2), 0.0);
    }
}

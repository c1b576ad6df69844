//! Real quaternions `q0 + q1 i + q2 j + q3 k` with `k = ij`, and their
//! decomposition over the slice `C_i`: every quaternion is `z + w j` for
//! unique complex `z, w`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

pub type C64 = Complex64;

/// Default relative tolerance for "is real" style checks.
pub const REAL_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Quaternion {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
}

/// The pair `(z, w)` with `q = z + w j`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SlicePair {
    pub z: C64,
    pub w: C64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Quaternion { q0, q1, q2, q3 }
    }

    pub const fn real(x: f64) -> Self {
        Quaternion::new(x, 0.0, 0.0, 0.0)
    }

    /// Embeds `z` of the slice `C_i`.
    pub fn from_complex(z: C64) -> Self {
        Quaternion::new(z.re, z.im, 0.0, 0.0)
    }

    /// `z + w j`.
    pub fn from_slices(z: C64, w: C64) -> Self {
        Quaternion::new(z.re, z.im, w.re, w.im)
    }

    pub fn split(self) -> SlicePair {
        SlicePair {
            z: C64::new(self.q0, self.q1),
            w: C64::new(self.q2, self.q3),
        }
    }

    pub fn z(self) -> C64 {
        C64::new(self.q0, self.q1)
    }

    pub fn w(self) -> C64 {
        C64::new(self.q2, self.q3)
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.q0, -self.q1, -self.q2, -self.q3)
    }

    pub fn norm_sqr(self) -> f64 {
        self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn re(self) -> f64 {
        self.q0
    }

    /// Imaginary part `q1 i + q2 j + q3 k`.
    pub fn im(self) -> Self {
        Quaternion::new(0.0, self.q1, self.q2, self.q3)
    }

    /// True when the imaginary part is below `tol * |q|`.
    pub fn is_real(self, tol: f64) -> bool {
        self.im().norm() <= tol * self.norm()
    }

    pub fn scale(self, a: f64) -> Self {
        Quaternion::new(a * self.q0, a * self.q1, a * self.q2, a * self.q3)
    }

    /// Left multiplication by a slice scalar: `a q`.
    pub fn lmul_complex(self, a: C64) -> Self {
        let SlicePair { z, w } = self.split();
        Quaternion::from_slices(a * z, a * w)
    }

    /// Right multiplication by a slice scalar: `q a = z a + w conj(a) j`.
    pub fn rmul_complex(self, a: C64) -> Self {
        let SlicePair { z, w } = self.split();
        Quaternion::from_slices(z * a, w * a.conj())
    }

    /// Exponential `e^{u theta} = cos theta + u sin theta` for a unit imaginary `u`.
    pub fn exp_axis(u: Quaternion, theta: f64) -> Self {
        Quaternion::real(theta.cos()) + u.scale(theta.sin())
    }

    pub fn is_finite(self) -> bool {
        self.q0.is_finite() && self.q1.is_finite() && self.q2.is_finite() && self.q3.is_finite()
    }
}

/// Moves `j` past a slice scalar: `j a = conj(a) j`.
pub fn commute_j(a: C64) -> C64 {
    a.conj()
}

impl SlicePair {
    pub fn join(self) -> Quaternion {
        Quaternion::from_slices(self.z, self.w)
    }
}

impl From<f64> for Quaternion {
    fn from(x: f64) -> Self {
        Quaternion::real(x)
    }
}

impl From<C64> for Quaternion {
    fn from(z: C64) -> Self {
        Quaternion::from_complex(z)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.q0 + o.q0,
            self.q1 + o.q1,
            self.q2 + o.q2,
            self.q3 + o.q3,
        )
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Quaternion) {
        *self = *self + o;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.q0 - o.q0,
            self.q1 - o.q1,
            self.q2 - o.q2,
            self.q3 - o.q3,
        )
    }
}

impl SubAssign for Quaternion {
    fn sub_assign(&mut self, o: Quaternion) {
        *self = *self - o;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.q0, -self.q1, -self.q2, -self.q3)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, b: Quaternion) -> Quaternion {
        let a = self;
        Quaternion::new(
            a.q0 * b.q0 - a.q1 * b.q1 - a.q2 * b.q2 - a.q3 * b.q3,
            a.q0 * b.q1 + a.q1 * b.q0 + a.q2 * b.q3 - a.q3 * b.q2,
            a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
            a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, a: f64) -> Quaternion {
        self.scale(a)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}i{:+}j{:+}k", self.q0, self.q1, self.q2, self.q3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: [Quaternion; 3] = [Quaternion::I, Quaternion::J, Quaternion::K];

    #[test]
    fn unit_table() {
        // Rows: left factor i, j, k. Entries: (sign, index into Q) or -1 for the real unit.
        let expected = [
            [-Quaternion::ONE, Quaternion::K, -Quaternion::J],
            [-Quaternion::K, -Quaternion::ONE, Quaternion::I],
            [Quaternion::J, -Quaternion::I, -Quaternion::ONE],
        ];
        for (a, row) in expected.iter().enumerate() {
            for (b, want) in row.iter().enumerate() {
                assert_eq!(Q[a] * Q[b], *want, "unit product {a}{b}");
            }
        }
    }

    #[test]
    fn basic_products() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::I, -Quaternion::K);
        let p = Quaternion::new(1.0, 1.0, 0.0, 0.0);
        assert_eq!(p * p.conj(), Quaternion::real(2.0));
    }

    #[test]
    fn conj_norm_split() {
        let q = Quaternion::new(1.0, 2.0, 3.0, 4.0);
        assert_eq!(q.conj(), Quaternion::new(1.0, -2.0, -3.0, -4.0));
        assert_eq!(Quaternion::new(1.0, 1.0, 1.0, 1.0).norm(), 2.0);
        let s = q.split();
        assert_eq!(s.z, C64::new(1.0, 2.0));
        assert_eq!(s.w, C64::new(3.0, 4.0));
        assert_eq!(
            Quaternion::J.split(),
            SlicePair {
                z: C64::new(0.0, 0.0),
                w: C64::new(1.0, 0.0)
            }
        );
        assert_eq!(s.join(), q);
    }

    #[test]
    fn commute_j_examples() {
        assert_eq!(commute_j(C64::new(0.0, 1.0)), C64::new(0.0, -1.0));
        assert_eq!(commute_j(C64::new(1.0, 0.0)), C64::new(1.0, 0.0));
    }

    #[test]
    fn slice_scalar_products() {
        let q = Quaternion::new(0.3, -1.2, 0.7, 2.0);
        let a = C64::new(0.4, -0.9);
        let aq = Quaternion::from_complex(a);
        assert_eq!(q.lmul_complex(a), aq * q);
        let diff = q.rmul_complex(a) - q * aq;
        assert!(diff.norm() < 1e-15);
    }
}

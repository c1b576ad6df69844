//! Quaternion block multilevel Toeplitz and circulant matrices built from
//! matrix-valued generating functions on the torus, their complex symplectic
//! embedding, and numerical checks of the resulting spectral and
//! singular-value distributions.

pub mod circulant;
pub mod cla;
pub mod distribution;
pub mod embed;
pub mod error;
pub mod experiment;
pub mod qmat;
pub mod quat;
pub mod random;
pub mod selftest;
pub mod svg;
pub mod symbol;
pub mod toeplitz;
pub mod torus;

pub use cla::CMatrix;
pub use error::{Error, Result};
pub use qmat::{BlockShape, QMatrix, QSpectrum};
pub use quat::{Quaternion, SlicePair, C64};

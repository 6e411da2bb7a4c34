//! Spin-1 observable parameterization of qutrit states.
//!
//! The entry map is definitional: weights on the diagonal, and
//!
//! ```text
//! rho01 = (q3 + i a3)/2,  rho02 = (q2 - i a2)/2,  rho12 = -(q1 + i a1)/2
//! ```
//!
//! with the lower triangle fixed by conjugation. Note the minus signs on the
//! `(q1, a1)` pair.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::DensityMatrix;

/// Tolerance on `omega_1 + omega_2 + omega_3 = 1`.
pub const WEIGHT_SUM_TOL: f64 = 1e-12;

/// The `(omega_i, a_i, q_i)` coordinates of a qutrit state.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SpinOneParams {
    /// Diagonal weights; must sum to one.
    pub omega: [f64; 3],
    /// Dipole-type parameters.
    pub a: [f64; 3],
    /// Quadrupole-type parameters.
    pub q: [f64; 3],
}

impl SpinOneParams {
    pub fn new(omega: [f64; 3], a: [f64; 3], q: [f64; 3]) -> Self {
        Self { omega, a, q }
    }

    /// Builds the density matrix from the entry map above.
    pub fn to_matrix(&self) -> Result<DensityMatrix> {
        let sum = self.omega[0] + self.omega[1] + self.omega[2];
        if (sum - 1.0).abs() > WEIGHT_SUM_TOL {
            return Err(Error::WeightSumViolation { sum });
        }
        let upper = [
            Complex64::new(self.q[2] / 2.0, self.a[2] / 2.0),
            Complex64::new(self.q[1] / 2.0, -self.a[1] / 2.0),
            Complex64::new(-self.q[0] / 2.0, -self.a[0] / 2.0),
        ];
        Ok(DensityMatrix::from_parts(self.omega, upper))
    }

    /// Reads the parameters back off the matrix entries.
    pub fn from_matrix(rho: &DensityMatrix) -> Self {
        let u01 = rho.entry(0, 1);
        let u02 = rho.entry(0, 2);
        let u12 = rho.entry(1, 2);
        Self {
            omega: [rho.entry(0, 0).re, rho.entry(1, 1).re, rho.entry(2, 2).re],
            a: [-2.0 * u12.im, -2.0 * u02.im, 2.0 * u01.im],
            q: [-2.0 * u12.re, 2.0 * u02.re, 2.0 * u01.re],
        }
    }
}

/// Weight triple of the angular representation:
/// `(sin^2(theta) cos^2(phi), sin^2(theta) sin^2(phi), cos^2(theta))`.
///
/// The squares make the result valid for unrestricted angles, and the sum is
/// one up to rounding.
pub fn weights_from_angles(theta: f64, phi: f64) -> [f64; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [(st * cp).powi(2), (st * sp).powi(2), ct * ct]
}

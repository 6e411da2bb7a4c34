//! Density matrices and their spectral machinery.
//!
//! A qutrit state is a 3x3 complex Hermitian matrix with unit trace.
//! Positive semidefiniteness is deliberately *not* an invariant of
//! [`DensityMatrix`]: non-physical matrices must stay representable so they
//! can be analyzed and rejected by [`DensityMatrix::classify`].
//!
//! The classification chain works on two independent routes:
//! the characteristic-polynomial coefficients `e1, e2, e3` (elementary
//! symmetric functions of the eigenvalues) and the power-sum trace
//! invariants `I1 = tr rho`, `I2 = tr rho^2`, `I3 = 3 tr rho^2 - 2 tr rho^3`.
//! For unit-trace input they are linked by `I2 = 1 - 2 e2` and
//! `I3 = 1 - 6 e3`, which the test suite cross-checks.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Default tolerance for [`DensityMatrix::classify`].
pub const DEFAULT_CLASSIFY_TOL: f64 = 1e-9;

/// Default tolerance for [`DensityMatrix::validate`].
pub const DEFAULT_VALIDATE_TOL: f64 = 1e-12;

/// Where a matrix sits relative to the physical state space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PurityClass {
    /// Not positive semidefinite: no quantum state at all.
    NotAState,
    /// Full-rank state strictly inside the state space.
    MixedInterior,
    /// Rank-deficient but not rank-1: on the boundary surface.
    BoundaryMixed,
    /// Rank-1 projector.
    Pure,
}

impl std::fmt::Display for PurityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            PurityClass::NotAState => "NotAState",
            PurityClass::MixedInterior => "MixedInterior",
            PurityClass::BoundaryMixed => "BoundaryMixed",
            PurityClass::Pure => "Pure",
        };
        f.write_str(s)
    }
}

/// Elementary symmetric functions of the eigenvalues.
///
/// `e1 = tr rho`, `e2 = (tr^2 rho - tr rho^2)/2`, `e3 = det rho`.
/// All three are real for Hermitian input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharPoly {
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
}

/// Power-sum trace invariants `(I1, I2, I3)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceInvariants {
    /// `tr rho`
    pub i1: f64,
    /// `tr rho^2`
    pub i2: f64,
    /// `3 tr rho^2 - 2 tr rho^3`
    pub i3: f64,
}

/// 3x3 complex Hermitian matrix with unit trace.
///
/// Stored entries are exactly Hermitian: constructors either build them from
/// parameters (Hermitian by construction) or symmetrize validated input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    m: [[Complex64; 3]; 3],
}

impl DensityMatrix {
    /// Validates raw entries and returns the Hermitian average `(M + M^t*)/2`.
    ///
    /// Asymmetry up to `tol` is repaired by symmetrization so that
    /// file-sourced matrices with rounding noise stay usable; anything larger
    /// is rejected. The trace is re-checked after symmetrization.
    pub fn validate(raw: [[Complex64; 3]; 3], tol: f64) -> Result<Self> {
        let mut asymmetry = 0.0_f64;
        for i in 0..3 {
            for j in i..3 {
                let d = (raw[i][j] - raw[j][i].conj()).norm();
                asymmetry = asymmetry.max(d);
            }
        }
        if asymmetry > tol {
            return Err(Error::NotHermitian { asymmetry, tol });
        }
        let mut m = [[Complex64::new(0.0, 0.0); 3]; 3];
        for i in 0..3 {
            m[i][i] = Complex64::new(raw[i][i].re, 0.0);
            for j in (i + 1)..3 {
                let avg = (raw[i][j] + raw[j][i].conj()) * 0.5;
                m[i][j] = avg;
                m[j][i] = avg.conj();
            }
        }
        let trace = m[0][0].re + m[1][1].re + m[2][2].re;
        let deviation = (trace - 1.0).abs();
        if deviation > tol {
            return Err(Error::TraceNotOne { deviation, tol });
        }
        Ok(Self { m })
    }

    /// Builds a diagonal matrix; the diagonal must sum to one.
    pub fn diagonal(d: [f64; 3]) -> Result<Self> {
        let deviation = (d[0] + d[1] + d[2] - 1.0).abs();
        if deviation > DEFAULT_VALIDATE_TOL {
            return Err(Error::TraceNotOne {
                deviation,
                tol: DEFAULT_VALIDATE_TOL,
            });
        }
        Ok(Self::from_parts(d, [Complex64::new(0.0, 0.0); 3]))
    }

    /// The maximally mixed state `I/3`.
    pub fn maximally_mixed() -> Self {
        Self::from_parts([1.0 / 3.0; 3], [Complex64::new(0.0, 0.0); 3])
    }

    /// Builds from a real diagonal and the upper triangle
    /// `(m01, m02, m12)`; the lower triangle follows by conjugation.
    pub(crate) fn from_parts(diag: [f64; 3], upper: [Complex64; 3]) -> Self {
        let z = |x: f64| Complex64::new(x, 0.0);
        Self {
            m: [
                [z(diag[0]), upper[0], upper[1]],
                [upper[0].conj(), z(diag[1]), upper[2]],
                [upper[1].conj(), upper[2].conj(), z(diag[2])],
            ],
        }
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.m[i][j]
    }

    pub fn entries(&self) -> [[Complex64; 3]; 3] {
        self.m
    }

    pub(crate) fn diag(&self) -> [f64; 3] {
        [self.m[0][0].re, self.m[1][1].re, self.m[2][2].re]
    }

    pub(crate) fn upper(&self) -> [Complex64; 3] {
        [self.m[0][1], self.m[0][2], self.m[1][2]]
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0].re + self.m[1][1].re + self.m[2][2].re
    }

    /// Determinant (real for Hermitian input).
    pub fn det(&self) -> f64 {
        hermitian_det(self.diag(), self.upper())
    }

    /// Elementary symmetric functions of the eigenvalues.
    pub fn char_poly(&self) -> CharPoly {
        let d = self.diag();
        let u = self.upper();
        let e1 = d[0] + d[1] + d[2];
        let e2 = d[0] * d[1] + d[1] * d[2] + d[2] * d[0]
            - u[0].norm_sqr()
            - u[1].norm_sqr()
            - u[2].norm_sqr();
        let e3 = hermitian_det(d, u);
        CharPoly { e1, e2, e3 }
    }

    /// Eigenvalues in descending order, from the trigonometric closed form
    /// for the characteristic cubic of a 3x3 Hermitian matrix.
    ///
    /// The acos argument is clamped to `[-1, 1]` so that degenerate
    /// (repeated-eigenvalue) inputs cannot produce NaN.
    pub fn eigenvalues(&self) -> [f64; 3] {
        let d = self.diag();
        let u = self.upper();
        let q = (d[0] + d[1] + d[2]) / 3.0;
        let off = u[0].norm_sqr() + u[1].norm_sqr() + u[2].norm_sqr();
        let p2 = (d[0] - q).powi(2) + (d[1] - q).powi(2) + (d[2] - q).powi(2) + 2.0 * off;
        if p2 <= 1e-30 {
            return [q, q, q];
        }
        let p = (p2 / 6.0).sqrt();
        let shifted = hermitian_det([d[0] - q, d[1] - q, d[2] - q], u);
        let r = (shifted / (2.0 * p * p * p)).clamp(-1.0, 1.0);
        let phi = r.acos() / 3.0;
        let hi = q + 2.0 * p * phi.cos();
        let lo = q + 2.0 * p * (phi + 2.0 * std::f64::consts::FRAC_PI_3).cos();
        let mid = 3.0 * q - hi - lo;
        [hi, mid, lo]
    }

    /// Power-sum trace invariants, computed directly from matrix powers
    /// (independently of [`Self::char_poly`]).
    pub fn trace_invariants(&self) -> TraceInvariants {
        let d = self.diag();
        let u = self.upper();
        let i1 = d[0] + d[1] + d[2];
        let off = u[0].norm_sqr() + u[1].norm_sqr() + u[2].norm_sqr();
        let i2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2] + 2.0 * off;
        let m2 = matmul(&self.m, &self.m);
        let mut tr3 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                tr3 += (m2[i][j] * self.m[j][i]).re;
            }
        }
        TraceInvariants {
            i1,
            i2,
            i3: 3.0 * i2 - 2.0 * tr3,
        }
    }

    /// Places the matrix in the purity trichotomy.
    ///
    /// `NotAState` is decided first from the signs of `e2` and `e3`
    /// (for unit-trace Hermitian matrices positivity is equivalent to
    /// `e2 >= 0` and `e3 >= 0`), which avoids false boundary labels from
    /// eigen-solver noise. The remaining classes follow from the trace
    /// invariants: `Pure` needs `I2 = I3 = 1`, the boundary needs `I3 = 1`.
    pub fn classify(&self, tol: f64) -> PurityClass {
        let cp = self.char_poly();
        if cp.e2 < -tol || cp.e3 < -tol {
            return PurityClass::NotAState;
        }
        let ti = self.trace_invariants();
        if (ti.i3 - 1.0).abs() <= tol {
            if (ti.i2 - 1.0).abs() <= tol {
                PurityClass::Pure
            } else {
                PurityClass::BoundaryMixed
            }
        } else {
            PurityClass::MixedInterior
        }
    }
}

/// Determinant of a Hermitian matrix given its real diagonal and upper
/// triangle `(m01, m02, m12)`; the result is exactly real.
fn hermitian_det(d: [f64; 3], u: [Complex64; 3]) -> f64 {
    d[0] * d[1] * d[2] + 2.0 * (u[0] * u[2] * u[1].conj()).re
        - d[0] * u[2].norm_sqr()
        - d[1] * u[1].norm_sqr()
        - d[2] * u[0].norm_sqr()
}

fn matmul(a: &[[Complex64; 3]; 3], b: &[[Complex64; 3]; 3]) -> [[Complex64; 3]; 3] {
    let mut out = [[Complex64::new(0.0, 0.0); 3]; 3];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
        }
    }
    out
}

//! The three 3-dimensional state vectors `w`, `u`, `v` and the mixing volume.
//!
//! For a state with spin-1 parameters `(omega, a, q)` define
//! `r_i^2 = (a_i^2 + q_i^2)/4`,
//! `D = a2 a3 q1 + a3 a1 q2 + a1 a2 q3 - q1 q2 q3` and
//! `X = 1/3 - 2 omega1 omega2 omega3 - D/2`. Then
//!
//! ```text
//! w_i   = sqrt(omega_i)
//! u_i^2 = 1/3 - 2 (omega_j omega_k - r_i^2)      (i,j,k cyclic)
//! v_i^2 = X + 6 omega_i r_i^2
//! ```
//!
//! The squares are the primitive quantities here: physical mixed states exist
//! with negative component squares (e.g. `diag(0, 1/2, 1/2)` has
//! `u_1^2 = -1/6`), so the signed squares are always reported and the real
//! vectors only when every square clears `-1e-12`. The component sums are
//! exact identities: `sum u_i^2 = tr rho^2` and
//! `sum v_i^2 = 3 tr rho^2 - 2 tr rho^3`.

use crate::error::{Error, Result};
use crate::matrix::DensityMatrix;
use crate::spin1::SpinOneParams;

/// Component squares in `[-REPRESENTABLE_TOL, 0)` are clamped to zero before
/// taking roots; anything more negative marks the vector non-representable.
pub const REPRESENTABLE_TOL: f64 = 1e-12;

/// Quantities derived from the spin-1 parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinDerived {
    /// `r_i^2 = (a_i^2 + q_i^2)/4`
    pub r_sq: [f64; 3],
    /// `D = a2 a3 q1 + a3 a1 q2 + a1 a2 q3 - q1 q2 q3`
    pub d: f64,
    /// `X = 1/3 - (4 omega1 omega2 omega3 + D)/2`
    pub x: f64,
}

/// The three state vectors of a single state, with signed squares kept
/// alongside the (possibly absent) real vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateVectors {
    /// `w = (sqrt(omega_1), sqrt(omega_2), sqrt(omega_3))`; unit length.
    pub w: [f64; 3],
    /// Signed component squares of `u`.
    pub u_sq: [f64; 3],
    /// Signed component squares of `v`.
    pub v_sq: [f64; 3],
    /// Real `u`, present only when all squares clear `-REPRESENTABLE_TOL`.
    pub u: Option<[f64; 3]>,
    /// Real `v`, present under the same condition.
    pub v: Option<[f64; 3]>,
    /// Parallelepiped volume `|(u x v) . w|`, when `u` and `v` are real.
    pub volume: Option<f64>,
    /// Angle between `u` and `v` in `[0, pi]`, when both are real.
    pub alpha: Option<f64>,
}

impl StateVectors {
    pub fn u_real(&self) -> bool {
        self.u.is_some()
    }

    pub fn v_real(&self) -> bool {
        self.v.is_some()
    }
}

/// Computes `r_i^2`, `D` and `X` from the spin-1 parameters.
pub fn derived_spin(p: &SpinOneParams) -> SpinDerived {
    let r_sq = [
        0.25 * (p.a[0] * p.a[0] + p.q[0] * p.q[0]),
        0.25 * (p.a[1] * p.a[1] + p.q[1] * p.q[1]),
        0.25 * (p.a[2] * p.a[2] + p.q[2] * p.q[2]),
    ];
    let d = p.a[1] * p.a[2] * p.q[0] + p.a[2] * p.a[0] * p.q[1] + p.a[0] * p.a[1] * p.q[2]
        - p.q[0] * p.q[1] * p.q[2];
    let x = 1.0 / 3.0 - 0.5 * (4.0 * p.omega[0] * p.omega[1] * p.omega[2] + d);
    SpinDerived { r_sq, d, x }
}

/// Componentwise square roots of the weights; unit length for any valid
/// weight triple.
///
/// Weights in `[-1e-12, 0)` are clamped to zero; anything more negative is a
/// `NegativeWeight` error.
pub fn w_vector(omega: [f64; 3]) -> Result<[f64; 3]> {
    let mut w = [0.0; 3];
    for (wi, &oi) in w.iter_mut().zip(omega.iter()) {
        if oi < -REPRESENTABLE_TOL {
            return Err(Error::NegativeWeight { weight: oi });
        }
        *wi = oi.max(0.0).sqrt();
    }
    Ok(w)
}

/// The three signed quantities `1/3 - 2 (omega_j omega_k - r_i^2)`, without
/// taking roots. Their sum equals `tr rho^2`.
pub fn u_signed_squares(p: &SpinOneParams) -> [f64; 3] {
    let r = derived_spin(p).r_sq;
    let o = p.omega;
    [
        1.0 / 3.0 - 2.0 * (o[1] * o[2] - r[0]),
        1.0 / 3.0 - 2.0 * (o[2] * o[0] - r[1]),
        1.0 / 3.0 - 2.0 * (o[0] * o[1] - r[2]),
    ]
}

/// The three signed quantities `X + 6 omega_i r_i^2`. Their sum equals
/// `3 tr rho^2 - 2 tr rho^3`, which is 1 exactly on the boundary surface.
pub fn v_signed_squares(p: &SpinOneParams) -> [f64; 3] {
    let sd = derived_spin(p);
    [
        sd.x + 6.0 * p.omega[0] * sd.r_sq[0],
        sd.x + 6.0 * p.omega[1] * sd.r_sq[1],
        sd.x + 6.0 * p.omega[2] * sd.r_sq[2],
    ]
}

/// Assembles all three vectors (and the mixing measure) for a state.
pub fn vector_triple(rho: &DensityMatrix) -> Result<StateVectors> {
    let p = SpinOneParams::from_matrix(rho);
    let w = w_vector(p.omega)?;
    let u_sq = u_signed_squares(&p);
    let v_sq = v_signed_squares(&p);
    let mut sv = StateVectors {
        w,
        u_sq,
        v_sq,
        u: real_components(u_sq),
        v: real_components(v_sq),
        volume: None,
        alpha: None,
    };
    let (volume, alpha) = mixing_volume(&sv);
    sv.volume = volume;
    sv.alpha = alpha;
    Ok(sv)
}

/// Mixing volume `V = |(u x v) . w|` and the angle between `u` and `v`.
///
/// Both are absent unless `u` and `v` are real-representable. The triple
/// product uses the state's actual `w`; for equal diagonal weights it reduces
/// to the Cartesian combination `(u2 v3 - u3 v2) + (u3 v1 - u1 v3) +
/// (u1 v2 - u2 v1)` over `sqrt(3)`.
pub fn mixing_volume(sv: &StateVectors) -> (Option<f64>, Option<f64>) {
    match (sv.u, sv.v) {
        (Some(u), Some(v)) => {
            let cx = cross(u, v);
            let volume = (cx[0] * sv.w[0] + cx[1] * sv.w[1] + cx[2] * sv.w[2]).abs();
            let cross_norm = (cx[0] * cx[0] + cx[1] * cx[1] + cx[2] * cx[2]).sqrt();
            let dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
            // atan2 keeps the angle stable near 0 and pi.
            let alpha = cross_norm.atan2(dot);
            (Some(volume), Some(alpha))
        }
        _ => (None, None),
    }
}

/// Real vector from signed component squares: present only when every
/// square clears `-REPRESENTABLE_TOL`, with the clamping rule applied.
pub fn real_components(sq: [f64; 3]) -> Option<[f64; 3]> {
    if sq.iter().all(|&s| s >= -REPRESENTABLE_TOL) {
        Some([
            sq[0].max(0.0).sqrt(),
            sq[1].max(0.0).sqrt(),
            sq[2].max(0.0).sqrt(),
        ])
    } else {
        None
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

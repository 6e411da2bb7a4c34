//! Seeded random-state generation and the eigenvalue-based physicality
//! oracle backing the property suites.
//!
//! The generator is a counter-based SplitMix64 stream: the n-th output is the
//! SplitMix64 finalizer applied to `seed + n * golden_gamma`. The integer
//! stream depends only on fixed constants and wrapping 64-bit arithmetic, so
//! equal seeds reproduce equal sample sequences everywhere. Gaussian variates
//! come from Box-Muller over the 53-bit uniform stream.

use num_complex::Complex64;

use crate::matrix::DensityMatrix;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic counter-based random stream.
///
/// A value type: copying the stream forks it, and `(seed, counter)` fully
/// determine every future draw. Parallel workers should each own a stream
/// built with [`RngStream::derive`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RngStream {
    seed: u64,
    counter: u64,
}

impl RngStream {
    pub fn new(seed: u64) -> Self {
        Self { seed, counter: 0 }
    }

    /// Independent stream for worker `index` under the same root seed.
    pub fn derive(&self, index: u64) -> Self {
        Self::new(mix64(self.seed ^ mix64(index.wrapping_add(0x6A09_E667_F3BC_C909))))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.counter = self.counter.wrapping_add(1);
        mix64(self.seed.wrapping_add(self.counter.wrapping_mul(GOLDEN_GAMMA)))
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Complex Gaussian with independent N(0,1) real and imaginary parts
    /// (one Box-Muller pair per draw).
    pub fn next_complex_gaussian(&mut self) -> Complex64 {
        let u1 = 1.0 - self.next_f64(); // in (0, 1], keeps ln finite
        let u2 = self.next_f64();
        let r = (-2.0 * u1.ln()).sqrt();
        let theta = 2.0 * std::f64::consts::PI * u2;
        Complex64::new(r * theta.cos(), r * theta.sin())
    }

    fn unit_complex3(&mut self) -> [Complex64; 3] {
        loop {
            let psi = [
                self.next_complex_gaussian(),
                self.next_complex_gaussian(),
                self.next_complex_gaussian(),
            ];
            let n2 = psi[0].norm_sqr() + psi[1].norm_sqr() + psi[2].norm_sqr();
            if n2 > 1e-12 {
                let inv = 1.0 / n2.sqrt();
                return [psi[0] * inv, psi[1] * inv, psi[2] * inv];
            }
        }
    }
}

fn projector_combination(states: &[([Complex64; 3], f64)]) -> DensityMatrix {
    let mut diag = [0.0; 3];
    let mut upper = [Complex64::new(0.0, 0.0); 3];
    for (psi, weight) in states {
        for (d, p) in diag.iter_mut().zip(psi.iter()) {
            *d += weight * p.norm_sqr();
        }
        upper[0] += psi[0] * psi[1].conj() * *weight;
        upper[1] += psi[0] * psi[2].conj() * *weight;
        upper[2] += psi[1] * psi[2].conj() * *weight;
    }
    DensityMatrix::from_parts(diag, upper)
}

/// Haar-distributed pure state `psi psi^t*` from a normalized complex
/// Gaussian 3-vector.
pub fn random_pure(rng: &mut RngStream) -> DensityMatrix {
    let psi = rng.unit_complex3();
    projector_combination(&[(psi, 1.0)])
}

/// Hilbert-Schmidt-induced full-rank mixed state `G G^t* / tr(G G^t*)` from a
/// 3x3 complex Gaussian matrix.
pub fn random_mixed(rng: &mut RngStream) -> DensityMatrix {
    let mut g = [[Complex64::new(0.0, 0.0); 3]; 3];
    for row in g.iter_mut() {
        for cell in row.iter_mut() {
            *cell = rng.next_complex_gaussian();
        }
    }
    let mut diag = [0.0; 3];
    let mut upper = [Complex64::new(0.0, 0.0); 3];
    for (d, row) in diag.iter_mut().zip(g.iter()) {
        *d = row.iter().map(|z| z.norm_sqr()).sum();
    }
    for k in 0..3 {
        upper[0] += g[0][k] * g[1][k].conj();
        upper[1] += g[0][k] * g[2][k].conj();
        upper[2] += g[1][k] * g[2][k].conj();
    }
    let t = diag[0] + diag[1] + diag[2];
    let inv = 1.0 / t;
    DensityMatrix::from_parts(
        [diag[0] * inv, diag[1] * inv, diag[2] * inv],
        [upper[0] * inv, upper[1] * inv, upper[2] * inv],
    )
}

/// Rank-2 boundary state: a normalized positive combination of two random
/// rank-1 projectors. Its determinant vanishes, so `I3 = 1`.
pub fn random_rank2(rng: &mut RngStream) -> DensityMatrix {
    let psi_a = rng.unit_complex3();
    let psi_b = rng.unit_complex3();
    let w_a = rng.uniform(0.1, 0.9);
    let w_b = rng.uniform(0.1, 0.9);
    let s = w_a + w_b;
    projector_combination(&[(psi_a, w_a / s), (psi_b, w_b / s)])
}

/// Positive-semidefiniteness check from the closed-form eigen solve.
///
/// Independent of the coefficient-sign test in
/// [`DensityMatrix::classify`]; the two must agree and the property suite
/// enforces that.
pub fn psd_oracle(m: &DensityMatrix, tol: f64) -> (bool, f64) {
    let min_eig = m.eigenvalues()[2];
    (min_eig >= -tol, min_eig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::PurityClass;

    #[test]
    fn streams_are_deterministic() {
        let mut a = RngStream::new(0);
        let mut b = RngStream::new(0);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = RngStream::new(1);
        assert_ne!(a.derive(0), a.derive(1));
        assert_ne!(RngStream::new(0).next_u64(), c.next_u64());

        let m1 = random_pure(&mut RngStream::new(0));
        let m2 = random_pure(&mut RngStream::new(0));
        assert_eq!(m1, m2);
    }

    #[test]
    fn pure_samples_are_pure() {
        let mut rng = RngStream::new(7);
        for _ in 0..50 {
            let rho = random_pure(&mut rng);
            assert_eq!(rho.classify(1e-9), PurityClass::Pure);
            assert!((rho.trace_invariants().i2 - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn mixed_samples_are_interior() {
        let mut rng = RngStream::new(11);
        for _ in 0..50 {
            let rho = random_mixed(&mut rng);
            assert_eq!(rho.classify(1e-9), PurityClass::MixedInterior);
            let i2 = rho.trace_invariants().i2;
            assert!(i2 > 1.0 / 3.0 && i2 < 1.0);
        }
    }

    #[test]
    fn rank2_samples_sit_on_the_boundary() {
        let mut rng = RngStream::new(13);
        for _ in 0..50 {
            let rho = random_rank2(&mut rng);
            assert!(rho.det().abs() <= 1e-14);
            assert_eq!(rho.classify(1e-9), PurityClass::BoundaryMixed);
            let ti = rho.trace_invariants();
            assert!((ti.i3 - 1.0).abs() < 1e-10);
            assert!(ti.i2 < 1.0);
        }
    }

    #[test]
    fn oracle_examples() {
        let (ok, eig) = psd_oracle(&DensityMatrix::maximally_mixed(), 1e-9);
        assert!(ok);
        assert!((eig - 1.0 / 3.0).abs() < 1e-12);

        let bad = DensityMatrix::diagonal([0.7, 0.4, -0.1]).unwrap();
        let (ok, eig) = psd_oracle(&bad, 1e-9);
        assert!(!ok);
        assert!((eig + 0.1).abs() < 1e-12);

        let boundary = DensityMatrix::diagonal([0.5, 0.5, 0.0]).unwrap();
        let (ok, eig) = psd_oracle(&boundary, 1e-9);
        assert!(ok);
        assert!(eig.abs() < 1e-12);
    }
}

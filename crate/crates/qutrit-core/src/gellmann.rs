//! SU(3) parameterization of qutrit states.
//!
//! Any unit-trace Hermitian 3x3 matrix can be written as
//! `rho = I/3 + (1/sqrt(3)) sum_k n_k lambda_k` with the standard Gell-Mann
//! matrices (`tr lambda_i lambda_j = 2 delta_ij`). With this normalization
//! the Euclidean ball `|n| <= 1` contains the physical states, pure states
//! sit exactly at `|n| = 1`, and the trace invariants satisfy
//! `tr rho^2 = 1/3 + (2/3) |n|^2`.

use num_complex::Complex64;

use crate::matrix::DensityMatrix;

/// The eight real coefficients `n_1..n_8` of the SU(3) form.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GellMannVector(pub [f64; 8]);

impl GellMannVector {
    pub fn zero() -> Self {
        Self([0.0; 8])
    }

    /// Squared Euclidean norm `sum n_k^2` (the parameter-side `I2`).
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|x| x * x).sum()
    }

    /// Builds the density matrix `I/3 + (1/sqrt(3)) n . lambda`.
    ///
    /// Always Hermitian with unit trace; positivity is not enforced here.
    pub fn to_matrix(&self) -> DensityMatrix {
        let n = &self.0;
        let s3 = 3.0_f64.sqrt();
        let third = 1.0 / 3.0;
        let diag = [
            third + n[2] / s3 + n[7] * third,
            third - n[2] / s3 + n[7] * third,
            third - 2.0 * n[7] * third,
        ];
        let upper = [
            Complex64::new(n[0], -n[1]) / s3,
            Complex64::new(n[3], -n[4]) / s3,
            Complex64::new(n[5], -n[6]) / s3,
        ];
        DensityMatrix::from_parts(diag, upper)
    }

    /// Extracts the coefficients `n_k = (sqrt(3)/2) tr(rho lambda_k)`.
    pub fn from_matrix(rho: &DensityMatrix) -> Self {
        let s3 = 3.0_f64.sqrt();
        let d = [rho.entry(0, 0).re, rho.entry(1, 1).re, rho.entry(2, 2).re];
        let u01 = rho.entry(0, 1);
        let u02 = rho.entry(0, 2);
        let u12 = rho.entry(1, 2);
        Self([
            s3 * u01.re,
            -s3 * u01.im,
            0.5 * s3 * (d[0] - d[1]),
            s3 * u02.re,
            -s3 * u02.im,
            s3 * u12.re,
            -s3 * u12.im,
            0.5 * (d[0] + d[1] - 2.0 * d[2]),
        ])
    }

    /// Parameter-side invariants `(I2, I3)`.
    ///
    /// `I2 = sum n_k^2`; `I3` is the full cubic in `n_1..n_8`, whose value
    /// equals 1 exactly on the boundary surface. They relate to the trace
    /// invariants by `I2t = 1/3 + (2/3) I2` and `I3t = 7/9 + (2/9) I3`.
    pub fn invariants(&self) -> (f64, f64) {
        let n = &self.0;
        let s3 = 3.0_f64.sqrt();
        let i2 = self.norm_sqr();
        let first3 = n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
        let mid4 = n[3] * n[3] + n[4] * n[4] + n[5] * n[5] + n[6] * n[6];
        let i3 = 3.0 * i2
            - 6.0 * n[7] * (first3 - 0.5 * mid4 - n[7] * n[7] / 3.0)
            - 6.0 * s3 * (n[0] * n[3] * n[5] + n[0] * n[4] * n[6] + n[1] * n[4] * n[5]
                - n[1] * n[3] * n[6])
            - 3.0 * s3 * n[2] * (n[3] * n[3] + n[4] * n[4] - n[5] * n[5] - n[6] * n[6]);
        (i2, i3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The eight standard Gell-Mann matrices, used only as an independent
    /// route to cross-check the entry-level conversion formulas.
    fn gell_mann() -> [[[Complex64; 3]; 3]; 8] {
        let z = |re: f64, im: f64| Complex64::new(re, im);
        let o = z(0.0, 0.0);
        let s = 1.0 / 3.0_f64.sqrt();
        [
            [[o, z(1., 0.), o], [z(1., 0.), o, o], [o, o, o]],
            [[o, z(0., -1.), o], [z(0., 1.), o, o], [o, o, o]],
            [[z(1., 0.), o, o], [o, z(-1., 0.), o], [o, o, o]],
            [[o, o, z(1., 0.)], [o, o, o], [z(1., 0.), o, o]],
            [[o, o, z(0., -1.)], [o, o, o], [z(0., 1.), o, o]],
            [[o, o, o], [o, o, z(1., 0.)], [o, z(1., 0.), o]],
            [[o, o, o], [o, o, z(0., -1.)], [o, z(0., 1.), o]],
            [
                [z(s, 0.), o, o],
                [o, z(s, 0.), o],
                [o, o, z(-2. * s, 0.)],
            ],
        ]
    }

    fn matrix_from_generators(n: &GellMannVector) -> [[Complex64; 3]; 3] {
        let lambdas = gell_mann();
        let s3 = 3.0_f64.sqrt();
        let mut m = [[Complex64::new(0.0, 0.0); 3]; 3];
        for i in 0..3 {
            m[i][i] += Complex64::new(1.0 / 3.0, 0.0);
        }
        for (k, lambda) in lambdas.iter().enumerate() {
            for i in 0..3 {
                for j in 0..3 {
                    m[i][j] += lambda[i][j] * (n.0[k] / s3);
                }
            }
        }
        m
    }

    #[test]
    fn zero_maps_to_maximally_mixed() {
        assert_eq!(
            GellMannVector::zero().to_matrix(),
            DensityMatrix::maximally_mixed()
        );
        let back = GellMannVector::from_matrix(&DensityMatrix::maximally_mixed());
        assert_eq!(back.0, [0.0; 8]);
    }

    #[test]
    fn basis_state_coordinates() {
        // Direct substitution puts diag(1, 0, 0) at n3 = sqrt(3)/2, n8 = 1/2.
        let s3 = 3.0_f64.sqrt();
        let n = GellMannVector([0.0, 0.0, s3 / 2.0, 0.0, 0.0, 0.0, 0.0, 0.5]);
        let rho = n.to_matrix();
        let expect = DensityMatrix::diagonal([1.0, 0.0, 0.0]).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert!((rho.entry(i, j) - expect.entry(i, j)).norm() < 1e-15);
            }
        }
        let back = GellMannVector::from_matrix(&expect);
        assert!((back.0[2] - s3 / 2.0).abs() < 1e-15);
        assert!((back.0[7] - 0.5).abs() < 1e-15);
        for k in [0, 1, 3, 4, 5, 6] {
            assert_eq!(back.0[k], 0.0);
        }
    }

    #[test]
    fn single_n1_coordinate() {
        let s3 = 3.0_f64.sqrt();
        let mut coords = [0.0; 8];
        coords[0] = 1.0 / s3;
        let rho = GellMannVector(coords).to_matrix();
        let third = 1.0 / 3.0;
        assert!((rho.entry(0, 0).re - third).abs() < 1e-15);
        assert!((rho.entry(0, 1).re - third).abs() < 1e-15);
        assert!((rho.entry(2, 2).re - third).abs() < 1e-15);
        assert!(rho.entry(0, 1).im.abs() < 1e-15);
        assert!(rho.entry(0, 2).norm() < 1e-15);

        let back = GellMannVector::from_matrix(&rho);
        assert!((back.0[0] - 1.0 / s3).abs() < 1e-15);
        for k in 1..8 {
            assert!(back.0[k].abs() < 1e-15);
        }
    }

    #[test]
    fn entry_formulas_match_generator_sum() {
        let vectors = [
            GellMannVector([0.3, -0.1, 0.2, 0.05, -0.4, 0.15, 0.22, -0.31]),
            GellMannVector([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]),
            GellMannVector([0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0]),
            GellMannVector([-0.7, 0.6, -0.5, 0.4, -0.3, 0.2, -0.1, 0.05]),
        ];
        for n in vectors {
            let fast = n.to_matrix();
            let slow = matrix_from_generators(&n);
            for i in 0..3 {
                for j in 0..3 {
                    assert!(
                        (fast.entry(i, j) - slow[i][j]).norm() < 1e-15,
                        "entry ({i},{j}) mismatch for {n:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn invariants_examples() {
        let (i2, i3) = GellMannVector::zero().invariants();
        assert_eq!(i2, 0.0);
        assert_eq!(i3, 0.0);

        // Evaluating the cubic at the basis state hits the pure value 1 twice.
        let s3 = 3.0_f64.sqrt();
        let n = GellMannVector([0.0, 0.0, s3 / 2.0, 0.0, 0.0, 0.0, 0.0, 0.5]);
        let (i2, i3) = n.invariants();
        assert!((i2 - 1.0).abs() < 1e-15);
        assert!((i3 - 1.0).abs() < 1e-14);

        // The cubic reduces to 3 n1^2 on the first axis: boundary, not pure.
        let mut coords = [0.0; 8];
        coords[0] = 1.0 / s3;
        let (i2, i3) = GellMannVector(coords).invariants();
        assert!((i2 - 1.0 / 3.0).abs() < 1e-15);
        assert!((i3 - 1.0).abs() < 1e-14);
    }
}

//! Property suites for the algebraic identities the crate is built on.

use num_complex::Complex64;
use proptest::prelude::*;

use qutrit_core::{
    derived_spin, psd_oracle, random_mixed, random_pure, random_rank2, u_signed_squares,
    v_signed_squares, vector_triple, DensityMatrix, GellMannVector, PurityClass, RngStream,
    SpinOneParams,
};

fn hermitian_unit_trace(vals: [f64; 9]) -> DensityMatrix {
    let raw_diag = [vals[0], vals[1], vals[2]];
    let shift = (1.0 - (raw_diag[0] + raw_diag[1] + raw_diag[2])) / 3.0;
    let mut raw = [[Complex64::new(0.0, 0.0); 3]; 3];
    for i in 0..3 {
        raw[i][i] = Complex64::new(raw_diag[i] + shift, 0.0);
    }
    let offs = [
        Complex64::new(vals[3], vals[4]),
        Complex64::new(vals[5], vals[6]),
        Complex64::new(vals[7], vals[8]),
    ];
    raw[0][1] = offs[0];
    raw[1][0] = offs[0].conj();
    raw[0][2] = offs[1];
    raw[2][0] = offs[1].conj();
    raw[1][2] = offs[2];
    raw[2][1] = offs[2].conj();
    DensityMatrix::validate(raw, 1e-9).expect("construction keeps trace and symmetry")
}

fn entry_dist(a: &DensityMatrix, b: &DensityMatrix) -> f64 {
    let mut worst = 0.0_f64;
    for i in 0..3 {
        for j in 0..3 {
            worst = worst.max((a.entry(i, j) - b.entry(i, j)).norm());
        }
    }
    worst
}

proptest! {
    #[test]
    fn weight_identity(x in 0.0..1.0f64, y in 0.0..1.0f64) {
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        let w = [lo, hi - lo, 1.0 - hi];
        let sq: f64 = w.iter().map(|v| v * v).sum();
        let pairs = w[1] * w[2] + w[2] * w[0] + w[0] * w[1];
        prop_assert!((sq - (1.0 - 2.0 * pairs)).abs() < 1e-15);
    }

    #[test]
    fn cubic_weight_identity(x in -2.0..2.0f64, y in -2.0..2.0f64) {
        let w = [x, y, 1.0 - x - y];
        let lhs: f64 = w.iter().map(|v| 3.0 * v * v - 2.0 * v * v * v).sum();
        let rhs = 1.0 - 6.0 * w[0] * w[1] * w[2];
        prop_assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn newton_bridge_identities(vals in prop::array::uniform9(-1.0..1.0f64)) {
        let rho = hermitian_unit_trace(vals);
        let cp = rho.char_poly();
        let ti = rho.trace_invariants();
        prop_assert!((ti.i2 - (1.0 - 2.0 * cp.e2)).abs() < 1e-10);
        prop_assert!((ti.i3 - (1.0 - 6.0 * cp.e3)).abs() < 1e-10);
    }

    #[test]
    fn parameter_normalization_identities(vals in prop::array::uniform9(-1.0..1.0f64)) {
        let rho = hermitian_unit_trace(vals);
        let ti = rho.trace_invariants();
        let (i2p, i3p) = GellMannVector::from_matrix(&rho).invariants();
        prop_assert!((ti.i2 - (1.0 / 3.0 + 2.0 / 3.0 * i2p)).abs() < 1e-10);
        prop_assert!((ti.i3 - (7.0 / 9.0 + 2.0 / 9.0 * i3p)).abs() < 1e-10);
    }

    #[test]
    fn round_trips(vals in prop::array::uniform9(-1.0..1.0f64)) {
        let rho = hermitian_unit_trace(vals);
        let back = GellMannVector::from_matrix(&rho).to_matrix();
        prop_assert!(entry_dist(&rho, &back) < 1e-12);
        let back = SpinOneParams::from_matrix(&rho).to_matrix().unwrap();
        prop_assert!(entry_dist(&rho, &back) < 1e-12);
    }

    #[test]
    fn vector_square_sums(vals in prop::array::uniform9(-1.0..1.0f64)) {
        let rho = hermitian_unit_trace(vals);
        let ti = rho.trace_invariants();
        let p = SpinOneParams::from_matrix(&rho);
        let u: f64 = u_signed_squares(&p).iter().sum();
        let v: f64 = v_signed_squares(&p).iter().sum();
        prop_assert!((u - ti.i2).abs() < 1e-10);
        prop_assert!((v - ti.i3).abs() < 1e-10);
    }

    #[test]
    fn eigenvalues_solve_char_poly(vals in prop::array::uniform9(-1.0..1.0f64)) {
        let rho = hermitian_unit_trace(vals);
        let cp = rho.char_poly();
        let evs = rho.eigenvalues();
        for ev in evs {
            let res = ev * ev * ev - cp.e1 * ev * ev + cp.e2 * ev - cp.e3;
            prop_assert!(res.abs() < 1e-10);
        }
        prop_assert!((evs.iter().sum::<f64>() - rho.trace()).abs() < 1e-10);
        prop_assert!(evs[0] >= evs[1] && evs[1] >= evs[2]);
    }

    #[test]
    fn classifier_agrees_with_oracle(vals in prop::array::uniform9(-1.0..1.0f64)) {
        let rho = hermitian_unit_trace(vals);
        let physical = rho.classify(1e-9) != PurityClass::NotAState;
        let (is_psd, _) = psd_oracle(&rho, 1e-9);
        prop_assert_eq!(physical, is_psd);
    }
}

#[test]
fn volume_range_and_minor_bound() {
    let mut rng = RngStream::new(21);
    for i in 0..10_000 {
        let rho = if i % 3 == 0 {
            random_pure(&mut rng)
        } else {
            random_mixed(&mut rng)
        };
        let p = SpinOneParams::from_matrix(&rho);
        let sd = derived_spin(&p);
        for (axis, r_sq) in sd.r_sq.iter().enumerate() {
            let (j, k) = ((axis + 1) % 3, (axis + 2) % 3);
            let minor = p.omega[j] * p.omega[k];
            assert!(*r_sq <= minor + 1e-12, "minor bound violated");
            if i % 3 == 0 {
                assert!(minor - r_sq <= 1e-10, "pure states saturate the minors");
            }
        }
        let sv = vector_triple(&rho).unwrap();
        if let (Some(u), Some(v), Some(vol)) = (sv.u, sv.v, sv.volume) {
            let nu = u.iter().map(|x| x * x).sum::<f64>().sqrt();
            let nv = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            assert!(vol >= 0.0 && vol <= nu * nv + 1e-12);
        }
        let wn: f64 = sv.w.iter().map(|x| x * x).sum();
        assert!((wn - 1.0).abs() < 1e-12);
    }
}

#[test]
fn rank2_boundary_criterion() {
    let mut rng = RngStream::new(33);
    for _ in 0..10_000 {
        let rho = random_rank2(&mut rng);
        assert!(rho.det().abs() <= 1e-14);
        let p = SpinOneParams::from_matrix(&rho);
        let v: f64 = v_signed_squares(&p).iter().sum();
        assert!((v - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn pure_class_is_unit_spectrum() {
    let mut rng = RngStream::new(77);
    for i in 0..10_000 {
        let rho = match i % 3 {
            0 => random_pure(&mut rng),
            1 => random_rank2(&mut rng),
            _ => random_mixed(&mut rng),
        };
        let ev = rho.eigenvalues();
        // the closed form carries ~1e-8 jitter at degenerate pairs
        let unit_spectrum = (ev[0] - 1.0).abs() <= 1e-8 && ev[1].abs() <= 1e-8 && ev[2].abs() <= 1e-8;
        assert_eq!(rho.classify(1e-9) == PurityClass::Pure, unit_spectrum);
    }
}

#[test]
fn byte_identical_sample_streams() {
    for seed in [0u64, 1, 42, u64::MAX] {
        let mut a = RngStream::new(seed);
        let mut b = RngStream::new(seed);
        for _ in 0..100 {
            let (ma, mb) = (random_mixed(&mut a), random_mixed(&mut b));
            for i in 0..3 {
                for j in 0..3 {
                    assert_eq!(ma.entry(i, j).re.to_bits(), mb.entry(i, j).re.to_bits());
                    assert_eq!(ma.entry(i, j).im.to_bits(), mb.entry(i, j).im.to_bits());
                }
            }
        }
    }
}

#[test]
fn physical_region_is_star_shaped_along_rays() {
    use qutrit_core::sections::{enumerate_sections, SEARCH_DOMAIN};
    let mut rng = RngStream::new(55);
    let mut rays = 0;
    while rays < 1_000 {
        let k = 4 + (rng.next_u64() % 5) as usize; // orders 4..=8
        let sections = enumerate_sections(k).unwrap();
        let id = &sections[(rng.next_u64() % sections.len() as u64) as usize];
        let mut dir: Vec<f64> = Vec::with_capacity(k);
        while dir.len() < k {
            let g = rng.next_complex_gaussian();
            dir.push(g.re);
            if dir.len() < k {
                dir.push(g.im);
            }
        }
        let norm = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-9 {
            continue;
        }
        rays += 1;
        let mut transitions = 0;
        let mut inside = true;
        for step in 0..=300 {
            let t = SEARCH_DOMAIN * step as f64 / 300.0;
            let coords: Vec<f64> = dir.iter().map(|d| d * t / norm).collect();
            let n = qutrit_core::sections::embed_section_point(id, &coords).unwrap();
            let (is_psd, _) = psd_oracle(&n.to_matrix(), 1e-9);
            if is_psd != inside {
                transitions += 1;
                inside = is_psd;
            }
        }
        assert!(transitions <= 1, "indicator flipped {transitions} times");
        assert!(!inside, "ray must exit the physical region by |n| > 1");
    }
}

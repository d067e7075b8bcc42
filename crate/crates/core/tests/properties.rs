use num_complex::Complex64;
use proptest::prelude::*;

use onepauli::bloch::{bloch_to_density, density_to_bloch, state_entropy};
use onepauli::channels::make_one_pauli;
use onepauli::closedform;
use onepauli::math::{hermitian_eigenvalues_2x2, inner_product};
use onepauli::measures::{
    coherent_information, entangled_fidelity, entropy_exchange, environment_entropy_oracle,
    w_matrix,
};
use onepauli::{BlochVector, ComplexMatrix, DensityMatrix, PauliAxis};

fn axis() -> impl Strategy<Value = PauliAxis> {
    prop_oneof![
        Just(PauliAxis::Sigma1),
        Just(PauliAxis::Sigma2),
        Just(PauliAxis::Sigma3)
    ]
}

fn retention() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), Just(0.5), Just(1.0), 0.0..=1.0]
}

/// Points in the unit ball; anything drawn outside is pulled onto the sphere.
fn bloch() -> impl Strategy<Value = BlochVector> {
    [-1.0..=1.0_f64, -1.0..=1.0_f64, -1.0..=1.0_f64].prop_map(|a| {
        let n = a.iter().map(|v| v * v).sum::<f64>().sqrt();
        let a = if n > 1.0 { a.map(|v| v / n) } else { a };
        BlochVector::from_array(a).unwrap()
    })
}

fn complex_matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-2.0..2.0_f64, -2.0..2.0_f64), dim * dim).prop_map(move |v| {
        ComplexMatrix::new(
            dim,
            v.into_iter()
                .map(|(re, im)| Complex64::new(re, im))
                .collect(),
        )
        .unwrap()
    })
}

fn hermitian_2x2() -> impl Strategy<Value = ComplexMatrix> {
    (-2.0..2.0_f64, -2.0..2.0_f64, -2.0..2.0_f64, -2.0..2.0_f64).prop_map(|(p, s, qr, qi)| {
        let c = Complex64::new;
        ComplexMatrix::from_2x2([[c(p, 0.0), c(qr, qi)], [c(qr, -qi), c(s, 0.0)]]).unwrap()
    })
}

fn swap(a: &BlochVector, i: usize, j: usize) -> BlochVector {
    let mut v = a.to_array();
    v.swap(i, j);
    BlochVector::from_array(v).unwrap()
}

fn rho(a: &BlochVector) -> DensityMatrix {
    bloch_to_density(a)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    // core math

    #[test]
    fn self_inner_product_is_squared_norm(m in (1usize..=3).prop_flat_map(complex_matrix)) {
        let z = inner_product(&m, &m).unwrap();
        prop_assert!(z.im.abs() <= 1e-15);
        prop_assert!(z.re >= 0.0);
    }

    #[test]
    fn eigenvalues_match_trace_and_determinant(m in hermitian_2x2()) {
        let s = hermitian_eigenvalues_2x2(&m).unwrap();
        prop_assert!(s.hi >= s.lo);
        prop_assert!((s.sum() - m.trace().re).abs() <= 1e-12);
        prop_assert!((s.product() - m.det_2x2().unwrap().re).abs() <= 1e-12);
    }

    #[test]
    fn eigenvalues_scale_with_the_matrix(m in hermitian_2x2(), k in -3.0..3.0_f64) {
        let s = hermitian_eigenvalues_2x2(&m).unwrap();
        let t = hermitian_eigenvalues_2x2(&m.scale_real(k)).unwrap();
        let (hi, lo) = if k >= 0.0 { (k * s.hi, k * s.lo) } else { (k * s.lo, k * s.hi) };
        prop_assert!((t.hi - hi).abs() <= 1e-12);
        prop_assert!((t.lo - lo).abs() <= 1e-12);
    }

    // bloch

    #[test]
    fn bloch_round_trip(a in bloch()) {
        let back = density_to_bloch(&bloch_to_density(&a)).unwrap();
        prop_assert!(back.max_abs_diff(&a) <= 1e-14);
    }

    #[test]
    fn density_spectrum_from_length(a in bloch()) {
        let s = bloch_to_density(&a).eigenvalues();
        let r = a.norm();
        prop_assert!((s.hi - (1.0 + r) / 2.0).abs() <= 1e-12);
        prop_assert!((s.lo - (1.0 - r) / 2.0).abs() <= 1e-12);
    }

    #[test]
    fn entropy_is_rotation_invariant(a in bloch(), phi in 0.0..std::f64::consts::TAU, psi in 0.0..std::f64::consts::TAU) {
        let [x, y, z] = a.to_array();
        // about z by phi, then about x by psi
        let (x1, y1) = (x * phi.cos() - y * phi.sin(), x * phi.sin() + y * phi.cos());
        let (y2, z2) = (y1 * psi.cos() - z * psi.sin(), y1 * psi.sin() + z * psi.cos());
        let n = (x1 * x1 + y2 * y2 + z2 * z2).sqrt();
        let rotated = if n > 1.0 { [x1 / n, y2 / n, z2 / n] } else { [x1, y2, z2] };
        let b = BlochVector::from_array(rotated).unwrap();
        prop_assert!((state_entropy(&a) - state_entropy(&b)).abs() <= 1e-12);
        let h = state_entropy(&a);
        prop_assert!((0.0..=1.0).contains(&h));
    }

    // channels

    #[test]
    fn channel_keeps_axis_and_scales_transverse(k in axis(), x in retention(), a in bloch()) {
        let ch = make_one_pauli(k, x).unwrap();
        prop_assert!(ch.completeness_residual() <= 1e-15);
        let b = density_to_bloch(&ch.apply(&rho(&a)).unwrap()).unwrap();
        for i in 0..3 {
            let expected = if i == k.index() { a.component(i) } else { a.component(i) * (2.0 * x - 1.0) };
            prop_assert!((b.component(i) - expected).abs() <= 1e-13);
        }
    }

    #[test]
    fn channel_output_is_a_state(k in axis(), x in retention(), a in bloch()) {
        let out = make_one_pauli(k, x).unwrap().apply(&rho(&a)).unwrap();
        prop_assert!(out.eigenvalues().lo >= -1e-12);
        prop_assert!((out.matrix().trace().re - 1.0).abs() <= 1e-14);
    }

    #[test]
    fn complementary_rates_share_output_spectrum(k in axis(), x in retention(), a in bloch()) {
        let s = make_one_pauli(k, x).unwrap().apply(&rho(&a)).unwrap().eigenvalues();
        let t = make_one_pauli(k, 1.0 - x).unwrap().apply(&rho(&a)).unwrap().eigenvalues();
        prop_assert!(s.max_abs_diff(&t) <= 1e-12);
    }

    #[test]
    fn half_rate_channel_is_idempotent(k in axis(), a in bloch()) {
        let ch = make_one_pauli(k, 0.5).unwrap();
        let once = ch.apply(&rho(&a)).unwrap();
        let twice = ch.apply(&once).unwrap();
        prop_assert!(once.matrix().max_abs_diff(twice.matrix()).unwrap() <= 1e-13);
    }

    // measures

    #[test]
    fn dilation_oracle_matches_entropy_exchange(k in axis(), x in retention(), a in bloch()) {
        let ch = make_one_pauli(k, x).unwrap();
        let r = rho(&a);
        let n = entropy_exchange(&ch, &r).unwrap();
        let e = environment_entropy_oracle(&ch, &r).unwrap();
        prop_assert!((n - e).abs() <= 1e-10, "W path {n}, dilation {e}");
    }

    #[test]
    fn w_has_unit_trace(k in axis(), x in retention(), a in bloch()) {
        let w = w_matrix(&make_one_pauli(k, x).unwrap(), &rho(&a)).unwrap();
        prop_assert!((w.matrix().trace() - Complex64::new(1.0, 0.0)).norm() <= 1e-13);
    }

    #[test]
    fn noise_and_coherence_symmetric_in_x(k in axis(), x in retention(), a in bloch()) {
        let r = rho(&a);
        let ch = make_one_pauli(k, x).unwrap();
        let mirror = make_one_pauli(k, 1.0 - x).unwrap();
        prop_assert!((entropy_exchange(&ch, &r).unwrap() - entropy_exchange(&mirror, &r).unwrap()).abs() <= 1e-12);
        prop_assert!((coherent_information(&ch, &r).unwrap() - coherent_information(&mirror, &r).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn axis_permutation_equivalence(k in axis(), j in axis(), x in retention(), a in bloch()) {
        let permuted = swap(&a, k.index(), j.index());
        let (ck, cj) = (make_one_pauli(k, x).unwrap(), make_one_pauli(j, x).unwrap());
        let (ra, rp) = (rho(&a), rho(&permuted));
        prop_assert!((entropy_exchange(&ck, &ra).unwrap() - entropy_exchange(&cj, &rp).unwrap()).abs() <= 1e-12);
        prop_assert!((coherent_information(&ck, &ra).unwrap() - coherent_information(&cj, &rp).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn fidelity_identity_on_every_axis(k in axis(), x in retention(), a in bloch()) {
        let f = entangled_fidelity(&make_one_pauli(k, x).unwrap(), &rho(&a)).unwrap();
        let ak = a.component(k.index());
        prop_assert!((f - (x + (1.0 - x) * ak * ak)).abs() <= 1e-12);
        prop_assert!((0.0..=1.0 + 1e-15).contains(&f));
    }

    #[test]
    fn aligned_pure_state_has_unit_fidelity(k in axis(), x in retention(), sign in prop_oneof![Just(1.0), Just(-1.0)]) {
        let mut v = [0.0; 3];
        v[k.index()] = sign;
        let a = BlochVector::from_array(v).unwrap();
        let f = entangled_fidelity(&make_one_pauli(k, x).unwrap(), &rho(&a)).unwrap();
        prop_assert!((f - 1.0).abs() <= 1e-12);
    }

    // closed forms against the numeric path

    #[test]
    fn closed_forms_match_numeric_path(k in axis(), x in retention(), a in bloch()) {
        let ch = make_one_pauli(k, x).unwrap();
        let r = rho(&a);
        let out = ch.apply(&r).unwrap();
        let p = closedform::closed_point(k, x, &a).unwrap();
        prop_assert!(p.b.max_abs_diff(&density_to_bloch(&out).unwrap()) <= 1e-12);
        let lam = hermitian_eigenvalues_2x2(w_matrix(&ch, &r).unwrap().matrix()).unwrap();
        prop_assert!(p.lambda.max_abs_diff(&lam) <= 1e-12);
        prop_assert!(p.theta.max_abs_diff(&out.eigenvalues()) <= 1e-12);
        prop_assert!((p.noise_n - entropy_exchange(&ch, &r).unwrap()).abs() <= 1e-12);
        prop_assert!((p.coherent_c - coherent_information(&ch, &r).unwrap()).abs() <= 1e-12);
        prop_assert!((p.lambda.sum() - 1.0).abs() <= 1e-12);
        prop_assert!((p.theta.sum() - 1.0).abs() <= 1e-12);

        let f = entangled_fidelity(&ch, &r).unwrap();
        let gap = match k {
            PauliAxis::Sigma2 => 2.0 * (1.0 - x) * a.a2() * a.a2(),
            _ => 0.0,
        };
        prop_assert!((p.fidelity_paper + gap - f).abs() <= 1e-12);
    }

    #[test]
    fn closed_spectra_symmetric_in_x(k in axis(), x in retention(), a in bloch()) {
        let l = closedform::lambdas_closed(k, x, &a).unwrap();
        let l2 = closedform::lambdas_closed(k, 1.0 - x, &a).unwrap();
        let t = closedform::thetas_closed(k, x, &a).unwrap();
        let t2 = closedform::thetas_closed(k, 1.0 - x, &a).unwrap();
        prop_assert!(l.max_abs_diff(&l2) <= 1e-12);
        prop_assert!(t.max_abs_diff(&t2) <= 1e-12);
    }
}

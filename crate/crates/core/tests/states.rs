mod common;

use gm_core::linalg::{pauli, Matrix4};
use gm_core::rank2::rank2_to_matrix;
use gm_core::states::{dicke_to_dense, sym3q_to_dense};
use gm_core::{
    BlochVector, GmError, GmResult, Method, PureState, RankTwoCanonical, SymThreeQubitCanonical,
    SymmetricDickeState, C64,
};
use nalgebra::{DMatrix, Complex};
use proptest::prelude::*;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

fn close(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

fn dicke_amps() -> impl Strategy<Value = Vec<(f64, f64)>> {
    (1usize..=6).prop_flat_map(|n| prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), n + 1))
}

fn canonical_triangle() -> impl Strategy<Value = (f64, f64)> {
    (0.0..=FRAC_PI_2, 0.0..=1.0f64).prop_map(|(g1, frac)| (g1, frac * g1.min(FRAC_PI_2 - g1)))
}

fn bloch_ball() -> impl Strategy<Value = [f64; 3]> {
    (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
        .prop_filter("inside the unit ball", |(a, b, c)| a * a + b * b + c * c <= 1.0)
        .prop_map(|(a, b, c)| [a, b, c])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dicke_dense_is_permutation_invariant(raw in dicke_amps(), rot in 0usize..720) {
        prop_assume!(raw.iter().any(|&(re, im)| re.abs() + im.abs() > 1e-3));
        let norm = raw.iter().map(|&(re, im)| re * re + im * im).sum::<f64>().sqrt();
        let amps = raw.iter().map(|&(re, im)| C64::new(re / norm, im / norm)).collect();
        let psi = dicke_to_dense(&SymmetricDickeState::new(amps).unwrap()).unwrap();
        let n = psi.n_qubits();
        // A pseudo-random permutation indexed by `rot`.
        let mut perm: Vec<usize> = (0..n).collect();
        let mut r = rot;
        for i in (1..n).rev() {
            perm.swap(i, r % (i + 1));
            r /= i + 1;
        }
        let moved = psi.permute_qubits(&perm).unwrap();
        for (a, b) in psi.amplitudes().iter().zip(moved.amplitudes()) {
            prop_assert!(close(*a, *b, 1e-12));
        }
    }

    #[test]
    fn rank2_spectrum_is_a_rank_two_density((g1, g2) in canonical_triangle(), x in bloch_ball()) {
        let rho = rank2_to_matrix(&RankTwoCanonical::new(g1, g2, x).unwrap());
        prop_assert!(rho.hermiticity_defect() <= 1e-12);
        let ev = rho.hermitian_eigenvalues();
        prop_assert!((ev.iter().sum::<f64>() - 1.0).abs() <= 1e-10);
        prop_assert!(ev.iter().all(|&e| (-1e-10..=1.0 + 1e-10).contains(&e)));
        prop_assert!(ev.iter().filter(|&&e| e > 1e-10).count() <= 2);
    }

    #[test]
    fn local_z_conjugation_flips_x1_x2((g1, g2) in canonical_triangle(), x in bloch_ball()) {
        let zz = Matrix4::pauli_pair(3, 3);
        let rho = rank2_to_matrix(&RankTwoCanonical::new(g1, g2, x).unwrap());
        let flipped = rank2_to_matrix(&RankTwoCanonical::new(g1, g2, [-x[0], -x[1], x[2]]).unwrap());
        prop_assert!((zz * rho * zz).max_abs_diff(&flipped) <= 1e-12);
    }

    #[test]
    fn complex_conjugation_flips_x2((g1, g2) in canonical_triangle(), x in bloch_ball()) {
        let rho = rank2_to_matrix(&RankTwoCanonical::new(g1, g2, x).unwrap());
        let flipped = rank2_to_matrix(&RankTwoCanonical::new(g1, g2, [x[0], -x[1], x[2]]).unwrap());
        prop_assert!(rho.conj().max_abs_diff(&flipped) <= 1e-12);
    }

    #[test]
    fn jacobi_spectrum_matches_nalgebra(entries in prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), 16)) {
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let (re, im) = entries[4 * i + j];
                m.0[i][j] = C64::new(re, im);
            }
        }
        let h = (m + m.dagger()).scale(0.5);
        let ours = h.hermitian_eigenvalues();
        let na = DMatrix::from_fn(4, 4, |i, j| Complex::new(h.0[i][j].re, h.0[i][j].im));
        let mut theirs: Vec<f64> = na.symmetric_eigenvalues().iter().copied().collect();
        theirs.sort_by(|a, b| a.total_cmp(b));
        for (a, b) in ours.iter().zip(&theirs) {
            prop_assert!((a - b).abs() <= 1e-10, "{ours:?} vs {theirs:?}");
        }
    }

    #[test]
    fn bloch_ket_round_trip(theta in 0.0..std::f64::consts::PI, phi in -4.0..4.0f64) {
        let b = BlochVector::from_angles(theta, phi);
        let back = BlochVector::from_ket(&b.to_ket());
        for k in 0..3 {
            prop_assert!((b.s[k] - back.s[k]).abs() <= 1e-12);
        }
    }
}

#[test]
fn dicke_dense_examples() {
    let one = dicke_to_dense(&SymmetricDickeState::from_real(&[1.0, 0.0]).unwrap()).unwrap();
    assert_eq!(one.amplitudes(), &[C64::new(1.0, 0.0), C64::new(0.0, 0.0)]);

    let w = common::w_state();
    let third = 1.0 / 3f64.sqrt();
    for (i, a) in w.amplitudes().iter().enumerate() {
        let expect = if i.count_ones() == 1 { third } else { 0.0 };
        assert!(close(*a, C64::new(expect, 0.0), 1e-15), "index {i}");
    }

    let ghz = common::ghz_state();
    let h = 0.5f64.sqrt();
    for (i, a) in ghz.amplitudes().iter().enumerate() {
        let expect = if i == 0 || i == 7 { h } else { 0.0 };
        assert!(close(*a, C64::new(expect, 0.0), 1e-15));
    }
}

#[test]
fn qubit_zero_is_most_significant() {
    let ket0 = [C64::new(1.0, 0.0), C64::new(0.0, 0.0)];
    let ket1 = [C64::new(0.0, 0.0), C64::new(1.0, 0.0)];
    let psi = PureState::product(&[ket1, ket0, ket0]).unwrap();
    assert_eq!(psi.amplitudes()[0b100], C64::new(1.0, 0.0));
}

#[test]
fn dense_capacity_is_capped() {
    let big = SymmetricDickeState::basis(21, 3).unwrap();
    assert!(matches!(dicke_to_dense(&big), Err(GmError::Capacity { .. })));
}

#[test]
fn sym3q_dense_examples() {
    let product = sym3q_to_dense(&SymThreeQubitCanonical::new(1.0, 0.0, 0.0, 0.0).unwrap());
    assert_eq!(product.amplitudes()[0], C64::new(1.0, 0.0));

    let t = 1.0 / 3f64.sqrt();
    let w_like = sym3q_to_dense(&SymThreeQubitCanonical::new(0.0, t, 0.0, 0.0).unwrap());
    for (i, a) in w_like.amplitudes().iter().enumerate() {
        let expect = if i.count_ones() == 2 { t } else { 0.0 };
        assert!(close(*a, C64::new(expect, 0.0), 1e-15));
    }

    let h = 0.5f64.sqrt();
    let phased = sym3q_to_dense(&SymThreeQubitCanonical::new(h, 0.0, h, FRAC_PI_2).unwrap());
    assert!(close(phased.amplitudes()[0], C64::new(h, 0.0), 1e-15));
    assert!(close(phased.amplitudes()[7], C64::new(0.0, h), 1e-15));
}

#[test]
fn canonical_validation() {
    assert!(matches!(SymThreeQubitCanonical::new(0.5, 0.5, 0.5, 0.0), Err(GmError::Normalization { .. })));
    // Small drift is absorbed.
    let st = SymThreeQubitCanonical::new(1.0 + 1e-8, 0.0, 0.0, 0.0).unwrap();
    assert_eq!(st.g, 1.0);
    assert!(SymThreeQubitCanonical::new(1.0, 0.0, 0.0, 2.0).is_err());
    assert!(RankTwoCanonical::new(0.2, 0.3, [0.0; 3]).is_err());
    assert!(RankTwoCanonical::new(1.2, 0.5, [0.0; 3]).is_err());
    assert!(RankTwoCanonical::new(FRAC_PI_4, FRAC_PI_4, [0.8, 0.0, 0.8]).is_err());
    assert!(BlochVector::new([1.0, 1.0, 0.0]).is_err());
}

#[test]
fn rank2_examples() {
    let product = rank2_to_matrix(&common::rank2(0.0, 0.0, [0.0, 0.0, 1.0]));
    let mut expect = Matrix4::zeros();
    expect.0[0][0] = C64::new(1.0, 0.0);
    assert!(product.max_abs_diff(&expect) <= 1e-15);
    assert!(((product * product).trace().re - 1.0).abs() <= 1e-15);

    // (1/3)|00⟩⟨00| + (2/3)|ψ⁺⟩⟨ψ⁺|.
    let w = rank2_to_matrix(&common::rank2(FRAC_PI_4, FRAC_PI_4, [0.0, 0.0, -1.0 / 3.0]));
    let mut expect = Matrix4::zeros();
    expect.0[0][0] = C64::new(1.0 / 3.0, 0.0);
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        expect.0[i][j] = C64::new(1.0 / 3.0, 0.0);
    }
    assert!(w.max_abs_diff(&expect) <= 1e-15);

    let bell = rank2_to_matrix(&common::rank2(FRAC_PI_4, FRAC_PI_4, [0.0, 0.0, -1.0]));
    let mut expect = Matrix4::zeros();
    for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
        expect.0[i][j] = C64::new(0.5, 0.0);
    }
    assert!(bell.max_abs_diff(&expect) <= 1e-15);
}

#[test]
fn reduced_pair_of_w_matches_rank2_form() {
    let w = common::w_state();
    let target = rank2_to_matrix(&common::rank2(FRAC_PI_4, FRAC_PI_4, [0.0, 0.0, -1.0 / 3.0]));
    for party in 0..3 {
        assert!(w.reduced_pair(party).unwrap().max_abs_diff(&target) <= 1e-15);
    }
}

#[test]
fn local_unitary_preserves_norm_and_pauli_is_involutive() {
    let mut rng = gm_core::rng::XorShift64Star::new(3);
    let psi = common::random_pure(&mut rng, 3);
    let u = common::random_unitary(&mut rng);
    let moved = psi.apply_local(1, &u).unwrap();
    assert!((moved.inner(&moved).re - 1.0).abs() <= 1e-14);
    let x = pauli(1);
    let back = psi.apply_local(0, &x).unwrap().apply_local(0, &x).unwrap();
    assert!((back.inner(&psi).re - 1.0).abs() <= 1e-14);
}

#[test]
fn result_keeps_e_g_consistent() {
    let r = GmResult::from_g_squared(4.0 / 9.0, Method::Oracle);
    assert_eq!(r.e_g, 1.0 - r.g_squared);
    assert!((r.g - 2.0 / 3.0).abs() <= 1e-15);
    let clamped = GmResult::from_g_squared(1.0 + 1e-15, Method::Oracle);
    assert!(clamped.g <= 1.0);
}

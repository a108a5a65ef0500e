mod common;

use gm_core::dicke::{dicke_objective, dicke_optimum, gm_dicke_nonneg, single_dicke_g};
use gm_core::oracle::{gm_pure_oracle, gm_symmetric_oracle, symmetric_oracle_search, OracleConfig};
use gm_core::{GmError, SymmetricDickeState, C64};
use proptest::prelude::*;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

fn nonneg_state() -> impl Strategy<Value = SymmetricDickeState> {
    (1usize..=6)
        .prop_flat_map(|n| prop::collection::vec(0.0..1.0f64, n + 1))
        .prop_filter("not all zero", |a| a.iter().sum::<f64>() > 1e-3)
        .prop_map(|a| {
            let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
            SymmetricDickeState::from_real(&a.iter().map(|x| x / norm).collect::<Vec<_>>()).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn agrees_with_symmetric_oracle(state in nonneg_state()) {
        let ours = gm_dicke_nonneg(&state).unwrap();
        let opt = symmetric_oracle_search(&state, &OracleConfig::default());
        prop_assert!((ours.g - opt.g_squared.sqrt()).abs() <= 1e-8);
        // The relative phase of the optimal |a⟩ is zero.
        let phase = opt.theta.rem_euclid(std::f64::consts::TAU);
        let in_degenerate_corner = opt.alpha < 1e-6 || opt.alpha > FRAC_PI_2 - 1e-6;
        prop_assert!(in_degenerate_corner || phase.min(std::f64::consts::TAU - phase) <= 1e-8);
    }

    #[test]
    fn mirror_symmetry(state in nonneg_state()) {
        let g = gm_dicke_nonneg(&state).unwrap().g;
        let mirrored = gm_dicke_nonneg(&state.reversed()).unwrap().g;
        prop_assert!((g - mirrored).abs() <= 1e-12);
    }

    #[test]
    fn objective_is_non_negative(state in nonneg_state(), alpha in 0.0..=FRAC_PI_2) {
        prop_assert!(dicke_objective(&state, alpha).unwrap() >= 0.0);
    }
}

#[test]
fn agrees_with_pure_oracle_up_to_six_qubits() {
    let mut rng = gm_core::rng::XorShift64Star::new(11);
    let cfg = OracleConfig::default();
    for n in 1..=6 {
        for _ in 0..4 {
            let a: Vec<f64> = (0..=n).map(|_| rng.next_f64()).collect();
            let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
            let state = SymmetricDickeState::from_real(&a.iter().map(|x| x / norm).collect::<Vec<_>>()).unwrap();
            let ours = gm_dicke_nonneg(&state).unwrap().g;
            let brute = gm_pure_oracle(&state.to_dense().unwrap(), &cfg).unwrap().g;
            assert!((ours - brute).abs() <= 1e-7, "n={n}: {ours} vs {brute}");
        }
    }
}

#[test]
fn single_dicke_states_match_closed_form() {
    for n in 1..=8 {
        for m in 0..=n {
            let g = gm_dicke_nonneg(&SymmetricDickeState::basis(n, m).unwrap()).unwrap().g;
            assert!((g - single_dicke_g(n, m)).abs() <= 1e-12, "n={n} m={m}");
        }
    }
}

#[test]
fn objective_examples() {
    let product = SymmetricDickeState::basis(3, 0).unwrap();
    assert!((dicke_objective(&product, 0.0).unwrap() - 1.0).abs() <= 1e-15);

    let w = SymmetricDickeState::basis(3, 1).unwrap();
    let alpha = (0.5f64.sqrt()).atan();
    assert!((dicke_objective(&w, alpha).unwrap() - 2.0 / 3.0).abs() <= 1e-15);

    let bell = SymmetricDickeState::basis(2, 1).unwrap();
    assert!((dicke_objective(&bell, FRAC_PI_4).unwrap() - 0.5f64.sqrt()).abs() <= 1e-15);
}

#[test]
fn gm_examples() {
    let h = 0.5f64.sqrt();
    let ghz = gm_dicke_nonneg(&SymmetricDickeState::from_real(&[h, 0.0, 0.0, h]).unwrap()).unwrap();
    assert!((ghz.g_squared - 0.5).abs() <= 1e-12);

    let w = gm_dicke_nonneg(&SymmetricDickeState::basis(3, 1).unwrap()).unwrap();
    assert!((w.g_squared - 4.0 / 9.0).abs() <= 1e-12);
    assert_eq!(w.closest_product.len(), 3);

    let product = gm_dicke_nonneg(&SymmetricDickeState::basis(3, 0).unwrap()).unwrap();
    assert_eq!(product.g, 1.0);
    assert_eq!(product.e_g, 0.0);
}

#[test]
fn optimum_is_located_precisely() {
    let w = SymmetricDickeState::basis(3, 1).unwrap();
    let opt = dicke_optimum(&w).unwrap();
    assert!((opt.alpha - (0.5f64.sqrt()).atan()).abs() <= 1e-10);
}

#[test]
fn ties_prefer_the_smaller_angle() {
    // GHZ attains its maximum at both α = 0 and α = π/2.
    let h = 0.5f64.sqrt();
    let opt = dicke_optimum(&SymmetricDickeState::from_real(&[h, 0.0, 0.0, h]).unwrap()).unwrap();
    assert_eq!(opt.alpha, 0.0);
}

#[test]
fn rejects_signed_or_complex_amplitudes() {
    let h = 0.5f64.sqrt();
    let signed = SymmetricDickeState::from_real(&[h, -h]).unwrap();
    assert!(matches!(gm_dicke_nonneg(&signed), Err(GmError::Unsupported(_))));
    let complex = SymmetricDickeState::new(vec![C64::new(h, 0.0), C64::new(0.0, h)]).unwrap();
    assert!(matches!(dicke_objective(&complex, 0.1), Err(GmError::Unsupported(_))));
    let w = SymmetricDickeState::basis(3, 1).unwrap();
    assert!(dicke_objective(&w, 2.0).is_err());
}

#[test]
fn symmetric_oracle_handles_complex_amplitudes() {
    // e^{iπ/3} on |1,2⟩ is removed by the phase of |a⟩, leaving |1,2⟩.
    let state = SymmetricDickeState::new(vec![
        C64::new(0.0, 0.0),
        C64::new(0.0, 0.0),
        C64::from_polar(1.0, std::f64::consts::FRAC_PI_3),
    ])
    .unwrap();
    let r = gm_symmetric_oracle(&state, &OracleConfig::default());
    assert!((r.g - 1.0).abs() <= 1e-12);
}

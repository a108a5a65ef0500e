//! Seeded fixtures shared by the integration tests.

#![allow(dead_code)]

use gm_core::linalg::Mat2;
use gm_core::math::FRAC_PI_2;
use gm_core::rng::XorShift64Star;
use gm_core::{PureState, RankTwoCanonical, SymThreeQubitCanonical, C64};

/// Canonical state with `g, t, h > 0.05` and `0.05 < |γ| < π/2 − 0.05`.
pub fn generic_sym3q(rng: &mut XorShift64Star) -> SymThreeQubitCanonical {
    loop {
        let (g, t, h) = (rng.uniform(0.05, 1.0), rng.uniform(0.05, 1.0), rng.uniform(0.05, 1.0));
        let n = (g * g + 3.0 * t * t + h * h).sqrt();
        let (g, t, h) = (g / n, t / n, h / n);
        if g.min(t).min(h) <= 0.05 {
            continue;
        }
        let sign = if rng.next_f64() < 0.5 { -1.0 } else { 1.0 };
        let gamma = sign * rng.uniform(0.05, FRAC_PI_2 - 0.05);
        return SymThreeQubitCanonical::new(g, t, h, gamma).unwrap();
    }
}

/// Haar-ish random pure state from complex Gaussian amplitudes.
pub fn random_pure(rng: &mut XorShift64Star, n: usize) -> PureState {
    let amps: Vec<C64> = (0..1usize << n).map(|_| C64::new(rng.normal(), rng.normal())).collect();
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    PureState::new(n, amps.into_iter().map(|a| a / norm).collect()).unwrap()
}

/// Random single-qubit unitary (Gram–Schmidt on a Gaussian matrix).
pub fn random_unitary(rng: &mut XorShift64Star) -> Mat2 {
    let a = C64::new(rng.normal(), rng.normal());
    let b = C64::new(rng.normal(), rng.normal());
    let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let (a, b) = (a / n, b / n);
    let phase = C64::from_polar(1.0, rng.angle());
    // Columns (a, b) and phase·(−b*, a*) are orthonormal.
    [[a, -phase * b.conj()], [b, phase * a.conj()]]
}

/// Uniform point in the unit ball.
pub fn ball_point(rng: &mut XorShift64Star) -> [f64; 3] {
    let (theta, phi) = rng.sphere_angles();
    let r = rng.next_f64().cbrt();
    let s = gm_core::optimize::sphere_point(theta, phi);
    [r * s[0], r * s[1], r * s[2]]
}

/// Canonical subspace angles drawn uniformly from the triangle.
pub fn canonical_angles(rng: &mut XorShift64Star) -> (f64, f64) {
    loop {
        let g1 = rng.uniform(0.0, FRAC_PI_2);
        let g2 = rng.uniform(0.0, FRAC_PI_2);
        if g2 <= g1 && g1 + g2 <= FRAC_PI_2 {
            return (g1, g2);
        }
    }
}

pub fn rank2(g1: f64, g2: f64, x: [f64; 3]) -> RankTwoCanonical {
    RankTwoCanonical::new(g1, g2, x).unwrap()
}

pub fn w_state() -> PureState {
    gm_core::states::dicke_to_dense(&gm_core::SymmetricDickeState::basis(3, 1).unwrap()).unwrap()
}

pub fn ghz_state() -> PureState {
    let h = 0.5f64.sqrt();
    gm_core::states::dicke_to_dense(&gm_core::SymmetricDickeState::from_real(&[h, 0.0, 0.0, h]).unwrap())
        .unwrap()
}

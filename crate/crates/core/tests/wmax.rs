mod common;

use gm_core::rank2::{closed_form_region, g_closed_form};
use gm_core::rng::XorShift64Star;
use gm_core::wmax::*;
use gm_core::GmError;
use proptest::prelude::*;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

#[test]
fn restrictions_agree_with_the_closed_form() {
    let mut rng = XorShift64Star::new(51);
    for _ in 0..1000 {
        let x3 = rng.uniform(-1.0, 1.0);
        let g1 = rng.uniform(FRAC_PI_4, FRAC_PI_2);
        let sym = g_symmetric_subspace(x3, g1).unwrap();
        assert!((sym - g_closed_form(x3, g1, FRAC_PI_2 - g1)).abs() <= 1e-9, "({x3}, {g1})");
        let g1 = rng.uniform(0.0, FRAC_PI_4);
        let eq = g_equal_gamma(x3, g1).unwrap();
        assert!((eq - g_closed_form(x3, g1, g1)).abs() <= 1e-9, "({x3}, {g1})");
    }
}

#[test]
fn monotone_in_gamma2() {
    let step = 1e-6;
    for i in 1..16 {
        let g1 = FRAC_PI_2 * i as f64 / 16.0;
        let top = g1.min(FRAC_PI_2 - g1);
        for j in 0..16 {
            let g2 = top * (j as f64 + 0.5) / 16.0;
            if g2 + step > top {
                continue;
            }
            for k in 0..=40 {
                let x3 = -1.0 + 2.0 * k as f64 / 40.0;
                if x3 == 0.0 || closed_form_region(x3, g1, g2) != closed_form_region(x3, g1, g2 + step) {
                    continue;
                }
                let d = g_closed_form(x3, g1, g2 + step) - g_closed_form(x3, g1, g2);
                if x3 < 0.0 {
                    assert!(d <= 1e-15, "({x3}, {g1}, {g2}): {d}");
                } else {
                    assert!(d >= -1e-15, "({x3}, {g1}, {g2}): {d}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn admissible_root_of_the_quadratic(g1 in FRAC_PI_4..=FRAC_PI_2) {
        let x = x3_star_symmetric(g1);
        prop_assert!(x3_star_quadratic(x, g1).abs() <= 1e-10);
        prop_assert!(x.abs() <= 1.0);
        // The other root, from the product of the roots, lies outside.
        let c = (2.0 * g1).cos();
        let other = (c - 1.0) / (3.0 + c) / x;
        prop_assert!(other.abs() >= 1.0 - 1e-12);
    }

    #[test]
    fn symmetric_minimum_is_consistent(g1 in FRAC_PI_4..=FRAC_PI_2) {
        let at_star = g_symmetric_subspace(x3_star_symmetric(g1), g1).unwrap();
        prop_assert!((g_min_symmetric(g1) - at_star).abs() <= 1e-10);
        prop_assert!(g_min_symmetric(g1) >= W_G - 1e-15);
        let cell = subspace_minimum(g1, FRAC_PI_2 - g1);
        prop_assert!((cell.g - g_min_symmetric(g1)).abs() <= 1e-9);
    }
}

#[test]
fn symmetric_minimum_grows_away_from_the_apex() {
    let mut prev = g_min_symmetric(FRAC_PI_4);
    assert!((prev - W_G).abs() <= 1e-15);
    for k in 1..=100 {
        let g1 = FRAC_PI_4 + FRAC_PI_4 * k as f64 / 100.0;
        let v = g_min_symmetric(g1);
        assert!(v > prev, "not increasing at {g1}");
        assert!(v > W_G);
        prev = v;
    }
    assert!((g_min_symmetric(FRAC_PI_2) - 0.5).abs() <= 1e-15);
    assert!((x3_star_symmetric(FRAC_PI_2) - (1.0 - 2f64.sqrt())).abs() <= 1e-15);
}

#[test]
fn equal_gamma_examples() {
    for g1 in [0.0, 0.3, FRAC_PI_4] {
        for x3 in [0.0, 0.4, 1.0] {
            assert!((g_equal_gamma(x3, g1).unwrap() - (1.0 + x3) / 2.0).abs() <= 1e-15);
        }
    }
    assert_eq!(g_equal_gamma(-1.0, 0.0).unwrap(), 1.0);
    assert!((g_equal_gamma(-1.0 / 3.0, FRAC_PI_4).unwrap() - W_G).abs() <= 1e-15);
    assert!(matches!(g_equal_gamma(0.0, 1.0), Err(GmError::InvalidParameter(_))));
    assert!(g_equal_gamma(1.5, 0.2).is_err());
}

#[test]
fn scan_report() {
    let report = scan_global_min(64).unwrap();
    assert_eq!(report.cells.len(), 64 * 64);
    assert!((report.min_g - W_G).abs() <= 1e-6);
    let (g1, g2, x3) = report.argmin;
    let cell = FRAC_PI_4 / 63.0;
    assert!((g1 - FRAC_PI_4).abs() <= cell && (g2 - FRAC_PI_4).abs() <= cell);
    assert!((x3 + 1.0 / 3.0).abs() <= 1e-5);
    assert!(report.margin > 0.0);
    for c in &report.cells {
        assert!(-1.0 < c.x3 && c.x3 <= 0.0, "{c:?}");
        assert!(c.g >= W_G - 1e-12, "{c:?}");
        assert!(c.g <= 0.5 + 1e-12);
        assert!(c.gamma2 <= c.gamma1 + 1e-15 && c.gamma1 + c.gamma2 <= FRAC_PI_2 + 1e-15);
        if c.gamma2 == 0.0 {
            assert!((c.g - 0.5).abs() <= 1e-8 && c.x3.abs() <= 1e-6, "{c:?}");
        }
    }
    // The W state's E_G is the largest seen anywhere on the grid.
    let worst_e_g = report.cells.iter().map(|c| 1.0 - c.g).fold(0.0, f64::max);
    assert!(worst_e_g <= 5.0 / 9.0 + 1e-12);
}

#[test]
fn scan_rows_assemble_to_the_same_report() {
    let rows: Vec<_> = (0..32).rev().map(|j| (j, scan_row(32, j))).collect();
    let mut ordered: Vec<_> = rows;
    ordered.sort_by_key(|(j, _)| *j);
    let assembled = assemble_report(32, ordered.into_iter().map(|(_, r)| r).collect()).unwrap();
    assert_eq!(assembled, scan_global_min(32).unwrap());
}

#[test]
fn scan_rejects_coarse_grids() {
    assert!(scan_global_min(MIN_RESOLUTION - 1).is_err());
}

#[test]
fn uniqueness_certificate_passes() {
    let cert = w_uniqueness_certificate();
    assert!(cert.passed);
    assert!(verify_w_uniqueness());
    assert!(cert.bound_at_unit_x1 > W_G);
    assert!((cert.bound_at_unit_x1 - (8.0 + 66f64.sqrt()) / 18.0).abs() <= 1e-15);
    assert!((0.25 * w_direction_f(0.0) - W_G).abs() <= 1e-15);
    for s in &cert.samples {
        assert!(s.g > W_G && s.g >= s.bound - 1e-9);
    }
}

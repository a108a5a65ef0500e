//! Plot data as CSV: `.` decimals, `,` separators, one header row, LF line
//! endings, and shortest round-trip float formatting.

use std::io::Write;

use gm_core::rank2::g_closed_form;
use gm_core::wmax::ScanCell;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// `(γ₁, γ₂)` of the four `g(x₃)` curves written by `gm fig1`.
pub const FIG1_CURVES: [(&str, f64, f64); 4] = [
    ("a", std::f64::consts::FRAC_PI_4, 0.0),
    ("b", std::f64::consts::FRAC_PI_2, 0.0),
    ("c", 3.0 * std::f64::consts::PI / 8.0, std::f64::consts::PI / 8.0),
    ("d", std::f64::consts::FRAC_PI_4, std::f64::consts::FRAC_PI_4),
];

pub const FIG1_SAMPLES: usize = 201;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Fig1Row {
    pub x3: f64,
    pub g_a: f64,
    pub g_b: f64,
    pub g_c: f64,
    pub g_d: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridRow {
    pub gamma1: f64,
    pub gamma2: f64,
    pub x3_min: f64,
    pub g_min: f64,
}

impl From<&ScanCell> for GridRow {
    fn from(c: &ScanCell) -> Self {
        GridRow {
            gamma1: c.gamma1,
            gamma2: c.gamma2,
            x3_min: c.x3,
            g_min: c.g,
        }
    }
}

/// `g(x₃)` for the four curves on an even grid over `[−1, 1]`.
pub fn fig1_rows() -> Vec<Fig1Row> {
    (0..FIG1_SAMPLES)
        .map(|i| {
            let x3 = -1.0 + 2.0 * i as f64 / (FIG1_SAMPLES - 1) as f64;
            let g = |k: usize| g_closed_form(x3, FIG1_CURVES[k].1, FIG1_CURVES[k].2);
            Fig1Row {
                x3,
                g_a: g(0),
                g_b: g(1),
                g_c: g(2),
                g_d: g(3),
            }
        })
        .collect()
}

pub fn write_csv<W: Write, R: Serialize>(out: W, rows: &[R]) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_csv<R: std::io::Read, T: for<'de> Deserialize<'de>>(input: R) -> Result<Vec<T>, csv::Error> {
    csv::Reader::from_reader(input).deserialize().collect()
}

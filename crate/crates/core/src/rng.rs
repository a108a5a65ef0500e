//! Seeded pseudo-random numbers for the oracles and test fixtures.
//!
//! The generator is xorshift64* (Marsaglia shifts 12/25/27, output multiplier
//! `0x2545F4914F6CDD1D`). Seeds are first passed through one SplitMix64 step
//! so that small or zero seeds give well-mixed, non-zero states. Independent
//! streams for restart `k` are seeded with `seed ^ (k · 0x9E3779B97F4A7C15)`.
//! The algorithm is fixed so fixtures reproduce across implementations.

use crate::math::{Float, PI, TAU};

const STREAM_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

/// One SplitMix64 output step.
pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mixed = splitmix64(seed);
        XorShift64Star {
            state: if mixed == 0 { STREAM_STRIDE } else { mixed },
        }
    }

    /// Generator for sub-stream `index` of `seed`.
    pub fn stream(seed: u64, index: u64) -> Self {
        Self::new(seed ^ index.wrapping_mul(STREAM_STRIDE))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in `[0, 1)` with 53 random bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Standard normal deviate (Box–Muller).
    pub fn normal(&mut self) -> f64 {
        let u1 = 1.0 - self.next_f64();
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (TAU * u2).cos()
    }

    /// Polar and azimuthal angles `(θ, φ)` of a point uniform on the sphere.
    pub fn sphere_angles(&mut self) -> (f64, f64) {
        let z = 2.0 * self.next_f64() - 1.0;
        let phi = TAU * self.next_f64();
        (z.clamp(-1.0, 1.0).acos(), phi)
    }

    /// Angle uniform in `[-π, π)`.
    pub fn angle(&mut self) -> f64 {
        self.uniform(-PI, PI)
    }
}

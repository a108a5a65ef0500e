//! One- and two-dimensional search routines used by the solvers.

use alloc::vec::Vec;

use crate::math::{Float, PI, TAU};

/// Bisection on `[lo, hi]` where `f(lo)` and `f(hi)` have opposite signs.
///
/// Stops when the bracket is narrower than `tol` or cannot be split further
/// in floating point. Returns `None` if `f` becomes undefined inside the
/// bracket.
pub fn bisect<F>(mut f: F, mut lo: f64, mut hi: f64, tol: f64) -> Option<f64>
where
    F: FnMut(f64) -> Option<f64>,
{
    let mut f_lo = f(lo)?;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= tol || mid <= lo || mid >= hi {
            break;
        }
        let f_mid = f(mid)?;
        if f_mid == 0.0 {
            return Some(mid);
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Some(0.5 * (lo + hi))
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for the minimum of a unimodal `f` on `[lo, hi]`.
/// Returns `(x, f(x))`.
pub fn golden_section_min<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    if b - a <= tol {
        let x = 0.5 * (a + b);
        return (x, f(x));
    }
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while b - a > tol {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    // The bracket ends may beat the interior probes when the minimum sits on
    // the boundary of the original interval.
    let mut best = if fc <= fd { (c, fc) } else { (d, fd) };
    for x in [a, b] {
        let fx = f(x);
        if fx < best.1 {
            best = (x, fx);
        }
    }
    best
}

/// Golden-section search for the maximum of `f` on `[lo, hi]`.
pub fn golden_section_max<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let (x, v) = golden_section_min(|x| -f(x), lo, hi, tol);
    (x, -v)
}

/// Nelder–Mead maximization of `f` in two variables.
///
/// Terminates when the simplex diameter drops below `tol` or after
/// `max_iter` iterations. Returns `(argmax, max)`.
pub fn nelder_mead_max2<F>(
    mut f: F,
    start: [f64; 2],
    step: [f64; 2],
    tol: f64,
    max_iter: usize,
) -> ([f64; 2], f64)
where
    F: FnMut([f64; 2]) -> f64,
{
    let mut simplex = [
        start,
        [start[0] + step[0], start[1]],
        [start[0], start[1] + step[1]],
    ];
    let mut values = [f(simplex[0]), f(simplex[1]), f(simplex[2])];

    for _ in 0..max_iter {
        // order: best (largest) first
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| values[j].partial_cmp(&values[i]).unwrap_or(core::cmp::Ordering::Equal));
        simplex = [simplex[order[0]], simplex[order[1]], simplex[order[2]]];
        values = [values[order[0]], values[order[1]], values[order[2]]];

        let diameter = (1..3)
            .map(|k| {
                let dx = simplex[k][0] - simplex[0][0];
                let dy = simplex[k][1] - simplex[0][1];
                (dx * dx + dy * dy).sqrt()
            })
            .fold(0.0, f64::max);
        if diameter < tol {
            break;
        }

        let centroid = [
            0.5 * (simplex[0][0] + simplex[1][0]),
            0.5 * (simplex[0][1] + simplex[1][1]),
        ];
        let along = |t: f64| {
            [
                centroid[0] + t * (simplex[2][0] - centroid[0]),
                centroid[1] + t * (simplex[2][1] - centroid[1]),
            ]
        };

        let reflected = along(-1.0);
        let fr = f(reflected);
        if fr > values[0] {
            let expanded = along(-2.0);
            let fe = f(expanded);
            if fe > fr {
                simplex[2] = expanded;
                values[2] = fe;
            } else {
                simplex[2] = reflected;
                values[2] = fr;
            }
            continue;
        }
        if fr > values[1] {
            simplex[2] = reflected;
            values[2] = fr;
            continue;
        }
        if fr > values[2] {
            let outside = along(-0.5);
            let fc = f(outside);
            if fc >= fr {
                simplex[2] = outside;
                values[2] = fc;
                continue;
            }
        } else {
            let inside = along(0.5);
            let fc = f(inside);
            if fc > values[2] {
                simplex[2] = inside;
                values[2] = fc;
                continue;
            }
        }
        // shrink towards the best vertex
        for k in 1..3 {
            simplex[k] = [
                simplex[0][0] + 0.5 * (simplex[k][0] - simplex[0][0]),
                simplex[0][1] + 0.5 * (simplex[k][1] - simplex[0][1]),
            ];
            values[k] = f(simplex[k]);
        }
    }

    let mut best = 0;
    for k in 1..3 {
        if values[k] > values[best] {
            best = k;
        }
    }
    (simplex[best], values[best])
}

/// A rectangular parameter grid for [`grid_then_refine_max`].
#[derive(Debug, Clone, Copy)]
pub struct Grid2 {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub nx: usize,
    pub ny: usize,
    /// Whether `y` is periodic over its range (the last sample then sits one
    /// step before the upper end).
    pub y_periodic: bool,
}

impl Grid2 {
    /// Row-major samples of `f` over the grid.
    pub fn evaluate<F>(&self, mut f: F) -> Vec<f64>
    where
        F: FnMut([f64; 2]) -> f64,
    {
        let ys: Vec<f64> = (0..self.ny).map(|j| self.y(j)).collect();
        let mut values = Vec::with_capacity(self.nx * self.ny);
        for i in 0..self.nx {
            let x = self.x(i);
            for &y in &ys {
                values.push(f([x, y]));
            }
        }
        values
    }

    pub fn x(&self, i: usize) -> f64 {
        let (a, b) = self.x_range;
        a + (b - a) * i as f64 / (self.nx - 1) as f64
    }

    pub fn y(&self, j: usize) -> f64 {
        let (a, b) = self.y_range;
        if self.y_periodic {
            a + (b - a) * j as f64 / self.ny as f64
        } else {
            a + (b - a) * j as f64 / (self.ny - 1) as f64
        }
    }

    fn steps(&self) -> [f64; 2] {
        let dx = (self.x_range.1 - self.x_range.0) / (self.nx - 1) as f64;
        let dy = if self.y_periodic {
            (self.y_range.1 - self.y_range.0) / self.ny as f64
        } else {
            (self.y_range.1 - self.y_range.0) / (self.ny - 1) as f64
        };
        [dx, dy]
    }
}

/// Evaluates `f` on `grid`, then refines the `starts` best grid-local maxima
/// with Nelder–Mead to simplex diameter `tol`. Returns `(argmax, max)`.
///
/// The refinement is unconstrained, so `f` must be defined (and sensible)
/// slightly outside the grid ranges.
pub fn grid_then_refine_max<F>(mut f: F, grid: &Grid2, starts: usize, tol: f64) -> ([f64; 2], f64)
where
    F: FnMut([f64; 2]) -> f64,
{
    let values = grid.evaluate(&mut f);
    refine_grid_peaks(f, grid, &values, starts, tol)
}

/// Second half of [`grid_then_refine_max`] for callers that fill the grid
/// themselves (row-major, `values[i * ny + j]` at `(x_i, y_j)`).
pub fn refine_grid_peaks<F>(
    mut f: F,
    grid: &Grid2,
    values: &[f64],
    starts: usize,
    tol: f64,
) -> ([f64; 2], f64)
where
    F: FnMut([f64; 2]) -> f64,
{
    let (nx, ny) = (grid.nx, grid.ny);
    assert_eq!(values.len(), nx * ny);
    let at = |i: usize, j: usize| values[i * ny + j];

    let mut peaks: Vec<(f64, usize, usize)> = Vec::new();
    for i in 0..nx {
        for j in 0..ny {
            let v = at(i, j);
            let mut is_peak = true;
            let mut neighbours: [(isize, isize); 4] = [(-1, 0), (1, 0), (0, -1), (0, 1)];
            for (di, dj) in neighbours.iter_mut() {
                let ii = i as isize + *di;
                let mut jj = j as isize + *dj;
                if ii < 0 || ii >= nx as isize {
                    continue;
                }
                if jj < 0 || jj >= ny as isize {
                    if !grid.y_periodic {
                        continue;
                    }
                    jj = jj.rem_euclid(ny as isize);
                }
                if at(ii as usize, jj as usize) > v {
                    is_peak = false;
                    break;
                }
            }
            if is_peak {
                peaks.push((v, i, j));
            }
        }
    }
    peaks.sort_by(|a, b| {
        b.0.partial_cmp(&a.0)
            .unwrap_or(core::cmp::Ordering::Equal)
            .then(a.1.cmp(&b.1))
            .then(a.2.cmp(&b.2))
    });

    let step = grid.steps();
    let mut best = ([grid.x(0), grid.y(0)], f64::NEG_INFINITY);
    for &(v, i, j) in &peaks {
        if v > best.1 {
            best = ([grid.x(i), grid.y(j)], v);
        }
    }
    for &(_, i, j) in peaks.iter().take(starts.max(1)) {
        let start = [grid.x(i), grid.y(j)];
        let (p, v) = nelder_mead_max2(&mut f, start, [0.5 * step[0], 0.5 * step[1]], tol, 4000);
        if v > best.1 {
            best = (p, v);
        }
    }
    best
}

/// Maximizes `f` over the unit sphere: grid in polar/azimuthal angles,
/// followed by Nelder–Mead refinement from the best `starts` grid peaks.
/// Returns the maximizing unit vector and the maximum.
pub fn maximize_on_sphere<F>(
    mut f: F,
    n_polar: usize,
    n_azimuth: usize,
    starts: usize,
    tol: f64,
) -> ([f64; 3], f64)
where
    F: FnMut(&[f64; 3]) -> f64,
{
    let grid = Grid2 {
        x_range: (0.0, PI),
        y_range: (0.0, TAU),
        nx: n_polar,
        ny: n_azimuth,
        y_periodic: true,
    };
    let (p, v) = grid_then_refine_max(|[t, ph]| f(&sphere_point(t, ph)), &grid, starts, tol);
    (sphere_point(p[0], p[1]), v)
}

/// `(sinθ cosφ, sinθ sinφ, cosθ)`.
pub fn sphere_point(theta: f64, phi: f64) -> [f64; 3] {
    let (st, ct) = theta.sin_cos();
    let (sp, cp) = phi.sin_cos();
    [st * cp, st * sp, ct]
}

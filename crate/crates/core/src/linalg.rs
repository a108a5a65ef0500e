//! Small dense complex matrices: Pauli algebra on one and two qubits,
//! Hermitian eigenvalues and the conditional operators used by the
//! product-state maximizations.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul};

use crate::math::{Float, C64};

pub type Mat2 = [[C64; 2]; 2];

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);
const I: C64 = C64::new(0.0, 1.0);

/// Pauli matrix by index: 0 = identity, 1 = X, 2 = Y, 3 = Z.
pub fn pauli(k: usize) -> Mat2 {
    match k {
        0 => [[ONE, ZERO], [ZERO, ONE]],
        1 => [[ZERO, ONE], [ONE, ZERO]],
        2 => [[ZERO, -I], [I, ZERO]],
        3 => [[ONE, ZERO], [ZERO, -ONE]],
        _ => panic!("pauli index {k} out of range"),
    }
}

/// Single-qubit density matrix `½(I + s·σ)`.
pub fn bloch_projector(s: &[f64; 3]) -> Mat2 {
    let half = 0.5;
    [
        [C64::new(half * (1.0 + s[2]), 0.0), C64::new(half * s[0], -half * s[1])],
        [C64::new(half * s[0], half * s[1]), C64::new(half * (1.0 - s[2]), 0.0)],
    ]
}

/// Largest eigenvalue of a 2×2 Hermitian matrix.
pub fn max_eig_hermitian2(m: &Mat2) -> f64 {
    let a = m[0][0].re;
    let d = m[1][1].re;
    let b = m[0][1];
    let mean = 0.5 * (a + d);
    let half_gap = 0.5 * (a - d);
    mean + (half_gap * half_gap + b.norm_sqr()).sqrt()
}

/// Normalized eigenvector for the largest eigenvalue of a 2×2 Hermitian matrix.
pub fn top_eigvec_hermitian2(m: &Mat2) -> [C64; 2] {
    let lambda = max_eig_hermitian2(m);
    let b = m[0][1];
    // (A - λ) v = 0; pick the better conditioned row.
    let r0 = [m[0][0] - lambda, b];
    let r1 = [b.conj(), m[1][1] - lambda];
    let n0 = r0[0].norm_sqr() + r0[1].norm_sqr();
    let n1 = r1[0].norm_sqr() + r1[1].norm_sqr();
    let v = if n0.max(n1) < 1e-300 {
        [ONE, ZERO]
    } else if n0 >= n1 {
        [r0[1], -r0[0]]
    } else {
        [r1[1], -r1[0]]
    };
    let norm = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
    [v[0] / norm, v[1] / norm]
}

/// Bloch vector of a normalized single-qubit ket.
pub fn ket_bloch(v: &[C64; 2]) -> [f64; 3] {
    let cross = v[0].conj() * v[1];
    [
        2.0 * cross.re,
        2.0 * cross.im,
        v[0].norm_sqr() - v[1].norm_sqr(),
    ]
}

/// Dense complex 4×4 matrix on two qubits, row index `2·q₀ + q₁`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[C64; 4]; 4]);

impl Matrix4 {
    pub fn zeros() -> Self {
        Matrix4([[ZERO; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for k in 0..4 {
            m.0[k][k] = ONE;
        }
        m
    }

    /// `a ⊗ b` with `a` acting on the first (most significant) qubit.
    pub fn kron(a: &Mat2, b: &Mat2) -> Self {
        let mut m = Self::zeros();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        m.0[2 * i + k][2 * j + l] = a[i][j] * b[k][l];
                    }
                }
            }
        }
        m
    }

    /// `σ_i ⊗ σ_j` by Pauli index.
    pub fn pauli_pair(i: usize, j: usize) -> Self {
        Self::kron(&pauli(i), &pauli(j))
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for x in row.iter_mut() {
                *x *= s;
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        (0..4).map(|k| self.0[k][k]).sum()
    }

    pub fn dagger(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        let mut m = *self;
        for row in m.0.iter_mut() {
            for x in row.iter_mut() {
                *x = x.conj();
            }
        }
        m
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut d = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                d = d.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        d
    }

    /// Largest deviation from Hermiticity, `max |m_ij − conj(m_ji)|`.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        let flat: Vec<C64> = self.0.iter().flat_map(|r| r.iter().copied()).collect();
        hermitian_eigenvalues(&flat, 4)
    }

    /// Operator on the second qubit obtained by fixing the first to `ρ₁`:
    /// `tr₁[ρ (ρ₁ ⊗ I)]`.
    pub fn condition_first(&self, rho1: &Mat2) -> Mat2 {
        let mut out = [[ZERO; 2]; 2];
        for (k, row) in out.iter_mut().enumerate() {
            for (l, x) in row.iter_mut().enumerate() {
                let mut acc = ZERO;
                for i in 0..2 {
                    for j in 0..2 {
                        acc += self.0[2 * i + k][2 * j + l] * rho1[j][i];
                    }
                }
                *x = acc;
            }
        }
        out
    }
}

impl Index<(usize, usize)> for Matrix4 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Matrix4 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.0[i][j]
    }
}

impl Add for Matrix4 {
    type Output = Matrix4;
    fn add(mut self, rhs: Matrix4) -> Matrix4 {
        for i in 0..4 {
            for j in 0..4 {
                self.0[i][j] += rhs.0[i][j];
            }
        }
        self
    }
}

impl Mul for Matrix4 {
    type Output = Matrix4;
    fn mul(self, rhs: Matrix4) -> Matrix4 {
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = ZERO;
                for k in 0..4 {
                    acc += self.0[i][k] * rhs.0[k][j];
                }
                m.0[i][j] = acc;
            }
        }
        m
    }
}

/// Eigenvalues (ascending) of the Hermitian part of an `n×n` complex matrix
/// stored row-major.
///
/// Works on the real symmetric embedding `[[Re, −Im], [Im, Re]]`, whose
/// spectrum is the Hermitian spectrum with every eigenvalue doubled, and
/// diagonalizes it with cyclic Jacobi rotations.
pub fn hermitian_eigenvalues(m: &[C64], n: usize) -> Vec<f64> {
    assert_eq!(m.len(), n * n);
    let dim = 2 * n;
    let mut a = vec![0.0f64; dim * dim];
    for i in 0..n {
        for j in 0..n {
            let h = (m[i * n + j] + m[j * n + i].conj()) * 0.5;
            a[i * dim + j] = h.re;
            a[(i + n) * dim + (j + n)] = h.re;
            a[i * dim + (j + n)] = -h.im;
            a[(i + n) * dim + j] = h.im;
        }
    }
    jacobi_symmetric(&mut a, dim);
    let mut diag: Vec<f64> = (0..dim).map(|k| a[k * dim + k]).collect();
    diag.sort_by(|x, y| x.partial_cmp(y).unwrap_or(core::cmp::Ordering::Equal));
    diag.chunks(2).map(|pair| 0.5 * (pair[0] + pair[1])).collect()
}

fn jacobi_symmetric(a: &mut [f64], n: usize) {
    for _sweep in 0..100 {
        let mut off = 0.0;
        let mut total = 0.0;
        for i in 0..n {
            for j in 0..n {
                let v = a[i * n + j] * a[i * n + j];
                total += v;
                if i != j {
                    off += v;
                }
            }
        }
        if off <= 1e-30 * total.max(1e-300) {
            return;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        // XY = iZ on a single qubit, lifted to two qubits.
        let xy = Matrix4::pauli_pair(1, 0) * Matrix4::pauli_pair(2, 0);
        let iz = Matrix4::pauli_pair(3, 0);
        for i in 0..4 {
            for j in 0..4 {
                assert!((xy.0[i][j] - I * iz.0[i][j]).norm() < 1e-15);
            }
        }
        assert!((Matrix4::pauli_pair(3, 3).trace()).norm() < 1e-15);
    }

    #[test]
    fn eigenvalues_of_bell_projector() {
        let mut m = Matrix4::zeros();
        for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            m.0[i][j] = C64::new(0.5, 0.0);
        }
        let ev = m.hermitian_eigenvalues();
        assert!(ev[..3].iter().all(|x| x.abs() < 1e-14));
        assert!((ev[3] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvalues_with_complex_entries() {
        // σ_y ⊗ σ_y has eigenvalues ±1, each twice.
        let ev = Matrix4::pauli_pair(2, 2).hermitian_eigenvalues();
        let expect = [-1.0, -1.0, 1.0, 1.0];
        for (a, b) in ev.iter().zip(expect.iter()) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn top_eigenvector_two_by_two() {
        let m = [
            [C64::new(0.3, 0.0), C64::new(0.1, -0.2)],
            [C64::new(0.1, 0.2), C64::new(0.7, 0.0)],
        ];
        let lam = max_eig_hermitian2(&m);
        let v = top_eigvec_hermitian2(&m);
        for r in 0..2 {
            let mv = m[r][0] * v[0] + m[r][1] * v[1];
            assert!((mv - v[r] * lam).norm() < 1e-14);
        }
        let s = ket_bloch(&v);
        assert!((s[0] * s[0] + s[1] * s[1] + s[2] * s[2] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn conditioning_on_product() {
        // tr₁[(ρa⊗ρb)(ρ₁⊗I)] = tr(ρa ρ₁) ρb
        let ra = bloch_projector(&[0.0, 0.0, 1.0]);
        let rb = bloch_projector(&[1.0, 0.0, 0.0]);
        let m = Matrix4::kron(&ra, &rb);
        let c = m.condition_first(&bloch_projector(&[0.0, 0.0, 1.0]));
        assert!((max_eig_hermitian2(&c) - 1.0).abs() < 1e-15);
        let c = m.condition_first(&bloch_projector(&[0.0, 0.0, -1.0]));
        assert!(max_eig_hermitian2(&c).abs() < 1e-15);
    }
}

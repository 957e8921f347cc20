//! Cyclic Jacobi diagonalization of 4×4 Hermitian matrices.

use num_complex::Complex64;

use super::Matrix4;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues (ascending) and the matching orthonormal eigenvectors, stored
/// as the columns of `vectors`.
#[derive(Debug, Clone, Copy)]
pub struct HermitianEigen {
    pub values: [f64; 4],
    pub vectors: Matrix4,
}

fn off_diagonal_sq(a: &Matrix4) -> f64 {
    let mut s = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s
}

/// Diagonalizes `m`, assuming it is Hermitian. Only the upper triangle's
/// relation to the lower one matters through the rotations; callers check
/// Hermiticity beforehand.
pub(crate) fn jacobi_eigen(m: &Matrix4) -> HermitianEigen {
    let mut a = *m;
    let mut v = Matrix4::identity();
    let scale = m.frobenius().max(f64::MIN_POSITIVE);
    let floor = (f64::EPSILON * scale) * (f64::EPSILON * scale);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_sq(&a) <= floor {
            break;
        }
        for p in 0..3 {
            for q in p + 1..4 {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag == 0.0 {
                    continue;
                }
                // D = diag(1, conj(phase)) makes the (p,q) entry real and
                // positive; R is the real symmetric Jacobi rotation.
                let phase = apq / mag;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let theta = (aqq - app) / (2.0 * mag);
                let t = if theta == 0.0 { 1.0 } else { theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt()) };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                let mut rot = Matrix4::identity();
                rot[(p, p)] = Complex64::new(c, 0.0);
                rot[(p, q)] = Complex64::new(s, 0.0);
                rot[(q, p)] = phase.conj() * -s;
                rot[(q, q)] = phase.conj() * c;

                a = rot.adjoint() * a * rot;
                a[(p, q)] = Complex64::new(0.0, 0.0);
                a[(q, p)] = Complex64::new(0.0, 0.0);
                a[(p, p)].im = 0.0;
                a[(q, q)].im = 0.0;
                v = v * rot;
            }
        }
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| a[(i, i)].re.total_cmp(&a[(j, j)].re));
    let mut values = [0.0; 4];
    let mut vectors = Matrix4::zero();
    for (k, &idx) in order.iter().enumerate() {
        values[k] = a[(idx, idx)].re;
        for r in 0..4 {
            vectors[(r, k)] = v[(r, idx)];
        }
    }
    HermitianEigen { values, vectors }
}

/// Singular values of `m` (unordered) by one-sided Jacobi: plane rotations
/// on the columns until they are mutually orthogonal, then the column norms.
/// Small singular values keep full relative accuracy, unlike the square
/// roots of the spectrum of `m·m†`.
pub(crate) fn one_sided_jacobi(m: &Matrix4) -> [f64; 4] {
    let mut a = *m;
    let col_dot = |a: &Matrix4, p: usize, q: usize| -> Complex64 { (0..4).map(|r| a[(r, p)].conj() * a[(r, q)]).sum() };
    let col_norm_sq = |a: &Matrix4, p: usize| -> f64 { (0..4).map(|r| a[(r, p)].norm_sqr()).sum() };

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..3 {
            for q in p + 1..4 {
                let alpha = col_norm_sq(&a, p);
                let beta = col_norm_sq(&a, q);
                let gamma = col_dot(&a, p, q);
                let mag = gamma.norm();
                if mag == 0.0 || mag <= f64::EPSILON * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                // Rotate column q by the phase of gamma so the pair is a
                // real 2×2 problem, then apply the classical rotation.
                let phase = (gamma / mag).conj();
                let zeta = (beta - alpha) / (2.0 * mag);
                let t = if zeta == 0.0 { 1.0 } else { zeta.signum() / (zeta.abs() + (zeta * zeta + 1.0).sqrt()) };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for r in 0..4 {
                    let x = a[(r, p)];
                    let y = a[(r, q)] * phase;
                    a[(r, p)] = x * c - y * s;
                    a[(r, q)] = x * s + y * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    [0, 1, 2, 3].map(|p| col_norm_sq(&a, p).sqrt())
}

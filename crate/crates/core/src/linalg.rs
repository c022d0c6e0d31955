//! Small dense linear algebra helpers: a cyclic-Jacobi eigensolver for
//! complex Hermitian matrices and a few matrix utilities.
//!
//! Every matrix in this crate is tiny (at most ~81x81), so the Jacobi
//! method with unitary plane rotations is accurate and fast enough.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Off-diagonal convergence threshold relative to the Frobenius norm.
const OFF_TOL: f64 = 1e-13;
/// Maximum number of cyclic sweeps.
const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a Hermitian matrix.
///
/// `values` are sorted in descending order; `vectors` holds the matching
/// orthonormal eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: DMatrix<Complex64>,
}

/// Maximum absolute deviation of `a` from its adjoint.
pub fn hermiticity_residual(a: &DMatrix<Complex64>) -> f64 {
    let mut max = 0.0f64;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            let d = (a[(i, j)] - a[(j, i)].conj()).norm();
            if d > max {
                max = d;
            }
        }
    }
    max
}

fn off_diagonal_norm(a: &DMatrix<Complex64>) -> f64 {
    let mut s = 0.0;
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes a complex Hermitian matrix by cyclic Jacobi rotations.
///
/// Each rotation is the unitary J acting on the (p,q) plane,
/// J = diag-phase x real rotation, chosen to annihilate a_pq.
pub fn hermitian_eigen(a: &DMatrix<Complex64>) -> Result<HermitianEigen> {
    let n = a.nrows();
    if a.ncols() != n {
        return Err(Error::ShapeMismatch(format!(
            "eigensolver needs a square matrix, got {}x{}",
            a.nrows(),
            a.ncols()
        )));
    }
    // Work on the Hermitian part; callers validate hermiticity separately.
    let mut m = DMatrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let mut v = DMatrix::<Complex64>::identity(n, n);
    let scale = m.norm().max(f64::MIN_POSITIVE);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&m) <= OFF_TOL * scale {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                let rho = apq.norm();
                if rho <= f64::MIN_POSITIVE {
                    continue;
                }
                let phase = apq / rho; // e^{i theta}
                let app = m[(p, p)].re;
                let aqq = m[(q, q)].re;
                let tau = (aqq - app) / (2.0 * rho);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let pc = phase.conj();

                // Right multiplication by J (columns p, q).
                for k in 0..n {
                    let akp = m[(k, p)];
                    let akq = m[(k, q)];
                    m[(k, p)] = akp * c - akq * pc * s;
                    m[(k, q)] = akp * s + akq * pc * c;
                }
                // Left multiplication by J^dagger (rows p, q).
                for k in 0..n {
                    let apk = m[(p, k)];
                    let aqk = m[(q, k)];
                    m[(p, k)] = apk * c - aqk * phase * s;
                    m[(q, k)] = apk * s + aqk * phase * c;
                }
                m[(p, q)] = Complex64::new(0.0, 0.0);
                m[(q, p)] = Complex64::new(0.0, 0.0);
                // Accumulate eigenvectors.
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c - vkq * pc * s;
                    v[(k, q)] = vkp * s + vkq * pc * c;
                }
            }
        }
    }
    let off = off_diagonal_norm(&m);
    if !converged && off > OFF_TOL * scale {
        return Err(Error::EigenConvergence(off));
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| m[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok(HermitianEigen { values, vectors })
}

/// Eigenvalues only, descending.
pub fn hermitian_eigenvalues(a: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    hermitian_eigen(a).map(|e| e.values)
}

/// Lifts a real matrix into the complex field.
pub fn to_complex(a: &DMatrix<f64>) -> DMatrix<Complex64> {
    DMatrix::from_fn(a.nrows(), a.ncols(), |i, j| Complex64::new(a[(i, j)], 0.0))
}

/// Largest absolute entry of a complex matrix.
pub fn max_abs(a: &DMatrix<Complex64>) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Largest absolute entry of a real matrix.
pub fn max_abs_real(a: &DMatrix<f64>) -> f64 {
    a.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_hermitian(n: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
        let g = DMatrix::from_fn(n, n, |_, _| {
            Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
        });
        (&g + g.adjoint()) * Complex64::new(0.5, 0.0)
    }

    #[test]
    fn diagonal_matrix_is_fixed_point() {
        let a = to_complex(&DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![
            3.0, -1.0, 2.0,
        ])));
        let e = hermitian_eigen(&a).unwrap();
        assert_eq!(e.values, vec![3.0, 2.0, -1.0]);
    }

    #[test]
    fn identity_degenerate() {
        let a = DMatrix::<Complex64>::identity(5, 5);
        let e = hermitian_eigen(&a).unwrap();
        for v in e.values {
            assert!((v - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn random_hermitian_residuals() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [2usize, 3, 5, 8, 16] {
            let a = random_hermitian(n, &mut rng);
            let e = hermitian_eigen(&a).unwrap();
            // A V = V Lambda
            let lam = DMatrix::from_fn(n, n, |i, j| {
                if i == j {
                    Complex64::new(e.values[i], 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
            let res = &a * &e.vectors - &e.vectors * lam;
            assert!(max_abs(&res) < 1e-11, "residual {} at n={}", max_abs(&res), n);
            // unitarity
            let u = e.vectors.adjoint() * &e.vectors;
            let id = DMatrix::<Complex64>::identity(n, n);
            assert!(max_abs(&(u - id)) < 1e-12);
        }
    }

    #[test]
    fn eigenvalues_match_trace_and_square_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_hermitian(9, &mut rng);
        let e = hermitian_eigenvalues(&a).unwrap();
        let tr: f64 = (0..9).map(|i| a[(i, i)].re).sum();
        let tr2: f64 = (&a * &a).diagonal().iter().map(|z| z.re).sum();
        assert!((e.iter().sum::<f64>() - tr).abs() < 1e-12);
        assert!((e.iter().map(|x| x * x).sum::<f64>() - tr2).abs() < 1e-11);
    }
}

//! Concurrence vectors for pure and mixed bipartite states.
//!
//! A component is indexed by a pair (alpha, beta) of positive roots,
//! alpha from side A's root system and beta from side B's, in canonical
//! root order on both sides. For a 3x3 system this is the familiar
//! 9-slot order (a1a1, a1a2, a1a3, a2a1, ..., a3a3) with a3 = a1+a2.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fundamental_rep::{build_ladder_set, flip_operators};
use crate::linalg::{hermitian_eigen, hermitian_eigenvalues, to_complex};
use crate::state_space::{DensityMatrix, PureState};

/// Tolerance below which eigenvalues of tau tau* are clipped to zero.
const CLIP_TOL: f64 = 1e-10;

/// The concurrence vector of a bipartite state.
///
/// Pure-state components are complex; mixed-state components are
/// nonnegative reals stored with zero imaginary part.
#[derive(Debug, Clone)]
pub struct ConcurrenceVector {
    dim_a: usize,
    dim_b: usize,
    /// (A-root index, B-root index) per component, canonical order.
    pairs: Vec<(usize, usize)>,
    components: Vec<Complex64>,
}

fn root_pairs(dim_a: usize, dim_b: usize) -> Vec<(usize, usize)> {
    let na = dim_a * (dim_a - 1) / 2;
    let nb = dim_b * (dim_b - 1) / 2;
    let mut pairs = Vec::with_capacity(na * nb);
    for a in 0..na {
        for b in 0..nb {
            pairs.push((a, b));
        }
    }
    pairs
}

impl ConcurrenceVector {
    pub fn from_components(dim_a: usize, dim_b: usize, components: Vec<Complex64>) -> Self {
        let pairs = root_pairs(dim_a, dim_b);
        assert_eq!(pairs.len(), components.len());
        ConcurrenceVector {
            dim_a,
            dim_b,
            pairs,
            components,
        }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn components(&self) -> &[Complex64] {
        &self.components
    }

    /// Squared norm, sum of squared component moduli.
    pub fn norm_sq(&self) -> f64 {
        self.components.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }
}

fn check_dims(dim_a: usize, dim_b: usize) -> Result<()> {
    if dim_a < 2 {
        return Err(Error::InvalidDimension { min: 2, got: dim_a });
    }
    if dim_b < 2 {
        return Err(Error::InvalidDimension { min: 2, got: dim_b });
    }
    Ok(())
}

/// The flip operators of both sides, lifted to complex matrices.
pub(crate) fn side_flips(dim_a: usize, dim_b: usize) -> Result<(Vec<DMatrix<Complex64>>, Vec<DMatrix<Complex64>>)> {
    let la = build_ladder_set(dim_a)?;
    let lb = build_ladder_set(dim_b)?;
    let fa = flip_operators(&la)
        .into_iter()
        .map(|f| to_complex(&f.matrix))
        .collect();
    let fb = flip_operators(&lb)
        .into_iter()
        .map(|f| to_complex(&f.matrix))
        .collect();
    Ok((fa, fb))
}

/// <bra| F_a (x) F_b |ket*>, with conjugation taken in the computational
/// basis. `bra` and `ket` are coefficient matrices.
pub(crate) fn flip_bilinear(
    bra: &DMatrix<Complex64>,
    ket: &DMatrix<Complex64>,
    fa: &DMatrix<Complex64>,
    fb: &DMatrix<Complex64>,
) -> Complex64 {
    let flipped = fa * ket.conjugate() * fb.transpose();
    bra.iter()
        .zip(flipped.iter())
        .map(|(b, f)| b.conj() * f)
        .sum()
}

/// Concurrence vector of a pure state, component (alpha, beta) =
/// <psi| F_alpha (x) F_beta |psi*>.
pub fn concurrence_vector_pure(ps: &PureState) -> Result<ConcurrenceVector> {
    check_dims(ps.dim_a(), ps.dim_b())?;
    let (fa, fb) = side_flips(ps.dim_a(), ps.dim_b())?;
    let a = ps.coeffs();
    let mut components = Vec::with_capacity(fa.len() * fb.len());
    for ma in &fa {
        for mb in &fb {
            components.push(flip_bilinear(a, a, ma, mb));
        }
    }
    Ok(ConcurrenceVector::from_components(
        ps.dim_a(),
        ps.dim_b(),
        components,
    ))
}

/// Columns are the subnormalized eigenvectors sqrt(p_i) |e_i> of rho,
/// over the full spectrum.
fn subnormalized_eigvecs(rho: &DensityMatrix) -> Result<DMatrix<Complex64>> {
    let eig = hermitian_eigen(rho.matrix())?;
    let d = eig.values.len();
    let mut w = eig.vectors;
    for (i, &p) in eig.values.iter().enumerate() {
        let p = if p < 0.0 {
            if p < -CLIP_TOL {
                return Err(Error::NotPositiveSemidefinite(p));
            }
            0.0
        } else {
            p
        };
        let s = Complex64::new(p.sqrt(), 0.0);
        for r in 0..d {
            w[(r, i)] *= s;
        }
    }
    Ok(w)
}

fn tau_from_w(
    w: &DMatrix<Complex64>,
    fa: &DMatrix<Complex64>,
    fb: &DMatrix<Complex64>,
) -> DMatrix<Complex64> {
    let t = fa.kronecker(fb);
    // tau_ij = conj(w_i)^T T conj(w_j) with T real
    (w.transpose() * t * w).conjugate()
}

/// The symmetric matrix tau^{alpha beta}_{ij} = <v_i| F_a (x) F_b |v_j*>
/// over the subnormalized eigenvectors of rho.
pub fn tau_matrix(rho: &DensityMatrix, alpha: usize, beta: usize) -> Result<DMatrix<Complex64>> {
    check_dims(rho.dim_a(), rho.dim_b())?;
    let (fa, fb) = side_flips(rho.dim_a(), rho.dim_b())?;
    if alpha >= fa.len() || beta >= fb.len() {
        return Err(Error::Domain(format!(
            "root pair ({alpha},{beta}) out of range ({},{})",
            fa.len(),
            fb.len()
        )));
    }
    let w = subnormalized_eigvecs(rho)?;
    let tau = tau_from_w(&w, &fa[alpha], &fb[beta]);
    // tau is symmetric by construction up to roundoff; symmetrize.
    let sym = (&tau + tau.transpose()) * Complex64::new(0.5, 0.0);
    Ok(sym)
}

/// Takagi spectrum of tau: the nonnegative square roots of the
/// eigenvalues of tau tau*, descending.
fn takagi_spectrum(tau: &DMatrix<Complex64>) -> Result<Vec<f64>> {
    let m = tau * tau.conjugate();
    let eigs = hermitian_eigenvalues(&m)?;
    eigs.into_iter()
        .map(|e| {
            if e < 0.0 {
                if e < -CLIP_TOL {
                    return Err(Error::NotPositiveSemidefinite(e));
                }
                Ok(0.0)
            } else {
                Ok(e.sqrt())
            }
        })
        .collect()
}

fn component_from_tau(tau: &DMatrix<Complex64>) -> Result<f64> {
    let lam = takagi_spectrum(tau)?;
    let rest: f64 = lam.iter().skip(1).sum();
    Ok((lam[0] - rest).max(0.0))
}

/// Mixed-state concurrence component C^{alpha beta} =
/// max{0, lambda_1 - sum_{i>=2} lambda_i}.
pub fn mixed_component(rho: &DensityMatrix, alpha: usize, beta: usize) -> Result<f64> {
    let tau = tau_matrix(rho, alpha, beta)?;
    component_from_tau(&tau)
}

/// Mixed-state concurrence vector over all root pairs in canonical order.
pub fn concurrence_vector_mixed(rho: &DensityMatrix) -> Result<ConcurrenceVector> {
    check_dims(rho.dim_a(), rho.dim_b())?;
    let (fa, fb) = side_flips(rho.dim_a(), rho.dim_b())?;
    let w = subnormalized_eigvecs(rho)?;
    let mut components = Vec::with_capacity(fa.len() * fb.len());
    for ma in &fa {
        for mb in &fb {
            let tau = tau_from_w(&w, ma, mb);
            components.push(Complex64::new(component_from_tau(&tau)?, 0.0));
        }
    }
    Ok(ConcurrenceVector::from_components(
        rho.dim_a(),
        rho.dim_b(),
        components,
    ))
}

//! Von Neumann and linear entropies of pure bipartite states, their
//! closed-form relations to the concurrence norm, and the sup/inf
//! envelope of entropy versus |C|.
//!
//! Logarithms are base 2 throughout, so a Bell state carries exactly
//! one bit.

use num_complex::Complex64;

use crate::concurrence::concurrence_vector_pure;
use crate::error::{Error, Result};
use crate::linalg::hermitian_eigenvalues;
use crate::state_space::{reduced_density, PureState, Side};

/// Entropies and spectral data of a pure bipartite state.
#[derive(Debug, Clone)]
pub struct EntropyReport {
    /// Von Neumann entropy in bits.
    pub von_neumann: f64,
    /// Linear entropy 1 - tr rho_B^2.
    pub linear: f64,
    /// Squared Schmidt coefficients, descending, summing to 1.
    pub schmidt_squares: Vec<f64>,
    /// det rho_B (product of the Schmidt squares on the smaller side).
    pub det_rho_b: f64,
}

fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Shannon entropy (bits) of a probability vector; 0 log 0 := 0.
fn shannon(ps: &[f64]) -> f64 {
    -ps.iter().map(|&p| xlog2x(p)).sum::<f64>()
}

/// Spectral entropies of a pure state.
pub fn entropy_report(ps: &PureState) -> Result<EntropyReport> {
    // Use the smaller side so the Schmidt spectrum carries no padding
    // zeros beyond min(N_A, N_B).
    let side = if ps.dim_a() <= ps.dim_b() {
        Side::A
    } else {
        Side::B
    };
    let rho = reduced_density(ps, side);
    let mut schmidt_squares = hermitian_eigenvalues(&rho)?;
    for k in schmidt_squares.iter_mut() {
        if *k < 0.0 && *k > -1e-12 {
            *k = 0.0;
        }
    }
    let tr2: f64 = schmidt_squares.iter().map(|k| k * k).sum();
    Ok(EntropyReport {
        von_neumann: shannon(&schmidt_squares),
        linear: 1.0 - tr2,
        det_rho_b: schmidt_squares.iter().product(),
        schmidt_squares,
    })
}

/// Evaluates the characteristic polynomial of the reduced density matrix
/// with e_2 replaced by |C|^2/4 (and e_3 by det rho_B when N_A = 3) at
/// every computed Schmidt square; returns the largest |residual|.
pub fn check_secular(ps: &PureState) -> Result<f64> {
    let report = entropy_report(ps)?;
    let cv = concurrence_vector_pure(ps)?;
    let e2 = cv.norm_sq() / 4.0;
    let kappa = &report.schmidt_squares;
    let n = kappa.len();

    // Elementary symmetric polynomials of the spectrum, with e_1 = 1,
    // e_2 = |C|^2/4 and e_n = det substituted from their closed forms.
    let mut e = vec![0.0; n + 1];
    e[0] = 1.0;
    for &k in kappa {
        for j in (1..=n).rev() {
            e[j] += e[j - 1] * k;
        }
    }
    e[1] = 1.0;
    if n >= 2 {
        e[2] = e2;
    }
    if n == 3 {
        e[3] = report.det_rho_b;
    }

    let mut max_res = 0.0f64;
    for &k in kappa {
        // p(k) = sum_j (-1)^j e_j k^{n-j}
        let mut val = 0.0;
        for (j, &ej) in e.iter().enumerate() {
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            val += sign * ej * k.powi((n - j) as i32);
        }
        max_res = max_res.max(val.abs());
    }
    Ok(max_res)
}

fn binary_entropy(x: f64) -> f64 {
    -xlog2x(x) - xlog2x(1.0 - x)
}

/// Von Neumann entropy of a 2 x N state from the concurrence norm:
/// h((1 - sqrt(1 - |C|^2))/2).
pub fn entropy_from_norm_qubit(norm_c: f64) -> Result<f64> {
    if !(0.0..=1.0 + 1e-12).contains(&norm_c) {
        return Err(Error::Domain(format!("|C| = {norm_c} outside [0, 1]")));
    }
    let c2 = (norm_c * norm_c).min(1.0);
    let x = (1.0 - (1.0 - c2).sqrt()) / 2.0;
    Ok(binary_entropy(x))
}

/// Roots of lambda^3 - lambda^2 + e2 lambda - e3 = 0 (the reduced-density
/// characteristic cubic), via Cardano on the depressed form. Returns the
/// roots as complex numbers in the branch order (omega, omega*, 1).
pub fn secular_cubic_roots(e2: f64, e3: f64) -> [Complex64; 3] {
    let p = e2 - 1.0 / 3.0;
    // Depressed cubic t^3 + p t + q_d with t = lambda - 1/3.
    let q_d = e2 / 3.0 - 2.0 / 27.0 - e3;
    let disc = Complex64::new(q_d * q_d / 4.0 + p * p * p / 27.0, 0.0);
    let s = disc.sqrt();
    let mut u = (-Complex64::new(q_d, 0.0) / 2.0 + s).cbrt();
    if u.norm() < 1e-30 {
        u = (-Complex64::new(q_d, 0.0) / 2.0 - s).cbrt();
    }
    let v = if u.norm() < 1e-30 {
        Complex64::new(0.0, 0.0)
    } else {
        -Complex64::new(p / 3.0, 0.0) / u
    };
    let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
    let third = Complex64::new(1.0 / 3.0, 0.0);
    [
        third + omega * u + omega.conj() * v,
        third + omega.conj() * u + omega * v,
        third + u + v,
    ]
}

/// Von Neumann entropy of a 3 x 3 state from (|C|, det rho_B), through
/// the x+- cubic-root expressions.
pub fn entropy_from_norm_qutrit(norm_c: f64, det_b: f64) -> Result<f64> {
    let e2 = norm_c * norm_c / 4.0;
    let roots = secular_cubic_roots(e2, det_b);
    let mut spectrum = [0.0f64; 3];
    for (i, z) in roots.iter().enumerate() {
        if z.im.abs() > 1e-9 {
            return Err(Error::Domain(format!(
                "(|C|, det) = ({norm_c}, {det_b}) yields complex eigenvalue {z}"
            )));
        }
        if z.re < -1e-9 || z.re > 1.0 + 1e-9 {
            return Err(Error::Domain(format!(
                "(|C|, det) = ({norm_c}, {det_b}) yields eigenvalue {} outside [0, 1]",
                z.re
            )));
        }
        spectrum[i] = z.re.clamp(0.0, 1.0);
    }
    Ok(shannon(&spectrum))
}

/// Upper bound of |C| for a pair of qutrits.
pub fn max_norm_qutrit() -> f64 {
    (4.0f64 / 3.0).sqrt()
}

/// Feasible det rho_B interval for a given |C|. The characteristic
/// cubic has three real roots exactly when its discriminant is
/// nonnegative, which pins det rho_B to
/// [e2/3 - 2/27 - 2 m^{3/2}, e2/3 - 2/27 + 2 m^{3/2}] with
/// m = (1/3 - e2)/3, intersected with [0, 1/27].
pub fn feasible_det_range(norm_c: f64) -> Result<(f64, f64)> {
    let e2 = norm_c * norm_c / 4.0;
    let m = ((1.0 / 3.0 - e2) / 3.0).max(0.0);
    let half_width = 2.0 * m.powf(1.5);
    let center = e2 / 3.0 - 2.0 / 27.0;
    let lo = (center - half_width).max(0.0);
    let hi = (center + half_width).min(1.0 / 27.0);
    if hi < lo {
        return Err(Error::Domain(format!(
            "no feasible det rho_B for |C| = {norm_c}"
        )));
    }
    Ok((lo, hi))
}

/// Infimum and supremum of the von Neumann entropy over all qutrit-pair
/// spectra compatible with the given |C|, scanned on `grid` points of
/// the feasible det rho_B interval.
pub fn entropy_bounds(norm_c: f64, grid: usize) -> Result<(f64, f64)> {
    if !(0.0..=max_norm_qutrit() + 1e-12).contains(&norm_c) {
        return Err(Error::Domain(format!(
            "|C| = {norm_c} outside [0, sqrt(4/3)]"
        )));
    }
    if grid < 2 {
        return Err(Error::Domain("grid must be at least 2".into()));
    }
    let e2 = norm_c * norm_c / 4.0;
    let (lo, hi) = feasible_det_range(norm_c)?;
    let mut inf = f64::INFINITY;
    let mut sup = f64::NEG_INFINITY;
    for i in 0..grid {
        let d = lo + (hi - lo) * i as f64 / (grid - 1) as f64;
        let roots = secular_cubic_roots(e2, d);
        let spectrum: Vec<f64> = roots.iter().map(|z| z.re.clamp(0.0, 1.0)).collect();
        let h = shannon(&spectrum);
        inf = inf.min(h);
        sup = sup.max(h);
    }
    Ok((inf, sup))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state_space::catalog_state;
    use num_complex::Complex64;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn bell_state_entropies() {
        let e = catalog_state("bell.phi+").unwrap();
        let rep = entropy_report(&e.state).unwrap();
        assert!((rep.von_neumann - 1.0).abs() < 1e-12);
        assert!((rep.linear - 0.5).abs() < 1e-12);
    }

    #[test]
    fn phi1_entropies() {
        let e = catalog_state("su3.phi1").unwrap();
        let rep = entropy_report(&e.state).unwrap();
        assert!((rep.von_neumann - 3.0f64.log2()).abs() < 1e-12);
        assert!((rep.linear - 2.0 / 3.0).abs() < 1e-12);
        assert!((rep.det_rho_b - 1.0 / 27.0).abs() < 1e-12);
    }

    #[test]
    fn product_state_entropies_vanish() {
        let ps = crate::state_space::PureState::from_terms(3, 3, &[(2, 3, r(1.0))]).unwrap();
        let rep = entropy_report(&ps).unwrap();
        assert!(rep.von_neumann.abs() < 1e-12);
        assert!(rep.linear.abs() < 1e-12);
    }

    #[test]
    fn secular_residual_rank2_state() {
        let ps = crate::state_space::PureState::from_terms(
            3,
            3,
            &[(1, 1, r(0.8)), (2, 2, r(0.6))],
        )
        .unwrap();
        let rep = entropy_report(&ps).unwrap();
        assert!(rep.det_rho_b.abs() < 1e-12);
        assert!(check_secular(&ps).unwrap() < 1e-10);
    }

    #[test]
    fn secular_residual_phi1() {
        let e = catalog_state("su3.phi1").unwrap();
        assert!(check_secular(&e.state).unwrap() < 1e-12);
    }

    #[test]
    fn qubit_norm_relation_endpoints() {
        assert!((entropy_from_norm_qubit(1.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(entropy_from_norm_qubit(0.0).unwrap().abs() < 1e-12);
        assert!(entropy_from_norm_qubit(1.5).is_err());
    }

    #[test]
    fn qutrit_norm_relation_known_points() {
        let h = entropy_from_norm_qutrit((4.0f64 / 3.0).sqrt(), 1.0 / 27.0).unwrap();
        assert!((h - 3.0f64.log2()).abs() < 1e-9);
        let h0 = entropy_from_norm_qutrit(0.0, 0.0).unwrap();
        assert!(h0.abs() < 1e-9);
    }

    #[test]
    fn qutrit_inconsistent_pair_rejected() {
        // |C| = 0 forces spectrum (1,0,0), so det must be 0
        assert!(entropy_from_norm_qutrit(0.0, 0.02).is_err());
    }

    #[test]
    fn cubic_roots_reproduce_spectrum() {
        let spectra = [
            [0.5, 0.3, 0.2],
            [0.9, 0.1, 0.0],
            [1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0],
            [0.7, 0.2, 0.1],
        ];
        for sp in spectra {
            let e2 = sp[0] * sp[1] + sp[1] * sp[2] + sp[2] * sp[0];
            let e3 = sp[0] * sp[1] * sp[2];
            let mut roots: Vec<f64> = secular_cubic_roots(e2, e3)
                .iter()
                .map(|z| {
                    assert!(z.im.abs() < 1e-10, "imag {}", z.im);
                    z.re
                })
                .collect();
            roots.sort_by(|a, b| b.partial_cmp(a).unwrap());
            for (got, want) in roots.iter().zip(sp) {
                assert!((got - want).abs() < 1e-10, "{got} vs {want}");
            }
        }
    }

    #[test]
    fn bounds_endpoints() {
        let (i0, s0) = entropy_bounds(0.0, 64).unwrap();
        assert!(i0.abs() < 1e-6 && s0.abs() < 1e-6);
        let (i1, s1) = entropy_bounds(max_norm_qutrit(), 64).unwrap();
        assert!((i1 - 3.0f64.log2()).abs() < 1e-6);
        assert!((s1 - 3.0f64.log2()).abs() < 1e-6);
    }

    #[test]
    fn bounds_at_unit_norm() {
        let (inf, sup) = entropy_bounds(1.0, 256).unwrap();
        // det = 0 branch reduces to the two-level formula h(1/2) = 1
        assert!((inf - 1.0).abs() < 1e-6, "inf = {inf}");
        assert!(sup > inf + 1e-3);
    }

    #[test]
    fn envelope_monotone() {
        let mut prev = (0.0, 0.0);
        for k in 0..50 {
            let c = max_norm_qutrit() * k as f64 / 49.0;
            let b = entropy_bounds(c, 128).unwrap();
            assert!(b.0 >= prev.0 - 1e-9, "inf not monotone at |C|={c}");
            assert!(b.1 >= prev.1 - 1e-9, "sup not monotone at |C|={c}");
            prev = b;
        }
    }
}

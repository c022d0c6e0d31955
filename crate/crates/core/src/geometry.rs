//! Subspace entanglement geometry: the delta-orthogonality test, the
//! sign criterion for fully entangled subspaces, entanglement-edge
//! scanning, and concurrence surfaces r(theta, phi) with enclosed-volume
//! quadrature.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::concurrence::{flip_bilinear, side_flips};
use crate::error::{Error, Result};
use crate::state_space::{catalog_state, PureState};

const ORTHO_TOL: f64 = 1e-10;
/// |C| below this counts as a zero of the concurrence norm.
pub const EDGE_TOL: f64 = 1e-8;

/// Two or three orthonormal pure states of equal shape.
#[derive(Debug, Clone)]
pub struct SubspaceBasis {
    states: Vec<PureState>,
}

impl SubspaceBasis {
    pub fn new(states: Vec<PureState>) -> Result<SubspaceBasis> {
        if states.len() < 2 || states.len() > 3 {
            return Err(Error::ShapeMismatch(format!(
                "subspace basis needs 2 or 3 states, got {}",
                states.len()
            )));
        }
        let (da, db) = (states[0].dim_a(), states[0].dim_b());
        for s in &states {
            if s.dim_a() != da || s.dim_b() != db {
                return Err(Error::ShapeMismatch("basis states differ in shape".into()));
            }
        }
        let mut max_off = 0.0f64;
        for (i, si) in states.iter().enumerate() {
            for (j, sj) in states.iter().enumerate() {
                let g = sj.inner(si);
                let want = if i == j { 1.0 } else { 0.0 };
                max_off = max_off.max((g - Complex64::new(want, 0.0)).norm());
            }
        }
        if max_off > ORTHO_TOL {
            return Err(Error::NotOrthonormal(max_off));
        }
        Ok(SubspaceBasis { states })
    }

    /// Builds a basis from catalog state names.
    pub fn from_catalog(names: &[&str]) -> Result<SubspaceBasis> {
        let states = names
            .iter()
            .map(|n| catalog_state(n).map(|e| e.state))
            .collect::<Result<Vec<_>>>()?;
        SubspaceBasis::new(states)
    }

    pub fn states(&self) -> &[PureState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn dim_a(&self) -> usize {
        self.states[0].dim_a()
    }

    pub fn dim_b(&self) -> usize {
        self.states[0].dim_b()
    }
}

/// Per root pair, the bilinear matrix G_{mu nu} = <psi_mu|F_a (x) F_b|psi_nu*>.
///
/// The diagonal carries the basis states' own concurrence components;
/// the off-diagonal entries are the delta-condition cross terms. Every
/// surface sample with real coefficients c reduces to c^T G c.
pub fn pair_bilinear_forms(basis: &SubspaceBasis) -> Result<Vec<DMatrix<Complex64>>> {
    let (fa, fb) = side_flips(basis.dim_a(), basis.dim_b())?;
    let m = basis.len();
    let mut forms = Vec::with_capacity(fa.len() * fb.len());
    for ma in &fa {
        for mb in &fb {
            let g = DMatrix::from_fn(m, m, |i, j| {
                flip_bilinear(basis.states[i].coeffs(), basis.states[j].coeffs(), ma, mb)
            });
            forms.push(g);
        }
    }
    Ok(forms)
}

/// Result of the delta-orthogonality test.
#[derive(Debug, Clone)]
pub struct DeltaReport {
    /// True when every pair of basis concurrence vectors is orthogonal.
    pub holds: bool,
    /// offdiag_ok[mu][nu]: the concurrence vectors of basis mu and nu
    /// have negligible overlap (diagonal entries are trivially true).
    pub offdiag_ok: Vec<Vec<bool>>,
    /// Largest off-diagonal overlap magnitude |<C_mu, C_nu>|.
    pub max_offdiag: f64,
}

/// Checks that the concurrence vectors of distinct basis states are
/// orthogonal: sum_k conj(C_mu^k) C_nu^k = 0 for mu != nu, where
/// C_mu^k = <psi_mu|F_a (x) F_b|psi_mu*> is the k-th component.
pub fn delta_condition(basis: &SubspaceBasis) -> Result<DeltaReport> {
    let forms = pair_bilinear_forms(basis)?;
    let m = basis.len();
    let mut offdiag_ok = vec![vec![true; m]; m];
    let mut max_offdiag = 0.0f64;
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let overlap: Complex64 = forms
                .iter()
                .map(|g| g[(i, i)].conj() * g[(j, j)])
                .sum();
            let mag = overlap.norm();
            max_offdiag = max_offdiag.max(mag);
            if mag >= ORTHO_TOL {
                offdiag_ok[i][j] = false;
            }
        }
    }
    let holds = offdiag_ok
        .iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, &ok)| i == j || ok));
    Ok(DeltaReport {
        holds,
        offdiag_ok,
        max_offdiag,
    })
}

/// Verdict of the sign criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Every nonzero component slot is sign-uniform across the bases:
    /// no superposition can cancel the whole vector.
    FullyEntangled,
    /// Some slot mixes signs (or a basis vector is separable); the
    /// subspace may contain an entanglement edge.
    EdgePossible,
    /// Components carry complex phases or the delta condition fails;
    /// the real-sign criterion does not apply.
    Inconclusive,
}

/// Applies the sign criterion to an orthonormal basis. Complex-phased
/// components make the criterion inapplicable; with real components, a
/// slot mixing signs (or a separable basis vector) flags a possible
/// edge, and sign-uniform slots together with the delta condition
/// certify full entanglement.
pub fn sign_criterion(basis: &SubspaceBasis) -> Result<Verdict> {
    let forms = pair_bilinear_forms(basis)?;
    let m = basis.len();
    let mut any_zero_vector = false;
    for mu in 0..m {
        let norm_sq: f64 = forms.iter().map(|g| g[(mu, mu)].norm_sqr()).sum();
        if norm_sq < EDGE_TOL * EDGE_TOL {
            any_zero_vector = true;
        }
    }
    let mut mixed_signs = false;
    for g in &forms {
        let mut pos = false;
        let mut neg = false;
        for mu in 0..m {
            let z = g[(mu, mu)];
            if z.norm() < ORTHO_TOL {
                continue;
            }
            if z.im.abs() >= ORTHO_TOL {
                return Ok(Verdict::Inconclusive);
            }
            if z.re > 0.0 {
                pos = true;
            } else {
                neg = true;
            }
        }
        if pos && neg {
            mixed_signs = true;
        }
    }
    if mixed_signs || any_zero_vector {
        return Ok(Verdict::EdgePossible);
    }
    if delta_condition(basis)?.holds {
        Ok(Verdict::FullyEntangled)
    } else {
        Ok(Verdict::Inconclusive)
    }
}

/// One sample of a concurrence surface.
#[derive(Debug, Clone, Copy)]
pub struct SurfaceSample {
    pub theta: f64,
    pub phi: f64,
    pub radius: f64,
}

fn radius_from_forms(forms: &[DMatrix<Complex64>], c: &[f64]) -> f64 {
    let m = c.len();
    let mut norm_sq = 0.0;
    for g in forms {
        let mut z = Complex64::new(0.0, 0.0);
        for i in 0..m {
            for j in 0..m {
                z += g[(i, j)] * c[i] * c[j];
            }
        }
        norm_sq += z.norm_sqr();
    }
    norm_sq.sqrt()
}

/// Samples r(theta, phi) = |C| of sin t cos f b1 + sin t sin f b2 +
/// cos t b3 on a regular grid, theta in [0, pi] inclusive and phi in
/// [0, 2pi) exclusive.
pub fn surface(basis: &SubspaceBasis, n_theta: usize, n_phi: usize) -> Result<Vec<SurfaceSample>> {
    if basis.len() != 3 {
        return Err(Error::ShapeMismatch(format!(
            "surface needs a 3-state basis, got {}",
            basis.len()
        )));
    }
    if n_theta < 2 || n_phi < 2 {
        return Err(Error::Domain("grid sizes must be at least 2".into()));
    }
    let forms = pair_bilinear_forms(basis)?;
    let mut samples = Vec::with_capacity(n_theta * n_phi);
    for it in 0..n_theta {
        let theta = std::f64::consts::PI * it as f64 / (n_theta - 1) as f64;
        for ip in 0..n_phi {
            let phi = 2.0 * std::f64::consts::PI * ip as f64 / n_phi as f64;
            let c = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
            samples.push(SurfaceSample {
                theta,
                phi,
                radius: radius_from_forms(&forms, &c),
            });
        }
    }
    Ok(samples)
}

/// Volume enclosed by the concurrence surface,
/// V = (1/3) integral r^3 sin(theta) dtheta dphi, by the midpoint rule
/// on an n_theta x n_phi grid.
pub fn enclosed_volume(basis: &SubspaceBasis, n_theta: usize, n_phi: usize) -> Result<f64> {
    if basis.len() != 3 {
        return Err(Error::ShapeMismatch(format!(
            "volume needs a 3-state basis, got {}",
            basis.len()
        )));
    }
    if n_theta < 2 || n_phi < 2 {
        return Err(Error::Domain("grid sizes must be at least 2".into()));
    }
    let forms = pair_bilinear_forms(basis)?;
    let dt = std::f64::consts::PI / n_theta as f64;
    let dp = 2.0 * std::f64::consts::PI / n_phi as f64;
    let mut sum = 0.0;
    for it in 0..n_theta {
        let theta = (it as f64 + 0.5) * dt;
        let st = theta.sin();
        let ct = theta.cos();
        for ip in 0..n_phi {
            let phi = (ip as f64 + 0.5) * dp;
            let c = [st * phi.cos(), st * phi.sin(), ct];
            let r = radius_from_forms(&forms, &c);
            sum += r * r * r * st;
        }
    }
    Ok(sum * dt * dp / 3.0)
}

/// One point of an entanglement-edge scan of the family
/// p (psi+_1 + psi+_2 + psi+_3) + q (|11> + |22> + |33>).
#[derive(Debug, Clone, Copy)]
pub struct EdgePoint {
    /// Raw coefficient of the psi+ triple.
    pub p: f64,
    /// Raw coefficient of the diagonal triple.
    pub q: f64,
    /// |C| of the per-point normalized state.
    pub norm: f64,
}

/// How the (p, q) plane is sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeScanMode {
    /// Along the normalization ellipse 3p^2 + 3q^2 = 1.
    Ellipse,
    /// A raw [0,1] x [0,1] grid with per-point normalization.
    Rectangle,
}

/// Result of an edge scan: all sampled points plus the zero locus
/// (points with |C| < EDGE_TOL).
#[derive(Debug, Clone)]
pub struct EdgeScan {
    pub points: Vec<EdgePoint>,
    pub zeros: Vec<EdgePoint>,
}

/// Coefficient matrix of p (psi+ triple) + q (diagonal triple): q on
/// the diagonal, p/sqrt(2) off the diagonal.
fn edge_family_state(p: f64, q: f64) -> Result<PureState> {
    let s = p / 2.0f64.sqrt();
    let m = DMatrix::from_fn(3, 3, |i, j| {
        Complex64::new(if i == j { q } else { s }, 0.0)
    });
    PureState::normalized(m)
}

/// Scans the norm of the concurrence vector over the (p, q) family and
/// reports the zero locus.
pub fn edge_scan(grid: usize, mode: EdgeScanMode) -> Result<EdgeScan> {
    if grid < 2 {
        return Err(Error::Domain("grid must be at least 2".into()));
    }
    let mut points = Vec::new();
    match mode {
        EdgeScanMode::Ellipse => {
            let r = 1.0 / 3.0f64.sqrt();
            for k in 0..grid {
                let t = 2.0 * std::f64::consts::PI * k as f64 / grid as f64;
                let (p, q) = (r * t.cos(), r * t.sin());
                let ps = edge_family_state(p, q)?;
                let cv = crate::concurrence::concurrence_vector_pure(&ps)?;
                points.push(EdgePoint {
                    p,
                    q,
                    norm: cv.norm(),
                });
            }
        }
        EdgeScanMode::Rectangle => {
            for ip in 0..grid {
                let p = ip as f64 / (grid - 1) as f64;
                for iq in 0..grid {
                    let q = iq as f64 / (grid - 1) as f64;
                    if p == 0.0 && q == 0.0 {
                        continue;
                    }
                    let ps = edge_family_state(p, q)?;
                    let cv = crate::concurrence::concurrence_vector_pure(&ps)?;
                    points.push(EdgePoint {
                        p,
                        q,
                        norm: cv.norm(),
                    });
                }
            }
        }
    }
    let zeros = points
        .iter()
        .copied()
        .filter(|pt| pt.norm < EDGE_TOL)
        .collect();
    Ok(EdgeScan { points, zeros })
}

/// |C| of the edge family at explicit (p, q), normalized per point.
pub fn edge_norm(p: f64, q: f64) -> Result<f64> {
    let ps = edge_family_state(p, q)?;
    Ok(crate::concurrence::concurrence_vector_pure(&ps)?.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(names: &[&str]) -> SubspaceBasis {
        SubspaceBasis::from_catalog(names).unwrap()
    }

    #[test]
    fn non_orthonormal_rejected() {
        let s = catalog_state("su3.phi1").unwrap().state;
        assert!(matches!(
            SubspaceBasis::new(vec![s.clone(), s]),
            Err(Error::NotOrthonormal(_))
        ));
    }

    #[test]
    fn delta_condition_known_bases() {
        for names in [
            ["su3.psi-1", "su3.psi-2", "su3.psi-3"],
            ["su3.phi1", "su3.phi2", "su3.phi3"],
        ] {
            let rep = delta_condition(&basis(&names)).unwrap();
            assert!(rep.holds, "{names:?}: max offdiag {}", rep.max_offdiag);
        }
        // a non-conforming pair has visible cross terms
        let rep = delta_condition(&basis(&["su3.phi1", "su3.psi+1"])).unwrap();
        assert!(!rep.holds);
        assert!(rep.max_offdiag > 0.1);
        assert!(!rep.offdiag_ok[0][1]);
    }

    #[test]
    fn sign_criterion_verdicts() {
        assert_eq!(
            sign_criterion(&basis(&["su3.psi-1", "su3.psi-2", "su3.psi-3"])).unwrap(),
            Verdict::FullyEntangled
        );
        assert_eq!(
            sign_criterion(&basis(&["so3.chi00", "so3.phi+", "so3.phi-"])).unwrap(),
            Verdict::EdgePossible
        );
        assert_eq!(
            sign_criterion(&basis(&["su3.phi1", "su3.phi2", "su3.phi3"])).unwrap(),
            Verdict::Inconclusive
        );
    }

    #[test]
    fn psi_minus_surface_is_unit_sphere() {
        let b = basis(&["su3.psi-1", "su3.psi-2", "su3.psi-3"]);
        for s in surface(&b, 9, 16).unwrap() {
            assert!((s.radius - 1.0).abs() < 1e-10, "r = {} at ({}, {})", s.radius, s.theta, s.phi);
        }
    }

    #[test]
    fn phi_surface_separable_point() {
        // (phi1 + phi2 + phi3)/sqrt(3) = |11>, which is separable
        let b = basis(&["su3.phi1", "su3.phi2", "su3.phi3"]);
        let forms = pair_bilinear_forms(&b).unwrap();
        let c = [1.0 / 3.0f64.sqrt(); 3];
        assert!(radius_from_forms(&forms, &c) < 1e-10);
    }

    #[test]
    fn singlet_basis_surface_pole() {
        let b = basis(&["so3.chi00", "so3.phi+", "so3.phi-"]);
        let samples = surface(&b, 5, 4).unwrap();
        // theta = 0 is the state phi-, which has |C| = 1
        assert!((samples[0].radius - 1.0).abs() < 1e-10);
    }

    #[test]
    fn surface_antipodal_symmetry() {
        let b = basis(&["so3.chi+1", "so3.chi+0", "so3.chi+-1"]);
        let n_t = 7;
        let n_p = 8;
        let samples = surface(&b, n_t, n_p).unwrap();
        let idx = |it: usize, ip: usize| it * n_p + ip;
        for it in 0..n_t {
            for ip in 0..n_p {
                let anti = idx(n_t - 1 - it, (ip + n_p / 2) % n_p);
                let d = (samples[idx(it, ip)].radius - samples[anti].radius).abs();
                assert!(d < 1e-10);
            }
        }
    }

    #[test]
    fn unit_sphere_volume() {
        let b = basis(&["su3.psi-1", "su3.psi-2", "su3.psi-3"]);
        let v = enclosed_volume(&b, 200, 200).unwrap();
        assert!((v - 4.0 * std::f64::consts::PI / 3.0).abs() < 1e-4);
    }

    #[test]
    fn edge_scan_zero_locus() {
        // normalized zero at (p, q) = (sqrt(2)/3, 1/3)
        let p0 = 2.0f64.sqrt() / 3.0;
        let q0 = 1.0 / 3.0;
        assert!(edge_norm(p0, q0).unwrap() < 1e-12);
        // raw-coordinate zero along p = sqrt(2) q
        assert!(edge_norm(0.6 * 2.0f64.sqrt(), 0.6).unwrap() < 1e-12);
        // endpoints of the ellipse
        assert!((edge_norm(0.0, 1.0 / 3.0f64.sqrt()).unwrap().powi(2) - 4.0 / 3.0).abs() < 1e-12);
        assert!((edge_norm(1.0 / 3.0f64.sqrt(), 0.0).unwrap().powi(2) - 1.0).abs() < 1e-12);
        // a reasonably fine ellipse scan catches the zero neighborhood
        let scan = edge_scan(512, EdgeScanMode::Ellipse).unwrap();
        assert_eq!(scan.points.len(), 512);
        let min = scan
            .points
            .iter()
            .map(|pt| pt.norm)
            .fold(f64::INFINITY, f64::min);
        assert!(min < 2e-2, "min |C| on ellipse scan = {min}");
    }

    #[test]
    fn constant_norm_on_psi_subspaces() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for names in [
            ["su3.psi-1", "su3.psi-2", "su3.psi-3"],
            ["su3.psi+1", "su3.psi+2", "su3.psi+3"],
        ] {
            let b = basis(&names);
            let forms = pair_bilinear_forms(&b).unwrap();
            for _ in 0..200 {
                let mut c = [0.0; 3];
                let mut n = 0.0;
                while n < 1e-12 {
                    for x in c.iter_mut() {
                        *x = rng.gen::<f64>() - 0.5;
                    }
                    n = c.iter().map(|x| x * x).sum::<f64>();
                }
                let n = n.sqrt();
                for x in c.iter_mut() {
                    *x /= n;
                }
                let r = radius_from_forms(&forms, &c);
                assert!((r - 1.0).abs() < 1e-10, "{names:?}: r = {r}");
            }
        }
    }
}

//! Bipartite pure states, density matrices and the built-in catalog of
//! named states (the SU(3) nine-state family, the generalized EPR bases
//! phi_4..phi_9, the SO(3) family and the qubit Bell states).

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::concurrence::ConcurrenceVector;
use crate::error::{Error, Result};
use crate::linalg::{hermiticity_residual, hermitian_eigenvalues};

pub const NORM_TOL: f64 = 1e-12;
pub const PSD_TOL: f64 = 1e-10;

/// Which subsystem a reduced density matrix is taken over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// A normalized pure state of an N_A x N_B bipartite system, stored as
/// the coefficient matrix a_{mu j} of |psi> = sum a_{mu j} |mu>|j>.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dim_a: usize,
    dim_b: usize,
    coeffs: DMatrix<Complex64>,
}

impl PureState {
    /// Wraps a coefficient matrix, requiring it to be normalized within
    /// `NORM_TOL`.
    pub fn new(coeffs: DMatrix<Complex64>) -> Result<PureState> {
        let (dim_a, dim_b) = (coeffs.nrows(), coeffs.ncols());
        if dim_a < 1 || dim_b < 1 {
            return Err(Error::InvalidDimension { min: 1, got: 0 });
        }
        let n2: f64 = coeffs.iter().map(|z| z.norm_sqr()).sum();
        if (n2 - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(n2));
        }
        Ok(PureState {
            dim_a,
            dim_b,
            coeffs,
        })
    }

    /// Wraps a coefficient matrix after explicit normalization.
    /// Zero-norm input is rejected rather than silently rescaled.
    pub fn normalized(coeffs: DMatrix<Complex64>) -> Result<PureState> {
        let n2: f64 = coeffs.iter().map(|z| z.norm_sqr()).sum();
        if n2 < 1e-300 {
            return Err(Error::ZeroNorm);
        }
        let scale = Complex64::new(1.0 / n2.sqrt(), 0.0);
        PureState::new(coeffs * scale)
    }

    /// Builds a state from a list of (row, col, amplitude) terms with
    /// 1-based basis indices, then normalizes.
    pub fn from_terms(
        dim_a: usize,
        dim_b: usize,
        terms: &[(usize, usize, Complex64)],
    ) -> Result<PureState> {
        let mut coeffs = DMatrix::zeros(dim_a, dim_b);
        for &(i, j, z) in terms {
            if i < 1 || i > dim_a || j < 1 || j > dim_b {
                return Err(Error::ShapeMismatch(format!(
                    "index ({i},{j}) outside {dim_a}x{dim_b}"
                )));
            }
            coeffs[(i - 1, j - 1)] += z;
        }
        PureState::normalized(coeffs)
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn coeffs(&self) -> &DMatrix<Complex64> {
        &self.coeffs
    }

    /// <phi|psi> with this state as |psi>.
    pub fn inner(&self, bra: &PureState) -> Complex64 {
        bra.coeffs
            .iter()
            .zip(self.coeffs.iter())
            .map(|(b, k)| b.conj() * k)
            .sum()
    }

    /// The joint ket as a length N_A*N_B column vector, row-major in
    /// (mu, j).
    pub fn ket(&self) -> nalgebra::DVector<Complex64> {
        let mut v = nalgebra::DVector::zeros(self.dim_a * self.dim_b);
        for mu in 0..self.dim_a {
            for j in 0..self.dim_b {
                v[mu * self.dim_b + j] = self.coeffs[(mu, j)];
            }
        }
        v
    }
}

/// Reduced density matrix of a pure state: a a^dagger on side A,
/// a^dagger a on side B.
pub fn reduced_density(ps: &PureState, side: Side) -> DMatrix<Complex64> {
    let a = ps.coeffs();
    match side {
        Side::A => a * a.adjoint(),
        Side::B => a.adjoint() * a,
    }
}

/// A density matrix of the joint N_A x N_B system.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    dim_a: usize,
    dim_b: usize,
    matrix: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates hermiticity, unit trace and positive semidefiniteness.
    pub fn new(dim_a: usize, dim_b: usize, matrix: DMatrix<Complex64>) -> Result<DensityMatrix> {
        let d = dim_a * dim_b;
        if matrix.nrows() != d || matrix.ncols() != d {
            return Err(Error::ShapeMismatch(format!(
                "density matrix is {}x{}, expected {d}x{d}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let herm = hermiticity_residual(&matrix);
        if herm > NORM_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let tr: f64 = matrix.diagonal().iter().map(|z| z.re).sum();
        if (tr - 1.0).abs() > NORM_TOL {
            return Err(Error::BadTrace(tr));
        }
        let eigs = hermitian_eigenvalues(&matrix)?;
        if let Some(&min) = eigs.last() {
            if min < -PSD_TOL {
                return Err(Error::NotPositiveSemidefinite(min));
            }
        }
        Ok(DensityMatrix {
            dim_a,
            dim_b,
            matrix,
        })
    }

    /// rho = sum_k w_k |psi_k><psi_k| for nonnegative weights summing to 1.
    pub fn from_mixture(mixture: &[(f64, PureState)]) -> Result<DensityMatrix> {
        if mixture.is_empty() {
            return Err(Error::BadWeights("empty mixture".into()));
        }
        let (dim_a, dim_b) = (mixture[0].1.dim_a(), mixture[0].1.dim_b());
        let mut sum = 0.0;
        let mut m = DMatrix::zeros(dim_a * dim_b, dim_a * dim_b);
        for (w, ps) in mixture {
            if *w < 0.0 {
                return Err(Error::BadWeights(format!("negative weight {w}")));
            }
            if ps.dim_a() != dim_a || ps.dim_b() != dim_b {
                return Err(Error::ShapeMismatch("mixture states differ in shape".into()));
            }
            sum += w;
            let k = ps.ket();
            m += (&k * k.adjoint()) * Complex64::new(*w, 0.0);
        }
        if (sum - 1.0).abs() > NORM_TOL {
            return Err(Error::BadWeights(format!("weights sum to {sum}")));
        }
        DensityMatrix::new(dim_a, dim_b, m)
    }

    /// Rank-1 density matrix of a pure state.
    pub fn from_pure(ps: &PureState) -> Result<DensityMatrix> {
        DensityMatrix::from_mixture(&[(1.0, ps.clone())])
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }
}

/// A named state of the built-in catalog.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub state: PureState,
    /// Concurrence-vector components listed in canonical root-pair
    /// order, when known in closed form.
    pub expected_concurrence: Option<Vec<Complex64>>,
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn r(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn entry(
    name: &'static str,
    dim: usize,
    terms: &[(usize, usize, Complex64)],
    expected: Option<Vec<Complex64>>,
) -> CatalogEntry {
    CatalogEntry {
        name,
        state: PureState::from_terms(dim, dim, terms).expect("catalog state"),
        expected_concurrence: expected,
    }
}

/// All named states of the catalog.
///
/// SO(3) spin labels m = 1, 0, -1 map to internal indices 1, 2, 3 in
/// that order.
pub fn catalog() -> Vec<CatalogEntry> {
    let w = c((2.0 * std::f64::consts::PI / 3.0).cos(), (2.0 * std::f64::consts::PI / 3.0).sin());
    let wc = w.conj();
    let one = r(1.0);
    let t = 2.0 / 3.0;

    let mut out = Vec::new();

    // SU(3) nonet: phi_1..3 and psi^+-_1..3.
    out.push(entry(
        "su3.phi1",
        3,
        &[(1, 1, one), (2, 2, one), (3, 3, one)],
        Some(vec![r(t), r(0.0), r(0.0), r(0.0), r(t), r(0.0), r(0.0), r(0.0), r(t)]),
    ));
    out.push(entry(
        "su3.phi2",
        3,
        &[(1, 1, one), (2, 2, w), (3, 3, wc)],
        Some(vec![wc * t, r(0.0), r(0.0), r(0.0), r(t), r(0.0), r(0.0), r(0.0), w * t]),
    ));
    out.push(entry(
        "su3.phi3",
        3,
        &[(1, 1, one), (2, 2, wc), (3, 3, w)],
        Some(vec![w * t, r(0.0), r(0.0), r(0.0), r(t), r(0.0), r(0.0), r(0.0), wc * t]),
    ));
    for (name, sign, slot) in [
        ("su3.psi+1", 1.0, 0usize),
        ("su3.psi-1", -1.0, 0),
        ("su3.psi+2", 1.0, 4),
        ("su3.psi-2", -1.0, 4),
        ("su3.psi+3", 1.0, 8),
        ("su3.psi-3", -1.0, 8),
    ] {
        let (i, j) = match slot {
            0 => (1, 2),
            4 => (2, 3),
            _ => (1, 3),
        };
        let mut expected = vec![r(0.0); 9];
        expected[slot] = r(-sign); // C = -+1 for psi^+-
        out.push(entry(
            name,
            3,
            &[(i, j, one), (j, i, r(sign))],
            Some(expected),
        ));
    }

    // Generalized EPR bases phi_4..phi_9 on the off-diagonal cycles
    // (12,23,31) and (21,32,13) with phases 1, w, w*.
    let cycle_a = [(1, 2), (2, 3), (3, 1)];
    let cycle_b = [(2, 1), (3, 2), (1, 3)];
    let phases = [[one, one, one], [one, w, wc], [one, wc, w]];
    let names_a = ["su3.phi4", "su3.phi5", "su3.phi6"];
    let names_b = ["su3.phi7", "su3.phi8", "su3.phi9"];
    for (names, cycle) in [(names_a, cycle_a), (names_b, cycle_b)] {
        for (k, name) in names.iter().enumerate() {
            let terms: Vec<(usize, usize, Complex64)> = cycle
                .iter()
                .zip(&phases[k])
                .map(|(&(i, j), &p)| (i, j, p))
                .collect();
            let expected = if *name == "su3.phi4" {
                Some(vec![r(0.0), r(t), r(0.0), r(0.0), r(0.0), r(-t), r(-t), r(0.0), r(0.0)])
            } else {
                None
            };
            out.push(entry(name, 3, &terms, expected));
        }
    }

    // SO(3) family: m = 1 -> |1>, m = 0 -> |2>, m = -1 -> |3>.
    out.push(entry(
        "so3.chi+1",
        3,
        &[(2, 1, one), (1, 2, one)],
        Some({
            let mut v = vec![r(0.0); 9];
            v[0] = r(-1.0);
            v
        }),
    ));
    out.push(entry(
        "so3.chi-1",
        3,
        &[(2, 1, one), (1, 2, r(-1.0))],
        Some({
            let mut v = vec![r(0.0); 9];
            v[0] = r(1.0);
            v
        }),
    ));
    out.push(entry(
        "so3.chi+-1",
        3,
        &[(3, 2, one), (2, 3, one)],
        Some({
            let mut v = vec![r(0.0); 9];
            v[4] = r(-1.0);
            v
        }),
    ));
    out.push(entry(
        "so3.chi--1",
        3,
        &[(3, 2, one), (2, 3, r(-1.0))],
        Some({
            let mut v = vec![r(0.0); 9];
            v[4] = r(1.0);
            v
        }),
    ));
    out.push(entry(
        "so3.chi+0",
        3,
        &[(3, 1, one), (2, 2, r(2.0)), (1, 3, one)],
        Some(vec![
            r(0.0),
            r(-t),
            r(0.0),
            r(-t),
            r(0.0),
            r(0.0),
            r(0.0),
            r(0.0),
            r(-1.0 / 3.0),
        ]),
    ));
    out.push(entry(
        "so3.chi-0",
        3,
        &[(3, 1, one), (1, 3, r(-1.0))],
        Some({
            let mut v = vec![r(0.0); 9];
            v[8] = r(1.0);
            v
        }),
    ));
    out.push(entry(
        "so3.chi00",
        3,
        &[(3, 1, one), (2, 2, r(-1.0)), (1, 3, one)],
        Some(vec![
            r(0.0),
            r(t),
            r(0.0),
            r(t),
            r(0.0),
            r(0.0),
            r(0.0),
            r(0.0),
            r(-t),
        ]),
    ));
    out.push(entry(
        "so3.phi+",
        3,
        &[(1, 1, one), (3, 3, one)],
        Some({
            let mut v = vec![r(0.0); 9];
            v[8] = r(1.0);
            v
        }),
    ));
    out.push(entry(
        "so3.phi-",
        3,
        &[(1, 1, one), (3, 3, r(-1.0))],
        Some({
            let mut v = vec![r(0.0); 9];
            v[8] = r(-1.0);
            v
        }),
    ));

    // Qubit Bell states.
    out.push(entry("bell.phi+", 2, &[(1, 1, one), (2, 2, one)], Some(vec![r(1.0)])));
    out.push(entry("bell.phi-", 2, &[(1, 1, one), (2, 2, r(-1.0))], Some(vec![r(-1.0)])));
    out.push(entry("bell.psi+", 2, &[(1, 2, one), (2, 1, one)], Some(vec![r(-1.0)])));
    out.push(entry("bell.psi-", 2, &[(1, 2, one), (2, 1, r(-1.0))], Some(vec![r(1.0)])));

    out
}

/// Looks up a catalog state by name.
pub fn catalog_state(name: &str) -> Result<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownCatalogEntry(name.to_string()))
}

/// Named orthonormal 3-bases used for concurrence surfaces and volumes.
pub fn named_basis(name: &str) -> Result<Vec<PureState>> {
    let members: &[&str] = match name {
        "su3.psi-" => &["su3.psi-1", "su3.psi-2", "su3.psi-3"],
        "su3.psi+" => &["su3.psi+1", "su3.psi+2", "su3.psi+3"],
        "su3.phi" => &["su3.phi1", "su3.phi2", "su3.phi3"],
        "so3.triplet" => &["so3.chi-1", "so3.chi-0", "so3.chi--1"],
        "so3.pentad" => &["so3.chi+1", "so3.chi+0", "so3.chi+-1"],
        "so3.singlet" => &["so3.chi00", "so3.phi+", "so3.phi-"],
        _ => return Err(Error::UnknownCatalogEntry(name.to_string())),
    };
    members
        .iter()
        .map(|m| catalog_state(m).map(|e| e.state))
        .collect()
}

/// Names of all built-in bases, for CLI listings.
pub const BASIS_NAMES: [&str; 6] = [
    "su3.psi-",
    "su3.psi+",
    "su3.phi",
    "so3.triplet",
    "so3.pentad",
    "so3.singlet",
];

/// Attaches the expected concurrence vector as a `ConcurrenceVector`
/// value when the catalog lists one.
pub fn expected_concurrence(entry: &CatalogEntry) -> Option<ConcurrenceVector> {
    entry.expected_concurrence.as_ref().map(|comps| {
        ConcurrenceVector::from_components(entry.state.dim_a(), entry.state.dim_b(), comps.clone())
    })
}

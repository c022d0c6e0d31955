//! The fundamental representation of A_{N-1}: Cartan generators H_i,
//! ladder operators E_{+-alpha} and the antisymmetric flip operators
//! F_alpha = E_alpha - E_{-alpha}.
//!
//! All matrices are built from exact integers and halves, so the
//! commutator diagnostics below come out exactly zero in f64.

use nalgebra::DMatrix;

use crate::error::Result;
use crate::linalg::max_abs_real;
use crate::root_system::{fundamental_weights, positive_roots, Root};

/// The generators of the fundamental representation for dimension N.
#[derive(Debug, Clone)]
pub struct LadderSet {
    pub dimension: usize,
    /// The positive roots in canonical order; `raising[k]` and
    /// `lowering[k]` belong to `roots[k]`.
    pub roots: Vec<Root>,
    /// Diagonal Cartan generators H_1 .. H_{N-1}.
    pub cartan: Vec<DMatrix<f64>>,
    /// E_alpha per positive root: a single unit entry above the diagonal.
    pub raising: Vec<DMatrix<f64>>,
    /// E_{-alpha} = transpose of E_alpha.
    pub lowering: Vec<DMatrix<f64>>,
}

/// F_alpha = E_alpha - E_{-alpha}, the high-rank analog of Wootters'
/// spin flip.
#[derive(Debug, Clone)]
pub struct FlipOperator {
    pub root_index: usize,
    pub matrix: DMatrix<f64>,
}

/// Builds the ladder set for dimension `n`.
///
/// The lowering chain fixes the placement: E_{-alpha_k} maps |k> to
/// |k+1>, and the composite root alpha_i+...+alpha_j has its unit entry
/// at (row i, column j+1), mapping |j+1> to |i>.
pub fn build_ladder_set(n: usize) -> Result<LadderSet> {
    let roots = positive_roots(n)?;
    let weights = fundamental_weights(n)?;

    let cartan: Vec<DMatrix<f64>> = (0..n - 1)
        .map(|i| {
            DMatrix::from_fn(n, n, |r, c| {
                if r == c {
                    weights[r].covariant[i].as_f64()
                } else {
                    0.0
                }
            })
        })
        .collect();

    let mut raising = Vec::with_capacity(roots.len());
    let mut lowering = Vec::with_capacity(roots.len());
    for root in &roots {
        let mut e = DMatrix::zeros(n, n);
        e[(root.start - 1, root.end)] = 1.0;
        lowering.push(e.transpose());
        raising.push(e);
    }

    Ok(LadderSet {
        dimension: n,
        roots,
        cartan,
        raising,
        lowering,
    })
}

/// The flip operators in canonical root order.
pub fn flip_operators(ls: &LadderSet) -> Vec<FlipOperator> {
    ls.raising
        .iter()
        .zip(&ls.lowering)
        .enumerate()
        .map(|(k, (e, f))| FlipOperator {
            root_index: k,
            matrix: e - f,
        })
        .collect()
}

/// Diagnostic report of the commutation relations.
#[derive(Debug, Clone)]
pub struct CommutatorReport {
    /// Largest absolute entry over all relation residuals.
    pub max_residual: f64,
    /// Relations whose residual exceeds 1e-12.
    pub violations: Vec<String>,
    /// Observed sign in [E_alpha, E_beta] = s E_{alpha+beta} for each
    /// pair of positive roots whose sum is again a root.
    pub composite_signs: Vec<(String, String, f64)>,
}

fn commutator(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a * b - b * a
}

/// Index of the positive root with the given contiguous run, if the
/// signed coefficient vector describes one (all entries 0/+1 contiguous,
/// or all 0/-1 contiguous).
fn signed_root_lookup(coeffs: &[i64], roots: &[Root]) -> Option<(f64, usize)> {
    for sign in [1i64, -1] {
        let idxs: Vec<usize> = coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, &c)| (c != 0).then_some(i))
            .collect();
        if idxs.is_empty() {
            return None;
        }
        if coeffs.iter().all(|&c| c == 0 || c == sign) {
            let start = idxs[0] + 1;
            let end = idxs[idxs.len() - 1] + 1;
            if idxs.len() == end - start + 1 {
                let k = roots
                    .iter()
                    .position(|r| r.start == start && r.end == end)?;
                return Some((sign as f64, k));
            }
        }
    }
    None
}

/// Checks every commutation relation of the Cartan-Weyl basis against
/// the constructed matrices and reports the worst residual.
///
/// The composite relation [E_alpha, E_beta] = E_{alpha+beta} is checked
/// up to sign; the observed signs are listed in the report.
pub fn verify_commutators(ls: &LadderSet) -> CommutatorReport {
    let n1 = ls.dimension - 1;
    let mut max_residual = 0.0f64;
    let mut violations = Vec::new();
    let mut composite_signs = Vec::new();

    let record = |label: String, residual: f64, violations: &mut Vec<String>| {
        if residual > 1e-12 {
            violations.push(format!("{label}: residual {residual:e}"));
        }
        residual
    };

    // [H_i, H_j] = 0
    for i in 0..n1 {
        for j in (i + 1)..n1 {
            let r = max_abs_real(&commutator(&ls.cartan[i], &ls.cartan[j]));
            max_residual = max_residual.max(record(format!("[H{},H{}]", i + 1, j + 1), r, &mut violations));
        }
    }

    // Signed roots: (+1, raising) and (-1, lowering) per positive root.
    let signed: Vec<(f64, usize, &DMatrix<f64>)> = ls
        .raising
        .iter()
        .enumerate()
        .map(|(k, e)| (1.0, k, e))
        .chain(ls.lowering.iter().enumerate().map(|(k, e)| (-1.0, k, e)))
        .collect();

    // [H_j, E_alpha] = (alpha)_j E_alpha
    for &(sign, k, e) in &signed {
        for j in 0..n1 {
            let cov = sign * ls.roots[k].covariant[j].as_f64();
            let r = max_abs_real(&(commutator(&ls.cartan[j], e) - e * cov));
            let label = format!("[H{},E({}{})]", j + 1, if sign > 0.0 { "+" } else { "-" }, ls.roots[k].label());
            max_residual = max_residual.max(record(label, r, &mut violations));
        }
    }

    // [E_alpha, E_{-alpha}] = 2 (alpha)^i H_i
    for (k, root) in ls.roots.iter().enumerate() {
        let mut h = DMatrix::zeros(ls.dimension, ls.dimension);
        for (i, &c) in root.contravariant().iter().enumerate() {
            h += &ls.cartan[i] * (2.0 * c as f64);
        }
        let r = max_abs_real(&(commutator(&ls.raising[k], &ls.lowering[k]) - h));
        max_residual =
            max_residual.max(record(format!("[E({0}),E(-{0})]", root.label()), r, &mut violations));
    }

    // [E_alpha, E_beta] = +- E_{alpha+beta} when alpha+beta is a root,
    // zero when it is not (alpha != -beta handled above).
    for &(sa, ka, ea) in &signed {
        for &(sb, kb, eb) in &signed {
            if ka == kb {
                continue; // same root or the +-alpha pair, both done
            }
            let sum: Vec<i64> = ls.roots[ka]
                .coeffs
                .iter()
                .zip(&ls.roots[kb].coeffs)
                .map(|(&a, &b)| sa as i64 * a + sb as i64 * b)
                .collect();
            let comm = commutator(ea, eb);
            match signed_root_lookup(&sum, &ls.roots) {
                Some((ssum, ksum)) => {
                    let target = if ssum > 0.0 {
                        &ls.raising[ksum]
                    } else {
                        &ls.lowering[ksum]
                    };
                    let rp = max_abs_real(&(&comm - target));
                    let rm = max_abs_real(&(&comm + target));
                    let (r, observed) = if rp <= rm { (rp, 1.0) } else { (rm, -1.0) };
                    let label = format!(
                        "[E({}{}),E({}{})]",
                        if sa > 0.0 { "+" } else { "-" },
                        ls.roots[ka].label(),
                        if sb > 0.0 { "+" } else { "-" },
                        ls.roots[kb].label()
                    );
                    if sa > 0.0 && sb > 0.0 {
                        composite_signs.push((
                            ls.roots[ka].label(),
                            ls.roots[kb].label(),
                            observed,
                        ));
                    }
                    max_residual = max_residual.max(record(label, r, &mut violations));
                }
                None => {
                    let r = max_abs_real(&comm);
                    let label = format!(
                        "[E({}{}),E({}{})] (non-root sum)",
                        if sa > 0.0 { "+" } else { "-" },
                        ls.roots[ka].label(),
                        if sb > 0.0 { "+" } else { "-" },
                        ls.roots[kb].label()
                    );
                    max_residual = max_residual.max(record(label, r, &mut violations));
                }
            }
        }
    }

    CommutatorReport {
        max_residual,
        violations,
        composite_signs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_cartan_matches_weight_list() {
        let ls = build_ladder_set(3).unwrap();
        let h1 = &ls.cartan[0];
        assert_eq!(h1[(0, 0)], 0.5);
        assert_eq!(h1[(1, 1)], -0.5);
        assert_eq!(h1[(2, 2)], 0.0);
    }

    #[test]
    fn n3_ladder_placement() {
        let ls = build_ladder_set(3).unwrap();
        // E_{a1}|2> = |1>
        assert_eq!(ls.raising[0][(0, 1)], 1.0);
        // E_{a1+a2}|3> = |1>  (composite root is index 2 in canonical order)
        assert_eq!(ls.raising[2][(0, 2)], 1.0);
        // single unit entry each
        for e in ls.raising.iter().chain(&ls.lowering) {
            assert_eq!(e.iter().filter(|&&x| x != 0.0).count(), 1);
            assert_eq!(e.iter().sum::<f64>(), 1.0);
        }
    }

    #[test]
    fn n2_su2_relations() {
        let ls = build_ladder_set(2).unwrap();
        let c = &ls.raising[0] * &ls.lowering[0] - &ls.lowering[0] * &ls.raising[0];
        let h2 = &ls.cartan[0] * 2.0;
        assert_eq!(c, h2);
    }

    #[test]
    fn commutators_exact_for_small_dims() {
        for n in 2..=8 {
            let ls = build_ladder_set(n).unwrap();
            let report = verify_commutators(&ls);
            assert_eq!(report.max_residual, 0.0, "N={}", n);
            assert!(report.violations.is_empty());
        }
    }

    #[test]
    fn perturbed_ladder_set_reports_violation() {
        let mut ls = build_ladder_set(3).unwrap();
        ls.raising[0][(0, 1)] = 2.0;
        let report = verify_commutators(&ls);
        assert!(report.max_residual > 1e-12);
        assert!(report
            .violations
            .iter()
            .any(|v| v.contains("[E(a1),E(-a1)]")));
    }

    #[test]
    fn flip_operators_antisymmetric() {
        for n in 2..=8 {
            let ls = build_ladder_set(n).unwrap();
            let flips = flip_operators(&ls);
            assert_eq!(flips.len(), n * (n - 1) / 2);
            for f in &flips {
                let sym = &f.matrix + f.matrix.transpose();
                assert_eq!(max_abs_real(&sym), 0.0);
            }
        }
    }

    #[test]
    fn flip_n2_is_sigma_plus_minus_sigma_minus() {
        let ls = build_ladder_set(2).unwrap();
        let f = &flip_operators(&ls)[0].matrix;
        assert_eq!(f[(0, 1)], 1.0);
        assert_eq!(f[(1, 0)], -1.0);
        assert_eq!(f[(0, 0)], 0.0);
        assert_eq!(f[(1, 1)], 0.0);
    }

    #[test]
    fn flip_n3_alpha1() {
        let ls = build_ladder_set(3).unwrap();
        let f = &flip_operators(&ls)[0].matrix;
        let mut expected = DMatrix::zeros(3, 3);
        expected[(0, 1)] = 1.0;
        expected[(1, 0)] = -1.0;
        assert_eq!(f, &expected);
    }

    #[test]
    fn raising_operators_square_to_zero_and_traceless() {
        for n in 2..=8 {
            let ls = build_ladder_set(n).unwrap();
            for e in &ls.raising {
                assert_eq!(e.trace(), 0.0);
                assert_eq!(max_abs_real(&(e * e)), 0.0);
            }
        }
    }
}

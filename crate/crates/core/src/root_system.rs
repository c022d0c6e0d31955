//! Root system of the A_{N-1} Lie algebra: simple roots, positive roots
//! and fundamental-representation weights, all in exact half-integer
//! arithmetic.
//!
//! Simple roots are normalized to unit length, so all covariant
//! components are multiples of 1/2 and can be stored exactly.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// Exact multiple of 1/2. The stored integer is twice the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Half(pub i64);

impl Half {
    pub const ZERO: Half = Half(0);

    /// The value n (stored as 2n halves).
    pub fn from_int(n: i64) -> Half {
        Half(2 * n)
    }

    pub fn as_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl Add for Half {
    type Output = Half;
    fn add(self, rhs: Half) -> Half {
        Half(self.0 + rhs.0)
    }
}

impl Sub for Half {
    type Output = Half;
    fn sub(self, rhs: Half) -> Half {
        Half(self.0 - rhs.0)
    }
}

impl Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A positive root of A_{N-1}, i.e. a contiguous sum
/// alpha_start + alpha_{start+1} + ... + alpha_end of simple roots
/// (1-based indices, start <= end).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// First simple-root index of the contiguous run (1-based).
    pub start: usize,
    /// Last simple-root index of the contiguous run (1-based).
    pub end: usize,
    /// Expansion coefficients over the simple roots: 1 on start..=end,
    /// 0 elsewhere. These are also the contravariant components.
    pub coeffs: Vec<i64>,
    /// Covariant components [.]_j, exact halves.
    pub covariant: Vec<Half>,
}

impl Root {
    /// Contravariant components (.)^i; for A_{N-1} positive roots these
    /// coincide with the simple-root expansion coefficients.
    pub fn contravariant(&self) -> &[i64] {
        &self.coeffs
    }

    /// True when this is a simple root.
    pub fn is_simple(&self) -> bool {
        self.start == self.end
    }

    /// Human-readable label such as `a1` or `a1+a2+a3`.
    pub fn label(&self) -> String {
        (self.start..=self.end)
            .map(|k| format!("a{k}"))
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// A weight of the fundamental representation, labelling a basis state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    /// Covariant components, exact halves.
    pub covariant: Vec<Half>,
}

fn check_dimension(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidDimension { min: 2, got: n })
    } else {
        Ok(())
    }
}

/// Covariant components of simple root alpha_k (1-based) in dimension `n`:
/// 1 at slot k, -1/2 at the neighbouring slots.
fn simple_covariant(n: usize, k: usize) -> Vec<Half> {
    let mut cov = vec![Half::ZERO; n - 1];
    cov[k - 1] = Half::from_int(1);
    if k >= 2 {
        cov[k - 2] = Half(-1);
    }
    if k < n - 1 {
        cov[k] = Half(-1);
    }
    cov
}

/// The N-1 simple roots of A_{N-1}, in index order.
pub fn simple_roots(n: usize) -> Result<Vec<Root>> {
    check_dimension(n)?;
    Ok((1..n)
        .map(|k| {
            let mut coeffs = vec![0i64; n - 1];
            coeffs[k - 1] = 1;
            Root {
                start: k,
                end: k,
                coeffs,
                covariant: simple_covariant(n, k),
            }
        })
        .collect())
}

/// All N(N-1)/2 positive roots in the canonical order: graded by run
/// length, then by start index. For N=3 this is (a1, a2, a1+a2), the
/// component order used throughout the concurrence vectors.
pub fn positive_roots(n: usize) -> Result<Vec<Root>> {
    check_dimension(n)?;
    let simple = simple_roots(n)?;
    let mut roots = Vec::with_capacity(n * (n - 1) / 2);
    for len in 1..n {
        for start in 1..=(n - len) {
            let end = start + len - 1;
            let mut coeffs = vec![0i64; n - 1];
            let mut covariant = vec![Half::ZERO; n - 1];
            for k in start..=end {
                coeffs[k - 1] = 1;
                for (c, s) in covariant.iter_mut().zip(&simple[k - 1].covariant) {
                    *c = *c + *s;
                }
            }
            roots.push(Root {
                start,
                end,
                coeffs,
                covariant,
            });
        }
    }
    Ok(roots)
}

/// The N weights of the fundamental representation, generated from the
/// highest weight [1/2, 0, ...] by successive subtraction of the simple
/// roots' covariant components.
pub fn fundamental_weights(n: usize) -> Result<Vec<Weight>> {
    check_dimension(n)?;
    let simple = simple_roots(n)?;
    let mut weights = Vec::with_capacity(n);
    let mut cur = vec![Half::ZERO; n - 1];
    cur[0] = Half(1);
    weights.push(Weight {
        covariant: cur.clone(),
    });
    for root in &simple {
        for (c, s) in cur.iter_mut().zip(&root.covariant) {
            *c = *c - *s;
        }
        weights.push(Weight {
            covariant: cur.clone(),
        });
    }
    Ok(weights)
}

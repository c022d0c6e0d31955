//! JSON file formats for pure states and density matrices.
//!
//! Pure state: `{ "dimA": 2, "dimB": 2, "amplitudes": [{"i":1,"j":1,"re":...,"im":...}, ...] }`
//! with 1-based basis indices.
//!
//! Density matrix: `{ "dim": 4, "entries": [{"row":1,"col":1,"re":...,"im":...}, ...] }`
//! listing the upper triangle (row <= col); the Hermitian completion is
//! implied. Optional `dimA`/`dimB` fields record the bipartite split;
//! without them a square split of `dim` is assumed.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::path::Path;

use crate::error::{Error, Result};
use crate::state_space::{DensityMatrix, PureState};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AmplitudeRecord {
    pub i: usize,
    pub j: usize,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PureStateFile {
    pub dim_a: usize,
    pub dim_b: usize,
    pub amplitudes: Vec<AmplitudeRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EntryRecord {
    pub row: usize,
    pub col: usize,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DensityMatrixFile {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_a: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_b: Option<usize>,
    pub entries: Vec<EntryRecord>,
}

/// Either kind of state document.
#[derive(Debug, Clone)]
pub enum StateDocument {
    Pure(PureStateFile),
    Density(DensityMatrixFile),
}

impl PureStateFile {
    pub fn from_state(ps: &PureState) -> PureStateFile {
        let mut amplitudes = Vec::new();
        for i in 0..ps.dim_a() {
            for j in 0..ps.dim_b() {
                let z = ps.coeffs()[(i, j)];
                if z != Complex64::new(0.0, 0.0) {
                    amplitudes.push(AmplitudeRecord {
                        i: i + 1,
                        j: j + 1,
                        re: z.re,
                        im: z.im,
                    });
                }
            }
        }
        PureStateFile {
            dim_a: ps.dim_a(),
            dim_b: ps.dim_b(),
            amplitudes,
        }
    }

    /// Builds the coefficient matrix; with `normalize` the amplitudes
    /// are rescaled, otherwise they must already be normalized.
    pub fn to_state(&self, normalize: bool) -> Result<PureState> {
        let mut coeffs = DMatrix::zeros(self.dim_a, self.dim_b);
        for a in &self.amplitudes {
            if a.i < 1 || a.i > self.dim_a || a.j < 1 || a.j > self.dim_b {
                return Err(Error::StateFile(format!(
                    "amplitude index ({}, {}) outside {}x{}",
                    a.i, a.j, self.dim_a, self.dim_b
                )));
            }
            coeffs[(a.i - 1, a.j - 1)] += Complex64::new(a.re, a.im);
        }
        if normalize {
            PureState::normalized(coeffs)
        } else {
            PureState::new(coeffs)
        }
    }
}

impl DensityMatrixFile {
    pub fn from_density(rho: &DensityMatrix) -> DensityMatrixFile {
        let d = rho.dim_a() * rho.dim_b();
        let mut entries = Vec::new();
        for row in 0..d {
            for col in row..d {
                let z = rho.matrix()[(row, col)];
                if z != Complex64::new(0.0, 0.0) {
                    entries.push(EntryRecord {
                        row: row + 1,
                        col: col + 1,
                        re: z.re,
                        im: z.im,
                    });
                }
            }
        }
        DensityMatrixFile {
            dim: d,
            dim_a: Some(rho.dim_a()),
            dim_b: Some(rho.dim_b()),
            entries,
        }
    }

    fn split(&self) -> Result<(usize, usize)> {
        match (self.dim_a, self.dim_b) {
            (Some(a), Some(b)) => {
                if a * b != self.dim {
                    return Err(Error::StateFile(format!(
                        "dimA * dimB = {} does not match dim = {}",
                        a * b,
                        self.dim
                    )));
                }
                Ok((a, b))
            }
            (None, None) => {
                let r = (self.dim as f64).sqrt().round() as usize;
                if r * r == self.dim {
                    Ok((r, r))
                } else {
                    Err(Error::StateFile(format!(
                        "dim = {} is not a perfect square; provide dimA and dimB",
                        self.dim
                    )))
                }
            }
            _ => Err(Error::StateFile(
                "provide both dimA and dimB, or neither".into(),
            )),
        }
    }

    pub fn to_density(&self) -> Result<DensityMatrix> {
        let (da, db) = self.split()?;
        let d = self.dim;
        let mut m = DMatrix::zeros(d, d);
        for e in &self.entries {
            if e.row < 1 || e.row > d || e.col < 1 || e.col > d || e.row > e.col {
                return Err(Error::StateFile(format!(
                    "bad upper-triangle entry ({}, {})",
                    e.row, e.col
                )));
            }
            let z = Complex64::new(e.re, e.im);
            m[(e.row - 1, e.col - 1)] += z;
            if e.row != e.col {
                m[(e.col - 1, e.row - 1)] += z.conj();
            }
        }
        DensityMatrix::new(da, db, m)
    }
}

fn parse_document(text: &str) -> Result<StateDocument> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::StateFile(format!("JSON parse: {e}")))?;
    if value.get("amplitudes").is_some() {
        let f: PureStateFile = serde_json::from_value(value)
            .map_err(|e| Error::StateFile(format!("pure-state schema: {e}")))?;
        Ok(StateDocument::Pure(f))
    } else if value.get("entries").is_some() {
        let f: DensityMatrixFile = serde_json::from_value(value)
            .map_err(|e| Error::StateFile(format!("density-matrix schema: {e}")))?;
        Ok(StateDocument::Density(f))
    } else {
        Err(Error::StateFile(
            "document has neither `amplitudes` nor `entries`".into(),
        ))
    }
}

/// Reads a state document (pure or density) from a file.
pub fn load_document(path: &Path) -> Result<StateDocument> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::StateFile(format!("{}: {e}", path.display())))?;
    parse_document(&text)
}

pub fn write_pure_state(path: &Path, ps: &PureState) -> Result<()> {
    let doc = PureStateFile::from_state(ps);
    let text = serde_json::to_string_pretty(&doc)
        .map_err(|e| Error::StateFile(format!("serialize: {e}")))?;
    std::fs::write(path, text).map_err(|e| Error::StateFile(format!("{}: {e}", path.display())))
}

pub fn write_density(path: &Path, rho: &DensityMatrix) -> Result<()> {
    let doc = DensityMatrixFile::from_density(rho);
    let text = serde_json::to_string_pretty(&doc)
        .map_err(|e| Error::StateFile(format!("serialize: {e}")))?;
    std::fs::write(path, text).map_err(|e| Error::StateFile(format!("{}: {e}", path.display())))
}

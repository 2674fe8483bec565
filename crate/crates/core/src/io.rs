//! JSON encoding of systems and solve reports.
//!
//! A system file looks like
//! `{"basis": "chebyshev", "m": 1, "n": 0, "coeffs": [[[1.0, 2.0]], [[0.5, -1.0]]]}`
//! where `coeffs[i][j]` is `c_ij`.

use std::fs;
use std::io::ErrorKind;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::basis::{Basis, BasisError, Bivariate, BivariateSystem};
use crate::linalg::Vec2;
use crate::solver::{SolveReport, COND_LABEL};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{}: no such file", .0.display())]
    NotFound(PathBuf),
    #[error("{}: {source}", path.display())]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed system file: {0}")]
    Malformed(#[source] serde_json::Error),
    #[error(transparent)]
    Basis(#[from] BasisError),
    #[error("coefficient grid has {actual} rows, expected {expected} (m = {m})")]
    RowCount { m: usize, expected: usize, actual: usize },
    #[error("coefficient row {row} has {actual} entries, expected {expected} (n = {n})")]
    RowLength {
        row: usize,
        n: usize,
        expected: usize,
        actual: usize,
    },
}

/// On-disk layout of a system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub basis: String,
    pub m: usize,
    pub n: usize,
    pub coeffs: Vec<Vec<[f64; 2]>>,
}

impl SystemFile {
    pub fn from_system(f: &BivariateSystem) -> Self {
        let (m, n) = f.degrees();
        Self {
            basis: f.basis().tag().to_string(),
            m,
            n,
            coeffs: f
                .coeffs()
                .chunks_exact(n + 1)
                .map(|row| row.iter().map(|c| c.to_array()).collect())
                .collect(),
        }
    }

    pub fn to_system(&self) -> Result<BivariateSystem, IoError> {
        let basis: Basis = self.basis.parse()?;
        if self.coeffs.len() != self.m + 1 {
            return Err(IoError::RowCount {
                m: self.m,
                expected: self.m + 1,
                actual: self.coeffs.len(),
            });
        }
        if let Some((row, r)) = self.coeffs.iter().enumerate().find(|(_, r)| r.len() != self.n + 1) {
            return Err(IoError::RowLength {
                row,
                n: self.n,
                expected: self.n + 1,
                actual: r.len(),
            });
        }
        let flat = self.coeffs.iter().flatten().map(|&c| Vec2::from(c)).collect();
        Ok(Bivariate::new(basis, self.m, self.n, flat)?)
    }
}

pub fn parse_system_str(text: &str) -> Result<BivariateSystem, IoError> {
    let file: SystemFile = serde_json::from_str(text).map_err(IoError::Malformed)?;
    file.to_system()
}

pub fn parse_system(path: &Path) -> Result<BivariateSystem, IoError> {
    parse_system_str(&read(path)?)
}

/// Pretty-printed JSON with a trailing newline.
pub fn system_to_string(f: &BivariateSystem) -> String {
    to_pretty(&SystemFile::from_system(f))
}

pub fn write_system(path: &Path, f: &BivariateSystem) -> Result<(), IoError> {
    write(path, &system_to_string(f))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroEntry {
    pub x: f64,
    pub y: f64,
    pub rho_star: f64,
    pub omega_star: f64,
    pub newton_iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatchEntry {
    pub center: [f64; 2],
    pub half_width: f64,
}

/// On-disk layout of a [`SolveReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub basis: String,
    pub zeros: Vec<ZeroEntry>,
    pub patches_examined: usize,
    pub smallest_width: f64,
    pub exclusion_passes: usize,
    pub kantorovich_passes: usize,
    pub skipped_subsumed: usize,
    pub unresolved: Vec<PatchEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cond_estimate: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cond_label: Option<String>,
}

impl ReportFile {
    pub fn new(basis: Basis, r: &SolveReport) -> Self {
        Self {
            basis: basis.tag().to_string(),
            zeros: r
                .zeros
                .iter()
                .map(|z| ZeroEntry {
                    x: z.location.x,
                    y: z.location.y,
                    rho_star: z.rho_star,
                    omega_star: z.omega_star,
                    newton_iterations: z.newton_iterations,
                })
                .collect(),
            patches_examined: r.patches_examined,
            smallest_width: r.smallest_width,
            exclusion_passes: r.exclusion_passes,
            kantorovich_passes: r.kantorovich_passes,
            skipped_subsumed: r.skipped_subsumed,
            unresolved: r
                .unresolved
                .iter()
                .map(|p| PatchEntry {
                    center: p.center().to_array(),
                    half_width: p.half_width(),
                })
                .collect(),
            cond_estimate: r.cond_estimate,
            cond_label: r.cond_estimate.map(|_| COND_LABEL.to_string()),
        }
    }
}

pub fn report_to_string(basis: Basis, r: &SolveReport) -> String {
    to_pretty(&ReportFile::new(basis, r))
}

pub fn write_report(path: &Path, basis: Basis, r: &SolveReport) -> Result<(), IoError> {
    write(path, &report_to_string(basis, r))
}

pub(crate) fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|e| match e.kind() {
        ErrorKind::NotFound => IoError::NotFound(path.to_path_buf()),
        _ => IoError::Read {
            path: path.to_path_buf(),
            source: e,
        },
    })
}

pub(crate) fn write(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|e| IoError::Write {
        path: path.to_path_buf(),
        source: e,
    })
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

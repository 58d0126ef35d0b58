use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};

/// Labelled integer matrix, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    entries: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn new(
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        entries: Vec<Vec<i64>>,
    ) -> Result<Self> {
        if entries.len() != row_labels.len() || entries.iter().any(|r| r.len() != col_labels.len())
        {
            return Err(Error::InvalidArgument(format!(
                "matrix entries do not match {} x {} labels",
                row_labels.len(),
                col_labels.len()
            )));
        }
        Ok(Self {
            row_labels,
            col_labels,
            entries,
        })
    }

    pub fn nrows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row][col]
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row]
    }

    pub fn column(&self, col: usize) -> Vec<i64> {
        self.entries.iter().map(|r| r[col]).collect()
    }

    /// `self * rhs`; row labels from `self`, column labels from `rhs`.
    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols() != rhs.nrows() {
            return Err(Error::Internal(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows(),
                self.ncols(),
                rhs.nrows(),
                rhs.ncols()
            )));
        }
        let entries = self
            .entries
            .iter()
            .map(|row| {
                (0..rhs.ncols())
                    .map(|j| row.iter().zip(&rhs.entries).map(|(a, r)| a * r[j]).sum())
                    .collect()
            })
            .collect();
        Ok(IntMatrix {
            row_labels: self.row_labels.clone(),
            col_labels: rhs.col_labels.clone(),
            entries,
        })
    }

    /// Aligned table with zero entries left blank.
    pub fn to_text(&self) -> String {
        let cell = |x: i64| if x == 0 { String::new() } else { x.to_string() };
        let label_w = self.row_labels.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.ncols())
            .map(|j| {
                self.entries
                    .iter()
                    .map(|r| cell(r[j]).len())
                    .chain(std::iter::once(self.col_labels[j].len()))
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut out = String::new();
        let _ = write!(out, "{:label_w$}", "");
        for (j, l) in self.col_labels.iter().enumerate() {
            let _ = write!(out, "  {:>w$}", l, w = widths[j]);
        }
        out.push('\n');
        for (i, row) in self.entries.iter().enumerate() {
            let _ = write!(out, "{:label_w$}", self.row_labels[i]);
            for (j, &x) in row.iter().enumerate() {
                let _ = write!(out, "  {:>w$}", cell(x), w = widths[j]);
            }
            out.push('\n');
        }
        out
    }

    /// CSV with a header row; the corner cell is empty.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push(',');
        out.push_str(&self.col_labels.join(","));
        out.push('\n');
        for (label, row) in self.row_labels.iter().zip(&self.entries) {
            out.push_str(label);
            for x in row {
                let _ = write!(out, ",{x}");
            }
            out.push('\n');
        }
        out
    }
}

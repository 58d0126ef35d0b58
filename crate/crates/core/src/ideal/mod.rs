//! The monomial maps sending a Plücker variable to the diagonal or
//! antidiagonal term of its minor, their degree-2 kernels, restriction to
//! the variables surviving on a Richardson variety, and the resulting
//! monomial-freeness classification.

mod kernel;
mod restrict;

pub use kernel::{
    degree2_kernel_generators, kernel_generators, kernel_hilbert_dim, multigraded_hilbert_dim,
    KernelBinomial,
};
pub use restrict::{
    classify_all, is_monomial_free, restrict, MonomialWitness, RestrictionReport, Verdict,
};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::order::ColumnSubset;
use crate::tableau::Tableau;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrderKind {
    /// `P_J -> x_{1,j_1} x_{2,j_2} ... x_{t,j_t}`
    Diagonal,
    /// `P_J -> x_{1,j_t} x_{2,j_{t-1}} ... x_{t,j_1}`
    Antidiagonal,
}

impl fmt::Display for TermOrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Diagonal => "diagonal",
            Self::Antidiagonal => "antidiagonal",
        })
    }
}

impl FromStr for TermOrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "diagonal" | "diag" => Ok(Self::Diagonal),
            "antidiagonal" | "antidiag" | "anti" => Ok(Self::Antidiagonal),
            _ => Err(Error::Parse(format!("unknown term order {s:?}"))),
        }
    }
}

/// Exponent vector on the `(n-1) x n` grid of variables `x_{i,j}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XExponent {
    n: usize,
    cells: Vec<u16>,
}

impl XExponent {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            cells: vec![0; n.saturating_sub(1) * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Exponent of `x_{row,col}`, both 1-based.
    pub fn get(&self, row: usize, col: usize) -> u16 {
        self.cells[cell_index(self.n, row, col)]
    }

    pub fn degree(&self) -> u32 {
        self.cells.iter().map(|&c| c as u32).sum()
    }

    /// Nonzero cells as `((row, col), exponent)`, row-major.
    pub fn support(&self) -> Vec<((usize, usize), u16)> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| ((i / self.n + 1, i % self.n + 1), e))
            .collect()
    }

    fn bump(&mut self, index: usize) {
        self.cells[index] += 1;
    }
}

impl fmt::Display for XExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support = self.support();
        if support.is_empty() {
            return f.write_str("1");
        }
        let terms: Vec<String> = support
            .iter()
            .map(|((i, j), e)| {
                if *e == 1 {
                    format!("x{i},{j}")
                } else {
                    format!("x{i},{j}^{e}")
                }
            })
            .collect();
        f.write_str(&terms.join("*"))
    }
}

impl fmt::Debug for XExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XExponent({self})")
    }
}

pub(crate) fn cell_index(n: usize, row: usize, col: usize) -> usize {
    (row - 1) * n + (col - 1)
}

/// Grid cells `(row, col)` of the initial term of `P_J`.
pub(crate) fn term_cells(bits: u32, order: TermOrderKind) -> Vec<(usize, usize)> {
    let elems = crate::order::bits_elements(bits);
    let t = elems.len();
    (1..=t)
        .map(|r| {
            let col = match order {
                TermOrderKind::Diagonal => elems[r - 1],
                TermOrderKind::Antidiagonal => elems[t - r],
            };
            (r, col as usize)
        })
        .collect()
}

/// `M_{i,j} = (i - 1)(n - j + 1)`, returned as `n - 1` rows of length `n`.
pub fn weight_matrix(n: usize) -> Result<Vec<Vec<i64>>> {
    if n < 2 {
        return Err(Error::Domain("weight matrix needs n >= 2".to_string()));
    }
    let n64 = n as i64;
    Ok((1..n as i64)
        .map(|i| (1..=n64).map(|j| (i - 1) * (n64 - j + 1)).collect())
        .collect())
}

pub fn initial_term(subset: &ColumnSubset, order: TermOrderKind) -> XExponent {
    let mut out = XExponent::zero(subset.n());
    for (r, c) in term_cells(subset.bits(), order) {
        out.bump(cell_index(subset.n(), r, c));
    }
    out
}

/// Weight of `P_J` induced by `M` through its diagonal initial term.
pub fn plucker_weight(subset: &ColumnSubset) -> i64 {
    let n = subset.n() as i64;
    term_cells(subset.bits(), TermOrderKind::Diagonal)
        .into_iter()
        .map(|(i, j)| (i as i64 - 1) * (n - j as i64 + 1))
        .sum()
}

/// The weight vector on all Plücker variables, canonical order.
pub fn weight_vector(n: usize) -> Vec<(ColumnSubset, i64)> {
    ColumnSubset::all(n)
        .into_iter()
        .map(|j| (j, plucker_weight(&j)))
        .collect()
}

/// Image of a monomial under the chosen monomial map.
pub fn phi_image(m: &Tableau, order: TermOrderKind) -> XExponent {
    let mut out = XExponent::zero(m.n());
    for col in m.columns() {
        for (r, c) in term_cells(col.bits(), order) {
            out.bump(cell_index(m.n(), r, c));
        }
    }
    out
}

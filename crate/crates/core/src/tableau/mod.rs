//! Tableaux as Plücker monomials, their row-sorted normal form, defining
//! chains and the standard monomial criterion for Richardson varieties.

mod chain;
mod ssyt;

pub use chain::{
    is_standard, max_defining_chain, max_truncation, min_defining_chain, min_extension,
    DefiningChain,
};
pub use ssyt::{count_standard, enumerate_ssyt};

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{check_same_n, Error, Result};
use crate::order::{gale_leq_bits, ColumnSubset};

/// A sequence of columns, read as the monomial `P_{I_1} ... P_{I_d}`.
///
/// Any column order is representable so that monomials can be written
/// down before they are normalised; [`Tableau::is_ssyt`] and
/// [`Tableau::has_tableau_shape`] report whether the columns actually
/// form a (semi-standard) Young tableau.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    n: usize,
    columns: Vec<ColumnSubset>,
}

impl Tableau {
    pub fn new(n: usize, columns: Vec<ColumnSubset>) -> Result<Self> {
        for c in &columns {
            check_same_n(n, c.n())?;
        }
        Ok(Self { n, columns })
    }

    pub(crate) fn new_unchecked(n: usize, columns: Vec<ColumnSubset>) -> Self {
        Self { n, columns }
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            columns: Vec::new(),
        }
    }

    /// Parse `"[125,246,35]"`. Columns of a tableau over `n >= 10` use
    /// `;` between columns and `,` inside them.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("tableau {s:?} must be bracketed")))?;
        if inner.trim().is_empty() {
            return Ok(Self::empty(n));
        }
        let sep = if n <= 9 { ',' } else { ';' };
        let columns = inner
            .split(sep)
            .map(|c| ColumnSubset::parse(n, c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, columns)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn columns(&self) -> &[ColumnSubset] {
        &self.columns
    }

    /// Number of columns, i.e. the degree of the monomial.
    pub fn degree(&self) -> usize {
        self.columns.len()
    }

    pub fn has_tableau_shape(&self) -> bool {
        self.columns.windows(2).all(|p| p[0].len() >= p[1].len())
    }

    /// Consecutive columns weakly increase in the Gale order.
    pub fn is_ssyt(&self) -> bool {
        self.columns
            .windows(2)
            .all(|p| gale_leq_bits(p[0].bits(), p[1].bits()))
    }

    /// Columns reordered by decreasing size, ties broken canonically.
    /// Two tableaux describe the same monomial iff their monomial forms agree.
    pub fn monomial_form(&self) -> Self {
        let mut columns = self.columns.clone();
        columns.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        Self { n: self.n, columns }
    }

    /// Top-aligned rows after sorting columns by decreasing size. Row `r`
    /// holds the `r`-th smallest entry of each column long enough.
    pub fn rows(&self) -> Vec<Vec<u8>> {
        let form = self.monomial_form();
        let height = form.columns.first().map_or(0, |c| c.len());
        let cols: Vec<Vec<u8>> = form.columns.iter().map(|c| c.elements()).collect();
        (0..height)
            .map(|r| cols.iter().filter_map(|c| c.get(r).copied()).collect())
            .collect()
    }

    /// Same multiset of entries in every row.
    pub fn is_row_wise_equal(&self, other: &Self) -> bool {
        let sorted = |t: &Self| -> Vec<Vec<u8>> {
            t.rows()
                .into_iter()
                .map(|mut r| {
                    r.sort_unstable();
                    r
                })
                .collect()
        };
        self.n == other.n && sorted(self) == sorted(other)
    }

    /// The unique semi-standard tableau row-wise equal to `self`: sort the
    /// columns by size, then sort every row.
    pub fn row_sort(&self) -> Result<Self> {
        let mut rows = self.rows();
        for r in &mut rows {
            r.sort_unstable();
        }
        let width = rows.first().map_or(0, |r| r.len());
        let mut columns = Vec::with_capacity(width);
        for c in 0..width {
            let entries: Vec<u8> = rows.iter().filter_map(|r| r.get(c).copied()).collect();
            if entries.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::Internal(format!(
                    "row sort of {self} broke column strictness"
                )));
            }
            columns.push(ColumnSubset::new(self.n, &entries)?);
        }
        let out = Self { n: self.n, columns };
        if !out.is_ssyt() {
            return Err(Error::Internal(format!(
                "row sort of {self} is not semi-standard"
            )));
        }
        Ok(out)
    }

    fn column_strings(&self) -> Vec<String> {
        self.columns.iter().map(|c| c.to_string()).collect()
    }
}

impl Ord for Tableau {
    /// Lexicographic on the serialized column strings.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.column_strings().cmp(&other.column_strings()))
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n <= 9 { "," } else { ";" };
        write!(f, "[{}]", self.column_strings().join(sep))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau{self}")
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

//! The 58 pairs in `S_4` known to give toric degenerations under the
//! antidiagonal term order, with a flag marking the pairs that a pipe-dream
//! description leaves undecided.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{TermOrderKind, Verdict};
use crate::order::Permutation;

const FIXTURE: &str = include_str!("../data/table1.csv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Table1Entry {
    pub v: Permutation,
    pub w: Permutation,
    pub starred: bool,
}

pub fn table1() -> Result<Vec<Table1Entry>> {
    FIXTURE
        .lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            let [v, w, starred] = fields.as_slice() else {
                return Err(Error::Parse(format!("bad fixture line {line:?}")));
            };
            Ok(Table1Entry {
                v: v.parse()?,
                w: w.parse()?,
                starred: starred
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad flag in {line:?}")))?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Table1Comparison {
    /// Fixture pairs classified monomial-free.
    pub covered: Vec<(Permutation, Permutation)>,
    /// Fixture pairs not classified monomial-free (or absent from the sweep).
    pub missing: Vec<(Permutation, Permutation)>,
    /// Monomial-free pairs that the fixture does not list.
    pub surplus: Vec<(Permutation, Permutation)>,
}

impl Table1Comparison {
    pub fn all_covered(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Diff the monomial-free verdicts of an antidiagonal `S_4` sweep against
/// the fixture.
pub fn compare_table1(verdicts: &[Verdict]) -> Result<Table1Comparison> {
    if verdicts
        .iter()
        .any(|v| v.order != TermOrderKind::Antidiagonal || v.v.n() != 4)
    {
        return Err(Error::InvalidArgument(
            "the fixture describes antidiagonal verdicts in S_4".to_string(),
        ));
    }
    let fixture: BTreeSet<(Permutation, Permutation)> =
        table1()?.into_iter().map(|e| (e.v, e.w)).collect();
    let free: BTreeSet<(Permutation, Permutation)> = verdicts
        .iter()
        .filter(|v| v.monomial_free)
        .map(|v| (v.v, v.w))
        .collect();
    Ok(Table1Comparison {
        covered: fixture.intersection(&free).copied().collect(),
        missing: fixture.difference(&free).copied().collect(),
        surplus: free.difference(&fixture).copied().collect(),
    })
}

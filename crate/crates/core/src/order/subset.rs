use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::permutation::HARD_MAX_N;
use crate::error::{Error, Result};

/// A nonempty proper subset of `[n]`, the index of a Plücker variable.
///
/// Ordered by size first and then lexicographically on the sorted
/// elements, which is the order used for columns of every emitted matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ColumnSubset {
    n: u8,
    bits: u32,
}

impl ColumnSubset {
    pub fn from_bits(n: usize, bits: u32) -> Result<Self> {
        if n == 0 || n > HARD_MAX_N {
            return Err(Error::InvalidArgument(format!("n = {n} out of range")));
        }
        let full = full_mask(n);
        if bits & !full != 0 {
            return Err(Error::InvalidArgument(format!(
                "subset bits {bits:#b} exceed [{n}]"
            )));
        }
        if bits == 0 || bits == full {
            return Err(Error::InvalidArgument(
                "column subsets must be nonempty and proper".to_string(),
            ));
        }
        Ok(Self { n: n as u8, bits })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u32) -> Self {
        debug_assert!(bits != 0 && bits != full_mask(n));
        Self { n: n as u8, bits }
    }

    pub fn new(n: usize, elements: &[u8]) -> Result<Self> {
        let mut bits = 0u32;
        for &x in elements {
            if x == 0 || x as usize > n {
                return Err(Error::InvalidArgument(format!("{x} is not in [{n}]")));
            }
            if bits & (1 << (x - 1)) != 0 {
                return Err(Error::InvalidArgument(format!("repeated element {x}")));
            }
            bits |= 1 << (x - 1);
        }
        Self::from_bits(n, bits)
    }

    /// Parse a digit string such as `"234"` (or `"2,3,10"` for larger `n`).
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('{').trim_end_matches('}');
        let elements: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::Parse(format!("bad subset element {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("bad subset digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(n, &elements)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: u8) -> bool {
        x >= 1 && self.bits & (1 << (x - 1)) != 0
    }

    /// Elements in increasing order.
    pub fn elements(&self) -> Vec<u8> {
        bits_elements(self.bits)
    }

    pub fn complement(&self) -> Self {
        Self::from_bits_unchecked(self.n(), full_mask(self.n()) & !self.bits)
    }

    /// All `2^n - 2` column subsets of `[n]` in canonical order.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out: Vec<Self> = (1..full_mask(n))
            .map(|bits| Self::from_bits_unchecked(n, bits))
            .collect();
        out.sort();
        out
    }
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub(crate) fn bits_elements(mut bits: u32) -> Vec<u8> {
    let mut out = Vec::with_capacity(bits.count_ones() as usize);
    while bits != 0 {
        out.push(bits.trailing_zeros() as u8 + 1);
        bits &= bits - 1;
    }
    out
}

/// Gale order on raw bitsets: `|a| >= |b|` and the `k`-th smallest element
/// of `a` is at most the `k`-th smallest of `b` for every `k <= |b|`.
pub(crate) fn gale_leq_bits(a: u32, b: u32) -> bool {
    if a.count_ones() < b.count_ones() {
        return false;
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        if a.trailing_zeros() > b.trailing_zeros() {
            return false;
        }
        a &= a - 1;
        b &= b - 1;
    }
    true
}

impl Ord for ColumnSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.elements().cmp(&other.elements()))
    }
}

impl PartialOrd for ColumnSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ColumnSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n <= 9 { "" } else { "," };
        for (i, x) in self.elements().iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ColumnSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl Serialize for ColumnSubset {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

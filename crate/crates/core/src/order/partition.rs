use super::permutation::Permutation;
use super::subset::{bits_elements, full_mask};
use crate::error::{Error, Result};

/// Sort direction for one block of an ordered set partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Up,
    Down,
}

/// An ordered partition `(P_1, ..., P_k)` of `[n]` into nonempty parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    n: usize,
    parts: Vec<u32>,
}

impl OrderedSetPartition {
    pub fn new(n: usize, parts: &[&[u8]]) -> Result<Self> {
        let mut bits = Vec::with_capacity(parts.len());
        for part in parts {
            let mut b = 0u32;
            for &x in *part {
                if x == 0 || x as usize > n || b & (1 << (x - 1)) != 0 {
                    return Err(Error::InvalidArgument(format!(
                        "bad part {part:?} of [{n}]"
                    )));
                }
                b |= 1 << (x - 1);
            }
            bits.push(b);
        }
        Self::from_bits(n, bits)
    }

    pub fn from_bits(n: usize, parts: Vec<u32>) -> Result<Self> {
        let mut seen = 0u32;
        for &p in &parts {
            if p == 0 {
                return Err(Error::InvalidArgument("empty part".to_string()));
            }
            if seen & p != 0 {
                return Err(Error::InvalidArgument("parts overlap".to_string()));
            }
            seen |= p;
        }
        if seen != full_mask(n) {
            return Err(Error::InvalidArgument(format!("parts do not cover [{n}]")));
        }
        Ok(Self { n, parts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Concatenate the parts, each sorted in its requested direction.
    pub fn to_permutation(&self, directions: &[Direction]) -> Result<Permutation> {
        if directions.len() != self.parts.len() {
            return Err(Error::InvalidArgument(format!(
                "{} directions for {} parts",
                directions.len(),
                self.parts.len()
            )));
        }
        let mut entries = Vec::with_capacity(self.n);
        for (&part, dir) in self.parts.iter().zip(directions) {
            let mut elems = bits_elements(part);
            if *dir == Direction::Down {
                elems.reverse();
            }
            entries.extend(elems);
        }
        Ok(Permutation::from_slice_unchecked(&entries))
    }
}

/// `(P_1^↑, ..., P_k^↑)` or with downward arrows, from raw part bitsets.
pub fn partition_perm(
    partition: &OrderedSetPartition,
    directions: &[Direction],
) -> Result<Permutation> {
    partition.to_permutation(directions)
}

/// `(A↑, rest↑)`: the smallest permutation whose first `|A|` entries are `A`.
pub(crate) fn up_then_rest(n: usize, first: u32) -> Permutation {
    let mut entries = bits_elements(first);
    entries.extend(bits_elements(full_mask(n) & !first));
    Permutation::from_slice_unchecked(&entries)
}

/// `(A↓, rest↓)`: the largest permutation whose first `|A|` entries are `A`.
pub(crate) fn down_then_rest(n: usize, first: u32) -> Permutation {
    let mut entries: Vec<u8> = bits_elements(first).into_iter().rev().collect();
    entries.extend(bits_elements(full_mask(n) & !first).into_iter().rev());
    Permutation::from_slice_unchecked(&entries)
}

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest `n` any value type in this crate can represent.
pub const HARD_MAX_N: usize = 16;

/// A permutation of `[n]` in one-line notation, values 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    entries: [u8; HARD_MAX_N],
}

impl Permutation {
    pub fn new(entries: &[u8]) -> Result<Self> {
        let n = entries.len();
        if n == 0 || n > HARD_MAX_N {
            return Err(Error::InvalidArgument(format!(
                "permutation length {n} outside 1..={HARD_MAX_N}"
            )));
        }
        let mut seen = 0u32;
        for &x in entries {
            if x == 0 || x as usize > n || seen & (1 << (x - 1)) != 0 {
                return Err(Error::InvalidArgument(format!(
                    "{entries:?} is not a permutation of 1..={n}"
                )));
            }
            seen |= 1 << (x - 1);
        }
        Ok(Self::from_slice_unchecked(entries))
    }

    pub(crate) fn from_slice_unchecked(entries: &[u8]) -> Self {
        let mut buf = [0u8; HARD_MAX_N];
        buf[..entries.len()].copy_from_slice(entries);
        Self {
            n: entries.len() as u8,
            entries: buf,
        }
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=HARD_MAX_N).contains(&n));
        let v: Vec<u8> = (1..=n as u8).collect();
        Self::from_slice_unchecked(&v)
    }

    /// The longest element `w0 = (n, n-1, ..., 1)`.
    pub fn longest(n: usize) -> Self {
        assert!((1..=HARD_MAX_N).contains(&n));
        let v: Vec<u8> = (1..=n as u8).rev().collect();
        Self::from_slice_unchecked(&v)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries[..self.n as usize]
    }

    /// Entry at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> u8 {
        self.entries()[pos - 1]
    }

    /// 1-based position of `value`.
    pub fn position_of(&self, value: u8) -> usize {
        self.entries()
            .iter()
            .position(|&x| x == value)
            .map(|p| p + 1)
            .expect("value out of range")
    }

    /// Bitset of `{w_1, ..., w_k}`.
    pub fn prefix_bits(&self, k: usize) -> u32 {
        self.entries()[..k]
            .iter()
            .fold(0u32, |acc, &x| acc | 1 << (x - 1))
    }

    pub fn is_identity(&self) -> bool {
        self.entries()
            .iter()
            .enumerate()
            .all(|(i, &x)| x as usize == i + 1)
    }

    /// Number of pairs `i < j` with `w(i) > w(j)`.
    pub fn inversions(&self) -> usize {
        let e = self.entries();
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] > e[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Delete the entry `n` and keep the relative order of the rest.
    pub fn induced(&self) -> Result<Self> {
        if self.n < 2 {
            return Err(Error::Domain(
                "induced permutation needs n >= 2".to_string(),
            ));
        }
        let v: Vec<u8> = self
            .entries()
            .iter()
            .copied()
            .filter(|&x| x != self.n)
            .collect();
        Ok(Self::from_slice_unchecked(&v))
    }

    /// Insert the value `n + 1` at 1-based position `pos` (1..=n+1).
    pub fn insert_max(&self, pos: usize) -> Self {
        let mut v = self.entries().to_vec();
        v.insert(pos - 1, self.n + 1);
        Self::from_slice_unchecked(&v)
    }

    /// `w * w0`, i.e. the one-line notation read backwards.
    pub fn reversed(&self) -> Self {
        let v: Vec<u8> = self.entries().iter().rev().copied().collect();
        Self::from_slice_unchecked(&v)
    }

    /// Swap the entries at 1-based positions `a` and `b`.
    pub fn swap_positions(&self, a: usize, b: usize) -> Self {
        let mut out = *self;
        out.entries.swap(a - 1, b - 1);
        out
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some(Self::identity(n)),
        }
    }

    fn next_lex(&self) -> Option<Self> {
        let mut out = *self;
        let e = &mut out.entries[..self.n as usize];
        let i = (0..e.len().saturating_sub(1))
            .rev()
            .find(|&i| e[i] < e[i + 1])?;
        let j = (i + 1..e.len()).rev().find(|&j| e[j] > e[i]).unwrap();
        e.swap(i, j);
        e[i + 1..].reverse();
        Some(out)
    }
}

/// Lexicographic iterator over a symmetric group.
pub struct AllPermutations {
    next: Option<Permutation>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next?;
        self.next = current.next_lex();
        Some(current)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n <= 9 { "" } else { "," };
        for (i, x) in self.entries().iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `2314`, `2,3,1,4` and `(2,3,1,4)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let entries: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Self::new(&entries).map_err(|e| Error::Parse(format!("{s:?}: {e}")))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

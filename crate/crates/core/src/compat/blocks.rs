use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::in_tn_unchecked;
use crate::error::{check_same_n, Error, Result};
use crate::order::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Provenance {
    Creation,
    Persistence,
    Expansion,
}

/// A window `[start, end]` (1-based, inclusive) of positions shared by `v`
/// and `w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Block {
    pub start: usize,
    pub end: usize,
    pub provenance: Provenance,
}

impl Block {
    pub fn size(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.start <= pos && pos <= self.end
    }

    /// Entries of `u` inside the window.
    pub fn entries<'a>(&self, u: &'a Permutation) -> &'a [u8] {
        &u.entries()[self.start - 1..self.end]
    }

    pub fn crosses(&self, other: &Block) -> bool {
        (self.start < other.start && other.start <= self.end && self.end < other.end)
            || (other.start < self.start && self.start <= other.end && other.end < self.end)
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.start, self.end)
    }
}

thread_local! {
    static BLOCK_CACHE: RefCell<HashMap<(Permutation, Permutation), Vec<Block>>> =
        RefCell::new(HashMap::new());
}

/// All blocks of a pair in `T_n`, sorted by `(start, end)`.
///
/// Persistence carries a block of the induced pair over only when deleting
/// `n` shifts the window identically in `v` and `w`, i.e. the window lies
/// entirely before both positions of `n` or entirely after both.
pub fn blocks(v: &Permutation, w: &Permutation) -> Result<Vec<Block>> {
    check_same_n(v.n(), w.n())?;
    if !in_tn_unchecked(v, w) {
        return Err(Error::Precondition(format!(
            "blocks are defined on T_n only; ({v}, {w}) is not in T_{}",
            v.n()
        )));
    }
    Ok(blocks_unchecked(v, w))
}

fn blocks_unchecked(v: &Permutation, w: &Permutation) -> Vec<Block> {
    let n = v.n();
    if n == 1 {
        return vec![Block {
            start: 1,
            end: 1,
            provenance: Provenance::Creation,
        }];
    }
    let key = (*v, *w);
    if let Some(hit) = BLOCK_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let d = v.position_of(n as u8);
    let e = w.position_of(n as u8);
    let mut out = Vec::new();
    if d == e {
        out.push(Block {
            start: d,
            end: d,
            provenance: Provenance::Creation,
        });
    }
    let inner = blocks_unchecked(&v.induced().unwrap(), &w.induced().unwrap());
    let (lo, hi) = (d.min(e), d.max(e));
    for b in &inner {
        if b.end < lo {
            out.push(Block {
                provenance: Provenance::Persistence,
                ..*b
            });
        } else if b.start >= hi {
            out.push(Block {
                start: b.start + 1,
                end: b.end + 1,
                provenance: Provenance::Persistence,
            });
        }
        let (start, end) = (b.start, b.end + 1);
        let holds_n = (start..=end).contains(&d) && (start..=end).contains(&e);
        if holds_n && start < d && e < end {
            out.push(Block {
                start,
                end,
                provenance: Provenance::Expansion,
            });
        }
    }
    out.sort_by_key(|b| (b.start, b.end));
    out.dedup_by_key(|b| (b.start, b.end));
    BLOCK_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// The smallest block containing the positions of `n` in both `v` and `w`.
pub fn maximum_block(v: &Permutation, w: &Permutation) -> Result<Block> {
    let all = blocks(v, w)?;
    let n = v.n() as u8;
    let (d, e) = (v.position_of(n), w.position_of(n));
    all.into_iter()
        .filter(|b| b.contains(d) && b.contains(e))
        .min_by_key(|b| b.size())
        .ok_or_else(|| Error::Internal(format!("no block of ({v}, {w}) contains n")))
}

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::Tableau;
use crate::error::{check_same_n, Error, Result};
use crate::order::{
    bits_elements, bruhat_leq_unchecked, full_mask, require_bruhat, ColumnSubset, Permutation,
};

/// A Bruhat-increasing sequence of permutations, one per column, where
/// the first `|I_k|` entries of the `k`-th permutation are exactly `I_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefiningChain {
    pub tableau: Tableau,
    pub perms: Vec<Permutation>,
}

impl DefiningChain {
    pub fn is_valid(&self) -> bool {
        self.perms.len() == self.tableau.degree()
            && self
                .perms
                .iter()
                .zip(self.tableau.columns())
                .all(|(u, c)| u.n() == c.n() && u.prefix_bits(c.len()) == c.bits())
            && self
                .perms
                .windows(2)
                .all(|p| bruhat_leq_unchecked(&p[0], &p[1]))
    }
}

impl fmt::Display for DefiningChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.tableau.n() <= 9 { "," } else { ";" };
        let parts: Vec<String> = self.perms.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(sep))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Extremum {
    MinAbove,
    MaxBelow,
}

type CacheKey = (Permutation, u32, Extremum);

thread_local! {
    static EXTREMUM_CACHE: RefCell<HashMap<CacheKey, Result<Permutation>>> =
        RefCell::new(HashMap::new());
}

/// Every arrangement of `elements`, lexicographic.
fn arrangements(elements: &[u8]) -> Vec<Vec<u8>> {
    if elements.is_empty() {
        return vec![Vec::new()];
    }
    Permutation::all(elements.len())
        .map(|p| {
            p.entries()
                .iter()
                .map(|&i| elements[i as usize - 1])
                .collect()
        })
        .collect()
}

/// All permutations of `[n]` whose first `|prefix|` entries form `prefix`.
fn with_prefix_set(n: usize, prefix: u32) -> Vec<Permutation> {
    let heads = arrangements(&bits_elements(prefix));
    let tails = arrangements(&bits_elements(full_mask(n) & !prefix));
    let mut out = Vec::with_capacity(heads.len() * tails.len());
    for h in &heads {
        for t in &tails {
            let mut e = h.clone();
            e.extend_from_slice(t);
            out.push(Permutation::from_slice_unchecked(&e));
        }
    }
    out
}

fn search_extremum(u: &Permutation, subset: &ColumnSubset, kind: Extremum) -> Result<Permutation> {
    let candidates: Vec<Permutation> = with_prefix_set(u.n(), subset.bits())
        .into_iter()
        .filter(|z| match kind {
            Extremum::MinAbove => bruhat_leq_unchecked(u, z),
            Extremum::MaxBelow => bruhat_leq_unchecked(z, u),
        })
        .collect();
    let dominated = |z: &Permutation, other: &Permutation| match kind {
        Extremum::MinAbove => bruhat_leq_unchecked(other, z),
        Extremum::MaxBelow => bruhat_leq_unchecked(z, other),
    };
    let extremal: Vec<Permutation> = candidates
        .iter()
        .filter(|z| !candidates.iter().any(|o| o != *z && dominated(z, o)))
        .copied()
        .collect();
    match extremal.as_slice() {
        [] => Err(Error::NoExtension {
            u: u.to_string(),
            subset: subset.to_string(),
        }),
        [only] => Ok(*only),
        _ => Err(Error::AmbiguousExtension {
            u: u.to_string(),
            subset: subset.to_string(),
        }),
    }
}

fn cached_extremum(u: &Permutation, subset: &ColumnSubset, kind: Extremum) -> Result<Permutation> {
    check_same_n(u.n(), subset.n())?;
    let key = (*u, subset.bits(), kind);
    if let Some(hit) = EXTREMUM_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let result = search_extremum(u, subset, kind);
    EXTREMUM_CACHE.with(|c| c.borrow_mut().insert(key, result.clone()));
    result
}

/// The Bruhat-least `z >= u` whose first `|subset|` entries are `subset`.
///
/// Found by exhaustive search over the permutations with that prefix set;
/// results are memoized per thread.
pub fn min_extension(u: &Permutation, subset: &ColumnSubset) -> Result<Permutation> {
    cached_extremum(u, subset, Extremum::MinAbove)
}

/// The Bruhat-greatest `z <= u` whose first `|subset|` entries are `subset`.
pub fn max_truncation(u: &Permutation, subset: &ColumnSubset) -> Result<Permutation> {
    cached_extremum(u, subset, Extremum::MaxBelow)
}

fn require_ssyt(t: &Tableau) -> Result<()> {
    if t.is_ssyt() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{t} is not semi-standard")))
    }
}

/// Built left to right, starting from `(I_1↑, ↑)`.
pub fn min_defining_chain(t: &Tableau) -> Result<DefiningChain> {
    require_ssyt(t)?;
    let mut perms = Vec::with_capacity(t.degree());
    let mut prev = Permutation::identity(t.n());
    for col in t.columns() {
        prev = min_extension(&prev, col)?;
        perms.push(prev);
    }
    Ok(DefiningChain {
        tableau: t.clone(),
        perms,
    })
}

/// Built right to left, starting from `(I_d↓, ↓)`.
pub fn max_defining_chain(t: &Tableau) -> Result<DefiningChain> {
    require_ssyt(t)?;
    let mut perms = Vec::with_capacity(t.degree());
    let mut next = Permutation::longest(t.n());
    for col in t.columns().iter().rev() {
        next = max_truncation(&next, col)?;
        perms.push(next);
    }
    perms.reverse();
    Ok(DefiningChain {
        tableau: t.clone(),
        perms,
    })
}

/// Standard for `X_w^v`: the minimum chain ends below `w` and the maximum
/// chain starts above `v`.
pub fn is_standard(t: &Tableau, v: &Permutation, w: &Permutation) -> Result<bool> {
    check_same_n(t.n(), v.n())?;
    require_bruhat(v, w)?;
    let lower = min_defining_chain(t)?;
    let upper = max_defining_chain(t)?;
    Ok(match (lower.perms.last(), upper.perms.first()) {
        (Some(last), Some(first)) => {
            bruhat_leq_unchecked(last, w) && bruhat_leq_unchecked(v, first)
        }
        _ => true,
    })
}

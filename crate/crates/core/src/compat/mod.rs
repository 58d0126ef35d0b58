//! Compatible pairs, the recursive family `T_n`, block structure and the
//! pattern-avoidance descriptions of its Schubert and opposite Schubert
//! members.

mod blocks;
mod pattern;

pub use blocks::{blocks, maximum_block, Block, Provenance};
pub use pattern::{contains_pattern, is_213_avoiding, is_312_avoiding};

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::{check_same_n, Error, Result};
use crate::order::{bruhat_leq_unchecked, Permutation};

/// Positions (1-based) of `n` and `n - 1` in `v` and `w`:
/// `(t, t', s, s')` with `v_t = w_t' = n` and `v_s = w_s' = n - 1`.
fn top_positions(v: &Permutation, w: &Permutation) -> (usize, usize, usize, usize) {
    let n = v.n() as u8;
    (
        v.position_of(n),
        w.position_of(n),
        v.position_of(n - 1),
        w.position_of(n - 1),
    )
}

/// The compatibility condition on where `n` and `n - 1` sit in `v` and `w`.
pub fn is_compatible(v: &Permutation, w: &Permutation) -> Result<bool> {
    check_same_n(v.n(), w.n())?;
    Ok(is_compatible_unchecked(v, w))
}

fn is_compatible_unchecked(v: &Permutation, w: &Permutation) -> bool {
    if v.n() == 1 {
        return true;
    }
    let (t, t2, s, s2) = top_positions(v, w);
    if t == t2 {
        return true;
    }
    if t2 > t || s2 > t || t2 > s {
        return false;
    }
    let w_falls = (t2..t).all(|i| w.at(i) > w.at(i + 1));
    let v_rises = (t2..t).all(|i| v.at(i) < v.at(i + 1));
    w_falls && v_rises
}

thread_local! {
    static TN_CACHE: RefCell<HashMap<(Permutation, Permutation), bool>> =
        RefCell::new(HashMap::new());
}

/// Membership in `T_n`: compatible at every level of the recursion that
/// deletes the largest entry.
pub fn in_tn(v: &Permutation, w: &Permutation) -> Result<bool> {
    check_same_n(v.n(), w.n())?;
    Ok(in_tn_unchecked(v, w))
}

pub(crate) fn in_tn_unchecked(v: &Permutation, w: &Permutation) -> bool {
    if v.n() == 1 {
        return true;
    }
    let key = (*v, *w);
    if let Some(hit) = TN_CACHE.with(|c| c.borrow().get(&key).copied()) {
        return hit;
    }
    let result = is_compatible_unchecked(v, w)
        && in_tn_unchecked(&v.induced().unwrap(), &w.induced().unwrap());
    TN_CACHE.with(|c| c.borrow_mut().insert(key, result));
    result
}

/// All compatible lifts to `S_n` of a pair in `T_{n-1}`, lexicographic.
pub fn extensions_in_tn(
    v: &Permutation,
    w: &Permutation,
) -> Result<Vec<(Permutation, Permutation)>> {
    check_same_n(v.n(), w.n())?;
    if !in_tn_unchecked(v, w) {
        return Err(Error::Precondition(format!(
            "({v}, {w}) is not in T_{}",
            v.n()
        )));
    }
    let m = v.n() + 1;
    let mut out = Vec::new();
    for pv in 1..=m {
        let lv = v.insert_max(pv);
        for pw in 1..=m {
            let lw = w.insert_max(pw);
            if is_compatible_unchecked(&lv, &lw) {
                out.push((lv, lw));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// `T_n`, grown level by level from `T_1 = {(id, id)}`, lexicographic.
pub fn tn_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    assert!(n >= 1);
    let mut level = vec![(Permutation::identity(1), Permutation::identity(1))];
    for _ in 1..n {
        let mut next = Vec::new();
        for (v, w) in &level {
            next.extend(extensions_in_tn(v, w).expect("pair taken from T_n"));
        }
        next.sort();
        level = next;
    }
    level
}

fn require_tn(v: &Permutation, w: &Permutation) -> Result<()> {
    if in_tn(v, w)? {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "({v}, {w}) is not in T_{}",
            v.n()
        )))
    }
}

/// Positions `(d, e)` with `v_d = w_e = n`, requiring `e < d`.
fn lift_positions(v: &Permutation, w: &Permutation) -> Result<(usize, usize)> {
    require_tn(v, w)?;
    let n = v.n() as u8;
    let (d, e) = (v.position_of(n), w.position_of(n));
    if e >= d {
        return Err(Error::Precondition(format!(
            "n sits at position {d} of v and {e} of w; need e < d"
        )));
    }
    Ok((d, e))
}

/// `v'`: swap `v_{d-1}` and `v_d`, moving `n` one step left in `v`.
pub fn raise_v(v: &Permutation, w: &Permutation) -> Result<Permutation> {
    let (d, _) = lift_positions(v, w)?;
    Ok(v.swap_positions(d - 1, d))
}

/// `w'`: swap `w_e` and `w_{e+1}`, moving `n` one step right in `w`.
pub fn lower_w(v: &Permutation, w: &Permutation) -> Result<Permutation> {
    let (_, e) = lift_positions(v, w)?;
    Ok(w.swap_positions(e, e + 1))
}

/// Members of `T_n` with `v <= w`, i.e. with a nonempty Richardson variety.
pub fn tn_bruhat_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    tn_pairs(n)
        .into_iter()
        .filter(|(v, w)| bruhat_leq_unchecked(v, w))
        .collect()
}

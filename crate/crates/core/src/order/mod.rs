//! Permutations, column subsets and the partial orders between them.
//!
//! Subsets carry the Gale order, permutations the Bruhat order, and a
//! subset of size `k` is compared with a permutation through the
//! permutation's first `k` entries.

mod partition;
mod permutation;
mod subset;

pub(crate) use partition::{down_then_rest, up_then_rest};
pub use partition::{partition_perm, Direction, OrderedSetPartition};
pub use permutation::{AllPermutations, Permutation, HARD_MAX_N};
pub use subset::ColumnSubset;
pub(crate) use subset::{bits_elements, full_mask, gale_leq_bits};

use crate::error::{check_same_n, Error, Result};

pub fn gale_leq(a: &ColumnSubset, b: &ColumnSubset) -> Result<bool> {
    check_same_n(a.n(), b.n())?;
    Ok(gale_leq_bits(a.bits(), b.bits()))
}

pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    check_same_n(v.n(), w.n())?;
    Ok(bruhat_leq_unchecked(v, w))
}

pub(crate) fn bruhat_leq_unchecked(v: &Permutation, w: &Permutation) -> bool {
    let (ve, we) = (v.entries(), w.entries());
    let (mut pv, mut pw) = (0u32, 0u32);
    // the size-n prefixes are both [n]
    for k in 0..ve.len().saturating_sub(1) {
        pv |= 1 << (ve[k] - 1);
        pw |= 1 << (we[k] - 1);
        if !gale_leq_bits(pv, pw) {
            return false;
        }
    }
    true
}

/// `I <= w`: `I` against the first `|I|` entries of `w`.
pub fn subset_leq_perm(subset: &ColumnSubset, w: &Permutation) -> Result<bool> {
    check_same_n(subset.n(), w.n())?;
    Ok(gale_leq_bits(subset.bits(), w.prefix_bits(subset.len())))
}

/// `v <= I`: the first `|I|` entries of `v` against `I`.
pub fn perm_leq_subset(v: &Permutation, subset: &ColumnSubset) -> Result<bool> {
    check_same_n(subset.n(), v.n())?;
    Ok(gale_leq_bits(v.prefix_bits(subset.len()), subset.bits()))
}

/// `I <= w` decided purely in Bruhat order: `(I↑, I^c↑) <= w`.
pub fn subset_leq_perm_via_bruhat(subset: &ColumnSubset, w: &Permutation) -> Result<bool> {
    check_same_n(subset.n(), w.n())?;
    let lifted = up_then_rest(subset.n(), subset.bits());
    Ok(bruhat_leq_unchecked(&lifted, w))
}

/// `v <= I` decided purely in Bruhat order: `v <= (I↓, I^c↓)`.
pub fn perm_leq_subset_via_bruhat(v: &Permutation, subset: &ColumnSubset) -> Result<bool> {
    check_same_n(subset.n(), v.n())?;
    let lifted = down_then_rest(subset.n(), subset.bits());
    Ok(bruhat_leq_unchecked(v, &lifted))
}

pub fn inversion_number(w: &Permutation) -> usize {
    w.inversions()
}

pub fn induced(w: &Permutation) -> Result<Permutation> {
    w.induced()
}

/// `dim X_w^v = N(w) - N(v)`.
pub fn richardson_dimension(v: &Permutation, w: &Permutation) -> Result<usize> {
    require_bruhat(v, w)?;
    Ok(w.inversions() - v.inversions())
}

pub(crate) fn require_bruhat(v: &Permutation, w: &Permutation) -> Result<()> {
    if bruhat_leq(v, w)? {
        Ok(())
    } else {
        Err(Error::EmptyRichardson {
            v: v.to_string(),
            w: w.to_string(),
        })
    }
}

/// Membership mask over raw subset bits: entry `bits` is true iff
/// `v <= J <= w` for the subset `J` with those bits.
pub(crate) fn surviving_mask(v: &Permutation, w: &Permutation) -> Vec<bool> {
    let n = v.n();
    let mut mask = vec![false; 1 << n];
    let vp: Vec<u32> = (0..=n).map(|k| v.prefix_bits(k)).collect();
    let wp: Vec<u32> = (0..=n).map(|k| w.prefix_bits(k)).collect();
    for bits in 1..full_mask(n) {
        let k = bits.count_ones() as usize;
        mask[bits as usize] = gale_leq_bits(vp[k], bits) && gale_leq_bits(bits, wp[k]);
    }
    mask
}

/// `T_w^v`: the column subsets `J` with `v <= J <= w`, canonically ordered.
pub fn enumerate_t(v: &Permutation, w: &Permutation) -> Result<Vec<ColumnSubset>> {
    require_bruhat(v, w)?;
    let mask = surviving_mask(v, w);
    Ok(ColumnSubset::all(v.n())
        .into_iter()
        .filter(|j| mask[j.bits() as usize])
        .collect())
}

/// `S_w^v`: the column subsets that vanish on `X_w^v`.
pub fn enumerate_s(v: &Permutation, w: &Permutation) -> Result<Vec<ColumnSubset>> {
    require_bruhat(v, w)?;
    let mask = surviving_mask(v, w);
    Ok(ColumnSubset::all(v.n())
        .into_iter()
        .filter(|j| !mask[j.bits() as usize])
        .collect())
}

/// All pairs `v <= w` in `S_n`, lexicographic in `(v, w)`.
pub fn bruhat_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let all: Vec<Permutation> = Permutation::all(n).collect();
    let mut out = Vec::new();
    for v in &all {
        for w in &all {
            if bruhat_leq_unchecked(v, w) {
                out.push((*v, *w));
            }
        }
    }
    out
}

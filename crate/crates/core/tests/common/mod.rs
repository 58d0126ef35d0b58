//! Brute-force reference implementations, written from the definitions and
//! sharing no code with the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use richardson_core::{ColumnSubset, Permutation};

pub type Perm = Vec<u8>;
pub type Subset = Vec<u8>;

pub fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

pub fn to_perm(p: &[u8]) -> Permutation {
    Permutation::new(p).unwrap()
}

pub fn to_subset(n: usize, s: &[u8]) -> ColumnSubset {
    ColumnSubset::new(n, s).unwrap()
}

pub fn perms(n: usize) -> Vec<Perm> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n as u8);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// Nonempty proper subsets of `[n]`, sorted ascending inside.
pub fn subsets(n: usize) -> Vec<Subset> {
    (1u32..(1 << n) - 1)
        .map(|m| (1..=n as u8).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

/// Rank-matrix criterion: `#{a <= i : v(a) >= k} <= #{a <= i : w(a) >= k}`.
pub fn bruhat(v: &[u8], w: &[u8]) -> bool {
    let n = v.len() as u8;
    (1..=v.len()).all(|i| {
        (1..=n).all(|k| {
            v[..i].iter().filter(|&&x| x >= k).count() <= w[..i].iter().filter(|&&x| x >= k).count()
        })
    })
}

/// `a <= b` with `a` at least as long and entrywise below.
pub fn gale(a: &[u8], b: &[u8]) -> bool {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort();
    b.sort();
    a.len() >= b.len() && b.iter().zip(&a).all(|(y, x)| x <= y)
}

pub fn subset_below_perm(j: &[u8], w: &[u8]) -> bool {
    gale(j, &w[..j.len()])
}

pub fn perm_below_subset(v: &[u8], j: &[u8]) -> bool {
    gale(&v[..j.len()], j)
}

pub fn t_set(v: &[u8], w: &[u8]) -> Vec<Subset> {
    subsets(v.len())
        .into_iter()
        .filter(|j| perm_below_subset(v, j) && subset_below_perm(j, w))
        .collect()
}

pub fn delete_max(u: &[u8]) -> Perm {
    let n = u.len() as u8;
    u.iter().copied().filter(|&x| x != n).collect()
}

pub fn compatible(v: &[u8], w: &[u8]) -> bool {
    let n = v.len() as u8;
    if n <= 1 {
        return true;
    }
    let pos = |u: &[u8], x: u8| u.iter().position(|&y| y == x).unwrap() + 1;
    let (t, tp) = (pos(v, n), pos(w, n));
    let (s, sp) = (pos(v, n - 1), pos(w, n - 1));
    if t == tp {
        return true;
    }
    tp < t
        && sp <= t
        && tp <= s
        && (tp..t).all(|k| w[k - 1] > w[k])
        && (tp..t).all(|k| v[k - 1] < v[k])
}

pub fn in_family(v: &[u8], w: &[u8]) -> bool {
    v.len() <= 1 || (compatible(v, w) && in_family(&delete_max(v), &delete_max(w)))
}

/// Exponents of the leading term of `P_J`, as grid cells `(row, col)`.
pub fn term(j: &[u8], antidiagonal: bool) -> Vec<(usize, u8)> {
    let mut j = j.to_vec();
    j.sort();
    if antidiagonal {
        j.reverse();
    }
    j.iter().enumerate().map(|(r, &c)| (r + 1, c)).collect()
}

pub fn image(monomial: &[Subset], antidiagonal: bool) -> BTreeMap<(usize, u8), usize> {
    let mut m = BTreeMap::new();
    for j in monomial {
        for cell in term(j, antidiagonal) {
            *m.entry(cell).or_default() += 1;
        }
    }
    m
}

/// Multisets of size `d` drawn from `vars`, as sorted index vectors.
pub fn multisets(len: usize, d: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for m in multisets(len, d - 1) {
        let start = m.last().copied().unwrap_or(0);
        for i in start..len {
            let mut q = m.clone();
            q.push(i);
            out.push(q);
        }
    }
    out
}

/// Chains `J_1 <= ... <= J_d` inside `T_w^v` (gale order), counted directly.
pub fn ssyt_count(v: &[u8], w: &[u8], d: usize) -> usize {
    let t = t_set(v, w);
    let mut count = 0;
    let mut stack: Vec<Vec<usize>> = (0..t.len()).map(|i| vec![i]).collect();
    while let Some(seq) = stack.pop() {
        if seq.len() == d {
            count += 1;
            continue;
        }
        let last = &t[*seq.last().unwrap()];
        for (i, j) in t.iter().enumerate() {
            if gale(last, j) {
                let mut s = seq.clone();
                s.push(i);
                stack.push(s);
            }
        }
    }
    count
}

/// Distinct images of degree-`d` monomials in the surviving variables.
pub fn image_count(v: &[u8], w: &[u8], d: usize, antidiagonal: bool) -> usize {
    let t = t_set(v, w);
    multisets(t.len(), d)
        .iter()
        .map(|m| {
            let mono: Vec<Subset> = m.iter().map(|&i| t[i].clone()).collect();
            image(&mono, antidiagonal)
        })
        .collect::<BTreeSet<_>>()
        .len()
}

/// The restricted degree-2 initial ideal contains a monomial exactly when
/// some fiber of the quadratic monomial map mixes surviving and vanishing
/// monomials.
pub fn monomial_free(v: &[u8], w: &[u8], antidiagonal: bool) -> bool {
    let n = v.len();
    let t: BTreeSet<Subset> = t_set(v, w).into_iter().collect();
    let all = subsets(n);
    let mut fibers: BTreeMap<BTreeMap<(usize, u8), usize>, (bool, bool)> = BTreeMap::new();
    for m in multisets(all.len(), 2) {
        let mono: Vec<Subset> = m.iter().map(|&i| all[i].clone()).collect();
        let survives = mono.iter().all(|j| t.contains(j));
        let e = fibers.entry(image(&mono, antidiagonal)).or_default();
        if survives {
            e.0 = true;
        } else {
            e.1 = true;
        }
    }
    !fibers.values().any(|&(s, z)| s && z)
}

pub fn inversions(u: &[u8]) -> usize {
    (0..u.len())
        .flat_map(|i| (i + 1..u.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| u[i] > u[j])
        .count()
}

/// All defining chains of the column sequence: permutations whose first
/// `|J_k|` entries form `J_k`, weakly increasing in Bruhat order.
pub fn defining_chains(n: usize, columns: &[Subset]) -> Vec<Vec<Perm>> {
    let all = perms(n);
    let mut chains: Vec<Vec<Perm>> = vec![Vec::new()];
    for col in columns {
        let set: BTreeSet<u8> = col.iter().copied().collect();
        let fits: Vec<&Perm> = all
            .iter()
            .filter(|u| u[..col.len()].iter().copied().collect::<BTreeSet<u8>>() == set)
            .collect();
        chains = chains
            .into_iter()
            .flat_map(|c| {
                fits.iter()
                    .filter(|u| c.last().is_none_or(|prev| bruhat(prev, u)))
                    .map(|u| {
                        let mut c2 = c.clone();
                        c2.push((*u).clone());
                        c2
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    chains
}

/// Componentwise minimum of a set of chains, if one of them is it.
pub fn componentwise_min(chains: &[Vec<Perm>]) -> Option<Vec<Perm>> {
    chains
        .iter()
        .find(|c| {
            chains
                .iter()
                .all(|o| c.iter().zip(o).all(|(a, b)| bruhat(a, b)))
        })
        .cloned()
}

pub fn componentwise_max(chains: &[Vec<Perm>]) -> Option<Vec<Perm>> {
    chains
        .iter()
        .find(|c| {
            chains
                .iter()
                .all(|o| c.iter().zip(o).all(|(a, b)| bruhat(b, a)))
        })
        .cloned()
}

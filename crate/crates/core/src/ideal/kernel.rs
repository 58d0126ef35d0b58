use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use super::{cell_index, phi_image, term_cells, TermOrderKind, XExponent};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::{enumerate_t, ColumnSubset, Permutation};
use crate::tableau::Tableau;

/// An unordered pair of distinct degree-2 monomials with equal image.
/// `rhs` is the canonical member of the image class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KernelBinomial {
    pub lhs: Tableau,
    pub rhs: Tableau,
}

impl KernelBinomial {
    pub fn terms(&self) -> [&Tableau; 2] {
        [&self.lhs, &self.rhs]
    }
}

impl std::fmt::Display for KernelBinomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} - {}", self.lhs, self.rhs)
    }
}

/// The full degree-2 part of the kernel of the monomial map: every member
/// of an image class of size at least two is paired with the class
/// representative (the row-sorted tableau for the diagonal map, the
/// lexicographically least member for the antidiagonal map).
pub fn degree2_kernel_generators(n: usize, order: TermOrderKind) -> Result<Vec<KernelBinomial>> {
    if n < 3 {
        return Err(Error::Domain("degree-2 kernel needs n >= 3".to_string()));
    }
    let vars = ColumnSubset::all(n);
    let mut classes: HashMap<XExponent, Vec<Tableau>> = HashMap::new();
    for (a, x) in vars.iter().enumerate() {
        for y in &vars[a..] {
            let m = Tableau::new_unchecked(n, vec![*x, *y]).monomial_form();
            classes.entry(phi_image(&m, order)).or_default().push(m);
        }
    }
    let mut out = Vec::new();
    for members in classes.into_values().filter(|c| c.len() >= 2) {
        let rep = match order {
            TermOrderKind::Diagonal => {
                let rep = members[0].row_sort()?;
                if !members.contains(&rep) {
                    return Err(Error::Internal(format!(
                        "row-sorted form {rep} is missing from its image class"
                    )));
                }
                rep
            }
            TermOrderKind::Antidiagonal => members.iter().min().cloned().unwrap(),
        };
        out.extend(
            members
                .into_iter()
                .filter(|m| *m != rep)
                .map(|lhs| KernelBinomial {
                    lhs,
                    rhs: rep.clone(),
                }),
        );
    }
    out.sort_by(|a, b| a.rhs.cmp(&b.rhs).then_with(|| a.lhs.cmp(&b.lhs)));
    Ok(out)
}

type GeneratorCache = Mutex<HashMap<(usize, TermOrderKind), Arc<Vec<KernelBinomial>>>>;

/// Shared, computed-once generator list for `(n, order)`.
pub fn kernel_generators(n: usize, order: TermOrderKind) -> Result<Arc<Vec<KernelBinomial>>> {
    static CACHE: OnceLock<GeneratorCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().unwrap().get(&(n, order)) {
        return Ok(Arc::clone(hit));
    }
    let gens = Arc::new(degree2_kernel_generators(n, order)?);
    cache
        .lock()
        .unwrap()
        .entry((n, order))
        .or_insert_with(|| Arc::clone(&gens));
    Ok(gens)
}

/// Call `visit` with every multiset of size `d` drawn from `0..k`.
fn for_each_multiset(k: usize, d: usize, visit: &mut impl FnMut(&[usize])) {
    fn rec(
        k: usize,
        d: usize,
        start: usize,
        buf: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if buf.len() == d {
            visit(buf);
            return;
        }
        for i in start..k {
            buf.push(i);
            rec(k, d, i, buf, visit);
            buf.pop();
        }
    }
    rec(k, d, 0, &mut Vec::with_capacity(d), visit);
}

fn distinct_images(n: usize, groups: &[(Vec<ColumnSubset>, usize)], order: TermOrderKind) -> usize {
    let cells = |s: &ColumnSubset| -> Vec<usize> {
        term_cells(s.bits(), order)
            .into_iter()
            .map(|(r, c)| cell_index(n, r, c))
            .collect()
    };
    // images are built group by group as a cartesian product of multisets
    let mut partial: HashSet<Vec<u16>> = HashSet::new();
    partial.insert(vec![0u16; (n - 1) * n]);
    for (vars, degree) in groups {
        let var_cells: Vec<Vec<usize>> = vars.iter().map(cells).collect();
        let mut pieces: HashSet<Vec<u16>> = HashSet::new();
        for_each_multiset(vars.len(), *degree, &mut |choice| {
            let mut e = vec![0u16; (n - 1) * n];
            for &i in choice {
                for &c in &var_cells[i] {
                    e[c] += 1;
                }
            }
            pieces.insert(e);
        });
        let mut next = HashSet::with_capacity(partial.len() * pieces.len());
        for base in &partial {
            for piece in &pieces {
                next.insert(base.iter().zip(piece).map(|(a, b)| a + b).collect());
            }
        }
        partial = next;
    }
    partial.len()
}

/// Dimension of the degree-`d` part of `K[P_J : J in T_w^v] / ker`, i.e.
/// the number of distinct images of degree-`d` monomials in the surviving
/// variables.
pub fn kernel_hilbert_dim(
    v: &Permutation,
    w: &Permutation,
    d: usize,
    order: TermOrderKind,
    limits: &Limits,
) -> Result<usize> {
    limits.check_degree(d)?;
    let vars = enumerate_t(v, w)?;
    let worst = (vars.len() as u64)
        .checked_pow(d as u32)
        .unwrap_or(u64::MAX);
    if worst > limits.monomial_budget {
        return Err(Error::Budget(format!(
            "{}^{d} degree-{d} monomials exceed the budget {}",
            vars.len(),
            limits.monomial_budget
        )));
    }
    Ok(distinct_images(v.n(), &[(vars, d)], order))
}

/// Multigraded version: `multidegree[k]` variables of size `k + 1` are
/// chosen in every monomial. With one variable per occurring size this
/// counts the distinct points of the Segre-embedded toric variety.
pub fn multigraded_hilbert_dim(
    v: &Permutation,
    w: &Permutation,
    multidegree: &[usize],
    order: TermOrderKind,
    limits: &Limits,
) -> Result<usize> {
    let vars = enumerate_t(v, w)?;
    let mut groups = Vec::new();
    let mut worst: u64 = 1;
    for (k, &deg) in multidegree.iter().enumerate() {
        if deg == 0 {
            continue;
        }
        let group: Vec<ColumnSubset> = vars.iter().filter(|j| j.len() == k + 1).copied().collect();
        worst = worst.saturating_mul((group.len() as u64).saturating_pow(deg as u32));
        groups.push((group, deg));
    }
    if worst > limits.monomial_budget {
        return Err(Error::Budget(format!(
            "{worst} monomials exceed the budget {}",
            limits.monomial_budget
        )));
    }
    Ok(distinct_images(v.n(), &groups, order))
}

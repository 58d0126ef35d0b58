use super::chain::is_standard;
use super::Tableau;
use crate::error::Result;
use crate::order::{enumerate_t, gale_leq_bits, ColumnSubset, Permutation};

/// `SSYT_d(v, w)`: semi-standard tableaux with `d` columns, each in
/// `T_w^v`, sorted lexicographically on their column strings.
pub fn enumerate_ssyt(v: &Permutation, w: &Permutation, d: usize) -> Result<Vec<Tableau>> {
    let columns = enumerate_t(v, w)?;
    let mut out = Vec::new();
    let mut stack: Vec<ColumnSubset> = Vec::with_capacity(d);
    extend_chains(&columns, d, &mut stack, &mut out, v.n());
    out.sort();
    Ok(out)
}

fn extend_chains(
    columns: &[ColumnSubset],
    d: usize,
    stack: &mut Vec<ColumnSubset>,
    out: &mut Vec<Tableau>,
    n: usize,
) {
    if stack.len() == d {
        out.push(Tableau::new_unchecked(n, stack.clone()));
        return;
    }
    for col in columns {
        if stack
            .last()
            .is_none_or(|prev| gale_leq_bits(prev.bits(), col.bits()))
        {
            stack.push(*col);
            extend_chains(columns, d, stack, out, n);
            stack.pop();
        }
    }
}

/// Number of degree-`d` standard monomials for `X_w^v`.
pub fn count_standard(v: &Permutation, w: &Permutation, d: usize) -> Result<usize> {
    let mut count = 0;
    for t in enumerate_ssyt(v, w, d)? {
        if is_standard(&t, v, w)? {
            count += 1;
        }
    }
    Ok(count)
}

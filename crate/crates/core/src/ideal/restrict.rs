use rayon::prelude::*;
use serde::Serialize;

use super::kernel::{kernel_generators, KernelBinomial};
use super::TermOrderKind;
use crate::error::{check_same_n, Result};
use crate::limits::Limits;
use crate::order::{bruhat_pairs, require_bruhat, surviving_mask, ColumnSubset, Permutation};
use crate::tableau::Tableau;

/// A generator one of whose terms vanishes on `X_w^v` while the other
/// survives, making the surviving term a monomial of the restricted ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialWitness {
    pub generator: KernelBinomial,
    pub surviving: Tableau,
    /// Columns of the other term that lie outside `T_w^v`.
    pub vanishing: Vec<ColumnSubset>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RestrictionReport {
    pub v: Permutation,
    pub w: Permutation,
    pub order: TermOrderKind,
    pub survivors: Vec<KernelBinomial>,
    pub monomial_witnesses: Vec<MonomialWitness>,
    pub vanished_count: usize,
}

impl RestrictionReport {
    pub fn monomial_free(&self) -> bool {
        self.monomial_witnesses.is_empty()
    }
}

fn survives(term: &Tableau, mask: &[bool]) -> bool {
    term.columns().iter().all(|c| mask[c.bits() as usize])
}

/// Set every `P_J` with `J` outside `T_w^v` to zero in each generator and
/// sort the results into binomials, monomials and zeros.
pub fn restrict(
    gens: &[KernelBinomial],
    v: &Permutation,
    w: &Permutation,
    order: TermOrderKind,
) -> Result<RestrictionReport> {
    require_bruhat(v, w)?;
    let mask = surviving_mask(v, w);
    let mut report = RestrictionReport {
        v: *v,
        w: *w,
        order,
        survivors: Vec::new(),
        monomial_witnesses: Vec::new(),
        vanished_count: 0,
    };
    for g in gens {
        check_same_n(g.lhs.n(), v.n())?;
        match (survives(&g.lhs, &mask), survives(&g.rhs, &mask)) {
            (true, true) => report.survivors.push(g.clone()),
            (false, false) => report.vanished_count += 1,
            (lhs_alive, _) => {
                let (alive, dead) = if lhs_alive {
                    (&g.lhs, &g.rhs)
                } else {
                    (&g.rhs, &g.lhs)
                };
                report.monomial_witnesses.push(MonomialWitness {
                    generator: g.clone(),
                    surviving: alive.clone(),
                    vanishing: dead
                        .columns()
                        .iter()
                        .filter(|c| !mask[c.bits() as usize])
                        .copied()
                        .collect(),
                });
            }
        }
    }
    Ok(report)
}

/// Whether the restricted initial ideal contains no monomial. Equivalent to
/// the restricted ideal coinciding with the kernel of the restricted map.
pub fn is_monomial_free(v: &Permutation, w: &Permutation, order: TermOrderKind) -> Result<bool> {
    require_bruhat(v, w)?;
    if v.n() < 3 {
        return Ok(true);
    }
    let gens = kernel_generators(v.n(), order)?;
    let mask = surviving_mask(v, w);
    Ok(gens
        .iter()
        .all(|g| survives(&g.lhs, &mask) == survives(&g.rhs, &mask)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub v: Permutation,
    pub w: Permutation,
    pub order: TermOrderKind,
    pub monomial_free: bool,
    pub num_witnesses: usize,
}

/// Monomial-freeness of every pair `v <= w` in `S_n`, in lexicographic
/// order. Runs on the current rayon pool; the output order does not depend
/// on the number of workers.
pub fn classify_all(n: usize, order: TermOrderKind, limits: &Limits) -> Result<Vec<Verdict>> {
    limits.check_sweep(n)?;
    let pairs = bruhat_pairs(n);
    if n < 3 {
        return Ok(pairs
            .into_iter()
            .map(|(v, w)| Verdict {
                v,
                w,
                order,
                monomial_free: true,
                num_witnesses: 0,
            })
            .collect());
    }
    let gens = kernel_generators(n, order)?;
    pairs
        .par_iter()
        .map(|(v, w)| {
            let report = restrict(&gens, v, w, order)?;
            Ok(Verdict {
                v: *v,
                w: *w,
                order,
                monomial_free: report.monomial_free(),
                num_witnesses: report.monomial_witnesses.len(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compat::in_tn;
    use crate::ideal::degree2_kernel_generators;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn non_compatible_three() {
        let gens = degree2_kernel_generators(3, TermOrderKind::Diagonal).unwrap();
        let report = restrict(&gens, &p("132"), &p("312"), TermOrderKind::Diagonal).unwrap();
        assert!(!report.monomial_free());
        assert_eq!(report.monomial_witnesses.len(), 1);
        let witness = &report.monomial_witnesses[0];
        assert_eq!(witness.surviving.to_string(), "[13,2]");
        assert_eq!(
            witness
                .vanishing
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            ["23"]
        );
        assert!(!is_monomial_free(&p("132"), &p("312"), TermOrderKind::Diagonal).unwrap());
    }

    #[test]
    fn full_flag_keeps_every_generator() {
        let gens = degree2_kernel_generators(4, TermOrderKind::Diagonal).unwrap();
        let report = restrict(
            &gens,
            &Permutation::identity(4),
            &Permutation::longest(4),
            TermOrderKind::Diagonal,
        )
        .unwrap();
        assert_eq!(report.survivors.len(), gens.len());
        assert_eq!(report.vanished_count, 0);
    }

    #[test]
    fn points_are_monomial_free() {
        for order in [TermOrderKind::Diagonal, TermOrderKind::Antidiagonal] {
            let gens = degree2_kernel_generators(4, order).unwrap();
            for w in Permutation::all(4) {
                let r = restrict(&gens, &w, &w, order).unwrap();
                assert!(r.monomial_free() && r.survivors.is_empty());
            }
        }
    }

    #[test]
    fn classification_matches_tn_for_three() {
        let verdicts = classify_all(3, TermOrderKind::Diagonal, &Limits::default()).unwrap();
        assert_eq!(verdicts.len(), 19);
        for v in &verdicts {
            assert_eq!(
                v.monomial_free,
                in_tn(&v.v, &v.w).unwrap(),
                "{} {}",
                v.v,
                v.w
            );
        }
        let bad: Vec<String> = verdicts
            .iter()
            .filter(|v| !v.monomial_free)
            .map(|v| format!("{}/{}", v.v, v.w))
            .collect();
        assert_eq!(bad, ["123/312", "132/312", "213/231", "213/312", "213/321"]);
        assert!(is_monomial_free(&p("2314"), &p("4312"), TermOrderKind::Antidiagonal).unwrap());
    }
}

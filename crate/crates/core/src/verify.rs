//! Tiered self-checks that re-derive the classification results from
//! independent routes. `Quick` stays within `S_4`; `Full` covers `S_5`
//! exhaustively, sampled pairs in `S_6`, and block structure up to `S_6`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::compat::{self, blocks, in_tn, maximum_block};
use crate::error::{Error, Result};
use crate::ideal::{self, is_monomial_free, kernel_hilbert_dim, restrict, TermOrderKind};
use crate::limits::Limits;
use crate::order::{self, bruhat_leq, enumerate_s, enumerate_t, ColumnSubset, Permutation};
use crate::polytope;
use crate::table1;
use crate::tableau::{self, Tableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Quick,
    Full,
}

impl FromStr for Tier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "quick" => Ok(Self::Quick),
            "full" => Ok(Self::Full),
            _ => Err(Error::Parse(format!("unknown tier {s:?}"))),
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Quick => "quick",
            Self::Full => "full",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

type Outcome = std::result::Result<String, String>;

pub const SUITES: &[&str] = &[
    "richardson-sets",
    "restriction-witness",
    "classification",
    "table1",
    "standard-monomials",
    "non-standard-control",
    "polytope",
    "pattern-avoidance",
    "blocks",
    "defining-chains",
    "comparisons",
    "complement",
    "extensions",
];

pub fn run(tier: Tier) -> Vec<SuiteResult> {
    SUITES.iter().map(|&name| run_suite(name, tier)).collect()
}

pub fn run_suite(name: &'static str, tier: Tier) -> SuiteResult {
    let full = tier == Tier::Full;
    let start = Instant::now();
    let outcome = match name {
        "richardson-sets" => richardson_sets(),
        "restriction-witness" => restriction_witness(),
        "classification" => classification(full),
        "table1" => table1_fixture(),
        "standard-monomials" => standard_monomials(if full { 4 } else { 3 }),
        "non-standard-control" => non_standard_control(),
        "polytope" => polytope_example(),
        "pattern-avoidance" => pattern_avoidance(if full { 5 } else { 4 }),
        "blocks" => block_structure(if full { 6 } else { 4 }),
        "defining-chains" => defining_chains(if full { 4 } else { 3 }),
        "comparisons" => comparisons(if full { 5 } else { 4 }),
        "complement" => complement(if full { 5 } else { 4 }),
        "extensions" => extensions(if full { 5 } else { 4 }),
        _ => Err(format!("unknown suite {name}")),
    };
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    SuiteResult {
        name,
        passed,
        detail,
        elapsed: start.elapsed(),
    }
}

fn p(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn err(e: Error) -> String {
    e.to_string()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn names(subsets: &[ColumnSubset]) -> Vec<String> {
    subsets.iter().map(ToString::to_string).collect()
}

fn richardson_sets() -> Outcome {
    let (v, w) = (p("2314"), p("4231"));
    let t = names(&enumerate_t(&v, &w).map_err(err)?);
    let s = names(&enumerate_s(&v, &w).map_err(err)?);
    ensure(
        t == ["2", "3", "4", "23", "24", "123", "124", "134", "234"],
        || format!("T = {t:?}"),
    )?;
    ensure(s == ["1", "12", "13", "14", "34"], || format!("S = {s:?}"))?;
    Ok("T and S of (2314, 4231) match".into())
}

fn restriction_witness() -> Outcome {
    let (v, w) = (p("132"), p("312"));
    let gens = ideal::kernel_generators(3, TermOrderKind::Diagonal).map_err(err)?;
    let report = restrict(&gens, &v, &w, TermOrderKind::Diagonal).map_err(err)?;
    ensure(gens.len() == 1, || {
        format!("{} generators for n = 3", gens.len())
    })?;
    ensure(report.monomial_witnesses.len() == 1, || {
        format!("{} witnesses", report.monomial_witnesses.len())
    })?;
    let witness = report.monomial_witnesses[0].surviving.to_string();
    ensure(witness == "[13,2]", || format!("witness {witness}"))?;
    ensure(
        !is_monomial_free(&v, &w, TermOrderKind::Diagonal).map_err(err)?,
        || "reported monomial-free".into(),
    )?;
    Ok("single witness [13,2]".into())
}

fn classification(full: bool) -> Outcome {
    let limits = Limits::default();
    let max_n = if full { 5 } else { 4 };
    let mut checked = 0;
    for n in 3..=max_n {
        for verdict in ideal::classify_all(n, TermOrderKind::Diagonal, &limits).map_err(err)? {
            let expected = in_tn(&verdict.v, &verdict.w).map_err(err)?;
            ensure(verdict.monomial_free == expected, || {
                format!(
                    "({}, {}): monomial-free {} but in T_n {expected}",
                    verdict.v, verdict.w, verdict.monomial_free
                )
            })?;
            checked += 1;
        }
    }
    if full {
        let mut rng = StdRng::seed_from_u64(0x5eed_0006);
        let all: Vec<Permutation> = Permutation::all(6).collect();
        let mut sampled = 0;
        while sampled < 10_000 {
            let v = all[rng.gen_range(0..all.len())];
            let w = all[rng.gen_range(0..all.len())];
            if !bruhat_leq(&v, &w).map_err(err)? {
                continue;
            }
            let free = is_monomial_free(&v, &w, TermOrderKind::Diagonal).map_err(err)?;
            let expected = in_tn(&v, &w).map_err(err)?;
            ensure(free == expected, || {
                format!("({v}, {w}): monomial-free {free} but in T_n {expected}")
            })?;
            sampled += 1;
        }
        checked += sampled;
    }
    Ok(format!("{checked} pairs agree"))
}

fn table1_fixture() -> Outcome {
    let verdicts =
        ideal::classify_all(4, TermOrderKind::Antidiagonal, &Limits::default()).map_err(err)?;
    let cmp = table1::compare_table1(&verdicts).map_err(err)?;
    ensure(cmp.all_covered(), || format!("missing {:?}", cmp.missing))?;
    Ok(format!(
        "{} covered, {} surplus",
        cmp.covered.len(),
        cmp.surplus.len()
    ))
}

fn standard_monomials(max_n: usize) -> Outcome {
    let limits = Limits::default();
    let mut checked = 0;
    for n in 2..=max_n {
        for (v, w) in compat::tn_bruhat_pairs(n) {
            for d in 1..=3 {
                let ssyt = tableau::enumerate_ssyt(&v, &w, d).map_err(err)?.len();
                let standard = tableau::count_standard(&v, &w, d).map_err(err)?;
                let dim =
                    kernel_hilbert_dim(&v, &w, d, TermOrderKind::Diagonal, &limits).map_err(err)?;
                ensure(ssyt == standard && ssyt == dim, || {
                    format!("({v}, {w}) d={d}: ssyt {ssyt}, standard {standard}, image {dim}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (pair, degree) cases agree"))
}

fn non_standard_control() -> Outcome {
    let (v, w) = (p("123"), p("312"));
    let t = Tableau::parse(3, "[13,2]").map_err(err)?;
    ensure(!tableau::is_standard(&t, &v, &w).map_err(err)?, || {
        "[13,2] standard".into()
    })?;
    let ssyt = tableau::enumerate_ssyt(&v, &w, 2).map_err(err)?.len();
    let standard = tableau::count_standard(&v, &w, 2).map_err(err)?;
    ensure(standard < ssyt, || {
        format!("standard {standard} vs ssyt {ssyt}")
    })?;
    Ok(format!("standard {standard} < ssyt {ssyt}"))
}

fn polytope_example() -> Outcome {
    let (v, w) = (p("2341"), p("4231"));
    let poly = polytope::polytope(&v, &w, TermOrderKind::Antidiagonal).map_err(err)?;
    ensure(poly.points().len() == 5, || {
        format!("{} points", poly.points().len())
    })?;
    ensure(poly.affine_dim() == 2, || {
        format!("dimension {}", poly.affine_dim())
    })?;
    ensure(
        poly.points().iter().all(|x| x[0] + x[1] + x[2] == 3),
        || "off the plane".into(),
    )?;
    let lattice = poly.lattice_points(&Limits::default()).map_err(err)?;
    Ok(format!(
        "5 points, dimension 2, {} lattice points",
        lattice.len()
    ))
}

fn pattern_avoidance(n: usize) -> Outcome {
    let id = Permutation::identity(n);
    let w0 = Permutation::longest(n);
    for u in Permutation::all(n) {
        ensure(
            in_tn(&id, &u).map_err(err)? == compat::is_312_avoiding(&u),
            || format!("(id, {u})"),
        )?;
        ensure(
            in_tn(&u, &w0).map_err(err)? == compat::is_213_avoiding(&u),
            || format!("({u}, w0)"),
        )?;
    }
    Ok(format!("S_{n} exhaustive"))
}

fn block_structure(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 2..=max_n {
        for (v, w) in compat::tn_pairs(n) {
            check_blocks(&v, &w)?;
            checked += 1;
        }
    }
    let named = |v: &str, w: &str| -> std::result::Result<Vec<(usize, usize)>, String> {
        let mut b: Vec<_> = blocks(&p(v), &p(w))
            .map_err(err)?
            .iter()
            .map(|b| (b.start, b.end))
            .collect();
        b.sort();
        Ok(b)
    };
    ensure(
        named("356412", "465321")? == [(1, 4), (2, 3), (5, 6)],
        || "blocks of (356412, 465321)".into(),
    )?;
    ensure(named("12453", "24531")? == [(1, 5)], || {
        "blocks of (12453, 24531)".into()
    })?;
    Ok(format!("{checked} pairs"))
}

/// Entry sets agree with `v_i = w_j` minimal, no crossings, and monotone
/// runs towards `n` inside the maximum block.
pub fn check_blocks(v: &Permutation, w: &Permutation) -> std::result::Result<(), String> {
    let bs = blocks(v, w).map_err(err)?;
    for b in &bs {
        let ev: BTreeSet<u8> = b.entries(v).iter().copied().collect();
        let ew: BTreeSet<u8> = b.entries(w).iter().copied().collect();
        let min = *ev.iter().next().unwrap_or(&0);
        ensure(ev == ew, || {
            format!("({v}, {w}) block {b}: entry sets differ")
        })?;
        ensure(v.at(b.start) == min && w.at(b.end) == min, || {
            format!("({v}, {w}) block {b}: ends are not the minimum")
        })?;
        for c in &bs {
            ensure(!b.crosses(c), || {
                format!("({v}, {w}) blocks {b} and {c} cross")
            })?;
        }
    }
    let n = v.n() as u8;
    let (d, e) = (v.position_of(n), w.position_of(n));
    let max = maximum_block(v, w).map_err(err)?;
    ensure(max.contains(d) && max.contains(e), || {
        format!("({v}, {w}) maximum block {max} misses n")
    })?;
    ensure((max.start..d).all(|k| v.at(k) < v.at(k + 1)), || {
        format!("({v}, {w}) v not increasing in {max}")
    })?;
    ensure((e..max.end).all(|k| w.at(k) > w.at(k + 1)), || {
        format!("({v}, {w}) w not decreasing in {max}")
    })?;
    Ok(())
}

/// All defining chains of an SSYT, by exhaustive search.
pub fn all_defining_chains(t: &Tableau) -> Vec<Vec<Permutation>> {
    let n = t.n();
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut chains: Vec<Vec<Permutation>> = vec![Vec::new()];
    for col in t.columns() {
        let fits: Vec<&Permutation> = perms
            .iter()
            .filter(|u| u.prefix_bits(col.len()) == col.bits())
            .collect();
        chains = chains
            .into_iter()
            .flat_map(|chain| {
                fits.iter()
                    .filter(|u| {
                        chain
                            .last()
                            .is_none_or(|prev| bruhat_leq(prev, u).unwrap_or(false))
                    })
                    .map(|u| {
                        let mut c = chain.clone();
                        c.push(**u);
                        c
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    chains
}

fn defining_chains(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 2..=max_n {
        let (id, w0) = (Permutation::identity(n), Permutation::longest(n));
        for d in 1..=3 {
            for t in tableau::enumerate_ssyt(&id, &w0, d).map_err(err)? {
                let chains = all_defining_chains(&t);
                let lo = tableau::min_defining_chain(&t).map_err(err)?.perms;
                let hi = tableau::max_defining_chain(&t).map_err(err)?.perms;
                let below = |a: &[Permutation], b: &[Permutation]| {
                    a.iter()
                        .zip(b)
                        .all(|(x, y)| bruhat_leq(x, y).unwrap_or(false))
                };
                ensure(chains.contains(&lo) && chains.contains(&hi), || {
                    format!("{t}: greedy chain invalid")
                })?;
                ensure(
                    chains.iter().all(|c| below(&lo, c) && below(c, &hi)),
                    || format!("{t}: greedy chains are not extremal"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} tableaux"))
}

fn comparisons(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 2..=max_n {
        for u in Permutation::all(n) {
            for j in ColumnSubset::all(n) {
                ensure(
                    order::subset_leq_perm(&j, &u).map_err(err)?
                        == order::subset_leq_perm_via_bruhat(&j, &u).map_err(err)?,
                    || format!("{j} <= {u}"),
                )?;
                ensure(
                    order::perm_leq_subset(&u, &j).map_err(err)?
                        == order::perm_leq_subset_via_bruhat(&u, &j).map_err(err)?,
                    || format!("{u} <= {j}"),
                )?;
                checked += 2;
            }
        }
    }
    Ok(format!("{checked} comparisons"))
}

fn complement(max_n: usize) -> Outcome {
    let mut checked = 0;
    for n in 2..=max_n {
        for w in Permutation::all(n) {
            let reversed = w.reversed();
            for k in ColumnSubset::all(n) {
                ensure(
                    order::subset_leq_perm(&k, &w).map_err(err)?
                        == order::perm_leq_subset(&reversed, &k.complement()).map_err(err)?,
                    || format!("K = {k}, w = {w}"),
                )?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (K, w) pairs"))
}

fn extensions(max_n: usize) -> Outcome {
    let mut eligible = 0;
    for n in 2..=max_n {
        let tn = compat::tn_pairs(n);
        let lifted: usize = compat::tn_pairs(n - 1)
            .iter()
            .map(|(v, w)| compat::extensions_in_tn(v, w).map(|e| e.len()))
            .sum::<Result<usize>>()
            .map_err(err)?;
        ensure(lifted == tn.len(), || {
            format!("n={n}: {lifted} lifts vs {} pairs", tn.len())
        })?;
        for (v, w) in tn {
            let top = n as u8;
            if w.position_of(top) >= v.position_of(top) {
                continue;
            }
            let v2 = compat::raise_v(&v, &w).map_err(err)?;
            let w2 = compat::lower_w(&v, &w).map_err(err)?;
            ensure(v2.inversions() == v.inversions() + 1, || {
                format!("({v}, {w}): N(v') = {}", v2.inversions())
            })?;
            ensure(w2.inversions() + 1 == w.inversions(), || {
                format!("({v}, {w}): N(w') = {}", w2.inversions())
            })?;
            ensure(
                in_tn(&v2, &w).map_err(err)? && in_tn(&v, &w2).map_err(err)?,
                || format!("({v}, {w}): lifted pairs leave T_n"),
            )?;
            eligible += 1;
        }
    }
    Ok(format!("{eligible} eligible pairs"))
}

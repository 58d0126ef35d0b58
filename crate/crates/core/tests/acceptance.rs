//! Acceptance criteria, one line each. Runs as a plain binary so every
//! verdict is printed even when an earlier one fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use richardson_core::compat::{self, blocks, in_tn, maximum_block};
use richardson_core::ideal::{self, is_monomial_free, kernel_hilbert_dim, restrict, TermOrderKind};
use richardson_core::order::{self, enumerate_s, enumerate_t, ColumnSubset};
use richardson_core::polytope::{polytope, restricted_map_matrix, segre_matrix, IntMatrix};
use richardson_core::table1::compare_table1;
use richardson_core::tableau::{self, Tableau};
use richardson_core::{Limits, Permutation};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn within(elapsed: Duration, limit: Duration, what: &str) -> Result<(), String> {
    ensure(elapsed < limit, || {
        format!("{what} took {elapsed:?}, limit {limit:?}")
    })
}

fn names(s: &[ColumnSubset]) -> Vec<String> {
    s.iter().map(ToString::to_string).collect()
}

fn ac1_richardson_sets() -> Outcome {
    let (v, w) = (perm("2314"), perm("4231"));
    let ((t, s), took) = timed(|| (enumerate_t(&v, &w).unwrap(), enumerate_s(&v, &w).unwrap()));
    let mut t = names(&t);
    let mut s = names(&s);
    t.sort();
    s.sort();
    let mut want_t = vec!["2", "3", "4", "23", "24", "123", "124", "134", "234"];
    let mut want_s = vec!["1", "12", "13", "14", "34"];
    want_t.sort();
    want_s.sort();
    ensure(t == want_t, || format!("T = {t:?}"))?;
    ensure(s == want_s, || format!("S = {s:?}"))?;
    within(took, Duration::from_millis(1), "enumeration")?;
    Ok(format!("T and S exact ({took:?})"))
}

fn ac2_single_witness() -> Outcome {
    let (v, w) = (perm("132"), perm("312"));
    let ((report, free), took) = timed(|| {
        let gens = ideal::kernel_generators(3, TermOrderKind::Diagonal).unwrap();
        let report = restrict(&gens, &v, &w, TermOrderKind::Diagonal).unwrap();
        (
            report,
            is_monomial_free(&v, &w, TermOrderKind::Diagonal).unwrap(),
        )
    });
    let gens = ideal::kernel_generators(3, TermOrderKind::Diagonal).unwrap();
    ensure(gens.len() == 1, || {
        format!("{} generators for n = 3", gens.len())
    })?;
    ensure(report.monomial_witnesses.len() == 1, || {
        format!("{} witnesses", report.monomial_witnesses.len())
    })?;
    let wit = &report.monomial_witnesses[0];
    ensure(wit.surviving.to_string() == "[13,2]", || {
        format!("witness {}", wit.surviving)
    })?;
    ensure(wit.generator == gens[0], || {
        "witness from another generator".into()
    })?;
    ensure(!free, || "reported monomial-free".into())?;
    within(took, Duration::from_millis(1), "restriction")?;
    Ok(format!("witness P13P2 from {} ({took:?})", wit.generator))
}

fn ac3_classification() -> Outcome {
    let mut detail = Vec::new();
    for (n, limit) in [(3, 1), (4, 1), (5, 120)] {
        let (verdicts, took) = timed(|| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(1)
                .build()
                .unwrap()
                .install(|| {
                    ideal::classify_all(n, TermOrderKind::Diagonal, &Limits::default()).unwrap()
                })
        });
        let mut mismatches = 0;
        for v in &verdicts {
            let family = in_tn(&v.v, &v.w).unwrap();
            let reference = in_family(v.v.entries(), v.w.entries());
            if v.monomial_free != family || family != reference {
                mismatches += 1;
            }
        }
        ensure(mismatches == 0, || {
            format!("S_{n}: {mismatches} mismatches")
        })?;
        within(took, Duration::from_secs(limit), &format!("S_{n} sweep"))?;
        detail.push(format!("S_{n} {} pairs ({took:.1?})", verdicts.len()));
    }
    Ok(format!("zero mismatches: {}", detail.join(", ")))
}

fn ac4_table1() -> Outcome {
    let (cmp, took) = timed(|| {
        let verdicts =
            ideal::classify_all(4, TermOrderKind::Antidiagonal, &Limits::default()).unwrap();
        compare_table1(&verdicts).unwrap()
    });
    ensure(cmp.covered.len() == 58 && cmp.missing.is_empty(), || {
        format!("missing {:?}", cmp.missing)
    })?;
    within(took, Duration::from_secs(1), "antidiagonal sweep")?;
    let unequal: Vec<String> = cmp
        .surplus
        .iter()
        .filter(|(v, w)| v != w)
        .map(|(v, w)| format!("{v}/{w}"))
        .collect();
    Ok(format!(
        "58/58 covered; surplus {} ({} with v = w, others: {}) ({took:.1?})",
        cmp.surplus.len(),
        cmp.surplus.len() - unequal.len(),
        unequal.join(" ")
    ))
}

fn ac5_standard_monomials() -> Outcome {
    let limits = Limits::default();
    let (outcome, took) = timed(|| -> Result<usize, String> {
        let mut cases = 0;
        for (v, w) in compat::tn_bruhat_pairs(4) {
            for d in 1..=3 {
                let standard = tableau::count_standard(&v, &w, d).unwrap();
                let ssyt = tableau::enumerate_ssyt(&v, &w, d).unwrap().len();
                let image =
                    kernel_hilbert_dim(&v, &w, d, TermOrderKind::Diagonal, &limits).unwrap();
                ensure(standard == ssyt && ssyt == image, || {
                    format!("({v}, {w}) d={d}: standard {standard}, ssyt {ssyt}, image {image}")
                })?;
                cases += 1;
            }
        }
        Ok(cases)
    });
    let cases = outcome?;
    within(took, Duration::from_secs(30), "degree sweep")?;
    Ok(format!("{cases} (pair, degree) cases agree ({took:.1?})"))
}

fn ac6_negative_control() -> Outcome {
    let (v, w) = (Permutation::identity(3), perm("312"));
    let t = Tableau::parse(3, "[13,2]").unwrap();
    let ssyt = tableau::enumerate_ssyt(&v, &w, 2).unwrap();
    ensure(ssyt.contains(&t), || "[13,2] not in SSYT_2".into())?;
    ensure(!in_tn(&v, &w).unwrap(), || {
        "(123, 312) in the family".into()
    })?;
    let top = *tableau::min_defining_chain(&t)
        .unwrap()
        .perms
        .last()
        .unwrap();
    ensure(top == perm("231"), || format!("w2- = {top}"))?;
    ensure(!order::bruhat_leq(&top, &w).unwrap(), || {
        "231 <= 312".into()
    })?;
    ensure(!tableau::is_standard(&t, &v, &w).unwrap(), || {
        "[13,2] standard".into()
    })?;
    let standard = tableau::count_standard(&v, &w, 2).unwrap();
    ensure(standard < ssyt.len(), || {
        format!("standard {standard}, ssyt {}", ssyt.len())
    })?;
    Ok(format!("[13,2] non-standard, {standard} < {}", ssyt.len()))
}

fn expect_matrix(
    m: &IntMatrix,
    rows: &[&str],
    cols: &[&str],
    entries: &[[i64; 6]],
) -> Result<(), String> {
    ensure(m.row_labels() == rows, || {
        format!("row labels {:?}", m.row_labels())
    })?;
    ensure(m.col_labels() == cols, || {
        format!("column labels {:?}", m.col_labels())
    })?;
    for (r, want) in entries.iter().enumerate() {
        ensure(m.row(r) == want, || {
            format!("row {} = {:?}", rows[r], m.row(r))
        })?;
    }
    Ok(())
}

fn ac7_polytope() -> Outcome {
    let (v, w) = (perm("2341"), perm("4231"));
    let order = TermOrderKind::Antidiagonal;
    let ((a, s, as_, poly), took) = timed(|| {
        let a = restricted_map_matrix(&v, &w, order).unwrap();
        let s = segre_matrix(&v, &w).unwrap();
        let as_ = a.mul(&s).unwrap();
        (a, s, as_, polytope(&v, &w, order).unwrap())
    });
    let grid = ["x2", "x3", "x4", "y2", "y3", "z2"];
    let vars = ["P2", "P3", "P4", "P23", "P24", "P234"];
    let products = [
        "P2P23P234",
        "P2P24P234",
        "P3P23P234",
        "P3P24P234",
        "P4P23P234",
        "P4P24P234",
    ];
    expect_matrix(
        &a,
        &grid,
        &vars,
        &[
            [1, 0, 0, 0, 0, 0],
            [0, 1, 0, 1, 0, 0],
            [0, 0, 1, 0, 1, 1],
            [0, 0, 0, 1, 1, 0],
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 0, 0, 1],
        ],
    )?;
    expect_matrix(
        &s,
        &vars,
        &products,
        &[
            [1, 1, 0, 0, 0, 0],
            [0, 0, 1, 1, 0, 0],
            [0, 0, 0, 0, 1, 1],
            [1, 0, 1, 0, 1, 0],
            [0, 1, 0, 1, 0, 1],
            [1, 1, 1, 1, 1, 1],
        ],
    )?;
    expect_matrix(
        &as_,
        &grid,
        &products,
        &[
            [1, 1, 0, 0, 0, 0],
            [1, 0, 2, 1, 1, 0],
            [1, 2, 1, 2, 2, 3],
            [1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 1],
            [1, 1, 1, 1, 1, 1],
        ],
    )?;
    ensure(
        as_.column(3) == as_.column(4) && as_.column(3) == [0, 1, 2, 1, 1, 1],
        || "columns 4 and 5".into(),
    )?;
    ensure(poly.affine_dim() == 2, || {
        format!("dimension {}", poly.affine_dim())
    })?;
    ensure(
        poly.points().iter().all(|x| x[0] + x[1] + x[2] == 3),
        || "off the plane".into(),
    )?;
    within(took, Duration::from_millis(10), "construction")?;
    Ok(format!("A, S, AS exact; 5 points, dimension 2 ({took:?})"))
}

fn ac8_patterns() -> Outcome {
    let (mismatches, took) = timed(|| {
        let (id, w0) = (Permutation::identity(5), Permutation::longest(5));
        Permutation::all(5)
            .filter(|u| {
                in_tn(&id, u).unwrap() != compat::is_312_avoiding(u)
                    || in_tn(u, &w0).unwrap() != compat::is_213_avoiding(u)
                    || compat::is_312_avoiding(u) != !contains(u.entries(), &[3, 1, 2])
            })
            .count()
    });
    ensure(mismatches == 0, || format!("{mismatches} mismatches"))?;
    within(took, Duration::from_secs(5), "S_5 sweep")?;
    Ok(format!("S_5 both directions, zero mismatches ({took:.1?})"))
}

/// Pattern containment from the definition.
fn contains(u: &[u8], pattern: &[u8]) -> bool {
    let k = pattern.len();
    let idx: Vec<Vec<usize>> = multisets(u.len(), k)
        .into_iter()
        .filter(|m| m.windows(2).all(|p| p[0] < p[1]))
        .collect();
    idx.iter()
        .any(|m| (0..k).all(|a| (0..k).all(|b| (u[m[a]] < u[m[b]]) == (pattern[a] < pattern[b]))))
}

fn ac9_blocks() -> Outcome {
    let (outcome, took) = timed(|| -> Result<usize, String> {
        let mut pairs = 0;
        for n in 1..=6 {
            for (v, w) in compat::tn_pairs(n) {
                let bs = blocks(&v, &w).map_err(|e| e.to_string())?;
                for b in &bs {
                    let mut ev = b.entries(&v).to_vec();
                    let mut ew = b.entries(&w).to_vec();
                    ev.sort();
                    ew.sort();
                    ensure(ev == ew, || format!("({v}, {w}) {b}: entry sets"))?;
                    ensure(v.at(b.start) == ev[0] && w.at(b.end) == ev[0], || {
                        format!("({v}, {w}) {b}: minimum")
                    })?;
                    let crossing = bs.iter().any(|c| {
                        (b.start < c.start && c.start <= b.end && b.end < c.end)
                            || (c.start < b.start && b.start <= c.end && c.end < b.end)
                    });
                    ensure(!crossing, || format!("({v}, {w}) {b}: crossing"))?;
                }
                let top = n as u8;
                let (d, e) = (v.position_of(top), w.position_of(top));
                let max = maximum_block(&v, &w).map_err(|e| e.to_string())?;
                ensure((max.start..d).all(|k| v.at(k) < v.at(k + 1)), || {
                    format!("({v}, {w}) ascent")
                })?;
                ensure((e..max.end).all(|k| w.at(k) > w.at(k + 1)), || {
                    format!("({v}, {w}) descent")
                })?;
                pairs += 1;
            }
        }
        Ok(pairs)
    });
    let pairs = outcome?;
    let windows = |v: &str, w: &str| {
        let mut b: Vec<(usize, usize)> = blocks(&perm(v), &perm(w))
            .unwrap()
            .iter()
            .map(|b| (b.start, b.end))
            .collect();
        b.sort();
        b
    };
    ensure(
        windows("356412", "465321") == [(1, 4), (2, 3), (5, 6)],
        || "first named pair".into(),
    )?;
    ensure(windows("12453", "24531") == [(1, 5)], || {
        "second named pair".into()
    })?;
    let max = maximum_block(&perm("356412"), &perm("465321")).unwrap();
    ensure((max.start, max.end) == (2, 3), || {
        format!("maximum block {max}")
    })?;
    within(took, Duration::from_secs(120), "block sweep")?;
    Ok(format!(
        "{pairs} pairs up to n = 6, named instances exact ({took:.1?})"
    ))
}

fn ac10_oracles() -> Outcome {
    // (a) greedy chains are the componentwise optima.
    let mut tableaux = 0;
    for n in 2..=4 {
        let (id, w0) = (Permutation::identity(n), Permutation::longest(n));
        for d in 1..=3 {
            for t in tableau::enumerate_ssyt(&id, &w0, d).unwrap() {
                let cols: Vec<Vec<u8>> = t.columns().iter().map(|c| c.elements()).collect();
                let chains = defining_chains(n, &cols);
                let lo: Vec<Vec<u8>> = tableau::min_defining_chain(&t)
                    .unwrap()
                    .perms
                    .iter()
                    .map(|p| p.entries().to_vec())
                    .collect();
                let hi: Vec<Vec<u8>> = tableau::max_defining_chain(&t)
                    .unwrap()
                    .perms
                    .iter()
                    .map(|p| p.entries().to_vec())
                    .collect();
                ensure(componentwise_min(&chains) == Some(lo), || {
                    format!("(a) min chain of {t}")
                })?;
                ensure(componentwise_max(&chains) == Some(hi), || {
                    format!("(a) max chain of {t}")
                })?;
                tableaux += 1;
            }
        }
    }
    // (b) and (c): subset/permutation comparisons.
    let mut comparisons = 0;
    for n in 2..=5 {
        for u in Permutation::all(n) {
            for j in ColumnSubset::all(n) {
                let direct = order::subset_leq_perm(&j, &u).unwrap();
                ensure(
                    direct == order::subset_leq_perm_via_bruhat(&j, &u).unwrap(),
                    || format!("(b) {j} <= {u}"),
                )?;
                ensure(
                    order::perm_leq_subset(&u, &j).unwrap()
                        == order::perm_leq_subset_via_bruhat(&u, &j).unwrap(),
                    || format!("(b) {u} <= {j}"),
                )?;
                ensure(
                    direct == order::perm_leq_subset(&u.reversed(), &j.complement()).unwrap(),
                    || format!("(c) K = {j}, w = {u}"),
                )?;
                ensure(
                    direct == subset_below_perm(&j.elements(), u.entries()),
                    || format!("(b) oracle {j} {u}"),
                )?;
                comparisons += 1;
            }
        }
    }
    // (d) swapping next to n keeps both new pairs in the family.
    let mut eligible = 0;
    for (v, w) in compat::tn_pairs(5) {
        let (d, e) = (v.position_of(5), w.position_of(5));
        if e == d {
            continue;
        }
        let v2 = compat::raise_v(&v, &w).unwrap();
        let w2 = compat::lower_w(&v, &w).unwrap();
        ensure(
            inversions(v2.entries()) == inversions(v.entries()) + 1,
            || format!("(d) N(v') for ({v}, {w})"),
        )?;
        ensure(
            inversions(w2.entries()) + 1 == inversions(w.entries()),
            || format!("(d) N(w') for ({v}, {w})"),
        )?;
        ensure(in_tn(&v2, &w).unwrap() && in_tn(&v, &w2).unwrap(), || {
            format!("(d) ({v}, {w}) lifts leave the family")
        })?;
        eligible += 1;
    }
    Ok(format!(
        "(a) {tableaux} tableaux, (b,c) {comparisons} pairs, (d) {eligible} pairs"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1 surviving and vanishing sets", ac1_richardson_sets),
        ("AC2 single monomial witness", ac2_single_witness),
        ("AC3 monomial-free iff in the family", ac3_classification),
        ("AC4 antidiagonal fixture", ac4_table1),
        ("AC5 standard = ssyt = image counts", ac5_standard_monomials),
        ("AC6 non-standard control", ac6_negative_control),
        ("AC7 toric polytope matrices", ac7_polytope),
        ("AC8 pattern-avoidance characterization", ac8_patterns),
        ("AC9 block structure", ac9_blocks),
        ("AC10 brute-force oracles", ac10_oracles),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match std::panic::catch_unwind(check) {
            Ok(Ok(detail)) => println!("PASS {name}: {detail}"),
            Ok(Err(detail)) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL {name}: panicked");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

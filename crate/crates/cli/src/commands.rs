use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use richardson_core::compat::{in_tn, is_compatible};
use richardson_core::ideal::{self, is_monomial_free, restrict, TermOrderKind};
use richardson_core::order::{bruhat_pairs, enumerate_t, richardson_dimension};
use richardson_core::polytope::{
    polytope as build_polytope, restricted_map_matrix, segre_matrix, IntMatrix,
};
use richardson_core::table1::compare_table1;
use richardson_core::tableau::{self, Tableau};
use richardson_core::verify::{self, Tier};
use richardson_core::{Error, Permutation, Result};
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("i/o: {e}"))
}

fn emit(out: &mut impl Write, s: &str) -> Result<()> {
    out.write_all(s.as_bytes()).map_err(io)
}

fn emit_json(out: &mut impl Write, v: &Value) -> Result<()> {
    let s = serde_json::to_string_pretty(v).map_err(|e| Error::Internal(e.to_string()))?;
    emit(out, &s)?;
    emit(out, "\n")
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<()> {
    fs::create_dir_all(dir).map_err(io)?;
    let path = dir.join(name);
    fs::write(&path, contents).map_err(io)?;
    eprintln!("wrote {}", path.display());
    Ok(())
}

/// `P13P2` style product of the columns.
fn monomial(t: &Tableau) -> String {
    t.columns()
        .iter()
        .map(|c| {
            if c.n() > 9 {
                format!("P{{{c}}}")
            } else {
                format!("P{c}")
            }
        })
        .collect()
}

pub fn check(
    cfg: &RunConfig,
    v: &Permutation,
    w: &Permutation,
    out: &mut impl Write,
) -> Result<u8> {
    let order = cfg.order;
    let t = enumerate_t(v, w)?;
    let dim = richardson_dimension(v, w)?;
    let compatible = is_compatible(v, w)?;
    let member = in_tn(v, w)?;
    let free = is_monomial_free(v, w, order)?;
    let witnesses = if v.n() >= 3 {
        let gens = ideal::kernel_generators(v.n(), order)?;
        restrict(&gens, v, w, order)?.monomial_witnesses
    } else {
        Vec::new()
    };
    if free != witnesses.is_empty() {
        return Err(Error::Internal("verdict and witness list disagree".into()));
    }
    let verdict = if free { "toric" } else { "non-toric" };
    match cfg.format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "v: {v}\nw: {w}\norder: {order}");
            let _ = writeln!(s, "dim: {dim}\n|T|: {}", t.len());
            let _ = writeln!(s, "compatible: {compatible}\nin_Tn: {member}\nmonomial-free: {free}");
            if !witnesses.is_empty() {
                let _ = writeln!(s, "witnesses:");
                for wit in &witnesses {
                    let vanishing: Vec<String> = wit.vanishing.iter().map(|c| format!("P{c}")).collect();
                    let _ = writeln!(
                        s,
                        "  {}  from {}  vanishing {}",
                        monomial(&wit.surviving),
                        wit.generator,
                        vanishing.join(" ")
                    );
                }
            }
            let _ = writeln!(s, "verdict: {verdict}");
            emit(out, &s)?;
        }
        Format::Csv => emit(
            out,
            &format!(
                "v,w,order,dim,t_size,compatible,in_Tn,monomial_free,num_witnesses\n{v},{w},{order},{dim},{},{compatible},{member},{free},{}\n",
                t.len(),
                witnesses.len()
            ),
        )?,
        Format::Json => emit_json(
            out,
            &json!({
                "v": v.to_string(),
                "w": w.to_string(),
                "order": order,
                "dim": dim,
                "t_size": t.len(),
                "compatible": compatible,
                "in_Tn": member,
                "monomial_free": free,
                "verdict": verdict,
                "witnesses": witnesses.iter().map(|wit| json!({
                    "monomial": monomial(&wit.surviving),
                    "generator": wit.generator.to_string(),
                    "vanishing": wit.vanishing.iter().map(ToString::to_string).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            }),
        )?,
    }
    Ok(if free { 0 } else { 1 })
}

pub fn classify(cfg: &RunConfig, compare: bool, out: &mut impl Write) -> Result<u8> {
    let (n, order, limits) = (cfg.n, cfg.order, cfg.limits);
    let verdicts = cfg.install(|| ideal::classify_all(n, order, &limits))??;
    let mut csv = String::from("v,w,order,monomial_free,num_witnesses\n");
    for v in &verdicts {
        let _ = writeln!(
            csv,
            "{},{},{},{},{}",
            v.v, v.w, v.order, v.monomial_free, v.num_witnesses
        );
    }
    if let Some(dir) = &cfg.out_dir {
        write_file(dir, &format!("classify_n{n}_{order}.csv"), &csv)?;
    }
    if compare {
        if n != 4 || order != TermOrderKind::Antidiagonal {
            return Err(Error::InvalidArgument(
                "the table1 fixture covers n = 4 with the antidiagonal order".into(),
            ));
        }
        let cmp = compare_table1(&verdicts)?;
        let pairs = |ps: &[(Permutation, Permutation)]| -> Vec<String> {
            ps.iter().map(|(v, w)| format!("{v}/{w}")).collect()
        };
        match cfg.format {
            Format::Json => emit_json(
                out,
                &json!({
                    "covered": pairs(&cmp.covered),
                    "missing": pairs(&cmp.missing),
                    "surplus": pairs(&cmp.surplus),
                }),
            )?,
            Format::Text | Format::Csv => {
                let mut s = String::from("status,v,w\n");
                for (status, list) in [
                    ("covered", &cmp.covered),
                    ("missing", &cmp.missing),
                    ("surplus", &cmp.surplus),
                ] {
                    for (v, w) in list.iter() {
                        let _ = writeln!(s, "{status},{v},{w}");
                    }
                }
                if cfg.format == Format::Text {
                    s = format!(
                        "covered: {}\nmissing: {}\nsurplus: {}\n{}",
                        cmp.covered.len(),
                        cmp.missing.len(),
                        cmp.surplus.len(),
                        pairs(&cmp.missing)
                            .iter()
                            .map(|p| format!("missing {p}\n"))
                            .chain(pairs(&cmp.surplus).iter().map(|p| format!("surplus {p}\n")))
                            .collect::<String>()
                    );
                }
                emit(out, &s)?;
            }
        }
        return Ok(if cmp.all_covered() { 0 } else { 1 });
    }
    match cfg.format {
        Format::Json => emit_json(
            out,
            &serde_json::to_value(&verdicts).map_err(|e| Error::Internal(e.to_string()))?,
        )?,
        Format::Text | Format::Csv => emit(out, &csv)?,
    }
    Ok(0)
}

pub fn ssyt(
    cfg: &RunConfig,
    v: &Permutation,
    w: &Permutation,
    list: bool,
    chains: bool,
    out: &mut impl Write,
) -> Result<u8> {
    let mut rows = Vec::new();
    for d in 1..=cfg.max_degree {
        let ssyt = tableau::enumerate_ssyt(v, w, d)?.len();
        let standard = tableau::count_standard(v, w, d)?;
        let image = ideal::kernel_hilbert_dim(v, w, d, TermOrderKind::Diagonal, &cfg.limits)?;
        rows.push((d, ssyt, standard, image));
    }
    let listing = if list {
        tableau::enumerate_ssyt(v, w, cfg.max_degree)?
            .into_iter()
            .map(|t| {
                let standard = tableau::is_standard(&t, v, w)?;
                let chain = if chains {
                    Some((
                        tableau::min_defining_chain(&t)?,
                        tableau::max_defining_chain(&t)?,
                    ))
                } else {
                    None
                };
                Ok((t, standard, chain))
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "v": v.to_string(),
                "w": w.to_string(),
                "counts": rows.iter().map(|&(d, s, st, i)| json!({"d": d, "ssyt": s, "standard": st, "image": i})).collect::<Vec<_>>(),
                "tableaux": listing.iter().map(|(t, st, ch)| json!({
                    "tableau": t.to_string(),
                    "standard": st,
                    "min_chain": ch.as_ref().map(|c| c.0.to_string()),
                    "max_chain": ch.as_ref().map(|c| c.1.to_string()),
                })).collect::<Vec<_>>(),
            }),
        )?,
        Format::Csv => {
            let mut s = String::from("d,ssyt,standard,image\n");
            for (d, a, b, c) in &rows {
                let _ = writeln!(s, "{d},{a},{b},{c}");
            }
            emit(out, &s)?;
        }
        Format::Text => {
            let mut s = String::from("d  ssyt  standard  image\n");
            for (d, a, b, c) in &rows {
                let _ = writeln!(s, "{d:>1}  {a:>4}  {b:>8}  {c:>5}");
            }
            for (t, standard, chain) in &listing {
                let tag = if *standard {
                    "standard"
                } else {
                    "non-standard"
                };
                let _ = write!(s, "{t}  {tag}");
                if let Some((lo, hi)) = chain {
                    let _ = write!(s, "  min {lo}  max {hi}");
                }
                s.push('\n');
            }
            emit(out, &s)?;
        }
    }
    Ok(0)
}

fn matrix_json(m: &IntMatrix) -> Value {
    serde_json::to_value(m).unwrap_or(Value::Null)
}

fn point(p: &[i64]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

pub fn polytope(
    cfg: &RunConfig,
    v: &Permutation,
    w: &Permutation,
    out: &mut impl Write,
) -> Result<u8> {
    let a = restricted_map_matrix(v, w, cfg.order)?;
    let s = segre_matrix(v, w)?;
    let as_ = a.mul(&s)?;
    let poly = build_polytope(v, w, cfg.order)?;
    let lattice = match poly.lattice_points(&cfg.limits) {
        Ok(l) => Some(l),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    let points_json = json!({
        "coordinates": poly.coordinates(),
        "points": poly.points(),
        "labels": poly.point_labels(),
        "dimension": poly.affine_dim(),
        "lattice_points": lattice,
    });
    if let Some(dir) = &cfg.out_dir {
        write_file(dir, "A.csv", &a.to_csv())?;
        write_file(dir, "S.csv", &s.to_csv())?;
        write_file(dir, "AS.csv", &as_.to_csv())?;
        let pj = serde_json::to_string_pretty(&points_json)
            .map_err(|e| Error::Internal(e.to_string()))?;
        write_file(dir, "points.json", &(pj + "\n"))?;
    }
    match cfg.format {
        Format::Json => emit_json(
            out,
            &json!({
                "A": matrix_json(&a),
                "S": matrix_json(&s),
                "AS": matrix_json(&as_),
                "polytope": points_json,
            }),
        )?,
        Format::Csv => emit(out, &as_.to_csv())?,
        Format::Text => {
            let mut txt = format!(
                "A =\n{}\nS =\n{}\nAS =\n{}\n",
                a.to_text(),
                s.to_text(),
                as_.to_text()
            );
            let _ = writeln!(txt, "distinct points: {}", poly.points().len());
            for (p, labels) in poly.points().iter().zip(poly.point_labels()) {
                let _ = writeln!(txt, "  {}  {}", point(p), labels.join(" "));
            }
            let _ = writeln!(txt, "dimension: {}", poly.affine_dim());
            match &lattice {
                Some(l) => {
                    let _ = writeln!(txt, "lattice points: {}", l.len());
                    for p in l {
                        let _ = writeln!(txt, "  {}", point(p));
                    }
                }
                None => {
                    let _ = writeln!(txt, "lattice points: not computed above dimension 3");
                }
            }
            emit(out, &txt)?;
        }
    }
    Ok(0)
}

pub fn verify(cfg: &RunConfig, tier: Tier, out: &mut impl Write) -> Result<u8> {
    let results = cfg.install(|| verify::run(tier))?;
    let failed = results.iter().filter(|r| !r.passed).count();
    match cfg.format {
        Format::Json => emit_json(
            out,
            &serde_json::to_value(&results).map_err(|e| Error::Internal(e.to_string()))?,
        )?,
        Format::Csv => {
            let mut s = String::from("suite,passed,millis,detail\n");
            for r in &results {
                let _ = writeln!(
                    s,
                    "{},{},{:.3},\"{}\"",
                    r.name,
                    r.passed,
                    r.elapsed.as_secs_f64() * 1e3,
                    r.detail.replace('"', "'")
                );
            }
            emit(out, &s)?;
        }
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                let status = if r.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{status}  {:<22} {:>10.3} ms  {}",
                    r.name,
                    r.elapsed.as_secs_f64() * 1e3,
                    r.detail
                );
            }
            let _ = writeln!(
                s,
                "{tier} tier: {} of {} suites passed",
                results.len() - failed,
                results.len()
            );
            emit(out, &s)?;
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

pub fn tn(cfg: &RunConfig, out: &mut impl Write) -> Result<u8> {
    cfg.limits.check_sweep(cfg.n)?;
    let rows = bruhat_pairs(cfg.n)
        .into_iter()
        .map(|(v, w)| Ok((v, w, is_compatible(&v, &w)?, in_tn(&v, &w)?)))
        .collect::<Result<Vec<_>>>()?;
    match cfg.format {
        Format::Json => emit_json(
            out,
            &Value::Array(
                rows.iter()
                    .map(|(v, w, c, t)| json!({"v": v.to_string(), "w": w.to_string(), "compatible": c, "in_Tn": t}))
                    .collect(),
            ),
        )?,
        Format::Text | Format::Csv => {
            let mut s = String::from("v,w,compatible,in_Tn\n");
            for (v, w, c, t) in &rows {
                let _ = writeln!(s, "{v},{w},{c},{t}");
            }
            emit(out, &s)?;
        }
    }
    Ok(0)
}

pub fn weights(cfg: &RunConfig, out: &mut impl Write) -> Result<u8> {
    let rows = ideal::weight_vector(cfg.n);
    match cfg.format {
        Format::Json => emit_json(
            out,
            &Value::Array(
                rows.iter()
                    .map(|(j, wt)| json!({"subset": j.to_string(), "weight": wt}))
                    .collect(),
            ),
        )?,
        Format::Text | Format::Csv => {
            let mut s = String::new();
            for (j, wt) in &rows {
                let _ = writeln!(s, "{j},{wt}");
            }
            emit(out, &s)?;
        }
    }
    Ok(0)
}

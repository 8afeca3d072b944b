use anyhow::{anyhow, bail, Context, Result};
use bruhatkit::bruhat::{decompose_exact, relative_position_exact, CellParametrization};
use bruhatkit::hecke::{hecke_mul, HeckeElement};
use bruhatkit::lab::{randomized_checks, verify, GroupKind, LabConfig, VerificationReport};
use bruhatkit::linalg::PrimeField;
use bruhatkit::phi::phi_table;
use bruhatkit::weyl::{
    all_elements, chevalley_order, conjugacy_classes_capped, gl_order, poincare_polynomial_capped, poincare_product,
    Family, GroupSpec, WeylElement,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::{parse, table, Command, Format, GlobalOpts};

pub struct Output {
    pub text: String,
    /// False when a check reported failure (exit code 1).
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|s| format!("s{s}")).collect::<Vec<_>>().join(" ")
    }
}

fn lab_config(opts: &GlobalOpts) -> Result<LabConfig> {
    if opts.budget == 0 || opts.cell_budget == 0 {
        bail!("budgets must be positive");
    }
    Ok(LabConfig {
        budget: opts.budget,
        cell_budget: opts.cell_budget,
        allow_bad_prime: opts.allow_bad_prime,
        ..LabConfig::default()
    })
}

fn lab_kind(group: &str, dim: usize, opts: &GlobalOpts) -> Result<GroupKind> {
    let kind = GroupKind::new(group, dim)?;
    let rank = kind.weyl_spec().rank();
    if rank > opts.rank_cap {
        return Err(bruhatkit::Error::RankOverCap { rank, cap: opts.rank_cap }.into());
    }
    Ok(kind)
}

/// Adds the flags to raise when a lab run is over budget.
fn explain(e: bruhatkit::Error) -> anyhow::Error {
    match e {
        bruhatkit::Error::BudgetExceeded { required, budget } => anyhow!(
            "this run needs a budget of at least {required} elements (current limit {budget}); \
             raise it with --budget {required} or BRUHATKIT_BUDGET={required}, \
             or --cell-budget {required} if a single cell is the limit"
        ),
        bruhatkit::Error::BadPrime(q) => {
            anyhow!("q = {q} is a bad prime for this group; pass --allow-bad-prime to run it unasserted")
        }
        other => other.into(),
    }
}

pub fn run(opts: &GlobalOpts, command: Command) -> Result<Output> {
    match command {
        Command::Decompose { matrix } => decompose(opts, &matrix),
        Command::Relpos { flag1, flag2 } => relpos(opts, &flag1, &flag2),
        Command::Classes { family, rank } => classes(opts, &family, rank),
        Command::Phi { family, rank } => phi(opts, &family, rank),
        Command::Verify { group, dim, q, samples, output } => verify_cmd(opts, &group, dim, &q, samples, output),
        Command::Order { family, rank, q, gl } => order(opts, &family, rank, q, gl),
        Command::Poincare { family, rank } => poincare(opts, &family, rank),
        Command::Hecke { word1, word2, family, rank } => hecke(opts, &word1, &word2, &family, rank),
        Command::CellCount { group, dim, q } => cell_count(opts, &group, dim, q),
    }
}

fn decompose(opts: &GlobalOpts, arg: &str) -> Result<Output> {
    let g = parse::matrix_arg(arg)?;
    let fac = decompose_exact(&g)?;
    if fac.reconstruct()? != g {
        bail!("internal error: b1·ẇ·b2 does not reproduce the input");
    }
    let word = fac.w.reduced_word();
    Ok(Output::ok(match opts.format {
        Format::Json => to_json(&json!({
            "field": g.field().to_string(),
            "w": fac.w,
            "word": word,
            "length": word.len(),
            "w_rep": fac.w_rep.to_json(),
            "b1": fac.b1.to_json(),
            "b2": fac.b2.to_json(),
            "verified": true,
        }))?,
        Format::Table => format!(
            "field: {}\nw = {}  (reduced word: {}, length {})\n\nẇ =\n{}\n\nb1 =\n{}\n\nb2 =\n{}\n\nverified: b1·ẇ·b2 = g\n",
            g.field(),
            fac.w,
            word_text(&word),
            word.len(),
            fac.w_rep.to_string().trim_end(),
            fac.b1.to_string().trim_end(),
            fac.b2.to_string().trim_end()
        ),
    }))
}

fn relpos(opts: &GlobalOpts, a: &str, b: &str) -> Result<Output> {
    let f1 = parse::matrix_arg(a).context("first flag")?;
    let f2 = parse::matrix_arg(b).context("second flag")?;
    let w = relative_position_exact(&f1, &f2)?;
    let word = w.reduced_word();
    Ok(Output::ok(match opts.format {
        Format::Json => to_json(&json!({ "w": w, "word": word, "length": word.len() }))?,
        Format::Table => format!("w = {w}  (reduced word: {}, length {})\n", word_text(&word), word.len()),
    }))
}

fn classes(opts: &GlobalOpts, family: &str, rank: usize) -> Result<Output> {
    let spec = parse::spec(family, rank, opts.rank_cap)?;
    let classes = conjugacy_classes_capped(spec, opts.rank_cap)?;
    Ok(Output::ok(match opts.format {
        Format::Json => {
            let rows: Vec<_> = classes
                .iter()
                .map(|c| {
                    json!({
                        "label": c.label(),
                        "size": c.size(),
                        "d_C": c.min_length(),
                        "elliptic": c.is_elliptic(),
                        "representative": c.representative(),
                        "word": c.representative().reduced_word(),
                    })
                })
                .collect();
            to_json(&json!({ "spec": spec.to_string(), "classes": rows }))?
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = classes
                .iter()
                .map(|c| {
                    vec![
                        c.label().map_or_else(|| "-".to_string(), |l| l.to_string()),
                        c.size().to_string(),
                        c.min_length().to_string(),
                        if c.is_elliptic() { "yes" } else { "no" }.to_string(),
                        c.representative().to_string(),
                        word_text(&c.representative().reduced_word()),
                    ]
                })
                .collect();
            table::render(&["class", "|C|", "d_C", "elliptic", "representative", "word"], &rows)
        }
    }))
}

fn phi(opts: &GlobalOpts, family: &str, rank: usize) -> Result<Output> {
    let spec = parse::spec(family, rank, opts.rank_cap)?;
    if spec.family() == Family::D {
        bail!("out of scope: Φ is only implemented for types A and BC (use `classes` to list type D classes)");
    }
    let rows = phi_table(spec, opts.rank_cap)?;
    Ok(Output::ok(match opts.format {
        Format::Json => to_json(&rows)?,
        Format::Table => {
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.class_label.to_string(),
                        r.size.to_string(),
                        r.d_c.to_string(),
                        if r.elliptic { "yes" } else { "no" }.to_string(),
                        r.phi.to_string(),
                    ]
                })
                .collect();
            table::render(&["class", "|C|", "d_C", "elliptic", "Φ(C)"], &cells)
        }
    }))
}

fn verify_cmd(
    opts: &GlobalOpts,
    group: &str,
    dim: usize,
    qs: &[u64],
    samples: usize,
    output: Option<std::path::PathBuf>,
) -> Result<Output> {
    let kind = lab_kind(group, dim, opts)?;
    let config = lab_config(opts)?;
    let mut report = verify(kind, qs, &config).map_err(explain)?;
    if samples > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let checks = qs
            .iter()
            .map(|&q| randomized_checks(kind, q, samples, &mut rng, &config))
            .collect::<bruhatkit::Result<Vec<_>>>()
            .map_err(explain)?;
        report.attach_randomized(opts.seed, checks);
    }
    let json_text = to_json(&report)?;
    if let Some(path) = output {
        std::fs::write(&path, &json_text).with_context(|| format!("writing {}", path.display()))?;
    }
    let text = match opts.format {
        Format::Json => json_text,
        Format::Table => verify_table(&report),
    };
    Ok(Output { text, ok: report.passed })
}

fn verdict(pass: bool) -> String {
    if pass { "pass" } else { "FAIL" }.to_string()
}

fn verify_table(r: &VerificationReport) -> String {
    let qs: Vec<String> = r.q.iter().map(u64::to_string).collect();
    let mut out = format!("{} over q = {}\n\nuniqueness of the minimal unipotent class\n", r.group, qs.join(", "));
    let rows: Vec<Vec<String>> = r
        .theorem_a
        .iter()
        .map(|t| {
            vec![
                t.q.to_string(),
                t.class_label.as_ref().map_or_else(|| "-".to_string(), |l| l.to_string()),
                t.d_c.to_string(),
                t.cells.len().to_string(),
                t.minimum.as_ref().map_or_else(|| "-".to_string(), |m| m.to_string()),
                t.phi.to_string(),
                verdict(t.matches),
            ]
        })
        .collect();
    out.push_str(&table::render(&["q", "class", "d_C", "cells", "minimum", "Φ(C)", "result"], &rows));
    if !r.property_d.is_empty() {
        out.push_str("\nB-orbits on Φ(C) ∩ G_w\n");
        let rows: Vec<Vec<String>> = r
            .property_d
            .iter()
            .map(|p| {
                let orbits: Vec<String> = p.samples.iter().map(|s| s.b_orbits.to_string()).collect();
                vec![
                    p.class_label.as_ref().map_or_else(|| "-".to_string(), |l| l.to_string()),
                    word_text(&p.word),
                    orbits.join("/"),
                    p.growth_exponent.map_or_else(|| "-".to_string(), |e| format!("{e:.4}")),
                    p.d_c.to_string(),
                    verdict(p.passed),
                ]
            })
            .collect();
        out.push_str(&table::render(&["class", "w", "orbits", "exponent", "d_C", "result"], &rows));
    }
    out.push_str("\nintegrity\n");
    let mut rows: Vec<Vec<String>> = r
        .integrity
        .order_check
        .iter()
        .map(|c| vec![format!("|G|, q = {} ({})", c.q, c.method), c.formula.clone(), c.counted.clone(), verdict(c.pass)])
        .collect();
    rows.extend(r.integrity.unipotent_count_check.iter().map(|c| {
        vec![format!("unipotents, q = {}", c.q), c.expected.clone(), c.counted.clone(), verdict(c.pass)]
    }));
    out.push_str(&table::render(&["check", "expected", "counted", "result"], &rows));
    if !r.randomized.is_empty() {
        out.push_str(&format!("\nrandomized (seed {})\n", r.seed.unwrap_or_default()));
        let rows: Vec<Vec<String>> = r
            .randomized
            .iter()
            .map(|c| {
                vec![
                    c.q.to_string(),
                    c.samples.to_string(),
                    c.cell_invariance_failures.to_string(),
                    c.jordan_invariance_failures.to_string(),
                    verdict(c.pass),
                ]
            })
            .collect();
        out.push_str(&table::render(&["q", "samples", "cell failures", "jordan failures", "result"], &rows));
    }
    let overall = match (r.asserted, r.passed) {
        (false, _) => "not asserted (bad prime)",
        (true, true) => "PASS",
        (true, false) => "FAIL",
    };
    out.push_str(&format!("\noverall: {overall}\n"));
    out
}

fn order(opts: &GlobalOpts, family: &str, rank: usize, q: u64, gl: bool) -> Result<Output> {
    let spec = parse::spec(family, rank, usize::MAX)?;
    let (group, value) = if gl {
        if spec.family() != Family::A {
            bail!("--gl only applies to type A");
        }
        (format!("GL{}", rank + 1), gl_order(rank + 1, q)?)
    } else {
        (spec.to_string(), chevalley_order(spec, q)?)
    };
    Ok(Output::ok(match opts.format {
        Format::Json => to_json(&json!({ "group": group, "q": q, "order": value.to_string() }))?,
        Format::Table => format!("{value}\n"),
    }))
}

fn poincare(opts: &GlobalOpts, family: &str, rank: usize) -> Result<Output> {
    let spec = parse::spec(family, rank, opts.rank_cap)?;
    let counted = poincare_polynomial_capped(spec, opts.rank_cap)?;
    let product = poincare_product(spec);
    Ok(Output {
        ok: counted == product,
        text: match opts.format {
            Format::Json => to_json(&json!({
                "spec": spec.to_string(),
                "coefficients": counted,
                "polynomial": counted.to_string(),
                "product_matches": counted == product,
            }))?,
            Format::Table => format!("{counted}\n"),
        },
    })
}

fn word_element(spec: GroupSpec, word: &[usize]) -> Result<HeckeElement> {
    let mut acc = HeckeElement::one(spec);
    for &s in word.iter().rev() {
        acc = acc.left_mul_generator(s)?;
    }
    Ok(acc)
}

fn hecke(opts: &GlobalOpts, w1: &str, w2: &str, family: &str, rank: usize) -> Result<Output> {
    let spec = parse::spec(family, rank, opts.rank_cap)?;
    let a = word_element(spec, &parse::word(w1)?).context("first word")?;
    let b = word_element(spec, &parse::word(w2)?).context("second word")?;
    let product = hecke_mul(&a, &b)?;
    Ok(Output::ok(match opts.format {
        Format::Json => to_json(&product)?,
        Format::Table => format!("{product}\n"),
    }))
}

fn cell_count(opts: &GlobalOpts, group: &str, dim: usize, q: u64) -> Result<Output> {
    let kind = lab_kind(group, dim, opts)?;
    let field = PrimeField::new(q)?;
    let elements: Vec<WeylElement> = all_elements(kind.weyl_spec());
    let sizes = elements
        .par_iter()
        .map(|w| CellParametrization::new(kind.cell_kind(), field, w, opts.cell_budget).map(|c| c.len() as u128))
        .collect::<bruhatkit::Result<Vec<_>>>()
        .map_err(explain)?;
    let total: u128 = sizes.iter().sum();
    let order = kind.order(q)?;
    let matches = order == total.into();
    Ok(Output {
        ok: matches,
        text: match opts.format {
            Format::Json => {
                let cells: Vec<_> = elements
                    .iter()
                    .zip(&sizes)
                    .map(|(w, n)| json!({ "w": w, "word": w.reduced_word(), "length": w.length(), "size": n.to_string() }))
                    .collect();
                to_json(&json!({
                    "group": kind.to_string(),
                    "q": q,
                    "borel_order": kind.borel_order(q).to_string(),
                    "cells": cells,
                    "total": total.to_string(),
                    "order": order.to_string(),
                    "matches": matches,
                }))?
            }
            Format::Table => {
                let rows: Vec<Vec<String>> = elements
                    .iter()
                    .zip(&sizes)
                    .map(|(w, n)| vec![w.to_string(), word_text(&w.reduced_word()), w.length().to_string(), n.to_string()])
                    .collect();
                let mut out = table::render(&["w", "word", "length", "|G_w|"], &rows);
                out.push_str(&format!("\ntotal {total}, |{kind}(F_{q})| = {order}\n"));
                out
            }
        },
    })
}

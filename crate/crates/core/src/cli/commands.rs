use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::{reproduce::Row, CliError, Settings, EXIT_DEVIATION, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_OK};
use crate::algebra::{FieldValue, Rational, RationalFunction, Scalar};
use crate::braid::{parse_corpus, word_file_lines, BraidWord, GroupKind};
use crate::checker::{
    check_factorization, check_forbidden, compare_operators, verify_presentation, RelationVerdict, Variant,
};
use crate::cluster::{build_quiver, parse_script, ExchangeMatrix, Seed, SeedFile, YSeed};
use crate::representation::{
    apply_word, candidate_bases, default_base, invariant as compute_invariant, EvalError, InvariantReport, Point,
    MAX_BASE_RETRIES,
};

fn io_err(e: std::io::Error) -> CliError {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        // the reader went away, e.g. `| head`; nothing left to report
        return CliError {
            code: super::EXIT_OK,
            message: String::new(),
        };
    }
    CliError::invalid(format!("write failed: {e}"))
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    let text = serde_json::to_string(value).map_err(|e| CliError::invalid(e.to_string()))?;
    writeln!(out, "{text}").map_err(io_err)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::invalid(format!("{}: {e}", path.display())))
}

fn render_report(r: &InvariantReport) -> String {
    let mut s = format!(
        "{} in {}{}\nbase  {}\nimage {}",
        display_word(&r.word),
        r.group,
        r.n,
        r.base,
        r.image
    );
    if r.base_retries > 0 {
        s.push_str(&format!("\n(requested base was singular; retry {})", r.base_retries));
    }
    s
}

fn display_word(w: &str) -> &str {
    if w.is_empty() {
        "1"
    } else {
        w
    }
}

/// One corpus or word-file entry: its label, and the report or the error.
struct Item {
    label: (&'static str, Value),
    result: Result<InvariantReport, CliError>,
}

fn evaluate(settings: &Settings, word: Result<BraidWord, CliError>) -> Result<InvariantReport, CliError> {
    let word = word?;
    Ok(compute_invariant(&word, settings.base.as_ref(), settings.seed)?)
}

/// 1 if any entry was invalid, else 2 if any was singular, else 0.
fn combined_code(items: &[Item]) -> i32 {
    let codes: Vec<i32> = items
        .iter()
        .filter_map(|i| i.result.as_ref().err().map(|e| e.code))
        .collect();
    if codes.contains(&EXIT_INVALID) {
        EXIT_INVALID
    } else {
        codes.into_iter().max().unwrap_or(EXIT_OK)
    }
}

pub(super) fn invariant(
    settings: &Settings,
    word: Option<&str>,
    word_file: Option<&Path>,
    corpus: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let items: Vec<Item> = if let Some(path) = corpus {
        let entries = parse_corpus(&read(path)?)?;
        entries
            .par_iter()
            .map(|e| Item {
                label: ("name", Value::from(e.name.clone())),
                result: evaluate(settings, e.parse().map_err(CliError::from)),
            })
            .collect()
    } else if let Some(path) = word_file {
        let (group, n) = settings.space()?;
        let text = read(path)?;
        word_file_lines(&text)
            .par_iter()
            .map(|&(line, w)| Item {
                label: ("line", Value::from(line)),
                result: evaluate(settings, BraidWord::parse(w, n, group).map_err(CliError::from)),
            })
            .collect()
    } else {
        let text = word.ok_or_else(|| CliError::invalid("one of --word, --word-file, --corpus is required"))?;
        let (group, n) = settings.space()?;
        let report = evaluate(settings, BraidWord::parse(text, n, group).map_err(CliError::from))?;
        if settings.json() {
            emit_json(out, &report)?;
        } else {
            writeln!(out, "{}", render_report(&report)).map_err(io_err)?;
        }
        return Ok(EXIT_OK);
    };

    if settings.json() {
        let rows: Vec<Value> = items
            .iter()
            .map(|it| {
                let mut v = match &it.result {
                    Ok(r) => serde_json::to_value(r).expect("report serializes"),
                    Err(e) => json!({ "error": e.message }),
                };
                v.as_object_mut()
                    .expect("object")
                    .insert(it.label.0.into(), it.label.1.clone());
                v
            })
            .collect();
        emit_json(out, &rows)?;
    } else {
        for it in &items {
            let label = format!("{} {}", it.label.0, it.label.1);
            match &it.result {
                Ok(r) => writeln!(out, "[{label}] {}", render_report(r).replace('\n', "\n    ")),
                Err(e) => writeln!(out, "[{label}] error: {}", e.message),
            }
            .map_err(io_err)?;
        }
    }
    Ok(combined_code(&items))
}

#[derive(Serialize)]
struct Distinction {
    group: GroupKind,
    n: usize,
    word1: String,
    word2: String,
    base: Point<Rational>,
    base_retries: usize,
    image1: Point<Rational>,
    image2: Point<Rational>,
    verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    symbolic: Option<RelationVerdict>,
}

pub(super) fn distinguish(
    settings: &Settings,
    text1: &str,
    text2: &str,
    symbolic: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let (group, n) = settings.space()?;
    let w1 = BraidWord::parse(text1, n, group)?;
    let w2 = BraidWord::parse(text2, n, group)?;
    let first = settings.base.clone().unwrap_or_else(|| default_base(group, n));
    let mut found = None;
    for (retry, base) in candidate_bases(first, settings.seed).enumerate() {
        match (apply_word(&w1, &base), apply_word(&w2, &base)) {
            (Ok(a), Ok(b)) => {
                found = Some((retry, base, a, b));
                break;
            }
            (Err(e @ EvalError::ArityMismatch { .. }), _) | (_, Err(e @ EvalError::ArityMismatch { .. })) => {
                return Err(e.into())
            }
            _ => {}
        }
    }
    let (retries, base, image1, image2) =
        found.ok_or_else(|| CliError::from(EvalError::Exhausted(MAX_BASE_RETRIES)))?;

    let mut report = Distinction {
        group,
        n,
        word1: w1.to_string(),
        word2: w2.to_string(),
        base,
        base_retries: retries,
        verdict: "distinct",
        image1,
        image2,
        symbolic: None,
    };
    let code = if report.image1 != report.image2 {
        EXIT_OK
    } else if symbolic {
        let v = compare_operators(&w1, &w2, settings.limits)?;
        let equal = v.holds;
        report.symbolic = Some(v);
        if equal {
            report.verdict = "equal-in-image";
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        }
    } else {
        report.verdict = "inconclusive-at-base";
        EXIT_INCONCLUSIVE
    };

    if settings.json() {
        emit_json(out, &report)?;
    } else {
        let mut text = format!(
            "{}\n  base   {}\n  image1 {}\n  image2 {}",
            report.verdict, report.base, report.image1, report.image2
        );
        if let Some(w) = report.symbolic.as_ref().and_then(|v| v.witness.as_ref()) {
            text.push_str(&format!(
                "\n  differs at coordinate {}: {} vs {}",
                w.coordinate, w.lhs, w.rhs
            ));
        }
        writeln!(out, "{text}").map_err(io_err)?;
    }
    Ok(code)
}

#[derive(Serialize)]
struct FactorizationResult {
    variant: Variant,
    holds: bool,
}

#[derive(Serialize)]
struct VerifyReport {
    group: GroupKind,
    n: usize,
    passed: bool,
    relations: Vec<RelationVerdict>,
    forbidden: Vec<RelationVerdict>,
    factorization: Vec<FactorizationResult>,
}

pub(super) fn verify(settings: &Settings, out: &mut dyn Write) -> Result<i32, CliError> {
    let (group, n) = settings.space()?;
    let relations = verify_presentation(group, n, settings.limits)?;
    let mut forbidden = Vec::new();
    let mut factorization = Vec::new();
    if group.has_virtual() {
        for i in 1..n.saturating_sub(1) {
            for v in Variant::BOTH {
                forbidden.push(check_forbidden(group, n, i, v)?);
            }
        }
        factorization = Variant::BOTH
            .iter()
            .map(|&variant| FactorizationResult {
                variant,
                holds: check_factorization(variant),
            })
            .collect();
    }
    let passed = relations.iter().all(|r| r.holds)
        && forbidden.iter().all(RelationVerdict::refuted_as_expected)
        && factorization.iter().all(|f| f.holds);
    let report = VerifyReport {
        group,
        n,
        passed,
        relations,
        forbidden,
        factorization,
    };
    if settings.json() {
        emit_json(out, &report)?;
    } else {
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        let mut lines = Vec::new();
        for r in &report.relations {
            lines.push(format!("{}  {}", mark(r.holds), r.relation));
        }
        for r in &report.forbidden {
            let slices = r.slices.as_ref().map_or(String::new(), |s| {
                let eq = s.iter().filter(|x| x.equal).count();
                format!(", equal on {eq}/{} slices", s.len())
            });
            lines.push(format!(
                "{}  {} is refuted{}",
                mark(r.refuted_as_expected()),
                r.relation,
                slices
            ));
        }
        for f in &report.factorization {
            lines.push(format!("{}  factorization identity ({})", mark(f.holds), f.variant));
        }
        lines.push(format!(
            "{} {}{}",
            if passed { "all checks pass for" } else { "deviation in" },
            group,
            n
        ));
        writeln!(out, "{}", lines.join("\n")).map_err(io_err)?;
    }
    Ok(if passed { EXIT_OK } else { EXIT_DEVIATION })
}

#[derive(Serialize)]
struct SeedOutput {
    n_vertices: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    y: Option<Vec<String>>,
    #[serde(rename = "B")]
    b: Vec<Vec<i64>>,
}

fn seed_output<F: Scalar>(values: &[F], b: &ExchangeMatrix, as_y: bool) -> SeedOutput {
    let symbol = if as_y { 'y' } else { 'x' };
    let shown: Vec<String> = values
        .iter()
        .map(|v| match v.clone().into_field_value() {
            FieldValue::Function(f) => f.display_with(symbol),
            other => other.to_string(),
        })
        .collect();
    SeedOutput {
        n_vertices: b.n_vertices(),
        x: (!as_y).then(|| shown.clone()),
        y: as_y.then_some(shown),
        b: b.rows(),
    }
}

fn run_mutation<F: Scalar>(
    values: Vec<F>,
    b: ExchangeMatrix,
    from_y: bool,
    to_y: bool,
    script: &[usize],
) -> Result<SeedOutput, CliError> {
    if from_y || to_y {
        let seed = if from_y {
            YSeed::new(values, b)?
        } else {
            YSeed::from_seed(&Seed::new(values, b)?)?
        };
        let done = seed.mutate_sequence(script)?;
        Ok(seed_output(done.y(), done.matrix(), true))
    } else {
        let done = Seed::new(values, b)?.mutate_sequence(script)?;
        Ok(seed_output(done.x(), done.matrix(), false))
    }
}

pub(super) fn mutate(
    settings: &Settings,
    seed_file: Option<&Path>,
    quiver: Option<usize>,
    script: &str,
    y: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let script = parse_script(script)?;
    let result = match (seed_file, quiver) {
        (Some(path), _) => {
            let file = SeedFile::from_json(&read(path)?)?;
            let from_y = file.is_y();
            match file.rational_values() {
                Some(vals) => run_mutation(vals, file.b.clone(), from_y, y, &script)?,
                None => run_mutation(file.symbolic_values(), file.b.clone(), from_y, y, &script)?,
            }
        }
        (None, Some(n)) => {
            let b = build_quiver(n)?;
            let vars: Vec<RationalFunction> = (1..=b.n_vertices() as u32).map(RationalFunction::var).collect();
            run_mutation(vars, b, y, y, &script)?
        }
        (None, None) => return Err(CliError::invalid("one of --seed-file, --quiver is required")),
    };
    if settings.json() {
        emit_json(out, &result)?;
    } else {
        let (key, values) = match (&result.x, &result.y) {
            (Some(x), _) => ("x", x),
            (_, Some(y)) => ("y", y),
            _ => unreachable!("one of x, y is set"),
        };
        let vals: Vec<String> = values
            .iter()
            .enumerate()
            .map(|(i, v)| format!("{key}{} = {v}", i + 1))
            .collect();
        let rows: Vec<String> = result
            .b
            .iter()
            .map(|r| r.iter().map(|e| format!("{e:>3}")).collect::<String>())
            .collect();
        writeln!(out, "{}\nB =\n{}", vals.join("\n"), rows.join("\n")).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

pub(super) fn reproduce(settings: &Settings, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = super::reproduce();
    write_table(settings, &rows, out)
}

pub(super) fn write_table(settings: &Settings, rows: &[Row], out: &mut dyn Write) -> Result<i32, CliError> {
    if settings.json() {
        emit_json(out, &rows)?;
    } else {
        let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in rows {
            writeln!(
                out,
                "{}  {:<width$}  {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.detail
            )
            .map_err(io_err)?;
        }
    }
    let failed: Vec<&str> = rows.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
    if failed.is_empty() {
        Ok(EXIT_OK)
    } else {
        Err(CliError {
            code: EXIT_DEVIATION,
            message: format!("{} failing rows: {}", failed.len(), failed.join("; ")),
        })
    }
}

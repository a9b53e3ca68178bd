use partition_kernels::compositions;
use partition_kernels::kernels::{self, BRUTE_FORCE_SOFT_LIMIT};
use partition_kernels::sequences::{self, CoefficientTable, Provenance};
use partition_kernels::specfun::{self, EvalReport, TruncationParams};
use partition_kernels::{ExactRational, KernelKind, Method};
use serde::Serialize;

use crate::{
    cache, CompositionsArgs, EvalArgs, Failure, Format, Function, KernelArgs, SeqArgs, TableArgs,
};

#[derive(Serialize)]
struct TableRow {
    n: usize,
    value: ExactRational,
    method: &'static str,
    kind: &'static str,
}

#[derive(Serialize)]
struct SeqRow {
    index: usize,
    value: ExactRational,
}

pub fn guard_brute(n: usize, force: bool) -> Result<(), Failure> {
    if n > BRUTE_FORCE_SOFT_LIMIT && !force {
        return Err(Failure::TooLarge(format!(
            "enumerating compositions of n = {n} visits 2^{} terms; \
             pass --force to run beyond n = {BRUTE_FORCE_SOFT_LIMIT}",
            n - 1
        )));
    }
    Ok(())
}

fn positive(name: &str, v: usize) -> Result<(), Failure> {
    if v == 0 {
        return Err(Failure::Usage(format!("--{name} must be at least 1")));
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(v).map_err(|e| Failure::Usage(e.to_string()))
}

/// K(1..=upto) by `method`, reusing the on-disk table for the recursion.
pub fn kernel_values(
    kind: KernelKind,
    upto: usize,
    method: Method,
) -> Result<Vec<ExactRational>, Failure> {
    match method {
        Method::Recursion => {
            let cache = cache::open(kind);
            let loaded = cache.len();
            let values = cache.values_upto(upto);
            cache::store(&cache, loaded);
            Ok(values.into_iter().skip(1).collect())
        }
        _ => (1..=upto)
            .map(|n| kernels::kernel(kind, n, method).map_err(Failure::from))
            .collect(),
    }
}

pub fn table(a: TableArgs) -> Result<(), Failure> {
    positive("upto", a.upto)?;
    let kind = KernelKind::from(a.kind);
    let method = Method::from(a.method);
    if method == Method::Compositions {
        guard_brute(a.upto, a.force)?;
    }
    let values = kernel_values(kind, a.upto, method)?;
    match a.format {
        Format::Plain => {
            for (i, v) in values.iter().enumerate() {
                outln!("{} {v}", i + 1);
            }
        }
        Format::Csv => {
            for (i, v) in values.iter().enumerate() {
                outln!("{},{v}", i + 1);
            }
        }
        Format::Json => {
            let rows: Vec<TableRow> = values
                .into_iter()
                .enumerate()
                .map(|(i, value)| TableRow {
                    n: i + 1,
                    value,
                    method: method.name(),
                    kind: kind.name(),
                })
                .collect();
            outln!("{}", json(&rows)?);
        }
    }
    Ok(())
}

pub fn kernel(a: KernelArgs) -> Result<(), Failure> {
    let kind = KernelKind::from(a.kind);
    let method = Method::from(a.method);
    let value = match method {
        Method::Recursion => {
            let cache = cache::open(kind);
            let loaded = cache.len();
            let v = cache.get(a.n);
            cache::store(&cache, loaded);
            v
        }
        Method::Compositions => {
            guard_brute(a.n, a.force)?;
            kernels::kernel(kind, a.n, method)?
        }
        Method::Determinant => kernels::kernel(kind, a.n, method)?,
    };
    outln!("{value}");
    Ok(())
}

fn print_sequence(rows: Vec<SeqRow>, format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => outln!("{}", json(&rows)?),
        Format::Csv => {
            for r in rows {
                outln!("{},{}", r.index, r.value);
            }
        }
        Format::Plain => {
            for r in rows {
                outln!("{} {}", r.index, r.value);
            }
        }
    }
    Ok(())
}

/// Rows are labelled with the subscript of the number, `2n`.
fn even_index_sequence(
    kind: KernelKind,
    a: &SeqArgs,
    f: fn(usize, &partition_kernels::KernelCache) -> Result<ExactRational, partition_kernels::Error>,
) -> Result<(), Failure> {
    positive("upto", a.upto)?;
    let cache = cache::open(kind);
    let loaded = cache.len();
    let rows = (1..=a.upto)
        .map(|n| Ok(SeqRow { index: 2 * n, value: f(n, &cache)? }))
        .collect::<Result<Vec<_>, Failure>>()?;
    cache::store(&cache, loaded);
    print_sequence(rows, a.format)
}

pub fn bernoulli(a: SeqArgs) -> Result<(), Failure> {
    even_index_sequence(KernelKind::B, &a, sequences::bernoulli)
}

pub fn euler(a: SeqArgs) -> Result<(), Failure> {
    even_index_sequence(KernelKind::E, &a, sequences::euler)
}

pub fn a_coeff(a: SeqArgs) -> Result<(), Failure> {
    positive("upto", a.upto)?;
    let cache = cache::open(KernelKind::B);
    let loaded = cache.len();
    let table = CoefficientTable::build(a.upto, Provenance::FromKb, &cache)?;
    cache::store(&cache, loaded);
    let rows = table
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| SeqRow { index: i + 1, value: v.clone() })
        .collect();
    print_sequence(rows, a.format)
}

pub fn eval(a: EvalArgs) -> Result<(), Failure> {
    let params = TruncationParams::new(a.terms, a.digits)?;
    let report = match a.function {
        Function::Gamma => specfun::eval_gamma(a.x, &params)?,
        Function::Digamma => specfun::eval_digamma(a.x, &params)?,
        Function::Polygamma => {
            let y = a.y.ok_or_else(|| Failure::Usage("polygamma needs --y".into()))?;
            specfun::eval_polygamma(y, a.x, &params)?
        }
        Function::Hurwitz => {
            let m0 = a.m0.ok_or_else(|| Failure::Usage("hurwitz needs --m0".into()))?;
            specfun::eval_hurwitz_expansion(m0, a.x, &params)?
        }
    };
    match a.format {
        Format::Json => outln!("{}", json(&report)?),
        Format::Plain | Format::Csv => print_report_lines(&report, a.format)?,
    }
    Ok(())
}

fn print_report_lines(report: &EvalReport, format: Format) -> Result<(), Failure> {
    let v = serde_json::to_value(report).map_err(|e| Failure::Usage(e.to_string()))?;
    let sep = if format == Format::Csv { "," } else { " " };
    for key in ["value", "terms", "bound", "reference", "abs_error"] {
        let field = match &v[key] {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Null => String::new(),
            other => other.to_string(),
        };
        outln!("{key}{sep}{field}");
    }
    Ok(())
}

pub fn compositions(a: CompositionsArgs) -> Result<(), Failure> {
    positive("n", a.n)?;
    guard_brute(a.n, a.force)?;
    let mut it = compositions::enumerate(a.n)?;
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    use std::io::Write;
    while let Some(parts) = it.next_parts() {
        let line = parts
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",");
        if writeln!(out, "{line}").is_err() {
            break;
        }
    }
    let _ = out.flush();
    Ok(())
}

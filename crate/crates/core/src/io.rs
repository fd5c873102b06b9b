//! Matrix and instance serialization.
//!
//! CSV matrices are header-free and row-major; entries are decimals or "p/q"
//! fractions. JSON matrices are arrays of arrays with rationals as "p/q"
//! strings and complex values as [re, im] pairs.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::parseval::{FunctionOnUnitInterval, ParsevalInstance, TruncationWindow};
use crate::scalar::{parse_rational, Rational, Scalar};
use num_complex::Complex64;
use serde::Deserialize;
use serde_json::Value;

fn parse_cells<T>(text: &str, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<Vec<T>>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| line.split(',').map(|cell| parse(cell.trim())).collect())
        .collect()
}

pub fn parse_rational_csv(text: &str) -> Result<Matrix<Rational>> {
    let rows = parse_cells(text, |cell| {
        parse_rational(cell).ok_or_else(|| Error::Parse(format!("bad rational entry {cell:?}")))
    })?;
    Matrix::from_rows(rows)
}

pub fn parse_f64_csv(text: &str) -> Result<Matrix<f64>> {
    let rows = parse_cells(text, |cell| {
        cell.parse::<f64>()
            .map_err(|_| Error::Parse(format!("bad float entry {cell:?}")))
    })?;
    Matrix::from_rows(rows)
}

pub fn write_csv<T: Scalar>(m: &Matrix<T>) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let cells: Vec<String> = m.row(r).iter().map(|v| format!("{v}")).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn json_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => {
            parse_rational(s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}")))
        }
        Value::Number(n) => {
            parse_rational(&n.to_string()).ok_or_else(|| Error::Parse(format!("bad rational {n}")))
        }
        other => Err(Error::Parse(format!("expected rational, got {other}"))),
    }
}

fn json_f64(v: &Value) -> Result<f64> {
    v.as_f64()
        .ok_or_else(|| Error::Parse(format!("expected number, got {v}")))
}

fn json_complex(v: &Value) -> Result<Complex64> {
    match v {
        Value::Number(_) => Ok(Complex64::new(json_f64(v)?, 0.0)),
        Value::Array(pair) if pair.len() == 2 => Ok(Complex64::new(
            json_f64(&pair[0])?,
            json_f64(&pair[1])?,
        )),
        other => Err(Error::Parse(format!("expected [re, im], got {other}"))),
    }
}

fn json_matrix<T>(text: &str, entry: impl Fn(&Value) -> Result<T>) -> Result<Vec<Vec<T>>> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
    let rows = value
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array of rows".into()))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("expected an array row".into()))?
                .iter()
                .map(&entry)
                .collect()
        })
        .collect()
}

pub fn parse_rational_json(text: &str) -> Result<Matrix<Rational>> {
    Matrix::from_rows(json_matrix(text, json_rational)?)
}

pub fn parse_f64_json(text: &str) -> Result<Matrix<f64>> {
    Matrix::from_rows(json_matrix(text, json_f64)?)
}

pub fn parse_complex_json(text: &str) -> Result<Matrix<Complex64>> {
    Matrix::from_rows(json_matrix(text, json_complex)?)
}

/// Load a matrix from a path, picking the format from the extension
/// (".json" or CSV otherwise).
pub fn load_rational_matrix(path: &std::path::Path) -> Result<Matrix<Rational>> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        parse_rational_json(&text)
    } else {
        parse_rational_csv(&text)
    }
}

pub fn load_f64_matrix(path: &std::path::Path) -> Result<Matrix<f64>> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        parse_f64_json(&text)
    } else {
        parse_f64_csv(&text)
    }
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum FunctionSpec {
    Basis { m: i64 },
    PolyT { degree: u8 },
    Trig { coeffs: Vec<(i64, f64, f64)> },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceSpec {
    n: usize,
    #[serde(rename = "M")]
    m: i64,
    #[serde(rename = "T", default = "default_samples")]
    t: usize,
    a: Vec<FunctionSpec>,
    b: Vec<FunctionSpec>,
}

fn default_samples() -> usize {
    4096
}

fn build_function(spec: FunctionSpec) -> Result<FunctionOnUnitInterval> {
    Ok(match spec {
        FunctionSpec::Basis { m } => FunctionOnUnitInterval::basis(m),
        FunctionSpec::PolyT { degree } => FunctionOnUnitInterval::poly_t(degree)?,
        FunctionSpec::Trig { coeffs } => FunctionOnUnitInterval::trig(
            coeffs
                .into_iter()
                .map(|(k, re, im)| (k, Complex64::new(re, im)))
                .collect(),
        ),
    })
}

/// Parse the instance JSON: { "n": .., "M": .., "T": .., "a": [..], "b": [..] }.
pub fn parse_instance_json(text: &str) -> Result<ParsevalInstance> {
    let spec: InstanceSpec =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid instance: {e}")))?;
    if spec.a.len() != spec.n || spec.b.len() != spec.n {
        return Err(Error::Parse(format!(
            "instance declares n = {} but has {} a-functions and {} b-functions",
            spec.n,
            spec.a.len(),
            spec.b.len()
        )));
    }
    let a = spec.a.into_iter().map(build_function).collect::<Result<_>>()?;
    let b = spec.b.into_iter().map(build_function).collect::<Result<_>>()?;
    ParsevalInstance::new(a, b, TruncationWindow::new(spec.m), spec.t)
}

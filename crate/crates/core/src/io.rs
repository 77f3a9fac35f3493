//! File formats: matrix JSON, polynomial JSON, point CSV.
//!
//! Scalars are JSON integers or strings `"num"` / `"num/den"` with
//! `den > 0` and `gcd(num, den) = 1`. Matrices look like
//! `{"ring": "Q" | {"Fp": p}, "rows": n, "cols": m, "entries": [[...], ...]}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde_json::{json, Map, Value};

use crate::constructions::PointSet;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField, Rationals, RingSpec};
use crate::matrix::ExactMatrix;
use crate::poly::{MultiPoly, UniPoly};
use crate::{FpMatrix, QMatrix};

/// Strict rational syntax: `-3`, `7/2`. Rejects `2/4`, `1/-2`, `1/0`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>().map_err(|_| Error::parse(format!("{t:?} is not an integer")))
    };
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(int(s)?)),
        Some((n, d)) => {
            let (n, d) = (int(n)?, int(d)?);
            if !d.is_positive() {
                return Err(Error::parse(format!("denominator of {s:?} must be positive")));
            }
            if !n.gcd(&d).is_one() {
                return Err(Error::parse(format!("fraction {s:?} is not reduced")));
            }
            Ok(BigRational::new_raw(n, d))
        }
    }
}

/// JSON form of a scalar: a number when it is an `i64` integer, else a string.
pub fn rational_to_json(q: &BigRational) -> Value {
    if q.is_integer() {
        if let Some(v) = q.numer().to_i64() {
            return json!(v);
        }
        return json!(q.numer().to_string());
    }
    json!(format!("{}/{}", q.numer(), q.denom()))
}

pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from_integer(i.into()))
            } else if let Some(u) = n.as_u64() {
                Ok(BigRational::from_integer(u.into()))
            } else {
                Err(Error::parse(format!("{n} is not an exact integer")))
            }
        }
        Value::String(s) => parse_rational(s),
        other => Err(Error::parse(format!("{other} is not a scalar"))),
    }
}

fn elem_from_json<F: Field>(field: &F, v: &Value) -> Result<F::Elem> {
    let q = rational_from_json(v)?;
    match field.spec() {
        RingSpec::Rationals => field.from_rational(&q),
        RingSpec::PrimeField(p) => {
            let in_range = q.is_integer() && !q.is_negative() && q.numer() < &BigInt::from(p);
            if !in_range {
                return Err(Error::parse(format!("{q} is not a residue in [0, {p})")));
            }
            field.from_rational(&q)
        }
    }
}

fn elem_to_json<F: Field>(field: &F, e: &F::Elem) -> Value {
    rational_to_json(&field.to_rational(e))
}

/// A matrix whose field is only known at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyMatrix {
    Q(QMatrix),
    Fp(FpMatrix),
}

impl AnyMatrix {
    pub fn rank(&self) -> usize {
        match self {
            AnyMatrix::Q(m) => m.rank(),
            AnyMatrix::Fp(m) => m.rank(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyMatrix::Q(m) => matrix_to_json(m),
            AnyMatrix::Fp(m) => matrix_to_json(m),
        }
    }
}

pub fn ring_to_json(spec: RingSpec) -> Value {
    match spec {
        RingSpec::Rationals => json!("Q"),
        RingSpec::PrimeField(p) => json!({ "Fp": p }),
    }
}

pub fn ring_from_json(v: &Value) -> Result<RingSpec> {
    match v {
        Value::String(s) if s == "Q" => Ok(RingSpec::Rationals),
        Value::Object(o) => {
            let p = o
                .get("Fp")
                .and_then(Value::as_u64)
                .ok_or_else(|| Error::parse("ring object must be {\"Fp\": p}"))?;
            Ok(RingSpec::PrimeField(PrimeField::new(p)?.modulus()))
        }
        other => Err(Error::parse(format!("unknown ring {other}"))),
    }
}

pub fn matrix_to_json<F: Field>(m: &ExactMatrix<F>) -> Value {
    let f = m.field();
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(|e| elem_to_json(f, e)).collect()))
        .collect();
    json!({
        "ring": ring_to_json(f.spec()),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

fn matrix_in<F: Field>(field: F, obj: &Map<String, Value>) -> Result<ExactMatrix<F>> {
    let dim = |key: &str| -> Result<usize> {
        obj.get(key)
            .and_then(Value::as_u64)
            .map(|v| v as usize)
            .ok_or_else(|| Error::parse(format!("missing or invalid {key:?}")))
    };
    let (rows, cols) = (dim("rows")?, dim("cols")?);
    let data = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("missing \"entries\" array"))?;
    if data.len() != rows {
        return Err(Error::parse(format!("{} entry rows, header says {rows}", data.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for (i, row) in data.iter().enumerate() {
        let row = row.as_array().ok_or_else(|| Error::parse(format!("entry row {i} is not an array")))?;
        if row.len() != cols {
            return Err(Error::parse(format!("entry row {i} has {} values, header says {cols}", row.len())));
        }
        for (j, v) in row.iter().enumerate() {
            entries.push(elem_from_json(&field, v).map_err(|e| Error::parse(format!("entry ({i}, {j}): {e}")))?);
        }
    }
    ExactMatrix::new(field, rows, cols, entries)
}

pub fn matrix_from_json(v: &Value) -> Result<AnyMatrix> {
    let obj = v.as_object().ok_or_else(|| Error::parse("matrix document must be an object"))?;
    let ring = ring_from_json(obj.get("ring").ok_or_else(|| Error::parse("missing \"ring\""))?)?;
    Ok(match ring {
        RingSpec::Rationals => AnyMatrix::Q(matrix_in(Rationals, obj)?),
        RingSpec::PrimeField(p) => AnyMatrix::Fp(matrix_in(PrimeField::new(p)?, obj)?),
    })
}

pub fn parse_matrix(text: &str) -> Result<AnyMatrix> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::parse(e.to_string()))?;
    matrix_from_json(&v)
}

/// Parses a rational matrix; fails on `F_p` documents.
pub fn parse_q_matrix(text: &str) -> Result<QMatrix> {
    match parse_matrix(text)? {
        AnyMatrix::Q(m) => Ok(m),
        AnyMatrix::Fp(m) => Err(Error::RingMismatch {
            left: "Q".into(),
            right: m.field().spec().to_string(),
        }),
    }
}

pub fn uni_poly_to_json<F: Field>(p: &UniPoly<F>) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(|c| elem_to_json(p.field(), c)).collect::<Vec<_>>() })
}

pub fn uni_poly_from_json<F: Field>(field: F, v: &Value) -> Result<UniPoly<F>> {
    let coeffs = v
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("polynomial must have a \"coeffs\" array"))?
        .iter()
        .map(|c| elem_from_json(&field, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::new(field, coeffs))
}

pub fn multi_poly_to_json<F: Field>(p: &MultiPoly<F>) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(e, c)| json!({ "exp": e, "coeff": elem_to_json(p.field(), c) }))
        .collect();
    json!({ "vars": p.vars(), "terms": terms })
}

pub fn multi_poly_from_json<F: Field>(field: F, v: &Value) -> Result<MultiPoly<F>> {
    let vars = v
        .get("vars")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::parse("polynomial must have \"vars\""))? as usize;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::parse("polynomial must have a \"terms\" array"))?
        .iter()
        .map(|t| {
            let exp = t
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::parse("term without \"exp\""))?
                .iter()
                .map(|e| e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| Error::parse("bad exponent")))
                .collect::<Result<Vec<u32>>>()?;
            let coeff = elem_from_json(&field, t.get("coeff").ok_or_else(|| Error::parse("term without \"coeff\""))?)?;
            Ok((exp, coeff))
        })
        .collect::<Result<Vec<_>>>()?;
    MultiPoly::new(field, vars, terms).map_err(|e| Error::parse(e.to_string()))
}

/// One point per line, comma-separated rational coordinates. Blank lines
/// and lines starting with `#` are skipped.
pub fn parse_points_csv(text: &str) -> Result<PointSet> {
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let coords = line
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::parse(format!("line {}: {e}", lineno + 1)))?;
        points.push(coords);
    }
    PointSet::new(points)
}

pub fn points_to_csv(points: &PointSet) -> String {
    let mut out = String::new();
    for p in points.points() {
        let row: Vec<String> = p.iter().map(ToString::to_string).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

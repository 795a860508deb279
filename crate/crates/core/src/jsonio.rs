//! The JSON exchange formats used repo-wide.
//!
//! Field entries are strings "a/b" (lowest terms, positive denominator)
//! over Q and plain residues in [0, p) over F_p; every object carries its
//! field so files are self-describing.

use crate::classical::ModelKind;
use crate::compalg::{AlgKind, AlgebraTag, CompElement};
use crate::cubic27::{var_label, IncidenceStructure};
use crate::error::{AlgError, Result};
use crate::field::{FieldContext, Scalar};
use crate::jordan::{HermitianMatrix, RankOneClass};
use crate::linalg::Matrix;
use crate::rightmod::SubmoduleCensus;
use serde_json::{json, Map, Value};

pub fn context_fields(ctx: FieldContext, obj: &mut Map<String, Value>) {
    match ctx {
        FieldContext::Rationals => {
            obj.insert("field".into(), json!("q"));
        }
        FieldContext::Prime(p) => {
            obj.insert("field".into(), json!("fp"));
            obj.insert("p".into(), json!(p));
        }
    }
}

pub fn context_from(obj: &Map<String, Value>) -> Result<FieldContext> {
    match obj.get("field").and_then(Value::as_str) {
        Some("q") => Ok(FieldContext::Rationals),
        Some("fp") => {
            let p = obj
                .get("p")
                .and_then(Value::as_u64)
                .ok_or_else(|| AlgError::Invalid("missing prime p".into()))?;
            FieldContext::prime(p)
        }
        _ => Err(AlgError::Invalid("field must be \"q\" or \"fp\"".into())),
    }
}

pub fn scalar_to_value(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(_) => json!(s.to_display()),
        Scalar::Mod { value, .. } => json!(value),
    }
}

pub fn scalar_from_value(ctx: FieldContext, v: &Value) -> Result<Scalar> {
    match (ctx, v) {
        (FieldContext::Rationals, Value::String(s)) => Scalar::parse(ctx, s),
        (FieldContext::Rationals, Value::Number(n)) => {
            let i = n
                .as_i64()
                .ok_or_else(|| AlgError::Invalid(format!("bad rational {n}")))?;
            Ok(Scalar::from_i64(ctx, i))
        }
        (FieldContext::Prime(_), Value::Number(n)) => {
            let i = n
                .as_u64()
                .ok_or_else(|| AlgError::Invalid(format!("bad residue {n}")))?;
            Scalar::parse(ctx, &i.to_string())
        }
        _ => Err(AlgError::Invalid(format!("bad scalar entry {v}"))),
    }
}

pub fn matrix_to_json(m: &Matrix) -> Value {
    let mut obj = Map::new();
    context_fields(m.context(), &mut obj);
    let rows: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array((0..m.cols()).map(|j| scalar_to_value(m.get(i, j))).collect()))
        .collect();
    obj.insert("rows".into(), Value::Array(rows));
    Value::Object(obj)
}

pub fn matrix_from_json(v: &Value) -> Result<Matrix> {
    let obj = v
        .as_object()
        .ok_or_else(|| AlgError::Invalid("matrix must be an object".into()))?;
    let ctx = context_from(obj)?;
    let rows_v = obj
        .get("rows")
        .and_then(Value::as_array)
        .ok_or_else(|| AlgError::Invalid("missing rows".into()))?;
    let mut rows = Vec::new();
    for row in rows_v {
        let row = row
            .as_array()
            .ok_or_else(|| AlgError::Invalid("row must be an array".into()))?;
        let parsed: Result<Vec<Scalar>> =
            row.iter().map(|e| scalar_from_value(ctx, e)).collect();
        rows.push(parsed?);
    }
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(AlgError::Invalid("rows must be nonempty and rectangular".into()));
    }
    Ok(Matrix::from_rows(ctx, rows))
}

/// Wrapper for the classical models: {"model": {"a": .., "n": ..},
/// "matrix": {...}}.
pub fn classical_to_json(kind: ModelKind, n: usize, m: &Matrix) -> Value {
    json!({
        "model": {"a": kind.a_value(), "n": n},
        "matrix": matrix_to_json(m),
    })
}

pub fn classical_from_json(v: &Value) -> Result<(ModelKind, usize, Matrix)> {
    let obj = v
        .as_object()
        .ok_or_else(|| AlgError::Invalid("classical wrapper must be an object".into()))?;
    let model = obj
        .get("model")
        .and_then(Value::as_object)
        .ok_or_else(|| AlgError::Invalid("missing model".into()))?;
    let a = model
        .get("a")
        .and_then(Value::as_u64)
        .ok_or_else(|| AlgError::Invalid("missing model.a".into()))? as usize;
    let n = model
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| AlgError::Invalid("missing model.n".into()))? as usize;
    let kind = ModelKind::from_a(a)?;
    let matrix = matrix_from_json(
        obj.get("matrix")
            .ok_or_else(|| AlgError::Invalid("missing matrix".into()))?,
    )?;
    Ok((kind, n, matrix))
}

pub fn comp_element_to_json(x: &CompElement) -> Value {
    let mut obj = Map::new();
    obj.insert("alg".into(), json!(x.tag().kind.letter()));
    context_fields(x.tag().ctx, &mut obj);
    obj.insert(
        "coords".into(),
        Value::Array(x.coords().iter().map(scalar_to_value).collect()),
    );
    Value::Object(obj)
}

pub fn comp_element_from_json(v: &Value) -> Result<CompElement> {
    let obj = v
        .as_object()
        .ok_or_else(|| AlgError::Invalid("element must be an object".into()))?;
    let kind = AlgKind::parse(
        obj.get("alg")
            .and_then(Value::as_str)
            .ok_or_else(|| AlgError::Invalid("missing alg".into()))?,
    )?;
    let ctx = context_from(obj)?;
    let tag = AlgebraTag::new(kind, ctx);
    let coords_v = obj
        .get("coords")
        .and_then(Value::as_array)
        .ok_or_else(|| AlgError::Invalid("missing coords".into()))?;
    if coords_v.len() != tag.dim() {
        return Err(AlgError::Invalid(format!(
            "expected {} coordinates, got {}",
            tag.dim(),
            coords_v.len()
        )));
    }
    let coords: Result<Vec<Scalar>> =
        coords_v.iter().map(|e| scalar_from_value(ctx, e)).collect();
    Ok(CompElement::from_coords(tag, coords?))
}

/// {"n": .., "alg": .., "field": .., "diag": [..],
///  "upper": [[i, j, coord...], ..]} with 1-based slot indices.
pub fn hermitian_to_json(a: &HermitianMatrix) -> Value {
    let mut obj = Map::new();
    obj.insert("n".into(), json!(a.size()));
    obj.insert("alg".into(), json!(a.tag().kind.letter()));
    context_fields(a.tag().ctx, &mut obj);
    obj.insert(
        "diag".into(),
        Value::Array((0..a.size()).map(|i| scalar_to_value(a.diag(i))).collect()),
    );
    let mut upper = Vec::new();
    for i in 0..a.size() {
        for j in i + 1..a.size() {
            let mut entry = vec![json!(i + 1), json!(j + 1)];
            entry.extend(a.upper(i, j).coords().iter().map(scalar_to_value));
            upper.push(Value::Array(entry));
        }
    }
    obj.insert("upper".into(), Value::Array(upper));
    Value::Object(obj)
}

pub fn hermitian_from_json(v: &Value) -> Result<HermitianMatrix> {
    let obj = v
        .as_object()
        .ok_or_else(|| AlgError::Invalid("hermitian matrix must be an object".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| AlgError::Invalid("missing n".into()))? as usize;
    let kind = AlgKind::parse(
        obj.get("alg")
            .and_then(Value::as_str)
            .ok_or_else(|| AlgError::Invalid("missing alg".into()))?,
    )?;
    let ctx = context_from(obj)?;
    let tag = AlgebraTag::new(kind, ctx);
    let diag_v = obj
        .get("diag")
        .and_then(Value::as_array)
        .ok_or_else(|| AlgError::Invalid("missing diag".into()))?;
    if diag_v.len() != n {
        return Err(AlgError::Invalid("diag length != n".into()));
    }
    let diag: Result<Vec<Scalar>> = diag_v.iter().map(|e| scalar_from_value(ctx, e)).collect();
    let mut matrix = HermitianMatrix::new(
        tag,
        n,
        diag?,
        vec![CompElement::zero(tag); n * (n - 1) / 2],
    )?;
    let upper_v = obj
        .get("upper")
        .and_then(Value::as_array)
        .ok_or_else(|| AlgError::Invalid("missing upper".into()))?;
    for entry in upper_v {
        let entry = entry
            .as_array()
            .ok_or_else(|| AlgError::Invalid("upper entry must be an array".into()))?;
        if entry.len() != 2 + tag.dim() {
            return Err(AlgError::Invalid("upper entry has wrong arity".into()));
        }
        let i = entry[0]
            .as_u64()
            .ok_or_else(|| AlgError::Invalid("bad slot index".into()))? as usize;
        let j = entry[1]
            .as_u64()
            .ok_or_else(|| AlgError::Invalid("bad slot index".into()))? as usize;
        if i == 0 || j == 0 || i > n || j > n || i >= j {
            return Err(AlgError::Invalid(format!("bad slot ({i}, {j})")));
        }
        let coords: Result<Vec<Scalar>> = entry[2..]
            .iter()
            .map(|e| scalar_from_value(ctx, e))
            .collect();
        matrix.set_upper(i - 1, j - 1, CompElement::from_coords(tag, coords?));
    }
    Ok(matrix)
}

pub fn census_to_json(census: &SubmoduleCensus, seed: Option<u64>) -> Value {
    let groups: Vec<Value> = census
        .groups
        .iter()
        .map(|(&(p, m), &count)| json!({"dims": [p, m], "count": count}))
        .collect();
    let mut obj = Map::new();
    obj.insert("alg".into(), json!(census.kind.letter()));
    obj.insert("n".into(), json!(census.n));
    obj.insert("dim".into(), json!(census.target_dim));
    obj.insert("p".into(), json!(census.p));
    obj.insert("groups".into(), Value::Array(groups));
    obj.insert("free_count".into(), json!(census.free_count));
    obj.insert("total".into(), json!(census.total));
    obj.insert("realized_groups".into(), json!(census.realized_groups()));
    if let Some(seed) = seed {
        obj.insert("seed".into(), json!(seed));
    }
    Value::Object(obj)
}

pub fn incidence_to_json(s: &IncidenceStructure) -> Value {
    let points: Vec<Value> = (0..crate::cubic27::NUM_POINTS)
        .map(|p| json!(var_label(p)))
        .collect();
    let planes: Vec<Value> = s
        .planes
        .iter()
        .map(|plane| {
            json!({
                "points": plane.points.iter().map(|&p| var_label(p)).collect::<Vec<_>>(),
                "sign": plane.sign,
            })
        })
        .collect();
    json!({"points": points, "planes": planes})
}

pub fn classification_to_json(class: &RankOneClass) -> Value {
    match class {
        RankOneClass::X0 { plane } => json!({
            "class": "X0",
            "witness": {
                "plane": [comp_element_to_json(&plane.0), comp_element_to_json(&plane.1)],
            },
        }),
        RankOneClass::X1 { witness } => json!({
            "class": "X1",
            "witness": {
                "triple": witness.iter().map(comp_element_to_json).collect::<Vec<_>>(),
            },
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use crate::verify::trial_rng;

    #[test]
    fn matrix_round_trip() {
        let ctx = FieldContext::Rationals;
        let mut rng = trial_rng(600, 0);
        let m = sample::matrix(ctx, 2, 3, 7, &mut rng);
        let v = matrix_to_json(&m);
        assert_eq!(matrix_from_json(&v).unwrap(), m);

        let f5 = FieldContext::prime(5).unwrap();
        let m = sample::matrix(f5, 3, 2, 4, &mut rng);
        let v = matrix_to_json(&m);
        assert_eq!(v["field"], "fp");
        assert_eq!(v["p"], 5);
        assert_eq!(matrix_from_json(&v).unwrap(), m);
    }

    #[test]
    fn rational_entries_are_reduced_strings() {
        let m = Matrix::from_rows(
            FieldContext::Rationals,
            vec![vec![Scalar::from_fraction(2, 4).unwrap()]],
        );
        let v = matrix_to_json(&m);
        assert_eq!(v["rows"][0][0], "1/2");
    }

    #[test]
    fn hermitian_round_trip() {
        let tag = AlgebraTag::new(AlgKind::O, FieldContext::prime(7).unwrap());
        let mut rng = trial_rng(601, 0);
        let a = sample::hermitian(tag, 3, 6, &mut rng);
        let v = hermitian_to_json(&a);
        assert_eq!(hermitian_from_json(&v).unwrap(), a);
    }

    #[test]
    fn classical_wrapper_round_trip() {
        let ctx = FieldContext::prime(5).unwrap();
        let mut rng = trial_rng(603, 0);
        let raw = sample::matrix(ctx, 4, 4, 4, &mut rng);
        let m = raw.sub(&raw.transpose());
        let v = classical_to_json(crate::classical::ModelKind::Alternating, 2, &m);
        let (kind, n, back) = classical_from_json(&v).unwrap();
        assert_eq!(kind, crate::classical::ModelKind::Alternating);
        assert_eq!(n, 2);
        assert_eq!(back, m);
    }

    #[test]
    fn comp_element_round_trip_and_errors() {
        let tag = AlgebraTag::new(AlgKind::H, FieldContext::Rationals);
        let mut rng = trial_rng(602, 0);
        let x = sample::comp_element(tag, 9, &mut rng);
        let v = comp_element_to_json(&x);
        assert_eq!(comp_element_from_json(&v).unwrap(), x);
        let bad = json!({"alg": "h", "field": "fp", "p": 6, "coords": [0, 0, 0, 0]});
        assert!(comp_element_from_json(&bad).is_err());
    }
}

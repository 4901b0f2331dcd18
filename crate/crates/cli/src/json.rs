//! JSON encodings. Rationals are always `"p/q"` strings; key order is fixed,
//! so equal values serialize to identical bytes.

use std::time::Duration;

use grassline::cones::ConeCertificate;
use grassline::coniveau::NumerologyReport;
use grassline::flagpush::ZPrime;
use grassline::rational::{parse_ratio, to_ratio_string};
use grassline::verify::{VerificationReport, WitnessValue};
use grassline::{BivarPoly, GrassmannContext, HC2Poly, LC2Poly, Partition2, Rational, SchurClass};
use serde_json::{json, Map, Value};

use crate::FormatError;

pub fn rational(r: &Rational) -> Value {
    Value::String(to_ratio_string(r))
}

fn partition(p: Partition2) -> Value {
    json!({ "a": p.a(), "b": p.b() })
}

fn partition_value(p: Partition2, key: &str, v: &Rational) -> Value {
    let mut m = Map::new();
    m.insert("a".into(), p.a().into());
    m.insert("b".into(), p.b().into());
    m.insert(key.into(), rational(v));
    Value::Object(m)
}

/// `{"n": 8, "terms": [{"a": 3, "b": 1, "coef": "18/1"}, ...]}`
pub fn schur_class(u: &SchurClass) -> Value {
    let terms: Vec<Value> = u
        .terms()
        .map(|(p, c)| partition_value(p, "coef", c))
        .collect();
    json!({ "n": u.context().n(), "terms": terms })
}

/// `{"terms": [{"l": 2, "c2": 1, "coef": "18/1"}, ...]}`
pub fn lc2(p: &LC2Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|((l, c2), c)| json!({ "l": l, "c2": c2, "coef": rational(c) }))
        .collect();
    json!({ "terms": terms })
}

/// `{"terms": [{"h": 3, "poly": {"terms": [...]}}, ...]}`
pub fn hc2(p: &HC2Poly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(h, poly)| json!({ "h": h, "poly": lc2(poly) }))
        .collect();
    json!({ "terms": terms })
}

/// `{"deg": 6, "coeffs": ["12/1", ...]}`
pub fn bivar(p: &BivarPoly) -> Value {
    let coeffs: Vec<Value> = p.coeffs().iter().map(rational).collect();
    json!({ "deg": p.deg(), "coeffs": coeffs })
}

pub fn cone_certificate(cert: &ConeCertificate) -> Value {
    let expansion: Vec<Value> = cert
        .expansion
        .iter()
        .map(|(p, c)| partition_value(*p, "coef", c))
        .collect();
    let pairings: Vec<Value> = cert
        .pairings
        .iter()
        .map(|pr| {
            json!({
                "basis": partition(pr.basis),
                "complement": partition(pr.complement),
                "value": rational(&pr.value),
            })
        })
        .collect();
    let witnesses: Vec<Value> = cert
        .witnesses
        .iter()
        .map(|w| partition_value(w.partition, "coef", &w.coefficient))
        .collect();
    json!({
        "class": schur_class(&cert.class),
        "codim": cert.codim,
        "verdict": cert.verdict.as_str(),
        "expansion": expansion,
        "pairings": pairings,
        "witnesses": witnesses,
        "epsilon": rational(&cert.epsilon),
    })
}

pub fn numerology(r: &NumerologyReport) -> Value {
    json!({
        "n": r.multidegree.n(),
        "degrees": r.multidegree.degrees(),
        "dim_x": r.dim_x,
        "dim_f": r.dim_f,
        "dim_fg": r.dim_fg,
        "max_coniveau": r.max_coniveau,
        "coniveau2": r.coniveau2,
        "fano_index2_degree": r.fano_index2_degree,
        "plane_bound_holds": r.plane_bound_holds,
        "plane_bound_slack": r.plane_bound_slack,
        "equality_case": r.equality_case,
        "negative_dimension": r.negative_dimension,
        "has_linear_factor": r.has_linear_factor,
    })
}

pub fn zprime(z: &ZPrime) -> Value {
    json!({
        "n": z.n,
        "d": z.d,
        "degree": z.degree,
        "degenerate": z.degenerate,
        "class": lc2(&z.class),
        "pure_l_coefficient": rational(&z.pure_l_coefficient()),
        "c2_cofactor": lc2(&z.c2_cofactor()),
    })
}

fn witness_value(v: &WitnessValue) -> Value {
    match v {
        WitnessValue::Bool(b) => Value::Bool(*b),
        WitnessValue::Integer(i) => (*i).into(),
        WitnessValue::Rational(r) => rational(r),
        WitnessValue::Rationals(rs) => Value::Array(rs.iter().map(rational).collect()),
        WitnessValue::Text(s) => Value::String(s.clone()),
        WitnessValue::Partition(p) => partition(*p),
        WitnessValue::PartitionValues(pvs) => Value::Array(
            pvs.iter()
                .map(|(p, v)| partition_value(*p, "value", v))
                .collect(),
        ),
        WitnessValue::Lc2(p) => lc2(p),
        WitnessValue::Schur(u) => schur_class(u),
    }
}

/// One report. `elapsed` is only included when asked for, since it breaks
/// byte-for-byte reproducibility.
pub fn report(r: &VerificationReport, elapsed: Option<Duration>) -> Value {
    let inputs: Map<String, Value> = r
        .inputs
        .iter()
        .map(|(k, v)| ((*k).to_string(), (*v).into()))
        .collect();
    let witness: Map<String, Value> = r
        .witness
        .iter()
        .map(|(k, v)| ((*k).to_string(), witness_value(v)))
        .collect();
    let mut out = json!({
        "check_id": r.check_id,
        "check": r.check,
        "inputs": inputs,
        "status": r.status.as_str(),
        "witness": witness,
        "note": r.note,
    });
    if let Some(t) = elapsed {
        out["elapsed_ms"] = json!(t.as_secs_f64() * 1e3);
    }
    out
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, FormatError> {
    v.get(key)
        .ok_or_else(|| FormatError::Schema(format!("missing field {key:?}")))
}

fn uint(v: &Value, key: &str) -> Result<u32, FormatError> {
    field(v, key)?
        .as_u64()
        .and_then(|x| u32::try_from(x).ok())
        .ok_or_else(|| FormatError::Schema(format!("{key:?} must be a non-negative integer")))
}

fn ratio(v: &Value, key: &str) -> Result<Rational, FormatError> {
    let s = field(v, key)?
        .as_str()
        .ok_or_else(|| FormatError::Schema(format!("{key:?} must be a \"p/q\" string")))?;
    parse_ratio(s).ok_or_else(|| FormatError::Schema(format!("bad rational {s:?}")))
}

fn array<'a>(v: &'a Value, key: &str) -> Result<&'a Vec<Value>, FormatError> {
    field(v, key)?
        .as_array()
        .ok_or_else(|| FormatError::Schema(format!("{key:?} must be an array")))
}

pub fn parse_schur_class(v: &Value) -> Result<SchurClass, FormatError> {
    let ctx = GrassmannContext::new(uint(v, "n")?)?;
    let terms = array(v, "terms")?
        .iter()
        .map(|t| {
            Ok((
                Partition2::new(uint(t, "a")?, uint(t, "b")?)?,
                ratio(t, "coef")?,
            ))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    Ok(SchurClass::from_terms(ctx, terms)?)
}

pub fn parse_lc2(v: &Value) -> Result<LC2Poly, FormatError> {
    let terms = array(v, "terms")?
        .iter()
        .map(|t| Ok(((uint(t, "l")?, uint(t, "c2")?), ratio(t, "coef")?)))
        .collect::<Result<Vec<_>, FormatError>>()?;
    Ok(LC2Poly::from_terms(terms))
}

pub fn parse_bivar(v: &Value) -> Result<BivarPoly, FormatError> {
    let deg = uint(v, "deg")? as usize;
    let coeffs = array(v, "coeffs")?
        .iter()
        .map(|c| {
            c.as_str()
                .and_then(parse_ratio)
                .ok_or_else(|| FormatError::Schema(format!("bad coefficient {c}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if coeffs.len() != deg + 1 {
        return Err(FormatError::Schema(format!(
            "deg {deg} needs {} coefficients, got {}",
            deg + 1,
            coeffs.len()
        )));
    }
    Ok(BivarPoly::new(coeffs))
}

//! JSON encodings of scalars: rationals as `"p/q"` (or `"p"`), cyclotomic
//! elements as arrays of `φ(n)` rational strings in the declared conductor.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::rational::Rational;
use super::scalar::Scalar;

/// The base field of a serialized object.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    Named(RationalTag),
    Cyclotomic { cyclotomic: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RationalTag {
    Q,
}

impl FieldSpec {
    pub const Q: FieldSpec = FieldSpec::Named(RationalTag::Q);

    pub fn conductor(&self) -> u32 {
        match self {
            FieldSpec::Named(RationalTag::Q) => 1,
            FieldSpec::Cyclotomic { cyclotomic } => *cyclotomic,
        }
    }

    pub fn from_conductor(n: u32) -> Self {
        if n <= 1 {
            FieldSpec::Q
        } else {
            FieldSpec::Cyclotomic { cyclotomic: n }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad scalar encoding: {0}")]
pub struct ScalarDecodeError(pub String);

/// Encodes `s`; cyclotomic values are lifted into `Q(ζ_conductor)`, and in a
/// field with conductor > 1 every value (rational or not) is written as an array.
pub fn encode_scalar(s: &Scalar, field: &Option<Arc<CyclotomicField>>) -> Value {
    match field {
        None => match s {
            Scalar::Rat(r) => Value::String(r.to_string()),
            Scalar::Cyc(c) => panic!("irrational value {c} in a rational object"),
        },
        Some(f) => {
            let c = match s {
                Scalar::Rat(r) => Cyclotomic::from_rational(f.clone(), r.clone()),
                Scalar::Cyc(c) => c.lift(f),
            };
            Value::Array(
                c.coeffs()
                    .iter()
                    .map(|r| Value::String(r.to_string()))
                    .collect(),
            )
        }
    }
}

pub fn decode_rational(v: &Value) -> Result<Rational, ScalarDecodeError> {
    match v {
        Value::String(s) => s.parse().map_err(|e| ScalarDecodeError(format!("{e}"))),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_int(n.as_i64().unwrap())),
        other => Err(ScalarDecodeError(format!(
            "expected a rational string, found {other}"
        ))),
    }
}

pub fn decode_scalar(
    v: &Value,
    field: &Option<Arc<CyclotomicField>>,
) -> Result<Scalar, ScalarDecodeError> {
    match (field, v) {
        (None, v) => decode_rational(v).map(Scalar::Rat),
        (Some(f), Value::Array(items)) => {
            if items.len() != f.degree() {
                return Err(ScalarDecodeError(format!(
                    "expected {} coefficients for conductor {}, found {}",
                    f.degree(),
                    f.conductor(),
                    items.len()
                )));
            }
            let coeffs = items
                .iter()
                .map(decode_rational)
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Scalar::from_cyclotomic(Cyclotomic::from_coeffs(
                f.clone(),
                coeffs,
            )))
        }
        (Some(_), v) => decode_rational(v).map(Scalar::Rat),
    }
}

pub fn field_handle(spec: FieldSpec) -> Option<Arc<CyclotomicField>> {
    match spec.conductor() {
        1 => None,
        n => Some(CyclotomicField::new(n)),
    }
}

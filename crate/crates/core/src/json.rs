//! JSON helpers for exact integers.

use num_bigint::BigInt;
use serde_json::{Number, Value};

use crate::error::{Error, Result};

/// Encodes an integer as a JSON number token of unbounded size.
pub fn big_to_value(n: &BigInt) -> Value {
    let num: Number = serde_json::from_str(&n.to_string()).expect("integer literal is valid JSON");
    Value::Number(num)
}

/// Decodes a JSON integer (number or decimal string) into a `BigInt`.
pub fn value_to_big(v: &Value) -> Result<BigInt> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        other => return Err(Error::InvalidInput(format!("expected integer, found {other}"))),
    };
    text.parse::<BigInt>().map_err(|_| Error::InvalidInput(format!("not an integer: {text}")))
}

pub fn value_to_i64(v: &Value) -> Result<i64> {
    let n = value_to_big(v)?;
    i64::try_from(&n).map_err(|_| Error::InvalidInput(format!("integer out of range: {n}")))
}

//! JSON encodings shared by all commands. Integers that fit in `i64` are
//! numbers, larger ones are decimal strings; rationals are `"p/q"` strings;
//! simple-root and permutation indices are 1-based.

use hessdeform_core::rootsys::{RootVector, WeightVector};
use hessdeform_core::typea::scalar::{fmt_rational, ProjPoint, Q};
use hessdeform_core::typea::EigenConfig;
use num_bigint::BigInt;
use serde_json::{json, Value};

pub fn big(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn wide(x: u128) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => Value::String(x.to_string()),
    }
}

pub fn rat(x: &Q) -> Value {
    Value::String(fmt_rational(x))
}

pub fn matrix(m: &[Vec<Q>]) -> Value {
    Value::Array(m.iter().map(|r| Value::Array(r.iter().map(rat).collect())).collect())
}

pub fn weight(w: &WeightVector) -> Value {
    json!(w.coords())
}

pub fn root(a: &RootVector) -> Value {
    json!({ "coords": a.coords(), "label": a.pretty() })
}

pub fn index1(i: usize) -> Value {
    json!(i + 1)
}

pub fn indices1(v: &[usize]) -> Value {
    Value::Array(v.iter().map(|&i| index1(i)).collect())
}

pub fn point(p: &ProjPoint) -> Value {
    Value::String(p.to_string())
}

pub fn config(c: &EigenConfig) -> Value {
    Value::Array(c.points().iter().map(point).collect())
}

/// Canonical rendering: sorted keys, two-space indent, trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

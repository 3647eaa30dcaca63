//! JSON and table renderings. Rationals are always strings.

use serde_json::{json, Map, Value};
use tavoid_core::certify::{Certificate, Check, Kind, Row};
use tavoid_core::designs::{CodeProfile, Distribution};
use tavoid_core::{RatInterval, Rational};

pub fn rational(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn rationals(xs: &[Rational]) -> Value {
    Value::Array(xs.iter().map(rational).collect())
}

pub fn interval(x: &RatInterval) -> Value {
    match x.exact() {
        Some(v) => rational(v),
        None => json!({ "lo": x.lo().to_string(), "hi": x.hi().to_string() }),
    }
}

fn distribution(d: &Distribution) -> Value {
    Value::Object(d.iter().map(|(t, c)| (t.to_string(), json!(c))).collect())
}

pub fn profile(p: &CodeProfile) -> Value {
    json!({
        "dim": p.n,
        "N": p.len,
        "s": p.s_max().map(rational),
        "inner_products": rationals(&p.inner_products),
        "full": p.is_full(),
        "rows_examined": p.rows_examined,
        "distance_invariant": p.distance_invariant,
        "distribution": p.common_row.as_ref().map(distribution),
        "pair_counts": p.pair_counts.as_ref().map(distribution),
    })
}

fn checks(cs: &[Check]) -> Value {
    Value::Array(cs.iter().map(|c| json!({ "name": c.name, "holds": c.holds, "detail": c.detail })).collect())
}

pub fn certificate(c: &Certificate) -> Value {
    let (kind, param) = match &c.kind {
        Kind::MaxCode { s } => ("max", json!({ "s": rational(s) })),
        Kind::Design { tau } => ("design", json!({ "tau": tau })),
        Kind::Energy { h, len } => ("energy", json!({ "potential": h.to_string(), "N": len })),
    };
    json!({
        "kind": kind,
        "dim": c.n,
        "parameters": param,
        "T": c.t.to_string(),
        "polynomial": c.polynomial.to_string(),
        "expansion": rationals(&c.expansion.coeffs),
        "bound": c.bound.as_ref().map(interval),
        "checks": checks(&c.checks),
        "valid": c.is_valid(),
    })
}

pub fn row(r: &Row) -> Value {
    let obj = |pairs: &[(String, String)]| -> Value {
        Value::Object(pairs.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect::<Map<_, _>>())
    };
    json!({
        "id": r.id,
        "status": r.status.as_str(),
        "computed": obj(&r.computed),
        "printed": obj(&r.printed),
        "notes": r.notes,
    })
}

pub fn row_table(r: &Row) -> String {
    let mut out = format!("{:<8} {}", r.status.as_str(), r.id);
    for n in &r.notes {
        out.push_str("\n         ");
        out.push_str(n);
    }
    out
}

/// `key: value` lines for a flat JSON object; nested values stay JSON.
pub fn table(v: &Value) -> String {
    match v {
        Value::Object(m) => m
            .iter()
            .filter(|(_, v)| !v.is_null())
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}: {s}"),
                Value::Array(a) if a.iter().all(Value::is_string) => {
                    format!("{k}: {}", a.iter().filter_map(Value::as_str).collect::<Vec<_>>().join(", "))
                }
                other => format!("{k}: {other}"),
            })
            .collect::<Vec<_>>()
            .join("\n"),
        other => other.to_string(),
    }
}

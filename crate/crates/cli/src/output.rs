//! JSON builders for the documented output schemas. Big integers are
//! serialized as decimal strings so consumers never face precision loss.

use genocchi::dellac::DellacConfig;
use genocchi::histories::DellacHistory;
use genocchi::qpolys::{QPoly, XQPoly};
use genocchi::sequences::SeidelTriangle;
use num_bigint::BigInt;
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

pub fn bigint_json(b: &BigInt) -> Value {
    Value::String(b.to_string())
}

/// Coefficient array, lowest degree first.
pub fn qpoly_json(p: &QPoly) -> Value {
    Value::Array(p.coeffs().iter().map(bigint_json).collect())
}

/// Row-major matrix with explicit dimensions; `rows[i]` holds the
/// q-coefficients of `x^i`.
pub fn xqpoly_json(p: &XQPoly) -> Value {
    let qdeg = p
        .rows()
        .iter()
        .filter_map(|r| r.degree())
        .max()
        .map(|d| d + 1)
        .unwrap_or(0);
    let rows: Vec<Value> = p
        .rows()
        .iter()
        .map(|r| Value::Array((0..qdeg).map(|k| bigint_json(&r.coeff(k))).collect()))
        .collect();
    json!({
        "xdim": p.rows().len(),
        "qdim": qdeg,
        "rows": rows,
    })
}

pub fn triangle_json(t: &SeidelTriangle) -> Value {
    let rows: Vec<Value> = t
        .rows()
        .iter()
        .map(|row| Value::Array(row.iter().map(bigint_json).collect()))
        .collect();
    json!({ "schema": SCHEMA, "max_i": t.max_i(), "rows": rows })
}

pub fn config_json(c: &DellacConfig) -> Value {
    json!({ "n": c.n(), "col": c.col(), "inv": c.inv() })
}

pub fn history_json(h: &DellacHistory) -> Value {
    json!({
        "path": h.path.to_string(),
        "xi": h.xi.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
    })
}

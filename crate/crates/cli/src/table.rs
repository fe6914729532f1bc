//! The correspondence table `C -> (phi(C), Phi(C))` with both statistics,
//! for sizes small enough to read in full.

use genocchi::dellac::{binom2, enumerate_dellac, DellacConfig};
use genocchi::dumont::phi;
use genocchi::histories::{big_phi, weight_exponent, DellacHistory};
use genocchi::permutations::{st, Perm};
use genocchi::{Error, Result};
use serde_json::{json, Value};

use crate::output;

#[derive(Clone, Debug)]
pub struct TableRow {
    pub config: DellacConfig,
    pub phi: Perm,
    pub history: DellacHistory,
    pub inv: usize,
    pub st: i64,
    pub weight_exponent: usize,
}

/// One row per configuration of `DC(n)`, in enumeration order. Sizes are
/// guarded at `n <= 4` (beyond that the table stops being a table).
pub fn emit_table(n: usize) -> Result<Vec<TableRow>> {
    if n == 0 || n > 4 {
        return Err(Error::OutOfRange(format!(
            "the table is limited to 1 <= n <= 4, got {}",
            n
        )));
    }
    enumerate_dellac(n)
        .into_iter()
        .map(|config| {
            let sigma = phi(&config);
            let history = big_phi(&config);
            let inv = config.inv();
            let st = st(&sigma)?;
            let weight_exponent = weight_exponent(&history)?;
            debug_assert_eq!(st, (binom2(n) - inv) as i64);
            debug_assert_eq!(weight_exponent, binom2(n) - inv);
            Ok(TableRow {
                config,
                phi: sigma,
                history,
                inv,
                st,
                weight_exponent,
            })
        })
        .collect()
}

pub fn render_text(rows: &[TableRow]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<18} {:<14} {:<24} {:>4} {:>4} {:>7}\n",
        "config", "phi", "history", "inv", "st", "weight"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:<18} {:<14} {:<24} {:>4} {:>4} {:>7}\n",
            r.config.to_string(),
            r.phi.to_string(),
            r.history.to_string(),
            r.inv,
            r.st,
            format!("q^{}", r.weight_exponent),
        ));
    }
    out
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("config,phi,path,xi,inv,st,weight_exponent\n");
    for r in rows {
        let xi: Vec<String> = r
            .history
            .xi
            .iter()
            .map(|(a, b)| format!("({} {})", a, b))
            .collect();
        out.push_str(&format!(
            "\"{}\",{},{},\"{}\",{},{},{}\n",
            r.config,
            r.phi,
            r.history.path,
            xi.join(" "),
            r.inv,
            r.st,
            r.weight_exponent,
        ));
    }
    out
}

pub fn render_json(n: usize, rows: &[TableRow]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "config": output::config_json(&r.config),
                "phi": r.phi.to_string(),
                "history": output::history_json(&r.history),
                "inv": r.inv,
                "st": r.st,
                "weight_exponent": r.weight_exponent,
            })
        })
        .collect();
    json!({ "schema": output::SCHEMA, "n": n, "rows": rows })
}

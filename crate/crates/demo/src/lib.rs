//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every export takes permutation text and returns a JSON string; errors come
//! back as `{"error": "..."}` so the page has a single code path.

use serde::Serialize;
use serde_json::{json, Value};
use stackwilf::sliding::{swl, swl_inv, swu, swu_inv};
use stackwilf::stacksort::{preimages, sort_once};
use stackwilf::stats::{des, peak};
use stackwilf::vhc::{descent_tops, enumerate_vhcs};
use stackwilf::Permutation;
use wasm_bindgen::prelude::wasm_bindgen;

/// The page refuses anything longer; brute-force preimages get slow past 9.
pub const MAX_LEN: usize = 9;

fn parse(text: &str) -> Result<Permutation, String> {
    let p: Permutation = text.parse().map_err(|e: stackwilf::Error| e.to_string())?;
    if !p.is_normalized() {
        return Err(format!("not a permutation of 1..{}", p.len()));
    }
    if p.len() > MAX_LEN {
        return Err(format!("at most {MAX_LEN} entries in the browser"));
    }
    Ok(p)
}

fn respond<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| json!({ "error": e.to_string() }).to_string()),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

/// `s(π)` and every preimage of `π`, each with its des and peak counts.
pub fn sort_report(text: &str) -> String {
    respond((|| {
        let p = parse(text)?;
        let set = preimages(&p).map_err(|e| e.to_string())?;
        let pre: Vec<Value> = set
            .members
            .iter()
            .map(|s| json!({ "perm": s.entries(), "des": des(s), "peak": peak(s) }))
            .collect();
        Ok(json!({
            "perm": p.entries(),
            "sorted": sort_once(&p).entries(),
            "fertility": set.fertility(),
            "preimages": pre,
        }))
    })())
}

/// Hook configurations with everything needed to draw them: 1-based hook
/// endpoints, the coloring (0 is the sky, `t` is hook `t`, null marks a
/// northeast endpoint), composition and type.
pub fn hook_report(text: &str) -> String {
    respond((|| {
        let p = parse(text)?;
        let all = enumerate_vhcs(&p).map_err(|e| e.to_string())?;
        let configs: Vec<Value> = all
            .iter()
            .map(|h| {
                json!({
                    "hooks": h.hooks,
                    "colors": h.coloring(),
                    "composition": h.composition().0,
                    "type": h.partition_type().0,
                })
            })
            .collect();
        let tops: Vec<usize> = descent_tops(&p).into_iter().map(|(i, _)| i).collect();
        Ok(json!({ "perm": p.entries(), "descents": tops, "configurations": configs }))
    })())
}

/// One of `swu`, `swu_inv`, `swl`, `swl_inv`.
pub fn slide_report(text: &str, op: &str) -> String {
    respond((|| {
        let p = parse(text)?;
        let f = match op {
            "swu" => swu,
            "swu_inv" => swu_inv,
            "swl" => swl,
            "swl_inv" => swl_inv,
            other => return Err(format!("unknown operator `{other}`")),
        };
        let out = f(&p).map_err(|e| e.to_string())?;
        Ok(json!({ "op": op, "perm": p.entries(), "result": out.entries() }))
    })())
}

#[wasm_bindgen]
pub fn sort(text: &str) -> String {
    sort_report(text)
}

#[wasm_bindgen]
pub fn hooks(text: &str) -> String {
    hook_report(text)
}

#[wasm_bindgen]
pub fn slide(text: &str, op: &str) -> String {
    slide_report(text, op)
}

//! Browser bindings. Every export returns a JSON string; failures come back
//! as `{"error": "..."}` so the page needs no exception handling.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;
use zetatree::{
    compute_ak, compute_pk, enumerate_trees, generalized_transform, translated_pk,
    translated_pk_half_scale, tree_data, Rational, SequenceSpec,
};

/// Trees are drawn one by one, so listings stop here.
pub const MAX_DRAWN_K: usize = 8;
pub const MAX_PK: usize = 40;

fn to_json(result: Result<Value, String>) -> String {
    result.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn pk_value(k: usize) -> Result<Value, String> {
    if !(1..=MAX_PK).contains(&k) {
        return Err(format!("k must be in 1..={MAX_PK}"));
    }
    let err = |e: zetatree::Error| e.to_string();
    let p = compute_pk(k).map_err(err)?.poly;
    let t = translated_pk(k).map_err(err)?;
    let h = translated_pk_half_scale(k).map_err(err)?;
    Ok(json!({
        "k": k,
        "ak": compute_ak(k).map_err(err)?.to_string(),
        "pk": p.to_string(),
        "translated": t.to_string(),
        "half_scale": h.to_string(),
        "half_scale_coeffs": h.to_coeff_strings(),
    }))
}

fn trees_value(k: usize) -> Result<Value, String> {
    if !(1..=MAX_DRAWN_K).contains(&k) {
        return Err(format!("k must be in 1..={MAX_DRAWN_K}"));
    }
    let mut out = Vec::new();
    for t in enumerate_trees(k).map_err(|e| e.to_string())? {
        let d = tree_data(&t).map_err(|e| e.to_string())?;
        out.push(json!({
            "levels": t.levels(),
            "parents": t.parents(),
            "low": d.low.odd_values(),
            "high": d.high.odd_values(),
            "weight": d.weight.to_string(),
        }));
    }
    Ok(json!({ "k": k, "trees": out }))
}

fn transform_value(max_k: usize, sequence: &str) -> Result<Value, String> {
    if !(1..=10).contains(&max_k) {
        return Err("max k must be in 1..=10".into());
    }
    let seq = if sequence.trim().is_empty() {
        SequenceSpec::Odd
    } else {
        SequenceSpec::parse(sequence).map_err(|e| e.to_string())?
    };
    let values = (1..=max_k)
        .map(|k| {
            generalized_transform(k, &seq).map(|v: Rational| json!({ "k": k, "value": v.to_string(), "approx": v.to_f64() }))
        })
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    Ok(json!({ "values": values }))
}

/// P_k in its plain, translated and half-scale forms, with A_k.
#[wasm_bindgen]
pub fn pk(k: usize) -> String {
    to_json(pk_value(k))
}

/// Every plane tree with `k` vertices, with parents for drawing.
#[wasm_bindgen]
pub fn trees(k: usize) -> String {
    to_json(trees_value(k))
}

/// The tree transform for k = 1..=max_k of the sequence in `sequence`
/// (one rational per line; blank for R_n = 2n + 1).
#[wasm_bindgen]
pub fn transform(max_k: usize, sequence: &str) -> String {
    to_json(transform_value(max_k, sequence))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn pk_forms() {
        let v = parse(pk(4));
        assert_eq!(v["ak"], "945");
        assert_eq!(v["half_scale"], "465 + 130*x + 10*x^2");
        assert!(parse(pk(0))["error"].is_string());
    }

    #[test]
    fn tree_listing() {
        let v = parse(trees(4));
        let list = v["trees"].as_array().unwrap();
        assert_eq!(list.len(), 5);
        assert_eq!(list[0]["parents"].as_array().unwrap().len(), 3);
        assert!(parse(trees(9))["error"].is_string());
    }

    #[test]
    fn transform_sequences() {
        let v = parse(transform(3, ""));
        assert_eq!(v["values"][2]["value"], "2/945");
        let unit = parse(transform(4, "1\n1\n1\n1\n"));
        assert_eq!(unit["values"][3]["value"], "5");
        assert!(parse(transform(2, "1\nx\n"))["error"].as_str().unwrap().contains("line 2"));
    }
}

//! Browser bindings: analyze a code spec, evaluate the quantum GV bound, and
//! factor xⁿ-1. Every export returns a JSON string; failures become a
//! rejected value holding a JSON error object.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;
use wasm_bindgen::JsValue;

use qcext::error::Error;
use qcext::gf::FieldSpec;
use qcext::pipeline::{analyze, CodeSpec, RunOptions};
use qcext::poly::factor_xn_minus_1;
use qcext::quantum::gv_bound;

/// Message budget per code in the page, small enough to keep it responsive.
pub const PAGE_BUDGET: u128 = 1 << 22;

fn error_json(e: &Error) -> String {
    json!({ "code": e.code(), "message": e.to_string() }).to_string()
}

/// Report for a JSON spec. With `bookkeeping`, codes over budget are
/// reported without distances instead of failing.
pub fn analyze_spec(spec: &str, bookkeeping: bool) -> Result<String, String> {
    let run = || -> Result<String, Error> {
        let spec = CodeSpec::from_json(spec)?;
        let opts = RunOptions {
            budget: PAGE_BUDGET,
            require_distances: !bookkeeping,
            parallel: false,
            ..RunOptions::default()
        };
        let report = analyze(&spec, &opts)?;
        let mut out = serde_json::to_value(&report)?;
        out["text"] = Value::from(report.to_text());
        out["displayed"] = json!(report.displayed());
        Ok(out.to_string())
    };
    run().map_err(|e| error_json(&e))
}

pub fn gv_verdict(q: u32, n: usize, k: usize, d: usize) -> Result<String, String> {
    FieldSpec::new(q).map_err(|e| error_json(&e))?;
    let v = gv_bound(n, k, d, q);
    let mut out = serde_json::to_value(&v).map_err(|e| error_json(&e.into()))?;
    out["text"] = Value::from(format!("[[{n},{k},{d}]]_{q}: {v}"));
    Ok(out.to_string())
}

pub fn factors(q: u32, n: usize) -> Result<String, String> {
    let run = || -> Result<String, Error> {
        let field = FieldSpec::new(q)?;
        let list: Vec<Value> = factor_xn_minus_1(&field, n)?
            .iter()
            .map(|f| json!({ "poly": f.render(), "degree": f.degree().unwrap_or(0) }))
            .collect();
        Ok(json!({ "q": q, "n": n, "field": field.order(), "factors": list }).to_string())
    };
    run().map_err(|e| error_json(&e))
}

#[wasm_bindgen]
pub fn analyze_code(spec: &str, bookkeeping: bool) -> Result<String, JsValue> {
    analyze_spec(spec, bookkeeping).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn gv(q: u32, n: usize, k: usize, d: usize) -> Result<String, JsValue> {
    gv_verdict(q, n, k, d).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn factor(q: u32, n: usize) -> Result<String, JsValue> {
    factors(q, n).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_small_spec() {
        let out = analyze_spec(r#"{"schema":1,"q":2,"n":7,"f":"032321","g":"11"}"#, false).unwrap();
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!(v["displayed"].as_array().unwrap().iter().any(|s| s == "[[14,6,7;8]]_2"));
        assert!(v["text"].as_str().unwrap().contains("x^7+x^4+x"));
    }

    #[test]
    fn over_budget_needs_bookkeeping() {
        let spec = include_str!("../../core/specs/gf4-n51-extend-one.json");
        let err: Value = serde_json::from_str(&analyze_spec(spec, false).unwrap_err()).unwrap();
        assert_eq!(err["code"], "budget-exceeded");
        let v: Value = serde_json::from_str(&analyze_spec(spec, true).unwrap()).unwrap();
        assert!(v["text"].as_str().unwrap().contains("[[103,69]]"));
    }

    #[test]
    fn gv_and_factor_json() {
        let v: Value = serde_json::from_str(&gv_verdict(3, 22, 10, 5).unwrap()).unwrap();
        assert_eq!(v["lhs"], "597871");
        assert_eq!(v["guaranteed"], false);
        let v: Value = serde_json::from_str(&factors(2, 3).unwrap()).unwrap();
        assert_eq!(v["factors"].as_array().unwrap().len(), 3);
        let err: Value = serde_json::from_str(&factors(4, 3).unwrap_err()).unwrap();
        assert_eq!(err["code"], "unsupported-field");
    }
}

//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes plain strings and numbers and returns a string, so the
//! page needs no glue beyond the generated module. Errors come back as the
//! same `Name: detail` text the CLI prints.

use gf_hartley::text::{parse_element, parse_poly, parse_vector, render_gaussian, render_vector};
use gf_hartley::{cyclotomic_classes, Error, Field, TransformPlan};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn describe(e: Error) -> String {
    format!("{}: {e}", e.name())
}

/// Builds a plan over GF(p^r) itself. An empty modulus picks the default one.
fn plan(p: u64, r: usize, modulus: &str, alpha: &str) -> Result<TransformPlan, Error> {
    let modulus = match modulus.trim() {
        "" => None,
        text => Some(parse_poly(text, p)?),
    };
    let field = Field::new(p, r, modulus.as_deref())?;
    let alpha = parse_element(alpha, &field)?;
    TransformPlan::new(field.clone(), field, alpha)
}

/// The cos and sin tables as `{"N", "cos", "sin"}`, each indexed `[k][i]`.
pub fn trig_table_json(p: u64, r: usize, modulus: &str, alpha: &str) -> Result<String, String> {
    let plan = plan(p, r, modulus, alpha).map_err(describe)?;
    let table = plan.trig().table();
    let grid = |rows: &[Vec<gf_hartley::GaussianElement>]| -> Vec<Vec<String>> {
        rows.iter()
            .map(|row| row.iter().map(render_gaussian).collect())
            .collect()
    };
    Ok(json!({"N": plan.len(), "cos": grid(&table.cos), "sin": grid(&table.sin)}).to_string())
}

/// Forward transform when `inverse` is false, inverse transform otherwise.
pub fn transform(
    p: u64,
    r: usize,
    modulus: &str,
    alpha: &str,
    values: &str,
    inverse: bool,
) -> Result<String, String> {
    let plan = plan(p, r, modulus, alpha).map_err(describe)?;
    let values = parse_vector(values, plan.gaussian_field()).map_err(describe)?;
    let out = if inverse {
        plan.inverse(&plan.spectrum(values).map_err(describe)?)
            .map(|s| s.into_values())
    } else {
        plan.forward(&plan.signal(values).map_err(describe)?)
            .map(|s| s.into_values())
    };
    out.map(|v| render_vector(&v)).map_err(describe)
}

/// Cyclotomic classes as `{"N", "q", "classes"}`.
pub fn classes_json(n: usize, q: u64) -> Result<String, String> {
    let partition = cyclotomic_classes(n, q).map_err(describe)?;
    serde_json::to_string(&partition).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = trigTable)]
pub fn trig_table_js(p: u64, r: usize, modulus: &str, alpha: &str) -> Result<String, JsError> {
    trig_table_json(p, r, modulus, alpha).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = transform)]
pub fn transform_js(
    p: u64,
    r: usize,
    modulus: &str,
    alpha: &str,
    values: &str,
    inverse: bool,
) -> Result<String, JsError> {
    transform(p, r, modulus, alpha, values, inverse).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = classes)]
pub fn classes_js(n: usize, q: u64) -> Result<String, JsError> {
    classes_json(n, q).map_err(|e| JsError::new(&e))
}

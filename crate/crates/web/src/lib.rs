//! wasm-bindgen wrappers used by `www/index.html`.
//!
//! Every export returns a JSON string; failures come back as `{"error": ...}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use rootiso::bench::{generate, BenchSpec, Family};
use rootiso::io::{fmt_rational, parse_expression, to_json_intervals};
use rootiso::{asv_bound, cauchy_bound, sign_variation, up_bound, IntPoly, IsolateOptions, Isolator};

fn error(e: impl std::fmt::Display) -> String {
    json!({ "error": e.to_string() }).to_string()
}

/// Coefficients from the constant term upward, as decimal strings.
fn coeff_strings(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn isolate_value(expr: &str, substitution: bool) -> rootiso::Result<Value> {
    let p = parse_expression(expr)?;
    let mut iso = Isolator::new(IsolateOptions {
        substitution,
        ..IsolateOptions::default()
    });
    let roots = iso.isolate(&p)?;
    let stats = iso.stats();
    Ok(json!({
        "poly": p.to_string(),
        "coeffs": coeff_strings(&p),
        "roots": to_json_intervals(&roots),
        "stats": {
            "nodes": stats.nodes,
            "taylor_shifts": stats.taylor_shifts,
            "early_splits": stats.early_splits,
        },
    }))
}

/// Isolates the real roots of an expression in `x`.
#[wasm_bindgen]
pub fn isolate_roots(expr: &str, substitution: bool) -> String {
    isolate_value(expr, substitution).map_or_else(error, |v| v.to_string())
}

fn bounds_value(expr: &str) -> rootiso::Result<Value> {
    let p = parse_expression(expr)?;
    if sign_variation(p.coeffs()) == 0 {
        return Ok(json!({ "poly": p.to_string(), "positive_roots": false }));
    }
    Ok(json!({
        "poly": p.to_string(),
        "positive_roots": true,
        "logcf": fmt_rational(&up_bound(&p)?),
        "asv": fmt_rational(&asv_bound(&p)?),
        "cauchy": fmt_rational(&cauchy_bound(&p)?),
    }))
}

/// Upper bounds on the positive roots from the three bound algorithms.
#[wasm_bindgen]
pub fn compare_bounds(expr: &str) -> String {
    bounds_value(expr).map_or_else(error, |v| v.to_string())
}

fn family_value(family: &str, n: usize) -> rootiso::Result<Value> {
    let family: Family = family.parse()?;
    if n > 400 {
        return Err(rootiso::Error::InvalidSpec("demo keeps n at or below 400".into()));
    }
    let p = generate(&BenchSpec::new(family, n))?;
    Ok(json!({ "expr": p.to_string(), "degree": n }))
}

/// A benchmark family member as an expression string.
#[wasm_bindgen]
pub fn generate_family(family: &str, n: usize) -> String {
    family_value(family, n).map_or_else(error, |v| v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: String) -> Value {
        serde_json::from_str(&s).unwrap()
    }

    #[test]
    fn isolate_reports_roots() {
        let v = parse(isolate_roots("x^2 - 2", true));
        assert_eq!(v["roots"].as_array().unwrap().len(), 2);
        let v = parse(isolate_roots("2x", true));
        assert!(v["error"].as_str().unwrap().contains("position"));
    }

    #[test]
    fn bounds_for_quadratic() {
        let v = parse(compare_bounds("x^2 + x - 2"));
        assert_eq!(v["logcf"], "1/1");
        assert_eq!(v["asv"], "2/1");
        let v = parse(compare_bounds("x^2 + 1"));
        assert_eq!(v["positive_roots"], false);
    }

    #[test]
    fn family_round_trips_through_parser() {
        let v = parse(generate_family("W", 5));
        let expr = v["expr"].as_str().unwrap();
        let p = parse_expression(expr).unwrap();
        assert_eq!(p, generate(&BenchSpec::new(Family::W, 5)).unwrap());
        assert!(parse(generate_family("Z", 3))["error"].is_string());
    }
}

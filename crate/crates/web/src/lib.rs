//! Browser bindings. Each exported function returns a JSON string; the
//! `*_json` functions behind them are plain Rust and testable natively.

use cubic_chow::diagonal::{FormalCycle, ProductEvaluator};
use cubic_chow::exact::{fmt_rat, parse_rat, VarSet, WPoly};
use cubic_chow::grassmann::{fano_polynomial, schubert_degree, schubert_of_monomial, GRing};
use cubic_chow::hodge::{fano_diamond, gs_structure, hodge_cubic, HodgeDiamond};
use cubic_chow::{Error, Result};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Upper bound on `n` accepted from the page, to keep the tab responsive.
pub const MAX_N: u32 = 12;

fn check_n(n: u32, min: u32) -> Result<()> {
    if n < min || n > MAX_N {
        return Err(Error::UnsupportedRange(format!(
            "n must be between {min} and {MAX_N}"
        )));
    }
    Ok(())
}

fn diamond_rows(d: &HodgeDiamond) -> Vec<Vec<u64>> {
    let top = d.betti_numbers().len() as i32;
    (0..top).map(|k| d.hodge_row(k)).collect()
}

/// Hodge diamonds of the cubic `n`-fold and of its Fano variety of lines,
/// with the Tate multiplicities left after removing `Sym^2 H` and `H(-k)`.
pub fn fano_cohomology_json(n: u32) -> Result<Value> {
    check_n(n, 2)?;
    let x = hodge_cubic(n)?;
    let f = fano_diamond(n)?;
    Ok(json!({
        "n": n,
        "cubic": { "rows": diamond_rows(&x), "betti": x.betti_numbers(), "euler": x.euler() },
        "fano": {
            "dim": 2 * (n - 2),
            "rows": diamond_rows(&f),
            "betti": f.betti_numbers(),
            "euler": f.euler(),
        },
        "tate": gs_structure(n)?,
    }))
}

/// Degree on `Gr(2, n+2)` of a polynomial in `x = c1`, `y = c2`, optionally
/// multiplied by the class of the Fano variety first. Reports both the
/// quotient-ring and the Pieri-rule value.
pub fn intersection_degree_json(n: u32, poly: &str, times_fano: bool) -> Result<Value> {
    check_n(n, 1)?;
    let vars = VarSet::chern();
    let mut p = WPoly::parse(&vars, poly)?;
    if times_fano {
        p = &p * &fano_polynomial();
    }
    let ring = GRing::build(n)?;
    let degree = ring.degree_of_poly(&p)?;
    let pieri: cubic_chow::exact::Rat = p
        .terms()
        .map(|(m, c)| c * schubert_degree(n, &schubert_of_monomial(n, None, m[0], m[1])))
        .sum();
    Ok(json!({
        "n": n,
        "polynomial": p.to_string(),
        "degree": fmt_rat(&degree),
        "pieri": fmt_rat(&pieri),
    }))
}

/// `alpha * beta` for cycles known only by codimension and moment.
pub fn product_formula_json(n: u32, i: u32, j: u32, m_alpha: &str, m_beta: &str) -> Result<Value> {
    check_n(n, 3)?;
    let alpha = FormalCycle::new(i, parse_rat(m_alpha)?);
    let beta = FormalCycle::new(j, parse_rat(m_beta)?);
    let e = ProductEvaluator::new(n)?.evaluate(&alpha, &beta)?;
    let terms: Vec<Value> = e
        .terms
        .iter()
        .map(|t| json!({ "term": t.term, "value": fmt_rat(&t.value), "reason": t.reason }))
        .collect();
    Ok(json!({
        "n": n,
        "result": e.result.to_string(),
        "a": fmt_rat(&e.a),
        "terms": terms,
    }))
}

fn to_js(r: Result<Value>) -> std::result::Result<String, JsError> {
    r.map(|v| v.to_string())
        .map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn fano_cohomology(n: u32) -> std::result::Result<String, JsError> {
    to_js(fano_cohomology_json(n))
}

#[wasm_bindgen]
pub fn intersection_degree(
    n: u32,
    poly: &str,
    times_fano: bool,
) -> std::result::Result<String, JsError> {
    to_js(intersection_degree_json(n, poly, times_fano))
}

#[wasm_bindgen]
pub fn product_formula(
    n: u32,
    i: u32,
    j: u32,
    m_alpha: &str,
    m_beta: &str,
) -> std::result::Result<String, JsError> {
    to_js(product_formula_json(n, i, j, m_alpha, m_beta))
}

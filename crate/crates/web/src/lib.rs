//! wasm-bindgen entry points for the static demo page in `www/`.
//!
//! Every function returns a JSON string; failures come back as `{"error": "..."}`
//! so the page never has to catch exceptions.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use ru4::image::{summarize_all, BinaryCodeSet};
use ru4::{params, Caps, CrtProfile, CyclicCode, Factorization};

/// Largest image the grid view will draw.
pub const GRID_MAX_BITS: u32 = 10;

/// Largest length offered for full enumeration in the browser.
pub const ENUM_MAX_N: usize = 7;

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).unwrap_or_else(|e| error_json(&e.to_string())),
        Err(e) => error_json(&e),
    }
}

fn error_json(msg: &str) -> String {
    serde_json::json!({ "error": msg }).to_string()
}

#[derive(Serialize)]
struct FactorView {
    n: usize,
    factors: Vec<String>,
    lifts: Vec<String>,
    lift_coeffs: Vec<String>,
    idempotents: Vec<String>,
    code_count: String,
}

pub fn factor_view(n: usize) -> Result<impl Serialize, String> {
    let f = Factorization::new(n).map_err(|e| e.to_string())?;
    Ok(FactorView {
        n,
        factors: f.f2_factors.iter().map(|p| p.pretty()).collect(),
        lifts: f.z4_lifts.iter().map(|p| p.pretty()).collect(),
        lift_coeffs: f.z4_lifts.iter().map(|p| p.to_string()).collect(),
        idempotents: f.idempotents.iter().map(|p| p.pretty()).collect(),
        code_count: ru4::cyclic::code_count(&f).to_string(),
    })
}

/// Binary factors, Z4 lifts and idempotents of `x^n - 1`.
#[wasm_bindgen]
pub fn factor(n: usize) -> String {
    to_json(factor_view(n))
}

pub fn enumerate_view(n: usize) -> Result<impl Serialize, String> {
    if n > ENUM_MAX_N {
        return Err(format!("the demo enumerates lengths up to {ENUM_MAX_N}"));
    }
    let f = Factorization::new(n).map_err(|e| e.to_string())?;
    summarize_all(&f, &Caps::default()).map_err(|e| e.to_string())
}

/// One summary per cyclic code of length `n`.
#[wasm_bindgen]
pub fn enumerate(n: usize) -> String {
    to_json(enumerate_view(n))
}

#[derive(Serialize)]
struct GridView {
    n: usize,
    profile: String,
    length: usize,
    log2_size: u32,
    min_distance: Option<u32>,
    linear: bool,
    qc4: bool,
    words: Vec<String>,
}

pub fn gray_grid_view(n: usize, profile: &str) -> Result<impl Serialize, String> {
    let f = Factorization::new(n).map_err(|e| e.to_string())?;
    let p: CrtProfile = profile.parse().map_err(|e: ru4::ParseError| e.to_string())?;
    let code = CyclicCode::from_crt_profile(&p, &f).map_err(|e| e.to_string())?;
    if code.log2_size() > GRID_MAX_BITS {
        return Err(format!("image has 2^{} words; the grid shows at most 2^{GRID_MAX_BITS}", code.log2_size()));
    }
    let bp = params(&code, &Caps::default()).map_err(|e| e.to_string())?;
    let image = BinaryCodeSet::gray_image(&code, GRID_MAX_BITS);
    let words = image.words().map_err(|e| e.to_string())?;
    Ok(GridView {
        n,
        profile: p.to_string(),
        length: bp.length,
        log2_size: bp.log2_size,
        min_distance: bp.min_distance,
        linear: bp.is_linear_set,
        qc4: bp.is_qc4,
        words: words.iter().map(|w| w.to_string()).collect(),
    })
}

/// Gray image words of the code with the given CRT profile (e.g. `"ONE,ZERO"`).
#[wasm_bindgen]
pub fn gray_grid(n: usize, profile: &str) -> String {
    to_json(gray_grid_view(n, profile))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_seven() {
        let v: serde_json::Value = serde_json::from_str(&factor(7)).unwrap();
        assert_eq!(v["lift_coeffs"][1], "3,1,2,1");
        assert_eq!(v["code_count"], "343");
        let e: serde_json::Value = serde_json::from_str(&factor(4)).unwrap();
        assert!(e["error"].is_string());
    }

    #[test]
    fn enumerate_three() {
        let v: serde_json::Value = serde_json::from_str(&enumerate(3)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 49);
        let e: serde_json::Value = serde_json::from_str(&enumerate(9)).unwrap();
        assert!(e["error"].is_string());
    }

    #[test]
    fn grid() {
        let v: serde_json::Value = serde_json::from_str(&gray_grid(3, "TWO_U,ZERO")).unwrap();
        assert_eq!(v["words"].as_array().unwrap().len(), 2);
        assert_eq!(v["length"], 12);
        let e: serde_json::Value = serde_json::from_str(&gray_grid(3, "ONE,ONE")).unwrap();
        assert!(e["error"].is_string());
    }
}

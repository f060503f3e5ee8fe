//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each export takes plain strings and returns a JSON document, so the page
//! needs no generated TypeScript types. The JSON builders are ordinary Rust
//! functions and are tested natively.

use blockcalc::blocks::{Basis, BlockCalculus};
use blockcalc::hecke::kl_table;
use blockcalc::soergel::{split_idempotents, SoergelContext};
use blockcalc::weyl::{format_word, parse_word, weyl_group, CartanType};
use blockcalc::{Error, Result};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest word the page will build a Bott–Samelson module for.
pub const MAX_DEMO_WORD: usize = 6;

#[derive(Debug, Serialize)]
struct KlEntry {
    x: String,
    y: String,
    coeffs: Vec<i64>,
}

#[derive(Debug, Serialize)]
struct KlDocument {
    cartan_type: String,
    order: usize,
    entries: Vec<KlEntry>,
}

#[derive(Debug, Serialize)]
struct MatrixDocument {
    cartan_type: String,
    basis: String,
    /// Column `w` holds the Verma multiplicities of the basis element indexed by `w`.
    labels: Vec<String>,
    matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Serialize)]
struct Summand {
    dim: usize,
    graded_dims: Vec<usize>,
}

#[derive(Debug, Serialize)]
struct BottSamelsonDocument {
    cartan_type: String,
    word: String,
    dim: usize,
    graded_dims: Vec<usize>,
    summands: Vec<Summand>,
    predicted: Vec<usize>,
}

fn to_json<T: Serialize>(doc: &T) -> Result<String> {
    serde_json::to_string(doc).map_err(|e| Error::Internal(format!("json output: {e}")))
}

fn parse_basis(s: &str) -> Result<Basis> {
    match s {
        "projective" => Ok(Basis::Projective),
        "simple" => Ok(Basis::Simple),
        "tilting" => Ok(Basis::Tilting),
        "dual-verma" => Ok(Basis::DualVerma),
        _ => Err(Error::Usage(format!("unknown basis {s:?}"))),
    }
}

/// All non-zero `P_{x,y}` as coefficient lists.
pub fn kl_document(cartan_type: &str) -> Result<String> {
    let ct: CartanType = cartan_type.parse()?;
    let g = weyl_group(ct)?;
    let kl = kl_table(&g);
    let entries = g
        .ids()
        .flat_map(|y| g.ids().map(move |x| (x, y)))
        .filter(|&(x, y)| g.bruhat_leq(x, y))
        .map(|(x, y)| KlEntry { x: g.elem(x).to_string(), y: g.elem(y).to_string(), coeffs: kl.p(x, y).to_vec() })
        .collect();
    to_json(&KlDocument { cartan_type: ct.to_string(), order: g.order(), entries })
}

/// Verma multiplicities of a basis of the principal block.
pub fn block_document(cartan_type: &str, basis: &str) -> Result<String> {
    let ct: CartanType = cartan_type.parse()?;
    let basis = parse_basis(basis)?;
    let calc = BlockCalculus::new(ct)?;
    let reg = calc.regular_block();
    let g = calc.group();
    let m = reg.basis_matrix(basis)?;
    to_json(&MatrixDocument {
        cartan_type: ct.to_string(),
        basis: basis.symbol().to_string(),
        labels: reg.index_set().iter().map(|&w| g.elem(w).to_string()).collect(),
        matrix: m.to_rows(),
    })
}

/// Dimensions and indecomposable summands of `BS(word)`, next to the
/// summand sizes read off the Grothendieck group.
pub fn bott_samelson_document(cartan_type: &str, word: &str) -> Result<String> {
    let ct: CartanType = cartan_type.parse()?;
    let ctx = SoergelContext::build(ct)?;
    let word = parse_word(word, ctx.calculus().group().rank())?;
    if word.len() > MAX_DEMO_WORD {
        return Err(Error::Unsupported(format!("words longer than {MAX_DEMO_WORD} are too slow for the page")));
    }
    let m = ctx.bott_samelson(&word)?;
    let mut summands: Vec<Summand> = split_idempotents(&m)?
        .iter()
        .map(|s| Summand { dim: s.dim(), graded_dims: s.graded_dims() })
        .collect();
    summands.sort_by(|a, b| b.dim.cmp(&a.dim));
    to_json(&BottSamelsonDocument {
        cartan_type: ct.to_string(),
        word: format_word(&word),
        dim: m.dim(),
        graded_dims: m.graded_dims(),
        summands,
        predicted: ctx.predicted_summand_dims(&word)?,
    })
}

fn js(r: Result<String>) -> std::result::Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen]
pub fn kl_table_json(cartan_type: &str) -> std::result::Result<String, JsError> {
    js(kl_document(cartan_type))
}

#[wasm_bindgen]
pub fn block_matrix_json(cartan_type: &str, basis: &str) -> std::result::Result<String, JsError> {
    js(block_document(cartan_type, basis))
}

#[wasm_bindgen]
pub fn bott_samelson_json(cartan_type: &str, word: &str) -> std::result::Result<String, JsError> {
    js(bott_samelson_document(cartan_type, word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::Value;

    #[test]
    fn kl_document_lists_comparable_pairs() {
        let v: Value = serde_json::from_str(&kl_document("A2").unwrap()).unwrap();
        assert_eq!(v["order"], 6);
        assert_eq!(v["entries"].as_array().unwrap().len(), 19);
    }

    #[test]
    fn block_document_is_square() {
        let v: Value = serde_json::from_str(&block_document("B2", "tilting").unwrap()).unwrap();
        let m = v["matrix"].as_array().unwrap();
        assert_eq!(m.len(), 8);
        assert!(m.iter().all(|r| r.as_array().unwrap().len() == 8));
        assert!(block_document("B2", "nonsense").is_err());
    }

    #[test]
    fn bott_samelson_document_splits() {
        let v: Value = serde_json::from_str(&bott_samelson_document("A2", "1.2.1").unwrap()).unwrap();
        assert_eq!(v["dim"], 8);
        let dims: Vec<u64> = v["summands"].as_array().unwrap().iter().map(|s| s["dim"].as_u64().unwrap()).collect();
        assert_eq!(dims, [6, 2]);
        assert_eq!(v["predicted"], serde_json::json!([6, 2]));
        assert!(bott_samelson_document("A2", "1.2.1.2.1.2.1").is_err());
    }
}

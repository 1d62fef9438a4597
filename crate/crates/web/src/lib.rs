//! Three operations for the static demo page. Each returns a JSON string;
//! the page does the drawing.

use std::collections::BTreeMap;

use cubegalois::arith;
use cubegalois::cube::{tables, PieceClass, StickerModel};
use cubegalois::evidence;
use cubegalois::poly::{self, parse_coefficient};
use cubegalois::{Permutation, PolyQ};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Applies a move sequence such as `r1 u2' f1` to the solved Professor's
/// cube. A trailing `'` inverts a turn. Moves act left to right.
pub fn cube_state(moves: &str) -> Result<String, String> {
    let model = StickerModel::r5().map_err(|e| e.to_string())?;
    let mut state = Permutation::identity(model.degree());
    for token in moves.split_whitespace() {
        let (name, inverse) = match token.strip_suffix('\'') {
            Some(n) => (n, true),
            None => (token, false),
        };
        let g = model
            .generator(name)
            .ok_or_else(|| format!("unknown turn {name:?}"))?;
        let g = if inverse { g.inverse() } else { g.clone() };
        state = g.compose(&state).map_err(|e| e.to_string())?;
    }

    // Position t shows the facet that the moves carried there.
    let back = state.inverse();
    let mut net = serde_json::Map::new();
    for (face, grid) in tables::R5_NET {
        let rows: Vec<String> = grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&t| {
                        if t == 0 {
                            face
                        } else {
                            model.face_of(back.image(t as usize))
                        }
                    })
                    .collect()
            })
            .collect();
        net.insert(face.to_string(), json!(rows));
    }
    let signs: BTreeMap<String, i8> = model
        .sign_vector(&state)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|(c, s)| (c.name().to_string(), s))
        .collect();
    let twist = model
        .orientation_sum(&state, PieceClass::Corner)
        .map_err(|e| e.to_string())?;
    let flip = model
        .orientation_sum(&state, PieceClass::CentralEdge)
        .map_err(|e| e.to_string())?;
    Ok(json!({
        "moves": moves.split_whitespace().count(),
        "net": net,
        "signs": signs,
        "corner_twist": twist,
        "edge_flip": flip,
        "cycles": state.to_cycle_string(),
    })
    .to_string())
}

/// Coefficients listed from the leading one down, separated by spaces or
/// commas. Factored forms like `-2^67*3^24` are accepted.
pub fn parse_descending(text: &str) -> Result<PolyQ, String> {
    let mut coeffs = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(parse_coefficient)
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    if coeffs.len() < 2 {
        return Err("need a polynomial of degree at least 1".into());
    }
    coeffs.reverse();
    let f = PolyQ::new(coeffs);
    if f.degree().unwrap_or(0) == 0 {
        return Err("leading coefficient is zero".into());
    }
    Ok(f)
}

/// Cycle-type counts of Frobenius over the first `primes` good primes.
pub fn frobenius_histogram(coeffs: &str, primes: usize) -> Result<String, String> {
    let f = parse_descending(coeffs)?;
    if primes == 0 || primes > 5000 {
        return Err("prime count must be between 1 and 5000".into());
    }
    let profile = evidence::scan(&f, primes).map_err(|e| e.to_string())?;
    let mut types: Vec<(String, usize, i8)> = profile
        .observed_types()
        .into_iter()
        .map(|(t, n)| (t.exponent_string(), n, t.parity()))
        .collect();
    types.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    let types: Vec<_> = types
        .into_iter()
        .map(|(t, n, parity)| json!({ "type": t, "count": n, "even": parity == 1 }))
        .collect();
    Ok(json!({
        "degree": f.degree(),
        "good_primes": profile.good_primes(),
        "primes_scanned": profile.primes_scanned,
        "bad_primes": profile.bad_primes,
        "even_fraction": profile.even_fraction(),
        "types": types,
    })
    .to_string())
}

/// Exact discriminant and, if `versus` is nonempty, whether it lies in the
/// same square class as that rational.
pub fn square_class(coeffs: &str, versus: &str) -> Result<String, String> {
    let f = parse_descending(coeffs)?;
    let d = poly::discriminant(&f).map_err(|e| e.to_string())?;
    let same = if versus.trim().is_empty() {
        None
    } else {
        let v = parse_coefficient(versus).map_err(|e| e.to_string())?;
        Some(arith::square_class_equal(&d, &v).map_err(|e| e.to_string())?)
    };
    Ok(json!({
        "degree": f.degree(),
        "discriminant": arith::format_rational(&d),
        "is_square": arith::is_square(&d),
        "same_class": same,
    })
    .to_string())
}

#[wasm_bindgen(js_name = cubeState)]
pub fn cube_state_js(moves: &str) -> Result<String, JsValue> {
    cube_state(moves).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = frobeniusHistogram)]
pub fn frobenius_histogram_js(coeffs: &str, primes: usize) -> Result<String, JsValue> {
    frobenius_histogram(coeffs, primes).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = squareClass)]
pub fn square_class_js(coeffs: &str, versus: &str) -> Result<String, JsValue> {
    square_class(coeffs, versus).map_err(|e| JsValue::from_str(&e))
}

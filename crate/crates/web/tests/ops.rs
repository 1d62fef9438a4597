use cubegalois_web::{cube_state, frobenius_histogram, parse_descending, square_class};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

fn solved(v: &Value) -> bool {
    v["net"].as_object().unwrap().iter().all(|(face, rows)| {
        rows.as_array()
            .unwrap()
            .iter()
            .all(|r| r.as_str().unwrap().chars().all(|c| c.to_string() == *face))
    })
}

#[test]
fn turns_and_inverses() {
    assert!(solved(&parse(cube_state("").unwrap())));
    assert!(solved(&parse(cube_state("r1 r1 r1 r1").unwrap())));
    assert!(!solved(&parse(cube_state("r1 u2 f1' u2' r1'").unwrap())));
    assert!(solved(&parse(cube_state("r1 u2 u2' r1'").unwrap())));
    assert!(cube_state("x9").is_err());
}

#[test]
fn quarter_turn_signs() {
    let v = parse(cube_state("r1").unwrap());
    assert!(!solved(&v));
    let signs = v["signs"].as_object().unwrap();
    assert_eq!(signs.len(), 5);
    // An outer quarter turn moves one 4-cycle of corner pieces.
    assert_eq!(signs["corner"], -1);
    assert_eq!(v["corner_twist"], 0);
    assert_eq!(v["edge_flip"], 0);
}

#[test]
fn histogram_of_quadratic() {
    let v = parse(frobenius_histogram("1 0 -2", 30).unwrap());
    assert_eq!(v["good_primes"], 30);
    assert_eq!(v["bad_primes"], serde_json::json!([2]));
    let total: u64 = v["types"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["count"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 30);
    assert!(frobenius_histogram("1 0 -2", 0).is_err());
}

#[test]
fn discriminant_classes() {
    let v = parse(square_class("1, 0, -7", "7").unwrap());
    assert_eq!(v["discriminant"], "28");
    assert_eq!(v["same_class"], true);
    assert_eq!(v["is_square"], false);
    let v = parse(square_class("1 -3 2", "").unwrap());
    assert_eq!(v["discriminant"], "1");
    assert_eq!(v["same_class"], Value::Null);
    assert!(parse_descending("0 1").is_err());
    assert!(parse_descending("5").is_err());
}

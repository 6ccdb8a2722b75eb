//! The JSON interchange format: save a table, load it back bit-exactly,
//! and audit a hand-written file.
//!
//! ```sh
//! cargo run -p dialgebra --example files_and_json
//! ```

use dialgebra::builtins::builtin;
use dialgebra::catalog::builtin_dialgebra;
use dialgebra::checker::audit_family;
use dialgebra::io::{from_json, to_json};

fn main() {
    let e = builtin_dialgebra("E").unwrap();
    let json = to_json(&e.table, e.involution.as_ref(), serde_json::Value::Null);
    println!("E serializes to {} bytes of JSON", json.len());

    let (table, invol) = from_json(&json).unwrap();
    assert_eq!(table, e.table);
    assert_eq!(invol, e.involution);
    let again = to_json(&table, invol.as_ref(), serde_json::Value::Null);
    assert_eq!(json, again);
    println!("round trip is byte-exact");

    // a dialgebra written by hand: dim 1, e -| e = e, e |- e = 0
    let handwritten = r#"{
        "format_version": 1,
        "dim": 1,
        "basis": ["e"],
        "left":  [[["1"]]],
        "right": [[["0"]]]
    }"#;
    let (table, _) = from_json(handwritten).unwrap();
    let bar = builtin("bar").unwrap();
    let verdict = audit_family(&table, None, &bar).unwrap();
    println!(
        "hand-written table satisfies the interchange identities: {}",
        verdict.passed
    );

    // malformed scalars are rejected with the offending field path
    let broken = handwritten.replace("\"1\"", "\"1/0\"");
    match from_json(&broken) {
        Err(e) => println!("broken file rejected: {e}"),
        Ok(_) => unreachable!("a zero denominator must not load"),
    }
}

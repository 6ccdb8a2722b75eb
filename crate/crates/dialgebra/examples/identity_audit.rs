//! Identity audits: parse identities in the DSL, check them against tables,
//! and inspect the witnesses that come back on failure.
//!
//! ```sh
//! cargo run -p dialgebra --example identity_audit
//! ```

use dialgebra::catalog::builtin_dialgebra;
use dialgebra::checker::{audit, check, check_multilinear_fast};
use dialgebra::dsl::parse_identity;

fn main() {
    let f = builtin_dialgebra("F").unwrap();
    let star = f.involution.as_ref();

    // F is alternative ...
    let alt = parse_identity(
        "((a -| b) -| c) - (a -| (b -| c)) + ((c |- b) |- a) - (c |- (b |- a))",
    )
    .unwrap();
    let verdict = audit(&f.table, star, &alt).unwrap();
    println!(
        "alternative-type identity on F: {} ({} basis triples swept)",
        if verdict.passed { "holds" } else { "fails" },
        verdict.tuples_inspected.unwrap(),
    );

    // ... but not associative; the audit names a falsifying basis triple
    let inner = parse_identity("((a |- b) -| c) - (a |- (b -| c))").unwrap();
    let verdict = audit(&f.table, star, &inner).unwrap();
    println!(
        "inner associativity on F: fails at {}",
        verdict.describe_witness(&f.table)
    );

    // identities with repeated variables go through generic-element
    // evaluation: one symbolic element per variable, exact over the
    // rationals
    let square_flexible = parse_identity("((a -| a) -| a) - (a -| (a -| a))").unwrap();
    let verdict = check(&f.table, star, &square_flexible).unwrap();
    println!(
        "left associativity on a single generic element of F: {}",
        if verdict.passed { "holds" } else { "fails" }
    );

    // the two evaluation strategies always agree on multilinear identities
    let dicomm = parse_identity("(a -| b) - (b |- a)").unwrap();
    let slow = check(&f.table, star, &dicomm).unwrap();
    let fast = check_multilinear_fast(&f.table, star, &dicomm).unwrap();
    assert_eq!(slow.passed, fast.passed);
    println!(
        "dicommutativity on F: both strategies say {}; fast witness at {}",
        if fast.passed { "pass" } else { "fail" },
        fast.describe_witness(&f.table)
    );

    // starred identities need the involution
    let invol = parse_identity("(a -| b)* - (b* |- a*)").unwrap();
    let verdict = check(&f.table, star, &invol).unwrap();
    println!(
        "involution identity on F: {}",
        if verdict.passed { "holds" } else { "fails" }
    );
    assert!(check(&f.table, None, &invol).is_err(), "star needs an involution");
}

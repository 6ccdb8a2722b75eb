//! The classical chain: iterated doubling of the reals with the identity
//! involution gives the complex numbers, quaternions, octonions and the
//! 16-dimensional algebra beyond them, losing one property per step.
//!
//! ```sh
//! cargo run -p dialgebra --example classical_chain
//! ```

use dialgebra::builtins::builtin;
use dialgebra::catalog::builtin_dialgebra;
use dialgebra::checker::audit_family;

fn main() {
    let properties = ["commutative", "associative", "alternative", "flexible"];
    println!(
        "{:<4} {:>4}  {:>12} {:>12} {:>12} {:>12}",
        "alg", "dim", properties[0], properties[1], properties[2], properties[3]
    );
    for name in ["R", "C", "H", "O", "S"] {
        let entry = builtin_dialgebra(name).unwrap();
        let mut row = format!("{:<4} {:>4}", name, entry.table.dim());
        for prop in properties {
            let ids = builtin(prop).unwrap();
            let verdict = audit_family(&entry.table, entry.involution.as_ref(), &ids).unwrap();
            row.push_str(&format!(
                " {:>12}",
                if verdict.passed { "yes" } else { "no" }
            ));
        }
        println!("{row}");
    }

    // the 16-dimensional algebra fails alternativity at a concrete basis
    // triple, found by exhaustive sweep
    let s = builtin_dialgebra("S").unwrap();
    let alt = builtin("alternative").unwrap();
    let verdict = audit_family(&s.table, s.involution.as_ref(), &alt).unwrap();
    assert!(!verdict.passed);
    println!(
        "\nalternativity fails in dimension 16 at {}",
        verdict.describe_witness(&s.table)
    );
}

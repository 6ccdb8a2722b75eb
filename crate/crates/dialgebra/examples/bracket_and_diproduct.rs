//! Derived products: the Leibniz bracket `{x,y} = x -| y - y |- x` and the
//! Jordan diproduct `x o y = x -| y + y |- x` of the 8-dimensional
//! alternative dialgebra F.
//!
//! ```sh
//! cargo run -p dialgebra --example bracket_and_diproduct
//! ```

use dialgebra::builtins::builtin;
use dialgebra::catalog::builtin_dialgebra;
use dialgebra::checker::check;
use dialgebra::io::{render_table, TableView};
use dialgebra::table::DerivedOp;

fn main() {
    let f = builtin_dialgebra("F").unwrap();

    println!("Leibniz bracket of F (columns p, q vanish identically):\n");
    println!("{}", render_table(&f.table, TableView::Bracket));

    println!("Jordan diproduct of F:\n");
    println!("{}", render_table(&f.table, TableView::Jordan));

    // the diproduct satisfies the defining identities of a Jordan dialgebra,
    // checked by generic-element evaluation since two of them repeat
    // variables
    let diproduct = f.table.derived_table(DerivedOp::Diproduct);
    for name in ["right_commutative", "right_jordan", "right_osborn"] {
        for id in builtin(name).unwrap() {
            let verdict = check(&diproduct, None, &id).unwrap();
            println!(
                "{name:<20} {}",
                if verdict.passed { "holds" } else { "FAILS" }
            );
            assert!(verdict.passed);
        }
    }

    // the bracket of the associative dialgebra E satisfies the right
    // Leibniz identity; for the merely alternative F it does not
    let e = builtin_dialgebra("E").unwrap();
    for (name, entry) in [("E", &e), ("F", &f)] {
        let bracket = entry.table.derived_table(DerivedOp::Bracket);
        let leibniz = &builtin("right_leibniz").unwrap()[0];
        let verdict = check(&bracket, None, leibniz).unwrap();
        println!(
            "right Leibniz identity on the bracket of {name}: {}",
            if verdict.passed { "holds" } else { "fails" }
        );
    }
}

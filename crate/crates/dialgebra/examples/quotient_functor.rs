//! Collapsing a 0-dialgebra to an ordinary algebra modulo the ideal
//! generated by all `a |- b - a -| b`, and checking that this collapse
//! commutes with doubling.
//!
//! ```sh
//! cargo run -p dialgebra --example quotient_functor
//! ```

use dialgebra::catalog::builtin_dialgebra;
use dialgebra::doubling::{functor_commutes_check, quotient_alg};
use dialgebra::io::{render_table, TableView};
use dialgebra::rational::Rational;

fn main() {
    // the chain D -> E -> F collapses to the reals, complex numbers and
    // quaternions: the two copies of each ideal vanish and the doubled
    // structure survives
    for name in ["D", "E", "F"] {
        let entry = builtin_dialgebra(name).unwrap();
        let q = quotient_alg(&entry.table).unwrap();
        println!(
            "{name} (dim {}) collapses to dim {} (ideal dim {}):",
            entry.table.dim(),
            q.dim(),
            q.ideal.len()
        );
        println!("{}", render_table(&q.table, TableView::Left));
    }

    // an ordinary algebra is untouched: its ideal is zero
    let h = builtin_dialgebra("H").unwrap();
    let q = quotient_alg(&h.table).unwrap();
    assert!(q.table.structure_eq(&h.table));
    println!("H is already an algebra; its quotient is itself (ideal dim {})\n", q.ideal.len());

    // collapse commutes with doubling: (A + A)_alg = A_alg + A_alg
    let gamma = -Rational::one();
    for name in ["D", "E"] {
        let entry = builtin_dialgebra(name).unwrap();
        let ok = functor_commutes_check(
            &entry.table,
            entry.involution.as_ref().unwrap(),
            &gamma,
        )
        .unwrap();
        println!("collapse commutes with doubling for {name}: {ok}");
        assert!(ok);
    }
}

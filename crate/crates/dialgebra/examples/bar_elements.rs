//! Bar units and bar zeros: the replacements for a unit element in a world
//! with two products, and how a base change exposes them.
//!
//! An element `e` is a bar unit if `a -| e = a = e |- a` for all `a`, and a
//! bar zero if `a -| e = 0 = e |- a`.
//!
//! ```sh
//! cargo run -p dialgebra --example bar_elements
//! ```

use dialgebra::catalog::builtin_dialgebra;
use dialgebra::io::{render_table, TableView};
use dialgebra::linalg;
use dialgebra::rational::Rational;

fn describe(name: &str) {
    let entry = builtin_dialgebra(name).unwrap();
    let units = entry.table.bar_units();
    match &units.point {
        None => println!("{name}: no bar units"),
        Some(p) => {
            let dirs: Vec<String> = units
                .basis
                .iter()
                .map(|b| entry.table.render_combo(b))
                .collect();
            if dirs.is_empty() {
                println!("{name}: unique bar unit {}", entry.table.render_combo(p));
            } else {
                println!(
                    "{name}: bar units form {} + span{{{}}}",
                    entry.table.render_combo(p),
                    dirs.join(", ")
                );
            }
        }
    }
    let zeros = entry.table.bar_zeros();
    if zeros.is_empty() {
        println!("{name}: only 0 is a bar zero");
    } else {
        let labels: Vec<String> = zeros
            .iter()
            .map(|z| entry.table.render_combo(z))
            .collect();
        println!("{name}: bar zeros spanned by {}", labels.join(", "));
    }
    println!();
}

fn main() {
    // D has a whole line of bar units through x and y
    describe("D");

    // a base change p = (x+y)/2, q = (x-y)/2 turns the line into the
    // transparent form: p a bar unit, q a bar zero
    let d = builtin_dialgebra("D").unwrap();
    let half = Rational::new(1, 2).unwrap();
    let p = vec![
        vec![half.clone(), half.clone()],
        vec![half.clone(), -&half],
    ];
    let moved = d
        .table
        .change_basis(&p)
        .unwrap()
        .with_basis(vec!["p".into(), "q".into()])
        .unwrap();
    println!("D after the base change:");
    println!("{}", render_table(&moved, TableView::Left));
    println!("{}", render_table(&moved, TableView::Right));
    describe("D_pq");

    // doubling keeps p as a bar unit and grows the bar-zero space
    describe("E");
    describe("F");

    // round trip: changing back restores the original table exactly
    let back = moved.change_basis(&linalg::invert(&p).unwrap()).unwrap();
    assert!(back.structure_eq(&d.table));
    println!("inverse base change restores D exactly");
}

//! Doubling chain: start from the 2-dimensional dialgebra D and double
//! twice, reproducing the built-in 4- and 8-dimensional tables exactly.
//!
//! ```sh
//! cargo run -p dialgebra --example doubling_chain
//! ```

use dialgebra::catalog::builtin_dialgebra;
use dialgebra::doubling::double;
use dialgebra::io::{render_table, TableView};
use dialgebra::rational::Rational;

fn main() {
    let gamma = -Rational::one();

    let d = builtin_dialgebra("D").unwrap();
    println!("D, the unique proper commutative associative 2-dimensional");
    println!("dialgebra with involution (both x and y are bar units):\n");
    println!("{}", render_table(&d.table, TableView::Left));
    println!("{}", render_table(&d.table, TableView::Right));

    let (e_table, e_star) =
        double(&d.table, d.involution.as_ref().unwrap(), &gamma).unwrap();
    let e = builtin_dialgebra("E").unwrap();
    assert!(e_table.structure_eq(&e.table));
    assert_eq!(&e_star, e.involution.as_ref().unwrap());
    println!("double(D) = E, associative but no longer commutative:\n");
    let labeled = e_table.with_basis(e.table.basis().to_vec()).unwrap();
    println!("{}", render_table(&labeled, TableView::Left));
    println!("{}", render_table(&labeled, TableView::Right));

    let (f_table, f_star) = double(&e.table, &e_star, &gamma).unwrap();
    let f = builtin_dialgebra("F").unwrap();
    assert!(f_table.structure_eq(&f.table));
    assert_eq!(&f_star, f.involution.as_ref().unwrap());
    println!("double(E) = F, the dialgebra analogue of the octonions:\n");
    let labeled = f_table.with_basis(f.table.basis().to_vec()).unwrap();
    println!("{}", render_table(&labeled, TableView::Left));
    println!("{}", render_table(&labeled, TableView::Right));

    println!("both generated doubles equal the independently transcribed tables");
}

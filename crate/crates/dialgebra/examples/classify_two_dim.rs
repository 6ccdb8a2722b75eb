//! Classification of 2-dimensional dicommutative associative dialgebras
//! with the swap involution: generate the constraint equations from the
//! identity machinery, verify the solution families symbolically, and sweep
//! a coefficient grid.
//!
//! ```sh
//! cargo run -p dialgebra --example classify_two_dim
//! ```

use dialgebra::catalog::builtin_dialgebra;
use dialgebra::classify2d::{constraint_system, families, grid_search, proper_solutions, Point8};
use dialgebra::rational::Rational;

fn main() {
    let sys = constraint_system();
    println!("constraint equations generated from the identities themselves:");
    for (label, block) in [
        ("interchange", &sys.bar),
        ("left associativity", &sys.left_assoc),
        ("inner associativity", &sys.inner_assoc),
        ("involution", &sys.involution),
    ] {
        println!("  {label} ({}):", block.len());
        for p in block {
            println!("    {} = 0", sys.render(p));
        }
    }
    println!("  total: {}\n", sys.len());

    for fam in families() {
        let mut pool = sys.pool().clone();
        let point = fam.symbolic_point(&mut pool);
        println!(
            "family {:<14} satisfies the system symbolically: {}",
            fam.name(),
            sys.eval_symbolic(&point)
        );
    }

    let grid = vec![-Rational::one(), Rational::zero(), Rational::one()];
    let sols = grid_search(&grid).unwrap();
    println!("\ngrid {{-1, 0, 1}}^8: {} of 6561 points solve the system", sols.len());
    for s in &sols {
        println!(
            "  {} {} in {}",
            s.point.render(),
            if s.proper { "[proper]" } else { "        " },
            s.families.join(" & "),
        );
    }

    let points: Vec<Point8> = sols.iter().map(|s| s.point.clone()).collect();
    let proper = proper_solutions(&points);
    println!(
        "\n{} proper solutions (distinct left and right products), equal up to sign",
        proper.len()
    );
    let (table, invol) = proper
        .iter()
        .find(|p| !p.consts[0].is_negative())
        .unwrap()
        .to_table();
    let d = builtin_dialgebra("D").unwrap();
    assert!(table.structure_eq(&d.table));
    assert_eq!(&invol, d.involution.as_ref().unwrap());
    println!("the positive one is exactly the catalog dialgebra D");
}

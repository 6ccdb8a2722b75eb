//! The central-argument transform: from one-operation identities to
//! dialgebra identities, with the family's equivalence structure.
//!
//! ```sh
//! cargo run -p dialgebra --example kp_transform
//! ```

use dialgebra::dsl::{parse_identity, render_identity};
use dialgebra::kp::{kp_family, kp_identity, kp_involution, zero_identities};

fn show(title: &str, fam: &dialgebra::kp::KpFamily) {
    println!("{title}");
    for (central, image) in &fam.raw {
        println!("  central {central}: {}", render_identity(&image.to_identity()));
    }
    for (i, j) in &fam.star_pairs {
        println!("  images {} and {} are star-conjugates", i + 1, j + 1);
    }
    let kept: Vec<String> = fam.minimal.iter().map(|i| (i + 1).to_string()).collect();
    println!("  independent up to renaming and combination: images {}\n", kept.join(", "));
}

fn main() {
    // the interchange identities come first: they say the two new
    // operations are interchangeable in the off-center argument
    println!("interchange identities (always added):");
    for id in zero_identities() {
        println!("  {}", render_identity(&id));
    }
    println!();

    let comm = parse_identity("(a.b) - (b.a)").unwrap();
    show("commutativity:", &kp_identity(&comm).unwrap());

    let assoc = parse_identity("((a.b).c) - (a.(b.c))").unwrap();
    show("associativity:", &kp_identity(&assoc).unwrap());

    let flex = parse_identity("((a.b).c) - (a.(b.c)) + ((c.b).a) - (c.(b.a))").unwrap();
    show("flexibility:", &kp_identity(&flex).unwrap());

    // the two alternativity linearizations produce six images; three of
    // them already generate every multilinear consequence
    let left = parse_identity("((a.b).c) - (a.(b.c)) + ((b.a).c) - (b.(a.c))").unwrap();
    let right = parse_identity("((a.b).c) - (a.(b.c)) + ((a.c).b) - (a.(c.b))").unwrap();
    show(
        "left + right alternativity:",
        &kp_family(&[left, right]).unwrap(),
    );

    println!("involution identities:");
    for id in kp_involution() {
        println!("  {}", render_identity(&id));
    }
}

//! The builtin identity catalog.
//!
//! Every named family used by the checker and the CLI lives here, written in
//! the DSL so the definitions stay independently readable. Dialgebra-mode
//! names are prefixed `di_` where an algebra-mode family of the same flavor
//! exists.

use crate::error::Error;
use crate::identity::Identity;

/// The two monomials of one associator of the dialgebra products.
fn assoc_terms(kind: char, x: &str, y: &str, z: &str) -> (String, String) {
    match kind {
        'l' => (
            format!("(({x} -| {y}) -| {z})"),
            format!("({x} -| ({y} -| {z}))"),
        ),
        'i' => (
            format!("(({x} |- {y}) -| {z})"),
            format!("({x} |- ({y} -| {z}))"),
        ),
        'r' => (
            format!("(({x} |- {y}) |- {z})"),
            format!("({x} |- ({y} |- {z}))"),
        ),
        _ => unreachable!(),
    }
}

/// The associator written out with a leading plus, e.g. `(xy)z - x(yz)`.
fn assoc(kind: char, x: &str, y: &str, z: &str) -> String {
    let (a, b) = assoc_terms(kind, x, y, z);
    format!("{a} - {b}")
}

/// The negated associator, sign distributed over both monomials.
fn neg_assoc(kind: char, x: &str, y: &str, z: &str) -> String {
    let (a, b) = assoc_terms(kind, x, y, z);
    format!("- {a} + {b}")
}

fn entry(name: &str) -> Option<Vec<String>> {
    let own = |v: &[&str]| Some(v.iter().map(|s| s.to_string()).collect());
    match name {
        // ---- dialgebra mode ----
        "bar" => own(&[
            "(a -| (b -| c)) - (a -| (b |- c))",
            "((a -| b) |- c) - ((a |- b) |- c)",
        ]),
        "dicommutative" => own(&["(a -| b) - (b |- a)"]),
        "left_associative" => own(&["((a -| b) -| c) - (a -| (b -| c))"]),
        "inner_associative" => own(&["((a |- b) -| c) - (a |- (b -| c))"]),
        "right_associative" => own(&["((a |- b) |- c) - (a |- (b |- c))"]),
        "di_associative" => Some(
            ["left_associative", "inner_associative", "right_associative"]
                .iter()
                .flat_map(|n| entry(n).unwrap())
                .collect(),
        ),
        "di_alternative" => Some(vec![
            format!("{} + {}", assoc('l', "a", "b", "c"), assoc('r', "c", "b", "a")),
            format!("{} {}", assoc('l', "a", "b", "c"), neg_assoc('r', "b", "c", "a")),
            format!("{} + {}", assoc('i', "a", "b", "c"), assoc('r', "a", "c", "b")),
        ]),
        "di_flexible" => Some(vec![
            format!("{} + {}", assoc('l', "a", "b", "c"), assoc('r', "c", "b", "a")),
            format!("{} + {}", assoc('i', "a", "b", "c"), assoc('i', "c", "b", "a")),
        ]),
        "involution" => own(&[
            "(a -| b)* - (b* |- a*)",
            "(a |- b)* - (b* -| a*)",
            "a** - a",
        ]),
        "partially_symmetric" => own(&[
            "(a -| b) + (a* -| b) - (b |- a) - (b |- a*)",
            "(a -| b) + (a -| b*) - (b |- a) - (b* |- a)",
        ]),
        // star insertion on each argument of each associator
        "symmetric" => Some(
            ["x*yz", "xy*z", "xyz*"]
                .iter()
                .flat_map(|starred| {
                    let (x, y, z) = match *starred {
                        "x*yz" => ("x*", "y", "z"),
                        "xy*z" => ("x", "y*", "z"),
                        _ => ("x", "y", "z*"),
                    };
                    ['l', 'i', 'r'].map(move |k| {
                        format!("{} + {}", assoc(k, "x", "y", "z"), assoc(k, x, y, z))
                    })
                })
                .collect(),
        ),
        // star-and-reverse associator identities that hold in flexible
        // dialgebras with the symmetric star insertions
        "flexible_star_variants" => Some(vec![
            format!("{} + {}", assoc('l', "x", "y", "z"), assoc('r', "z*", "y*", "x")),
            format!("{} + {}", assoc('l', "x", "y", "z"), assoc('r', "z", "y*", "x*")),
            format!("{} + {}", assoc('i', "x", "y", "z"), assoc('i', "z*", "y*", "x")),
            format!("{} + {}", assoc('i', "x", "y", "z"), assoc('i', "z", "y*", "x*")),
            format!("{} {}", assoc('l', "x", "y", "z"), neg_assoc('l', "x*", "y*", "z")),
            format!("{} {}", assoc('i', "x", "y", "z"), neg_assoc('i', "x*", "y*", "z")),
        ]),
        // the right associator is the star of the reversed left associator
        "associator_duality" => Some(vec![format!(
            "{} + ((z* -| y*) -| x*)* - (z* -| (y* -| x*))*",
            assoc('r', "x", "y", "z")
        )]),
        // sym(t) = t + t* moves stars across the left product
        "sym_star_shift" => own(&[
            "(x -| y*) + (x -| y*)* - (x* -| y) - (x* -| y)*",
            "(x -| y) + (x -| y)* - (x* -| y*) - (x* -| y*)*",
        ]),
        // sym of the bracket x -| y - y |- x vanishes
        "sym_bracket" => own(&["(x -| y) - (y |- x) + (x -| y)* - (y |- x)*"]),
        // ---- algebra mode ----
        "commutative" => own(&["(a . b) - (b . a)"]),
        "associative" => own(&["((a . b) . c) - (a . (b . c))"]),
        // linearizations of (a,a,b) = 0 and (a,b,b) = 0
        "alternative" => own(&[
            "((a . b) . c) - (a . (b . c)) + ((b . a) . c) - (b . (a . c))",
            "((a . b) . c) - (a . (b . c)) + ((a . c) . b) - (a . (c . b))",
        ]),
        // linearization of (a,b,a) = 0
        "flexible" => own(&["((a . b) . c) - (a . (b . c)) + ((c . b) . a) - (c . (b . a))"]),
        "right_commutative" => own(&["(a . (b . c)) - (a . (c . b))"]),
        "right_jordan" => own(&["((b . (a . a)) . a) - ((b . a) . (a . a))"]),
        "right_osborn" => own(&[
            "((a . b) . (c . c)) - (a . (b . (c . c))) - 2 (((a . c) . b) . c) + 2 ((a . c) . (b . c))",
        ]),
        "jordan_dialgebra" => Some(
            ["right_commutative", "right_jordan", "right_osborn"]
                .iter()
                .flat_map(|n| entry(n).unwrap())
                .collect(),
        ),
        "right_leibniz" => own(&["(a . (b . c)) - ((a . b) . c) + ((a . c) . b)"]),
        _ => None,
    }
}

pub fn builtin_names() -> &'static [&'static str] {
    &[
        "bar",
        "dicommutative",
        "left_associative",
        "inner_associative",
        "right_associative",
        "di_associative",
        "di_alternative",
        "di_flexible",
        "involution",
        "partially_symmetric",
        "symmetric",
        "flexible_star_variants",
        "associator_duality",
        "sym_star_shift",
        "sym_bracket",
        "commutative",
        "associative",
        "alternative",
        "flexible",
        "right_commutative",
        "right_jordan",
        "right_osborn",
        "jordan_dialgebra",
        "right_leibniz",
    ]
}

/// Looks up a named identity family.
pub fn builtin(name: &str) -> Result<Vec<Identity>, Error> {
    let sources = entry(name).ok_or_else(|| Error::UnknownIdentity(name.to_string()))?;
    sources
        .iter()
        .map(|s| crate::dsl::parse_identity(s))
        .collect()
}

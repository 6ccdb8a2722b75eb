//! Builtin dialgebra catalog.
//!
//! `D`, `D_pq`, `E` and `F` are hard-coded transcriptions of their source
//! tables, deliberately not generated, so that the doubling functor can be
//! tested against independent data. The classical chain `R`, `C`, `H`, `O`,
//! `S` is generated by iterated doubling of the reals with the identity
//! involution at `γ = -1`, and memoized.

use std::sync::OnceLock;

use crate::doubling::double;
use crate::error::Error;
use crate::linalg::{self, Vector};
use crate::rational::Rational;
use crate::table::{DialgebraTable, Involution};

/// A named catalog entry.
#[derive(Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub table: DialgebraTable,
    pub involution: Option<Involution>,
    pub provenance: String,
}

pub fn catalog_names() -> &'static [&'static str] {
    &["D", "D_pq", "E", "F", "R", "C", "H", "O", "S"]
}

fn parse_grid(basis: &[&str], rows: &[&str]) -> Vec<Vec<Vector>> {
    let labels: Vec<String> = basis.iter().map(|s| s.to_string()).collect();
    rows.iter()
        .map(|row| {
            row.split_whitespace()
                .map(|cell| parse_cell(&labels, cell))
                .collect()
        })
        .collect()
}

fn parse_cell(basis: &[String], cell: &str) -> Vector {
    let mut coords = linalg::zero_vector(basis.len());
    if cell == "0" {
        return coords;
    }
    let (sign, name) = match cell.strip_prefix('-') {
        Some(rest) => (-Rational::one(), rest),
        None => (Rational::one(), cell),
    };
    let idx = basis
        .iter()
        .position(|b| b == name)
        .unwrap_or_else(|| panic!("unknown basis label {name:?}"));
    coords[idx] = sign;
    coords
}

fn signed_swap_involution(images: &[(usize, i64)]) -> Involution {
    let n = images.len();
    let imgs = images
        .iter()
        .map(|&(j, sign)| {
            let mut v = linalg::zero_vector(n);
            v[j] = Rational::from_int(sign);
            v
        })
        .collect();
    Involution::from_images(imgs).expect("signed permutation squares to identity")
}

fn entry_d() -> CatalogEntry {
    let basis = ["x", "y"];
    let left = parse_grid(&basis, &["x x", "y y"]);
    let right = parse_grid(&basis, &["x y", "x y"]);
    CatalogEntry {
        name: "D".into(),
        table: DialgebraTable::new(vec!["x".into(), "y".into()], left, right).unwrap(),
        involution: Some(signed_swap_involution(&[(1, 1), (0, 1)])),
        provenance: "the proper 2-dimensional commutative associative dialgebra \
                     with involution x* = y; both x and y are bar units"
            .into(),
    }
}

fn entry_d_pq() -> CatalogEntry {
    let basis = ["p", "q"];
    let left = parse_grid(&basis, &["p 0", "q 0"]);
    let right = parse_grid(&basis, &["p q", "0 0"]);
    CatalogEntry {
        name: "D_pq".into(),
        table: DialgebraTable::new(vec!["p".into(), "q".into()], left, right).unwrap(),
        involution: Some(signed_swap_involution(&[(0, 1), (1, -1)])),
        provenance: "D over the basis p = (x+y)/2, q = (x-y)/2; p is a bar unit \
                     and q is a bar zero"
            .into(),
    }
}

fn entry_e() -> CatalogEntry {
    let basis = ["p", "q", "r", "s"];
    let left = parse_grid(
        &basis,
        &["p p s s", "q q r r", "r r -q -q", "s s -p -p"],
    );
    let right = parse_grid(
        &basis,
        &["p q r s", "p q r s", "r s -p -q", "r s -p -q"],
    );
    CatalogEntry {
        name: "E".into(),
        table: DialgebraTable::new(basis.iter().map(|s| s.to_string()).collect(), left, right)
            .unwrap(),
        involution: Some(signed_swap_involution(&[(1, 1), (0, 1), (2, -1), (3, -1)])),
        provenance: "4-dimensional double of D: associative with involution, \
                     not commutative"
            .into(),
    }
}

fn entry_f() -> CatalogEntry {
    let basis = ["p", "q", "r", "s", "t", "u", "v", "w"];
    let left = parse_grid(
        &basis,
        &[
            "p p s s u u v v",
            "q q r r t t w w",
            "r r -q -q -v -v u u",
            "s s -p -p -w -w t t",
            "t t v v -q -q -s -s",
            "u u w w -p -p -r -r",
            "v v -t -t r r -p -p",
            "w w -u -u s s -q -q",
        ],
    );
    let right = parse_grid(
        &basis,
        &[
            "p q r s t u v w",
            "p q r s t u v w",
            "r s -p -q -v -w t u",
            "r s -p -q -v -w t u",
            "t u v w -p -q -r -s",
            "t u v w -p -q -r -s",
            "w v -u -t s r -q -p",
            "w v -u -t s r -q -p",
        ],
    );
    CatalogEntry {
        name: "F".into(),
        table: DialgebraTable::new(basis.iter().map(|s| s.to_string()).collect(), left, right)
            .unwrap(),
        involution: Some(signed_swap_involution(&[
            (1, 1),
            (0, 1),
            (2, -1),
            (3, -1),
            (4, -1),
            (5, -1),
            (6, -1),
            (7, -1),
        ])),
        provenance: "8-dimensional double of E, the dialgebra analogue of the \
                     octonions: alternative with involution, neither commutative \
                     nor associative"
            .into(),
    }
}

fn classical_chain() -> &'static [CatalogEntry; 5] {
    static CHAIN: OnceLock<[CatalogEntry; 5]> = OnceLock::new();
    CHAIN.get_or_init(|| {
        let one = vec![vec![vec![Rational::one()]]];
        let reals = DialgebraTable::new(vec!["e".into()], one.clone(), one).unwrap();
        let r = CatalogEntry {
            name: "R".into(),
            table: reals,
            involution: Some(Involution::identity(1)),
            provenance: "the reals with the identity involution".into(),
        };
        let gamma = -Rational::one();
        let mut chain = Vec::with_capacity(5);
        chain.push(r);
        let specs: [(&str, &str, Option<&[&str]>); 4] = [
            ("C", "complex numbers: commutative and associative", Some(&["one", "i"])),
            (
                "H",
                "quaternions: associative, not commutative",
                Some(&["one", "i", "j", "k"]),
            ),
            ("O", "octonions: alternative, not associative", None),
            (
                "S",
                "16-dimensional double of the octonions: flexible, not alternative",
                None,
            ),
        ];
        for (name, provenance, labels) in specs {
            let prev = chain.last().unwrap();
            let (table, invol) =
                double(&prev.table, prev.involution.as_ref().unwrap(), &gamma)
                    .expect("classical doubling");
            let table = match labels {
                Some(ls) => table
                    .with_basis(ls.iter().map(|s| s.to_string()).collect())
                    .unwrap(),
                None => table
                    .with_basis((0..table.dim()).map(|i| format!("e{i}")).collect())
                    .unwrap(),
            };
            chain.push(CatalogEntry {
                name: name.into(),
                table,
                involution: Some(invol),
                provenance: provenance.into(),
            });
        }
        chain.try_into().ok().unwrap()
    })
}

/// Looks up a builtin algebra by name.
pub fn builtin_dialgebra(name: &str) -> Result<CatalogEntry, Error> {
    match name {
        "D" => Ok(entry_d()),
        "D_pq" => Ok(entry_d_pq()),
        "E" => Ok(entry_e()),
        "F" => Ok(entry_f()),
        "R" | "C" | "H" | "O" | "S" => {
            let idx = ["R", "C", "H", "O", "S"]
                .iter()
                .position(|n| *n == name)
                .unwrap();
            Ok(classical_chain()[idx].clone())
        }
        _ => Err(Error::UnknownAlgebra(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::checker::audit_family;
    use crate::linalg::RowSpace;

    #[test]
    fn lookup_and_unknown() {
        for name in catalog_names() {
            let e = builtin_dialgebra(name).unwrap();
            assert_eq!(&e.name, name);
            assert!(e.involution.is_some());
        }
        assert!(builtin_dialgebra("X").is_err());
    }

    #[test]
    fn f_left_table_spot_checks() {
        let f = builtin_dialgebra("F").unwrap();
        // row t, column v of the left product is -s
        let tv = f.table.left_entry(4, 6);
        assert_eq!(f.table.render_combo(tv), "-s");
        // row w, column p of the right product is w
        let wp = f.table.right_entry(7, 0);
        assert_eq!(f.table.render_combo(wp), "w");
    }

    #[test]
    fn d_pq_matches_base_change_of_d() {
        let d = builtin_dialgebra("D").unwrap();
        let d_pq = builtin_dialgebra("D_pq").unwrap();
        let half = Rational::new(1, 2).unwrap();
        let p = vec![
            vec![half.clone(), half.clone()],
            vec![half.clone(), -&half],
        ];
        let moved = d.table.change_basis(&p).unwrap();
        assert!(moved.structure_eq(&d_pq.table));
        let moved_invol = d.involution.unwrap().conjugate(&p).unwrap();
        assert_eq!(&moved_invol, d_pq.involution.as_ref().unwrap());
    }

    #[test]
    fn d_pq_bar_elements() {
        let d_pq = builtin_dialgebra("D_pq").unwrap();
        // q spans the bar zeros
        let zeros = d_pq.table.bar_zeros();
        assert_eq!(zeros.len(), 1);
        let mut space = RowSpace::new();
        space.insert(&zeros[0]);
        assert!(space.contains(&vec![Rational::zero(), Rational::one()]));
        // p is a bar unit
        let units = d_pq.table.bar_units();
        let point = units.point.unwrap();
        let mut line = RowSpace::new();
        for b in &units.basis {
            line.insert(b);
        }
        let diff = crate::linalg::vec_sub(
            &vec![Rational::one(), Rational::zero()],
            &point,
        );
        assert!(line.contains(&diff));
        // in F the paired columns of the left product coincide, so the
        // differences p-q, r-s, t-u, v-w are bar zeros
        let f = builtin_dialgebra("F").unwrap();
        let zeros = f.table.bar_zeros();
        assert_eq!(zeros.len(), 4);
        let mut span = RowSpace::new();
        for z in &zeros {
            span.insert(z);
        }
        let mut pq = crate::linalg::zero_vector(8);
        pq[0] = Rational::one();
        pq[1] = -Rational::one();
        assert!(span.contains(&pq));
        // bar units survive doubling: p is still one in F
        let units = f.table.bar_units();
        let point = units.point.expect("F keeps a bar unit");
        let mut space = RowSpace::new();
        for b in &units.basis {
            space.insert(b);
        }
        let mut p_vec = crate::linalg::zero_vector(8);
        p_vec[0] = Rational::one();
        assert!(space.contains(&crate::linalg::vec_sub(&p_vec, &point)));
    }

    #[test]
    fn e_bracket_and_diproduct_entries() {
        let e = builtin_dialgebra("E").unwrap();
        let el = |i: usize| crate::table::Element::basis(i, 4);
        // the full bracket table of E
        let golden: [[&str; 4]; 4] = [
            ["0", "0", "-r+s", "-r+s"],
            ["0", "0", "r-s", "r-s"],
            ["0", "0", "p-q", "p-q"],
            ["0", "0", "-p+q", "-p+q"],
        ];
        for i in 0..4 {
            for j in 0..4 {
                let b = e.table.leibniz_bracket(&el(i), &el(j)).unwrap();
                assert_eq!(
                    b.as_rationals().unwrap(),
                    e.table.parse_combo(golden[i][j]).unwrap(),
                    "bracket entry ({i},{j})"
                );
            }
        }
        // p |- q = q
        assert_eq!(e.table.right_mul(&el(0), &el(1)).unwrap(), el(1));
        // in F, p o p = 2p
        let f = builtin_dialgebra("F").unwrap();
        let p8 = crate::table::Element::basis(0, 8);
        assert_eq!(
            f.table.jordan_diproduct(&p8, &p8).unwrap(),
            p8.scale(&Rational::from_int(2))
        );
    }

    #[test]
    fn bar_identities_come_in_pairs_on_the_catalog() {
        // in the presence of the involution identities, the left and right
        // interchange identities stand or fall together; check pairwise
        let bar = builtin("bar").unwrap();
        for name in catalog_names() {
            let e = builtin_dialgebra(name).unwrap();
            let invol_ok =
                audit_family(&e.table, e.involution.as_ref(), &builtin("involution").unwrap())
                    .unwrap()
                    .passed;
            assert!(invol_ok, "{name} satisfies the involution identities");
            let left = crate::checker::audit(&e.table, None, &bar[0]).unwrap().passed;
            let right = crate::checker::audit(&e.table, None, &bar[1]).unwrap().passed;
            assert_eq!(left, right, "{name}: the interchange identities pair up");
        }
    }

    #[test]
    fn classical_entries_are_algebras() {
        for name in ["R", "C", "H", "O", "S"] {
            let e = builtin_dialgebra(name).unwrap();
            assert!(e.table.is_algebra(), "{name} has coinciding products");
        }
    }

    #[test]
    fn classical_chain_audit() {
        let gamma_check = |name: &str, pass: &[&str], fail: &[&str]| {
            let e = builtin_dialgebra(name).unwrap();
            for fam in pass {
                let v = audit_family(&e.table, e.involution.as_ref(), &builtin(fam).unwrap())
                    .unwrap();
                assert!(v.passed, "{name} should satisfy {fam}");
            }
            for fam in fail {
                let v = audit_family(&e.table, e.involution.as_ref(), &builtin(fam).unwrap())
                    .unwrap();
                assert!(!v.passed, "{name} should not satisfy {fam}");
            }
        };
        gamma_check("C", &["commutative", "associative"], &[]);
        gamma_check("H", &["associative"], &["commutative"]);
        gamma_check("O", &["alternative", "flexible"], &["associative"]);
        gamma_check("S", &["flexible"], &["alternative"]);
    }

    #[test]
    fn catalog_provenance_audit() {
        // every entry passes what its provenance claims
        let d = builtin_dialgebra("D").unwrap();
        let rep = crate::checker::classify_predicates(&d.table, d.involution.as_ref()).unwrap();
        assert!(rep.passed("zero_dialgebra"));
        assert!(rep.passed("dicommutative"));
        assert!(rep.passed("di_associative"));
        assert!(rep.passed("involution"));
        assert!(!d.table.is_algebra(), "D is proper");

        let e = builtin_dialgebra("E").unwrap();
        let rep = crate::checker::classify_predicates(&e.table, e.involution.as_ref()).unwrap();
        assert!(rep.passed("zero_dialgebra"));
        assert!(rep.passed("di_associative"));
        assert!(rep.passed("involution"));
        assert!(!rep.passed("dicommutative"));
        assert!(rep.passed("leibniz_bracket"));

        let f = builtin_dialgebra("F").unwrap();
        let rep = crate::checker::classify_predicates(&f.table, f.involution.as_ref()).unwrap();
        assert!(rep.passed("zero_dialgebra"));
        assert!(rep.passed("di_alternative"));
        assert!(rep.passed("involution"));
        assert!(!rep.passed("di_associative"));
        assert!(!rep.passed("dicommutative"));
    }
}

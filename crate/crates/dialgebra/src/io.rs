//! JSON file format and multiplication-table rendering.
//!
//! Schema (format_version 1):
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "dim": 2,
//!   "basis": ["x", "y"],
//!   "left":  [[["1","0"],["1","0"]], [["0","1"],["0","1"]]],
//!   "right": [[["1","0"],["0","1"]], [["1","0"],["0","1"]]],
//!   "involution": [["0","1"],["1","0"]],
//!   "meta": {}
//! }
//! ```
//!
//! Scalars are the strings `"p/q"` (or `"p"`); `left[i][j]` is the
//! coordinate vector of `e_i -| e_j`. The `involution` field is optional.
//! Serialization is deterministic, so canonical comparisons can be done on
//! the emitted strings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::Vector;
use crate::rational::Rational;
use crate::table::{DerivedOp, DialgebraTable, Involution};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct TableFile {
    format_version: u32,
    dim: usize,
    basis: Vec<String>,
    left: Vec<Vec<Vec<String>>>,
    right: Vec<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    involution: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "serde_json::Value::is_null")]
    meta: serde_json::Value,
}

fn schema_err(path: String, msg: impl Into<String>) -> Error {
    Error::Schema {
        path,
        msg: msg.into(),
    }
}

fn encode_table(t: &[Vec<Vector>]) -> Vec<Vec<Vec<String>>> {
    t.iter()
        .map(|row| {
            row.iter()
                .map(|v| v.iter().map(Rational::to_string).collect())
                .collect()
        })
        .collect()
}

fn decode_rational(path: &str, s: &str) -> Result<Rational, Error> {
    s.parse()
        .map_err(|e: Error| schema_err(path.to_string(), e.to_string()))
}

fn decode_table(
    name: &str,
    dim: usize,
    raw: &[Vec<Vec<String>>],
) -> Result<Vec<Vec<Vector>>, Error> {
    if raw.len() != dim {
        return Err(schema_err(
            name.to_string(),
            format!("expected {dim} rows, found {}", raw.len()),
        ));
    }
    let mut out = Vec::with_capacity(dim);
    for (i, row) in raw.iter().enumerate() {
        if row.len() != dim {
            return Err(schema_err(
                format!("{name}[{i}]"),
                format!("expected {dim} entries, found {}", row.len()),
            ));
        }
        let mut orow = Vec::with_capacity(dim);
        for (j, v) in row.iter().enumerate() {
            if v.len() != dim {
                return Err(schema_err(
                    format!("{name}[{i}][{j}]"),
                    format!("expected {dim} coordinates, found {}", v.len()),
                ));
            }
            let mut vec = Vec::with_capacity(dim);
            for (k, s) in v.iter().enumerate() {
                vec.push(decode_rational(&format!("{name}[{i}][{j}][{k}]"), s)?);
            }
            orow.push(vec);
        }
        out.push(orow);
    }
    Ok(out)
}

/// Serializes to the canonical JSON form.
pub fn to_json(
    table: &DialgebraTable,
    invol: Option<&Involution>,
    meta: serde_json::Value,
) -> String {
    let file = TableFile {
        format_version: FORMAT_VERSION,
        dim: table.dim(),
        basis: table.basis().to_vec(),
        left: encode_table(table.left_table()),
        right: encode_table(table.right_table()),
        involution: invol.map(|s| {
            s.matrix()
                .iter()
                .map(|row| row.iter().map(Rational::to_string).collect())
                .collect()
        }),
        meta,
    };
    serde_json::to_string_pretty(&file).expect("serialization cannot fail")
}

/// Parses and validates the JSON form.
pub fn from_json(src: &str) -> Result<(DialgebraTable, Option<Involution>), Error> {
    let file: TableFile = serde_json::from_str(src)?;
    if file.format_version != FORMAT_VERSION {
        return Err(schema_err(
            "format_version".into(),
            format!("unsupported version {}", file.format_version),
        ));
    }
    if file.dim == 0 {
        return Err(schema_err("dim".into(), "dimension must be positive"));
    }
    if file.basis.len() != file.dim {
        return Err(schema_err(
            "basis".into(),
            format!(
                "expected {} labels, found {}",
                file.dim,
                file.basis.len()
            ),
        ));
    }
    for (i, b) in file.basis.iter().enumerate() {
        if file.basis[..i].contains(b) {
            return Err(schema_err(
                format!("basis[{i}]"),
                format!("duplicate label {b:?}"),
            ));
        }
    }
    let left = decode_table("left", file.dim, &file.left)?;
    let right = decode_table("right", file.dim, &file.right)?;
    let table = DialgebraTable::new(file.basis, left, right)?;
    let involution = match file.involution {
        None => None,
        Some(raw) => {
            if raw.len() != file.dim || raw.iter().any(|r| r.len() != file.dim) {
                return Err(schema_err(
                    "involution".into(),
                    format!("matrix must be {0}x{0}", file.dim),
                ));
            }
            let mut m = Vec::with_capacity(file.dim);
            for (i, row) in raw.iter().enumerate() {
                let mut orow = Vec::with_capacity(file.dim);
                for (j, s) in row.iter().enumerate() {
                    orow.push(decode_rational(&format!("involution[{i}][{j}]"), s)?);
                }
                m.push(orow);
            }
            Some(Involution::new(m)?)
        }
    };
    Ok((table, involution))
}

pub fn save(
    path: &Path,
    table: &DialgebraTable,
    invol: Option<&Involution>,
    meta: serde_json::Value,
) -> Result<(), Error> {
    std::fs::write(path, to_json(table, invol, meta))?;
    Ok(())
}

pub fn load(path: &Path) -> Result<(DialgebraTable, Option<Involution>), Error> {
    let src = std::fs::read_to_string(path)?;
    from_json(&src)
}

/// Which multiplication grid to print.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableView {
    Left,
    Right,
    Bracket,
    Jordan,
}

impl TableView {
    fn symbol(self) -> &'static str {
        match self {
            TableView::Left => "-|",
            TableView::Right => "|-",
            TableView::Bracket => "[,]",
            TableView::Jordan => "o",
        }
    }
}

/// Renders an aligned grid, rows and columns in basis order, entries as
/// signed combinations of basis labels.
pub fn render_table(table: &DialgebraTable, view: TableView) -> String {
    let n = table.dim();
    let derived;
    let (t, src) = match view {
        TableView::Left => (table.left_table(), table),
        TableView::Right => (table.right_table(), table),
        TableView::Bracket => {
            derived = table.derived_table(DerivedOp::Bracket);
            (derived.left_table(), table)
        }
        TableView::Jordan => {
            derived = table.derived_table(DerivedOp::Diproduct);
            (derived.left_table(), table)
        }
    };
    let cells: Vec<Vec<String>> = (0..n)
        .map(|i| (0..n).map(|j| src.render_combo(&t[i][j])).collect())
        .collect();
    let mut widths: Vec<usize> = (0..n)
        .map(|j| {
            cells
                .iter()
                .map(|row| row[j].len())
                .chain([table.basis()[j].len()])
                .max()
                .unwrap()
        })
        .collect();
    let label_w = table
        .basis()
        .iter()
        .map(String::len)
        .chain([view.symbol().len()])
        .max()
        .unwrap();
    for w in widths.iter_mut() {
        *w += 1;
    }

    let mut out = String::new();
    out.push_str(&format!("{:>label_w$} |", view.symbol()));
    for j in 0..n {
        out.push_str(&format!("{:>w$}", table.basis()[j], w = widths[j]));
    }
    out.push('\n');
    out.push_str(&"-".repeat(label_w + 1));
    out.push('+');
    out.push_str(&"-".repeat(widths.iter().sum::<usize>()));
    out.push('\n');
    for i in 0..n {
        out.push_str(&format!("{:>label_w$} |", table.basis()[i]));
        for j in 0..n {
            out.push_str(&format!("{:>w$}", cells[i][j], w = widths[j]));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_dialgebra;

    #[test]
    fn roundtrip_is_byte_exact() {
        let e = builtin_dialgebra("E").unwrap();
        let json = to_json(&e.table, e.involution.as_ref(), serde_json::Value::Null);
        let (table, invol) = from_json(&json).unwrap();
        assert_eq!(table, e.table);
        assert_eq!(invol, e.involution);
        let again = to_json(&table, invol.as_ref(), serde_json::Value::Null);
        assert_eq!(json, again);
    }

    #[test]
    fn schema_violations_carry_paths() {
        let e = builtin_dialgebra("D").unwrap();
        let json = to_json(&e.table, e.involution.as_ref(), serde_json::Value::Null);
        // denominator zero
        let bad = json.replacen("\"1\"", "\"1/0\"", 1);
        match from_json(&bad) {
            Err(Error::Schema { path, .. }) => assert!(path.starts_with("left")),
            other => panic!("expected schema error, got {other:?}"),
        }
        // non-square involution
        let bad = json.replace(
            "\"involution\": [",
            "\"involution\": [[\"0\"],[",
        );
        assert!(from_json(&bad).is_err());
        // duplicate basis label
        let bad = json.replace("\"y\"", "\"x\"");
        match from_json(&bad) {
            Err(Error::Schema { path, .. }) => assert_eq!(path, "basis[1]"),
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn loaded_f_is_alternative() {
        let f = builtin_dialgebra("F").unwrap();
        let json = to_json(&f.table, f.involution.as_ref(), serde_json::Value::Null);
        let (table, _) = from_json(&json).unwrap();
        let ids = crate::builtins::builtin("di_alternative").unwrap();
        let v = crate::checker::audit_family(&table, None, &ids).unwrap();
        assert!(v.passed);
    }

    #[test]
    fn render_d_left_grid() {
        let d = builtin_dialgebra("D").unwrap();
        let s = render_table(&d.table, TableView::Left);
        let expected = "\
-| | x y
---+----
 x | x x
 y | y y
";
        assert_eq!(s, expected);
    }

    #[test]
    fn render_is_deterministic() {
        let f = builtin_dialgebra("F").unwrap();
        let a = render_table(&f.table, TableView::Bracket);
        let b = render_table(&f.table, TableView::Bracket);
        assert_eq!(a, b);
        assert!(a.contains("-2v"));
    }
}

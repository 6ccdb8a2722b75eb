//! Command-line surface.
//!
//! Exit codes: `0` success (all checks passed), `1` an identity check
//! failed, `2` usage, schema or I/O error. Anywhere a file path is
//! expected, `builtin:<name>` loads a catalog entry and `-` reads stdin, so
//! pipelines can stay self-contained.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::builtins::builtin;
use crate::catalog::builtin_dialgebra;
use crate::checker::{audit_family, classify_predicates};
use crate::doubling::{diamond_double, double, quotient_alg};
use crate::error::Error;
use crate::identity::Identity;
use crate::io::{from_json, render_table, to_json, TableView};
use crate::kp::{kp_identity, kp_image};
use crate::rational::Rational;
use crate::table::{DerivedOp, DialgebraTable, Involution};

#[derive(Parser)]
#[command(
    name = "dialgebra",
    about = "Exact-arithmetic dialgebras: tables, identity audits, doubling, classification",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpView {
    Left,
    Right,
    Bracket,
    Jordan,
}

#[derive(Clone, Copy, ValueEnum)]
enum DerivedView {
    Leibniz,
    Jordan,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a builtin algebra as JSON
    Builtin {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Render a multiplication table
    Show {
        spec: String,
        #[arg(long, value_enum, default_value = "left")]
        op: OpView,
    },
    /// Apply the doubling process
    Double {
        spec: String,
        /// Doubling scalar, e.g. -1 or 2/3
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        gamma: String,
        /// Use the diamond convention
        #[arg(long)]
        diamond: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Audit identities against an algebra
    Check {
        spec: String,
        /// Comma-separated property names (see --props help)
        #[arg(long)]
        props: Option<String>,
        /// A single identity in the DSL
        #[arg(long)]
        identity: Option<String>,
    },
    /// Transform a one-operation identity into dialgebra identities
    Kp {
        identity: String,
        /// Only the image for this central variable
        #[arg(long)]
        central: Option<String>,
    },
    /// Materialize the Leibniz bracket or Jordan diproduct as a table
    Derived {
        spec: String,
        #[arg(long, value_enum)]
        op: DerivedView,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Classify 2-dimensional tables over a coefficient grid
    Classify {
        /// Comma-separated rationals, e.g. -1,0,1
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
    },
    /// Collapse to an ordinary algebra modulo the product-difference ideal
    Quotient {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn load_spec(spec: &str) -> Result<(DialgebraTable, Option<Involution>), Error> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        let e = builtin_dialgebra(name)?;
        return Ok((e.table, e.involution));
    }
    if spec == "-" {
        let mut src = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut src)?;
        return from_json(&src);
    }
    crate::io::load(std::path::Path::new(spec))
}

fn emit(
    out: &mut dyn Write,
    output: &Option<PathBuf>,
    table: &DialgebraTable,
    invol: Option<&Involution>,
    meta: serde_json::Value,
) -> Result<(), Error> {
    let json = to_json(table, invol, meta);
    match output {
        Some(path) => std::fs::write(path, json)?,
        None => writeln!(out, "{json}")?,
    }
    Ok(())
}

/// Resolves a property name to the identity family and the table it runs
/// on.
fn property_checks(
    name: &str,
    table: &DialgebraTable,
) -> Result<(DialgebraTable, bool, Vec<Identity>), Error> {
    // (table to check, needs involution, identities)
    let on_self = |needs_star: bool, fams: &[&str]| -> Result<_, Error> {
        let mut ids = Vec::new();
        for f in fams {
            ids.extend(builtin(f)?);
        }
        Ok((table.clone(), needs_star, ids))
    };
    match name {
        "bar" | "zero" => on_self(false, &["bar"]),
        "comm" | "dicomm" => on_self(false, &["dicommutative"]),
        "assoc" => on_self(false, &["di_associative"]),
        "left_assoc" => on_self(false, &["left_associative"]),
        "inner_assoc" => on_self(false, &["inner_associative"]),
        "right_assoc" => on_self(false, &["right_associative"]),
        "alt" => on_self(false, &["di_alternative"]),
        "flex" => on_self(false, &["di_flexible"]),
        "invol" => on_self(true, &["involution"]),
        "psym" => on_self(true, &["partially_symmetric"]),
        "sym" => on_self(true, &["partially_symmetric", "symmetric"]),
        "alg_comm" => on_self(false, &["commutative"]),
        "alg_assoc" => on_self(false, &["associative"]),
        "alg_alt" => on_self(false, &["alternative"]),
        "alg_flex" => on_self(false, &["flexible"]),
        "jordan" => Ok((
            table.derived_table(DerivedOp::Diproduct),
            false,
            builtin("jordan_dialgebra")?,
        )),
        "leibniz" => Ok((
            table.derived_table(DerivedOp::Bracket),
            false,
            builtin("right_leibniz")?,
        )),
        _ => Err(Error::UnknownProperty(name.to_string())),
    }
}

fn cmd_check(
    out: &mut dyn Write,
    spec: &str,
    props: Option<String>,
    identity: Option<String>,
) -> Result<i32, Error> {
    let (table, invol) = load_spec(spec)?;
    let mut all_passed = true;

    if props.is_none() && identity.is_none() {
        let report = classify_predicates(&table, invol.as_ref())?;
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&report.to_json(&table))?
        )?;
        return Ok(if report.entries.iter().all(|e| e.verdict.passed) {
            0
        } else {
            1
        });
    }

    if let Some(csv) = props {
        for name in csv.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (target, needs_star, ids) = property_checks(name, &table)?;
            let star = if needs_star { invol.as_ref() } else { None };
            if needs_star && star.is_none() {
                return Err(Error::MissingInvolution);
            }
            let v = audit_family(&target, star, &ids)?;
            if v.passed {
                writeln!(out, "PASS {name}")?;
            } else {
                all_passed = false;
                writeln!(
                    out,
                    "FAIL {name}: {} [{}]",
                    v.describe_witness(&target),
                    crate::dsl::render_identity(&v.identity)
                )?;
            }
        }
    }

    if let Some(src) = identity {
        let id = crate::dsl::parse_identity(&src)?;
        let v = crate::checker::audit(&table, invol.as_ref(), &id)?;
        if v.passed {
            writeln!(out, "PASS identity")?;
        } else {
            all_passed = false;
            writeln!(out, "FAIL identity: {}", v.describe_witness(&table))?;
        }
    }

    Ok(if all_passed { 0 } else { 1 })
}

fn cmd_kp(out: &mut dyn Write, src: &str, central: Option<String>) -> Result<i32, Error> {
    let id = crate::dsl::parse_identity(src)?;
    if let Some(v) = central {
        let img = kp_image(&id, &v)?.canonical_form()?;
        writeln!(out, "{}", crate::dsl::render_identity(&img.to_identity()))?;
        return Ok(0);
    }
    let fam = kp_identity(&id)?;
    for (central, img) in &fam.raw {
        writeln!(
            out,
            "central {central}: {}",
            crate::dsl::render_identity(&img.to_identity())
        )?;
    }
    if fam.distinct.len() < fam.raw.len() {
        writeln!(
            out,
            "distinct up to scalar: {}",
            fam.distinct.len()
        )?;
    }
    for (i, j) in &fam.star_pairs {
        writeln!(
            out,
            "note: images {} and {} are star-conjugates of each other",
            i + 1,
            j + 1
        )?;
    }
    if fam.minimal.len() < fam.distinct.len() {
        let list: Vec<String> = fam.minimal.iter().map(|i| (i + 1).to_string()).collect();
        writeln!(
            out,
            "minimal spanning subfamily: images {}",
            list.join(", ")
        )?;
    }
    Ok(0)
}

fn cmd_classify(out: &mut dyn Write, grid_csv: &str) -> Result<i32, Error> {
    let grid: Vec<Rational> = grid_csv
        .split(',')
        .map(|s| s.trim().parse())
        .collect::<Result<_, _>>()?;
    let sols = crate::classify2d::grid_search(&grid)?;
    let items: Vec<serde_json::Value> = sols
        .iter()
        .map(|s| {
            let point: serde_json::Map<String, serde_json::Value> =
                crate::classify2d::CONSTANT_NAMES
                    .iter()
                    .zip(&s.point.consts)
                    .map(|(n, v)| (n.to_string(), json!(v.to_string())))
                    .collect();
            json!({
                "point": point,
                "families": s.families,
                "proper": s.proper,
            })
        })
        .collect();
    let doc = json!({
        "grid": grid.iter().map(Rational::to_string).collect::<Vec<_>>(),
        "count": sols.len(),
        "proper_count": sols.iter().filter(|s| s.proper).count(),
        "solutions": items,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    Ok(0)
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<i32, Error> {
    match cmd {
        Cmd::Builtin { name, output } => {
            let e = builtin_dialgebra(&name)?;
            let meta = json!({ "name": e.name, "provenance": e.provenance });
            emit(out, &output, &e.table, e.involution.as_ref(), meta)?;
            Ok(0)
        }
        Cmd::Show { spec, op } => {
            let (table, _) = load_spec(&spec)?;
            let view = match op {
                OpView::Left => TableView::Left,
                OpView::Right => TableView::Right,
                OpView::Bracket => TableView::Bracket,
                OpView::Jordan => TableView::Jordan,
            };
            write!(out, "{}", render_table(&table, view))?;
            Ok(0)
        }
        Cmd::Double {
            spec,
            gamma,
            diamond,
            output,
        } => {
            let (table, invol) = load_spec(&spec)?;
            let invol = invol.ok_or(Error::MissingInvolution)?;
            let gamma: Rational = gamma.parse()?;
            let (doubled, star) = if diamond {
                diamond_double(&table, &invol, &gamma)?
            } else {
                double(&table, &invol, &gamma)?
            };
            emit(out, &output, &doubled, Some(&star), serde_json::Value::Null)?;
            Ok(0)
        }
        Cmd::Check {
            spec,
            props,
            identity,
        } => cmd_check(out, &spec, props, identity),
        Cmd::Kp { identity, central } => cmd_kp(out, &identity, central),
        Cmd::Derived { spec, op, output } => {
            let (table, _) = load_spec(&spec)?;
            let derived = match op {
                DerivedView::Leibniz => table.derived_table(DerivedOp::Bracket),
                DerivedView::Jordan => table.derived_table(DerivedOp::Diproduct),
            };
            emit(out, &output, &derived, None, serde_json::Value::Null)?;
            Ok(0)
        }
        Cmd::Classify { grid } => cmd_classify(out, &grid),
        Cmd::Quotient { spec, output } => {
            let (table, _) = load_spec(&spec)?;
            let q = quotient_alg(&table)?;
            let projection: Vec<Vec<String>> = q
                .projection
                .iter()
                .map(|row| row.iter().map(Rational::to_string).collect())
                .collect();
            let meta = json!({
                "projection": projection,
                "zero_dialgebra": q.zero_dialgebra,
            });
            emit(out, &output, &q.table, None, meta)?;
            Ok(0)
        }
    }
}

/// Runs the CLI on `args` (without the program name); returns the exit
/// code.
pub fn run<I>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator,
    I::Item: Into<String>,
{
    let argv = std::iter::once("dialgebra".to_string())
        .chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return if matches!(
                e.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) {
                let _ = write!(out, "{rendered}");
                0
            } else {
                let _ = write!(err, "{rendered}");
                2
            };
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

//! Exact-arithmetic dialgebras.
//!
//! A dialgebra is a vector space with two bilinear products, written
//! `-|` (left) and `|-` (right). This crate represents finite-dimensional
//! dialgebras over the rationals as structure-constant tables and builds,
//! on top of exact scalar and polynomial arithmetic, the machinery around
//! them:
//!
//! * **Identity auditing**: decide whether a table satisfies a polynomial
//!   identity, by generic-element evaluation (sound for repeated
//!   variables) or by an exhaustive basis sweep for multilinear
//!   identities, with a concrete witness on every failure.
//! * **The central-argument transform**: convert a multilinear identity
//!   in one binary operation into its family of two-operation identities,
//!   one per choice of central argument, together with the interchange
//!   identities and the involution identities this transform induces.
//! * **The doubling process**: the two-operation analogue of the
//!   classical doubling that builds the complex numbers, quaternions and
//!   octonions from the reals, plus the diamond-convention variant and
//!   the quotient functor back to ordinary algebras.
//! * **A classification engine**: regenerates the constraint equations
//!   for 2-dimensional dicommutative associative tables with involution,
//!   solves them over finite grids, and identifies the solution families.
//!
//! Everything is exact: scalars are arbitrary-precision rationals, every
//! check is an equality of polynomials, and there are no tolerances.
//!
//! # Quick tour
//!
//! ```
//! use dialgebra::catalog::builtin_dialgebra;
//! use dialgebra::builtins::builtin;
//! use dialgebra::checker::audit_family;
//! use dialgebra::doubling::double;
//! use dialgebra::rational::Rational;
//!
//! // the 2-dimensional dialgebra with two bar units
//! let d = builtin_dialgebra("D").unwrap();
//!
//! // doubling it twice gives the dialgebra analogue of the octonions
//! let g = -Rational::one();
//! let (e, se) = double(&d.table, d.involution.as_ref().unwrap(), &g).unwrap();
//! let (f, sf) = double(&e, &se, &g).unwrap();
//! assert!(f.structure_eq(&builtin_dialgebra("F").unwrap().table));
//!
//! // which is alternative but not associative
//! assert!(audit_family(&f, Some(&sf), &builtin("di_alternative").unwrap()).unwrap().passed);
//! assert!(!audit_family(&f, Some(&sf), &builtin("di_associative").unwrap()).unwrap().passed);
//! ```
//!
//! The `examples/` directory walks through each capability; the `dialgebra`
//! binary exposes the same operations as subcommands.

pub mod builtins;
pub mod catalog;
pub mod checker;
pub mod classify2d;
pub mod cli;
pub mod doubling;
pub mod dsl;
pub mod error;
pub mod eval;
pub mod identity;
pub mod io;
pub mod kp;
pub mod linalg;
pub mod poly;
pub mod rational;
pub mod table;

pub use error::Error;
pub use identity::{CanonicalIdentity, Identity, Mode, Op, Term};
pub use rational::Rational;
pub use table::{AssocKind, DerivedOp, DialgebraTable, Element, Involution};

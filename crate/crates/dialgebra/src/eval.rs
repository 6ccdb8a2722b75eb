//! Term evaluation engines.
//!
//! Two paths share the identity AST. The polynomial path substitutes
//! elements with polynomial coordinates and is the ground-truth semantics:
//! exact over the rationals and sound for identities with repeated
//! variables. It also accepts tables whose structure constants are
//! themselves polynomials, which is how the two-dimensional classification
//! generates its constraint equations. The rational path evaluates concrete
//! coordinate vectors and exists because basis-tuple sweeps of multilinear
//! identities are much cheaper without polynomial bookkeeping.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::identity::{Identity, Op, Term};
use crate::linalg::Vector;
use crate::poly::Polynomial;
use crate::table::{DialgebraTable, Involution};

/// A dialgebra whose structure constants are polynomials.
pub struct PolyTables {
    pub dim: usize,
    /// `left[i][j][k]` = coefficient of `e_k` in `e_i -| e_j`
    pub left: Vec<Vec<Vec<Polynomial>>>,
    pub right: Vec<Vec<Vec<Polynomial>>>,
    /// `star[j][i]` = coefficient of `e_j` in `e_i*`
    pub star: Option<Vec<Vec<Polynomial>>>,
}

pub type PolyCoords = Vec<Polynomial>;

impl PolyTables {
    pub fn from_table(t: &DialgebraTable, invol: Option<&Involution>) -> PolyTables {
        let lift = |table: &Vec<Vec<Vector>>| {
            table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|v| {
                            v.iter()
                                .map(|c| Polynomial::constant(c.clone()))
                                .collect()
                        })
                        .collect()
                })
                .collect()
        };
        PolyTables {
            dim: t.dim(),
            left: lift(t.left_table()),
            right: lift(t.right_table()),
            star: invol.map(|s| {
                s.matrix()
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|c| Polynomial::constant(c.clone()))
                            .collect()
                    })
                    .collect()
            }),
        }
    }

    pub fn mul(&self, op: Op, u: &PolyCoords, v: &PolyCoords) -> PolyCoords {
        let table = match op {
            Op::Alg | Op::Left => &self.left,
            Op::Right => &self.right,
        };
        let mut out = vec![Polynomial::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let s = ui * vj;
                for (k, c) in table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = &out[k] + &(&s * c);
                    }
                }
            }
        }
        out
    }

    pub fn star(&self, u: &PolyCoords) -> Result<PolyCoords, Error> {
        let m = self.star.as_ref().ok_or(Error::MissingInvolution)?;
        Ok(m
            .iter()
            .map(|row| {
                let mut acc = Polynomial::zero();
                for (c, x) in row.iter().zip(u) {
                    if !c.is_zero() && !x.is_zero() {
                        acc = &acc + &(c * x);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn eval_term(
        &self,
        t: &Term,
        env: &BTreeMap<String, PolyCoords>,
    ) -> Result<PolyCoords, Error> {
        let (mut coords, stars) = match t {
            Term::Leaf { var, stars } => {
                let v = env
                    .get(var)
                    .unwrap_or_else(|| panic!("unbound variable {var}"))
                    .clone();
                (v, *stars)
            }
            Term::Node {
                op,
                left,
                right,
                stars,
            } => {
                let l = self.eval_term(left, env)?;
                let r = self.eval_term(right, env)?;
                (self.mul(*op, &l, &r), *stars)
            }
        };
        for _ in 0..stars {
            coords = self.star(&coords)?;
        }
        Ok(coords)
    }

    /// Sum of `coefficient * term` over the identity's summands.
    pub fn eval_identity(
        &self,
        id: &Identity,
        env: &BTreeMap<String, PolyCoords>,
    ) -> Result<PolyCoords, Error> {
        let mut acc = vec![Polynomial::zero(); self.dim];
        for (c, t) in &id.summands {
            let v = self.eval_term(t, env)?;
            for (a, x) in acc.iter_mut().zip(&v) {
                *a = &*a + &x.scale(c);
            }
        }
        Ok(acc)
    }
}

/// Rational evaluation of a term on concrete coordinates.
pub fn eval_term_rat(
    table: &DialgebraTable,
    invol: Option<&Involution>,
    t: &Term,
    env: &BTreeMap<String, Vector>,
) -> Result<Vector, Error> {
    let (mut coords, stars) = match t {
        Term::Leaf { var, stars } => {
            let v = env
                .get(var)
                .unwrap_or_else(|| panic!("unbound variable {var}"))
                .clone();
            (v, *stars)
        }
        Term::Node {
            op,
            left,
            right,
            stars,
        } => {
            let l = eval_term_rat(table, invol, left, env)?;
            let r = eval_term_rat(table, invol, right, env)?;
            (table.mul_coords(!matches!(op, Op::Right), &l, &r), *stars)
        }
    };
    for _ in 0..stars {
        let s = invol.ok_or(Error::MissingInvolution)?;
        coords = s.apply_coords(&coords);
    }
    Ok(coords)
}

pub fn eval_identity_rat(
    table: &DialgebraTable,
    invol: Option<&Involution>,
    id: &Identity,
    env: &BTreeMap<String, Vector>,
) -> Result<Vector, Error> {
    let mut acc = crate::linalg::zero_vector(table.dim());
    for (c, t) in &id.summands {
        let v = eval_term_rat(table, invol, t, env)?;
        for (a, x) in acc.iter_mut().zip(&v) {
            let add = x * c;
            *a += &add;
        }
    }
    Ok(acc)
}

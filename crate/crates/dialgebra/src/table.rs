//! Finite-dimensional dialgebras as structure-constant tables.
//!
//! A [`DialgebraTable`] stores, for every ordered basis pair, the
//! coordinates of both products `e_i -| e_j` and `e_i |- e_j`; products of
//! arbitrary elements extend bilinearly. An ordinary algebra is the special
//! case where the two tables coincide. Elements carry polynomial
//! coordinates so that concrete and generic elements share one code path;
//! concrete arithmetic is the constant-polynomial case.

use crate::error::Error;
use crate::linalg::{self, Matrix, Vector};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Which derived bilinear product to form from the two dialgebra products.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DerivedOp {
    /// `{x,y} = x -| y - y |- x`
    Bracket,
    /// `x o y = x -| y + y |- x`
    Diproduct,
}

/// The three dialgebra associators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AssocKind {
    Left,
    Inner,
    Right,
}

/// An element, given by coordinates over the owning algebra's basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    pub coords: Vec<Polynomial>,
}

impl Element {
    pub fn zero(dim: usize) -> Element {
        Element {
            coords: vec![Polynomial::zero(); dim],
        }
    }

    pub fn basis(i: usize, dim: usize) -> Element {
        let mut e = Element::zero(dim);
        e.coords[i] = Polynomial::one();
        e
    }

    pub fn from_rationals(coords: &[Rational]) -> Element {
        Element {
            coords: coords
                .iter()
                .map(|c| Polynomial::constant(c.clone()))
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Polynomial::is_zero)
    }

    /// Rational coordinate vector, when every coordinate is constant.
    pub fn as_rationals(&self) -> Option<Vec<Rational>> {
        self.coords.iter().map(Polynomial::as_constant).collect()
    }

    pub fn add(&self, other: &Element) -> Element {
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Element {
        Element {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Element {
        Element {
            coords: self.coords.iter().map(|a| a.scale(c)).collect(),
        }
    }
}

/// A linear involution `a -> a*`, stored as a full matrix so that base
/// changes can conjugate it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Involution {
    /// `matrix[j][i]` is the coefficient of `e_j` in `e_i*`.
    matrix: Matrix,
}

impl Involution {
    /// Builds from the matrix and verifies it squares to the identity.
    pub fn new(matrix: Matrix) -> Result<Involution, Error> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: matrix.iter().map(Vec::len).max().unwrap_or(0),
            });
        }
        if linalg::mat_mul(&matrix, &matrix) != linalg::identity(n) {
            return Err(Error::NotAnInvolution);
        }
        Ok(Involution { matrix })
    }

    /// Builds from the images of the basis vectors.
    pub fn from_images(images: Vec<Vector>) -> Result<Involution, Error> {
        let n = images.len();
        let mut matrix = vec![linalg::zero_vector(n); n];
        for (i, img) in images.iter().enumerate() {
            if img.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: img.len(),
                });
            }
            for (j, c) in img.iter().enumerate() {
                matrix[j][i] = c.clone();
            }
        }
        Involution::new(matrix)
    }

    pub fn identity(dim: usize) -> Involution {
        Involution {
            matrix: linalg::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, u: &Element) -> Result<Element, Error> {
        if u.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: u.dim(),
            });
        }
        let coords = self
            .matrix
            .iter()
            .map(|row| {
                let mut acc = Polynomial::zero();
                for (c, x) in row.iter().zip(&u.coords) {
                    acc = &acc + &x.scale(c);
                }
                acc
            })
            .collect();
        Ok(Element { coords })
    }

    pub fn apply_coords(&self, u: &Vector) -> Vector {
        linalg::mat_vec(&self.matrix, u)
    }

    /// The involution after the base change with matrix `p` (columns are the
    /// new basis in old coordinates).
    pub fn conjugate(&self, p: &Matrix) -> Result<Involution, Error> {
        let p_inv = linalg::invert(p)?;
        Involution::new(linalg::mat_mul(&p_inv, &linalg::mat_mul(&self.matrix, p)))
    }
}

/// Structure constants of a finite-dimensional dialgebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DialgebraTable {
    basis: Vec<String>,
    /// `left[i][j]` = coordinates of `e_i -| e_j`
    left: Vec<Vec<Vector>>,
    /// `right[i][j]` = coordinates of `e_i |- e_j`
    right: Vec<Vec<Vector>>,
}

impl DialgebraTable {
    pub fn new(
        basis: Vec<String>,
        left: Vec<Vec<Vector>>,
        right: Vec<Vec<Vector>>,
    ) -> Result<DialgebraTable, Error> {
        let n = basis.len();
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        for t in [&left, &right] {
            if t.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: t.len(),
                });
            }
            for row in t {
                if row.len() != n {
                    return Err(Error::DimensionMismatch {
                        expected: n,
                        got: row.len(),
                    });
                }
                for v in row {
                    if v.len() != n {
                        return Err(Error::DimensionMismatch {
                            expected: n,
                            got: v.len(),
                        });
                    }
                }
            }
        }
        Ok(DialgebraTable { basis, left, right })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn left_entry(&self, i: usize, j: usize) -> &Vector {
        &self.left[i][j]
    }

    pub fn right_entry(&self, i: usize, j: usize) -> &Vector {
        &self.right[i][j]
    }

    pub fn left_table(&self) -> &Vec<Vec<Vector>> {
        &self.left
    }

    pub fn right_table(&self) -> &Vec<Vec<Vector>> {
        &self.right
    }

    /// True when the left and right products coincide (an ordinary algebra).
    pub fn is_algebra(&self) -> bool {
        self.left == self.right
    }

    /// Same structure constants under new names.
    pub fn with_basis(&self, basis: Vec<String>) -> Result<DialgebraTable, Error> {
        if basis.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: basis.len(),
            });
        }
        Ok(DialgebraTable {
            basis,
            left: self.left.clone(),
            right: self.right.clone(),
        })
    }

    /// Structure constants alone, ignoring basis names.
    pub fn structure_eq(&self, other: &DialgebraTable) -> bool {
        self.left == other.left && self.right == other.right
    }

    fn check_dim(&self, u: &Element) -> Result<(), Error> {
        if u.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: u.dim(),
            });
        }
        Ok(())
    }

    fn mul(&self, table: &[Vec<Vector>], u: &Element, v: &Element) -> Result<Element, Error> {
        self.check_dim(u)?;
        self.check_dim(v)?;
        let n = self.dim();
        let mut out = Element::zero(n);
        for (i, ui) in u.coords.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.coords.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let scalar = ui * vj;
                for (k, c) in table[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out.coords[k] = &out.coords[k] + &scalar.scale(c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `u -| v`
    pub fn left_mul(&self, u: &Element, v: &Element) -> Result<Element, Error> {
        self.mul(&self.left, u, v)
    }

    /// `u |- v`
    pub fn right_mul(&self, u: &Element, v: &Element) -> Result<Element, Error> {
        self.mul(&self.right, u, v)
    }

    /// Rational fast path for `u -| v` / `u |- v` on concrete coordinates.
    pub(crate) fn mul_coords(&self, use_left: bool, u: &Vector, v: &Vector) -> Vector {
        let table = if use_left { &self.left } else { &self.right };
        let n = self.dim();
        let mut out = linalg::zero_vector(n);
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
                        let add = &s * c;
                        out[k] += &add;
                    }
                }
            }
        }
        out
    }

    /// `{u,v} = u -| v - v |- u`
    pub fn leibniz_bracket(&self, u: &Element, v: &Element) -> Result<Element, Error> {
        Ok(self.left_mul(u, v)?.sub(&self.right_mul(v, u)?))
    }

    /// `u o v = u -| v + v |- u`
    pub fn jordan_diproduct(&self, u: &Element, v: &Element) -> Result<Element, Error> {
        Ok(self.left_mul(u, v)?.add(&self.right_mul(v, u)?))
    }

    /// One of the three associators.
    pub fn associator(
        &self,
        kind: AssocKind,
        u: &Element,
        v: &Element,
        w: &Element,
    ) -> Result<Element, Error> {
        match kind {
            AssocKind::Left => {
                let a = self.left_mul(&self.left_mul(u, v)?, w)?;
                let b = self.left_mul(u, &self.left_mul(v, w)?)?;
                Ok(a.sub(&b))
            }
            AssocKind::Inner => {
                let a = self.left_mul(&self.right_mul(u, v)?, w)?;
                let b = self.right_mul(u, &self.left_mul(v, w)?)?;
                Ok(a.sub(&b))
            }
            AssocKind::Right => {
                let a = self.right_mul(&self.right_mul(u, v)?, w)?;
                let b = self.right_mul(u, &self.right_mul(v, w)?)?;
                Ok(a.sub(&b))
            }
        }
    }

    /// The bracket or diproduct as a genuine table with `left = right`, so
    /// that single-operation identities run through the same machinery.
    pub fn derived_table(&self, op: DerivedOp) -> DialgebraTable {
        let n = self.dim();
        let mut t = vec![vec![linalg::zero_vector(n); n]; n];
        for i in 0..n {
            for j in 0..n {
                let lv = &self.left[i][j];
                let rv = &self.right[j][i];
                t[i][j] = match op {
                    DerivedOp::Bracket => linalg::vec_sub(lv, rv),
                    DerivedOp::Diproduct => linalg::vec_add(lv, rv),
                };
            }
        }
        DialgebraTable {
            basis: self.basis.clone(),
            left: t.clone(),
            right: t,
        }
    }

    /// Solves `a -| e = a` and `e |- a = a` for all basis `a`; the solution
    /// set is an affine subspace (empty when there is no bar unit).
    pub fn bar_units(&self) -> linalg::AffineSolutions {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            for k in 0..n {
                // sum_j t_j (e_i -| e_j)_k = delta_ik
                let coeffs: Vector = (0..n).map(|j| self.left[i][j][k].clone()).collect();
                let rhs = if i == k {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                rows.push((coeffs, rhs));
                // sum_j t_j (e_j |- e_i)_k = delta_ik
                let coeffs: Vector = (0..n).map(|j| self.right[j][i][k].clone()).collect();
                let rhs = if i == k {
                    Rational::one()
                } else {
                    Rational::zero()
                };
                rows.push((coeffs, rhs));
            }
        }
        linalg::solve(&rows, n)
    }

    /// Basis of the subspace of elements `e` with `a -| e = 0 = e |- a` for
    /// all `a`.
    pub fn bar_zeros(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            for k in 0..n {
                let coeffs: Vector = (0..n).map(|j| self.left[i][j][k].clone()).collect();
                rows.push((coeffs, Rational::zero()));
                let coeffs: Vector = (0..n).map(|j| self.right[j][i][k].clone()).collect();
                rows.push((coeffs, Rational::zero()));
            }
        }
        linalg::solve(&rows, n).basis
    }

    /// Rewrites the structure constants over the basis whose old-coordinate
    /// columns form `p`. Round-trips exactly with the inverse matrix.
    pub fn change_basis(&self, p: &Matrix) -> Result<DialgebraTable, Error> {
        let n = self.dim();
        if p.len() != n || p.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: p.len(),
            });
        }
        let p_inv = linalg::invert(p)?;
        let col = |j: usize| -> Vector { (0..n).map(|i| p[i][j].clone()).collect() };
        let mut left = vec![vec![linalg::zero_vector(n); n]; n];
        let mut right = vec![vec![linalg::zero_vector(n); n]; n];
        for i in 0..n {
            for j in 0..n {
                let prod_l = self.mul_coords(true, &col(i), &col(j));
                let prod_r = self.mul_coords(false, &col(i), &col(j));
                left[i][j] = linalg::mat_vec(&p_inv, &prod_l);
                right[i][j] = linalg::mat_vec(&p_inv, &prod_r);
            }
        }
        Ok(DialgebraTable {
            basis: (0..n).map(|i| format!("b{i}")).collect(),
            left,
            right,
        })
    }

    /// Formats a concrete coordinate vector as a signed combination of basis
    /// labels, e.g. `-2v` or `p-q`.
    pub fn render_combo(&self, coords: &[Rational]) -> String {
        let mut s = String::new();
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            if !mag.is_one() {
                s.push_str(&mag.to_string());
            }
            s.push_str(&self.basis[i]);
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// Parses a combination like `-2v` or `p-q` over this basis.
    pub fn parse_combo(&self, text: &str) -> Result<Vector, Error> {
        let mut coords = linalg::zero_vector(self.dim());
        let t = text.trim();
        if t == "0" {
            return Ok(coords);
        }
        let mut rest = t;
        while !rest.is_empty() {
            let mut sign = Rational::one();
            rest = rest.trim_start();
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r;
            } else if let Some(r) = rest.strip_prefix('+') {
                rest = r;
            }
            rest = rest.trim_start();
            let digit_end = rest
                .find(|c: char| !(c.is_ascii_digit() || c == '/'))
                .unwrap_or(rest.len());
            let mag = if digit_end > 0 {
                let r: Rational = rest[..digit_end].parse()?;
                rest = &rest[digit_end..];
                r
            } else {
                Rational::one()
            };
            let name_end = rest.find(['+', '-', ' ']).unwrap_or(rest.len());
            let name = &rest[..name_end];
            let idx = self
                .basis
                .iter()
                .position(|b| b == name)
                .ok_or_else(|| Error::Schema {
                    path: "combo".into(),
                    msg: format!("unknown basis label {name:?}"),
                })?;
            coords[idx] += &(&sign * &mag);
            rest = &rest[name_end..];
        }
        Ok(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn d() -> (DialgebraTable, Involution) {
        let e = catalog::builtin_dialgebra("D").unwrap();
        (e.table, e.involution.unwrap())
    }

    #[test]
    fn d_products() {
        let (t, _) = d();
        let x = Element::basis(0, 2);
        let y = Element::basis(1, 2);
        // x -| y = x, x |- y = y
        assert_eq!(t.left_mul(&x, &y).unwrap(), x);
        assert_eq!(t.right_mul(&x, &y).unwrap(), y);
        // 0 -| v = 0
        assert!(t.left_mul(&Element::zero(2), &y).unwrap().is_zero());
    }

    #[test]
    fn star_on_d() {
        let (_, s) = d();
        let x = Element::basis(0, 2);
        let y = Element::basis(1, 2);
        assert_eq!(s.apply(&x).unwrap(), y);
        assert_eq!(s.apply(&s.apply(&x).unwrap()).unwrap(), x);
        // linearity
        let u = x.add(&y);
        assert_eq!(s.apply(&u).unwrap(), y.add(&x));
    }

    #[test]
    fn bracket_and_diproduct_on_d() {
        let (t, _) = d();
        let x = Element::basis(0, 2);
        let y = Element::basis(1, 2);
        // x -| y - y |- x = x - x = 0
        assert!(t.leibniz_bracket(&x, &y).unwrap().is_zero());
        // x -| y + y |- x = 2x
        assert_eq!(t.jordan_diproduct(&x, &y).unwrap(), x.scale(&q(2)));
        assert!(t
            .jordan_diproduct(&Element::zero(2), &y)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn bar_units_of_d_form_a_line() {
        let (t, _) = d();
        let sols = t.bar_units();
        let p = sols.point.expect("D has bar units");
        assert_eq!(sols.basis.len(), 1);
        // x and y are both bar units: (1,0) and (0,1) lie on the line
        let on_line = |target: &[Rational]| {
            let diff = linalg::vec_sub(&target.to_vec(), &p);
            let mut space = linalg::RowSpace::new();
            for b in &sols.basis {
                space.insert(b);
            }
            space.contains(&diff)
        };
        assert!(on_line(&[q(1), q(0)]));
        assert!(on_line(&[q(0), q(1)]));
    }

    #[test]
    fn zero_algebra_has_no_bar_unit_and_all_bar_zeros() {
        let z = linalg::zero_vector(1);
        let t = DialgebraTable::new(
            vec!["e".into()],
            vec![vec![z.clone()]],
            vec![vec![z]],
        )
        .unwrap();
        assert!(t.bar_units().point.is_none());
        assert_eq!(t.bar_zeros().len(), 1);
    }

    #[test]
    fn change_basis_roundtrip() {
        let (t, s) = d();
        let half = Rational::new(1, 2).unwrap();
        let p = vec![
            vec![half.clone(), half.clone()],
            vec![half.clone(), -&half],
        ];
        let moved = t.change_basis(&p).unwrap();
        let p_inv = linalg::invert(&p).unwrap();
        let back = moved.change_basis(&p_inv).unwrap();
        assert!(back.structure_eq(&t));
        let s_moved = s.conjugate(&p).unwrap();
        assert_eq!(
            s_moved.conjugate(&p_inv).unwrap().matrix(),
            s.matrix()
        );
        // identity change leaves everything alone
        let id = linalg::identity(2);
        assert!(t.change_basis(&id).unwrap().structure_eq(&t));
        // singular matrix is rejected
        let sing = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        assert!(t.change_basis(&sing).is_err());
    }

    #[test]
    fn render_and_parse_combos() {
        let f = catalog::builtin_dialgebra("F").unwrap().table;
        let mut coords = linalg::zero_vector(8);
        coords[6] = q(-2);
        assert_eq!(f.render_combo(&coords), "-2v");
        coords = linalg::zero_vector(8);
        coords[0] = q(1);
        coords[1] = q(-1);
        assert_eq!(f.render_combo(&coords), "p-q");
        assert_eq!(f.parse_combo("p-q").unwrap(), coords);
        assert_eq!(f.parse_combo("0").unwrap(), linalg::zero_vector(8));
    }

    #[test]
    fn values_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<DialgebraTable>();
        assert_send_sync::<Involution>();
        assert_send_sync::<Element>();
        assert_send_sync::<crate::poly::Polynomial>();
        assert_send_sync::<crate::identity::Identity>();
        assert_send_sync::<crate::identity::CanonicalIdentity>();
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let (t, s) = d();
        let bad = Element::zero(3);
        assert!(t.left_mul(&bad, &bad).is_err());
        assert!(s.apply(&bad).is_err());
    }

    proptest! {
        #[test]
        fn bilinearity_on_f(
            a in proptest::collection::vec(-3i64..4, 8),
            b in proptest::collection::vec(-3i64..4, 8),
            c in proptest::collection::vec(-3i64..4, 8),
            s in -3i64..4,
        ) {
            let f = catalog::builtin_dialgebra("F").unwrap().table;
            let ea = Element::from_rationals(&a.iter().map(|&n| q(n)).collect::<Vec<_>>());
            let eb = Element::from_rationals(&b.iter().map(|&n| q(n)).collect::<Vec<_>>());
            let ec = Element::from_rationals(&c.iter().map(|&n| q(n)).collect::<Vec<_>>());
            for use_left in [true, false] {
                let m = |u: &Element, v: &Element| if use_left {
                    f.left_mul(u, v).unwrap()
                } else {
                    f.right_mul(u, v).unwrap()
                };
                // (a+b) -| c = a -| c + b -| c, and scalar homogeneity
                prop_assert_eq!(m(&ea.add(&eb), &ec), m(&ea, &ec).add(&m(&eb, &ec)));
                prop_assert_eq!(m(&ec, &ea.add(&eb)), m(&ec, &ea).add(&m(&ec, &eb)));
                prop_assert_eq!(m(&ea.scale(&q(s)), &eb), m(&ea, &eb).scale(&q(s)));
            }
        }
    }
}

//! Small exact linear algebra helpers over [`Rational`].

use crate::error::Error;
use crate::rational::Rational;

pub type Vector = Vec<Rational>;
pub type Matrix = Vec<Vec<Rational>>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![zero_vector(m); n];
    for i in 0..n {
        for (t, brow) in b.iter().enumerate() {
            if a[i][t].is_zero() {
                continue;
            }
            for j in 0..m {
                let prod = &a[i][t] * &brow[j];
                out[i][j] += &prod;
            }
        }
    }
    out
}

pub fn mat_vec(a: &Matrix, v: &Vector) -> Vector {
    a.iter()
        .map(|row| {
            let mut acc = Rational::zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    let prod = x * y;
                    acc += &prod;
                }
            }
            acc
        })
        .collect()
}

pub fn vec_add(a: &Vector, b: &Vector) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &Vector, b: &Vector) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &Vector, c: &Rational) -> Vector {
    a.iter().map(|x| x * c).collect()
}

pub fn is_zero_vector(v: &Vector) -> bool {
    v.iter().all(Rational::is_zero)
}

/// Gauss-Jordan inverse.
pub fn invert(a: &Matrix) -> Result<Matrix, Error> {
    let n = a.len();
    let mut m: Vec<Vector> = a
        .iter()
        .zip(identity(n))
        .map(|(row, id_row)| {
            let mut r = row.clone();
            r.extend(id_row);
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(Error::SingularMatrix)?;
        m.swap(col, pivot);
        let inv = m[col][col].recip().expect("pivot nonzero");
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    let sub = &f * y;
                    *x -= &sub;
                }
            }
        }
    }
    Ok(m.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Row echelon accumulator: an exact row space with pivot bookkeeping.
#[derive(Default, Clone)]
pub struct RowSpace {
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the current rows; the remainder has zeros in all
    /// pivot columns.
    pub fn reduce(&self, v: &Vector) -> Vector {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    let sub = &f * y;
                    *x -= &sub;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &Vector) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Inserts `v`; returns true when the rank grew.
    pub fn insert(&mut self, v: &Vector) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].recip().expect("nonzero leading entry");
        for x in r.iter_mut() {
            *x *= &inv;
        }
        // keep fully reduced: clear column p in the existing rows
        for row in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    let sub = &f * y;
                    *x -= &sub;
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.rows.len());
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }
}

/// Solutions of `A x = b` as a particular point plus a nullspace basis.
pub struct AffineSolutions {
    /// `None` when the system is inconsistent.
    pub point: Option<Vector>,
    pub basis: Vec<Vector>,
}

/// Solves a linear system given as rows `(coefficients, rhs)` over `n`
/// unknowns.
pub fn solve(rows: &[(Vector, Rational)], n: usize) -> AffineSolutions {
    let mut space = RowSpace::new();
    for (coeffs, rhs) in rows {
        let mut aug = coeffs.clone();
        aug.push(rhs.clone());
        space.insert(&aug);
    }
    // inconsistency: a pivot in the rhs column
    if space.pivots().contains(&n) {
        return AffineSolutions {
            point: None,
            basis: Vec::new(),
        };
    }
    let pivot_cols: Vec<usize> = space.pivots().to_vec();
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();

    // particular solution: free variables at zero
    let mut point = zero_vector(n);
    for (row, &p) in space.rows().iter().zip(&pivot_cols) {
        point[p] = row[n].clone();
    }

    // nullspace basis: one vector per free column
    let mut basis = Vec::new();
    for &f in &free_cols {
        let mut v = zero_vector(n);
        v[f] = Rational::one();
        for (row, &p) in space.rows().iter().zip(&pivot_cols) {
            v[p] = -&row[f];
        }
        basis.push(v);
    }
    AffineSolutions {
        point: Some(point),
        basis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn inverse_roundtrip() {
        let m = vec![vec![q(1), q(2)], vec![q(3), q(5)]];
        let inv = invert(&m).unwrap();
        assert_eq!(mat_mul(&m, &inv), identity(2));
        let sing = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert!(invert(&sing).is_err());
    }

    #[test]
    fn rowspace_rank_and_membership() {
        let mut s = RowSpace::new();
        assert!(s.insert(&vec![q(1), q(1), q(0)]));
        assert!(s.insert(&vec![q(0), q(1), q(1)]));
        assert!(!s.insert(&vec![q(1), q(2), q(1)]));
        assert_eq!(s.rank(), 2);
        assert!(s.contains(&vec![q(2), q(3), q(1)]));
        assert!(!s.contains(&vec![q(0), q(0), q(1)]));
    }

    #[test]
    fn affine_solve() {
        // x + y = 1 over 2 unknowns: line through (1,0) with direction (-1,1)
        let sols = solve(&[(vec![q(1), q(1)], q(1))], 2);
        let p = sols.point.unwrap();
        assert_eq!(&p[0] + &p[1], q(1));
        assert_eq!(sols.basis.len(), 1);
        // inconsistent
        let bad = solve(
            &[(vec![q(1), q(0)], q(1)), (vec![q(1), q(0)], q(2))],
            2,
        );
        assert!(bad.point.is_none());
    }
}

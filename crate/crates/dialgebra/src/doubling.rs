//! The doubling process for dialgebras, its diamond-convention variant, the
//! quotient-to-algebra functor, and the closed-form associator expansions in
//! a double.
//!
//! On the direct sum `A ⊕ A` of a dialgebra with involution, the doubled
//! products are
//!
//! ```text
//! (a,b) -| (c,d) = (a -| c + γ(d |- b*),  a* -| d + c |- b)
//! (a,b) |- (c,d) = (a |- c + γ(d -| b*),  a* |- d + c -| b)
//! (a,b)*         = (a*, -b)
//! ```
//!
//! with `γ` any nonzero scalar. When the two products of `A` coincide this
//! is the classical doubling `(a,b)(c,d) = (ac + γ db*, a*d + cb)`, and the
//! output again has coinciding products. Basis convention: the first copy
//! of `A` first, then the second copy with primed labels.

use crate::checker;
use crate::error::Error;
use crate::linalg::{self, Matrix, Vector};
use crate::rational::Rational;
use crate::table::{AssocKind, DialgebraTable, Element, Involution};

/// Splits a basis index of the double into (copy, index in `A`).
fn split(i: usize, n: usize) -> (bool, usize) {
    if i < n {
        (false, i)
    } else {
        (true, i - n)
    }
}

fn assemble(first: Vector, second: Vector) -> Vector {
    let mut v = first;
    v.extend(second);
    v
}

struct DoubleCtx<'a> {
    a: &'a DialgebraTable,
    invol: &'a Involution,
    gamma: &'a Rational,
}

impl DoubleCtx<'_> {
    fn star(&self, v: &Vector) -> Vector {
        self.invol.apply_coords(v)
    }

    fn mul(&self, left: bool, u: &Vector, v: &Vector) -> Vector {
        self.a.mul_coords(left, u, v)
    }

    /// One product of the double on component pairs.
    fn product(
        &self,
        left_product: bool,
        (a, b): (&Vector, &Vector),
        (c, d): (&Vector, &Vector),
    ) -> (Vector, Vector) {
        // first:  a ∘ c + γ (d ∘' b*)     second: a* ∘ d + c ∘' b
        // with ∘ the chosen product and ∘' the other one
        let p = left_product;
        let first = linalg::vec_add(
            &self.mul(p, a, c),
            &linalg::vec_scale(&self.mul(!p, d, &self.star(b)), self.gamma),
        );
        let second = linalg::vec_add(&self.mul(p, &self.star(a), d), &self.mul(!p, c, b));
        (first, second)
    }

    /// Diamond-convention product.
    fn product_diamond(
        &self,
        left_product: bool,
        (a, b): (&Vector, &Vector),
        (c, d): (&Vector, &Vector),
    ) -> (Vector, Vector) {
        // first: a ∘ c + γ (d* ∘' b)      second: b ∘ c* + d ∘' a
        let p = left_product;
        let first = linalg::vec_add(
            &self.mul(p, a, c),
            &linalg::vec_scale(&self.mul(!p, &self.star(d), b), self.gamma),
        );
        let second = linalg::vec_add(&self.mul(p, b, &self.star(c)), &self.mul(!p, d, a));
        (first, second)
    }
}

fn doubled_basis(a: &DialgebraTable) -> Vec<String> {
    let mut basis: Vec<String> = a.basis().to_vec();
    basis.extend(a.basis().iter().map(|b| format!("{b}'")));
    basis
}

fn doubled_involution(a: &DialgebraTable, invol: &Involution) -> Involution {
    let n = a.dim();
    let mut images = Vec::with_capacity(2 * n);
    for i in 0..n {
        let mut e = linalg::zero_vector(n);
        e[i] = Rational::one();
        images.push(assemble(invol.apply_coords(&e), linalg::zero_vector(n)));
    }
    for i in 0..n {
        let mut e = linalg::zero_vector(n);
        e[i] = -Rational::one();
        images.push(assemble(linalg::zero_vector(n), e));
    }
    Involution::from_images(images).expect("(a,b) -> (a*,-b) squares to the identity")
}

fn build_double(
    a: &DialgebraTable,
    invol: &Involution,
    gamma: &Rational,
    diamond: bool,
) -> Result<(DialgebraTable, Involution), Error> {
    if gamma.is_zero() {
        return Err(Error::ZeroGamma);
    }
    if invol.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: invol.dim(),
        });
    }
    let n = a.dim();
    let ctx = DoubleCtx { a, invol, gamma };
    let zero = linalg::zero_vector(n);
    let unit = |k: usize| -> Vector {
        let mut e = linalg::zero_vector(n);
        e[k] = Rational::one();
        e
    };
    let component = |i: usize| -> (Vector, Vector) {
        let (hi, k) = split(i, n);
        if hi {
            (zero.clone(), unit(k))
        } else {
            (unit(k), zero.clone())
        }
    };

    let mut left = vec![vec![Vec::new(); 2 * n]; 2 * n];
    let mut right = vec![vec![Vec::new(); 2 * n]; 2 * n];
    for i in 0..2 * n {
        let (ai, bi) = component(i);
        for j in 0..2 * n {
            let (cj, dj) = component(j);
            for use_left in [true, false] {
                let (f, s) = if diamond {
                    ctx.product_diamond(use_left, (&ai, &bi), (&cj, &dj))
                } else {
                    ctx.product(use_left, (&ai, &bi), (&cj, &dj))
                };
                let v = assemble(f, s);
                if use_left {
                    left[i][j] = v;
                } else {
                    right[i][j] = v;
                }
            }
        }
    }

    let table = DialgebraTable::new(doubled_basis(a), left, right)?;
    let star = doubled_involution(a, invol);
    Ok((table, star))
}

/// The doubling process: `A ⊕ A` with the products and involution above.
pub fn double(
    a: &DialgebraTable,
    invol: &Involution,
    gamma: &Rational,
) -> Result<(DialgebraTable, Involution), Error> {
    build_double(a, invol, gamma, false)
}

/// The diamond-convention double; `(a,b) -> (a,b*)` is an isomorphism from
/// the standard double onto it.
pub fn diamond_double(
    a: &DialgebraTable,
    invol: &Involution,
    gamma: &Rational,
) -> Result<(DialgebraTable, Involution), Error> {
    build_double(a, invol, gamma, true)
}

/// Result of collapsing a 0-dialgebra to an ordinary algebra.
pub struct Quotient {
    /// The quotient with its single product stored as `left = right`.
    pub table: DialgebraTable,
    /// Projection matrix, `quotient dim x original dim`.
    pub projection: Matrix,
    /// Reduced basis of the ideal that was collapsed.
    pub ideal: Vec<Vector>,
    /// Whether the input satisfied the interchange identities. The quotient
    /// is computable regardless; this flags a suspect input.
    pub zero_dialgebra: bool,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn project(&self, v: &Vector) -> Vector {
        linalg::mat_vec(&self.projection, v)
    }

    /// The involution induced on the quotient; errors when the ideal is not
    /// star-invariant.
    pub fn involution(&self, invol: &Involution) -> Result<Involution, Error> {
        let mut space = linalg::RowSpace::new();
        for r in &self.ideal {
            space.insert(r);
        }
        for r in &self.ideal {
            if !space.contains(&invol.apply_coords(r)) {
                return Err(Error::InvolutionDoesNotDescend);
            }
        }
        let n = self.projection[0].len();
        let images = (0..self.dim())
            .map(|t| {
                // representative of quotient basis vector t
                let rep = self.representative(t, n);
                self.project(&invol.apply_coords(&rep))
            })
            .collect();
        Involution::from_images(images)
    }

    fn representative(&self, t: usize, n: usize) -> Vector {
        // the quotient basis is indexed by the free columns; projection of
        // the corresponding unit vector is the t-th unit vector, so scan
        for c in 0..n {
            let mut e = linalg::zero_vector(n);
            e[c] = Rational::one();
            let p = self.project(&e);
            let is_unit_t = p
                .iter()
                .enumerate()
                .all(|(k, x)| (k == t) == x.is_one() && (k == t || x.is_zero()));
            if is_unit_t {
                return e;
            }
        }
        unreachable!("projection is onto")
    }
}

/// Collapses a 0-dialgebra modulo the ideal generated by all
/// `a |- b - a -| b`, yielding an ordinary algebra and the projection.
pub fn quotient_alg(a: &DialgebraTable) -> Result<Quotient, Error> {
    let n = a.dim();
    let mut space = linalg::RowSpace::new();
    for i in 0..n {
        for j in 0..n {
            let gen = linalg::vec_sub(a.right_entry(i, j), a.left_entry(i, j));
            space.insert(&gen);
        }
    }
    // close under multiplication by basis elements on both sides, with both
    // products; one-sided products of basis vectors suffice by bilinearity
    loop {
        let rows: Vec<Vector> = space.rows().to_vec();
        let mut grew = false;
        for v in &rows {
            for k in 0..n {
                let mut e = linalg::zero_vector(n);
                e[k] = Rational::one();
                for left in [true, false] {
                    grew |= space.insert(&a.mul_coords(left, &e, v));
                    grew |= space.insert(&a.mul_coords(left, v, &e));
                }
            }
        }
        if !grew {
            break;
        }
    }

    let ideal: Vec<Vector> = space.rows().to_vec();
    let pivots = space.pivots().to_vec();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let qdim = free.len();
    if qdim == 0 {
        return Err(Error::DimensionMismatch {
            expected: 1,
            got: 0,
        });
    }

    // projection: reduce a vector by the ideal, read off free coordinates
    let mut projection = vec![linalg::zero_vector(n); qdim];
    for c in 0..n {
        let mut e = linalg::zero_vector(n);
        e[c] = Rational::one();
        let r = space.reduce(&e);
        for (t, &fc) in free.iter().enumerate() {
            projection[t][c] = r[fc].clone();
        }
    }
    let project = |v: &Vector| -> Vector {
        let r = space.reduce(v);
        free.iter().map(|&fc| r[fc].clone()).collect()
    };

    // induced product; the left and right products must agree modulo the
    // ideal, which holds by construction of the generators
    let mut prod = vec![vec![Vec::new(); qdim]; qdim];
    for (ti, &fi) in free.iter().enumerate() {
        for (tj, &fj) in free.iter().enumerate() {
            let l = project(a.left_entry(fi, fj));
            let r = project(a.right_entry(fi, fj));
            assert_eq!(l, r, "products must coincide modulo the ideal");
            prod[ti][tj] = l;
        }
    }

    let basis = free
        .iter()
        .map(|&c| format!("[{}]", a.basis()[c]))
        .collect();
    let table = DialgebraTable::new(basis, prod.clone(), prod)?;

    let zero_dialgebra = crate::builtins::builtin("bar")?
        .iter()
        .all(|id| matches!(checker::audit(a, None, id), Ok(v) if v.passed));

    Ok(Quotient {
        table,
        projection,
        ideal,
        zero_dialgebra,
    })
}

/// Verifies on this instance that collapsing commutes with doubling:
/// `(A ⊕ A)_alg` and `A_alg ⊕ A_alg` have the same dimension and equal
/// structure constants and involutions under the map induced by
/// `(a, b) -> (a + I, b + I)`.
pub fn functor_commutes_check(
    a: &DialgebraTable,
    invol: &Involution,
    gamma: &Rational,
) -> Result<bool, Error> {
    let qa = quotient_alg(a)?;
    let qa_invol = qa.involution(invol)?;
    let (doubled, doubled_invol) = double(a, invol, gamma)?;
    let qd = quotient_alg(&doubled)?;
    let qd_invol = qd.involution(&doubled_invol)?;
    let (rhs, rhs_invol) = double(&qa.table, &qa_invol, gamma)?;

    let n = a.dim();
    let qdim = qa.dim();
    if qd.dim() != 2 * qdim || rhs.dim() != 2 * qdim {
        return Ok(false);
    }

    // componentwise projection (a, b) -> (πa, πb)
    let m = |v: &Vector| -> Vector {
        let first = qa.project(&v[..n].to_vec());
        let second = qa.project(&v[n..].to_vec());
        assemble(first, second)
    };

    // the doubled ideal must be exactly the kernel of the componentwise map
    for r in &qd.ideal {
        if !linalg::is_zero_vector(&m(r)) {
            return Ok(false);
        }
    }

    // transport quotient basis vectors of (A ⊕ A)_alg through m
    let mut psi_cols = Vec::with_capacity(qd.dim());
    for t in 0..qd.dim() {
        let rep = qd.representative(t, 2 * n);
        psi_cols.push(m(&rep));
    }
    let psi: Matrix = (0..2 * qdim)
        .map(|r| (0..qd.dim()).map(|c| psi_cols[c][r].clone()).collect())
        .collect();
    if linalg::invert(&psi).is_err() {
        return Ok(false);
    }

    // structure transport on all basis pairs (single product on both sides)
    for i in 0..qd.dim() {
        for j in 0..qd.dim() {
            let lhs = linalg::mat_vec(&psi, qd.table.left_entry(i, j));
            let rhs_prod = rhs.mul_coords(true, &psi_cols[i], &psi_cols[j]);
            if lhs != rhs_prod {
                return Ok(false);
            }
        }
    }

    // involution transport: psi . σ_lhs = σ_rhs . psi
    let left_side = linalg::mat_mul(&psi, qd_invol.matrix());
    let right_side = linalg::mat_mul(rhs_invol.matrix(), &psi);
    Ok(left_side == right_side)
}

/// The closed-form expansion of one associator of the double, computed
/// entirely inside `A` from component pairs (the involution is the one of
/// `A`, and the double is taken at `γ = -1`).
pub fn double_associator_expansion(
    a: &DialgebraTable,
    invol: &Involution,
    kind: AssocKind,
    x: (&Element, &Element),
    y: (&Element, &Element),
    z: (&Element, &Element),
) -> Result<(Element, Element), Error> {
    let l = |u: &Element, v: &Element| a.left_mul(u, v);
    let r = |u: &Element, v: &Element| a.right_mul(u, v);
    let st = |u: &Element| invol.apply(u);

    let (pa, pb) = x;
    let (pc, pd) = y;
    let (pe, pf) = z;
    let (sa, sb, sc, sd) = (st(pa)?, st(pb)?, st(pc)?, st(pd)?);

    let (first, second) = match kind {
        AssocKind::Left => {
            let first = l(&l(pa, pc)?, pe)?
                .sub(&l(&r(pd, &sb)?, pe)?)
                .sub(&r(pf, &r(&sd, pa)?)?)
                .sub(&r(pf, &l(&sb, &sc)?)?)
                .sub(&l(pa, &l(pc, pe)?)?)
                .add(&l(pa, &r(pf, &sd)?)?)
                .add(&r(&l(&sc, pf)?, &sb)?)
                .add(&r(&r(pe, pd)?, &sb)?);
            let second = l(&r(&sc, &sa)?, pf)?
                .sub(&l(&l(pb, &sd)?, pf)?)
                .add(&r(pe, &l(&sa, pd)?)?)
                .add(&r(pe, &r(pc, pb)?)?)
                .sub(&l(&sa, &l(&sc, pf)?)?)
                .sub(&l(&sa, &r(pe, pd)?)?)
                .sub(&r(&l(pc, pe)?, pb)?)
                .add(&r(&r(pf, &sd)?, pb)?);
            (first, second)
        }
        AssocKind::Inner => {
            let first = l(&r(pa, pc)?, pe)?
                .sub(&l(&l(pd, &sb)?, pe)?)
                .sub(&r(pf, &l(&sd, pa)?)?)
                .sub(&r(pf, &r(&sb, &sc)?)?)
                .sub(&r(pa, &l(pc, pe)?)?)
                .add(&r(pa, &r(pf, &sd)?)?)
                .add(&l(&l(&sc, pf)?, &sb)?)
                .add(&l(&r(pe, pd)?, &sb)?);
            let second = l(&l(&sc, &sa)?, pf)?
                .sub(&l(&r(pb, &sd)?, pf)?)
                .add(&r(pe, &r(&sa, pd)?)?)
                .add(&r(pe, &l(pc, pb)?)?)
                .sub(&r(&sa, &l(&sc, pf)?)?)
                .sub(&r(&sa, &r(pe, pd)?)?)
                .sub(&l(&l(pc, pe)?, pb)?)
                .add(&l(&r(pf, &sd)?, pb)?);
            (first, second)
        }
        AssocKind::Right => {
            let first = r(&r(pa, pc)?, pe)?
                .sub(&r(&l(pd, &sb)?, pe)?)
                .sub(&l(pf, &l(&sd, pa)?)?)
                .sub(&l(pf, &r(&sb, &sc)?)?)
                .sub(&r(pa, &r(pc, pe)?)?)
                .add(&r(pa, &l(pf, &sd)?)?)
                .add(&l(&r(&sc, pf)?, &sb)?)
                .add(&l(&l(pe, pd)?, &sb)?);
            let second = r(&l(&sc, &sa)?, pf)?
                .sub(&r(&r(pb, &sd)?, pf)?)
                .add(&l(pe, &r(&sa, pd)?)?)
                .add(&l(pe, &l(pc, pb)?)?)
                .sub(&r(&sa, &r(&sc, pf)?)?)
                .sub(&r(&sa, &l(pe, pd)?)?)
                .sub(&l(&r(pc, pe)?, pb)?)
                .add(&l(&l(pf, &sd)?, pb)?);
            (first, second)
        }
    };
    Ok((first, second))
}

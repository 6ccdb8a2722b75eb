//! Classification of 2-dimensional dialgebras that are dicommutative,
//! associative, and carry the involution swapping the two basis vectors.
//!
//! Over the basis `{x, y}` the left product is parameterized by eight
//! constants
//!
//! ```text
//! x -| x = a x + b y    x -| y = c x + d y
//! y -| x = e x + f y    y -| y = g x + h y
//! ```
//!
//! and dicommutativity forces the right product to be the arguments-swapped
//! left product. The constraint equations on `a..h` are generated by the
//! identity machinery itself: build the symbolic table over polynomial
//! structure constants, evaluate the interchange, associativity and
//! involution identities on generic elements, and collect the coefficient
//! polynomials. Separately transcribed expected equations serve as a golden
//! cross-check in the tests.

use std::collections::BTreeMap;

use crate::builtins::builtin;
use crate::error::Error;
use crate::eval::PolyTables;
use crate::identity::Identity;
use crate::poly::{Polynomial, VarPool};
use crate::rational::Rational;
use crate::table::{DialgebraTable, Involution};

pub const CONSTANT_NAMES: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "h"];

/// One candidate point in the 8-dimensional structure-constant space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Point8 {
    /// `a, b, c, d, e, f, g, h`
    pub consts: [Rational; 8],
}

impl Point8 {
    pub fn from_ints(vals: [i64; 8]) -> Point8 {
        Point8 {
            consts: vals.map(Rational::from_int),
        }
    }

    /// Left and right products differ somewhere, i.e. `(c,d) != (e,f)`.
    pub fn is_proper(&self) -> bool {
        self.consts[2] != self.consts[4] || self.consts[3] != self.consts[5]
    }

    pub fn render(&self) -> String {
        CONSTANT_NAMES
            .iter()
            .zip(&self.consts)
            .map(|(n, v)| format!("{n}={v}"))
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Builds the dialgebra this point parameterizes, with the swap
    /// involution.
    pub fn to_table(&self) -> (DialgebraTable, Involution) {
        let [a, b, c, d, e, f, g, h] = self.consts.clone();
        let left = vec![
            vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]],
            vec![vec![e.clone(), f.clone()], vec![g.clone(), h.clone()]],
        ];
        // dicommutativity: u |- v = v -| u
        let right = vec![
            vec![vec![a, b], vec![e, f]],
            vec![vec![c, d], vec![g, h]],
        ];
        let table =
            DialgebraTable::new(vec!["x".into(), "y".into()], left, right).unwrap();
        let swap = Involution::from_images(vec![
            vec![Rational::zero(), Rational::one()],
            vec![Rational::one(), Rational::zero()],
        ])
        .unwrap();
        (table, swap)
    }
}

/// The generated constraint equations, grouped the way they arise.
pub struct ConstraintSystem {
    pool: VarPool,
    pub bar: Vec<Polynomial>,
    pub left_assoc: Vec<Polynomial>,
    pub inner_assoc: Vec<Polynomial>,
    pub involution: Vec<Polynomial>,
}

impl ConstraintSystem {
    pub fn all(&self) -> impl Iterator<Item = &Polynomial> {
        self.bar
            .iter()
            .chain(&self.left_assoc)
            .chain(&self.inner_assoc)
            .chain(&self.involution)
    }

    pub fn len(&self) -> usize {
        self.all().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn render(&self, p: &Polynomial) -> String {
        self.pool.render(p)
    }

    /// True when all equations vanish at the point.
    pub fn eval(&self, p: &Point8) -> bool {
        let assign: BTreeMap<u32, Rational> = (0..8u32)
            .map(|i| (i, p.consts[i as usize].clone()))
            .collect();
        self.all().all(|poly| poly.eval(&assign).is_zero())
    }

    /// Substitutes polynomial values for `a..h`; used to verify whole
    /// solution families symbolically.
    pub fn eval_symbolic(&self, values: &[Polynomial; 8]) -> bool {
        let assign: BTreeMap<u32, Polynomial> = (0..8u32)
            .map(|i| (i, values[i as usize].clone()))
            .collect();
        self.all().all(|poly| poly.substitute(&assign).is_zero())
    }

    pub fn pool(&self) -> &VarPool {
        &self.pool
    }
}

/// The symbolic 2-dimensional table over polynomial structure constants.
fn symbolic_tables(pool: &mut VarPool) -> PolyTables {
    let consts: Vec<Polynomial> = CONSTANT_NAMES.iter().map(|n| pool.named(n)).collect();
    let [a, b, c, d, e, f, g, h]: [Polynomial; 8] = consts.try_into().unwrap();
    let pair = |p: &Polynomial, q: &Polynomial| vec![p.clone(), q.clone()];
    let left = vec![
        vec![pair(&a, &b), pair(&c, &d)],
        vec![pair(&e, &f), pair(&g, &h)],
    ];
    let right = vec![
        vec![pair(&a, &b), pair(&e, &f)],
        vec![pair(&c, &d), pair(&g, &h)],
    ];
    // x* = y, y* = x
    let zero = Polynomial::zero;
    let one = Polynomial::one;
    let star = vec![vec![zero(), one()], vec![one(), zero()]];
    PolyTables {
        dim: 2,
        left,
        right,
        star: Some(star),
    }
}

/// Evaluates one identity on generic elements of the symbolic table and
/// collects the nonzero coefficient polynomials in `a..h`, keyed by the
/// monomials in the generic coordinates.
fn coefficient_polys(
    tables: &PolyTables,
    pool: &mut VarPool,
    id: &Identity,
) -> Vec<Polynomial> {
    let mut env = BTreeMap::new();
    for v in &id.variables {
        env.insert(v.clone(), pool.fresh(2, v));
    }
    let coords = tables.eval_identity(id, &env).expect("symbolic evaluation");
    let mut by_generic: BTreeMap<(usize, crate::poly::Monomial), Polynomial> = BTreeMap::new();
    for (coord, p) in coords.iter().enumerate() {
        for (mono, coeff) in p.terms() {
            let (table_part, generic_part) = mono.partition(|var| var < 8);
            by_generic
                .entry((coord, generic_part))
                .or_insert_with(Polynomial::zero)
                .add_term(table_part, coeff.clone());
        }
    }
    by_generic.into_values().filter(|p| !p.is_zero()).collect()
}

/// Flips the sign so the graded-lex-leading coefficient is positive.
fn sign_normalize(p: &Polynomial) -> Polynomial {
    match p.terms().next_back() {
        Some((_, c)) if c.is_negative() => -p,
        _ => p.clone(),
    }
}

fn dedup_block(polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::new();
    for p in polys {
        let n = sign_normalize(&p);
        if !out.contains(&n) {
            out.push(n);
        }
    }
    out.sort_by(|x, y| {
        x.terms()
            .rev()
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect::<Vec<_>>()
            .cmp(&y.terms().rev().map(|(m, c)| (m.clone(), c.clone())).collect())
    });
    out
}

/// Generates the constraint system from the identity machinery.
pub fn constraint_system() -> ConstraintSystem {
    let mut pool = VarPool::new();
    let tables = symbolic_tables(&mut pool);
    let block = |families: &[(&str, usize)], pool: &mut VarPool| -> Vec<Polynomial> {
        let mut polys = Vec::new();
        for (fam, idx) in families {
            let ids = builtin(fam).expect("builtin family");
            polys.extend(coefficient_polys(&tables, pool, &ids[*idx]));
        }
        dedup_block(polys)
    };
    // the interchange identities (the second gives the same block, checked
    // in the tests)
    let bar = block(&[("bar", 0)], &mut pool);
    let left_assoc = block(&[("left_associative", 0)], &mut pool);
    let inner_assoc = block(&[("inner_associative", 0)], &mut pool);
    let involution = block(
        &[("involution", 0), ("involution", 1), ("involution", 2)],
        &mut pool,
    );
    ConstraintSystem {
        pool,
        bar,
        left_assoc,
        inner_assoc,
        involution,
    }
}

/// Convenience wrapper over [`ConstraintSystem::eval`].
pub fn eval_constraints(system: &ConstraintSystem, p: &Point8) -> bool {
    system.eval(p)
}

/// One parameterized solution family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    /// `a = h, b = g, c = d = e = f = -g`, with `g, h` free.
    TwoParameter,
    /// `a = c = f = h`, `b = d = e = g = 0`, with `h` free.
    Diagonal,
    /// all eight constants equal, with `h` free.
    Constant,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::TwoParameter => "two_parameter",
            Family::Diagonal => "diagonal",
            Family::Constant => "constant",
        }
    }

    pub fn param_count(self) -> usize {
        match self {
            Family::TwoParameter => 2,
            Family::Diagonal | Family::Constant => 1,
        }
    }

    pub fn at(self, params: &[Rational]) -> Point8 {
        assert_eq!(params.len(), self.param_count());
        let z = Rational::zero;
        match self {
            Family::TwoParameter => {
                let (g, h) = (params[0].clone(), params[1].clone());
                Point8 {
                    consts: [h.clone(), g.clone(), -&g, -&g, -&g, -&g, g, h],
                }
            }
            Family::Diagonal => {
                let h = params[0].clone();
                Point8 {
                    consts: [h.clone(), z(), h.clone(), z(), z(), h.clone(), z(), h],
                }
            }
            Family::Constant => {
                let h = params[0].clone();
                Point8 {
                    consts: std::array::from_fn(|_| h.clone()),
                }
            }
        }
    }

    pub fn contains(self, p: &Point8) -> bool {
        let [a, b, c, d, e, f, g, h] = &p.consts;
        match self {
            Family::TwoParameter => {
                a == h && b == g && *c == -g && *d == -g && *e == -g && *f == -g
            }
            Family::Diagonal => {
                a == h
                    && c == h
                    && f == h
                    && b.is_zero()
                    && d.is_zero()
                    && e.is_zero()
                    && g.is_zero()
            }
            Family::Constant => p.consts.iter().all(|v| v == h),
        }
    }

    /// The family's generic point over fresh parameter indeterminates.
    pub fn symbolic_point(self, pool: &mut VarPool) -> [Polynomial; 8] {
        match self {
            Family::TwoParameter => {
                let g = pool.named("g_param");
                let h = pool.named("h_param");
                [
                    h.clone(),
                    g.clone(),
                    -&g,
                    -&g,
                    -&g,
                    -&g,
                    g,
                    h,
                ]
            }
            Family::Diagonal => {
                let h = pool.named("h_param");
                let z = Polynomial::zero;
                [h.clone(), z(), h.clone(), z(), z(), h.clone(), z(), h]
            }
            Family::Constant => {
                let h = pool.named("h_param");
                std::array::from_fn(|_| h.clone())
            }
        }
    }
}

pub fn families() -> [Family; 3] {
    [Family::TwoParameter, Family::Diagonal, Family::Constant]
}

/// A grid-search hit with its family memberships.
#[derive(Clone, Debug)]
pub struct GridSolution {
    pub point: Point8,
    pub families: Vec<&'static str>,
    pub proper: bool,
}

/// Exhaustively evaluates the constraints over `grid^8`. Every solution
/// must lie in at least one family; a stray solution is an error because it
/// would contradict the classification.
pub fn grid_search(grid: &[Rational]) -> Result<Vec<GridSolution>, Error> {
    let system = constraint_system();
    let mut out = Vec::new();
    let n = grid.len();
    let mut idx = [0usize; 8];
    loop {
        let point = Point8 {
            consts: std::array::from_fn(|k| grid[idx[k]].clone()),
        };
        if system.eval(&point) {
            let fams: Vec<&'static str> = families()
                .iter()
                .filter(|f| f.contains(&point))
                .map(|f| f.name())
                .collect();
            if fams.is_empty() {
                return Err(Error::CompletenessViolation(point.render()));
            }
            let proper = point.is_proper();
            out.push(GridSolution {
                point,
                families: fams,
                proper,
            });
        }
        let mut k = 8;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < n {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Filters to the points whose left and right products differ.
pub fn proper_solutions(points: &[Point8]) -> Vec<Point8> {
    points.iter().filter(|p| p.is_proper()).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::classify_predicates;

    /// Parses `"ac -ae +cd -cf"` over the constant names (letter repeated =
    /// square) into a polynomial in the system's first eight ids.
    fn transcribe(src: &str) -> Polynomial {
        let mut p = Polynomial::zero();
        for tok in src.split_whitespace() {
            let (sign, rest) = match tok.strip_prefix('-') {
                Some(r) => (-Rational::one(), r),
                None => (Rational::one(), tok.strip_prefix('+').unwrap_or(tok)),
            };
            let mut mono = crate::poly::Monomial::one();
            for ch in rest.chars() {
                let id = CONSTANT_NAMES
                    .iter()
                    .position(|n| n.chars().next().unwrap() == ch)
                    .expect("constant name") as u32;
                mono = mono.mul(&crate::poly::Monomial::var(id));
            }
            p.add_term(mono, sign);
        }
        p
    }

    fn golden_block(srcs: &[&str]) -> Vec<Polynomial> {
        super::dedup_block(srcs.iter().map(|s| transcribe(s)).collect())
    }

    #[test]
    fn generated_system_matches_transcription() {
        let sys = constraint_system();
        assert_eq!(sys.bar.len(), 4);
        assert_eq!(sys.left_assoc.len(), 12);
        assert_eq!(sys.inner_assoc.len(), 3);
        assert_eq!(sys.involution.len(), 4);
        assert_eq!(sys.len(), 23);

        let bar = golden_block(&[
            "ac -ae +cd -cf",
            "bc -be +dd -df",
            "ce +dg -ee -fg",
            "cf +dh -ef -fh",
        ]);
        assert_eq!(sys.bar, bar);

        let left = golden_block(&[
            "bc -be",
            "bd -bf",
            "bg -cd",
            "bg -ef",
            "cg -eg",
            "dg -fg",
            "ac -ae -cf +de",
            "ad -bc +bh -dd",
            "af -be +bh -ff",
            "ag -cc +ch -dg",
            "ag -ee +eh -fg",
            "cf -de +dh -fh",
        ]);
        assert_eq!(sys.left_assoc, left);

        let inner = golden_block(&["bg -de", "ad -bc +bh -df", "ag -ce +eh -fg"]);
        assert_eq!(sys.inner_assoc, inner);

        let invol = golden_block(&["d -e", "c -f", "b -g", "a -h"]);
        assert_eq!(sys.involution, invol);
    }

    #[test]
    fn mirrored_identities_give_the_same_blocks() {
        // dicommutativity makes the other interchange identity and right
        // associativity redundant
        let mut pool = VarPool::new();
        let tables = symbolic_tables(&mut pool);
        let right_bar = super::dedup_block(coefficient_polys(
            &tables,
            &mut pool,
            &builtin("bar").unwrap()[1],
        ));
        let right_assoc = super::dedup_block(coefficient_polys(
            &tables,
            &mut pool,
            &builtin("right_associative").unwrap()[0],
        ));
        let sys = constraint_system();
        assert_eq!(right_bar, sys.bar);
        assert_eq!(right_assoc, sys.left_assoc);
    }

    #[test]
    fn fundamental_solutions() {
        let sys = constraint_system();
        let s1 = Point8::from_ints([0, 1, -1, -1, -1, -1, 1, 0]);
        let s2 = Point8::from_ints([1, 0, 0, 0, 0, 0, 0, 1]);
        let s3 = Point8::from_ints([1, 0, 1, 0, 0, 1, 0, 1]);
        let s4 = Point8::from_ints([1, 1, 1, 1, 1, 1, 1, 1]);
        for (i, s) in [&s1, &s2, &s3, &s4].iter().enumerate() {
            assert!(eval_constraints(&sys, s), "fundamental solution {}", i + 1);
        }
        // violates the involution block (a != h)
        assert!(!eval_constraints(
            &sys,
            &Point8::from_ints([1, 1, 0, 0, 0, 0, 0, 0])
        ));
        // only the third has distinct products
        assert!(!s1.is_proper());
        assert!(!s2.is_proper());
        assert!(s3.is_proper());
        assert!(!s4.is_proper());
        // family cross-points
        assert!(Family::Diagonal.contains(&s3));
        assert_eq!(
            Family::TwoParameter.at(&[Rational::one(), Rational::zero()]),
            s1
        );
    }

    #[test]
    fn families_pass_symbolically() {
        let sys = constraint_system();
        assert_eq!(families().len(), 3);
        for fam in families() {
            let mut pool = sys.pool().clone();
            let point = fam.symbolic_point(&mut pool);
            assert!(
                sys.eval_symbolic(&point),
                "family {} must satisfy the system with symbolic parameters",
                fam.name()
            );
        }
    }

    #[test]
    fn random_family_points_pass() {
        // deterministic pseudo-random rationals
        let sys = constraint_system();
        let mut state = 1u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let n = ((state >> 33) % 19) as i64 - 9;
            let d = ((state >> 21) % 7) as i64 + 1;
            Rational::new(n, d).unwrap()
        };
        for _ in 0..100 {
            for fam in families() {
                let params: Vec<Rational> = (0..fam.param_count()).map(|_| next()).collect();
                assert!(sys.eval(&fam.at(&params)), "family {}", fam.name());
            }
        }
    }

    #[test]
    fn grid_search_small() {
        let grid = vec![-Rational::one(), Rational::zero(), Rational::one()];
        let sols = grid_search(&grid).unwrap();
        assert_eq!(sols.len(), 13);
        let proper: Vec<&GridSolution> = sols.iter().filter(|s| s.proper).collect();
        assert_eq!(proper.len(), 2);
        // the two proper points are negatives of each other
        let p0 = &proper[0].point;
        let p1 = &proper[1].point;
        assert!(p0
            .consts
            .iter()
            .zip(&p1.consts)
            .all(|(x, y)| *x == -y));
        // and one of them is the distinguished table
        let d = Point8::from_ints([1, 0, 1, 0, 0, 1, 0, 1]);
        assert!(p0 == &d || p1 == &d);

        // trivial grid
        let zero_grid = vec![Rational::zero()];
        let sols = grid_search(&zero_grid).unwrap();
        assert_eq!(sols.len(), 1);
    }

    #[test]
    fn distinguished_point_builds_d() {
        let p = Point8::from_ints([1, 0, 1, 0, 0, 1, 0, 1]);
        let (table, invol) = p.to_table();
        let d = crate::catalog::builtin_dialgebra("D").unwrap();
        assert!(table.structure_eq(&d.table));
        assert_eq!(&invol, d.involution.as_ref().unwrap());
        let rep = classify_predicates(&table, Some(&invol)).unwrap();
        for name in [
            "zero_dialgebra",
            "dicommutative",
            "di_associative",
            "involution",
        ] {
            assert!(rep.passed(name));
        }
        assert!(!table.is_algebra());
    }
}

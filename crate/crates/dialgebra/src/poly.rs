//! Sparse multivariate polynomials over [`Rational`].
//!
//! Indeterminates are plain integer ids issued by a [`VarPool`]; one pool per
//! evaluation context keeps ids fresh without any global state, so
//! independent audits can run concurrently. Terms are stored in a map from
//! monomial to coefficient with two invariants: no stored coefficient is
//! zero, and monomial keys are unique. Two polynomials are equal exactly
//! when their term maps are equal, which makes the `== 0` test behind every
//! identity audit a cheap structural check.
//!
//! Monomials are ordered graded-lexicographically by indeterminate id. Any
//! fixed total order would do; this one is pinned so printing is
//! reproducible.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// A monomial: sorted list of `(indeterminate id, exponent)` pairs with all
/// exponents positive. The empty list is the constant monomial 1.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(id: u32) -> Self {
        Monomial(vec![(id, 1)])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (va, ea) = self.0[i];
            let (vb, eb) = other.0[j];
            match va.cmp(&vb) {
                std::cmp::Ordering::Less => {
                    out.push((va, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((vb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Splits into the part whose variable ids satisfy `pred` and the rest.
    pub fn partition(&self, pred: impl Fn(u32) -> bool) -> (Monomial, Monomial) {
        let (a, b) = self.0.iter().partition(|&&(v, _)| pred(v));
        (Monomial(a), Monomial(b))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic by indeterminate id.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial in canonical form.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { terms }
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn var(id: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::var(id), Rational::one());
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if this polynomial has degree 0.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> std::collections::btree_map::Iter<'_, Monomial, Rational> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The highest variable degree attained by `id` in any term.
    pub fn degree_in(&self, id: u32) -> u32 {
        self.terms
            .keys()
            .filter_map(|m| m.exponents().iter().find(|&&(v, _)| v == id).map(|&(_, e)| e))
            .max()
            .unwrap_or(0)
    }

    pub fn variables(&self) -> Vec<u32> {
        let mut vars: Vec<u32> = self
            .terms
            .keys()
            .flat_map(|m| m.exponents().iter().map(|&(v, _)| v))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    /// Substitutes a rational value for one indeterminate.
    pub fn eval_at(&self, id: u32, value: &Rational) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for &(v, e) in m.exponents() {
                if v == id {
                    for _ in 0..e {
                        coeff *= value;
                    }
                } else {
                    rest.push((v, e));
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// Full rational evaluation; every variable of `self` must be assigned.
    pub fn eval(&self, assign: &BTreeMap<u32, Rational>) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in m.exponents() {
                let x = assign
                    .get(&var)
                    .expect("every variable must be assigned for evaluation");
                for _ in 0..e {
                    v *= x;
                }
            }
            total += &v;
        }
        total
    }

    /// Substitutes polynomials for variables; unassigned variables persist.
    pub fn substitute(&self, assign: &BTreeMap<u32, Polynomial>) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for &(var, e) in m.exponents() {
                match assign.get(&var) {
                    Some(p) => {
                        for _ in 0..e {
                            acc = &acc * p;
                        }
                    }
                    None => {
                        let mut keep = Polynomial::zero();
                        keep.add_term(Monomial(vec![(var, e)]), Rational::one());
                        acc = &acc * &keep;
                    }
                }
            }
            out = &out + &acc;
        }
        out
    }

    /// Renders with `names` resolving ids; terms print in descending
    /// graded-lex order so output is stable.
    pub fn render(&self, names: &dyn Fn(u32) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let coeff_part = if mag.is_one() && !m.is_one() {
                String::new()
            } else {
                mag.to_string()
            };
            s.push_str(&coeff_part);
            for (k, &(v, e)) in m.exponents().iter().enumerate() {
                if k > 0 || !coeff_part.is_empty() {
                    s.push('*');
                }
                let _ = write!(s, "{}", names(v));
                if e > 1 {
                    let _ = write!(s, "^{}", e);
                }
            }
        }
        s
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

/// Issues fresh indeterminate ids and remembers their print names.
///
/// A pool is the only mutable state in an evaluation context; every id it
/// hands out is distinct for the pool's lifetime.
#[derive(Default, Debug, Clone)]
pub struct VarPool {
    names: Vec<String>,
}

impl VarPool {
    pub fn new() -> Self {
        VarPool::default()
    }

    /// Returns `count` distinct degree-1 polynomials named `tag0, tag1, ...`,
    /// none of which has been issued before by this pool.
    pub fn fresh(&mut self, count: usize, tag: &str) -> Vec<Polynomial> {
        (0..count)
            .map(|k| {
                let id = self.names.len() as u32;
                self.names.push(format!("{tag}{k}"));
                Polynomial::var(id)
            })
            .collect()
    }

    /// A single fresh indeterminate with an exact name.
    pub fn named(&mut self, name: &str) -> Polynomial {
        let id = self.names.len() as u32;
        self.names.push(name.to_string());
        Polynomial::var(id)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, id: u32) -> String {
        self.names
            .get(id as usize)
            .cloned()
            .unwrap_or_else(|| format!("x{id}"))
    }

    pub fn render(&self, p: &Polynomial) -> String {
        p.render(&|id| self.name(id))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let x1 = Polynomial::var(0);
        let x2 = Polynomial::var(1);
        let lhs = &(&x1 + &x2) * &(&x1 - &x2);
        let rhs = &(&x1 * &x1) - &(&x2 * &x2);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn additive_identity() {
        let x = Polynomial::var(3);
        let p = &x * &x;
        assert_eq!(&p + &Polynomial::zero(), p);
    }

    #[test]
    fn rational_coefficient_cancellation() {
        let x = Polynomial::var(0);
        let p = x.scale(&q(2, 3));
        let r = x.scale(&q(3, 2));
        assert_eq!(&p * &r, &x * &x);
    }

    #[test]
    fn zero_tests() {
        let x1 = Polynomial::var(0);
        let x2 = Polynomial::var(1);
        assert!((&x1 - &x1).is_zero());
        // commuting indeterminates
        assert!((&(&x1 * &x2) - &(&x2 * &x1)).is_zero());
        assert!(!(&x1 - &x1.scale(&q(2, 1))).is_zero());
    }

    #[test]
    fn fresh_ids_are_distinct() {
        let mut pool = VarPool::new();
        let a = pool.fresh(2, "a");
        assert_eq!(a.len(), 2);
        assert_ne!(a[0], a[1]);
        assert!(pool.fresh(0, "b").is_empty());
        let c1 = pool.fresh(1, "c");
        let c2 = pool.fresh(1, "c");
        assert_ne!(c1[0], c2[0]);
    }

    #[test]
    fn eval_and_substitute() {
        // p = 2*x0*x1 - x1^2
        let x0 = Polynomial::var(0);
        let x1 = Polynomial::var(1);
        let p = &(&x0 * &x1).scale(&q(2, 1)) - &(&x1 * &x1);
        let mut assign = BTreeMap::new();
        assign.insert(0, q(1, 2));
        assign.insert(1, q(3, 1));
        assert_eq!(p.eval(&assign), q(-6, 1));

        let mut sub = BTreeMap::new();
        sub.insert(0, &x1 + &Polynomial::one());
        let composed = p.substitute(&sub);
        // 2*(x1+1)*x1 - x1^2 = x1^2 + 2*x1
        let expected = &(&x1 * &x1) + &x1.scale(&q(2, 1));
        assert_eq!(composed, expected);
    }

    #[test]
    fn render_is_stable() {
        let mut pool = VarPool::new();
        let a = pool.named("a");
        let b = pool.named("b");
        let p = &(&a * &a) - &b.scale(&q(1, 2));
        assert_eq!(pool.render(&p), "a^2 - 1/2*b");
        assert_eq!(pool.render(&Polynomial::zero()), "0");
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        // up to 4 terms, 3 variables, small exponents and coefficients
        proptest::collection::vec(
            (0u32..3, 0u32..3, 0u32..3, -4i64..5),
            0..4,
        )
        .prop_map(|terms| {
            let mut p = Polynomial::zero();
            for (v1, v2, e, c) in terms {
                let m = Monomial::var(v1).mul(&if e > 0 {
                    Monomial(vec![(v2, e)])
                } else {
                    Monomial::one()
                });
                p.add_term(m, Rational::from_int(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), r in arb_poly(), s in arb_poly()) {
            // associativity and commutativity of both operations
            prop_assert_eq!(&(&p + &r) + &s, &p + &(&r + &s));
            prop_assert_eq!(&p + &r, &r + &p);
            prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
            prop_assert_eq!(&p * &r, &r * &p);
            // distributivity
            prop_assert_eq!(&p * &(&r + &s), &(&p * &r) + &(&p * &s));
        }

        #[test]
        fn self_subtraction_is_zero(p in arb_poly()) {
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn canonical_form_idempotent(p in arb_poly(), r in arb_poly()) {
            // re-inserting every term of a result changes nothing
            let prod = &p * &r;
            let mut rebuilt = Polynomial::zero();
            for (m, c) in prod.terms() {
                rebuilt.add_term(m.clone(), c.clone());
            }
            prop_assert_eq!(rebuilt, prod);
        }
    }
}

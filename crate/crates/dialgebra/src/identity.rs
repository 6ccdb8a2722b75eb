//! Polynomial identities as syntax trees.
//!
//! An [`Identity`] is a formal linear combination of fully parenthesized
//! product terms over named variables, interpreted as "this expression
//! vanishes identically". A term tree is either in algebra mode (one
//! operation) or dialgebra mode (the left and right products); the two never
//! mix inside one tree. Leaves and internal nodes may carry the involution
//! star.
//!
//! [`CanonicalIdentity`] is the comparison form used by the transform
//! machinery: stars are pushed onto leaves (reversing products as they go),
//! every operation symbol that the interchange identities leave unobservable
//! is rewritten to a fixed convention, equal terms are merged, and zero
//! summands are dropped. Equality of canonical forms is deliberately
//! syntactic; it does not identify an identity with its consequences.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::rational::Rational;

/// Binary operation symbol at a term node.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Op {
    /// The single operation of an ordinary algebra, written `.`
    Alg,
    /// The left product, written `-|`
    Left,
    /// The right product, written `|-`
    Right,
}

impl Op {
    /// How the involution interchanges products when pushed through a node.
    fn star_swap(self) -> Op {
        match self {
            Op::Alg => Op::Alg,
            Op::Left => Op::Right,
            Op::Right => Op::Left,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Op::Alg => ".",
            Op::Left => "-|",
            Op::Right => "|-",
        }
    }
}

/// Which operations a tree (or identity) uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Algebra,
    Dialgebra,
    /// No binary operation at all (star-only identities such as `a** - a`).
    Neutral,
}

impl Mode {
    fn join(self, other: Mode) -> Result<Mode, Error> {
        match (self, other) {
            (Mode::Neutral, m) | (m, Mode::Neutral) => Ok(m),
            (a, b) if a == b => Ok(a),
            _ => Err(Error::MixedMode),
        }
    }

    pub fn accepts(self, other: Mode) -> bool {
        matches!(
            (self, other),
            (Mode::Neutral, _) | (_, Mode::Neutral) | (Mode::Algebra, Mode::Algebra) | (Mode::Dialgebra, Mode::Dialgebra)
        )
    }
}

/// A fully parenthesized product term.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Term {
    Leaf {
        var: String,
        /// Number of postfix stars; evaluation applies the involution this
        /// many times, comparison reduces it mod 2.
        stars: u8,
    },
    Node {
        op: Op,
        left: Box<Term>,
        right: Box<Term>,
        stars: u8,
    },
}

impl Ord for Term {
    /// Total order used for canonical summand maps. Nodes sort before
    /// leaves so that left-nested monomials print first, which matches how
    /// these identities are conventionally displayed.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match (self, other) {
            (
                Term::Leaf { var: a, stars: sa },
                Term::Leaf { var: b, stars: sb },
            ) => a.cmp(b).then_with(|| sa.cmp(sb)),
            (Term::Node { .. }, Term::Leaf { .. }) => Ordering::Less,
            (Term::Leaf { .. }, Term::Node { .. }) => Ordering::Greater,
            (
                Term::Node {
                    op: oa,
                    left: la,
                    right: ra,
                    stars: sa,
                },
                Term::Node {
                    op: ob,
                    left: lb,
                    right: rb,
                    stars: sb,
                },
            ) => oa
                .cmp(ob)
                .then_with(|| la.cmp(lb))
                .then_with(|| ra.cmp(rb))
                .then_with(|| sa.cmp(sb)),
        }
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Leaf {
            var: name.to_string(),
            stars: 0,
        }
    }

    pub fn node(op: Op, left: Term, right: Term) -> Term {
        Term::Node {
            op,
            left: Box::new(left),
            right: Box::new(right),
            stars: 0,
        }
    }

    pub fn starred(self) -> Term {
        match self {
            Term::Leaf { var, stars } => Term::Leaf {
                var,
                stars: stars + 1,
            },
            Term::Node {
                op,
                left,
                right,
                stars,
            } => Term::Node {
                op,
                left,
                right,
                stars: stars + 1,
            },
        }
    }

    pub fn stars(&self) -> u8 {
        match self {
            Term::Leaf { stars, .. } | Term::Node { stars, .. } => *stars,
        }
    }

    pub fn has_star(&self) -> bool {
        match self {
            Term::Leaf { stars, .. } => *stars > 0,
            Term::Node {
                stars, left, right, ..
            } => *stars > 0 || left.has_star() || right.has_star(),
        }
    }

    pub fn mode(&self) -> Result<Mode, Error> {
        match self {
            Term::Leaf { .. } => Ok(Mode::Neutral),
            Term::Node {
                op, left, right, ..
            } => {
                let own = match op {
                    Op::Alg => Mode::Algebra,
                    Op::Left | Op::Right => Mode::Dialgebra,
                };
                own.join(left.mode()?)?.join(right.mode()?)
            }
        }
    }

    /// Variable names at the leaves, in left-to-right order (with repeats).
    pub fn leaves(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Term::Leaf { var, .. } => out.push(var),
            Term::Node { left, right, .. } => {
                left.collect_leaves(out);
                right.collect_leaves(out);
            }
        }
    }

    pub fn rename(&self, map: &BTreeMap<String, String>) -> Term {
        match self {
            Term::Leaf { var, stars } => Term::Leaf {
                var: map.get(var).cloned().unwrap_or_else(|| var.clone()),
                stars: *stars,
            },
            Term::Node {
                op,
                left,
                right,
                stars,
            } => Term::Node {
                op: *op,
                left: Box::new(left.rename(map)),
                right: Box::new(right.rename(map)),
                stars: *stars,
            },
        }
    }

    /// Pushes every star down to the leaves. A starred node `(l op r)*`
    /// becomes `r* op' l*` with the products interchanged, and leaf star
    /// counts are reduced mod 2.
    pub fn push_stars(&self) -> Term {
        self.push_stars_with(0)
    }

    fn push_stars_with(&self, parity: u8) -> Term {
        match self {
            Term::Leaf { var, stars } => Term::Leaf {
                var: var.clone(),
                stars: (stars + parity) % 2,
            },
            Term::Node {
                op,
                left,
                right,
                stars,
            } => {
                if (stars + parity) % 2 == 0 {
                    Term::node(*op, left.push_stars_with(0), right.push_stars_with(0))
                } else {
                    Term::node(
                        op.star_swap(),
                        right.push_stars_with(1),
                        left.push_stars_with(1),
                    )
                }
            }
        }
    }

    /// Rewrites unobservable operation symbols to the fixed convention.
    ///
    /// The interchange identities make the operation at the root of the
    /// right argument of a left product (and, recursively, everything below
    /// it) unobservable, and likewise for the left argument of a right
    /// product. The convention labels every node in such a region `-|` under
    /// a left product and `|-` under a right product, which is exactly the
    /// normal form the central-argument transform produces. Two terms get
    /// equal normal forms precisely when the interchange identities relate
    /// them.
    pub fn bar_normal(&self) -> Term {
        match self {
            Term::Leaf { .. } => self.clone(),
            Term::Node {
                op, left, right, ..
            } => match op {
                Op::Alg => Term::node(Op::Alg, left.bar_normal(), right.bar_normal()),
                Op::Left => Term::node(Op::Left, left.bar_normal(), right.relabel_all(Op::Left)),
                Op::Right => Term::node(Op::Right, left.relabel_all(Op::Right), right.bar_normal()),
            },
        }
    }

    fn relabel_all(&self, op: Op) -> Term {
        match self {
            Term::Leaf { .. } => self.clone(),
            Term::Node { left, right, .. } => {
                Term::node(op, left.relabel_all(op), right.relabel_all(op))
            }
        }
    }

    /// Mirror image with products interchanged and the variables kept:
    /// the effect of starring a term and then substituting `x*` back to `x`
    /// at every leaf.
    pub fn star_conjugate(&self) -> Term {
        match self {
            Term::Leaf { .. } => self.clone(),
            Term::Node {
                op,
                left,
                right,
                stars,
            } => {
                let t = Term::Node {
                    op: op.star_swap(),
                    left: Box::new(right.star_conjugate()),
                    right: Box::new(left.star_conjugate()),
                    stars: 0,
                };
                if stars % 2 == 1 {
                    t.starred()
                } else {
                    t
                }
            }
        }
    }

    /// Replaces both dialgebra products by the algebra operation.
    pub fn collapse_to_algebra(&self) -> Term {
        match self {
            Term::Leaf { .. } => self.clone(),
            Term::Node {
                left,
                right,
                stars,
                ..
            } => Term::Node {
                op: Op::Alg,
                left: Box::new(left.collapse_to_algebra()),
                right: Box::new(right.collapse_to_algebra()),
                stars: *stars,
            },
        }
    }
}

/// A formal identity: `sum of coefficient * term ≡ 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Identity {
    pub summands: Vec<(Rational, Term)>,
    /// Variable names in first-occurrence order.
    pub variables: Vec<String>,
    pub mode: Mode,
}

impl Identity {
    /// Builds an identity from summands, inferring mode and variable order.
    pub fn new(summands: Vec<(Rational, Term)>) -> Result<Identity, Error> {
        let mut mode = Mode::Neutral;
        let mut variables: Vec<String> = Vec::new();
        for (_, t) in &summands {
            mode = mode.join(t.mode()?)?;
            for v in t.leaves() {
                if !variables.iter().any(|w| w == v) {
                    variables.push(v.to_string());
                }
            }
        }
        Ok(Identity {
            summands,
            variables,
            mode,
        })
    }

    pub fn has_star(&self) -> bool {
        self.summands.iter().any(|(_, t)| t.has_star())
    }

    pub fn degree(&self) -> usize {
        self.variables.len()
    }

    /// True when every summand contains each declared variable exactly once
    /// (stars do not affect multiplicity).
    pub fn is_multilinear(&self) -> bool {
        self.summands.iter().all(|(_, t)| {
            let leaves = t.leaves();
            leaves.len() == self.variables.len()
                && self
                    .variables
                    .iter()
                    .all(|v| leaves.iter().filter(|l| *l == v).count() == 1)
        })
    }

    pub fn rename(&self, map: &BTreeMap<String, String>) -> Identity {
        let summands = self
            .summands
            .iter()
            .map(|(c, t)| (c.clone(), t.rename(map)))
            .collect();
        Identity::new(summands).expect("renaming preserves well-formedness")
    }

    pub fn negated(&self) -> Identity {
        Identity {
            summands: self
                .summands
                .iter()
                .map(|(c, t)| (-c, t.clone()))
                .collect(),
            variables: self.variables.clone(),
            mode: self.mode,
        }
    }

    /// Merges equal terms without any rewriting. Valid in every mode.
    pub fn collect_terms(&self) -> CanonicalIdentity {
        let mut terms: BTreeMap<Term, Rational> = BTreeMap::new();
        for (c, t) in &self.summands {
            add_term(&mut terms, t.clone(), c.clone());
        }
        CanonicalIdentity {
            terms,
            mode: self.mode,
        }
    }

    /// Full normal form: star push-down, operation-symbol normalization,
    /// merge, drop zeros. Dialgebra (or star-only) identities only; the
    /// interchange rewriting has no meaning for a single operation.
    pub fn canonical_form(&self) -> Result<CanonicalIdentity, Error> {
        if self.mode == Mode::Algebra {
            return Err(Error::ModeMismatch {
                expected: "dialgebra",
            });
        }
        let mut terms: BTreeMap<Term, Rational> = BTreeMap::new();
        for (c, t) in &self.summands {
            add_term(&mut terms, t.push_stars().bar_normal(), c.clone());
        }
        Ok(CanonicalIdentity {
            terms,
            mode: self.mode,
        })
    }
}

fn add_term(terms: &mut BTreeMap<Term, Rational>, t: Term, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(t) {
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

/// Normal-form summand map of an identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CanonicalIdentity {
    terms: BTreeMap<Term, Rational>,
    mode: Mode,
}

impl CanonicalIdentity {
    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Rational)> {
        self.terms.iter()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Variables in first-occurrence order over the sorted summands.
    pub fn variables(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for t in self.terms.keys() {
            for v in t.leaves() {
                if !out.iter().any(|w| w == v) {
                    out.push(v.to_string());
                }
            }
        }
        out
    }

    /// Back to a plain identity (summands in sorted term order).
    pub fn to_identity(&self) -> Identity {
        Identity::new(
            self.terms
                .iter()
                .map(|(t, c)| (c.clone(), t.clone()))
                .collect(),
        )
        .expect("canonical terms are well formed")
    }

    /// If `self == c * other` for a single nonzero rational `c`, returns it.
    pub fn scalar_multiple_of(&self, other: &CanonicalIdentity) -> Option<Rational> {
        if self.terms.len() != other.terms.len() {
            return None;
        }
        if self.terms.is_empty() {
            return Some(Rational::one());
        }
        let mut ratio: Option<Rational> = None;
        for ((ta, ca), (tb, cb)) in self.terms.iter().zip(other.terms.iter()) {
            if ta != tb {
                return None;
            }
            let r = ca.clone() / cb.clone();
            match &ratio {
                None => ratio = Some(r),
                Some(prev) if *prev == r => {}
                _ => return None,
            }
        }
        ratio
    }

    /// Equality up to an overall nonzero scalar.
    pub fn proportional_to(&self, other: &CanonicalIdentity) -> bool {
        self.scalar_multiple_of(other).is_some()
    }
}

impl fmt::Display for CanonicalIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::dsl::render_identity(&self.to_identity()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn leaf(v: &str) -> Term {
        Term::var(v)
    }

    #[test]
    fn mode_inference_and_mixing() {
        let alg = Term::node(Op::Alg, leaf("a"), leaf("b"));
        assert_eq!(alg.mode().unwrap(), Mode::Algebra);
        let di = Term::node(Op::Left, leaf("a"), leaf("b"));
        assert_eq!(di.mode().unwrap(), Mode::Dialgebra);
        let mixed = Term::node(Op::Alg, di, leaf("c"));
        assert!(mixed.mode().is_err());
        assert_eq!(leaf("a").mode().unwrap(), Mode::Neutral);
    }

    #[test]
    fn star_pushdown_reverses_products() {
        // (a -| b)* => b* |- a*
        let t = Term::node(Op::Left, leaf("a"), leaf("b")).starred();
        let pushed = t.push_stars();
        let expected = Term::node(
            Op::Right,
            leaf("b").starred(),
            leaf("a").starred(),
        );
        assert_eq!(pushed, expected);
        // a** => a
        let t = leaf("a").starred().starred();
        assert_eq!(t.push_stars(), leaf("a"));
    }

    #[test]
    fn bar_normalization_examples() {
        // a -| (b |- c) => a -| (b -| c)
        let t = Term::node(
            Op::Left,
            leaf("a"),
            Term::node(Op::Right, leaf("b"), leaf("c")),
        );
        let expected = Term::node(
            Op::Left,
            leaf("a"),
            Term::node(Op::Left, leaf("b"), leaf("c")),
        );
        assert_eq!(t.bar_normal(), expected);

        // (a -| b) |- c => (a |- b) |- c
        let t = Term::node(
            Op::Right,
            Term::node(Op::Left, leaf("a"), leaf("b")),
            leaf("c"),
        );
        let expected = Term::node(
            Op::Right,
            Term::node(Op::Right, leaf("a"), leaf("b")),
            leaf("c"),
        );
        assert_eq!(t.bar_normal(), expected);

        // already canonical is untouched
        assert_eq!(expected.bar_normal(), expected);
    }

    #[test]
    fn bar_normalization_is_strategy_free() {
        // a -| ((b |- c) -| d) and a -| ((b -| c) -| d) are related by the
        // interchange identities through a non-local rewrite chain; both
        // must land on the same normal form.
        let inner1 = Term::node(
            Op::Left,
            Term::node(Op::Right, leaf("b"), leaf("c")),
            leaf("d"),
        );
        let inner2 = Term::node(
            Op::Left,
            Term::node(Op::Left, leaf("b"), leaf("c")),
            leaf("d"),
        );
        let t1 = Term::node(Op::Left, leaf("a"), inner1);
        let t2 = Term::node(Op::Left, leaf("a"), inner2);
        assert_eq!(t1.bar_normal(), t2.bar_normal());
    }

    #[test]
    fn canonical_idempotent() {
        let t = Term::node(
            Op::Left,
            leaf("a"),
            Term::node(Op::Right, leaf("b"), leaf("c")),
        );
        let id = Identity::new(vec![(Rational::one(), t)]).unwrap();
        let c1 = id.canonical_form().unwrap();
        let c2 = c1.to_identity().canonical_form().unwrap();
        assert_eq!(c1, c2);
    }

    #[test]
    fn multilinearity() {
        // associativity is multilinear
        let assoc = Identity::new(vec![
            (
                Rational::one(),
                Term::node(Op::Alg, Term::node(Op::Alg, leaf("a"), leaf("b")), leaf("c")),
            ),
            (
                -&Rational::one(),
                Term::node(Op::Alg, leaf("a"), Term::node(Op::Alg, leaf("b"), leaf("c"))),
            ),
        ])
        .unwrap();
        assert!(assoc.is_multilinear());

        // (b(aa))a - (ba)(aa) is not
        let aa = Term::node(Op::Alg, leaf("a"), leaf("a"));
        let jordan = Identity::new(vec![
            (
                Rational::one(),
                Term::node(Op::Alg, Term::node(Op::Alg, leaf("b"), aa.clone()), leaf("a")),
            ),
            (
                -&Rational::one(),
                Term::node(Op::Alg, Term::node(Op::Alg, leaf("b"), leaf("a")), aa),
            ),
        ])
        .unwrap();
        assert!(!jordan.is_multilinear());
    }

    #[test]
    fn multilinearity_agrees_with_leaf_counting() {
        use proptest::prelude::*;
        // random small trees over up to three variables
        fn arb_term() -> impl Strategy<Value = Term> {
            let leaf = (0usize..3).prop_map(|i| Term::var(["a", "b", "c"][i]));
            leaf.prop_recursive(3, 12, 2, |inner| {
                (inner.clone(), inner).prop_map(|(l, r)| Term::node(Op::Alg, l, r))
            })
        }
        let mut runner = proptest::test_runner::TestRunner::deterministic();
        runner
            .run(&proptest::collection::vec(arb_term(), 1..4), |terms| {
                let id = Identity::new(
                    terms
                        .into_iter()
                        .map(|t| (Rational::one(), t))
                        .collect(),
                )
                .unwrap();
                let brute = id.summands.iter().all(|(_, t)| {
                    let leaves = t.leaves();
                    id.variables.iter().all(|v| {
                        leaves.iter().filter(|l| *l == v).count() == 1
                    }) && leaves.len() == id.variables.len()
                });
                prop_assert_eq!(id.is_multilinear(), brute);
                Ok(())
            })
            .unwrap();
    }

    #[test]
    fn canonical_merges_and_cancels() {
        let t = Term::node(Op::Left, leaf("a"), leaf("b"));
        let id = Identity::new(vec![
            (Rational::one(), t.clone()),
            (-&Rational::one(), t),
        ])
        .unwrap();
        assert!(id.canonical_form().unwrap().is_zero());
    }

    #[test]
    fn scalar_multiple_detection() {
        let t1 = Term::node(Op::Left, leaf("a"), leaf("b"));
        let t2 = Term::node(Op::Right, leaf("b"), leaf("a"));
        let p = Identity::new(vec![
            (Rational::one(), t1.clone()),
            (-&Rational::one(), t2.clone()),
        ])
        .unwrap()
        .canonical_form()
        .unwrap();
        let q = Identity::new(vec![
            (Rational::from_int(-3), t1),
            (Rational::from_int(3), t2),
        ])
        .unwrap()
        .canonical_form()
        .unwrap();
        assert_eq!(
            p.scalar_multiple_of(&q),
            Some(Rational::new(-1, 3).unwrap())
        );
    }
}

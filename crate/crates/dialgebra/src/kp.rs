//! The central-argument transform for binary operations.
//!
//! A multilinear identity of degree `d` in one binary operation becomes a
//! family of `d` identities in the two dialgebra operations, one per choice
//! of central argument. Each node of each monomial is labeled by where the
//! central argument sits: `-|` when it is inside (or to the left of) the
//! node's left subtree, `|-` when inside or to the right of the right
//! subtree. The interchange identities make the off-path labels
//! immaterial, which is exactly what [`crate::identity::Term::bar_normal`]
//! normalizes away.
//!
//! Deduplication of a transformed family is layered, because "the same
//! identity" means different things at different distances:
//!
//! * [`KpFamily::raw`]: one image per central argument, untouched.
//! * [`KpFamily::distinct`]: images merged only when their canonical forms
//!   agree up to an overall scalar, with the variable names left alone.
//! * [`KpFamily::minimal`]: a smallest subfamily whose relabelings span
//!   the same space of multilinear consequences as the whole family, found
//!   by exact linear algebra over the canonical monomial basis.
//!
//! Star-conjugate pairs (mirror image, products interchanged) are reported
//! as distinct but flagged, matching how such pairs are usually displayed
//! with an "equivalent" remark rather than dropped.

use std::collections::BTreeMap;

use crate::builtins::builtin;
use crate::error::Error;
use crate::identity::{CanonicalIdentity, Identity, Mode, Op, Term};
use crate::linalg::RowSpace;
use crate::rational::Rational;

/// Labels every node of an algebra-mode monomial by the position of the
/// central argument, producing a dialgebra-mode monomial.
pub fn kp_monomial(t: &Term, central: &str) -> Result<Term, Error> {
    let occurrences = t.leaves().iter().filter(|v| **v == central).count();
    match occurrences {
        0 => {
            return Err(Error::BadCentral {
                var: central.to_string(),
                reason: "does not occur",
            })
        }
        1 => {}
        _ => {
            return Err(Error::BadCentral {
                var: central.to_string(),
                reason: "occurs more than once",
            })
        }
    }
    let pos = t.leaves().iter().position(|v| *v == central).unwrap();
    Ok(label(t, pos, 0).0)
}

fn label(t: &Term, central_pos: usize, lo: usize) -> (Term, usize) {
    match t {
        Term::Leaf { .. } => (t.clone(), 1),
        Term::Node {
            left,
            right,
            stars,
            ..
        } => {
            let (l, wl) = label(left, central_pos, lo);
            let (r, wr) = label(right, central_pos, lo + wl);
            let op = if central_pos < lo + wl {
                // in the left argument, or to the left of the whole node
                Op::Left
            } else {
                // in the right argument, or to the right of the whole node
                Op::Right
            };
            let mut node = Term::node(op, l, r);
            for _ in 0..*stars {
                node = node.starred();
            }
            (node, wl + wr)
        }
    }
}

/// The image of a whole identity for one choice of central argument.
pub fn kp_image(id: &Identity, central: &str) -> Result<Identity, Error> {
    if id.mode == Mode::Dialgebra {
        return Err(Error::ModeMismatch {
            expected: "algebra",
        });
    }
    let summands = id
        .summands
        .iter()
        .map(|(c, t)| Ok((c.clone(), kp_monomial(t, central)?)))
        .collect::<Result<Vec<_>, Error>>()?;
    Identity::new(summands)
}

/// The transform of one or more source identities, with its equivalence
/// structure.
pub struct KpFamily {
    /// `(central variable, canonical image)`, one per central argument of
    /// each source identity, in source order.
    pub raw: Vec<(String, CanonicalIdentity)>,
    /// Indices into `raw` after merging exact scalar multiples.
    pub distinct: Vec<usize>,
    /// Indices into `raw` of a smallest subfamily with the same relabeling
    /// span as the whole family.
    pub minimal: Vec<usize>,
    /// Pairs of `raw` indices that are star-conjugates of each other.
    pub star_pairs: Vec<(usize, usize)>,
}

/// Runs the transform on a single multilinear identity.
pub fn kp_identity(id: &Identity) -> Result<KpFamily, Error> {
    kp_family(std::slice::from_ref(id))
}

/// Runs the transform on a family of multilinear identities of one degree
/// and merges the results.
pub fn kp_family(ids: &[Identity]) -> Result<KpFamily, Error> {
    let mut raw = Vec::new();
    let mut degree = None;
    for id in ids {
        if !id.is_multilinear() {
            return Err(Error::NotMultilinear(crate::dsl::render_identity(id)));
        }
        match degree {
            None => degree = Some(id.degree()),
            Some(d) if d == id.degree() => {}
            _ => {
                return Err(Error::NotMultilinear(
                    "family mixes identities of different degrees".into(),
                ))
            }
        }
        for v in &id.variables {
            raw.push((v.clone(), kp_image(id, v)?.canonical_form()?));
        }
    }

    // exact dedup: canonical equality up to an overall scalar
    let mut distinct: Vec<usize> = Vec::new();
    for i in 0..raw.len() {
        if !distinct
            .iter()
            .any(|&j| raw[i].1.proportional_to(&raw[j].1))
        {
            distinct.push(i);
        }
    }

    let mut star_pairs = Vec::new();
    for (a, &i) in distinct.iter().enumerate() {
        for &j in &distinct[a + 1..] {
            if star_conjugate_equal(&raw[i].1, &raw[j].1) {
                star_pairs.push((i, j));
            }
        }
    }

    let minimal = minimal_spanning_subfamily(
        &distinct
            .iter()
            .map(|&i| raw[i].1.clone())
            .collect::<Vec<_>>(),
    )?
    .into_iter()
    .map(|k| distinct[k])
    .collect();

    Ok(KpFamily {
        raw,
        distinct,
        minimal,
        star_pairs,
    })
}

/// The operation-interchange identities added by the transform: for one
/// binary operation these are the two identities making a 0-dialgebra.
pub fn zero_identities() -> Vec<Identity> {
    builtin("bar").expect("builtin family")
}

/// The transform of the involution identity `(ab)* = b*a*`, plus star
/// cancellation.
pub fn kp_involution() -> Vec<Identity> {
    builtin("involution").expect("builtin family")
}

/// Mirror image with the products interchanged: the effect of starring
/// every monomial and renaming `x*` back to `x`.
pub fn star_conjugate(p: &CanonicalIdentity) -> CanonicalIdentity {
    let summands: Vec<(Rational, Term)> = p
        .terms()
        .map(|(t, c)| (c.clone(), t.star_conjugate()))
        .collect();
    Identity::new(summands)
        .expect("star conjugation preserves well-formedness")
        .canonical_form()
        .expect("conjugate of a dialgebra identity stays in dialgebra mode")
}

/// True when `q` is the star-conjugate of `p` up to variable renaming and
/// an overall scalar.
pub fn star_conjugate_equal(p: &CanonicalIdentity, q: &CanonicalIdentity) -> bool {
    equivalent_up_to_relabel(&star_conjugate(p), q)
}

/// True when some bijective variable renaming makes the canonical forms
/// proportional.
pub fn equivalent_up_to_relabel(p: &CanonicalIdentity, q: &CanonicalIdentity) -> bool {
    let pv = p.variables();
    let qv = q.variables();
    if pv.len() != qv.len() {
        return false;
    }
    permutations(pv.len()).into_iter().any(|perm| {
        let map: BTreeMap<String, String> = pv
            .iter()
            .cloned()
            .zip(perm.iter().map(|&k| qv[k].clone()))
            .collect();
        match p.to_identity().rename(&map).canonical_form() {
            Ok(renamed) => renamed.proportional_to(q),
            Err(_) => false,
        }
    })
}

/// Replaces both dialgebra products by the single algebra operation.
pub fn collapse_to_algebra(p: &CanonicalIdentity) -> Identity {
    Identity::new(
        p.terms()
            .map(|(t, c)| (c.clone(), t.collapse_to_algebra()))
            .collect(),
    )
    .expect("collapse preserves well-formedness")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for k in 0..n {
            let mut p = rest.clone();
            p.insert(k, n - 1);
            out.push(p);
        }
    }
    out
}

/// All variable relabelings of a canonical identity.
fn orbit(p: &CanonicalIdentity) -> Result<Vec<CanonicalIdentity>, Error> {
    let vars = p.variables();
    permutations(vars.len())
        .into_iter()
        .map(|perm| {
            let map: BTreeMap<String, String> = vars
                .iter()
                .cloned()
                .zip(perm.iter().map(|&k| vars[k].clone()))
                .collect();
            p.to_identity().rename(&map).canonical_form()
        })
        .collect()
}

/// Renames variables to a shared alphabet so identities from different
/// sources vectorize over one basis.
fn standardize(p: &CanonicalIdentity) -> Result<CanonicalIdentity, Error> {
    let vars = p.to_identity().variables;
    let map: BTreeMap<String, String> = vars
        .iter()
        .enumerate()
        .map(|(k, v)| (v.clone(), format!("v{k}")))
        .collect();
    p.to_identity().rename(&map).canonical_form()
}

struct TermIndex {
    index: BTreeMap<Term, usize>,
}

impl TermIndex {
    fn new() -> Self {
        TermIndex {
            index: BTreeMap::new(),
        }
    }

    fn learn(&mut self, p: &CanonicalIdentity) {
        for (t, _) in p.terms() {
            let n = self.index.len();
            self.index.entry(t.clone()).or_insert(n);
        }
    }

    fn vectorize(&self, p: &CanonicalIdentity) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.index.len()];
        for (t, c) in p.terms() {
            v[self.index[t]] = c.clone();
        }
        v
    }
}

/// Smallest subset (earliest in index order among those of minimum size)
/// whose relabeling orbits span the same space as the whole family's.
fn minimal_spanning_subfamily(family: &[CanonicalIdentity]) -> Result<Vec<usize>, Error> {
    if family.is_empty() {
        return Ok(Vec::new());
    }
    // standardize once so all families share variable names; the orbit
    // itself must keep the permuted names, or it would collapse back to a
    // representative
    let orbits: Vec<Vec<CanonicalIdentity>> = family
        .iter()
        .map(|p| orbit(&standardize(p)?))
        .collect::<Result<Vec<_>, _>>()?;

    let mut index = TermIndex::new();
    for orb in &orbits {
        for p in orb {
            index.learn(p);
        }
    }

    let mut total = RowSpace::new();
    for orb in &orbits {
        for p in orb {
            total.insert(&index.vectorize(p));
        }
    }
    let target = total.rank();

    for size in 1..=family.len() {
        let mut found = None;
        for_each_combination(family.len(), size, &mut |subset| {
            if found.is_some() {
                return;
            }
            let mut space = RowSpace::new();
            for &i in subset {
                for p in &orbits[i] {
                    space.insert(&index.vectorize(p));
                }
            }
            if space.rank() == target {
                found = Some(subset.to_vec());
            }
        });
        if let Some(subset) = found {
            return Ok(subset);
        }
    }
    unreachable!("the full family always spans itself")
}

fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..n {
            acc.push(i);
            rec(i + 1, n, k, acc, f);
            acc.pop();
        }
    }
    rec(0, n, k, &mut Vec::new(), f);
}

/// True when the relabeling orbits of `a` and `b` span the same space of
/// multilinear identities (each family is a consequence of the other by
/// renaming and linear combination).
pub fn span_equivalent(a: &[CanonicalIdentity], b: &[CanonicalIdentity]) -> Result<bool, Error> {
    let std_orbits = |fam: &[CanonicalIdentity]| -> Result<Vec<CanonicalIdentity>, Error> {
        let mut out = Vec::new();
        for p in fam {
            out.extend(orbit(&standardize(p)?)?);
        }
        Ok(out)
    };
    let oa = std_orbits(a)?;
    let ob = std_orbits(b)?;
    let mut index = TermIndex::new();
    for p in oa.iter().chain(&ob) {
        index.learn(p);
    }
    let mut sa = RowSpace::new();
    for p in &oa {
        sa.insert(&index.vectorize(p));
    }
    let mut sb = RowSpace::new();
    for p in &ob {
        sb.insert(&index.vectorize(p));
    }
    Ok(oa.iter().all(|p| sb.contains(&index.vectorize(p)))
        && ob.iter().all(|p| sa.contains(&index.vectorize(p))))
}

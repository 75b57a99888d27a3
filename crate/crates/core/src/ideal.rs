//! Left ideals, ideals, the ideal lattice and quotients.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::brace::{BraceMap, SkewBrace};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SubgroupBuilder};
use crate::set::ElementSet;

/// A subset of a brace together with the ideal properties it was found to have.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealHandle {
    pub set: ElementSet,
    pub is_left_ideal: bool,
    pub is_ideal: bool,
    pub is_minimal: Option<bool>,
}

impl IdealHandle {
    pub fn new(b: &SkewBrace, set: ElementSet) -> Self {
        let is_left_ideal = is_left_ideal(b, &set);
        let is_ideal = is_left_ideal && normal_in_both(b, &set);
        IdealHandle { set, is_left_ideal, is_ideal, is_minimal: None }
    }

    fn checked(b: &SkewBrace, set: ElementSet) -> Result<Self> {
        let h = Self::new(b, set);
        if h.is_ideal {
            Ok(h)
        } else {
            Err(Error::NotAnIdeal)
        }
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }
}

/// An additive subgroup with `λ_a(I) ⊆ I` for every `a`.
pub fn is_left_ideal(b: &SkewBrace, set: &ElementSet) -> bool {
    if set.ambient() != b.order() || !b.add_group().is_subgroup(set) {
        return false;
    }
    // λ is an action of (B,∘), so multiplicative generators suffice
    let mask = set.mask();
    b.mul_group().generators().iter().all(|&g| set.iter().all(|x| mask[b.lambda(g, x)]))
}

pub fn is_ideal(b: &SkewBrace, set: &ElementSet) -> bool {
    is_left_ideal(b, set) && normal_in_both(b, set)
}

/// A left ideal is a subgroup of both groups, so generator conjugation decides normality.
fn normal_in_both(b: &SkewBrace, set: &ElementSet) -> bool {
    b.add_group().normal_under_generators(set) && b.mul_group().normal_under_generators(set)
}

/// Images of `x` under the maps that every ideal is closed under.
fn closure_images<'a>(b: &'a SkewBrace, x: usize) -> impl Iterator<Item = usize> + 'a {
    let add: &FiniteGroup = b.add_group();
    let mul: &FiniteGroup = b.mul_group();
    mul.generators()
        .iter()
        .map(move |&g| b.lambda(g, x))
        .chain(add.generators().iter().map(move |&g| add.conjugate(g, x)))
        .chain(mul.generators().iter().map(move |&g| mul.conjugate(g, x)))
}

/// The smallest ideal containing `x`.
pub fn principal_ideal(b: &SkewBrace, x: usize) -> IdealHandle {
    let set = ideal_closure(b, std::iter::once(x));
    debug_assert!(is_ideal(b, &set));
    IdealHandle { is_left_ideal: true, is_ideal: true, is_minimal: None, set }
}

/// The smallest ideal containing every element of `seeds`.
///
/// Each element of the growing additive subgroup is pushed once through
/// λ by multiplicative generators and conjugation by the generators of both
/// groups; the fixpoint is closed under all four operators.
pub fn ideal_closure(b: &SkewBrace, seeds: impl IntoIterator<Item = usize>) -> ElementSet {
    let mut builder = SubgroupBuilder::new(b.add_group());
    for s in seeds {
        builder.add(s);
    }
    let mut scanned = 0;
    while scanned < builder.len() {
        let x = builder.elements()[scanned];
        scanned += 1;
        let images: Vec<usize> = closure_images(b, x).collect();
        for y in images {
            builder.add(y);
        }
    }
    builder.finish()
}

/// Elements grouped into orbits of the maps in [`closure_images`] and
/// negation; elements of one orbit generate the same principal ideal.
fn orbit_representatives(b: &SkewBrace) -> Vec<usize> {
    let n = b.order();
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    for start in 1..n {
        if seen[start] {
            continue;
        }
        reps.push(start);
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in closure_images(b, x).chain(std::iter::once(b.neg(x))) {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    reps
}

fn compute_ideals(b: &SkewBrace) -> Vec<ElementSet> {
    let n = b.order();
    let reps = orbit_representatives(b);
    let principal: Vec<ElementSet> = reps.par_iter().map(|&x| ideal_closure(b, [x])).collect();
    let mut seen: HashSet<ElementSet> = HashSet::new();
    seen.insert(ElementSet::zero(n));
    let mut all: Vec<ElementSet> = vec![ElementSet::zero(n)];
    for p in principal {
        if seen.insert(p.clone()) {
            all.push(p);
        }
    }
    // every ideal is the sum of the principal ideals of its elements
    let generators: Vec<ElementSet> = all[1..].to_vec();
    let mut i = 1;
    while i < all.len() {
        for g in &generators {
            if g.is_subset(&all[i]) {
                continue;
            }
            let s = additive_sum(b, &all[i], g);
            if seen.insert(s.clone()) {
                all.push(s);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| a.size_lex_cmp(b));
    all
}

fn additive_sum(b: &SkewBrace, i: &ElementSet, j: &ElementSet) -> ElementSet {
    let mut builder = SubgroupBuilder::new(b.add_group());
    for x in i.iter().chain(j.iter()) {
        builder.add(x);
        if builder.is_full() {
            break;
        }
    }
    builder.finish()
}

/// The ideal sets of `b`, sorted by size then lexicographically; cached on the brace.
pub fn ideal_sets(b: &SkewBrace) -> &[ElementSet] {
    b.ideals.get_or_init(|| compute_ideals(b))
}

/// Every ideal of `b`, sorted by size then lexicographically, with minimality flags.
pub fn all_ideals(b: &SkewBrace) -> Vec<IdealHandle> {
    let sets = ideal_sets(b);
    sets.iter()
        .map(|s| {
            let minimal = !s.is_zero() && !sets.iter().any(|t| !t.is_zero() && t.len() < s.len() && t.is_subset(s));
            IdealHandle { set: s.clone(), is_left_ideal: true, is_ideal: true, is_minimal: Some(minimal) }
        })
        .collect()
}

/// Nonzero ideals containing no smaller nonzero ideal.
pub fn minimal_ideals(b: &SkewBrace) -> Vec<IdealHandle> {
    all_ideals(b).into_iter().filter(|h| h.is_minimal == Some(true)).collect()
}

/// Ideals other than `{0}` and `B`.
pub fn nontrivial_ideals(b: &SkewBrace) -> Vec<ElementSet> {
    ideal_sets(b).iter().filter(|s| !s.is_zero() && !s.is_full()).cloned().collect()
}

/// At least two elements and no ideals besides `{0}` and `B`.
pub fn is_simple(b: &SkewBrace) -> bool {
    b.order() >= 2 && ideal_sets(b).len() == 2
}

pub fn ideal_sum(b: &SkewBrace, i: &ElementSet, j: &ElementSet) -> Result<IdealHandle> {
    IdealHandle::checked(b, i.clone())?;
    IdealHandle::checked(b, j.clone())?;
    let s = IdealHandle::new(b, additive_sum(b, i, j));
    if !s.is_ideal {
        return Err(Error::Inconsistent("sum of ideals is not an ideal".into()));
    }
    Ok(s)
}

pub fn ideal_intersection(b: &SkewBrace, i: &ElementSet, j: &ElementSet) -> Result<IdealHandle> {
    IdealHandle::checked(b, i.clone())?;
    IdealHandle::checked(b, j.clone())?;
    let s = IdealHandle::new(b, i.intersection(j));
    if !s.is_ideal {
        return Err(Error::Inconsistent("intersection of ideals is not an ideal".into()));
    }
    Ok(s)
}

/// A quotient brace with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub brace: SkewBrace,
    pub projection: BraceMap,
    /// Coset representatives; `representatives[k]` is the smallest element of coset `k`.
    pub representatives: Vec<usize>,
}

/// `B/I`, with each coset represented by its smallest element and cosets
/// labeled in increasing order of representative.
pub fn quotient_brace(b: &SkewBrace, ideal: &ElementSet) -> Result<Quotient> {
    IdealHandle::checked(b, ideal.clone())?;
    let n = b.order();
    let mut label = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if label[x] != usize::MAX {
            continue;
        }
        let k = reps.len();
        reps.push(x);
        for i in ideal.iter() {
            label[b.add(x, i)] = k;
        }
    }
    let m = reps.len();
    let table = |op: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
        let mut t = Vec::with_capacity(m * m);
        for &x in &reps {
            for &y in &reps {
                t.push(label[op(x, y)]);
            }
        }
        t
    };
    let add = FiniteGroup::from_flat(m, table(&|x, y| b.add(x, y)))?;
    let mul = FiniteGroup::from_flat(m, table(&|x, y| b.mul(x, y)))?;
    let q = SkewBrace::new(add, mul)?;
    let projection = BraceMap::between(b, &q, label);
    if !projection.is_homomorphism() {
        return Err(Error::Inconsistent("quotient projection is not a homomorphism".into()));
    }
    Ok(Quotient { brace: q, projection, representatives: reps })
}

/// Ideals found by filtering every additive subgroup; for cross-checking.
pub fn brute_force_ideals(b: &SkewBrace, bound: usize) -> Result<Vec<ElementSet>> {
    let mut out: Vec<ElementSet> =
        b.add_group().all_subgroups(bound)?.into_iter().filter(|s| is_ideal(b, s)).collect();
    out.sort_by(|a, b| a.size_lex_cmp(b));
    Ok(out)
}

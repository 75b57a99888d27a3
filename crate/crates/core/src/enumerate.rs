//! Skew braces with a given additive group, as regular subgroups of the holomorph.
//!
//! A brace on `(A, +)` is the same thing as a map `λ: A -> Aut(A)` such that
//! `H = {(a, λ_a)}` is a subgroup of `Hol(A)`, with
//! `(a, φ)(b, ψ) = (a + φ(b), φψ)`; then `a ∘ b = a + λ_a(b)`.
//!
//! The search repeatedly takes the smallest `a` not yet in `H`, chooses
//! `λ_a`, and closes `H` under products. Two braces on `A` are isomorphic
//! exactly when their λ-tables are conjugate by some `ψ ∈ Aut(A)`,
//! `λ'_{ψ(a)} = ψ λ_a ψ⁻¹`. Branches are pruned with the stabilizer of the
//! current generators and the results are deduplicated by a canonical
//! λ-table, the lexicographically least conjugate.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::brace::SkewBrace;
use crate::construct::inner_mult_automorphism;
use crate::error::{Error, Result};
use crate::group::catalog::{abelian_groups_of_order, groups_of_order, symmetric, CatalogEntry};
use crate::group::{group_automorphisms, group_isomorphism, FiniteGroup};
use crate::ideal::{ideal_sets, is_simple};
use crate::set::ElementSet;

/// Default bound on `|A| · |Aut(A)|` for the labeled search.
pub const DEFAULT_HOLOMORPH_BOUND: usize = 1 << 20;

/// Bound on `|Aut(A)|` for the orbit-reduced search.
pub const AUTOMORPHISM_GROUP_BOUND: usize = 1 << 16;

const NONE: u32 = u32::MAX;

/// `Aut(A)` with fast composition; automorphisms are identified by the
/// images of the additive generators.
struct AutTable {
    n: usize,
    maps: Vec<Vec<usize>>,
    inverse: Vec<u32>,
    gens: Vec<usize>,
    dense: Option<Vec<u32>>,
    sparse: HashMap<usize, u32>,
}

impl AutTable {
    fn new(a: &FiniteGroup) -> Result<Self> {
        let n = a.order();
        let maps = group_automorphisms(a, n.max(1))?;
        if maps.len() > AUTOMORPHISM_GROUP_BOUND {
            return Err(Error::BoundExceeded {
                what: "automorphism group for enumeration",
                needed: maps.len(),
                bound: AUTOMORPHISM_GROUP_BOUND,
            });
        }
        let gens = a.generators().to_vec();
        let space = gens.iter().try_fold(1usize, |acc, _| acc.checked_mul(n)).filter(|&s| s <= 1 << 24);
        let mut table =
            AutTable { n, maps, inverse: Vec::new(), gens, dense: space.map(|s| vec![NONE; s]), sparse: HashMap::new() };
        for i in 0..table.maps.len() {
            let key = table.key_of(|g| table.maps[i][g]);
            match &mut table.dense {
                Some(d) => d[key] = i as u32,
                None => {
                    table.sparse.insert(key, i as u32);
                }
            }
        }
        table.inverse = (0..table.maps.len())
            .map(|i| {
                let mut inv = vec![0; n];
                for (x, &y) in table.maps[i].iter().enumerate() {
                    inv[y] = x;
                }
                table.index(|g| inv[g])
            })
            .collect();
        Ok(table)
    }

    fn len(&self) -> usize {
        self.maps.len()
    }

    fn key_of(&self, image: impl Fn(usize) -> usize) -> usize {
        self.gens.iter().rev().fold(0, |acc, &g| acc * self.n + image(g))
    }

    fn index(&self, image: impl Fn(usize) -> usize) -> u32 {
        let key = self.key_of(image);
        match &self.dense {
            Some(d) => d[key],
            None => self.sparse[&key],
        }
    }

    #[inline]
    fn apply(&self, f: u32, x: usize) -> usize {
        self.maps[f as usize][x]
    }

    /// `f ∘ g`.
    #[inline]
    fn compose(&self, f: u32, g: u32) -> u32 {
        let (f, g) = (&self.maps[f as usize], &self.maps[g as usize]);
        self.index(|x| f[g[x]])
    }

    /// `ψ φ ψ⁻¹`.
    #[inline]
    fn conjugate(&self, psi: u32, phi: u32) -> u32 {
        let (p, f, q) = (&self.maps[psi as usize], &self.maps[phi as usize], &self.maps[self.inverse[psi as usize] as usize]);
        self.index(|x| p[f[q[x]]])
    }

    /// Lexicographically least conjugate of a λ-table.
    fn canonical(&self, table: &[u32]) -> Vec<u32> {
        let n = self.n;
        let mut best: Vec<u32> = table.to_vec();
        let mut cand = vec![0u32; n];
        for psi in 0..self.len() as u32 {
            let inv = &self.maps[self.inverse[psi as usize] as usize];
            let mut less = false;
            let mut aborted = false;
            for y in 0..n {
                let v = self.conjugate(psi, table[inv[y]]);
                cand[y] = v;
                if !less {
                    if v > best[y] {
                        aborted = true;
                        break;
                    }
                    if v < best[y] {
                        less = true;
                    }
                }
            }
            if !aborted && less {
                best.copy_from_slice(&cand);
            }
        }
        best
    }
}

/// Search state for one additive group.
#[derive(Clone)]
struct Search<'a> {
    a: &'a FiniteGroup,
    auts: &'a AutTable,
    admissible: &'a [Vec<u32>],
    lam: Vec<u32>,
    elements: Vec<usize>,
    gens: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(a: &'a FiniteGroup, auts: &'a AutTable, admissible: &'a [Vec<u32>]) -> Self {
        let mut lam = vec![NONE; a.order()];
        lam[0] = 0;
        Search { a, auts, admissible, lam, elements: vec![0], gens: Vec::new() }
    }

    /// Adds the generator `(x, phi)` and closes; `None` on conflict.
    fn extend(&mut self, x: usize, phi: u32) -> Option<usize> {
        let old = self.elements.len();
        self.gens.push(x);
        let mut i = 0;
        while i < self.elements.len() {
            let e = self.elements[i];
            let le = self.lam[e];
            let range = if i < old { self.gens.len() - 1..self.gens.len() } else { 0..self.gens.len() };
            for j in range {
                let g = self.gens[j];
                let lg = if j == self.gens.len() - 1 { phi } else { self.lam[g] };
                let c = self.a.op(e, self.auts.apply(le, g));
                let psi = self.auts.compose(le, lg);
                if self.lam[c] == NONE {
                    self.lam[c] = psi;
                    self.elements.push(c);
                } else if self.lam[c] != psi {
                    self.rollback(old);
                    return None;
                }
            }
            i += 1;
        }
        Some(old)
    }

    fn rollback(&mut self, old: usize) {
        for &e in &self.elements[old..] {
            self.lam[e] = NONE;
        }
        self.elements.truncate(old);
        self.gens.pop();
    }

    fn next_uncovered(&self) -> Option<usize> {
        self.lam.iter().position(|&l| l == NONE)
    }

    /// Candidate choices for `λ_x` under the symmetry group `sym`, with the
    /// stabilizer to pass to each child.
    fn branches(&self, x: usize, sym: &[u32]) -> Vec<(u32, Vec<u32>)> {
        let auts = self.auts;
        let fix: Vec<u32> = sym.iter().copied().filter(|&psi| auts.apply(psi, x) == x).collect();
        let mut seen: HashSet<u32> = HashSet::new();
        let mut out = Vec::new();
        for &phi in &self.admissible[x] {
            if seen.contains(&phi) {
                continue;
            }
            let mut centralizer = Vec::new();
            for &psi in &fix {
                let c = auts.conjugate(psi, phi);
                seen.insert(c);
                if c == phi {
                    centralizer.push(psi);
                }
            }
            out.push((phi, centralizer));
        }
        out
    }

    fn run(&mut self, sym: &[u32], reduce: bool, out: &mut Vec<Vec<u32>>) {
        let Some(x) = self.next_uncovered() else {
            out.push(self.lam.clone());
            return;
        };
        let branches = if reduce {
            self.branches(x, sym)
        } else {
            self.admissible[x].iter().map(|&phi| (phi, Vec::new())).collect()
        };
        for (phi, child) in branches {
            if let Some(old) = self.extend(x, phi) {
                self.run(&child, reduce, out);
                self.rollback(old);
            }
        }
    }
}

/// `φ` is admissible for `a` when the cyclic group `⟨(a, φ)⟩` meets
/// `{0} × Aut(A)` only in the identity.
fn admissible_table(a: &FiniteGroup, auts: &AutTable) -> Vec<Vec<u32>> {
    (0..a.order())
        .into_par_iter()
        .map(|x| {
            if x == 0 {
                return vec![0];
            }
            (0..auts.len() as u32)
                .filter(|&phi| {
                    let (mut c, mut f) = (x, phi);
                    while c != 0 {
                        c = a.op(x, auts.apply(phi, c));
                        f = auts.compose(phi, f);
                    }
                    f == 0
                })
                .collect()
        })
        .collect()
}

fn brace_from_lambda(a: &FiniteGroup, auts: &AutTable, lam: &[u32]) -> Result<SkewBrace> {
    let n = a.order();
    let mut mul = Vec::with_capacity(n * n);
    for (x, &l) in lam.iter().enumerate().take(n) {
        for y in 0..n {
            mul.push(a.op(x, auts.apply(l, y)));
        }
    }
    SkewBrace::new(a.clone(), FiniteGroup::from_flat(n, mul)?)
}

/// One brace per regular subgroup of `Hol(A)`, without isomorphism reduction.
pub fn regular_subgroups(a: &FiniteGroup, bound: usize) -> Result<Vec<SkewBrace>> {
    let auts = AutTable::new(a)?;
    let size = a.order() * auts.len();
    if size > bound {
        return Err(Error::BoundExceeded { what: "holomorph", needed: size, bound });
    }
    let admissible = admissible_table(a, &auts);
    let mut tables = Vec::new();
    Search::new(a, &auts, &admissible).run(&[], false, &mut tables);
    tables.iter().map(|t| brace_from_lambda(a, &auts, t)).collect()
}

/// Braces on one additive group up to isomorphism, plus the number of leaves visited.
fn classes_on(a: &FiniteGroup) -> Result<(Vec<SkewBrace>, usize)> {
    let auts = AutTable::new(a)?;
    let admissible = admissible_table(a, &auts);
    let all: Vec<u32> = (0..auts.len() as u32).collect();
    let root = Search::new(a, &auts, &admissible);
    let results: Vec<(Vec<Vec<u32>>, usize)> = match root.next_uncovered() {
        None => vec![(vec![auts.canonical(&root.lam)], 1)],
        Some(x) => root
            .branches(x, &all)
            .into_par_iter()
            .map(|(phi, child)| {
                let mut s = root.clone();
                let mut leaves = Vec::new();
                if s.extend(x, phi).is_some() {
                    s.run(&child, true, &mut leaves);
                }
                let raw = leaves.len();
                (leaves.iter().map(|t| auts.canonical(t)).collect(), raw)
            })
            .collect(),
    };
    let raw = results.iter().map(|r| r.1).sum();
    let mut canon: Vec<Vec<u32>> = results.into_iter().flat_map(|r| r.0).collect::<HashSet<_>>().into_iter().collect();
    canon.sort();
    let braces = canon.iter().map(|t| brace_from_lambda(a, &auts, t)).collect::<Result<Vec<_>>>()?;
    Ok((braces, raw))
}

/// Which additive groups to enumerate over.
#[derive(Clone, Debug, Default)]
pub enum AdditiveFilter {
    #[default]
    All,
    Abelian,
    Group { name: String, group: FiniteGroup },
}

/// Isomorphism classes of braces of one order.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub order: usize,
    pub additive_groups: Vec<CatalogEntry>,
    pub braces: Vec<SkewBrace>,
    /// `additive_of[i]` indexes `additive_groups` for `braces[i]`.
    pub additive_of: Vec<usize>,
    pub count: usize,
    /// Search leaves before isomorphism dedup.
    pub raw_count: usize,
}

/// Every brace of order `n` up to isomorphism, for the additive groups
/// selected by `filter`. Braces are sorted by additive group (catalog
/// order), then by their tables.
pub fn enumerate_braces(n: usize, filter: &AdditiveFilter) -> Result<EnumerationResult> {
    let groups = match filter {
        AdditiveFilter::All => groups_of_order(n)?,
        AdditiveFilter::Abelian => abelian_groups_of_order(n)?,
        AdditiveFilter::Group { name, group } => {
            if group.order() != n {
                return Err(Error::BadParams(format!("group {name} has order {}, not {n}", group.order())));
            }
            vec![CatalogEntry { name: name.clone(), group: group.clone() }]
        }
    };
    let per_group: Vec<(Vec<SkewBrace>, usize)> =
        groups.iter().map(|e| classes_on(&e.group)).collect::<Result<_>>()?;
    let mut braces = Vec::new();
    let mut additive_of = Vec::new();
    let mut raw_count = 0;
    for (i, (list, raw)) in per_group.into_iter().enumerate() {
        raw_count += raw;
        additive_of.extend(std::iter::repeat_n(i, list.len()));
        braces.extend(list);
    }
    Ok(EnumerationResult { order: n, additive_groups: groups, count: braces.len(), braces, additive_of, raw_count })
}

/// The simple brace of abelian type with multiplicative group `S4`, and the
/// multiplicative involution `b` whose inner automorphism is a brace automorphism.
#[derive(Clone, Debug)]
pub struct SimpleS4 {
    pub brace: SkewBrace,
    pub b: usize,
    pub additive_group: String,
    /// Isomorphism classes satisfying the search conditions.
    pub matches: usize,
}

pub fn find_simple_abelian_s4() -> Result<SimpleS4> {
    let s4 = symmetric(4)?;
    let result = enumerate_braces(24, &AdditiveFilter::Abelian)?;
    let mut found: Vec<(usize, SkewBrace)> = result
        .braces
        .iter()
        .zip(&result.additive_of)
        .filter(|(b, _)| is_simple(b) && group_isomorphism(b.mul_group(), &s4).is_some())
        .map(|(b, &g)| (g, b.clone()))
        .collect();
    let matches = found.len();
    if matches == 0 {
        return Err(Error::SearchFailed("no simple brace of abelian type with multiplicative group S4".into()));
    }
    let (g, brace) = found.swap_remove(0);
    let involutions: Vec<usize> = (1..24)
        .filter(|&x| brace.mul_group().element_order(x) == 2)
        .filter(|&x| inner_mult_automorphism(&brace, x).preserves_add())
        .collect();
    match involutions.as_slice() {
        [b] => Ok(SimpleS4 { brace, b: *b, additive_group: result.additive_groups[g].name.clone(), matches }),
        [] => Err(Error::SearchFailed("no involution b with i_b preserving addition".into())),
        _ => Err(Error::Inconsistent(format!("{} involutions b with i_b preserving addition", involutions.len()))),
    }
}

/// Isomorphism-invariant data hashed by [`fingerprint`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub order: usize,
    /// Sorted `(additive order, multiplicative order, fixed points of λ_a)`.
    pub element_data: Vec<(usize, usize, usize)>,
    /// Ideal sizes in increasing order.
    pub ideal_sizes: Vec<usize>,
    /// `|B|, |B*B|, |B*(B*B)|, ...` until it stabilizes.
    pub left_series: Vec<usize>,
    /// `|B|, |B*B|, |(B*B)*B|, ...` until it stabilizes.
    pub right_series: Vec<usize>,
}

pub fn invariants(b: &SkewBrace) -> Invariants {
    let n = b.order();
    let mut element_data: Vec<(usize, usize, usize)> = (0..n)
        .map(|a| {
            let fixed = (0..n).filter(|&x| b.lambda(a, x) == x).count();
            (b.add_group().element_order(a), b.mul_group().element_order(a), fixed)
        })
        .collect();
    element_data.sort_unstable();
    let ideal_sizes = ideal_sets(b).iter().map(ElementSet::len).collect();
    let series = |left: bool| {
        let full = b.full_set();
        let mut cur = full.clone();
        let mut sizes = vec![cur.len()];
        loop {
            let next = if left { b.star_subgroup(&full, &cur) } else { b.star_subgroup(&cur, &full) };
            if next == cur {
                break;
            }
            sizes.push(next.len());
            cur = next;
        }
        sizes
    };
    Invariants { order: n, element_data, ideal_sizes, left_series: series(true), right_series: series(false) }
}

/// SHA-256 hex digest of the invariants, hashed as little-endian `u64`s:
/// the order; the number of element triples followed by the triples; the
/// number of ideals followed by their sizes; then the left and right star
/// series, each as a length followed by the sizes.
pub fn fingerprint(b: &SkewBrace) -> String {
    let inv = invariants(b);
    let mut h = Sha256::new();
    let mut put = |x: usize| h.update((x as u64).to_le_bytes());
    put(inv.order);
    put(inv.element_data.len());
    for &(p, q, r) in &inv.element_data {
        put(p);
        put(q);
        put(r);
    }
    for list in [&inv.ideal_sizes, &inv.left_series, &inv.right_series] {
        put(list.len());
        for &x in list.iter() {
            put(x);
        }
    }
    hex::encode(h.finalize())
}

//! Homomorphism, isomorphism and automorphism search on Cayley tables, and
//! the holomorph.
//!
//! The search assigns images to a generating set of the source (taken from
//! its first table) and extends the partial map along the Cayley graph. A
//! map that is consistent on every edge `x -> x*g` is a homomorphism, so no
//! separate verification is needed for the first table. Additional tables
//! (the multiplicative table of a brace, say) are checked on the partial
//! domain at every node and in full at the leaves.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Largest group order accepted by [`group_automorphisms`] by default.
pub const DEFAULT_AUTOMORPHISM_BOUND: usize = 1000;

const NONE: usize = usize::MAX;

pub(crate) struct MorphismSearch<'a> {
    src: &'a [&'a FiniteGroup],
    dst: &'a [&'a FiniteGroup],
    bijective: bool,
    gens: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    map: Vec<usize>,
    used: Vec<bool>,
    domain: Vec<usize>,
    chosen: Vec<usize>,
    limit: usize,
    found: Vec<Vec<usize>>,
}

impl<'a> MorphismSearch<'a> {
    /// `compatible(x, y)` filters the candidate images `y` of each source generator `x`.
    pub(crate) fn new(
        src: &'a [&'a FiniteGroup],
        dst: &'a [&'a FiniteGroup],
        bijective: bool,
        compatible: impl Fn(usize, usize) -> bool,
    ) -> Self {
        assert_eq!(src.len(), dst.len());
        assert!(!src.is_empty());
        let gens = src[0].generators().to_vec();
        let m = dst[0].order();
        let candidates =
            gens.iter().map(|&g| (0..m).filter(|&c| compatible(g, c)).collect()).collect();
        let mut map = vec![NONE; src[0].order()];
        map[0] = 0;
        let mut used = vec![false; m];
        used[0] = true;
        MorphismSearch {
            src,
            dst,
            bijective,
            gens,
            candidates,
            map,
            used,
            domain: vec![0],
            chosen: Vec::new(),
            limit: usize::MAX,
            found: Vec::new(),
        }
    }

    pub(crate) fn limit(mut self, limit: usize) -> Self {
        self.limit = limit;
        self
    }

    pub(crate) fn run(mut self) -> Vec<Vec<usize>> {
        if self.bijective && self.src.iter().zip(self.dst).any(|(s, d)| s.order() != d.order()) {
            return Vec::new();
        }
        self.recurse(0);
        self.found
    }

    fn recurse(&mut self, level: usize) {
        if self.found.len() >= self.limit {
            return;
        }
        if level == self.gens.len() {
            if self.full_check() {
                self.found.push(self.map.clone());
            }
            return;
        }
        for ci in 0..self.candidates[level].len() {
            let c = self.candidates[level][ci];
            self.chosen.push(c);
            if let Some(old) = self.extend(level) {
                if self.partial_check(old) {
                    self.recurse(level + 1);
                }
                self.rollback(old);
            }
            self.chosen.pop();
            if self.found.len() >= self.limit {
                return;
            }
        }
    }

    /// Extends along generator `level`; returns the previous domain length, or
    /// `None` (after rolling back) on a conflict.
    fn extend(&mut self, level: usize) -> Option<usize> {
        let s0 = self.src[0];
        let d0 = self.dst[0];
        let old = self.domain.len();
        let mut k = 0;
        while k < self.domain.len() {
            let x = self.domain[k];
            let range = if k < old { level..level + 1 } else { 0..level + 1 };
            for j in range {
                let y = s0.op(x, self.gens[j]);
                let img = d0.op(self.map[x], self.chosen[j]);
                if self.map[y] == NONE {
                    if self.bijective && self.used[img] {
                        self.rollback(old);
                        return None;
                    }
                    self.map[y] = img;
                    self.used[img] = true;
                    self.domain.push(y);
                } else if self.map[y] != img {
                    self.rollback(old);
                    return None;
                }
            }
            k += 1;
        }
        Some(old)
    }

    fn rollback(&mut self, old: usize) {
        for &y in &self.domain[old..] {
            self.used[self.map[y]] = false;
            self.map[y] = NONE;
        }
        self.domain.truncate(old);
        // 0 always stays mapped and used
        self.used[0] = true;
    }

    fn partial_check(&self, old: usize) -> bool {
        for t in 1..self.src.len() {
            let (s, d) = (self.src[t], self.dst[t]);
            for &x in &self.domain {
                for &y in &self.domain[old..] {
                    for (a, b) in [(x, y), (y, x)] {
                        let z = s.op(a, b);
                        if self.map[z] != NONE && self.map[z] != d.op(self.map[a], self.map[b]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn full_check(&self) -> bool {
        let n = self.src[0].order();
        for t in 1..self.src.len() {
            let (s, d) = (self.src[t], self.dst[t]);
            for a in 0..n {
                for b in 0..n {
                    if self.map[s.op(a, b)] != d.op(self.map[a], self.map[b]) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Every automorphism of `g`, sorted lexicographically by mapping array.
pub fn group_automorphisms(g: &FiniteGroup, bound: usize) -> Result<Vec<Vec<usize>>> {
    if g.order() > bound {
        return Err(Error::BoundExceeded { what: "automorphism search", needed: g.order(), bound });
    }
    let orders = g.element_orders();
    let src = [g];
    let mut auts = MorphismSearch::new(&src, &src, true, |x, y| orders[x] == orders[y]).run();
    auts.sort();
    Ok(auts)
}

/// An isomorphism `g -> h` as a mapping array, if one exists.
pub fn group_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let (og, oh) = (g.element_orders(), h.element_orders());
    let mut sg = og.to_vec();
    let mut sh = oh.to_vec();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    let (src, dst) = ([g], [h]);
    MorphismSearch::new(&src, &dst, true, |x, y| og[x] == oh[y]).limit(1).run().pop()
}

/// Every homomorphism `g -> h`, sorted lexicographically; fails when more
/// than `limit` exist.
pub fn group_homomorphisms(g: &FiniteGroup, h: &FiniteGroup, limit: usize) -> Result<Vec<Vec<usize>>> {
    let (og, oh) = (g.element_orders(), h.element_orders());
    let (src, dst) = ([g], [h]);
    let mut homs =
        MorphismSearch::new(&src, &dst, false, |x, y| og[x] % oh[y] == 0).limit(limit + 1).run();
    if homs.len() > limit {
        return Err(Error::BoundExceeded { what: "homomorphism enumeration", needed: homs.len(), bound: limit });
    }
    homs.sort();
    Ok(homs)
}

/// `G ⋊ Aut(G)` on pairs `(g, φ)` with `(g, φ)(h, ψ) = (g·φ(h), φψ)`.
#[derive(Clone, Debug)]
pub struct Holomorph {
    pub group: FiniteGroup,
    base_order: usize,
    automorphisms: Vec<Vec<usize>>,
}

impl Holomorph {
    /// Index of the pair `(g, automorphisms[aut])`.
    pub fn encode(&self, g: usize, aut: usize) -> usize {
        aut * self.base_order + g
    }

    /// The pair `(g, aut index)` behind a holomorph element.
    pub fn decode(&self, x: usize) -> (usize, usize) {
        (x % self.base_order, x / self.base_order)
    }

    pub fn automorphisms(&self) -> &[Vec<usize>] {
        &self.automorphisms
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }
}

/// Builds the holomorph as an explicit table; fails when its order exceeds `bound`.
pub fn holomorph(g: &FiniteGroup, bound: usize) -> Result<Holomorph> {
    let n = g.order();
    let auts = group_automorphisms(g, bound.max(DEFAULT_AUTOMORPHISM_BOUND))?;
    let total = n * auts.len();
    if total > bound {
        return Err(Error::BoundExceeded { what: "holomorph", needed: total, bound });
    }
    let index: HashMap<&[usize], usize> =
        auts.iter().enumerate().map(|(i, a)| (a.as_slice(), i)).collect();
    let k = auts.len();
    let mut compose = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            let c: Vec<usize> = auts[j].iter().map(|&x| auts[i][x]).collect();
            compose[i * k + j] = index[c.as_slice()];
        }
    }
    let mut table = Vec::with_capacity(total * total);
    for x in 0..total {
        let (g1, p1) = (x % n, x / n);
        for y in 0..total {
            let (g2, p2) = (y % n, y / n);
            table.push(compose[p1 * k + p2] * n + g.op(g1, auts[p1][g2]));
        }
    }
    let group = FiniteGroup::from_flat(total, table)?;
    Ok(Holomorph { group, base_order: n, automorphisms: auts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::*;

    fn brute_force_automorphisms(g: &FiniteGroup) -> usize {
        permutations(g.order())
            .into_iter()
            .filter(|p| p[0] == 0)
            .filter(|p| {
                (0..g.order()).all(|a| (0..g.order()).all(|b| p[g.op(a, b)] == g.op(p[a], p[b])))
            })
            .count()
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(group_automorphisms(&cyclic(1), 10).unwrap().len(), 1);
        let klein = abelian(&[2, 2]).unwrap();
        assert_eq!(brute_force_automorphisms(&klein), 6);
        assert_eq!(group_automorphisms(&klein, 10).unwrap().len(), 6);
        let s3 = symmetric(3).unwrap();
        assert_eq!(group_automorphisms(&s3, 10).unwrap().len(), brute_force_automorphisms(&s3));
        let d8 = dihedral(8).unwrap();
        assert_eq!(group_automorphisms(&d8, 10).unwrap().len(), brute_force_automorphisms(&d8));
    }

    #[test]
    fn s4_has_24_automorphisms() {
        let s4 = symmetric(4).unwrap();
        let auts = group_automorphisms(&s4, 100).unwrap();
        assert_eq!(auts.len(), 24);
        // cross-check: every automorphism of S4 is inner, and conjugation by
        // distinct elements gives distinct maps since the center is trivial
        let mut inner: Vec<Vec<usize>> =
            (0..24).map(|g| (0..24).map(|x| s4.conjugate(g, x)).collect()).collect();
        inner.sort();
        assert_eq!(auts, inner);
    }

    #[test]
    fn automorphisms_preserve_table_and_are_sorted() {
        let g = dicyclic(12).unwrap();
        let auts = group_automorphisms(&g, 100).unwrap();
        assert!(auts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(auts[0], (0..12).collect::<Vec<_>>());
        for phi in &auts {
            for a in 0..12 {
                for b in 0..12 {
                    assert_eq!(phi[g.op(a, b)], g.op(phi[a], phi[b]));
                }
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(
            group_automorphisms(&cyclic(30), 20),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn holomorph_orders() {
        assert_eq!(holomorph(&cyclic(1), 100).unwrap().group.order(), 1);
        assert_eq!(holomorph(&cyclic(5), 100).unwrap().group.order(), 20);
        let h = holomorph(&abelian(&[2, 2]).unwrap(), 100).unwrap();
        assert_eq!(h.group.order(), 24);
        let (g, a) = h.decode(h.encode(3, 5));
        assert_eq!((g, a), (3, 5));
        // Hol(C2 x C2) is isomorphic to S4
        assert!(group_isomorphism(&h.group, &symmetric(4).unwrap()).is_some());
    }

    #[test]
    fn isomorphism_detection() {
        let c6 = cyclic(6);
        let c2c3 = abelian(&[2, 3]).unwrap();
        let phi = group_isomorphism(&c2c3, &c6).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(phi[c2c3.op(a, b)], c6.op(phi[a], phi[b]));
            }
        }
        assert!(group_isomorphism(&c6, &symmetric(3).unwrap()).is_none());
        assert!(group_isomorphism(&dihedral(8).unwrap(), &dicyclic(8).unwrap()).is_none());
    }

    #[test]
    fn homomorphism_counts() {
        // Hom(C4, C2) has 2 elements, Hom(C2, S3) has 4.
        assert_eq!(group_homomorphisms(&cyclic(4), &cyclic(2), 100).unwrap().len(), 2);
        assert_eq!(group_homomorphisms(&cyclic(2), &symmetric(3).unwrap(), 100).unwrap().len(), 4);
    }

    #[test]
    fn catalog_groups_are_pairwise_non_isomorphic() {
        for &n in &[8, 12, 16, 18, 20, 24] {
            let groups = groups_of_order(n).unwrap();
            for i in 0..groups.len() {
                for j in i + 1..groups.len() {
                    assert!(
                        group_isomorphism(&groups[i].group, &groups[j].group).is_none(),
                        "{} ≅ {}",
                        groups[i].name,
                        groups[j].name
                    );
                }
            }
        }
    }
}

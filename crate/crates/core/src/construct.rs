//! Semidirect products, brace automorphisms and isomorphisms.

use std::collections::{HashMap, HashSet};

use crate::brace::{BraceMap, SkewBrace};
use crate::error::{Error, Result};
use crate::group::morphism::MorphismSearch;
use crate::group::{group_homomorphisms, FiniteGroup, DEFAULT_AUTOMORPHISM_BOUND};
use crate::ideal::{ideal_sets, is_ideal, IdealHandle};
use crate::set::ElementSet;

/// Largest automorphism group for which [`enumerate_actions`] builds a
/// composition table.
pub const ACTION_GROUP_BOUND: usize = 4096;

/// Braces `B1`, `B2` and an action of `(B2, ∘)` on `B1` by brace automorphisms.
#[derive(Clone, Debug)]
pub struct SemidirectSpec {
    pub b1: SkewBrace,
    pub b2: SkewBrace,
    pub action: Vec<BraceMap>,
}

/// A semidirect product with the copies of its factors.
///
/// The pair `(a1, a2)` is the element `a2 * |B1| + a1`.
#[derive(Clone, Debug)]
pub struct SemidirectProduct {
    pub brace: SkewBrace,
    /// `B1 × {0}`.
    pub b1_copy: ElementSet,
    /// `{0} × B2`.
    pub b2_copy: ElementSet,
    n1: usize,
}

impl SemidirectProduct {
    pub fn encode(&self, a1: usize, a2: usize) -> usize {
        a2 * self.n1 + a1
    }

    pub fn decode(&self, x: usize) -> (usize, usize) {
        (x % self.n1, x / self.n1)
    }
}

impl SemidirectSpec {
    /// Builds and checks a spec from raw mapping arrays.
    pub fn new(b1: SkewBrace, b2: SkewBrace, action: Vec<Vec<usize>>) -> Result<Self> {
        if action.len() != b2.order() {
            return Err(Error::NotAHomomorphism(format!(
                "action has {} entries, expected {}",
                action.len(),
                b2.order()
            )));
        }
        for (a, m) in action.iter().enumerate() {
            if m.len() != b1.order() || m.iter().any(|&y| y >= b1.order()) {
                return Err(Error::NotAnAutomorphism(format!("action[{a}] is not a map of B1")));
            }
        }
        let action = action.into_iter().map(|m| BraceMap::on(&b1, m)).collect();
        let spec = SemidirectSpec { b1, b2, action };
        spec.validate()?;
        Ok(spec)
    }

    /// The action that sends every element to the identity.
    pub fn trivial(b1: SkewBrace, b2: SkewBrace) -> Self {
        let id = BraceMap::identity(&b1);
        let action = vec![id; b2.order()];
        SemidirectSpec { b1, b2, action }
    }

    pub fn validate(&self) -> Result<()> {
        if self.action.len() != self.b2.order() {
            return Err(Error::NotAHomomorphism("action length differs from |B2|".into()));
        }
        for (a, m) in self.action.iter().enumerate() {
            if m.mapping().len() != self.b1.order() || !m.is_automorphism() {
                return Err(Error::NotAnAutomorphism(format!("action[{a}] is not a brace automorphism of B1")));
            }
        }
        if !self.action[0].is_identity() {
            return Err(Error::NotAHomomorphism("action[0] is not the identity".into()));
        }
        let mul = self.b2.mul_group();
        for &g in mul.generators() {
            for a in 0..self.b2.order() {
                let lhs = self.action[mul.op(a, g)].mapping();
                let ok = (0..self.b1.order()).all(|x| lhs[x] == self.action[a].apply(self.action[g].apply(x)));
                if !ok {
                    return Err(Error::NotAHomomorphism(format!("action[{a} ∘ {g}] != action[{a}] action[{g}]")));
                }
            }
        }
        Ok(())
    }

    pub fn is_trivial_action(&self) -> bool {
        self.action.iter().all(BraceMap::is_identity)
    }

    /// `Ker(α)` as a subset of `B2`.
    pub fn kernel(&self) -> ElementSet {
        ElementSet::new(
            self.b2.order(),
            self.action.iter().enumerate().filter(|(_, m)| m.is_identity()).map(|(a, _)| a),
        )
    }

    /// Raw mapping arrays of the action.
    pub fn action_mappings(&self) -> Vec<Vec<usize>> {
        self.action.iter().map(|m| m.mapping().to_vec()).collect()
    }
}

/// `B1 ⋊_α B2`: `(a1,a2)+(b1,b2) = (a1+b1, a2+b2)` and
/// `(a1,a2)∘(b1,b2) = (a1∘α_{a2}(b1), a2∘b2)`.
pub fn semidirect_product(spec: &SemidirectSpec) -> Result<SemidirectProduct> {
    spec.validate()?;
    let (b1, b2) = (&spec.b1, &spec.b2);
    let (n1, n2) = (b1.order(), b2.order());
    let n = n1 * n2;
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a1, a2) = (x % n1, x / n1);
        let alpha = spec.action[a2].mapping();
        for y in 0..n {
            let (c1, c2) = (y % n1, y / n1);
            add.push(b2.add(a2, c2) * n1 + b1.add(a1, c1));
            mul.push(b2.mul(a2, c2) * n1 + b1.mul(a1, alpha[c1]));
        }
    }
    let brace = SkewBrace::new(FiniteGroup::from_flat(n, add)?, FiniteGroup::from_flat(n, mul)?)?;
    let b1_copy = ElementSet::new(n, 0..n1);
    let b2_copy = ElementSet::new(n, (0..n2).map(|a2| a2 * n1));
    Ok(SemidirectProduct { brace, b1_copy, b2_copy, n1 })
}

/// Outcome of the projection checks for one ideal of a semidirect product.
#[derive(Clone, Debug)]
pub struct ProjectionReport {
    /// `π2(I)` with its ideal flags in `B2`.
    pub pi2: IdealHandle,
    /// `π2(I)` is an ideal of `B2`.
    pub projection_is_ideal: bool,
    /// For `J = π2(I)` and `J = {a2 : (0,a2) ∈ I}`, whenever `J ⊆ Ker(α)`:
    /// whether `{0} × J` is an ideal of the product.
    pub kernel_lifts: Vec<(ElementSet, bool)>,
    /// `J = {a1 : (a1,0) ∈ I}`: whether `J` is an α-invariant ideal of `B1`
    /// and `J × {0}` an ideal of the product.
    pub invariant_lift: (ElementSet, bool),
}

impl ProjectionReport {
    pub fn holds(&self) -> bool {
        self.projection_is_ideal && self.kernel_lifts.iter().all(|(_, ok)| *ok) && self.invariant_lift.1
    }
}

pub fn projection_checks(
    spec: &SemidirectSpec,
    product: &SemidirectProduct,
    ideal: &ElementSet,
) -> Result<ProjectionReport> {
    let b = &product.brace;
    if !is_ideal(b, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let (n1, n2) = (spec.b1.order(), spec.b2.order());
    let pi2 = ElementSet::new(n2, ideal.iter().map(|x| x / n1));
    let pi2_handle = IdealHandle::new(&spec.b2, pi2.clone());
    let kernel = spec.kernel();
    let section2 = ElementSet::new(n2, ideal.iter().filter(|x| x % n1 == 0).map(|x| x / n1));
    let mut kernel_lifts = Vec::new();
    for j in [pi2.clone(), section2] {
        if j.is_subset(&kernel) && is_ideal(&spec.b2, &j) && !kernel_lifts.iter().any(|(s, _)| s == &j) {
            let lifted = ElementSet::new(b.order(), j.iter().map(|a2| a2 * n1));
            let ok = is_ideal(b, &lifted);
            kernel_lifts.push((j, ok));
        }
    }
    let section1 = ElementSet::new(n1, ideal.iter().filter(|&x| x < n1));
    let invariant = is_ideal(&spec.b1, &section1)
        && spec.action.iter().all(|m| section1.image(m.mapping()) == section1);
    let lifted1 = ElementSet::new(b.order(), section1.iter());
    let invariant_ok = invariant && is_ideal(b, &lifted1);
    Ok(ProjectionReport {
        projection_is_ideal: pi2_handle.is_ideal,
        pi2: pi2_handle,
        kernel_lifts,
        invariant_lift: (section1, invariant_ok),
    })
}

/// Every automorphism of `(B, +, ∘)`, sorted by mapping; the identity comes first.
pub fn brace_automorphisms(b: &SkewBrace, bound: usize) -> Result<Vec<BraceMap>> {
    if b.order() > bound {
        return Err(Error::BoundExceeded { what: "brace automorphism search", needed: b.order(), bound });
    }
    let pairs = b.order_pairs();
    let tables = [b.add_group(), b.mul_group()];
    let mut maps = MorphismSearch::new(&tables, &tables, true, |x, y| pairs[x] == pairs[y]).run();
    maps.sort();
    check_composition_closed(&maps)?;
    Ok(maps.into_iter().map(|m| BraceMap::on(b, m)).collect())
}

fn check_composition_closed(maps: &[Vec<usize>]) -> Result<()> {
    let set: HashSet<&[usize]> = maps.iter().map(|m| m.as_slice()).collect();
    let n = maps.first().map_or(0, Vec::len);
    // all pairs when affordable, else every map against the first few
    let right = if maps.len() * maps.len() * n <= 50_000_000 { maps.len() } else { maps.len().min(8) };
    for f in maps {
        for g in &maps[..right] {
            let c: Vec<usize> = g.iter().map(|&x| f[x]).collect();
            if !set.contains(c.as_slice()) {
                return Err(Error::Inconsistent("automorphisms are not closed under composition".into()));
            }
        }
    }
    Ok(())
}

/// `i_g(h) = g⁻ ∘ h ∘ g`.
pub fn inner_mult_automorphism(b: &SkewBrace, g: usize) -> BraceMap {
    let gi = b.mul_inv(g);
    let mapping = (0..b.order()).map(|h| b.mul(b.mul(gi, h), g)).collect();
    BraceMap::on(b, mapping)
}

/// The action of `(B2, ∘)` on `B1` that is trivial on the unique index-2
/// subgroup `K` of `(B2, ∘)` and sends the other coset to `tau`.
///
/// `K` is the subgroup generated by squares: a group has a unique subgroup
/// of index 2 exactly when that subgroup has index 2, and then it is `K`.
pub fn build_sign_action(b1: &SkewBrace, b2: &SkewBrace, tau: &BraceMap) -> Result<SemidirectSpec> {
    let tau = BraceMap::on(b1, tau.mapping().to_vec());
    if !tau.is_automorphism() || !tau.compose(&tau, b1).is_identity() {
        return Err(Error::TauOrderInvalid);
    }
    let k = b2.mul_group().squares_subgroup();
    if 2 * k.len() != b2.order() {
        return Err(Error::NoIndexTwoSubgroup);
    }
    let id = BraceMap::identity(b1);
    let action = (0..b2.order()).map(|x| if k.contains(x) { id.clone() } else { tau.clone() }).collect();
    let spec = SemidirectSpec { b1: b1.clone(), b2: b2.clone(), action };
    spec.validate()?;
    Ok(spec)
}

/// Cheap isomorphism invariants: sorted order pairs and the ideal size vector.
fn quick_invariants(b: &SkewBrace) -> (Vec<(usize, usize)>, Vec<usize>) {
    let mut pairs = b.order_pairs();
    pairs.sort_unstable();
    let sizes = ideal_sets(b).iter().map(ElementSet::len).collect();
    (pairs, sizes)
}

/// A brace isomorphism `a -> b`, if any.
pub fn are_isomorphic(a: &SkewBrace, b: &SkewBrace, bound: usize) -> Result<Option<BraceMap>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    if a.order() > bound {
        return Err(Error::BoundExceeded { what: "brace isomorphism search", needed: a.order(), bound });
    }
    if a == b {
        return Ok(Some(BraceMap::identity(a)));
    }
    if quick_invariants(a) != quick_invariants(b) {
        return Ok(None);
    }
    let (pa, pb) = (a.order_pairs(), b.order_pairs());
    let src = [a.add_group(), a.mul_group()];
    let dst = [b.add_group(), b.mul_group()];
    let found = MorphismSearch::new(&src, &dst, true, |x, y| pa[x] == pb[y]).limit(1).run().pop();
    Ok(found.map(|m| BraceMap::between(a, b, m)))
}

/// Every action of `(B2, ∘)` on `B1` by brace automorphisms, the trivial one
/// first, then in lexicographic order of the underlying homomorphism.
pub fn enumerate_actions(b1: &SkewBrace, b2: &SkewBrace) -> Result<Vec<SemidirectSpec>> {
    let auts = brace_automorphisms(b1, DEFAULT_AUTOMORPHISM_BOUND)?;
    let k = auts.len();
    if k > ACTION_GROUP_BOUND {
        return Err(Error::BoundExceeded { what: "automorphism group table", needed: k, bound: ACTION_GROUP_BOUND });
    }
    let index: HashMap<&[usize], usize> = auts.iter().enumerate().map(|(i, m)| (m.mapping(), i)).collect();
    let mut table = Vec::with_capacity(k * k);
    for f in &auts {
        for g in &auts {
            let c: Vec<usize> = g.mapping().iter().map(|&x| f.apply(x)).collect();
            table.push(index[c.as_slice()]);
        }
    }
    let aut_group = FiniteGroup::from_flat(k, table)?;
    let homs = group_homomorphisms(b2.mul_group(), &aut_group, 1_000_000)?;
    let specs = homs
        .into_iter()
        .map(|h| SemidirectSpec {
            b1: b1.clone(),
            b2: b2.clone(),
            action: h.into_iter().map(|i| auts[i].clone()).collect(),
        })
        .collect();
    Ok(specs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::catalog::*;
    use crate::group::group_automorphisms;

    #[test]
    fn direct_product_copies_are_ideals() {
        let b1 = SkewBrace::mod_p_squared(2).unwrap();
        let b2 = SkewBrace::opposite(&symmetric(3).unwrap());
        let spec = SemidirectSpec::trivial(b1, b2);
        let p = semidirect_product(&spec).unwrap();
        assert_eq!(p.brace.order(), 24);
        assert!(is_ideal(&p.brace, &p.b1_copy));
        assert!(is_ideal(&p.brace, &p.b2_copy));
        let r = projection_checks(&spec, &p, &p.b2_copy).unwrap();
        assert!(r.holds());
        assert_eq!(r.kernel_lifts.len(), 1);
        let r = projection_checks(&spec, &p, &p.b1_copy).unwrap();
        assert!(r.pi2.set.is_zero());
        let r = projection_checks(&spec, &p, &p.brace.full_set()).unwrap();
        assert!(r.pi2.set.is_full() && r.holds());
    }

    #[test]
    fn one_element_factors() {
        let spec = SemidirectSpec::trivial(SkewBrace::zero(), SkewBrace::zero());
        assert_eq!(semidirect_product(&spec).unwrap().brace.order(), 1);
    }

    #[test]
    fn automorphisms_of_trivial_brace_are_group_automorphisms() {
        assert_eq!(brace_automorphisms(&SkewBrace::zero(), 10).unwrap().len(), 1);
        for g in [abelian(&[2, 2]).unwrap(), symmetric(3).unwrap(), dihedral(8).unwrap()] {
            let maps: Vec<Vec<usize>> = brace_automorphisms(&SkewBrace::trivial(&g), 100)
                .unwrap()
                .into_iter()
                .map(BraceMap::into_mapping)
                .collect();
            assert_eq!(maps, group_automorphisms(&g, 100).unwrap());
        }
    }

    #[test]
    fn inner_maps() {
        let b = SkewBrace::opposite(&symmetric(3).unwrap());
        assert!(inner_mult_automorphism(&b, 0).is_identity());
        for g in 0..6 {
            assert!(inner_mult_automorphism(&b, g).preserves_mul());
        }
        let c = SkewBrace::mod_p_squared(3).unwrap();
        assert!((0..9).all(|g| inner_mult_automorphism(&c, g).is_identity()));
    }

    #[test]
    fn sign_actions() {
        let b1 = SkewBrace::trivial(&cyclic(3));
        let b2 = SkewBrace::trivial(&symmetric(3).unwrap());
        let id = BraceMap::identity(&b1);
        assert!(build_sign_action(&b1, &b2, &id).unwrap().is_trivial_action());
        let neg = BraceMap::on(&b1, vec![0, 2, 1]);
        let spec = build_sign_action(&b1, &b2, &neg).unwrap();
        assert_eq!(spec.kernel().len(), 3);
        let odd = SkewBrace::trivial(&cyclic(5));
        assert!(matches!(build_sign_action(&b1, &odd, &neg), Err(Error::NoIndexTwoSubgroup)));
        let bad = BraceMap::on(&b1, vec![0, 1, 1]);
        assert!(matches!(build_sign_action(&b1, &b2, &bad), Err(Error::TauOrderInvalid)));
    }

    #[test]
    fn isomorphism_tests() {
        let b = SkewBrace::mod_p_squared(2).unwrap();
        assert!(are_isomorphic(&b, &b, 100).unwrap().unwrap().is_identity());
        let t4 = SkewBrace::trivial(&cyclic(4));
        let k4 = SkewBrace::trivial(&abelian(&[2, 2]).unwrap());
        assert!(are_isomorphic(&t4, &k4, 100).unwrap().is_none());
        assert!(are_isomorphic(&b, &t4, 100).unwrap().is_none());
        let o = SkewBrace::opposite(&symmetric(3).unwrap());
        let relabeled = o.relabel(&[0, 3, 5, 1, 2, 4]).unwrap();
        let f = are_isomorphic(&o, &relabeled, 100).unwrap().unwrap();
        assert!(f.is_automorphism() || (f.preserves_add() && f.preserves_mul()));
    }

    #[test]
    fn action_counts() {
        let b2 = SkewBrace::trivial(&cyclic(2));
        let rigid = SkewBrace::trivial(&cyclic(2));
        assert_eq!(enumerate_actions(&rigid, &b2).unwrap().len(), 1);
        let c3 = SkewBrace::trivial(&cyclic(3));
        let actions = enumerate_actions(&c3, &b2).unwrap();
        assert_eq!(actions.len(), 2);
        assert!(actions[0].is_trivial_action());
        assert!(!actions[1].is_trivial_action());
        for a in &actions {
            assert!(semidirect_product(a).is_ok());
        }
    }

    #[test]
    fn bad_specs_are_rejected() {
        let b1 = SkewBrace::trivial(&cyclic(3));
        let b2 = SkewBrace::trivial(&cyclic(2));
        assert!(matches!(
            SemidirectSpec::new(b1.clone(), b2.clone(), vec![vec![0, 2, 1], vec![0, 2, 1]]),
            Err(Error::NotAHomomorphism(_))
        ));
        assert!(matches!(
            SemidirectSpec::new(b1, b2, vec![vec![0, 1, 2], vec![0, 1, 1]]),
            Err(Error::NotAnAutomorphism(_))
        ));
    }
}

mod common;

use std::collections::{BTreeSet, HashSet};
use std::sync::OnceLock;

use common::{mask, to_set, Raw};
use proptest::prelude::*;
use skewbrace::group::catalog::{cyclic, groups_of_order, symmetric};
use skewbrace::ideal::{ideal_sets, nontrivial_ideals};
use skewbrace::{
    all_ideals, ideal_intersection, ideal_sum, is_ideal, is_left_ideal, is_simple, minimal_ideals, principal_ideal,
    projection_checks, quotient_brace, semidirect_product, BraceMap, ElementSet, SemidirectSpec, SkewBrace,
};

fn braces_24() -> &'static [SkewBrace] {
    static CELL: OnceLock<Vec<SkewBrace>> = OnceLock::new();
    CELL.get_or_init(|| common::braces_upto(24))
}

#[test]
fn left_ideal_examples() {
    let b = SkewBrace::trivial(&cyclic(6));
    assert!(is_left_ideal(&b, &ElementSet::zero(6)));
    assert!(is_left_ideal(&b, &ElementSet::full(6)));
    assert!(is_left_ideal(&b, &ElementSet::new(6, [0, 2, 4])));
    assert!(!is_left_ideal(&b, &ElementSet::new(6, [0, 1])));
}

#[test]
fn ideal_examples() {
    for b in &braces_24()[..60] {
        assert!(is_ideal(b, &b.zero_set()) && is_ideal(b, &b.full_set()));
    }
    let b = SkewBrace::mod_p_squared(2).unwrap();
    assert!(is_ideal(&b, &ElementSet::new(4, [0, 2])));
    let raw = Raw::of(&b);
    assert!(raw.is_ideal(0b101));
}

#[test]
fn trivial_brace_ideals_are_normal_subgroups() {
    for n in 1..=24 {
        for e in groups_of_order(n).unwrap() {
            let g = &e.group;
            let raw = Raw::new(g.rows(), g.rows());
            let normal: Vec<u64> = raw
                .subgroups()
                .into_iter()
                .filter(|&h| common::bits(h).all(|x| (0..n).all(|a| h >> g.conjugate(a, x) & 1 == 1)))
                .collect();
            let got: BTreeSet<u64> = ideal_sets(&SkewBrace::trivial(g)).iter().map(mask).collect();
            assert_eq!(got, normal.into_iter().collect(), "{}", e.name);
        }
    }
}

#[test]
fn principal_ideal_examples() {
    for b in &braces_24()[..60] {
        assert!(principal_ideal(b, 0).set.is_zero());
    }
    let s3 = symmetric(3).unwrap();
    let b = SkewBrace::trivial(&s3);
    let three_cycle = (1..6).find(|&x| s3.element_order(x) == 3).unwrap();
    let p = principal_ideal(&b, three_cycle);
    assert_eq!(p.set, s3.normal_closure(&ElementSet::new(6, [three_cycle])));
    assert_eq!(p.len(), 3);
    let simple = SkewBrace::trivial(&cyclic(7));
    assert!((1..7).all(|x| principal_ideal(&simple, x).set.is_full()));
}

#[test]
fn lattice_examples() {
    let b = SkewBrace::trivial(&cyclic(6));
    let sets: Vec<Vec<usize>> = all_ideals(&b).iter().map(|h| h.set.elements().to_vec()).collect();
    assert_eq!(sets, vec![vec![0], vec![0, 3], vec![0, 2, 4], vec![0, 1, 2, 3, 4, 5]]);
    for b in braces_24().iter().filter(|b| is_simple(b)) {
        assert_eq!(all_ideals(b).len(), 2);
    }
    let m = SkewBrace::mod_p_squared(2).unwrap();
    let sets: Vec<ElementSet> = all_ideals(&m).into_iter().map(|h| h.set).collect();
    let oracle: HashSet<ElementSet> = Raw::of(&m).ideals().into_iter().map(|x| to_set(4, x)).collect();
    assert_eq!(sets.iter().cloned().collect::<HashSet<_>>(), oracle);
    assert!(sets.contains(&ElementSet::new(4, [0, 2])));
}

#[test]
fn sum_and_intersection_examples() {
    let b = SkewBrace::trivial(&cyclic(6));
    let a = ElementSet::new(6, [0, 3]);
    let c = ElementSet::new(6, [0, 2, 4]);
    assert!(ideal_sum(&b, &a, &c).unwrap().set.is_full());
    for b in &braces_24()[..200] {
        for i in ideal_sets(b) {
            assert_eq!(&ideal_sum(b, i, &b.zero_set()).unwrap().set, i);
            assert_eq!(&ideal_intersection(b, i, &b.full_set()).unwrap().set, i);
            assert_eq!(&ideal_sum(b, i, i).unwrap().set, i);
        }
    }
}

#[test]
fn quotient_examples() {
    for b in &braces_24()[..100] {
        let q = quotient_brace(b, &b.zero_set()).unwrap();
        assert!(skewbrace::are_isomorphic(&q.brace, b, 64).unwrap().is_some());
        assert_eq!(quotient_brace(b, &b.full_set()).unwrap().brace, SkewBrace::zero());
    }
    let m = SkewBrace::mod_p_squared(2).unwrap();
    let q = quotient_brace(&m, &ElementSet::new(4, [0, 2])).unwrap();
    assert_eq!(q.brace, SkewBrace::trivial(&cyclic(2)));
}

#[test]
fn simplicity_examples() {
    for p in [2, 3, 5, 7, 11, 13] {
        let b = SkewBrace::trivial(&cyclic(p));
        assert!(is_simple(&b) && b.is_trivial());
    }
    let b = SkewBrace::trivial(&cyclic(6));
    assert!(!is_simple(&b));
    assert_eq!(Raw::of(&b).ideals().len(), 4);
    assert!(!is_simple(&SkewBrace::mod_p_squared(2).unwrap()));
}

#[test]
fn minimal_ideals_match_the_definition() {
    for b in braces_24() {
        let nonzero: Vec<ElementSet> = ideal_sets(b).iter().filter(|s| !s.is_zero()).cloned().collect();
        let brute: Vec<ElementSet> = nonzero
            .iter()
            .filter(|i| !nonzero.iter().any(|j| j != *i && j.is_subset(i)))
            .cloned()
            .collect();
        let got: Vec<ElementSet> = minimal_ideals(b).into_iter().map(|h| h.set).collect();
        assert_eq!(got, brute);
    }
}

#[test]
fn principal_ideals_are_the_smallest() {
    for b in braces_24() {
        let ideals = ideal_sets(b);
        for x in 0..b.order() {
            let p = principal_ideal(b, x).set;
            assert!(p.contains(x) && is_ideal(b, &p));
            for i in ideals.iter().filter(|i| i.contains(x)) {
                assert!(p.is_subset(i));
            }
        }
    }
}

#[test]
fn lattice_matches_brute_force_up_to_order_12() {
    for b in braces_24().iter().filter(|b| b.order() <= 12) {
        let got: BTreeSet<u64> = ideal_sets(b).iter().map(mask).collect();
        assert_eq!(got, Raw::of(b).ideals().into_iter().collect());
    }
}

#[test]
fn correspondence_with_quotient_ideals() {
    for b in braces_24() {
        let ideals = ideal_sets(b);
        for i in ideals {
            let q = quotient_brace(b, i).unwrap();
            let images: HashSet<ElementSet> = ideals
                .iter()
                .filter(|j| i.is_subset(j))
                .map(|j| ElementSet::new(q.brace.order(), j.iter().map(|x| q.projection.mapping()[x])))
                .collect();
            let quotient_ideals: HashSet<ElementSet> = ideal_sets(&q.brace).iter().cloned().collect();
            assert_eq!(images.len(), ideals.iter().filter(|j| i.is_subset(j)).count());
            assert_eq!(images, quotient_ideals);
        }
    }
}

#[test]
fn kernels_of_homomorphisms_are_ideals() {
    for b in &braces_24()[..400] {
        for i in ideal_sets(b) {
            let q = quotient_brace(b, i).unwrap();
            assert!(q.projection.is_homomorphism());
            let k = q.projection.kernel();
            assert_eq!(&k, i);
            assert!(is_ideal(b, &k));
        }
    }
    // projection of a semidirect product onto its second factor
    let b1 = SkewBrace::trivial(&cyclic(3));
    let b2 = SkewBrace::trivial(&cyclic(2));
    let spec = SemidirectSpec::new(b1, b2.clone(), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
    let p = semidirect_product(&spec).unwrap();
    let pi2: Vec<usize> = (0..6).map(|x| p.decode(x).1).collect();
    let map = BraceMap::between(&p.brace, &b2, pi2);
    assert!(map.is_homomorphism());
    assert_eq!(map.kernel(), p.b1_copy);
    assert!(is_ideal(&p.brace, &map.kernel()));
    let report = projection_checks(&spec, &p, &p.b1_copy).unwrap();
    assert!(report.holds());
}

#[test]
fn simple_means_two_ideals() {
    for b in braces_24().iter().filter(|b| b.order() >= 2) {
        assert_eq!(is_simple(b), nontrivial_ideals(b).is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ideal_closure_matches_brute_force(k in 0..2000usize, x in 0..24usize) {
        let braces = braces_24();
        let b = &braces[k % braces.len()];
        let x = x % b.order();
        let raw = Raw::of(b);
        let smallest = raw.ideals().into_iter().filter(|&i| i >> x & 1 == 1).min_by_key(|i| i.count_ones()).unwrap();
        prop_assert_eq!(mask(&principal_ideal(b, x).set), smallest);
    }
}

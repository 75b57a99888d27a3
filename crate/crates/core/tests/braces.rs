mod common;

use std::sync::OnceLock;

use common::Raw;
use proptest::prelude::*;
use skewbrace::group::catalog::{abelian, cyclic, symmetric};
use skewbrace::primality::is_semiprime;
use skewbrace::{enumerate_braces, validate_brace, AdditiveFilter, ElementSet, Error, FiniteGroup, Mode, SkewBrace};

fn small_braces() -> &'static [SkewBrace] {
    static CELL: OnceLock<Vec<SkewBrace>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut v = Vec::new();
        for n in (1..=12).chain([18, 24]) {
            v.extend(enumerate_braces(n, &AdditiveFilter::All).unwrap().braces);
        }
        v
    })
}

fn mod_table(p: usize) -> Vec<Vec<usize>> {
    let m = p * p;
    (0..m).map(|a| (0..m).map(|b| (a + b + p * a * b) % m).collect()).collect()
}

#[test]
fn validation_examples() {
    let c6 = cyclic(6);
    assert!(validate_brace(c6.clone(), c6).is_ok());

    let mul = FiniteGroup::from_rows(&mod_table(2)).unwrap();
    let b = validate_brace(cyclic(4), mul).unwrap();
    assert_eq!(b, SkewBrace::mod_p_squared(2).unwrap());
}

#[test]
fn klein_multiplication_on_cyclic_addition() {
    // a brute-force check finds no violating triple: λ_a is the identity
    // for even a and negation for odd a, so the pair is a brace
    let add = cyclic(4);
    let klein = abelian(&[2, 2]).unwrap();
    let raw = Raw::new(add.rows(), klein.rows());
    assert_eq!(raw.law_violation(), None);
    assert!(validate_brace(add.clone(), klein).is_ok());

    // relabeling the cyclic multiplication does break the law
    let bad = cyclic(4).relabel(&[0, 2, 1, 3]).unwrap();
    let raw = Raw::new(add.rows(), bad.rows());
    match validate_brace(add, bad) {
        Err(Error::BraceLawViolation { a, b, c }) => {
            assert!(raw.law_violation().is_some());
            let lhs = raw.mul[a][raw.add[b][c]];
            let rhs = raw.add[raw.add[raw.mul[a][b]][raw.neg[a]]][raw.mul[a][c]];
            assert_ne!(lhs, rhs);
        }
        other => panic!("expected a violation, got {other:?}"),
    }
}

#[test]
fn trivial_brace_examples() {
    let t2 = SkewBrace::trivial(&cyclic(2));
    assert!((0..2).all(|a| (0..2).all(|b| t2.star(a, b) == 0)));
    let s3 = SkewBrace::trivial(&symmetric(3).unwrap());
    assert!(!s3.add_group().is_abelian());
    assert_eq!(Raw::of(&s3).law_violation(), None);
    assert_eq!(SkewBrace::trivial(&cyclic(1)), SkewBrace::zero());
}

#[test]
fn opposite_brace_examples() {
    let c6 = cyclic(6);
    assert_eq!(SkewBrace::opposite(&c6), SkewBrace::trivial(&c6));
    let s3 = symmetric(3).unwrap();
    let op = SkewBrace::opposite(&s3);
    assert_eq!(Raw::of(&op).law_violation(), None);
    assert_ne!(op, SkewBrace::trivial(&s3));
    assert_eq!(SkewBrace::opposite(&cyclic(1)), SkewBrace::zero());
}

#[test]
fn mod_p_squared_examples() {
    let b = SkewBrace::mod_p_squared(2).unwrap();
    assert_eq!(b.mul(1, 1), 0);
    assert_eq!(b.star(1, 1), 2);
    for p in [2, 3, 5, 7] {
        let b = SkewBrace::mod_p_squared(p).unwrap();
        let t = mod_table(p);
        assert!((0..p * p).all(|x| b.mul(0, x) == x));
        assert_eq!(b.mul_group().rows(), t);
        assert_eq!(Raw::of(&b).law_violation(), None);
    }
    assert!(matches!(SkewBrace::mod_p_squared(4), Err(Error::BadParams(_))));
}

#[test]
fn lambda_examples() {
    for b in &small_braces()[..40] {
        assert!(b.lambda_map(0).is_identity());
    }
    let t = SkewBrace::trivial(&symmetric(3).unwrap());
    assert!((0..6).all(|a| t.lambda_map(a).is_identity()));
    let b = SkewBrace::mod_p_squared(2).unwrap();
    assert_eq!(b.lambda(1, 1), 3);
}

#[test]
fn star_examples() {
    let t = SkewBrace::trivial(&abelian(&[2, 6]).unwrap());
    let full = t.full_set();
    assert!(t.star_subgroup(&full, &full).is_zero());
    let b = SkewBrace::mod_p_squared(2).unwrap();
    let full = b.full_set();
    assert_eq!(b.star_subgroup(&full, &full), ElementSet::new(4, [0, 2]));
    for b in small_braces() {
        assert!(b.star_subgroup(&b.zero_set(), &b.full_set()).is_zero());
    }
}

#[test]
fn lambda_is_an_action_exhaustively() {
    for b in small_braces() {
        let n = b.order();
        for a in 0..n {
            for c in 0..n {
                let ac = b.mul(a, c);
                for x in 0..n {
                    assert_eq!(b.lambda(ac, x), b.lambda(a, b.lambda(c, x)));
                }
            }
        }
    }
}

#[test]
fn nonzero_trivial_braces_are_not_semiprime() {
    for b in small_braces().iter().filter(|b| b.is_trivial() && b.order() > 1) {
        let full = b.full_set();
        assert!(b.star_subgroup(&full, &full).is_zero());
        assert!(!is_semiprime(b, Mode::Fast).holds);
    }
}

fn brace() -> impl Strategy<Value = &'static SkewBrace> {
    (0..small_braces().len()).prop_map(|k| &small_braces()[k])
}

fn brace_and_elements() -> impl Strategy<Value = (&'static SkewBrace, usize, usize)> {
    brace().prop_flat_map(|b| (Just(b), 0..b.order(), 0..b.order()))
}

fn brace_and_sets() -> impl Strategy<Value = (&'static SkewBrace, Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>)> {
    brace().prop_flat_map(|b| {
        let n = b.order();
        let v = || prop::collection::vec(0..n, 0..3);
        (Just(b), v(), v(), v(), v())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn mul_is_add_after_lambda((b, x, y) in brace_and_elements()) {
        prop_assert_eq!(b.mul(x, y), b.add(x, b.lambda(x, y)));
    }

    #[test]
    fn star_is_lambda_minus_identity((b, x, y) in brace_and_elements()) {
        prop_assert_eq!(b.star(x, y), b.sub(b.lambda(x, y), y));
        let n = b.order();
        let s = b.star_subgroup(&ElementSet::new(n, [x]), &ElementSet::new(n, [y]));
        prop_assert!(s.contains(b.star(x, y)));
    }

    #[test]
    fn star_subgroup_is_monotone((b, x1, x2, y1, y2) in brace_and_sets()) {
        let n = b.order();
        let x = ElementSet::new(n, x1.iter().chain(&x2).copied());
        let y = ElementSet::new(n, y1.iter().chain(&y2).copied());
        let small = b.star_subgroup(&ElementSet::new(n, x1), &ElementSet::new(n, y1));
        prop_assert!(small.is_subset(&b.star_subgroup(&x, &y)));
    }

    #[test]
    fn validation_agrees_with_brute_force((b, i, j) in brace_and_elements()) {
        // swap two nonzero labels of the multiplicative table
        prop_assume!(i != 0 && j != 0 && i != j);
        let n = b.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, j);
        let mul = b.mul_group().relabel(&perm).unwrap();
        let raw = Raw::new(b.add_group().rows(), mul.rows());
        match validate_brace(b.add_group().clone(), mul) {
            Ok(_) => prop_assert_eq!(raw.law_violation(), None),
            Err(Error::BraceLawViolation { a, b: y, c }) => {
                let lhs = raw.mul[a][raw.add[y][c]];
                let rhs = raw.add[raw.add[raw.mul[a][y]][raw.neg[a]]][raw.mul[a][c]];
                prop_assert_ne!(lhs, rhs);
            }
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

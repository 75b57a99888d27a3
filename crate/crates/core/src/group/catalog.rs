//! Constructors for concrete groups and a catalog of all groups of small order.
//!
//! Naming follows the usual small-group conventions with dihedral and
//! dicyclic groups indexed by their order: `D8` has 8 elements, `Dic12` has
//! 12. Direct products are written with `x`, e.g. `C2xDic12`.

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Orders for which [`groups_of_order`] lists every group up to isomorphism.
pub const COMPLETE_ORDERS: &[usize] =
    &[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 20, 21, 22, 24];

/// Upper bound on carrier sizes built by the parametric constructors.
pub const MAX_CONSTRUCTED_ORDER: usize = 1 << 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    /// Direct product of cyclic groups of the given orders.
    Abelian(Vec<usize>),
    /// Dihedral group with the given number of elements.
    Dihedral(usize),
    /// Dicyclic group with the given number of elements (a multiple of 4).
    Dicyclic(usize),
    /// Quaternion group of order 8.
    Quaternion,
    Symmetric(usize),
    Alternating(usize),
    DirectProduct(Box<GroupKind>, Box<GroupKind>),
    /// A named catalog entry such as `SL(2,3)` or `C3:C8`.
    Named(String),
    RawTable(Vec<Vec<usize>>),
}

impl GroupKind {
    /// Parses tags such as `C6`, `C2xC6`, `D8`, `Dic12`, `S4`, `cyclic:6`,
    /// `abelian:2,2`, `dihedral:8` or any catalog name.
    pub fn parse(tag: &str) -> Result<GroupKind> {
        let tag = tag.trim();
        if let Some((kind, params)) = tag.split_once(':') {
            let nums = || -> Result<Vec<usize>> {
                params
                    .split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{tag}: {e}"))))
                    .collect()
            };
            let single = || -> Result<usize> {
                match nums()?.as_slice() {
                    [n] => Ok(*n),
                    _ => Err(Error::Parse(format!("{tag}: expected one parameter"))),
                }
            };
            match kind {
                "cyclic" => return Ok(GroupKind::Cyclic(single()?)),
                "abelian" => return Ok(GroupKind::Abelian(nums()?)),
                "dihedral" => return Ok(GroupKind::Dihedral(single()?)),
                "dicyclic" => return Ok(GroupKind::Dicyclic(single()?)),
                "symmetric" => return Ok(GroupKind::Symmetric(single()?)),
                "alternating" => return Ok(GroupKind::Alternating(single()?)),
                _ => {}
            }
        }
        if named_constructor(tag).is_some() {
            return Ok(GroupKind::Named(tag.to_string()));
        }
        let factors: Vec<&str> = tag.split('x').collect();
        if factors.len() > 1 {
            let mut kinds = factors.iter().map(|f| GroupKind::parse(f));
            let first = kinds.next().expect("nonempty split")?;
            return kinds.try_fold(first, |acc, k| Ok(GroupKind::DirectProduct(Box::new(acc), Box::new(k?))));
        }
        parse_base(tag).ok_or_else(|| Error::Parse(format!("unknown group tag `{tag}`")))
    }
}

fn parse_base(tag: &str) -> Option<GroupKind> {
    let num = |s: &str| s.parse::<usize>().ok();
    if let Some(rest) = tag.strip_prefix("Dic") {
        return num(rest).map(GroupKind::Dicyclic);
    }
    if tag == "Q8" {
        return Some(GroupKind::Quaternion);
    }
    if let Some(rest) = tag.strip_prefix('C') {
        if let Some((base, exp)) = rest.split_once('^') {
            let (b, e) = (num(base)?, num(exp)?);
            return Some(GroupKind::Abelian(vec![b; e]));
        }
        return num(rest).map(GroupKind::Cyclic);
    }
    if let Some(rest) = tag.strip_prefix('D') {
        return num(rest).map(GroupKind::Dihedral);
    }
    if let Some(rest) = tag.strip_prefix('S') {
        return num(rest).map(GroupKind::Symmetric);
    }
    if let Some(rest) = tag.strip_prefix('A') {
        return num(rest).map(GroupKind::Alternating);
    }
    None
}

/// Builds a validated group from a catalog tag.
pub fn make_group(kind: &GroupKind) -> Result<FiniteGroup> {
    match kind {
        GroupKind::Cyclic(n) => {
            check_size(*n)?;
            Ok(cyclic(*n))
        }
        GroupKind::Abelian(factors) => abelian(factors),
        GroupKind::Dihedral(n) => dihedral(*n),
        GroupKind::Dicyclic(n) => dicyclic(*n),
        GroupKind::Quaternion => dicyclic(8),
        GroupKind::Symmetric(k) => symmetric(*k),
        GroupKind::Alternating(k) => alternating(*k),
        GroupKind::DirectProduct(a, b) => {
            let (ga, gb) = (make_group(a)?, make_group(b)?);
            check_size(ga.order() * gb.order())?;
            Ok(ga.direct_product(&gb))
        }
        GroupKind::Named(name) => named_constructor(name)
            .map(|c| c())
            .ok_or_else(|| Error::BadParams(format!("unknown catalog group `{name}`")))?,
        GroupKind::RawTable(rows) => FiniteGroup::from_rows_relabeled(rows),
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::BadParams("group order must be at least 1".into()));
    }
    if n > MAX_CONSTRUCTED_ORDER {
        return Err(Error::BoundExceeded { what: "group order", needed: n, bound: MAX_CONSTRUCTED_ORDER });
    }
    Ok(())
}

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
    FiniteGroup::from_flat(n, table).expect("cyclic table is valid")
}

/// `C_{m0} x C_{m1} x ...`; element index is `c0 + m0*(c1 + m1*(c2 + ...))`.
pub fn abelian(factors: &[usize]) -> Result<FiniteGroup> {
    if factors.is_empty() {
        return Ok(cyclic(1));
    }
    let order: usize = factors.iter().product();
    check_size(order)?;
    let mut g = cyclic(factors[0]);
    for &m in &factors[1..] {
        g = g.direct_product(&cyclic(m));
    }
    Ok(g)
}

/// `C_m ⋊ C_k` where the generator of `C_k` acts as multiplication by `r`.
/// The pair `(a, b)` is encoded as `b*m + a`.
pub fn metacyclic(m: usize, k: usize, r: usize) -> Result<FiniteGroup> {
    check_size(m * k)?;
    if m == 1 {
        return Ok(cyclic(k));
    }
    let mut rk = 1 % m;
    for _ in 0..k {
        rk = rk * r % m;
    }
    if rk != 1 % m || gcd(r, m) != 1 {
        return Err(Error::BadParams(format!("r={r} does not define an action of C{k} on C{m}")));
    }
    let mut powers = vec![1 % m; k];
    for i in 1..k {
        powers[i] = powers[i - 1] * r % m;
    }
    let n = m * k;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a1, b1) = (x % m, x / m);
        for y in 0..n {
            let (a2, b2) = (y % m, y / m);
            let a = (a1 + powers[b1] * a2) % m;
            let b = (b1 + b2) % k;
            table.push(b * m + a);
        }
    }
    FiniteGroup::from_flat(n, table)
}

/// Dihedral group with `order` elements.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order == 0 || !order.is_multiple_of(2) {
        return Err(Error::BadParams(format!("dihedral order must be even, got {order}")));
    }
    let m = order / 2;
    if m == 1 {
        return Ok(cyclic(2));
    }
    metacyclic(m, 2, m - 1)
}

/// Dicyclic group with `order = 4m` elements; `dicyclic(8)` is the quaternion group.
///
/// Elements are `a^i x^j` encoded as `j*2m + i`, with `a^{2m} = 1`,
/// `x^2 = a^m` and `x a x^{-1} = a^{-1}`.
pub fn dicyclic(order: usize) -> Result<FiniteGroup> {
    if order == 0 || !order.is_multiple_of(4) {
        return Err(Error::BadParams(format!("dicyclic order must be a multiple of 4, got {order}")));
    }
    check_size(order)?;
    let m = order / 4;
    let c = 2 * m;
    let mut table = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, j) = (x % c, x / c);
        for y in 0..order {
            let (k, l) = (y % c, y / c);
            let (ni, nj) = match (j, l) {
                (0, 0) => ((i + k) % c, 0),
                (0, 1) => ((i + k) % c, 1),
                (1, 0) => ((i + c - k) % c, 1),
                _ => ((i + c - k + m) % c, 0),
            };
            table.push(nj * c + ni);
        }
    }
    FiniteGroup::from_flat(order, table)
}

/// All permutations of `0..k` in lexicographic order (identity first).
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p ∘ q)(i) = p(q(i))
    q.iter().map(|&i| p[i]).collect()
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

pub fn symmetric(k: usize) -> Result<FiniteGroup> {
    if k > 6 {
        return Err(Error::BoundExceeded { what: "symmetric group degree", needed: k, bound: 6 });
    }
    FiniteGroup::from_elements(&permutations(k), |p, q| compose(p, q))
}

pub fn alternating(k: usize) -> Result<FiniteGroup> {
    if k > 7 {
        return Err(Error::BoundExceeded { what: "alternating group degree", needed: k, bound: 7 });
    }
    let even: Vec<Vec<usize>> = permutations(k).into_iter().filter(|p| is_even(p)).collect();
    FiniteGroup::from_elements(&even, |p, q| compose(p, q))
}

/// `SL(2,3)`: determinant-one 2x2 matrices over the field with 3 elements.
pub fn sl23() -> FiniteGroup {
    let mut mats: Vec<[usize; 4]> = Vec::new();
    mats.push([1, 0, 0, 1]);
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    let m = [a, b, c, d];
                    if (a * d + 3 * 3 - b * c) % 3 == 1 && m != [1, 0, 0, 1] {
                        mats.push(m);
                    }
                }
            }
        }
    }
    FiniteGroup::from_elements(&mats, |x, y| {
        [
            (x[0] * y[0] + x[1] * y[2]) % 3,
            (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3,
            (x[2] * y[1] + x[3] * y[3]) % 3,
        ]
    })
    .expect("SL(2,3) is a group")
}

/// `N ⋊ H` where `action[h]` is the automorphism of `N` by which `h` acts.
/// The pair `(x, h)` is encoded as `h*|N| + x`.
pub fn semidirect_group(n: &FiniteGroup, h: &FiniteGroup, action: &[Vec<usize>]) -> Result<FiniteGroup> {
    let (nn, nh) = (n.order(), h.order());
    check_size(nn * nh)?;
    if action.len() != nh {
        return Err(Error::BadParams("action must have one map per element of H".into()));
    }
    for (i, phi) in action.iter().enumerate() {
        let bijective = {
            let mut seen = vec![false; nn];
            phi.len() == nn && phi.iter().all(|&x| x < nn && !std::mem::replace(&mut seen[x], true))
        };
        if !bijective || (0..nn).any(|a| (0..nn).any(|b| phi[n.op(a, b)] != n.op(phi[a], phi[b])))
        {
            return Err(Error::BadParams(format!("action[{i}] is not an automorphism")));
        }
    }
    for a in 0..nh {
        for &g in h.generators() {
            let lhs = &action[h.op(a, g)];
            if (0..nn).any(|x| lhs[x] != action[a][action[g][x]]) {
                return Err(Error::BadParams("action is not a homomorphism".into()));
            }
        }
    }
    let total = nn * nh;
    let mut table = Vec::with_capacity(total * total);
    for p in 0..total {
        let (x1, h1) = (p % nn, p / nn);
        for q in 0..total {
            let (x2, h2) = (q % nn, q / nn);
            table.push(h.op(h1, h2) * nn + n.op(x1, action[h1][x2]));
        }
    }
    FiniteGroup::from_flat(total, table)
}

/// `A ⋊ C2` with the involution inverting the abelian group `A`.
pub fn generalized_dihedral(a: &FiniteGroup) -> Result<FiniteGroup> {
    if !a.is_abelian() {
        return Err(Error::BadParams("generalized dihedral needs an abelian group".into()));
    }
    let identity: Vec<usize> = (0..a.order()).collect();
    let inversion: Vec<usize> = (0..a.order()).map(|x| a.inv(x)).collect();
    semidirect_group(a, &cyclic(2), &[identity, inversion])
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

type Constructor = fn() -> Result<FiniteGroup>;

/// Non-abelian catalog entries that are not parametric families.
const NAMED: &[(&str, usize, Constructor)] = &[
    ("S3", 6, || symmetric(3)),
    ("D8", 8, || dihedral(8)),
    ("Q8", 8, || dicyclic(8)),
    ("D10", 10, || dihedral(10)),
    ("A4", 12, || alternating(4)),
    ("D12", 12, || dihedral(12)),
    ("Dic12", 12, || dicyclic(12)),
    ("D14", 14, || dihedral(14)),
    ("D16", 16, || dihedral(16)),
    ("Q16", 16, || dicyclic(16)),
    ("SD16", 16, || metacyclic(8, 2, 3)),
    ("M16", 16, || metacyclic(8, 2, 5)),
    ("C4:C4", 16, || metacyclic(4, 4, 3)),
    ("C2^2:C4", 16, c2sq_by_c4),
    ("C2xD8", 16, || Ok(cyclic(2).direct_product(&dihedral(8)?))),
    ("C2xQ8", 16, || Ok(cyclic(2).direct_product(&dicyclic(8)?))),
    ("C4oD8", 16, pauli),
    ("D18", 18, || dihedral(18)),
    ("C3xS3", 18, || Ok(cyclic(3).direct_product(&symmetric(3)?))),
    ("C3^2:C2", 18, || generalized_dihedral(&abelian(&[3, 3])?)),
    ("D20", 20, || dihedral(20)),
    ("Dic20", 20, || dicyclic(20)),
    ("F20", 20, || metacyclic(5, 4, 2)),
    ("C7:C3", 21, || metacyclic(7, 3, 2)),
    ("D22", 22, || dihedral(22)),
    ("C3:C8", 24, || metacyclic(3, 8, 2)),
    ("SL(2,3)", 24, || Ok(sl23())),
    ("Dic24", 24, || dicyclic(24)),
    ("C4xS3", 24, || Ok(cyclic(4).direct_product(&symmetric(3)?))),
    ("D24", 24, || dihedral(24)),
    ("C2xDic12", 24, || Ok(cyclic(2).direct_product(&dicyclic(12)?))),
    ("C3:D8", 24, c3_by_d8),
    ("C3xD8", 24, || Ok(cyclic(3).direct_product(&dihedral(8)?))),
    ("C3xQ8", 24, || Ok(cyclic(3).direct_product(&dicyclic(8)?))),
    ("S4", 24, || symmetric(4)),
    ("C2xA4", 24, || Ok(cyclic(2).direct_product(&alternating(4)?))),
    ("C2^2xS3", 24, || Ok(abelian(&[2, 2])?.direct_product(&symmetric(3)?))),
];

fn named_constructor(name: &str) -> Option<Constructor> {
    NAMED.iter().find(|(n, _, _)| *n == name).map(|&(_, _, c)| c)
}

/// `(C2 x C2) ⋊ C4` with the generator of `C4` swapping the two factors.
fn c2sq_by_c4() -> Result<FiniteGroup> {
    let n = abelian(&[2, 2])?;
    let swap = vec![0, 2, 1, 3];
    let id: Vec<usize> = (0..4).collect();
    semidirect_group(&n, &cyclic(4), &[id.clone(), swap.clone(), id, swap])
}

/// Central product `C4 ∘ D8`, realised as `(C4 x C2) ⋊ C2` with the
/// involution sending `(a, b)` to `(a + 2b, b)`.
fn pauli() -> Result<FiniteGroup> {
    let n = abelian(&[4, 2])?;
    let id: Vec<usize> = (0..8).collect();
    let twist: Vec<usize> = (0..8)
        .map(|x| {
            let (a, b) = (x % 4, x / 4);
            b * 4 + (a + 2 * b) % 4
        })
        .collect();
    semidirect_group(&n, &cyclic(2), &[id, twist])
}

/// `C3 ⋊ D8` where `D8` acts through its quotient by a Klein four-subgroup.
fn c3_by_d8() -> Result<FiniteGroup> {
    let d8 = dihedral(8)?;
    let c3 = cyclic(3);
    let id = vec![0, 1, 2];
    let inversion = vec![0, 2, 1];
    // d8 element (a, b) is encoded as b*4 + a; the kernel is {a even}.
    let action: Vec<Vec<usize>> =
        (0..8).map(|x| if (x % 4) % 2 == 0 { id.clone() } else { inversion.clone() }).collect();
    semidirect_group(&c3, &d8, &action)
}

/// A named group together with its catalog tag.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub group: FiniteGroup,
}

fn factorize(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Invariant factors `d1 | d2 | ...` of every abelian group of order `n`,
/// starting with the cyclic group.
pub fn abelian_invariant_factors(n: usize) -> Vec<Vec<usize>> {
    let mut result: Vec<Vec<usize>> = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for current in &result {
            for part in partitions(e, e) {
                // part is non-increasing; the largest exponents pair with the largest factors
                let mut factors: Vec<usize> = current.clone();
                let k = part.len().max(factors.len());
                while factors.len() < k {
                    factors.insert(0, 1);
                }
                let mut exps = part.clone();
                exps.reverse();
                while exps.len() < k {
                    exps.insert(0, 0);
                }
                for (f, &x) in factors.iter_mut().zip(exps.iter()) {
                    *f *= p.pow(x as u32);
                }
                next.push(factors);
            }
        }
        result = next;
    }
    if n == 1 {
        return vec![vec![1]];
    }
    result
}

pub fn abelian_name(factors: &[usize]) -> String {
    factors.iter().map(|f| format!("C{f}")).collect::<Vec<_>>().join("x")
}

/// Every abelian group of order `n`, cyclic group first.
pub fn abelian_groups_of_order(n: usize) -> Result<Vec<CatalogEntry>> {
    check_size(n)?;
    abelian_invariant_factors(n)
        .into_iter()
        .map(|f| Ok(CatalogEntry { name: abelian_name(&f), group: abelian(&f)? }))
        .collect()
}

/// Every group of order `n` up to isomorphism; abelian groups first.
///
/// Supported for [`COMPLETE_ORDERS`] and for orders `p` and `p^2`.
pub fn groups_of_order(n: usize) -> Result<Vec<CatalogEntry>> {
    let factors = factorize(n);
    let all_abelian = factors.len() == 1 && factors[0].1 <= 2;
    if all_abelian {
        return abelian_groups_of_order(n);
    }
    if !COMPLETE_ORDERS.contains(&n) {
        return Err(Error::UnsupportedOrder {
            order: n,
            reason: "the group catalog is not complete for this order".into(),
        });
    }
    let mut out = abelian_groups_of_order(n)?;
    for &(name, order, ctor) in NAMED {
        if order == n {
            out.push(CatalogEntry { name: name.to_string(), group: ctor()? });
        }
    }
    Ok(out)
}

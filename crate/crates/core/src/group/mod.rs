//! Finite groups stored as Cayley tables on `{0..n-1}` with identity `0`.

pub mod catalog;
pub mod morphism;

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::set::ElementSet;

pub use catalog::{make_group, CatalogEntry, GroupKind};
pub use morphism::{
    group_automorphisms, group_homomorphisms, group_isomorphism, holomorph, Holomorph,
    DEFAULT_AUTOMORPHISM_BOUND,
};

/// A finite group given by its full operation table.
///
/// Construction validates the table: identity at `0`, Latin rows and
/// columns, two-sided inverses and associativity. Associativity uses
/// Light's test over a generating set, which is exact.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    orders: OnceLock<Vec<usize>>,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a table whose identity is already `0`.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        Self::from_flat(n, rows.concat())
    }

    /// Validates a table with an arbitrary identity element, relabeling the
    /// carrier by swapping the identity with `0`.
    pub fn from_rows_relabeled(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidTable("table is not square".into()));
        }
        let e = find_identity(n, &rows.concat())
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        let perm = swap_permutation(n, e);
        let mut flat = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[perm[a] * n + perm[b]] = perm[rows[a][b]];
            }
        }
        Self::from_flat(n, flat)
    }

    /// Validates a row-major flat table.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        let n = order;
        if n == 0 {
            return Err(Error::InvalidTable("empty carrier".into()));
        }
        if table.len() != n * n {
            return Err(Error::InvalidTable(format!(
                "expected {} entries, found {}",
                n * n,
                table.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= n) {
            return Err(Error::InvalidTable(format!("entry {bad} out of range")));
        }
        for a in 0..n {
            if table[a] != a || table[a * n] != a {
                return Err(Error::InvalidTable(format!(
                    "0 is not the identity (fails at element {a})"
                )));
            }
        }
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let x = table[a * n + b];
                if seen[x] == a {
                    return Err(Error::InvalidTable(format!("row {a} repeats {x}")));
                }
                seen[x] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let x = table[a * n + b];
                if seen[x] == b {
                    return Err(Error::InvalidTable(format!("column {b} repeats {x}")));
                }
                seen[x] = b;
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            let b = (0..n).find(|&b| table[a * n + b] == 0).expect("Latin row contains 0");
            if table[b * n + a] != 0 {
                return Err(Error::InvalidTable(format!("{a} has no two-sided inverse")));
            }
            inverse[a] = b;
        }
        let generators = greedy_generators(n, &table);
        // Light's test: (x*g)*y == x*(g*y) for all x, y and all generators g.
        for &g in &generators {
            for x in 0..n {
                let xg = table[x * n + g];
                for y in 0..n {
                    let lhs = table[xg * n + y];
                    let rhs = table[x * n + table[g * n + y]];
                    if lhs != rhs {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({x}, {g}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { order: n, table, inverse, generators, orders: OnceLock::new() })
    }

    /// Builds a group from a list of elements (identity first) and an
    /// operation on them.
    pub fn from_elements<T, F>(elements: &[T], op: F) -> Result<Self>
    where
        T: Eq + std::hash::Hash + Clone,
        F: Fn(&T, &T) -> T,
    {
        let index: std::collections::HashMap<&T, usize> =
            elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        if index.len() != elements.len() {
            return Err(Error::InvalidTable("repeated element".into()));
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                let c = op(a, b);
                let &i = index
                    .get(&c)
                    .ok_or_else(|| Error::InvalidTable("set is not closed".into()))?;
                table.push(i);
            }
        }
        Self::from_flat(n, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    /// Generating set chosen greedily, smallest elements first.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// `j x j^{-1}`.
    #[inline]
    pub fn conjugate(&self, j: usize, x: usize) -> usize {
        self.op(self.op(j, x), self.inv(j))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders()[a]
    }

    pub fn element_orders(&self) -> &[usize] {
        self.orders.get_or_init(|| {
            (0..self.order)
                .map(|a| {
                    let mut k = 1;
                    let mut x = a;
                    while x != 0 {
                        x = self.op(x, a);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// `a^k` for `k >= 0`.
    pub fn pow(&self, a: usize, k: usize) -> usize {
        let mut x = 0;
        for _ in 0..k {
            x = self.op(x, a);
        }
        x
    }

    /// The opposite group, `a ·op b := b · a`.
    pub fn opposite(&self) -> FiniteGroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = self.op(b, a);
            }
        }
        FiniteGroup::from_flat(n, table).expect("opposite of a group is a group")
    }

    /// External direct product; the pair `(g, h)` is encoded as `h * |G| + g`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let total = n * m;
        let mut table = Vec::with_capacity(total * total);
        for x in 0..total {
            let (g1, h1) = (x % n, x / n);
            for y in 0..total {
                let (g2, h2) = (y % n, y / n);
                table.push(other.op(h1, h2) * n + self.op(g1, g2));
            }
        }
        FiniteGroup::from_flat(total, table).expect("direct product of groups is a group")
    }

    /// Relabels the carrier by a permutation fixing `0`: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<FiniteGroup> {
        let n = self.order;
        check_relabeling(n, perm)?;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.op(a, b)];
            }
        }
        FiniteGroup::from_flat(n, table)
    }

    pub fn subgroup_closure(&self, s: &ElementSet) -> ElementSet {
        let mut builder = SubgroupBuilder::new(self);
        for x in s.iter() {
            builder.add(x);
        }
        builder.finish()
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        !h.is_empty() && h.contains(0) && self.subgroup_closure(h).len() == h.len()
    }

    pub fn conjugate_set(&self, x: &ElementSet, j: usize) -> ElementSet {
        ElementSet::new(self.order, x.iter().map(|a| self.conjugate(j, a)))
    }

    /// `{y x y^{-1} : x ∈ X, y ∈ Y}`.
    pub fn conjugate_set_by_set(&self, x: &ElementSet, y: &ElementSet) -> ElementSet {
        ElementSet::new(
            self.order,
            y.iter().flat_map(|j| x.iter().map(move |a| self.conjugate(j, a))),
        )
    }

    pub fn is_normal(&self, h: &ElementSet) -> Result<bool> {
        if !self.is_subgroup(h) {
            return Err(Error::NotASubgroup);
        }
        Ok(self.normal_under_generators(h))
    }

    /// Normality of a known subgroup, checked against conjugation by generators.
    pub(crate) fn normal_under_generators(&self, h: &ElementSet) -> bool {
        let mask = h.mask();
        self.generators.iter().all(|&g| h.iter().all(|x| mask[self.conjugate(g, x)]))
    }

    pub fn normal_closure(&self, s: &ElementSet) -> ElementSet {
        let mut builder = SubgroupBuilder::new(self);
        for x in s.iter() {
            builder.add(x);
        }
        let mut scanned = 0;
        while scanned < builder.len() {
            let x = builder.elements()[scanned];
            scanned += 1;
            for i in 0..self.generators.len() {
                let y = self.conjugate(self.generators[i], x);
                builder.add(y);
            }
        }
        builder.finish()
    }

    pub fn center(&self) -> ElementSet {
        let n = self.order;
        ElementSet::new(
            n,
            (0..n).filter(|&z| self.generators.iter().all(|&g| self.op(z, g) == self.op(g, z))),
        )
    }

    pub fn derived_subgroup(&self) -> ElementSet {
        let n = self.order;
        let commutators = (0..n).flat_map(|a| {
            (0..n).map(move |b| self.op(self.op(a, b), self.op(self.inv(a), self.inv(b))))
        });
        let s = ElementSet::new(n, commutators);
        self.normal_closure(&s)
    }

    /// Subgroup generated by all squares; it is the intersection of the
    /// subgroups of index at most 2.
    pub fn squares_subgroup(&self) -> ElementSet {
        let s = ElementSet::new(self.order, (0..self.order).map(|a| self.op(a, a)));
        self.subgroup_closure(&s)
    }

    /// Every subgroup, for small groups. Fails past `bound` subgroups.
    pub fn all_subgroups(&self, bound: usize) -> Result<Vec<ElementSet>> {
        let n = self.order;
        let mut seen: HashSet<ElementSet> = HashSet::new();
        let trivial = ElementSet::zero(n);
        seen.insert(trivial.clone());
        let mut queue = vec![trivial];
        while let Some(h) = queue.pop() {
            let mask = h.mask();
            for g in (0..n).filter(|&g| !mask[g]) {
                let mut builder = SubgroupBuilder::new(self);
                for x in h.iter() {
                    builder.add(x);
                }
                builder.add(g);
                let k = builder.finish();
                if seen.insert(k.clone()) {
                    if seen.len() > bound {
                        return Err(Error::BoundExceeded {
                            what: "subgroup enumeration",
                            needed: seen.len(),
                            bound,
                        });
                    }
                    queue.push(k);
                }
            }
        }
        let mut all: Vec<ElementSet> = seen.into_iter().collect();
        all.sort_by(|a, b| a.size_lex_cmp(b));
        Ok(all)
    }
}

fn find_identity(n: usize, table: &[usize]) -> Option<usize> {
    (0..n).find(|&e| (0..n).all(|a| table.get(e * n + a) == Some(&a) && table.get(a * n + e) == Some(&a)))
}

/// The transposition `(0 e)` as a relabeling.
pub(crate) fn swap_permutation(n: usize, e: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(0, e);
    perm
}

pub(crate) fn check_relabeling(n: usize, perm: &[usize]) -> Result<()> {
    if perm.len() != n || perm.first() != Some(&0) {
        return Err(Error::BadParams("relabeling must be a permutation fixing 0".into()));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(Error::BadParams("relabeling is not a permutation".into()));
        }
    }
    Ok(())
}

/// Smallest-first greedy generating set: an element becomes a generator
/// when it is not yet reachable from `0` by right multiplication with the
/// current generators.
fn greedy_generators(n: usize, table: &[usize]) -> Vec<usize> {
    let mut covered = vec![false; n];
    let mut reached = vec![0usize];
    covered[0] = true;
    let mut gens: Vec<usize> = Vec::new();
    for candidate in 1..n {
        if covered[candidate] {
            continue;
        }
        gens.push(candidate);
        let old = reached.len();
        let mut i = 0;
        while i < reached.len() {
            let x = reached[i];
            let apply: &[usize] = if i < old { std::slice::from_ref(&candidate) } else { &gens };
            for &g in apply {
                let y = table[x * n + g];
                if !covered[y] {
                    covered[y] = true;
                    reached.push(y);
                }
            }
            i += 1;
        }
    }
    gens
}

/// Incremental subgroup closure inside a fixed group.
pub(crate) struct SubgroupBuilder<'a> {
    group: &'a FiniteGroup,
    member: Vec<bool>,
    elements: Vec<usize>,
    gens: Vec<usize>,
}

impl<'a> SubgroupBuilder<'a> {
    pub(crate) fn new(group: &'a FiniteGroup) -> Self {
        let mut member = vec![false; group.order()];
        member[0] = true;
        SubgroupBuilder { group, member, elements: vec![0], gens: Vec::new() }
    }

    pub(crate) fn len(&self) -> usize {
        self.elements.len()
    }

    pub(crate) fn is_full(&self) -> bool {
        self.elements.len() == self.group.order()
    }

    pub(crate) fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Adds `g` and closes; returns whether the subgroup grew.
    pub(crate) fn add(&mut self, g: usize) -> bool {
        if self.member[g] {
            return false;
        }
        self.gens.push(g);
        let old = self.elements.len();
        let mut i = 0;
        while i < self.elements.len() {
            let x = self.elements[i];
            if i < old {
                self.push(self.group.op(x, g));
            } else {
                for k in 0..self.gens.len() {
                    self.push(self.group.op(x, self.gens[k]));
                }
            }
            i += 1;
        }
        true
    }

    #[inline]
    fn push(&mut self, y: usize) {
        if !self.member[y] {
            self.member[y] = true;
            self.elements.push(y);
        }
    }

    pub(crate) fn finish(self) -> ElementSet {
        ElementSet::new(self.group.order(), self.elements)
    }
}

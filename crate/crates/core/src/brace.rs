//! Skew left braces on a common carrier `{0..n-1}`.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::group::catalog::cyclic;
use crate::group::{FiniteGroup, SubgroupBuilder};
use crate::set::ElementSet;

/// How the brace law is checked at construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ValidationMode {
    /// `λ_a(x + g) = λ_a(x) + λ_a(g)` for every `a`, `x` and additive
    /// generator `g`. This is equivalent to the law, and a failure names a
    /// genuine violating triple `(a, x, g)`.
    #[default]
    Generators,
    /// Every triple `(a, b, c)`. Cubic in the order.
    Exhaustive,
}

/// A skew left brace `(B, +, ∘)`.
#[derive(Clone)]
pub struct SkewBrace {
    add: FiniteGroup,
    mul: FiniteGroup,
    pub(crate) ideals: OnceLock<Vec<ElementSet>>,
}

impl PartialEq for SkewBrace {
    fn eq(&self, other: &Self) -> bool {
        self.add == other.add && self.mul == other.mul
    }
}

impl Eq for SkewBrace {}

impl fmt::Debug for SkewBrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SkewBrace")
            .field("order", &self.order())
            .field("abelian_type", &self.add.is_abelian())
            .field("trivial", &self.is_trivial())
            .finish()
    }
}

/// Checks the brace law for two validated groups on the same carrier.
pub fn validate_brace(add: FiniteGroup, mul: FiniteGroup) -> Result<SkewBrace> {
    SkewBrace::with_mode(add, mul, ValidationMode::Generators)
}

impl SkewBrace {
    pub fn new(add: FiniteGroup, mul: FiniteGroup) -> Result<Self> {
        Self::with_mode(add, mul, ValidationMode::Generators)
    }

    pub fn with_mode(add: FiniteGroup, mul: FiniteGroup, mode: ValidationMode) -> Result<Self> {
        if add.order() != mul.order() {
            return Err(Error::BadParams(format!(
                "additive order {} differs from multiplicative order {}",
                add.order(),
                mul.order()
            )));
        }
        let brace = SkewBrace { add, mul, ideals: OnceLock::new() };
        match mode {
            ValidationMode::Generators => brace.check_law_generators()?,
            ValidationMode::Exhaustive => brace.check_law_exhaustive()?,
        }
        Ok(brace)
    }

    /// Builds a brace from raw tables whose identities may sit anywhere.
    ///
    /// Both identities must agree; the common identity is moved to `0`.
    pub fn from_tables(add: &[Vec<usize>], mul: &[Vec<usize>]) -> Result<Self> {
        let n = add.len();
        if mul.len() != n || add.iter().chain(mul).any(|r| r.len() != n) {
            return Err(Error::InvalidTable("tables must be square of the same size".into()));
        }
        let e_add = raw_identity(add).ok_or_else(|| Error::InvalidTable("additive table has no identity".into()))?;
        let e_mul =
            raw_identity(mul).ok_or_else(|| Error::InvalidTable("multiplicative table has no identity".into()))?;
        if e_add != e_mul {
            return Err(Error::IdentityMismatch { add: e_add, mul: e_mul });
        }
        if e_add == 0 {
            return Self::new(FiniteGroup::from_rows(add)?, FiniteGroup::from_rows(mul)?);
        }
        let perm = crate::group::swap_permutation(n, e_add);
        let relabel = |t: &[Vec<usize>]| -> Vec<Vec<usize>> {
            let mut out = vec![vec![0; n]; n];
            for a in 0..n {
                for b in 0..n {
                    out[perm[a]][perm[b]] = perm[t[a][b]];
                }
            }
            out
        };
        Self::new(FiniteGroup::from_rows(&relabel(add))?, FiniteGroup::from_rows(&relabel(mul))?)
    }

    fn check_law_generators(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            for &g in self.add.generators() {
                let lg = self.lambda(a, g);
                for x in 0..n {
                    let lhs = self.lambda(a, self.add.op(x, g));
                    if lhs != self.add.op(self.lambda(a, x), lg) {
                        return Err(Error::BraceLawViolation { a, b: x, c: g });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_law_exhaustive(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            let na = self.add.inv(a);
            for b in 0..n {
                let ab = self.mul.op(a, b);
                for c in 0..n {
                    let lhs = self.mul.op(a, self.add.op(b, c));
                    let rhs = self.add.op(self.add.op(ab, na), self.mul.op(a, c));
                    if lhs != rhs {
                        return Err(Error::BraceLawViolation { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// The trivial brace, `∘ = +`.
    pub fn trivial(g: &FiniteGroup) -> Self {
        SkewBrace::new(g.clone(), g.clone()).expect("trivial brace satisfies the law")
    }

    /// `(G, ·, ·op)`.
    pub fn opposite(g: &FiniteGroup) -> Self {
        SkewBrace::new(g.clone(), g.opposite()).expect("opposite brace satisfies the law")
    }

    /// The one-element brace.
    pub fn zero() -> Self {
        SkewBrace::trivial(&cyclic(1))
    }

    /// `Z/p²` with `a ∘ b = a + b + p·a·b`.
    pub fn mod_p_squared(p: usize) -> Result<Self> {
        if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(Error::BadParams(format!("{p} is not prime")));
        }
        let n = p.checked_mul(p).filter(|&n| n <= 1 << 12).ok_or_else(|| {
            Error::BadParams(format!("p = {p} is too large"))
        })?;
        let add = cyclic(n);
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push((a + b + p * a * b) % n);
            }
        }
        SkewBrace::new(add, FiniteGroup::from_flat(n, table)?)
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn add_group(&self) -> &FiniteGroup {
        &self.add
    }

    pub fn mul_group(&self) -> &FiniteGroup {
        &self.mul
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.op(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.op(a, b)
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.add.inv(a)
    }

    /// Multiplicative inverse `a⁻`.
    #[inline]
    pub fn mul_inv(&self, a: usize) -> usize {
        self.mul.inv(a)
    }

    /// `a - b`, that is `a + (-b)`.
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add.op(a, self.add.inv(b))
    }

    /// `λ_a(b) = -a + a∘b`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.add.op(self.add.inv(a), self.mul.op(a, b))
    }

    pub fn lambda_map(&self, a: usize) -> BraceMap {
        let mapping = (0..self.order()).map(|b| self.lambda(a, b)).collect();
        BraceMap::on(self, mapping)
    }

    /// `a * b = -a + a∘b - b`.
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.sub(self.lambda(a, b), b)
    }

    /// The additive subgroup generated by `{x * y : x ∈ X, y ∈ Y}`.
    pub fn star_subgroup(&self, x: &ElementSet, y: &ElementSet) -> ElementSet {
        let mut builder = SubgroupBuilder::new(&self.add);
        'outer: for a in x.iter() {
            for b in y.iter() {
                builder.add(self.star(a, b));
                if builder.is_full() {
                    break 'outer;
                }
            }
        }
        builder.finish()
    }

    /// True when `∘ = +`, equivalently when every `λ_a` is the identity.
    pub fn is_trivial(&self) -> bool {
        self.add == self.mul
    }

    pub fn is_abelian_type(&self) -> bool {
        self.add.is_abelian()
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order())
    }

    pub fn zero_set(&self) -> ElementSet {
        ElementSet::zero(self.order())
    }

    /// Restriction to a subset closed under both operations (a sub-brace or
    /// an ideal). Elements are relabeled in increasing order, so `labels[i]`
    /// is the original index of the new element `i`.
    pub fn sub_brace(&self, set: &ElementSet) -> Result<(SkewBrace, Vec<usize>)> {
        let labels = set.elements().to_vec();
        if labels.first() != Some(&0) {
            return Err(Error::BadParams("sub-brace must contain 0".into()));
        }
        let mut index = vec![usize::MAX; self.order()];
        for (i, &x) in labels.iter().enumerate() {
            index[x] = i;
        }
        let k = labels.len();
        let restrict = |g: &FiniteGroup| -> Result<Vec<usize>> {
            let mut table = Vec::with_capacity(k * k);
            for &a in &labels {
                for &b in &labels {
                    let c = index[g.op(a, b)];
                    if c == usize::MAX {
                        return Err(Error::BadParams("set is not closed under both operations".into()));
                    }
                    table.push(c);
                }
            }
            Ok(table)
        };
        let add = FiniteGroup::from_flat(k, restrict(&self.add)?)?;
        let mul = FiniteGroup::from_flat(k, restrict(&self.mul)?)?;
        Ok((SkewBrace::new(add, mul)?, labels))
    }

    /// Relabels by a permutation fixing `0`: element `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SkewBrace> {
        SkewBrace::new(self.add.relabel(perm)?, self.mul.relabel(perm)?)
    }

    /// Additive order and multiplicative order of every element.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.order()).map(|a| (self.add.element_order(a), self.mul.element_order(a))).collect()
    }
}

fn raw_identity(t: &[Vec<usize>]) -> Option<usize> {
    let n = t.len();
    (0..n).find(|&e| (0..n).all(|a| t[e].get(a) == Some(&a) && t[a].get(e) == Some(&a)))
}

/// A total map between brace carriers, with the structures it preserves.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraceMap {
    mapping: Vec<usize>,
    preserves_add: bool,
    preserves_mul: bool,
}

impl fmt::Debug for BraceMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BraceMap")
            .field("mapping", &self.mapping)
            .field("preserves_add", &self.preserves_add)
            .field("preserves_mul", &self.preserves_mul)
            .finish()
    }
}

impl BraceMap {
    /// A map `src -> dst`; the flags are computed here.
    ///
    /// Panics if the mapping has the wrong length or leaves the target carrier.
    pub fn between(src: &SkewBrace, dst: &SkewBrace, mapping: Vec<usize>) -> Self {
        assert_eq!(mapping.len(), src.order(), "mapping length must equal the source order");
        assert!(mapping.iter().all(|&y| y < dst.order()), "mapping leaves the target carrier");
        let preserves_add = preserves(src.add_group(), dst.add_group(), &mapping);
        let preserves_mul = preserves(src.mul_group(), dst.mul_group(), &mapping);
        BraceMap { mapping, preserves_add, preserves_mul }
    }

    /// An endomap of `b`.
    pub fn on(b: &SkewBrace, mapping: Vec<usize>) -> Self {
        Self::between(b, b, mapping)
    }

    pub fn identity(b: &SkewBrace) -> Self {
        BraceMap { mapping: (0..b.order()).collect(), preserves_add: true, preserves_mul: true }
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn into_mapping(self) -> Vec<usize> {
        self.mapping
    }

    pub fn apply(&self, x: usize) -> usize {
        self.mapping[x]
    }

    pub fn preserves_add(&self) -> bool {
        self.preserves_add
    }

    pub fn preserves_mul(&self) -> bool {
        self.preserves_mul
    }

    pub fn is_homomorphism(&self) -> bool {
        self.preserves_add && self.preserves_mul
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.mapping.len()];
        self.mapping.iter().all(|&y| y < seen.len() && !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_automorphism(&self) -> bool {
        self.is_homomorphism() && self.is_bijective()
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// `self ∘ other` as endomaps of `b`, that is `x ↦ self(other(x))`.
    pub fn compose(&self, other: &BraceMap, b: &SkewBrace) -> BraceMap {
        BraceMap::on(b, other.mapping.iter().map(|&x| self.mapping[x]).collect())
    }

    /// `{x : f(x) = 0}`.
    pub fn kernel(&self) -> ElementSet {
        ElementSet::new(
            self.mapping.len(),
            self.mapping.iter().enumerate().filter(|(_, &y)| y == 0).map(|(x, _)| x),
        )
    }
}

/// A map `f` with `f(0) = 0` is a homomorphism iff `f(x·g) = f(x)·f(g)` for
/// every `x` and every generator `g`.
fn preserves(src: &FiniteGroup, dst: &FiniteGroup, f: &[usize]) -> bool {
    f[0] == 0
        && src
            .generators()
            .iter()
            .all(|&g| (0..src.order()).all(|x| f[src.op(x, g)] == dst.op(f[x], f[g])))
}

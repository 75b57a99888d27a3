//! Semiprime, prime, strongly semiprime and strongly prime braces.
//!
//! The fast deciders only look at minimal ideals. Every nonzero ideal of a
//! finite brace contains a minimal one and `X*Y` is monotone in both
//! arguments, so a zero product of ideals can always be shrunk to a zero
//! product of minimal ideals.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use serde::{Deserialize, Serialize};

use crate::brace::SkewBrace;
use crate::construct::{inner_mult_automorphism, semidirect_product, SemidirectProduct, SemidirectSpec};
use crate::error::{Error, Result};
use crate::ideal::{ideal_sets, is_ideal, is_simple, minimal_ideals, nontrivial_ideals, quotient_brace};
use crate::set::ElementSet;

/// Default cap on the number of distinct subgroups in a star closure.
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// Environment variable overriding [`DEFAULT_CLOSURE_CAP`].
pub const CLOSURE_CAP_VAR: &str = "SKEWBRACE_CLOSURE_CAP";

static REPORTS: AtomicUsize = AtomicUsize::new(0);
static VIOLATIONS: AtomicUsize = AtomicUsize::new(0);

/// Number of primality reports built in this process, and how many of them
/// broke an implication between the four properties.
pub fn report_counters() -> (usize, usize) {
    (REPORTS.load(Ordering::SeqCst), VIOLATIONS.load(Ordering::SeqCst))
}

pub fn closure_cap() -> usize {
    std::env::var(CLOSURE_CAP_VAR).ok().and_then(|v| v.parse().ok()).unwrap_or(DEFAULT_CLOSURE_CAP)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Minimal ideals only.
    #[default]
    Fast,
    /// Every nonzero ideal, as in the definitions.
    Oracle,
}

/// A sequence of star products ending in `{0}`.
///
/// `terms` starts with the ideals used; step `k` computes
/// `terms[l] * terms[r]` and appends it as term `ideals.len() + k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarChain {
    pub ideals: Vec<ElementSet>,
    pub steps: Vec<(usize, usize)>,
    pub terms: Vec<ElementSet>,
}

impl StarChain {
    /// Recomputes every step and checks that each starting set is an ideal
    /// and the last term is `{0}`.
    pub fn verify(&self, b: &SkewBrace) -> bool {
        if self.ideals.iter().any(|i| i.is_zero() || !is_ideal(b, i)) {
            return false;
        }
        let mut terms = self.ideals.clone();
        for &(l, r) in &self.steps {
            if l >= terms.len() || r >= terms.len() {
                return false;
            }
            let t = b.star_subgroup(&terms[l], &terms[r]);
            terms.push(t);
        }
        terms == self.terms && terms.last().is_some_and(ElementSet::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub holds: bool,
    pub witness: Option<StarChain>,
}

impl Decision {
    fn yes() -> Self {
        Decision { holds: true, witness: None }
    }

    fn no(chain: StarChain) -> Self {
        Decision { holds: false, witness: Some(chain) }
    }
}

fn candidates(b: &SkewBrace, mode: Mode) -> Vec<ElementSet> {
    match mode {
        Mode::Fast => minimal_ideals(b).into_iter().map(|h| h.set).collect(),
        Mode::Oracle => ideal_sets(b).iter().filter(|s| !s.is_zero()).cloned().collect(),
    }
}

fn single_step(b: &SkewBrace, i: &ElementSet, j: &ElementSet) -> Option<StarChain> {
    let p = b.star_subgroup(i, j);
    if !p.is_zero() {
        return None;
    }
    if i == j {
        Some(StarChain { ideals: vec![i.clone()], steps: vec![(0, 0)], terms: vec![i.clone(), p] })
    } else {
        Some(StarChain { ideals: vec![i.clone(), j.clone()], steps: vec![(0, 1)], terms: vec![i.clone(), j.clone(), p] })
    }
}

/// No nonzero ideal `I` with `I*I = 0`.
pub fn is_semiprime(b: &SkewBrace, mode: Mode) -> Decision {
    for i in candidates(b, mode) {
        if let Some(chain) = single_step(b, &i, &i) {
            return Decision::no(chain);
        }
    }
    Decision::yes()
}

/// No nonzero ideals `I`, `J` with `I*J = 0`.
pub fn is_prime(b: &SkewBrace, mode: Mode) -> Decision {
    let c = candidates(b, mode);
    for i in &c {
        for j in &c {
            if let Some(chain) = single_step(b, i, j) {
                return Decision::no(chain);
            }
        }
    }
    Decision::yes()
}

/// Closes `start` under `(X, Y) ↦ X*Y`; returns a chain reaching `{0}` if any.
fn star_closure(b: &SkewBrace, start: &[ElementSet], cap: usize) -> Result<Option<StarChain>> {
    // parent[k] = None for starting sets, Some((l, r)) for products
    let mut terms: Vec<ElementSet> = Vec::new();
    let mut parent: Vec<Option<(usize, usize)>> = Vec::new();
    let mut index: HashMap<ElementSet, usize> = HashMap::new();
    for s in start {
        if !index.contains_key(s) {
            index.insert(s.clone(), terms.len());
            terms.push(s.clone());
            parent.push(None);
        }
    }
    if let Some(&z) = index.get(&b.zero_set()) {
        return Ok(Some(rebuild_chain(&terms, &parent, z)));
    }
    let mut next = 0;
    while next < terms.len() {
        let t = next;
        next += 1;
        for s in 0..=t {
            for (l, r) in [(t, s), (s, t)] {
                let p = b.star_subgroup(&terms[l], &terms[r]);
                if index.contains_key(&p) {
                    continue;
                }
                let k = terms.len();
                index.insert(p.clone(), k);
                let zero = p.is_zero();
                terms.push(p);
                parent.push(Some((l, r)));
                if zero {
                    return Ok(Some(rebuild_chain(&terms, &parent, k)));
                }
                if terms.len() > cap {
                    return Err(Error::ClosureCapExceeded { cap });
                }
            }
        }
    }
    Ok(None)
}

fn rebuild_chain(terms: &[ElementSet], parent: &[Option<(usize, usize)>], target: usize) -> StarChain {
    // collect the ancestors of `target`; parents always precede children
    let mut needed = vec![false; terms.len()];
    needed[target] = true;
    for k in (0..=target).rev() {
        if needed[k] {
            if let Some((l, r)) = parent[k] {
                needed[l] = true;
                needed[r] = true;
            }
        }
    }
    let mut remap = vec![usize::MAX; terms.len()];
    let mut ideals = Vec::new();
    for k in 0..=target {
        if needed[k] && parent[k].is_none() {
            remap[k] = ideals.len();
            ideals.push(terms[k].clone());
        }
    }
    let mut steps = Vec::new();
    let mut out_terms = ideals.clone();
    for k in 0..=target {
        if needed[k] {
            if let Some((l, r)) = parent[k] {
                remap[k] = out_terms.len();
                steps.push((remap[l], remap[r]));
                out_terms.push(terms[k].clone());
            }
        }
    }
    StarChain { ideals, steps, terms: out_terms }
}

/// No star product of copies of one nonzero ideal is `{0}`.
pub fn is_strongly_semiprime(b: &SkewBrace, mode: Mode) -> Result<Decision> {
    let cap = closure_cap();
    for i in candidates(b, mode) {
        if let Some(chain) = star_closure(b, std::slice::from_ref(&i), cap)? {
            return Ok(Decision::no(chain));
        }
    }
    Ok(Decision::yes())
}

/// No star product of nonzero ideals, of any length and bracketing, is `{0}`.
pub fn is_strongly_prime(b: &SkewBrace, mode: Mode) -> Result<Decision> {
    let c = candidates(b, mode);
    match star_closure(b, &c, closure_cap())? {
        Some(chain) => Ok(Decision::no(chain)),
        None => Ok(Decision::yes()),
    }
}

/// All four properties of one brace.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PrimalityReport {
    pub order: usize,
    pub mode: Mode,
    pub semiprime: bool,
    pub prime: bool,
    pub strongly_semiprime: bool,
    pub strongly_prime: bool,
    pub semiprime_witness: Option<StarChain>,
    pub prime_witness: Option<StarChain>,
    pub strongly_semiprime_witness: Option<StarChain>,
    pub strongly_prime_witness: Option<StarChain>,
}

impl PrimalityReport {
    /// strongly prime ⇒ prime ⇒ semiprime, strongly prime ⇒ strongly
    /// semiprime ⇒ semiprime.
    pub fn implications_hold(&self) -> bool {
        (!self.strongly_prime || self.prime)
            && (!self.prime || self.semiprime)
            && (!self.strongly_semiprime || self.semiprime)
            && (!self.strongly_prime || self.strongly_semiprime)
    }
}

pub fn primality_report(b: &SkewBrace, mode: Mode) -> Result<PrimalityReport> {
    let semiprime = is_semiprime(b, mode);
    let prime = is_prime(b, mode);
    let ss = is_strongly_semiprime(b, mode)?;
    let sp = is_strongly_prime(b, mode)?;
    let report = PrimalityReport {
        order: b.order(),
        mode,
        semiprime: semiprime.holds,
        prime: prime.holds,
        strongly_semiprime: ss.holds,
        strongly_prime: sp.holds,
        semiprime_witness: semiprime.witness,
        prime_witness: prime.witness,
        strongly_semiprime_witness: ss.witness,
        strongly_prime_witness: sp.witness,
    };
    REPORTS.fetch_add(1, Ordering::SeqCst);
    if !report.implications_hold() {
        VIOLATIONS.fetch_add(1, Ordering::SeqCst);
        return Err(Error::Inconsistent(format!("primality implications fail: {report:?}")));
    }
    if unique_ideal_criterion(b)?.is_some() && !report.strongly_prime {
        VIOLATIONS.fetch_add(1, Ordering::SeqCst);
        return Err(Error::Inconsistent("unique-ideal criterion holds but brace is not strongly prime".into()));
    }
    Ok(report)
}

/// Evidence that `B` has exactly one nontrivial ideal `J`, which is simple
/// and not trivial as a brace; such a `B` is strongly prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniqueIdealCertificate {
    pub ideal: ElementSet,
    /// `J*J`, which equals `J`.
    pub ideal_square: ElementSet,
}

pub fn unique_ideal_criterion(b: &SkewBrace) -> Result<Option<UniqueIdealCertificate>> {
    let nontrivial = nontrivial_ideals(b);
    let [j] = nontrivial.as_slice() else { return Ok(None) };
    let (sub, _) = b.sub_brace(j)?;
    let square = b.star_subgroup(j, j);
    if !is_simple(&sub) || square.is_zero() {
        return Ok(None);
    }
    if &square != j {
        return Err(Error::Inconsistent("J*J differs from J for a simple non-trivial ideal".into()));
    }
    Ok(Some(UniqueIdealCertificate { ideal: j.clone(), ideal_square: square }))
}

fn check_simple_factors(spec: &SemidirectSpec) -> Result<()> {
    if !is_simple(&spec.b1) || !is_simple(&spec.b2) {
        return Err(Error::HypothesesNotMet("B1 and B2 must be simple".into()));
    }
    if spec.kernel().is_full() {
        return Err(Error::HypothesesNotMet("the action is trivial".into()));
    }
    Ok(())
}

fn assert_unique_ideal(spec: &SemidirectSpec, product: &SemidirectProduct) -> Result<()> {
    let nontrivial = nontrivial_ideals(&product.brace);
    if nontrivial != [product.b1_copy.clone()] {
        return Err(Error::Inconsistent(format!(
            "expected B1 x {{0}} as the only nontrivial ideal, found {} nontrivial ideals",
            nontrivial.len()
        )));
    }
    debug_assert_eq!(product.b1_copy.len(), spec.b1.order());
    Ok(())
}

/// `α` not injective and `Z(B1, ∘)` trivial. When this holds, the product's
/// only nontrivial ideal is `B1 × {0}`, which is checked on `product`.
pub fn corol1_check(spec: &SemidirectSpec, product: &SemidirectProduct) -> Result<bool> {
    check_simple_factors(spec)?;
    let holds = spec.kernel().len() > 1 && spec.b1.mul_group().center().is_zero();
    if holds {
        assert_unique_ideal(spec, product)?;
    }
    Ok(holds)
}

/// No `α_a` with `a ≠ 0` is an inner automorphism of `(B1, ∘)`. When this
/// holds, the product's only nontrivial ideal is `B1 × {0}`.
pub fn coro2_check(spec: &SemidirectSpec, product: &SemidirectProduct) -> Result<bool> {
    check_simple_factors(spec)?;
    let inner: std::collections::HashSet<Vec<usize>> =
        (0..spec.b1.order()).map(|g| inner_mult_automorphism(&spec.b1, g).into_mapping()).collect();
    let holds = spec.action.iter().skip(1).all(|m| !inner.contains(m.mapping()));
    if holds {
        assert_unique_ideal(spec, product)?;
    }
    Ok(holds)
}

/// Outcome of the product criterion for a semidirect product.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FinalCriterion {
    pub corol1: bool,
    pub coro2: bool,
    pub b1_trivial: bool,
    /// Whether the hypotheses apply (one of the checks holds and `B1` is not trivial).
    pub applies: bool,
    pub strongly_prime: bool,
    pub simple: bool,
}

/// If either check holds and `B1` is not trivial, the product must be
/// strongly prime and not simple; this is verified on `product`.
pub fn final_criterion(spec: &SemidirectSpec, product: &SemidirectProduct) -> Result<FinalCriterion> {
    let corol1 = corol1_check(spec, product)?;
    let coro2 = coro2_check(spec, product)?;
    let b1_trivial = spec.b1.is_trivial();
    let applies = (corol1 || coro2) && !b1_trivial;
    let strongly_prime = is_strongly_prime(&product.brace, Mode::Fast)?.holds;
    let simple = is_simple(&product.brace);
    if applies && (!strongly_prime || simple) {
        return Err(Error::Inconsistent("product criterion applies but conclusion fails".into()));
    }
    Ok(FinalCriterion { corol1, coro2, b1_trivial, applies, strongly_prime, simple })
}

/// Strong semiprimality of `I`, `B/I` and `B`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ExtensionCheck {
    pub ideal: bool,
    pub quotient: bool,
    pub brace: bool,
}

impl ExtensionCheck {
    /// `I` and `B/I` strongly semiprime ⇒ `B` strongly semiprime.
    pub fn holds(&self) -> bool {
        !(self.ideal && self.quotient) || self.brace
    }

    /// Both hypotheses hold, so the conclusion about `B` is a consequence.
    pub fn witnessed(&self) -> bool {
        self.ideal && self.quotient && self.brace
    }
}

pub fn strong_semiprime_product_check(b: &SkewBrace, ideal: &ElementSet) -> Result<ExtensionCheck> {
    if !is_ideal(b, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let (sub, _) = b.sub_brace(ideal)?;
    let q = quotient_brace(b, ideal)?;
    let check = ExtensionCheck {
        ideal: is_strongly_semiprime(&sub, Mode::Fast)?.holds,
        quotient: is_strongly_semiprime(&q.brace, Mode::Fast)?.holds,
        brace: is_strongly_semiprime(b, Mode::Fast)?.holds,
    };
    if !check.holds() {
        return Err(Error::Inconsistent("I and B/I strongly semiprime but B is not".into()));
    }
    Ok(check)
}

/// Builds the product and runs [`final_criterion`].
pub fn final_criterion_for(spec: &SemidirectSpec) -> Result<(SemidirectProduct, FinalCriterion)> {
    let product = semidirect_product(spec)?;
    let outcome = final_criterion(spec, &product)?;
    Ok((product, outcome))
}

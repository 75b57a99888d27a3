//! Checks of the structural lemmas on ideals and of the semiprimality
//! transfer results for semidirect products, run over many braces.
//!
//! Every checker returns a [`SuiteStats`] with the number of cases examined
//! and a description of each violation. Quantifiers over ideals are
//! exhaustive; quantifiers over elements and subgroups are sampled with a
//! caller-supplied RNG.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::brace::SkewBrace;
use crate::construct::{brace_automorphisms, enumerate_actions, projection_checks, semidirect_product};
use crate::enumerate::{enumerate_braces, AdditiveFilter};
use crate::error::Result;
use crate::ideal::{ideal_sets, minimal_ideals};
use crate::primality::{is_semiprime, is_strongly_semiprime, Mode};
use crate::set::ElementSet;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteStats {
    pub cases: usize,
    pub violations: Vec<String>,
}

impl SuiteStats {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: SuiteStats) {
        self.cases += other.cases;
        self.violations.extend(other.violations);
    }

    fn record(&mut self, holds: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !holds {
            self.violations.push(what());
        }
    }
}

fn is_zero_product(b: &SkewBrace, x: &ElementSet, y: &ElementSet) -> bool {
    x.iter().all(|a| y.iter().all(|c| b.star(a, c) == 0))
}

fn additive_sum(b: &SkewBrace, x: &ElementSet, y: &ElementSet) -> ElementSet {
    b.add_group().subgroup_closure(&x.union(y))
}

/// Every distinct sum of a nonempty family of `parts`, each paired with a
/// value folded over the family. Families are explored one summand at a
/// time, so every family is reached even though equal states are merged.
fn family_sums<T: Clone + Eq + std::hash::Hash>(
    b: &SkewBrace,
    parts: &[(ElementSet, T)],
    fold: impl Fn(&T, &T) -> T,
) -> Vec<(ElementSet, T)> {
    let mut seen: HashSet<(ElementSet, T)> = HashSet::new();
    let mut queue: VecDeque<(ElementSet, T)> = VecDeque::new();
    for p in parts {
        if seen.insert(p.clone()) {
            queue.push_back(p.clone());
        }
    }
    while let Some((s, t)) = queue.pop_front() {
        for (p, u) in parts {
            let next = (additive_sum(b, &s, p), fold(&t, u));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(|a, b| a.0.size_lex_cmp(&b.0));
    out
}

/// For distinct minimal ideals `J, I_1, ..., I_k`:
/// `J*(I_1+...+I_k) = (I_1+...+I_k)*J = 0`.
pub fn prodid(b: &SkewBrace) -> SuiteStats {
    let mins: Vec<ElementSet> = minimal_ideals(b).into_iter().map(|h| h.set).collect();
    let mut stats = SuiteStats::default();
    for (j, jset) in mins.iter().enumerate() {
        let others: Vec<(ElementSet, ())> =
            mins.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, s)| (s.clone(), ())).collect();
        for (sum, ()) in family_sums(b, &others, |_, _| ()) {
            stats.record(is_zero_product(b, jset, &sum) && is_zero_product(b, &sum, jset), || {
                format!("J={:?} sum={:?}", jset.elements(), sum.elements())
            });
        }
    }
    stats
}

/// For a brace automorphism `α` and a minimal ideal `I`: `α(I)` is minimal,
/// and `I*I = 0` exactly when `α(I)*α(I) = 0`.
pub fn lempre(b: &SkewBrace) -> Result<SuiteStats> {
    let mins: Vec<ElementSet> = minimal_ideals(b).into_iter().map(|h| h.set).collect();
    let square_zero: Vec<bool> = mins.iter().map(|i| is_zero_product(b, i, i)).collect();
    let index: HashMap<&ElementSet, usize> = mins.iter().enumerate().map(|(k, s)| (s, k)).collect();
    let mut stats = SuiteStats::default();
    for alpha in brace_automorphisms(b, b.order())? {
        for (k, i) in mins.iter().enumerate() {
            let image = i.image(alpha.mapping());
            let holds = match index.get(&image) {
                Some(&m) => square_zero[m] == square_zero[k],
                None => false,
            };
            stats.record(holds, || format!("α={:?} I={:?}", alpha.mapping(), i.elements()));
        }
    }
    Ok(stats)
}

/// For minimal ideals `I_1, ..., I_k` with sum `I`: `I*I = 0` exactly when
/// every `I_i*I_i = 0`.
pub fn lemind2(b: &SkewBrace) -> SuiteStats {
    let parts: Vec<(ElementSet, bool)> = minimal_ideals(b)
        .into_iter()
        .map(|h| {
            let z = is_zero_product(b, &h.set, &h.set);
            (h.set, z)
        })
        .collect();
    let mut stats = SuiteStats::default();
    for (sum, all_zero) in family_sums(b, &parts, |x, y| *x && *y) {
        stats.record(is_zero_product(b, &sum, &sum) == all_zero, || {
            format!("sum={:?} all_zero={all_zero}", sum.elements())
        });
    }
    stats
}

/// An additive subgroup generated by one or two random elements.
pub fn random_subgroup(b: &SkewBrace, rng: &mut impl Rng) -> ElementSet {
    let n = b.order();
    let k = rng.gen_range(1..=2);
    let gens = ElementSet::new(n, (0..k).map(|_| rng.gen_range(0..n)));
    b.add_group().subgroup_closure(&gens)
}

/// `(X+I)*(Y+I) ⊆ (X*Y)+I` for random additive subgroups `X, Y` and a
/// random ideal `I`, `samples` times.
pub fn lemid(b: &SkewBrace, rng: &mut impl Rng, samples: usize) -> SuiteStats {
    let ideals = ideal_sets(b);
    let mut stats = SuiteStats::default();
    for _ in 0..samples {
        let i = &ideals[rng.gen_range(0..ideals.len())];
        let x = random_subgroup(b, rng);
        let y = random_subgroup(b, rng);
        let lhs = b.star_subgroup(&additive_sum(b, &x, i), &additive_sum(b, &y, i));
        let rhs = additive_sum(b, &b.star_subgroup(&x, &y), i);
        stats.record(lhs.is_subset(&rhs), || {
            format!("X={:?} Y={:?} I={:?}", x.elements(), y.elements(), i.elements())
        });
    }
    stats
}

/// For distinct minimal ideals `I_1, ..., I_k` (`k ≥ 2`) and elements
/// `i_t, j_t ∈ I_t`, `(i_1+...+i_k)*(j_1+...+j_k)` lies in the additive
/// subgroup generated by `I_1*I_1` and the conjugates
/// `(I_t*I_t)^{I_1+...+I_{t-1}}`. Families and elements are sampled.
pub fn lemchiav(b: &SkewBrace, rng: &mut impl Rng, samples: usize) -> SuiteStats {
    let mins: Vec<ElementSet> = minimal_ideals(b).into_iter().map(|h| h.set).collect();
    let mut stats = SuiteStats::default();
    if mins.len() < 2 {
        return stats;
    }
    for _ in 0..samples {
        let k = rng.gen_range(2..=mins.len().min(4));
        let mut picked: Vec<usize> = (0..mins.len()).collect();
        for t in 0..k {
            let r = rng.gen_range(t..picked.len());
            picked.swap(t, r);
        }
        let family: Vec<&ElementSet> = picked[..k].iter().map(|&t| &mins[t]).collect();
        let mut target = ElementSet::zero(b.order());
        let mut prefix = ElementSet::zero(b.order());
        for s in &family {
            let square = b.star_subgroup(s, s);
            target = additive_sum(b, &target, &b.add_group().conjugate_set_by_set(&square, &prefix));
            prefix = additive_sum(b, &prefix, s);
        }
        let (mut u, mut v) = (0, 0);
        for s in &family {
            u = b.add(u, s.elements()[rng.gen_range(0..s.len())]);
            v = b.add(v, s.elements()[rng.gen_range(0..s.len())]);
        }
        stats.record(target.contains(b.star(u, v)), || format!("u={u} v={v} family={family:?}"));
    }
    stats
}

/// Lemma items on projections and lifts, for every ideal of every product
/// of `b1` and `b2`.
pub fn projid(b1: &SkewBrace, b2: &SkewBrace) -> Result<SuiteStats> {
    let mut stats = SuiteStats::default();
    for spec in enumerate_actions(b1, b2)? {
        let product = semidirect_product(&spec)?;
        for ideal in ideal_sets(&product.brace) {
            let report = projection_checks(&spec, &product, ideal)?;
            stats.record(report.holds(), || format!("ideal={:?}", ideal.elements()));
        }
    }
    Ok(stats)
}

/// Tallies of the semidirect-product sweep.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SemidirectSweep {
    /// Products built, one per action.
    pub products: usize,
    /// Products with both factors semiprime.
    pub both_factors_semiprime: usize,
    /// Semiprime products.
    pub semiprime_products: usize,
    /// Products whose factors are semiprime but which are not.
    pub teokin: SuiteStats,
    /// Semiprime products whose first factor is not.
    pub princi: SuiteStats,
    /// Semiprime products whose second factor is not.
    pub second_factor_not_semiprime: usize,
    /// Strongly semiprime products.
    pub strongly_semiprime_products: usize,
    /// Strongly semiprime products whose first factor is not strongly
    /// semiprime, as `|B1| |B2| action` tags. Whether any exist is open.
    pub strong_first_factor_not_strong: Vec<String>,
}

/// Builds every semidirect product `B1 ⋊ B2` with `B1, B2` enumerated braces
/// whose orders lie in `orders` and `|B1||B2| ≤ max_order`, and checks that
/// semiprime factors give a semiprime product and that a semiprime product
/// has a semiprime first factor.
pub fn semidirect_sweep(orders: &[usize], max_order: usize) -> Result<SemidirectSweep> {
    let mut braces: BTreeMap<usize, Vec<(SkewBrace, bool, bool)>> = BTreeMap::new();
    for &n in orders {
        let list = enumerate_braces(n, &AdditiveFilter::All)?
            .braces
            .into_iter()
            .map(|b| {
                let sp = is_semiprime(&b, Mode::Fast).holds;
                let ssp = is_strongly_semiprime(&b, Mode::Fast)?.holds;
                Ok((b, sp, ssp))
            })
            .collect::<Result<_>>()?;
        braces.insert(n, list);
    }
    let mut pairs = Vec::new();
    for (&n1, l1) in &braces {
        for (&n2, l2) in &braces {
            if n1 * n2 <= max_order {
                for p in l1 {
                    for q in l2 {
                        pairs.push((p, q));
                    }
                }
            }
        }
    }
    let parts: Vec<SemidirectSweep> = pairs
        .par_iter()
        .map(|((b1, sp1, ssp1), (b2, sp2, _))| -> Result<SemidirectSweep> {
            let mut s = SemidirectSweep::default();
            for (k, spec) in enumerate_actions(b1, b2)?.into_iter().enumerate() {
                let product = semidirect_product(&spec)?;
                let sp = is_semiprime(&product.brace, Mode::Fast).holds;
                s.products += 1;
                s.both_factors_semiprime += usize::from(*sp1 && *sp2);
                s.semiprime_products += usize::from(sp);
                s.second_factor_not_semiprime += usize::from(sp && !*sp2);
                let tag = || format!("|B1|={} |B2|={} action #{k}", b1.order(), b2.order());
                if *sp1 && *sp2 {
                    s.teokin.record(sp, tag);
                }
                if sp {
                    s.princi.record(*sp1, tag);
                    if is_strongly_semiprime(&product.brace, Mode::Fast)?.holds {
                        s.strongly_semiprime_products += 1;
                        if !*ssp1 {
                            s.strong_first_factor_not_strong.push(tag());
                        }
                    }
                }
            }
            Ok(s)
        })
        .collect::<Result<_>>()?;
    let mut total = SemidirectSweep::default();
    for s in parts {
        total.products += s.products;
        total.both_factors_semiprime += s.both_factors_semiprime;
        total.semiprime_products += s.semiprime_products;
        total.second_factor_not_semiprime += s.second_factor_not_semiprime;
        total.strongly_semiprime_products += s.strongly_semiprime_products;
        total.strong_first_factor_not_strong.extend(s.strong_first_factor_not_strong);
        total.teokin.merge(s.teokin);
        total.princi.merge(s.princi);
    }
    Ok(total)
}

/// Every semidirect product of two semiprime enumerated braces of order at
/// most `max_factor_order`, checked for semiprimality. Returns the stats and
/// the number of semiprime factors found.
pub fn semiprime_factor_sweep(max_factor_order: usize) -> Result<(SuiteStats, usize)> {
    let mut factors = Vec::new();
    for n in 2..=max_factor_order {
        for b in enumerate_braces(n, &AdditiveFilter::All)?.braces {
            if is_semiprime(&b, Mode::Fast).holds {
                factors.push(b);
            }
        }
    }
    let pairs: Vec<(&SkewBrace, &SkewBrace)> = factors.iter().flat_map(|p| factors.iter().map(move |q| (p, q))).collect();
    let parts: Vec<SuiteStats> = pairs
        .par_iter()
        .map(|(b1, b2)| -> Result<SuiteStats> {
            let mut s = SuiteStats::default();
            for (k, spec) in enumerate_actions(b1, b2)?.into_iter().enumerate() {
                let product = semidirect_product(&spec)?;
                s.record(is_semiprime(&product.brace, Mode::Fast).holds, || {
                    format!("|B1|={} |B2|={} action #{k}", b1.order(), b2.order())
                });
            }
            Ok(s)
        })
        .collect::<Result<_>>()?;
    let mut total = SuiteStats::default();
    for s in parts {
        total.merge(s);
    }
    Ok((total, factors.len()))
}

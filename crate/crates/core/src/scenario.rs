//! Named reproductions of published results about skew braces.
//!
//! Each scenario runs public operations of this crate and records one
//! [`Check`] per assertion. The outcome is `PASS` when every check passes,
//! `FAIL` otherwise, and `SKIPPED` when a scenario needs an imported brace
//! that was not supplied. Imports are read from `<dir>/<id>.json` in either
//! brace format accepted by [`crate::io::parse_brace`].

use std::collections::BTreeMap;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::brace::SkewBrace;
use crate::construct::{
    are_isomorphic, brace_automorphisms, build_sign_action, enumerate_actions, inner_mult_automorphism,
    semidirect_product, SemidirectProduct, SemidirectSpec,
};
use crate::enumerate::{enumerate_braces, find_simple_abelian_s4, fingerprint, AdditiveFilter};
use crate::error::{Error, Result};
use crate::group::catalog::{alternating, cyclic, symmetric};
use crate::group::morphism::group_isomorphism;
use crate::group::FiniteGroup;
use crate::ideal::{ideal_sets, is_ideal, is_simple, nontrivial_ideals};
use crate::io::import_brace;
use crate::primality::{
    corol1_check, coro2_check, is_prime, is_semiprime, is_strongly_prime, is_strongly_semiprime, unique_ideal_criterion,
    Mode,
};
use crate::set::ElementSet;
use crate::suite::{lemid, semidirect_sweep, semiprime_factor_sweep, SuiteStats};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.pad(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub id: String,
    pub description: String,
    pub status: Status,
    pub checks: Vec<Check>,
    /// Fingerprints of the braces the scenario built or loaded.
    pub fingerprints: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug)]
pub struct ScenarioInfo {
    pub id: &'static str,
    pub description: &'static str,
    pub needs_import: bool,
}

pub const SCENARIOS: &[ScenarioInfo] = &[
    ScenarioInfo {
        id: "contro1",
        description: "order-12 brace with two brace automorphisms whose nontrivial product with trivial C2 is semiprime",
        needs_import: false,
    },
    ScenarioInfo {
        id: "sb24-remark",
        description: "the order-24 product from contro1 has one nontrivial ideal, of size 12, and is strongly prime",
        needs_import: false,
    },
    ScenarioInfo {
        id: "esem576",
        description: "non-simple strongly prime brace of order 576 built from the simple brace on S4",
        needs_import: false,
    },
    ScenarioInfo {
        id: "min48",
        description: "imported order-48 brace: one nontrivial ideal, of size 24, strongly prime, not a semidirect product",
        needs_import: true,
    },
    ScenarioInfo {
        id: "b81-804",
        description: "imported order-81 brace: only nontrivial ideal is B*B, prime, not strongly semiprime",
        needs_import: true,
    },
    ScenarioInfo {
        id: "teokin-sample",
        description: "semiprime factors give a semiprime semidirect product, all semiprime factors of order at most 24",
        needs_import: false,
    },
    ScenarioInfo {
        id: "princi-sample",
        description: "a semiprime semidirect product has a semiprime first factor, factor orders 2..12, product order at most 48",
        needs_import: false,
    },
    ScenarioInfo {
        id: "lemid-sample",
        description: "(X+I)*(Y+I) lies in (X*Y)+I on random subgroups of every brace of order at most 24",
        needs_import: false,
    },
];

/// Factor orders of the `princi-sample` sweep; products have order at most 48.
pub const PRINCI_ORDERS: [usize; 6] = [2, 3, 4, 6, 8, 12];

pub fn scenario_info(id: &str) -> Result<&'static ScenarioInfo> {
    SCENARIOS.iter().find(|s| s.id == id).ok_or_else(|| Error::UnknownScenario(id.to_string()))
}

/// Collects checks and fingerprints for one scenario.
#[derive(Default)]
struct Recorder {
    checks: Vec<Check>,
    fingerprints: BTreeMap<String, String>,
    note: Option<String>,
}

impl Recorder {
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
        passed
    }

    fn fingerprint(&mut self, name: &str, b: &SkewBrace) {
        self.fingerprints.insert(name.to_string(), fingerprint(b));
    }

    fn suite(&mut self, name: &str, s: &SuiteStats) {
        let detail = match s.violations.first() {
            None => format!("{} cases", s.cases),
            Some(v) => format!("{} of {} cases violate, first: {v}", s.violations.len(), s.cases),
        };
        self.check(name, s.ok() && s.cases > 0, detail);
    }
}

/// Runs scenario `id`. Imports are looked up in `import_dir`.
pub fn run_scenario(id: &str, import_dir: Option<&Path>) -> Result<ScenarioReport> {
    let info = scenario_info(id)?;
    let mut rec = Recorder::default();
    let mut skipped = false;
    if info.needs_import {
        match import_dir.map(|d| d.join(format!("{id}.json"))).filter(|p| p.is_file()) {
            None => {
                skipped = true;
                rec.note = Some(format!("missing import {id}.json"));
            }
            Some(path) => {
                let imported = import_brace(&path)?;
                rec.fingerprints.insert("imported".into(), imported.fingerprint.clone());
                rec.note = Some(format!("imported from {}", imported.source.display()));
                let checks = if id == "min48" { min48_checks(&imported.brace)? } else { b81_checks(&imported.brace)? };
                rec.checks.extend(checks);
            }
        }
    } else {
        match id {
            "contro1" => contro1(&mut rec)?,
            "sb24-remark" => sb24_remark(&mut rec)?,
            "esem576" => esem576(&mut rec)?,
            "teokin-sample" => {
                let (stats, factors) = semiprime_factor_sweep(24)?;
                rec.suite("semiprime factors give a semiprime product", &stats);
                rec.note = Some(format!("{factors} semiprime braces of order at most 24, {} products", stats.cases));
            }
            "princi-sample" => {
                let sweep = semidirect_sweep(&PRINCI_ORDERS, 48)?;
                rec.suite("semiprime product has a semiprime first factor", &sweep.princi);
                rec.note = Some(format!(
                    "{} products, {} semiprime, {} semiprime with a non-semiprime second factor; \
                     {} strongly semiprime, {} of them with a first factor that is not",
                    sweep.products,
                    sweep.semiprime_products,
                    sweep.second_factor_not_semiprime,
                    sweep.strongly_semiprime_products,
                    sweep.strong_first_factor_not_strong.len()
                ));
            }
            "lemid-sample" => {
                let mut rng = ChaCha8Rng::seed_from_u64(0x1e31d);
                let mut stats = SuiteStats::default();
                for n in 2..=24 {
                    for b in enumerate_braces(n, &AdditiveFilter::All)?.braces {
                        stats.merge(lemid(&b, &mut rng, 2));
                    }
                }
                rec.suite("(X+I)*(Y+I) ⊆ (X*Y)+I", &stats);
            }
            _ => return Err(Error::UnknownScenario(id.to_string())),
        }
    }
    let status = if skipped {
        Status::Skipped
    } else if rec.checks.iter().all(|c| c.passed) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(ScenarioReport {
        id: id.to_string(),
        description: info.description.to_string(),
        status,
        checks: rec.checks,
        fingerprints: rec.fingerprints,
        note: rec.note,
    })
}

/// The order-12 brace `B1` with two brace automorphisms, the trivial brace
/// `B2` on `C2`, and their product via the nontrivial action.
#[derive(Clone, Debug)]
pub struct Contro1 {
    pub b1: SkewBrace,
    pub b2: SkewBrace,
    pub spec: SemidirectSpec,
    pub product: SemidirectProduct,
    /// Order-12 braces with two automorphisms and a semiprime nontrivial product.
    pub candidates: usize,
    /// Number of actions of `B2` on `B1`, the trivial one included.
    pub actions: usize,
    pub automorphisms: usize,
}

/// Searches the order-12 braces, in enumeration order, for one with
/// `|Aut(B1)| = 2` whose product with trivial `C2` via the nontrivial action
/// is semiprime.
pub fn contro1_instance() -> Result<Contro1> {
    let b2 = SkewBrace::trivial(&cyclic(2));
    let mut found: Option<Contro1> = None;
    let mut candidates = 0;
    for b1 in enumerate_braces(12, &AdditiveFilter::All)?.braces {
        let automorphisms = brace_automorphisms(&b1, b1.order())?.len();
        if automorphisms != 2 {
            continue;
        }
        let actions = enumerate_actions(&b1, &b2)?;
        let Some(spec) = actions.iter().find(|s| !s.is_trivial_action()).cloned() else { continue };
        let product = semidirect_product(&spec)?;
        if !is_semiprime(&product.brace, Mode::Fast).holds {
            continue;
        }
        candidates += 1;
        if found.is_none() {
            found = Some(Contro1 {
                b1,
                b2: b2.clone(),
                spec,
                product,
                candidates: 0,
                actions: actions.len(),
                automorphisms,
            });
        }
    }
    let mut c = found.ok_or_else(|| Error::SearchFailed("no order-12 brace with the required properties".into()))?;
    c.candidates = candidates;
    Ok(c)
}

fn contro1(rec: &mut Recorder) -> Result<()> {
    let c = contro1_instance()?;
    rec.fingerprint("b1", &c.b1);
    rec.fingerprint("product", &c.product.brace);
    rec.check("a candidate exists", c.candidates >= 1, format!("{} candidates", c.candidates));
    rec.check("|Aut(B1)| = 2", c.automorphisms == 2, format!("{} automorphisms", c.automorphisms));
    rec.check("exactly one nontrivial action", c.actions == 2, format!("{} actions in total", c.actions));
    let fast = is_semiprime(&c.product.brace, Mode::Fast);
    let oracle = is_semiprime(&c.product.brace, Mode::Oracle);
    rec.check("product is semiprime", fast.holds && oracle.holds, format!("fast {} oracle {}", fast.holds, oracle.holds));
    let full = c.b2.full_set();
    let square = c.b2.star_subgroup(&full, &full);
    rec.check("B2*B2 = 0", square.is_zero(), format!("{:?}", square.elements()));
    let b2_sp = is_semiprime(&c.b2, Mode::Fast);
    rec.check(
        "B2 is not semiprime",
        !b2_sp.holds && b2_sp.witness.as_ref().is_some_and(|w| w.verify(&c.b2)),
        "verified witness",
    );
    rec.check("B1 is semiprime", is_semiprime(&c.b1, Mode::Fast).holds, "");
    Ok(())
}

fn sb24_remark(rec: &mut Recorder) -> Result<()> {
    let c = contro1_instance()?;
    let b = &c.product.brace;
    rec.fingerprint("product", b);
    let ideals = nontrivial_ideals(b);
    let sizes: Vec<usize> = ideals.iter().map(ElementSet::len).collect();
    let unique = rec.check("one nontrivial ideal, of size 12", sizes == [12], format!("sizes {sizes:?}"));
    if unique {
        let (sub, _) = b.sub_brace(&ideals[0])?;
        rec.fingerprint("ideal", &sub);
        rec.check("ideal is simple", is_simple(&sub), "");
        rec.check("ideal is not trivial", !sub.is_trivial(), "");
    }
    rec.check("unique-ideal criterion", unique_ideal_criterion(b)?.is_some(), "");
    let fast = is_strongly_prime(b, Mode::Fast)?.holds;
    let oracle = is_strongly_prime(b, Mode::Oracle)?.holds;
    rec.check("strongly prime", fast && oracle, format!("fast {fast} oracle {oracle}"));
    Ok(())
}

fn subgroup_of(g: &FiniteGroup, h: &ElementSet) -> Result<FiniteGroup> {
    FiniteGroup::from_elements(h.elements(), |a, b| g.op(*a, *b))
}

fn esem576(rec: &mut Recorder) -> Result<()> {
    let s = find_simple_abelian_s4()?;
    let b1 = &s.brace;
    rec.fingerprint("b1", b1);
    rec.check("B1 is simple", is_simple(b1), format!("{} matching classes", s.matches));
    rec.check("B1 is of abelian type", b1.is_abelian_type(), s.additive_group.clone());
    rec.check("(B1, ∘) ≅ S4", group_isomorphism(b1.mul_group(), &symmetric(4)?).is_some(), "");
    let tau = inner_mult_automorphism(b1, s.b);
    rec.check(
        "i_b is a brace automorphism of order 2",
        b1.mul_group().element_order(s.b) == 2 && tau.is_automorphism() && tau.compose(&tau, b1).is_identity(),
        format!("b = {}", s.b),
    );
    let spec = build_sign_action(b1, b1, &tau)?;
    let kernel = spec.kernel();
    let a4 = group_isomorphism(&subgroup_of(b1.mul_group(), &kernel)?, &alternating(4)?).is_some();
    rec.check("Ker(α) ≅ A4", kernel.len() == 12 && a4, format!("|Ker| = {}", kernel.len()));
    let product = semidirect_product(&spec)?;
    let b = &product.brace;
    rec.fingerprint("product", b);
    rec.check("product has order 576", b.order() == 576, "");
    let corol1 = corol1_check(&spec, &product)?;
    rec.check("corol1_check", corol1, "");
    let coro2 = coro2_check(&spec, &product)?;
    rec.note = Some(format!("coro2_check = {coro2}"));
    let ideals = nontrivial_ideals(b);
    rec.check(
        "one nontrivial ideal, equal to B1 × {0}",
        ideals.len() == 1 && ideals[0] == product.b1_copy,
        format!("sizes {:?}", ideals.iter().map(ElementSet::len).collect::<Vec<_>>()),
    );
    rec.check("not simple", !is_simple(b), "");
    rec.check("unique-ideal criterion", unique_ideal_criterion(b)?.is_some(), "");
    rec.check("strongly prime (closure decider)", is_strongly_prime(b, Mode::Fast)?.holds, "");
    Ok(())
}

/// Assertions about an order-48 brace with one nontrivial ideal `I` of size
/// 24, including the two obstructions to writing it as `I ⋊ C2`.
pub fn min48_checks(b: &SkewBrace) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    rec.check("order 48", b.order() == 48, format!("order {}", b.order()));
    rec.check("of abelian type", b.is_abelian_type(), "");
    let ideals = nontrivial_ideals(b);
    let sizes: Vec<usize> = ideals.iter().map(ElementSet::len).collect();
    let unique = rec.check("one nontrivial ideal, of size 24", sizes == [24], format!("sizes {sizes:?}"));
    rec.check("strongly prime (unique-ideal criterion)", unique_ideal_criterion(b)?.is_some(), "");
    rec.check("strongly prime (closure decider)", is_strongly_prime(b, Mode::Fast)?.holds, "");
    if unique {
        let (sub, _) = b.sub_brace(&ideals[0])?;
        rec.check("ideal is simple", is_simple(&sub), "");
        rec.check("ideal is not trivial", !sub.is_trivial(), "");
        // (a): nontrivial actions of trivial C2 on I give one product up to
        // isomorphism, and it has an ideal of size 2
        let c2 = SkewBrace::trivial(&cyclic(2));
        let mut classes: Vec<SkewBrace> = Vec::new();
        let mut all_have_size_two = true;
        for spec in enumerate_actions(&sub, &c2)?.into_iter().filter(|s| !s.is_trivial_action()) {
            let p = semidirect_product(&spec)?.brace;
            all_have_size_two &= ideal_sets(&p).iter().any(|i| i.len() == 2);
            let mut new = true;
            for q in &classes {
                if are_isomorphic(&p, q, p.order())?.is_some() {
                    new = false;
                    break;
                }
            }
            if new {
                classes.push(p);
            }
        }
        rec.check(
            "obstruction (a): unique nontrivial I ⋊ C2 has an ideal of size 2",
            classes.len() == 1 && all_have_size_two,
            format!("{} isomorphism classes of products", classes.len()),
        );
    }
    let two = ideal_sets(b).iter().any(|i| i.len() == 2);
    rec.check("obstruction (b): no ideal of size 2", !two, "");
    Ok(rec.checks)
}

/// Assertions about an order-81 brace whose only nontrivial ideal is `B*B`.
pub fn b81_checks(b: &SkewBrace) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    rec.check("order 81", b.order() == 81, format!("order {}", b.order()));
    rec.checks.extend(star_square_checks(b)?);
    Ok(rec.checks)
}

/// The order-independent part of [`b81_checks`]: the only nontrivial ideal
/// is `B*B`, which is not trivial as a brace; `B` is prime but not strongly
/// semiprime.
pub fn star_square_checks(b: &SkewBrace) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    let full = b.full_set();
    let bb = b.star_subgroup(&full, &full);
    let ideals = nontrivial_ideals(b);
    let only = ideals.len() == 1 && ideals[0] == bb;
    rec.check("only nontrivial ideal is B*B", only, format!("|B*B| = {}, {} nontrivial ideals", bb.len(), ideals.len()));
    if is_ideal(b, &bb) && !bb.is_zero() {
        let (sub, _) = b.sub_brace(&bb)?;
        rec.check("B*B is not trivial as a brace", !sub.is_trivial(), "");
    }
    let fast = is_prime(b, Mode::Fast).holds;
    let oracle = is_prime(b, Mode::Oracle).holds;
    rec.check("prime", fast && oracle, format!("fast {fast} oracle {oracle}"));
    let ss = is_strongly_semiprime(b, Mode::Fast)?;
    rec.check(
        "not strongly semiprime",
        !ss.holds && ss.witness.as_ref().is_some_and(|w| w.verify(b)),
        ss.witness.as_ref().map_or(String::new(), |w| format!("zero after {} star steps", w.steps.len())),
    );
    Ok(rec.checks)
}

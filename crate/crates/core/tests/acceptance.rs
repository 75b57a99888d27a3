//! Acceptance run: one PASS/FAIL line per criterion, with timings.
//!
//! Set `SKEWBRACE_IMPORT_DIR` to a directory holding `min48.json` and
//! `b81-804.json` to run the import-dependent scenarios against real exports.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::Raw;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewbrace::group::catalog::groups_of_order;
use skewbrace::ideal::ideal_sets;
use skewbrace::primality::{is_prime, is_semiprime, report_counters};
use skewbrace::scenario::{run_scenario, Status, PRINCI_ORDERS};
use skewbrace::suite::{lemchiav, lemid, lemind2, lempre, prodid, projid, semidirect_sweep, semiprime_factor_sweep, SuiteStats};
use skewbrace::{enumerate_braces, primality_report, validate_brace, AdditiveFilter, Error, Mode, SkewBrace};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn braces_upto(max: usize) -> Vec<SkewBrace> {
    common::braces_upto(max)
}

fn criterion_1() -> Outcome {
    let mut slowest = Duration::ZERO;
    let mut accepted = 0;
    for n in 1..=24 {
        for e in groups_of_order(n).unwrap() {
            let t = Instant::now();
            let ok = validate_brace(e.group.clone(), e.group.clone()).is_ok();
            slowest = slowest.max(t.elapsed());
            if !ok {
                return outcome(false, format!("trivial brace on {} rejected", e.name));
            }
            accepted += 1;
        }
    }
    for p in [2, 3, 5] {
        let b = SkewBrace::mod_p_squared(p).unwrap();
        let t = Instant::now();
        let ok = validate_brace(b.add_group().clone(), b.mul_group().clone()).is_ok();
        slowest = slowest.max(t.elapsed());
        if !ok || Raw::of(&b).law_violation().is_some() {
            return outcome(false, format!("mod {p}^2 brace rejected"));
        }
        accepted += 1;
    }
    // corrupt the multiplicative table of nontrivial braces by swapping two
    // labels, which keeps it a group table
    let pool: Vec<SkewBrace> = [8, 12, 16, 24]
        .into_iter()
        .flat_map(|n| enumerate_braces(n, &AdditiveFilter::All).unwrap().braces)
        .filter(|b| !b.is_trivial())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0xb7ace);
    let mut rejected = 0;
    let mut tries = 0;
    while rejected < 25 && tries < 1000 {
        tries += 1;
        let b = &pool[rng.gen_range(0..pool.len())];
        let n = b.order();
        let (i, j) = (rng.gen_range(1..n), rng.gen_range(1..n));
        if i == j {
            continue;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, j);
        let mul = b.mul_group().relabel(&perm).unwrap();
        let raw = Raw::new(b.add_group().rows(), mul.rows());
        let t = Instant::now();
        let result = validate_brace(b.add_group().clone(), mul);
        slowest = slowest.max(t.elapsed());
        match result {
            Err(Error::BraceLawViolation { a, b: y, c }) => {
                let lhs = raw.mul[a][raw.add[y][c]];
                let rhs = raw.add[raw.add[raw.mul[a][y]][raw.neg[a]]][raw.mul[a][c]];
                if lhs == rhs {
                    return outcome(false, format!("named triple ({a},{y},{c}) does not violate the law"));
                }
                rejected += 1;
            }
            Ok(_) if raw.law_violation().is_none() => {}
            other => return outcome(false, format!("unexpected result {other:?}")),
        }
    }
    let fast = slowest < Duration::from_secs(1);
    outcome(
        rejected >= 10 && fast,
        format!("{accepted} accepted, {rejected} corruptions rejected with verified triples, slowest {slowest:?}"),
    )
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for b in braces_upto(16) {
        let raw = Raw::of(&b);
        let mut got: Vec<u64> = ideal_sets(&b).iter().map(common::mask).collect();
        let mut want = raw.ideals();
        got.sort_unstable();
        want.sort_unstable();
        if got != want {
            return outcome(false, format!("ideal lattice differs on a brace of order {}", b.order()));
        }
        let fast = (is_semiprime(&b, Mode::Fast).holds, is_prime(&b, Mode::Fast).holds);
        let oracle = (is_semiprime(&b, Mode::Oracle).holds, is_prime(&b, Mode::Oracle).holds);
        if fast != (raw.semiprime(), raw.prime()) || oracle != fast {
            return outcome(false, format!("deciders disagree on a brace of order {}", b.order()));
        }
        for mode in [Mode::Fast, Mode::Oracle] {
            if primality_report(&b, mode).is_err() {
                return outcome(false, "primality report inconsistent");
            }
        }
        count += 1;
    }
    outcome(true, format!("{count} braces"))
}

fn suite_line(name: &str, s: &SuiteStats) -> String {
    match s.violations.first() {
        None => format!("{name} {}", s.cases),
        Some(v) => format!("{name} {} violations ({v})", s.violations.len()),
    }
}

fn criterion_3() -> Outcome {
    let braces = braces_upto(24);
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e3a);
    let mut parts: Vec<(&str, SuiteStats)> =
        ["prodid", "lempre", "lemind2", "lemid", "lemchiav", "projid"].into_iter().map(|n| (n, SuiteStats::default())).collect();
    for b in &braces {
        parts[0].1.merge(prodid(b));
        parts[1].1.merge(lempre(b).unwrap());
        parts[2].1.merge(lemind2(b));
        parts[3].1.merge(lemid(b, &mut rng, 1));
        parts[4].1.merge(lemchiav(b, &mut rng, 1));
    }
    for b1 in braces.iter().filter(|b| b.order() >= 2) {
        for b2 in braces.iter().filter(|b| b.order() >= 2 && b.order() * b1.order() <= 24) {
            parts[5].1.merge(projid(b1, b2).unwrap());
        }
    }
    let ok = parts.iter().all(|(_, s)| s.ok()) && parts[3].1.cases >= 1000 && parts[4].1.cases >= 1000;
    let detail: Vec<String> = parts.iter().map(|(n, s)| suite_line(n, s)).collect();
    outcome(ok, format!("cases: {}", detail.join(", ")))
}

fn criterion_4() -> Outcome {
    let sweep = semidirect_sweep(&PRINCI_ORDERS, 48).unwrap();
    let (wide, factors) = semiprime_factor_sweep(24).unwrap();
    let ok = sweep.teokin.ok() && sweep.princi.ok() && wide.ok();
    outcome(
        ok,
        format!(
            "{} products; both factors semiprime in {} ({}); {} semiprime products, first factor semiprime in all ({}); \
             all {} semiprime factors of order at most 24: {}; \
             open question, strongly semiprime products with a first factor that is not: {} of {}",
            sweep.products,
            sweep.both_factors_semiprime,
            suite_line("violations among", &sweep.teokin),
            sweep.semiprime_products,
            suite_line("checked", &sweep.princi),
            factors,
            suite_line("products", &wide),
            sweep.strong_first_factor_not_strong.len(),
            sweep.strongly_semiprime_products
        ),
    )
}

fn scenario(id: &str, import: Option<&std::path::Path>) -> Outcome {
    match run_scenario(id, import) {
        Ok(r) => {
            let failed: Vec<String> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
            let detail = if failed.is_empty() {
                format!("{} {} checks", r.status, r.checks.len())
            } else {
                format!("{} failed: {}", r.status, failed.join("; "))
            };
            outcome(r.status == Status::Pass, detail)
        }
        Err(e) => outcome(false, format!("error: {e}")),
    }
}

fn criterion_8() -> Outcome {
    // a report for every small brace on top of those built above
    for b in braces_upto(12) {
        if primality_report(&b, Mode::Fast).is_err() {
            break;
        }
    }
    let (reports, violations) = report_counters();
    outcome(reports > 0 && violations == 0, format!("{reports} reports, {violations} violations"))
}

fn criterion_9() -> Outcome {
    let mut lines = Vec::new();
    for id in ["min48", "b81-804"] {
        match run_scenario(id, None) {
            Ok(r) if r.status == Status::Skipped => lines.push(format!("{id} SKIPPED without import")),
            Ok(r) => return outcome(false, format!("{id} {} without import", r.status)),
            Err(e) => return outcome(false, format!("{id} error without import: {e}")),
        }
    }
    match std::env::var_os("SKEWBRACE_IMPORT_DIR").map(PathBuf::from) {
        Some(dir) => {
            for id in ["min48", "b81-804"] {
                let o = scenario(id, Some(&dir));
                if !o.passed {
                    return outcome(false, format!("{id} with import: {}", o.detail));
                }
                lines.push(format!("{id} with import: {}", o.detail));
            }
        }
        None => lines.push("no import directory given, import assertions not exercised".into()),
    }
    outcome(true, lines.join("; "))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("brace-law validation", criterion_1),
        ("oracle equivalence up to order 16", criterion_2),
        ("lemma suite up to order 24", criterion_3),
        ("semiprime transfer for semidirect products", criterion_4),
        ("contro1", || scenario("contro1", None)),
        ("esem576", || scenario("esem576", None)),
        ("sb24-remark", || scenario("sb24-remark", None)),
        ("implication chain on primality reports", criterion_8),
        ("import-dependent scenarios", criterion_9),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        let status = if o.passed { "PASS" } else { "FAIL" };
        failures += usize::from(!o.passed);
        println!("{status} {} {name} [{:.2?}] {}", k + 1, t.elapsed(), o.detail);
    }
    if failures > 0 {
        std::process::exit(1);
    }
}

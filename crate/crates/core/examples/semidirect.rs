//! Semidirect products of braces, actions by brace automorphisms and the
//! projection and lift properties of their ideals.
//!
//! ```bash
//! cargo run --example semidirect
//! ```

use skewbrace::group::catalog::{abelian, cyclic};
use skewbrace::ideal::ideal_sets;
use skewbrace::{brace_automorphisms, enumerate_actions, projection_checks, semidirect_product, SkewBrace};

fn main() -> skewbrace::Result<()> {
    let b1 = SkewBrace::trivial(&abelian(&[2, 2])?);
    let b2 = SkewBrace::trivial(&cyclic(3));
    println!("|Aut(B1)| = {}", brace_automorphisms(&b1, 64)?.len());

    let actions = enumerate_actions(&b1, &b2)?;
    println!("{} actions of C3 on C2xC2", actions.len());
    for (k, spec) in actions.iter().enumerate() {
        let p = semidirect_product(spec)?;
        let ideals = ideal_sets(&p.brace);
        let sizes: Vec<usize> = ideals.iter().map(|i| i.len()).collect();
        println!(
            "  action {k}: trivial={} |Ker|={} additive abelian={} multiplicative abelian={} ideal sizes {sizes:?}",
            spec.is_trivial_action(),
            spec.kernel().len(),
            p.brace.add_group().is_abelian(),
            p.brace.mul_group().is_abelian(),
        );
        for ideal in ideals {
            let report = projection_checks(spec, &p, ideal)?;
            assert!(report.holds());
        }
    }
    Ok(())
}

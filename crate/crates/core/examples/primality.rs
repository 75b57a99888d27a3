//! Semiprime, prime, strongly semiprime and strongly prime braces, with the
//! star-product chains that witness failures.
//!
//! ```bash
//! cargo run --example primality
//! ```

use skewbrace::group::catalog::{alternating, cyclic};
use skewbrace::primality::{is_semiprime, primality_report, unique_ideal_criterion};
use skewbrace::{Mode, SkewBrace};

fn main() -> skewbrace::Result<()> {
    let braces = [
        ("trivial C6", SkewBrace::trivial(&cyclic(6))),
        ("Z/9", SkewBrace::mod_p_squared(3)?),
        ("opposite A4", SkewBrace::opposite(&alternating(4)?)),
        ("opposite A5", SkewBrace::opposite(&alternating(5)?)),
    ];
    for (name, b) in &braces {
        let r = primality_report(b, Mode::Fast)?;
        println!(
            "{name:<12} semiprime={:<5} prime={:<5} strongly semiprime={:<5} strongly prime={:<5}",
            r.semiprime, r.prime, r.strongly_semiprime, r.strongly_prime
        );
        let oracle = primality_report(b, Mode::Oracle)?;
        assert_eq!((r.semiprime, r.prime), (oracle.semiprime, oracle.prime));
    }

    let b = SkewBrace::trivial(&cyclic(4));
    let d = is_semiprime(&b, Mode::Fast);
    if let Some(chain) = d.witness {
        let sizes: Vec<usize> = chain.ideals.iter().map(|i| i.len()).collect();
        println!("trivial C4: ideal of size {sizes:?} squares to zero, verified: {}", chain.verify(&b));
    }

    let a5 = SkewBrace::opposite(&alternating(5)?);
    println!("unique-ideal criterion on opposite A5: {:?}", unique_ideal_criterion(&a5)?.is_some());
    Ok(())
}

//! A semiprime semidirect product whose second factor is not semiprime,
//! and the strongly prime order-24 brace it produces.
//!
//! ```bash
//! cargo run --release --example counterexample_order_24
//! ```

use skewbrace::ideal::nontrivial_ideals;
use skewbrace::primality::{is_semiprime, is_strongly_prime};
use skewbrace::scenario::contro1_instance;
use skewbrace::{fingerprint, is_simple, Mode};

fn main() -> skewbrace::Result<()> {
    let c = contro1_instance()?;
    println!("B1: order {}, additive group abelian: {}", c.b1.order(), c.b1.add_group().is_abelian());
    println!("B1 fingerprint {}", fingerprint(&c.b1));
    println!("{} candidate(s); |Aut(B1)| = {}; {} actions of C2", c.candidates, c.automorphisms, c.actions);
    println!("B1 semiprime: {}", is_semiprime(&c.b1, Mode::Fast).holds);
    println!("B2 semiprime: {}", is_semiprime(&c.b2, Mode::Fast).holds);
    println!("product semiprime: {}", is_semiprime(&c.product.brace, Mode::Fast).holds);

    let b = &c.product.brace;
    let ideals = nontrivial_ideals(b);
    println!("product ideals: {:?}", ideals.iter().map(|i| i.len()).collect::<Vec<_>>());
    if let [i] = ideals.as_slice() {
        let (sub, _) = b.sub_brace(i)?;
        println!("ideal simple: {}, trivial: {}", is_simple(&sub), sub.is_trivial());
    }
    println!("product strongly prime: {}", is_strongly_prime(b, Mode::Fast)?.holds);
    Ok(())
}

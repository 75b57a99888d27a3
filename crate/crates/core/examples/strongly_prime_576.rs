//! A non-simple strongly prime brace with 576 elements.
//!
//! Starts from the simple brace of abelian type of order 24 whose
//! multiplicative group is `S4`, lets the same brace act on it through the
//! sign of `S4` (odd elements act by an inner automorphism that also
//! preserves addition), and checks the product.
//!
//! ```bash
//! cargo run --release --example strongly_prime_576
//! ```

use std::time::Instant;

use skewbrace::ideal::nontrivial_ideals;
use skewbrace::primality::{corol1_check, coro2_check, is_strongly_prime, unique_ideal_criterion};
use skewbrace::{build_sign_action, find_simple_abelian_s4, inner_mult_automorphism, semidirect_product, Mode};

fn main() -> skewbrace::Result<()> {
    let start = Instant::now();
    let s = find_simple_abelian_s4()?;
    println!("B1: simple, additive group {}, {} matching class(es)", s.additive_group, s.matches);
    let tau = inner_mult_automorphism(&s.brace, s.b);
    println!("b = {}; i_b automorphism: {}", s.b, tau.is_automorphism());

    // B2 is B1 itself; its elements outside the index-2 subgroup act by i_b
    let spec = build_sign_action(&s.brace, &s.brace, &tau)?;
    println!("|Ker(α)| = {}", spec.kernel().len());
    let product = semidirect_product(&spec)?;
    let b = &product.brace;
    println!("product has {} elements", b.order());
    println!("corol1: {}  coro2: {}", corol1_check(&spec, &product)?, coro2_check(&spec, &product)?);

    let ideals = nontrivial_ideals(b);
    println!("nontrivial ideals: {:?}", ideals.iter().map(|i| i.len()).collect::<Vec<_>>());
    println!("it is B1 × {{0}}: {}", ideals.first() == Some(&product.b1_copy));
    println!("unique-ideal criterion: {}", unique_ideal_criterion(b)?.is_some());
    println!("strongly prime: {}", is_strongly_prime(b, Mode::Fast)?.holds);
    println!("done in {:.2?}", start.elapsed());
    Ok(())
}

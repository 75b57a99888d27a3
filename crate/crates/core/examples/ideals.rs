//! The ideal lattice of a brace, minimal ideals and quotients.
//!
//! ```bash
//! cargo run --example ideals
//! ```

use skewbrace::group::catalog::{cyclic, symmetric};
use skewbrace::{all_ideals, is_simple, minimal_ideals, principal_ideal, quotient_brace, SkewBrace};

fn main() -> skewbrace::Result<()> {
    let b = SkewBrace::mod_p_squared(5)?;
    for h in all_ideals(&b) {
        println!("ideal of size {:>2} minimal={:?}", h.len(), h.is_minimal);
    }
    let q = quotient_brace(&b, &principal_ideal(&b, 5).set)?;
    println!("quotient by <5> has order {} and is trivial: {}", q.brace.order(), q.brace.is_trivial());

    let s4 = SkewBrace::opposite(&symmetric(4)?);
    let sizes: Vec<usize> = all_ideals(&s4).iter().map(|h| h.len()).collect();
    println!("opposite brace of S4: ideal sizes {sizes:?}");
    let mins: Vec<usize> = minimal_ideals(&s4).iter().map(|h| h.len()).collect();
    println!("minimal ideal sizes {mins:?}");

    println!("trivial C7 simple: {}", is_simple(&SkewBrace::trivial(&cyclic(7))));
    println!("trivial C6 simple: {}", is_simple(&SkewBrace::trivial(&cyclic(6))));
    Ok(())
}

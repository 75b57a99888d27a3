//! Building and validating skew braces; the λ-maps and the star operation.
//!
//! ```bash
//! cargo run --example braces
//! ```

use skewbrace::group::catalog::{cyclic, symmetric};
use skewbrace::{validate_brace, Error, SkewBrace};

fn main() -> skewbrace::Result<()> {
    let b = SkewBrace::mod_p_squared(3)?;
    println!("order {} brace on Z/9, abelian type: {}", b.order(), b.is_abelian_type());
    println!("1 ∘ 1 = {}", b.mul(1, 1));
    println!("λ_1 = {:?}", b.lambda_map(1).mapping());
    println!("1 * 1 = {}", b.star(1, 1));
    let full = b.full_set();
    println!("B*B = {:?}", b.star_subgroup(&full, &full).elements());

    let s3 = symmetric(3)?;
    let trivial = SkewBrace::trivial(&s3);
    let opposite = SkewBrace::opposite(&s3);
    println!("trivial S3 brace is trivial: {}", trivial.is_trivial());
    println!("opposite S3 brace is trivial: {}", opposite.is_trivial());

    // relabeling the multiplicative table breaks the brace law
    let bad = cyclic(4).relabel(&[0, 2, 1, 3])?;
    match validate_brace(cyclic(4), bad) {
        Err(Error::BraceLawViolation { a, b, c }) => println!("rejected: law fails at ({a}, {b}, {c})"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}

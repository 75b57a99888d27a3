//! Counting skew braces of small order up to isomorphism.
//!
//! ```bash
//! cargo run --release --example enumerate -- 8 12 24
//! ```

use skewbrace::{enumerate_braces, AdditiveFilter};

fn main() -> skewbrace::Result<()> {
    let orders: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let orders = if orders.is_empty() { (1..=12).collect() } else { orders };
    for n in orders {
        let all = enumerate_braces(n, &AdditiveFilter::All)?;
        let abelian = enumerate_braces(n, &AdditiveFilter::Abelian)?;
        println!("order {n:>3}: {:>5} braces, {:>4} of abelian type", all.count, abelian.count);
        for (k, entry) in all.additive_groups.iter().enumerate() {
            let on = all.additive_of.iter().filter(|&&g| g == k).count();
            println!("    {:<12} {on}", entry.name);
        }
    }
    Ok(())
}

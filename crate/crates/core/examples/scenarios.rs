//! Runs every named reproduction and prints one line per scenario.
//!
//! ```bash
//! cargo run --release --example scenarios -- [import-dir]
//! ```

use std::path::PathBuf;

use skewbrace::scenario::{run_scenario, SCENARIOS};

fn main() -> skewbrace::Result<()> {
    let import: Option<PathBuf> = std::env::args().nth(1).map(PathBuf::from);
    for s in SCENARIOS {
        let r = run_scenario(s.id, import.as_deref())?;
        println!("{:<8} {:<14} {}", r.status, r.id, r.description);
        for c in r.checks.iter().filter(|c| !c.passed) {
            println!("         failed: {} ({})", c.name, c.detail);
        }
    }
    Ok(())
}

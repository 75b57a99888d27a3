//! Writing braces in the JSON and plain-text formats and reading them back.
//!
//! ```bash
//! cargo run --example import_export
//! ```

use std::fs;

use skewbrace::io::{import_brace, to_plain_text, write_json, BraceJson, SpecJson};
use skewbrace::group::catalog::{abelian, cyclic};
use skewbrace::{enumerate_actions, SkewBrace};

fn main() -> skewbrace::Result<()> {
    let dir = std::env::temp_dir().join(format!("skewbrace-example-{}", std::process::id()));
    fs::create_dir_all(&dir)?;

    let b = SkewBrace::mod_p_squared(2)?;
    let json = dir.join("z4.json");
    write_json(&json, &BraceJson::from_brace(&b))?;
    let text = dir.join("z4.txt");
    fs::write(&text, to_plain_text(&b))?;
    print!("{}", fs::read_to_string(&text)?);

    for path in [&json, &text] {
        let imported = import_brace(path)?;
        println!("{}: same tables {}, fingerprint {}", path.display(), imported.brace == b, imported.fingerprint);
    }

    let b1 = SkewBrace::trivial(&abelian(&[2, 2])?);
    let b2 = SkewBrace::trivial(&cyclic(2));
    let spec = enumerate_actions(&b1, &b2)?.pop().expect("at least the trivial action");
    let spec_path = dir.join("spec.json");
    write_json(&spec_path, &SpecJson::from_spec(&spec))?;
    println!("spec written to {}", spec_path.display());

    fs::remove_dir_all(&dir)?;
    Ok(())
}

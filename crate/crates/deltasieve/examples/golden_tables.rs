//! Regenerate the reference tables and compare them with the checked-in fixtures.
//!
//! cargo run --example golden_tables -- [OUT_DIR]

use std::path::PathBuf;

use deltasieve::golden::{catalog, golden_tables};

fn main() -> deltasieve::Result<()> {
    let out = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("deltasieve_golden"));
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    golden_tables(&out, None)?;
    for e in catalog()? {
        let name = e.file_name();
        let (Ok(got), Ok(want)) = (std::fs::read_to_string(out.join(&name)), std::fs::read_to_string(fixtures.join(&name))) else {
            println!("{name}: not generated");
            continue;
        };
        let status = if got == want { "identical" } else { "differs" };
        println!("{name}: {status}");
    }
    println!("written to {}", out.display());
    Ok(())
}

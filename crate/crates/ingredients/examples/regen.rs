//! Rebuilds every catalog data file and checksums.txt. Run with the output
//! directory as the only argument (defaults to this crate's data dir).

use std::path::PathBuf;
use std::time::Instant;

fn main() {
    let dir: PathBuf = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "crates/ingredients/data".into())
        .into();
    let t0 = Instant::now();
    match sb_ingredients::catalog::regenerate(&dir) {
        Ok(written) => {
            for (id, prov) in &written {
                println!("{id} ({prov})");
            }
            println!(
                "{} entries regenerated into {} in {:.1?}",
                written.len(),
                dir.display(),
                t0.elapsed()
            );
        }
        Err(e) => {
            eprintln!("regeneration failed: {e}");
            std::process::exit(1);
        }
    }
}

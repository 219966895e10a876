//! Round-trip a dataset through JSON and write every built-in to a directory.
//!
//! `cargo run --example export_data -- <dir>`

use std::path::PathBuf;

use motivic_zeta::harness::cli::export_documents;
use motivic_zeta::harness::examples::cusp;
use motivic_zeta::harness::io::{data_from_json, data_to_json};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = data_to_json(&cusp());
    print!("{text}");
    assert_eq!(data_from_json(&text)?, cusp());

    if let Some(dir) = std::env::args().nth(1).map(PathBuf::from) {
        std::fs::create_dir_all(&dir)?;
        let docs = export_documents();
        for (name, contents) in &docs {
            std::fs::write(dir.join(name), contents)?;
        }
        println!("wrote {} files to {}", docs.len(), dir.display());
    }
    Ok(())
}

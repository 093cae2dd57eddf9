//! Persists F series to a cache directory and reuses them from a second
//! engine.

use hodge_moduli::HodgeEngine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("hodge-cache-example-{}", std::process::id()));
    let first = HodgeEngine::with_cache_dir(&dir)?;
    let a = first.hp_full(3, 1, 3)?;

    let mut files: Vec<_> = std::fs::read_dir(&dir)?.map(|e| e.map(|e| e.file_name())).collect::<Result<_, _>>()?;
    files.sort();
    println!("cached: {files:?}");

    let second = HodgeEngine::with_cache_dir(&dir)?;
    let b = second.hp_full(3, 1, 3)?;
    println!("second engine agrees: {}", a == b);

    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

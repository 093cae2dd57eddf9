//! Hodge diamond of the rank 2, degree 1 moduli space with fixed
//! determinant, for a curve of genus given on the command line (default 3).

use hodge_moduli::cli::format::{render_latex, render_text};
use hodge_moduli::{HodgeEngine, Variant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    let report = HodgeEngine::new().report(2, 1, g, Variant::FixedDeterminant)?;
    println!("complex dimension {}", report.dim_complex);
    print!("{}", render_text(&report));
    println!();
    print!("{}", render_latex(&report));
    Ok(())
}

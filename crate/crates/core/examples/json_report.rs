//! Serializes a report, parses it back and checks the round trip.

use hodge_moduli::cli::document::OutputDocument;
use hodge_moduli::{HodgeEngine, Variant};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let report = HodgeEngine::new().report(3, 2, 2, Variant::FixedDeterminant)?;
    let json = OutputDocument::from_report(&report)?.to_json();
    print!("{json}");
    let back = OutputDocument::from_json(&json)?.to_report()?;
    assert_eq!(back, report);
    eprintln!("round trip ok");
    Ok(())
}

//! chi(t) of the fixed-determinant spaces against the product formula, and
//! the vanishing of chi(-1) and chi(1).

use hodge_moduli::oracle::chi_closed_form;
use hodge_moduli::HodgeEngine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = HodgeEngine::new();
    for (n, d) in [(2, 1), (3, 1), (4, 1)] {
        for g in 2..=3 {
            let chi = engine.chi_characteristic(n, d, g)?;
            let product = chi_closed_form(n, g)?;
            let (euler, signature) = engine.euler_and_signature(n, d, g)?;
            println!(
                "n={n} g={g}: chi = {chi}\n    matches product: {}, chi(-1) = {euler}, chi(1) = {signature}",
                chi.same_coeffs(&product)
            );
        }
    }
    Ok(())
}

//! Betti numbers of the full moduli space two ways: from the diagonal of
//! the Hodge polynomial and from the independent one-variable recursion.

use hodge_moduli::oracle::BettiRecursion;
use hodge_moduli::HodgeEngine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = HodgeEngine::new();
    let recursion = BettiRecursion::new();
    for (n, d, g) in [(2, 1, 2), (3, 1, 2), (3, 2, 3), (4, 1, 2)] {
        let diag = engine.hp_full(n, d, g)?.specialize_diag();
        let direct = recursion.poincare_full(n, d, g)?;
        println!("M({n},{d}), g={g}: {}", if diag.same_coeffs(&direct) { "agree" } else { "DIFFER" });
        println!("    P(t) = {diag}");
    }
    Ok(())
}

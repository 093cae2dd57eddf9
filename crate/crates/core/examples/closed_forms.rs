//! Rank 2 and rank 3 closed forms against the recursion, and the rank 3
//! correction split by type class.

use hodge_moduli::moduli::default_cap;
use hodge_moduli::oracle::{
    closed_form_rank2, closed_form_rank3, rank3_contribution_111, rank3_contribution_12,
    rank3_contribution_21,
};
use hodge_moduli::HodgeEngine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = HodgeEngine::new();
    for g in 2..=4 {
        let two = engine.hp_fixed_det(2, 1, g)?;
        let three = engine.hp_fixed_det(3, 1, g)?;
        println!(
            "g={g}: rank 2 {}, rank 3 {}",
            two == closed_form_rank2(g, two.cap())?,
            three == closed_form_rank3(g, three.cap())?
        );

        let cap = default_cap(3, g);
        let classes = engine.corrections_by_composition(3, 1, g, cap)?;
        let expected = [
            (vec![1, 1, 1], rank3_contribution_111(g, cap)),
            (vec![2, 1], rank3_contribution_21(g, cap)),
            (vec![1, 2], rank3_contribution_12(g, cap)),
        ];
        for (ranks, series) in expected {
            println!("    class {ranks:?}: {}", classes[&ranks] == series);
        }
    }
    Ok(())
}

//! Harder–Narasimhan types of rank 3, degree 1 on a genus 2 curve,
//! listed up to codimension 12.

use hodge_moduli::enumerate_types;

fn main() {
    let (n, d, g) = (3, 1, 2);
    let types = enumerate_types(n, d, g, 12);
    println!("{} types with codimension <= 12", types.len());
    for t in &types {
        let parts: Vec<String> = t
            .parts()
            .iter()
            .map(|p| format!("({}, {})", p.rank, p.degree))
            .collect();
        println!("codim {:>2}  {}", t.codimension(g), parts.join(" "));
    }
}

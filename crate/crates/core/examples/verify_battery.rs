//! Runs the identity battery in-process and prints the matrix.

use hodge_moduli::cli::verify;
use hodge_moduli::HodgeEngine;

fn main() {
    let results = verify::run(&HodgeEngine::new(), 3, 3);
    print!("{}", verify::render(&results));
}

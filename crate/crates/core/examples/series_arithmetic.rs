//! Truncated bivariate series: products, exact division and specializations.

use hodge_moduli::BiSeries;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cap = 6;
    let a = BiSeries::one_plus(1, 0, cap).pow(2);
    let b = BiSeries::one_plus(0, 1, cap).pow(2);
    let jac = a.mul(&b)?;
    println!("(1+x)^2 (1+y)^2         = {jac}");

    let inv = BiSeries::geom(1, 1, cap)?;
    println!("1/(1-xy) up to degree 6 = {inv}");

    let f = jac.mul(&inv)?;
    let back = f.div_exact(&inv)?;
    assert_eq!(back, jac);
    println!("dividing back recovers the product: {}", back == jac);

    println!("at x = y = t            : {}", jac.specialize_diag());
    println!("at y = -1               : {}", jac.specialize_y_minus1());
    Ok(())
}

//! Reference computations that do not go through [`crate::moduli`].
//!
//! - Closed forms of the fixed-determinant Hodge–Poincaré polynomial for
//!   ranks 2 and 3, and of the rank 2 series `F_{2,1}`, `F_{2,0}`, together
//!   with the contribution of each rank 3 type class.
//! - The chi-characteristic closed form
//!   `(prod_{r=1}^{n-1} (1 - (-t)^r)(1 - (-t)^{r+1}))^{g-1}`.
//! - The Betti-number recursion run entirely in one variable `t`. It shares
//!   only the type enumerator with the bivariate engine, so an error in the
//!   bivariate arithmetic cannot confirm itself.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::One;

use crate::error::{Error, Result};
use crate::hntypes::enumerate_types;
use crate::series::{BiSeries, UniPoly};

fn check_genus(g: u32) -> Result<()> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    Ok(())
}

fn need_cap(cap: u32, needed: u32) -> Result<()> {
    if cap < needed {
        return Err(Error::CapTooSmall { cap, needed });
    }
    Ok(())
}

/// Divides and asserts the quotient is a polynomial of top bidegree
/// `(top, top)` with leading coefficient 1.
fn polynomial_quotient(num: &BiSeries, den: &BiSeries, top: u32, name: &str) -> Result<BiSeries> {
    let q = num.div_exact(den)?;
    let fail = |detail: String| Error::consistency(format!("{name} closed form"), detail);
    if !q.is_polynomial_below(2 * top) {
        return Err(fail(format!(
            "quotient does not terminate below total degree {}",
            2 * top
        )));
    }
    if !q.coefficient(top, top)?.is_one() {
        return Err(fail(format!("coefficient of x^{top} y^{top} is not 1")));
    }
    Ok(q)
}

fn jacobian_factor(g: u32, cap: u32) -> BiSeries {
    one_plus_pow(1, 0, g, cap)
        .mul(&one_plus_pow(0, 1, g, cap))
        .expect("shared cap")
}

fn one_plus_pow(i: u32, j: u32, e: u32, cap: u32) -> BiSeries {
    BiSeries::one_plus(i, j, cap).pow(e)
}

fn product(factors: &[BiSeries]) -> BiSeries {
    let cap = factors[0].cap();
    factors
        .iter()
        .fold(BiSeries::one(cap), |acc, f| acc.mul(f).expect("shared cap"))
}

/// Fixed-determinant polynomial for rank 2, odd degree:
///
/// ```text
/// (1 + x^2 y)^g (1 + x y^2)^g - x^g y^g (1 + x)^g (1 + y)^g
/// ---------------------------------------------------------
///               (1 - xy)(1 - x^2 y^2)
/// ```
pub fn closed_form_rank2(g: u32, cap: u32) -> Result<BiSeries> {
    check_genus(g)?;
    let top = 3 * (g - 1);
    need_cap(cap, 2 * top)?;
    let lead = one_plus_pow(2, 1, g, cap).mul(&one_plus_pow(1, 2, g, cap))?;
    let tail = jacobian_factor(g, cap).shift(g, g);
    let num = lead.sub(&tail)?;
    let den = BiSeries::one_minus(1, 1, cap).mul(&BiSeries::one_minus(2, 2, cap))?;
    polynomial_quotient(&num, &den, top, "rank 2")
}

/// Fixed-determinant polynomial for rank 3, degree prime to 3: a three-term
/// numerator over `(1 - xy)(1 - x^2 y^2)^2 (1 - x^3 y^3)`.
pub fn closed_form_rank3(g: u32, cap: u32) -> Result<BiSeries> {
    check_genus(g)?;
    let top = 8 * (g - 1);
    need_cap(cap, 2 * top)?;
    let first = product(&[
        one_plus_pow(2, 3, g, cap),
        one_plus_pow(3, 2, g, cap),
        one_plus_pow(1, 2, g, cap),
        one_plus_pow(2, 1, g, cap),
    ]);
    let second = product(&[
        one_plus_pow(1, 1, 2, cap),
        jacobian_factor(g, cap),
        one_plus_pow(1, 2, g, cap),
        one_plus_pow(2, 1, g, cap),
    ])
    .shift(2 * g - 1, 2 * g - 1);
    let third = product(&[
        BiSeries::from_terms(cap, [((0, 0), 1), ((1, 1), 1), ((2, 2), 1)]),
        jacobian_factor(g, cap).pow(2),
    ])
    .shift(3 * g - 1, 3 * g - 1);
    let num = first.sub(&second)?.add(&third)?;
    let den = product(&[
        BiSeries::one_minus(1, 1, cap),
        BiSeries::one_minus(2, 2, cap).pow(2),
        BiSeries::one_minus(3, 3, cap),
    ]);
    polynomial_quotient(&num, &den, top, "rank 3")
}

/// `F_{1,d} = (1 + x)^g (1 + y)^g / (1 - xy)`.
pub fn f_rank1(g: u32, cap: u32) -> BiSeries {
    jacobian_factor(g, cap)
        .mul(&BiSeries::geom(1, 1, cap).expect("xy is non-constant"))
        .expect("shared cap")
}

fn rank2_denominator_inverse(cap: u32) -> BiSeries {
    BiSeries::geom(2, 2, cap)
        .expect("non-constant")
        .mul(&BiSeries::geom(1, 1, cap).expect("non-constant").pow(2))
        .expect("shared cap")
}

/// `F_{2,1}` in closed form:
///
/// ```text
/// (1+x)^g (1+y)^g (1+x^2 y)^g (1+x y^2)^g - (xy)^g (1+x)^{2g} (1+y)^{2g}
/// ----------------------------------------------------------------------
///                       (1 - x^2 y^2)(1 - xy)^2
/// ```
pub fn f_rank2_odd(g: u32, cap: u32) -> BiSeries {
    let jac = jacobian_factor(g, cap);
    let lead = product(&[jac.clone(), one_plus_pow(2, 1, g, cap), one_plus_pow(1, 2, g, cap)]);
    let tail = jac.pow(2).shift(g, g);
    lead.sub(&tail)
        .and_then(|num| num.mul(&rank2_denominator_inverse(cap)))
        .expect("shared cap")
}

/// `F_{2,0}` in closed form. Summing the unstable types `(r, -r)`, `r >= 1`,
/// of codimension `2r + g - 1` gives the correction
/// `(xy)^{g+1} (1+x)^{2g} (1+y)^{2g} / ((1 - x^2 y^2)(1 - xy)^2)`.
pub fn f_rank2_even(g: u32, cap: u32) -> BiSeries {
    let jac = jacobian_factor(g, cap);
    let lead = product(&[jac.clone(), one_plus_pow(2, 1, g, cap), one_plus_pow(1, 2, g, cap)]);
    let tail = jac.pow(2).shift(g + 1, g + 1);
    lead.sub(&tail)
        .and_then(|num| num.mul(&rank2_denominator_inverse(cap)))
        .expect("shared cap")
}

/// Contribution of the rank 3 types with three line-bundle quotients:
/// `(xy)^{3g+3} (1+x)^{3g} (1+y)^{3g} / ((1-xy)^3 (1-x^2 y^2)(1-x^6 y^6))`.
pub fn rank3_contribution_111(g: u32, cap: u32) -> BiSeries {
    product(&[
        jacobian_factor(g, cap).pow(3).shift(3 * g + 3, 3 * g + 3),
        BiSeries::geom(1, 1, cap).expect("non-constant").pow(3),
        BiSeries::geom(2, 2, cap).expect("non-constant"),
        BiSeries::geom(6, 6, cap).expect("non-constant"),
    ])
}

fn rank3_mixed(g: u32, cap: u32, even_shift: u32, odd_shift: u32) -> BiSeries {
    let inner = f_rank2_even(g, cap)
        .shift(even_shift, even_shift)
        .add(&f_rank2_odd(g, cap).shift(odd_shift, odd_shift))
        .expect("shared cap");
    product(&[
        jacobian_factor(g, cap),
        BiSeries::geom(1, 1, cap).expect("non-constant"),
        BiSeries::geom(6, 6, cap).expect("non-constant"),
        inner,
    ])
}

/// Contribution of the rank 3 types with quotient ranks `(2, 1)`, degree 1:
/// `(1+x)^g (1+y)^g / ((1-xy)(1-x^6 y^6)) [(xy)^{2g+2} F_{2,0} + (xy)^{2g-1} F_{2,1}]`.
pub fn rank3_contribution_21(g: u32, cap: u32) -> BiSeries {
    rank3_mixed(g, cap, 2 * g + 2, 2 * g - 1)
}

/// Contribution of the rank 3 types with quotient ranks `(1, 2)`, degree 1:
/// `(1+x)^g (1+y)^g / ((1-xy)(1-x^6 y^6)) [(xy)^{2g} F_{2,0} + (xy)^{2g+3} F_{2,1}]`.
pub fn rank3_contribution_12(g: u32, cap: u32) -> BiSeries {
    rank3_mixed(g, cap, 2 * g, 2 * g + 3)
}

/// `(prod_{r=1}^{n-1} (1 - (-t)^r)(1 - (-t)^{r+1}))^{g-1}` as an exact
/// polynomial.
pub fn chi_closed_form(n: u32, g: u32) -> Result<UniPoly> {
    check_genus(g)?;
    if n == 0 {
        return Err(Error::RankZero);
    }
    // 1 - (-t)^k = 1 - t^k for even k, 1 + t^k for odd k
    let factor = |k: u32| UniPoly::binomial(k, if k.is_multiple_of(2) { -1 } else { 1 }, None);
    let base = (1..n).fold(UniPoly::one(), |acc, r| {
        acc.mul(&factor(r)).mul(&factor(r + 1))
    });
    Ok(base.pow(g - 1))
}

/// Betti-number recursion in one variable, memoized on
/// `(n, d mod n, g, cap)`.
#[derive(Default)]
pub struct BettiRecursion {
    memo: Mutex<HashMap<(u32, u32, u32, u32), UniPoly>>,
}

impl BettiRecursion {
    pub fn new() -> Self {
        Self::default()
    }

    /// Equivariant Poincaré series of the space of all holomorphic
    /// structures: `prod_l (1 + t^{2l-1})^{2g} / ((1 - t^{2n}) prod_{l<n} (1 - t^{2l})^2)`.
    pub fn ambient(n: u32, g: u32, cap: u32) -> UniPoly {
        let mut acc = UniPoly::geom(2 * n, cap);
        for l in 1..=n {
            acc = acc.mul(&UniPoly::binomial(2 * l - 1, 1, Some(cap)).pow(2 * g));
        }
        for l in 1..n {
            acc = acc.mul(&UniPoly::geom(2 * l, cap).pow(2));
        }
        acc
    }

    /// Equivariant Poincaré series of the semistable stratum, truncated at
    /// `t^cap`.
    pub fn semistable(&self, n: u32, d: i64, g: u32, cap: u32) -> Result<UniPoly> {
        check_genus(g)?;
        if n == 0 {
            return Err(Error::RankZero);
        }
        let residue = d.rem_euclid(n as i64);
        let key = (n, residue as u32, g, cap);
        if let Some(p) = self.memo.lock().unwrap().get(&key) {
            return Ok(p.clone());
        }
        let mut acc = Self::ambient(n, g, cap);
        for mu in enumerate_types(n, residue, g, (cap / 2) as i64) {
            let mut term = UniPoly::one().truncate(cap).shift(2 * mu.codimension(g) as u32);
            for p in mu.parts() {
                term = term.mul(&self.semistable(p.rank, p.degree, g, cap)?);
            }
            acc = acc.sub(&term);
        }
        self.memo.lock().unwrap().insert(key, acc.clone());
        Ok(acc)
    }

    /// Poincaré polynomial of `M(n, d)`: `(1 - t^2)` times the semistable
    /// series, checked to terminate at degree `2 (n^2 (g - 1) + 1)`.
    pub fn poincare_full(&self, n: u32, d: i64, g: u32) -> Result<UniPoly> {
        check_genus(g)?;
        let top = 2 * (n * n * (g - 1) + 1);
        let cap = top + 2;
        let p = UniPoly::binomial(2, -1, Some(cap)).mul(&self.semistable(n, d, g, cap)?);
        if p.degree() != Some(top) {
            return Err(Error::consistency(
                "Betti recursion polynomiality",
                format!("degree {:?}, expected {top}", p.degree()),
            ));
        }
        Ok(p.into_exact())
    }
}

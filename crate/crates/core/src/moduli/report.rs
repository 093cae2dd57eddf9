use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{fixed_dimension, full_dimension};
use crate::error::{Error, Result};
use crate::series::{BiSeries, UniPoly};

/// Which moduli space a report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// All stable bundles of rank `n` and degree `d`.
    Full,
    /// Stable bundles with a fixed determinant line bundle.
    FixedDeterminant,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Full => "full",
            Variant::FixedDeterminant => "fixed_determinant",
        }
    }

    pub fn dimension(self, n: u32, g: u32) -> u32 {
        match self {
            Variant::Full => full_dimension(n, g),
            Variant::FixedDeterminant => fixed_dimension(n, g),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "fixed_determinant" => Ok(Variant::FixedDeterminant),
            other => Err(Error::Document(format!("unknown variant {other:?}"))),
        }
    }
}

/// A single Hodge number `h^{p,q}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HodgeNumber {
    pub p: u32,
    pub q: u32,
    pub value: BigInt,
}

/// Hodge diamond, Betti numbers and chi-characteristic of one moduli space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeReport {
    pub n: u32,
    pub d: i64,
    pub g: u32,
    pub variant: Variant,
    pub dim_complex: u32,
    /// Truncation cap of the series computation that produced the report.
    pub cap_used: u32,
    /// Positive Hodge numbers, sorted by `(p + q, p)`.
    pub hodge_terms: Vec<HodgeNumber>,
    /// `b_0, ..., b_{2 dim}`.
    pub betti: Vec<BigInt>,
    pub chi: UniPoly,
    pub euler: BigInt,
    pub signature: BigInt,
}

impl HodgeReport {
    /// Assembles a report from a Hodge–Poincaré polynomial and checks every
    /// invariant a compact Kähler manifold must satisfy.
    pub fn from_polynomial(
        n: u32,
        d: i64,
        g: u32,
        variant: Variant,
        poly: &BiSeries,
    ) -> Result<Self> {
        let dim = variant.dimension(n, g);
        let mut hodge_terms: Vec<HodgeNumber> = poly
            .terms()
            .map(|((p, q), v)| HodgeNumber {
                p,
                q,
                value: v.clone(),
            })
            .collect();
        hodge_terms.sort_by_key(|h| (h.p + h.q, h.p));

        let diag = poly.specialize_diag();
        let betti = (0..=2 * dim).map(|j| diag.coefficient(j)).collect();
        let chi = poly.specialize_y_minus1().into_exact();
        let euler = chi.eval(&BigInt::from(-1));
        let signature = chi.eval(&BigInt::one());

        let report = HodgeReport {
            n,
            d,
            g,
            variant,
            dim_complex: dim,
            cap_used: poly.cap(),
            hodge_terms,
            betti,
            chi,
            euler,
            signature,
        };
        report.validate()?;
        Ok(report)
    }

    /// `h^{p,q}`, zero when absent.
    pub fn hodge_number(&self, p: u32, q: u32) -> BigInt {
        self.hodge_terms
            .iter()
            .find(|h| h.p == p && h.q == q)
            .map(|h| h.value.clone())
            .unwrap_or_default()
    }

    /// The Hodge–Poincaré polynomial as a series truncated at `cap_used`.
    pub fn hodge_polynomial(&self) -> BiSeries {
        BiSeries::from_terms(
            self.cap_used,
            self.hodge_terms.iter().map(|h| ((h.p, h.q), h.value.clone())),
        )
    }

    /// Checks the Hodge-theoretic invariants. The error names the first
    /// violated identity.
    pub fn validate(&self) -> Result<()> {
        let dim = self.dim_complex;
        let fail = |what: &str, detail: String| Err(Error::consistency(what, detail));

        for h in &self.hodge_terms {
            if !h.value.is_positive() {
                return fail("nonnegativity", format!("h^{{{},{}}} = {}", h.p, h.q, h.value));
            }
            if h.p > dim || h.q > dim {
                return fail(
                    "Hodge diamond bounds",
                    format!("h^{{{},{}}} is nonzero beyond dimension {dim}", h.p, h.q),
                );
            }
            if self.hodge_number(h.q, h.p) != h.value {
                return fail(
                    "Hodge symmetry",
                    format!("h^{{{},{}}} = {} but h^{{{},{}}} = {}", h.p, h.q, h.value, h.q, h.p, self.hodge_number(h.q, h.p)),
                );
            }
            let dual = self.hodge_number(dim - h.p, dim - h.q);
            if dual != h.value {
                return fail(
                    "Poincare duality",
                    format!("h^{{{},{}}} = {} but h^{{{},{}}} = {dual}", h.p, h.q, h.value, dim - h.p, dim - h.q),
                );
            }
        }
        if !self.hodge_number(0, 0).is_one() {
            return fail("normalization", format!("h^{{0,0}} = {}", self.hodge_number(0, 0)));
        }
        for (j, b) in self.betti.iter().enumerate() {
            let s: BigInt = self
                .hodge_terms
                .iter()
                .filter(|h| (h.p + h.q) as usize == j)
                .map(|h| &h.value)
                .sum();
            if &s != b {
                return fail("Betti sum", format!("b_{j} = {b} but the Hodge numbers sum to {s}"));
            }
        }
        let b1 = self.betti.get(1).cloned().unwrap_or_default();
        let expect_b1 = match self.variant {
            Variant::Full => BigInt::from(2 * self.g),
            Variant::FixedDeterminant => BigInt::zero(),
        };
        if b1 != expect_b1 {
            return fail("first Betti number", format!("b_1 = {b1}, expected {expect_b1}"));
        }
        let alternating: BigInt = self
            .betti
            .iter()
            .enumerate()
            .map(|(j, b)| if j % 2 == 0 { b.clone() } else { -b })
            .sum();
        if alternating != self.euler {
            return fail(
                "Euler characteristic",
                format!("alternating Betti sum {alternating} differs from chi(-1) = {}", self.euler),
            );
        }
        match self.variant {
            Variant::Full if !self.chi.is_zero() => {
                return fail("vanishing chi of the full space", format!("chi(t) = {}", self.chi));
            }
            Variant::FixedDeterminant
                if self.n >= 2 && !(self.euler.is_zero() && self.signature.is_zero()) =>
            {
                return fail(
                    "vanishing Euler characteristic and signature",
                    format!("chi(-1) = {}, chi(1) = {}", self.euler, self.signature),
                );
            }
            _ => {}
        }
        Ok(())
    }
}

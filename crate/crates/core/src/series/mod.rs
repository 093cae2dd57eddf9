//! Exact truncated power series over the integers.
//!
//! [`BiSeries`] is a power series in `x, y` truncated at a total degree
//! `i + j <= cap`. [`UniPoly`] is its univariate counterpart in `t`, used for
//! Betti polynomials and chi-characteristics.
//!
//! Both types keep a canonical sparse form: no zero coefficient is ever
//! stored, so structural equality is mathematical equality.

mod bivariate;
mod univariate;

pub use bivariate::BiSeries;
pub use univariate::UniPoly;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation caps differ: {left} vs {right}")]
    CapMismatch { left: u32, right: u32 },
    #[error("denominator constant term must be +1 or -1")]
    NonUnit,
    #[error("coefficient of x^{i} y^{j} lies above the truncation cap {cap}")]
    OutOfRange { i: u32, j: u32, cap: u32 },
    #[error("geometric series needs a non-constant monomial")]
    ConstantRatio,
}

/// Index of `x^i y^j` in a dense triangular layout ordered by total degree.
#[inline]
pub(crate) fn tri_index(i: u32, j: u32) -> usize {
    let k = (i + j) as usize;
    k * (k + 1) / 2 + i as usize
}

#[inline]
pub(crate) fn tri_len(cap: u32) -> usize {
    let c = cap as usize;
    (c + 1) * (c + 2) / 2
}

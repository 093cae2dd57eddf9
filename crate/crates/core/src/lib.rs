//! Exact Hodge numbers of moduli spaces of stable vector bundles on a
//! compact Riemann surface of genus `g >= 2`.
//!
//! The library computes, with arbitrary-precision integer arithmetic:
//!
//! - the Hodge–Poincaré polynomial of the moduli space `M(n, d)` of stable
//!   bundles of coprime rank `n` and degree `d`, and of the subspace
//!   `M_L(n, d)` with fixed determinant,
//! - their Betti numbers and chi-characteristic `chi(t) = HP(t, -1)`,
//! - independent reference values (closed forms for ranks 2 and 3, the
//!   Betti-number recursion in one variable) for cross-checking.
//!
//! The computation runs an induction over Harder–Narasimhan types in the
//! ring of bivariate power series truncated at a total degree.
//!
//! ```
//! use hodge_moduli::{HodgeEngine, Variant};
//!
//! let engine = HodgeEngine::new();
//! let report = engine.report(2, 1, 2, Variant::FixedDeterminant).unwrap();
//! let betti: Vec<String> = report.betti.iter().map(|b| b.to_string()).collect();
//! assert_eq!(betti, ["1", "0", "1", "4", "1", "0", "1"]);
//! ```

pub mod cli;
pub mod error;
pub mod hntypes;
pub mod json;
pub mod moduli;
pub mod oracle;
pub mod series;

pub use error::{Error, Result};
pub use hntypes::{enumerate_types, HnType, Part};
pub use moduli::{HodgeEngine, HodgeReport, MemoKey, Variant};
pub use series::{BiSeries, SeriesError, UniPoly};

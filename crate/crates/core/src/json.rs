//! JSON building blocks shared by the output documents and the disk cache.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::BiSeries;

/// One coefficient of a bivariate polynomial. Values are decimal strings
/// so that no reader ever rounds them through a float.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub p: u32,
    pub q: u32,
    pub value: String,
}

pub fn parse_int(s: &str) -> Result<BigInt> {
    s.parse()
        .map_err(|_| Error::Document(format!("not a decimal integer: {s:?}")))
}

/// Terms of `s`, sorted by `(p + q, p)`.
pub fn series_terms(s: &BiSeries) -> Vec<JsonTerm> {
    let mut out: Vec<JsonTerm> = s
        .terms()
        .map(|((p, q), v)| JsonTerm {
            p,
            q,
            value: v.to_string(),
        })
        .collect();
    out.sort_by_key(|t| (t.p + t.q, t.p));
    out
}

/// Rebuilds a series from serialized terms. Rejects terms above the cap,
/// zero values and repeated exponents, none of which a writer produces.
pub fn series_from_terms(cap: u32, terms: &[JsonTerm]) -> Result<BiSeries> {
    let mut seen = std::collections::HashSet::new();
    let mut parsed = Vec::with_capacity(terms.len());
    for t in terms {
        if t.p + t.q > cap {
            return Err(Error::Document(format!(
                "term x^{} y^{} above cap {cap}",
                t.p, t.q
            )));
        }
        if !seen.insert((t.p, t.q)) {
            return Err(Error::Document(format!("repeated term x^{} y^{}", t.p, t.q)));
        }
        let v = parse_int(&t.value)?;
        if v == BigInt::default() {
            return Err(Error::Document(format!("zero term x^{} y^{}", t.p, t.q)));
        }
        parsed.push(((t.p, t.q), v));
    }
    Ok(BiSeries::from_terms(cap, parsed))
}

//! Serialized output documents (schema version "1").
//!
//! Every coefficient is a decimal string. Key order follows the struct
//! field order and term lists are sorted by `(p + q, p)`, so the JSON for a
//! fixed query is byte-stable.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::{parse_int, series_from_terms, series_terms, JsonTerm};
use crate::moduli::{HodgeNumber, HodgeReport, Variant};
use crate::series::UniPoly;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Query {
    pub n: u32,
    pub d: i64,
    pub g: u32,
    pub variant: Variant,
}

impl Query {
    fn of(report: &HodgeReport) -> Self {
        Query {
            n: report.n,
            d: report.d,
            g: report.g,
            variant: report.variant,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub query: Query,
    pub dim_complex: u32,
    pub hodge_terms: Vec<JsonTerm>,
    pub betti: Vec<String>,
    /// Index is the power of `t`; the zero polynomial is `["0"]`.
    pub chi_coeffs: Vec<String>,
    pub euler: i64,
    pub signature: i64,
    pub cap_used: u32,
}

/// Output of the `chi` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiDocument {
    pub schema_version: String,
    pub query: Query,
    pub chi_coeffs: Vec<String>,
}

/// Output of the `betti` command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiDocument {
    pub schema_version: String,
    pub query: Query,
    pub dim_complex: u32,
    pub betti: Vec<String>,
}

fn small(v: &BigInt, what: &str) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::consistency(what, format!("{v} does not fit in a JSON integer")))
}

pub fn chi_strings(chi: &UniPoly) -> Vec<String> {
    let dense = chi.to_dense();
    if dense.is_empty() {
        return vec!["0".to_string()];
    }
    dense.iter().map(|c| c.to_string()).collect()
}

fn chi_from_strings(coeffs: &[String]) -> Result<UniPoly> {
    let parsed = coeffs
        .iter()
        .enumerate()
        .map(|(i, s)| Ok((i as u32, parse_int(s)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::from_terms(None, parsed))
}

impl OutputDocument {
    pub fn from_report(report: &HodgeReport) -> Result<Self> {
        Ok(OutputDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            query: Query::of(report),
            dim_complex: report.dim_complex,
            hodge_terms: series_terms(&report.hodge_polynomial()),
            betti: report.betti.iter().map(|b| b.to_string()).collect(),
            chi_coeffs: chi_strings(&report.chi),
            euler: small(&report.euler, "Euler characteristic")?,
            signature: small(&report.signature, "signature")?,
            cap_used: report.cap_used,
        })
    }

    /// Rebuilds and re-validates the report the document was made from.
    pub fn to_report(&self) -> Result<HodgeReport> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Document(format!(
                "unsupported schema version {:?}",
                self.schema_version
            )));
        }
        let poly = series_from_terms(self.cap_used, &self.hodge_terms)?;
        let mut hodge_terms: Vec<HodgeNumber> = poly
            .terms()
            .map(|((p, q), v)| HodgeNumber {
                p,
                q,
                value: v.clone(),
            })
            .collect();
        hodge_terms.sort_by_key(|h| (h.p + h.q, h.p));
        let report = HodgeReport {
            n: self.query.n,
            d: self.query.d,
            g: self.query.g,
            variant: self.query.variant,
            dim_complex: self.dim_complex,
            cap_used: self.cap_used,
            hodge_terms,
            betti: self
                .betti
                .iter()
                .map(|s| parse_int(s))
                .collect::<Result<_>>()?,
            chi: chi_from_strings(&self.chi_coeffs)?,
            euler: BigInt::from(self.euler),
            signature: BigInt::from(self.signature),
        };
        report.validate()?;
        Ok(report)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }
}

impl ChiDocument {
    pub fn from_report(report: &HodgeReport) -> Self {
        ChiDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            query: Query::of(report),
            chi_coeffs: chi_strings(&report.chi),
        }
    }
}

impl BettiDocument {
    pub fn from_report(report: &HodgeReport) -> Self {
        BettiDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            query: Query::of(report),
            dim_complex: report.dim_complex,
            betti: report.betti.iter().map(|b| b.to_string()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::BiSeries;

    fn rank_two_report() -> HodgeReport {
        let poly = BiSeries::from_terms(
            12,
            [((0, 0), 1), ((1, 1), 1), ((2, 1), 2), ((1, 2), 2), ((2, 2), 1), ((3, 3), 1)],
        );
        HodgeReport::from_polynomial(2, 1, 2, Variant::FixedDeterminant, &poly).unwrap()
    }

    #[test]
    fn golden_json() {
        let doc = OutputDocument::from_report(&rank_two_report()).unwrap();
        let compact = serde_json::to_string(&doc).unwrap();
        assert_eq!(
            compact,
            concat!(
                r#"{"schema_version":"1","query":{"n":2,"d":1,"g":2,"variant":"fixed_determinant"},"#,
                r#""dim_complex":3,"hodge_terms":[{"p":0,"q":0,"value":"1"},{"p":1,"q":1,"value":"1"},"#,
                r#"{"p":1,"q":2,"value":"2"},{"p":2,"q":1,"value":"2"},{"p":2,"q":2,"value":"1"},"#,
                r#"{"p":3,"q":3,"value":"1"}],"betti":["1","0","1","4","1","0","1"],"#,
                r#""chi_coeffs":["1","1","-1","-1"],"euler":0,"signature":0,"cap_used":12}"#
            )
        );
    }

    #[test]
    fn round_trip() {
        let report = rank_two_report();
        let doc = OutputDocument::from_report(&report).unwrap();
        let back = OutputDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_report().unwrap(), report);
    }

    #[test]
    fn rejects_tampered_documents() {
        let mut doc = OutputDocument::from_report(&rank_two_report()).unwrap();
        doc.hodge_terms[2].value = "3".into();
        assert!(matches!(doc.to_report(), Err(Error::Consistency { .. })));

        let mut doc = OutputDocument::from_report(&rank_two_report()).unwrap();
        doc.betti[3] = "4.0".into();
        assert!(matches!(doc.to_report(), Err(Error::Document(_))));

        let mut doc = OutputDocument::from_report(&rank_two_report()).unwrap();
        doc.schema_version = "2".into();
        assert!(matches!(doc.to_report(), Err(Error::Document(_))));
    }

    #[test]
    fn zero_chi_is_a_single_zero() {
        assert_eq!(chi_strings(&UniPoly::zero()), vec!["0"]);
        assert!(chi_from_strings(&["0".to_string()]).unwrap().is_zero());
    }
}

//! The identity battery behind `hodge verify`.

use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::moduli::{default_cap, jacobian_factor, HodgeEngine, Variant};
use crate::oracle::{self, BettiRecursion};
use crate::series::{BiSeries, UniPoly};

/// Check names, in column order.
pub const CHECKS: [&str; 8] = [
    "closed-form",
    "chi",
    "euler-signature",
    "betti",
    "product",
    "hodge",
    "cap+4",
    "shift",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Skip,
    Fail(String),
}

impl Outcome {
    fn from_result(r: Result<bool>) -> Self {
        match r {
            Ok(true) => Outcome::Pass,
            Ok(false) => Outcome::Skip,
            Err(e) => Outcome::Fail(e.to_string()),
        }
    }

    fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Skip => "-",
            Outcome::Fail(_) => "FAIL",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CellResult {
    pub n: u32,
    pub d: i64,
    pub g: u32,
    /// One outcome per entry of [`CHECKS`].
    pub outcomes: Vec<Outcome>,
}

impl CellResult {
    pub fn passed(&self) -> bool {
        !self.outcomes.iter().any(|o| matches!(o, Outcome::Fail(_)))
    }
}

/// Every coprime `(n, d)` with `0 <= d < n`, `n <= max_rank`, and
/// `2 <= g <= max_genus`, sorted.
pub fn cells(max_rank: u32, max_genus: u32) -> Vec<(u32, i64, u32)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        for d in 0..n as i64 {
            if d.gcd(&(n as i64)) != 1 {
                continue;
            }
            for g in 2..=max_genus {
                out.push((n, d, g));
            }
        }
    }
    out
}

pub fn run(engine: &HodgeEngine, max_rank: u32, max_genus: u32) -> Vec<CellResult> {
    let betti = BettiRecursion::new();
    let mut results: Vec<CellResult> = cells(max_rank, max_genus)
        .into_par_iter()
        .map(|(n, d, g)| verify_cell(engine, &betti, n, d, g))
        .collect();
    results.sort_by_key(|r| (r.n, r.d, r.g));
    results
}

pub fn verify_cell(engine: &HodgeEngine, betti: &BettiRecursion, n: u32, d: i64, g: u32) -> CellResult {
    let checks: [&(dyn Fn() -> Result<bool> + Sync); 8] = [
        &|| closed_form(engine, n, d, g),
        &|| chi(engine, n, d, g),
        &|| euler_signature(engine, n, d, g),
        &|| betti_agreement(engine, betti, n, d, g),
        &|| product(engine, n, d, g),
        &|| hodge(engine, n, d, g),
        &|| cap_plus_four(engine, n, d, g),
        &|| shift(engine, n, d, g),
    ];
    CellResult {
        n,
        d,
        g,
        outcomes: checks.iter().map(|c| Outcome::from_result(c())).collect(),
    }
}

/// The pass/fail matrix followed by one line per failure.
pub fn render(results: &[CellResult]) -> String {
    let mut out = String::new();
    write!(out, "{:>3} {:>3} {:>3}", "n", "d", "g").unwrap();
    for c in CHECKS {
        write!(out, "  {c:>15}").unwrap();
    }
    out.push('\n');
    for r in results {
        write!(out, "{:>3} {:>3} {:>3}", r.n, r.d, r.g).unwrap();
        for o in &r.outcomes {
            write!(out, "  {:>15}", o.label()).unwrap();
        }
        out.push('\n');
    }
    for r in results {
        for (name, o) in CHECKS.iter().zip(&r.outcomes) {
            if let Outcome::Fail(msg) = o {
                writeln!(out, "FAIL n={} d={} g={} {name}: {msg}", r.n, r.d, r.g).unwrap();
            }
        }
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} cells, {} failed", results.len(), failed).unwrap();
    out
}

fn same_series(invariant: &str, got: &BiSeries, want: &BiSeries) -> Result<()> {
    match got.first_difference(want) {
        None => Ok(()),
        Some(((i, j), a, b)) => Err(Error::consistency(
            invariant,
            format!("first difference at x^{i} y^{j}: computed {a}, expected {b}"),
        )),
    }
}

fn same_poly(invariant: &str, got: &UniPoly, want: &UniPoly) -> Result<()> {
    match got.first_difference(want) {
        None => Ok(()),
        Some((k, a, b)) => Err(Error::consistency(
            invariant,
            format!("first difference at t^{k}: computed {a}, expected {b}"),
        )),
    }
}

fn closed_form(engine: &HodgeEngine, n: u32, d: i64, g: u32) -> Result<bool> {
    let fixed = engine.hp_fixed_det(n, d, g)?;
    let cap = fixed.cap();
    let want = match n {
        1 => BiSeries::one(cap),
        2 => oracle::closed_form_rank2(g, cap)?,
        3 => oracle::closed_form_rank3(g, cap)?,
        _ => return Ok(false),
    };
    same_series("closed form of the fixed-determinant polynomial", &fixed, &want)?;
    Ok(true)
}

fn chi(engine: &HodgeEngine, n: u32, d: i64, g: u32) -> Result<bool> {
    let got = engine.chi_characteristic(n, d, g)?;
    same_poly("chi closed form", &got, &oracle::chi_closed_form(n, g)?)?;
    let full = engine.hp_full(n, d, g)?.specialize_y_minus1();
    if !full.is_zero() {
        return Err(Error::consistency("vanishing chi of the full space", format!("chi(t) = {full}")));
    }
    Ok(true)
}

fn euler_signature(engine: &HodgeEngine, n: u32, d: i64, g: u32) -> Result<bool> {
    let (e, s) = engine.euler_and_signature(n, d, g)?;
    let want = if n == 1 { BigInt::one() } else { BigInt::zero() };
    if e != want || s != want {
        return Err(Error::consistency(
            "Euler characteristic and signature",
            format!("chi(-1) = {e}, chi(1) = {s}, expected {want}"),
        ));
    }
    Ok(true)
}

fn betti_agreement(engine: &HodgeEngine, betti: &BettiRecursion, n: u32, d: i64, g: u32) -> Result<bool> {
    let diag = engine.hp_full(n, d, g)?.specialize_diag();
    same_poly("Betti numbers from the univariate recursion", &diag, &betti.poincare_full(n, d, g)?)?;
    Ok(true)
}

fn product(engine: &HodgeEngine, n: u32, d: i64, g: u32) -> Result<bool> {
    let full = engine.hp_full(n, d, g)?;
    let fixed = engine.hp_fixed_det(n, d, g)?;
    let rebuilt = fixed.mul(&jacobian_factor(g, full.cap()))?;
    same_series("full = fixed-determinant times Jacobian", &rebuilt, &full)?;
    Ok(true)
}

fn hodge(engine: &HodgeEngine, n: u32, d: i64, g: u32) -> Result<bool> {
    engine.report(n, d, g, Variant::Full)?;
    engine.report(n, d, g, Variant::FixedDeterminant)?;
    Ok(true)
}

fn cap_plus_four(engine: &HodgeEngine, n: u32, d: i64, g: u32) -> Result<bool> {
    let cap = default_cap(n, g);
    let base = engine.hp_full(n, d, g)?;
    let wide = engine.hp_full_with_cap(n, d, g, Some(cap + 4))?;
    same_series("truncation coherence", &wide.truncate(cap), &base)?;
    Ok(true)
}

fn shift(engine: &HodgeEngine, n: u32, d: i64, g: u32) -> Result<bool> {
    if g != 2 || n > 3 {
        return Ok(false);
    }
    let cap = default_cap(n, g);
    let memo = engine.f_series(n, d, g, cap)?;
    let direct = engine.f_series_exact_degree(n, d + n as i64, g, cap)?;
    same_series("shift invariance of F", &direct, &memo)?;
    Ok(true)
}

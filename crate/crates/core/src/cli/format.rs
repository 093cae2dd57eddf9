//! Plain-text and LaTeX renderings of a report.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::moduli::HodgeReport;
use crate::series::UniPoly;

/// One `h[p][q] = value` line per nonzero Hodge number, then the Betti
/// numbers and `chi(t)`.
pub fn render_text(report: &HodgeReport) -> String {
    let mut out = String::new();
    for h in &report.hodge_terms {
        writeln!(out, "h[{}][{}] = {}", h.p, h.q, h.value).unwrap();
    }
    out.push_str(&betti_line(&report.betti));
    out.push('\n');
    writeln!(out, "chi = {}", report.chi).unwrap();
    out
}

pub fn betti_line(betti: &[BigInt]) -> String {
    let items: Vec<String> = betti.iter().map(|b| b.to_string()).collect();
    format!("betti = [{}]", items.join(", "))
}

/// The Hodge diamond as a `tabular`, rows from `p + q = 2 dim` down to 0,
/// followed by `chi(t)` in math mode.
pub fn render_latex(report: &HodgeReport) -> String {
    let dim = report.dim_complex as i64;
    let width = (2 * dim + 1) as usize;
    let mut out = String::new();
    writeln!(
        out,
        "% Hodge diamond of the {} moduli space, n = {}, d = {}, g = {}",
        report.variant, report.n, report.d, report.g
    )
    .unwrap();
    writeln!(out, "\\begin{{tabular}}{{{}}}", "c".repeat(width)).unwrap();
    for k in (0..=2 * dim).rev() {
        let cells: Vec<String> = (0..=2 * dim)
            .map(|c| {
                // column c holds p - q = c - dim
                let twice_p = k + c - dim;
                if twice_p < 0 || twice_p % 2 != 0 {
                    return String::new();
                }
                let p = twice_p / 2;
                let q = k - p;
                if !(0..=dim).contains(&p) || !(0..=dim).contains(&q) {
                    return String::new();
                }
                report.hodge_number(p as u32, q as u32).to_string()
            })
            .collect();
        writeln!(out, "{} \\\\", cells.join(" & ")).unwrap();
    }
    out.push_str("\\end{tabular}\n\n");
    writeln!(out, "$\\chi(t) = {}$", latex_poly(&report.chi)).unwrap();
    out
}

/// `chi(t)` in LaTeX, e.g. `1 + t - t^{2} - t^{3}`.
pub fn latex_poly(p: &UniPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in p.terms() {
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".to_string(),
            _ => format!("t^{{{k}}}"),
        };
        if mono.is_empty() || !mag.is_one() {
            write!(out, "{mag}").unwrap();
        }
        out.push_str(&mono);
    }
    out
}

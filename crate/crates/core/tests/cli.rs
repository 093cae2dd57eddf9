use std::fs;
use std::process::{Command, Output};

use hodge_moduli::cli::document::OutputDocument;
use hodge_moduli::{HodgeEngine, Variant};

fn hodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hodge"))
        .args(args)
        .env_remove("HODGE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const RANK2: [&str; 7] = ["--rank", "2", "--degree", "1", "--genus", "2", "--fixed-determinant"];

fn with<'a>(cmd: &'a str, base: &[&'a str], extra: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend_from_slice(base);
    v.extend_from_slice(extra);
    v
}

#[test]
fn text_table_for_rank_two() {
    let o = hodge(&with("compute", &RANK2, &["--format", "text"]));
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in ["h[1][1] = 1", "h[2][1] = 2", "h[1][2] = 2", "betti = [1, 0, 1, 4, 1, 0, 1]"] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn non_coprime_input_exits_two() {
    let o = hodge(&["compute", "--rank", "2", "--degree", "2", "--genus", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not coprime"), "{}", stderr(&o));
}

#[test]
fn other_input_errors_exit_two() {
    for args in [
        ["compute", "--rank", "2", "--degree", "1", "--genus", "1"],
        ["compute", "--rank", "0", "--degree", "1", "--genus", "2"],
        ["compute", "--rank", "x", "--degree", "1", "--genus", "2"],
    ] {
        assert_eq!(hodge(&args).status.code(), Some(2), "{args:?}");
    }
    let o = hodge(&["compute", "--rank", "1", "--degree", "0", "--genus", "2", "--genus-typo"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn jacobian_document() {
    let o = hodge(&["compute", "--rank", "1", "--degree", "0", "--genus", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = OutputDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.query.variant, Variant::Full);
    assert_eq!(doc.dim_complex, 3);
    assert_eq!(doc.betti, ["1", "6", "15", "20", "15", "6", "1"]);
    assert_eq!(doc.chi_coeffs, ["0"]);
    assert_eq!((doc.euler, doc.signature), (0, 0));
}

#[test]
fn chi_commands() {
    let o = hodge(&["chi", "--rank", "3", "--degree", "1", "--genus", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // (1 + t)(1 - t^2)^2 (1 + t^3)
    assert_eq!(
        v["chi_coeffs"],
        serde_json::json!(["1", "1", "-2", "-1", "2", "-1", "-2", "1", "1"])
    );
    assert_eq!(v["query"]["variant"], "fixed_determinant");

    let o = hodge(&["chi", "--rank", "2", "--degree", "1", "--genus", "2", "--full-space"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["chi_coeffs"], serde_json::json!(["0"]));
}

#[test]
fn betti_command() {
    let o = hodge(&with("betti", &RANK2, &[]));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["betti"], serde_json::json!(["1", "0", "1", "4", "1", "0", "1"]));
}

#[test]
fn json_is_byte_stable_and_round_trips() {
    let args = ["compute", "--rank", "3", "--degree", "2", "--genus", "3"];
    let a = hodge(&args);
    let b = hodge(&args);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.ends_with("}\n"));
    let doc = OutputDocument::from_json(&text).unwrap();
    assert_eq!(doc.to_json(), text);
    let expected = HodgeEngine::new().report(3, 2, 3, Variant::Full).unwrap();
    assert_eq!(doc.to_report().unwrap(), expected);
}

#[test]
fn out_flag_writes_the_same_document() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = hodge(&with("compute", &RANK2, &["--out", path.to_str().unwrap()]));
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(fs::read(&path).unwrap(), hodge(&with("compute", &RANK2, &[])).stdout);
}

#[test]
fn cap_override_is_recorded() {
    let o = hodge(&with("compute", &RANK2, &["--cap", "16"]));
    assert_eq!(o.status.code(), Some(0));
    let doc = OutputDocument::from_json(&stdout(&o)).unwrap();
    assert_eq!(doc.cap_used, 16);
    let default = OutputDocument::from_json(&stdout(&hodge(&with("compute", &RANK2, &[])))).unwrap();
    assert_eq!(default.cap_used, 12);
    assert_eq!(doc.hodge_terms, default.hodge_terms);
}

/// Reads the diamond back out of the LaTeX tabular.
fn latex_table(latex: &str, dim: i64) -> Vec<(i64, i64, String)> {
    let rows: Vec<&str> = latex
        .lines()
        .skip_while(|l| !l.starts_with("\\begin{tabular}"))
        .skip(1)
        .take_while(|l| !l.starts_with("\\end{tabular}"))
        .collect();
    assert_eq!(rows.len() as i64, 2 * dim + 1);
    let mut out = Vec::new();
    for (r, row) in rows.iter().enumerate() {
        let k = 2 * dim - r as i64;
        let cells: Vec<&str> = row.trim_end_matches("\\\\").split('&').map(str::trim).collect();
        for (c, cell) in cells.iter().enumerate() {
            if cell.is_empty() || *cell == "0" {
                continue;
            }
            let p = (k + c as i64 - dim) / 2;
            out.push((p, k - p, cell.to_string()));
        }
    }
    out.sort();
    out
}

#[test]
fn latex_and_text_agree() {
    for (n, d, g) in [("2", "1", "2"), ("3", "1", "2"), ("2", "1", "4")] {
        let base = ["--rank", n, "--degree", d, "--genus", g, "--fixed-determinant"];
        let text = stdout(&hodge(&with("compute", &base, &["--format", "text"])));
        let latex = stdout(&hodge(&with("compute", &base, &["--format", "latex"])));
        let mut from_text: Vec<(i64, i64, String)> = text
            .lines()
            .filter_map(|l| {
                let rest = l.strip_prefix("h[")?;
                let (p, rest) = rest.split_once("][")?;
                let (q, v) = rest.split_once("] = ")?;
                Some((p.parse().unwrap(), q.parse().unwrap(), v.to_string()))
            })
            .collect();
        from_text.sort();
        let dim = from_text.iter().map(|t| t.0).max().unwrap();
        assert_eq!(latex_table(&latex, dim), from_text, "n = {n}, g = {g}");
        let chi_text = text.lines().find_map(|l| l.strip_prefix("chi = ")).unwrap();
        let chi_latex = latex.lines().find_map(|l| l.strip_prefix("$\\chi(t) = ")).unwrap();
        let normalized = chi_latex.trim_end_matches('$').replace(['{', '}'], "");
        assert_eq!(normalized, chi_text.replace('*', ""));
    }
}

#[test]
fn cache_directory_is_advisory() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    let fresh = hodge(&with("compute", &RANK2, &["--cache-dir", path]));
    assert_eq!(fresh.status.code(), Some(0));
    let mut files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(!files.is_empty());

    let cached = hodge(&with("compute", &RANK2, &["--cache-dir", path]));
    assert_eq!(cached.stdout, fresh.stdout);

    for (i, f) in files.iter().enumerate() {
        if i % 2 == 0 {
            fs::write(f, "{ not json").unwrap();
        } else {
            let text = fs::read_to_string(f).unwrap();
            fs::write(f, text.replacen("\"g\": 2", "\"g\": 7", 1)).unwrap();
        }
    }
    let recovered = hodge(&with("compute", &RANK2, &["--cache-dir", path]));
    assert_eq!(recovered.status.code(), Some(0));
    assert_eq!(recovered.stdout, fresh.stdout);

    let o = Command::new(env!("CARGO_BIN_EXE_hodge"))
        .args(["verify", "--max-rank", "2", "--max-genus", "2"])
        .env("HODGE_CACHE_DIR", path)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn verify_matrix() {
    let o = hodge(&["verify", "--max-rank", "4", "--max-genus", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).filter(|l| !l.contains("cells")).collect();
    assert_eq!(rows.len(), 12);
    assert!(rows[0].trim_start().starts_with("1   0   2"));
    assert!(rows.last().unwrap().trim_start().starts_with("4   3   3"));
    assert!(out.ends_with("12 cells, 0 failed\n"));
}

//! Rendering and exit-code policy for the `gext` binary.

use std::fmt::Write as _;
use std::path::Path;

use gext::config::OutputFormat;
use gext::galoislab::{full_verify, lattice_report, Report};
use gext::{Error, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// What a command prints and the code it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn input_error(msg: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: msg,
            code: EXIT_INPUT,
        }
    }
}

/// Parse and configuration problems are the caller's fault; everything else
/// is a failure of the run itself.
fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax { .. }
            | Error::UnknownGenerator { .. }
            | Error::NonMonic { .. }
            | Error::Reducible { .. }
            | Error::Tower { .. }
            | Error::InvalidModulus(_)
            | Error::Config(_)
            | Error::SubgroupCap { .. }
    )
}

fn run(path: &Path, cfg: &RunConfig, theorems: bool) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Outcome::input_error(format!("{}: {e}", path.display())),
    };
    let result = if theorems { full_verify(&text, cfg) } else { lattice_report(&text, cfg) };
    let report = match result {
        Ok(r) => r,
        Err(e) if is_input_error(&e) => return Outcome::input_error(format!("{}: {e}", path.display())),
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: format!("{}: {e}", path.display()),
                code: EXIT_FAIL,
            }
        }
    };
    let stdout = match cfg.format {
        OutputFormat::Json => report.to_json() + "\n",
        OutputFormat::Text if theorems => render_verify(&report),
        OutputFormat::Text => render_report(&report),
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if report.any_fail() { EXIT_FAIL } else { EXIT_OK },
    }
}

pub fn cmd_verify(path: &Path, cfg: &RunConfig) -> Outcome {
    run(path, cfg, true)
}

pub fn cmd_report(path: &Path, cfg: &RunConfig) -> Outcome {
    run(path, cfg, false)
}

fn render_header(out: &mut String, r: &Report) {
    let t = &r.tower;
    let _ = writeln!(out, "base {}", t.base);
    for l in &t.levels {
        let mark = if t.ground.as_deref() == Some(l.gen.as_str()) { "  (ground)" } else { "" };
        let _ = writeln!(out, "  {}: {}{mark}", l.gen, l.text);
    }
    let _ = writeln!(out, "[L:K] = {}, |G| = {}, galois = {}", t.degree, r.group.order, r.galois);
    for (i, e) in r.group.elements.iter().enumerate() {
        let _ = writeln!(out, "  g{i}: {e}");
    }
}

fn render_lattice(out: &mut String, r: &Report) {
    let rows: Vec<[String; 7]> = r
        .subgroups
        .iter()
        .zip(&r.subfields)
        .enumerate()
        .map(|(k, (h, m))| {
            [
                format!("H{k}"),
                h.elements.len().to_string(),
                if h.normal { "yes" } else { "no" }.to_string(),
                m.minpoly_text.clone(),
                m.degree.to_string(),
                m.skew_dim.to_string(),
                m.primitive.clone(),
            ]
        })
        .collect();
    let head = ["H", "|H|", "normal", "L^H minpoly", "[L^H:K]", "dim L x H", "primitive"];
    let mut widths = head.map(str::len);
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: &[&str]| {
        cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let _ = writeln!(out, "{}", line(&head));
    for row in &rows {
        let cells: Vec<&str> = row.iter().map(String::as_str).collect();
        let _ = writeln!(out, "{}", line(&cells));
    }
}

fn render_assumptions(out: &mut String, r: &Report) {
    for a in &r.assumptions {
        let _ = writeln!(out, "assumption: {a}");
    }
}

pub fn render_report(r: &Report) -> String {
    let mut out = String::new();
    render_header(&mut out, r);
    out.push('\n');
    render_lattice(&mut out, r);
    render_assumptions(&mut out, r);
    out
}

pub fn render_verify(r: &Report) -> String {
    let mut out = render_report(r);
    out.push('\n');
    let width = r.theorems.iter().map(|v| v.id.len()).max().unwrap_or(0);
    for v in &r.theorems {
        let _ = write!(out, "{:<width$}  {}", v.id, v.status.label());
        if let Some(w) = &v.witness {
            let _ = write!(out, "  ({w})");
        }
        out.push('\n');
    }
    let fails = r.theorems.iter().filter(|v| v.status == gext::galoislab::Status::Fail).count();
    let _ = writeln!(out, "{} checks, {fails} failed", r.theorems.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write(name: &str, text: &str) -> std::path::PathBuf {
        let p = std::env::temp_dir().join(format!("gext-cli-{}-{name}.tower", std::process::id()));
        std::fs::write(&p, text).unwrap();
        p
    }

    #[test]
    fn error_classes() {
        assert!(is_input_error(&Error::Config("x".into())));
        assert!(is_input_error(&Error::SubgroupCap { order: 6, cap: 3 }));
        assert!(!is_input_error(&Error::PrecisionExhausted { cap: 4096, pending: 1 }));
        assert!(!is_input_error(&Error::PrimitiveSearch { budget: 4096 }));
    }

    #[test]
    fn reducible_level_is_an_input_error() {
        let p = write("reducible", "base Q\ngen s minpoly s^2 - 4\n");
        let out = cmd_verify(&p, &RunConfig::default());
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("reducible"), "{}", out.stderr);
        std::fs::remove_file(p).unwrap();
    }

    #[test]
    fn quadratic_report_table() {
        let p = write("quadratic", "base Q\ngen s minpoly s^2 - 5\n");
        let out = cmd_report(&p, &RunConfig::default());
        assert_eq!(out.code, EXIT_OK);
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert!(lines.iter().any(|l| l.starts_with("H   |H|  normal")));
        assert!(lines.iter().any(|l| l.starts_with("H1  2    yes     x - 1")), "{}", out.stdout);
        std::fs::remove_file(p).unwrap();
    }
}

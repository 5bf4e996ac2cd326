//! Rendering reports and writing files.

use anyhow::{Context, Result};
use extremal_core::report::{Outcome, SearchReport};
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

/// Writes `contents` next to `path` and renames it into place, so a
/// failed run never leaves a partial file behind.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().context("output path has no file name")?.to_string_lossy();
    let tmp = dir.join(format!(".{name}.{}.tmp", std::process::id()));
    let result = (|| {
        let mut file = std::fs::File::create(&tmp)?;
        file.write_all(contents.as_bytes())?;
        file.sync_all()?;
        std::fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = std::fs::remove_file(&tmp);
    }
    result.with_context(|| format!("writing {}", path.display()))
}

fn outcome_text(o: &Outcome) -> String {
    match o {
        Outcome::Exact { value } => format!("exact {value}"),
        Outcome::Interval { lower, upper: Some(u) } => format!("interval [{lower}, {u}]"),
        Outcome::Interval { lower, upper: None } => format!("interval [{lower}, inf)"),
        Outcome::Holds => "holds".into(),
        Outcome::Fails => "fails".into(),
        Outcome::Found => "found".into(),
        Outcome::Exhausted => "exhausted".into(),
        Outcome::Undecided => "undecided".into(),
    }
}

pub fn table(r: &SearchReport) -> String {
    let mut out = String::new();
    let mut row = |k: &str, v: String| writeln!(out, "{k:<10} {v}").expect("write to string");
    row("command", r.command.clone());
    row("outcome", outcome_text(&r.outcome));
    if r.nodes > 0 {
        row("nodes", r.nodes.to_string());
    }
    if r.budget_exhausted {
        row("budget", "exhausted".into());
    }
    if let Some(seed) = r.seed {
        row("seed", seed.to_string());
    }
    if let Some(ms) = r.elapsed_ms {
        row("elapsed", format!("{ms:.1} ms"));
    }
    if let Some(w) = &r.witness {
        row("witness", w.to_string());
    }
    if let Some(d) = &r.details {
        row("details", d.to_string());
    }
    out
}

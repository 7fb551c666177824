use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

/// Writes `text` to `path` through a sibling temp file and a rename, or to
/// stdout when no path is given.
pub fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    let Some(path) = path else {
        io::stdout().write_all(text.as_bytes()).context("cannot write to stdout")?;
        return Ok(());
    };
    let tmp = temp_path(path);
    let result = fs::write(&tmp, text).and_then(|()| fs::rename(&tmp, path));
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.map_err(|e| anyhow::Error::new(OutputError { path: path.to_owned(), source: e }))
}

fn temp_path(path: &Path) -> PathBuf {
    let name = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
    path.with_file_name(format!(".{name}.{}.tmp", std::process::id()))
}

#[derive(Debug)]
pub struct OutputError {
    pub path: PathBuf,
    pub source: io::Error,
}

impl std::fmt::Display for OutputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cannot write output file {}: {}", self.path.display(), self.source)
    }
}

impl std::error::Error for OutputError {}

pub fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

//! Corpus readers: a directory of `.txt` files or a JSON-lines file.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusFormat {
    #[default]
    TxtDir,
    Jsonl,
}

pub fn load_corpus(path: &Path, format: CorpusFormat) -> Result<Vec<(String, String)>> {
    match format {
        CorpusFormat::TxtDir => load_txt_dir(path),
        CorpusFormat::Jsonl => load_jsonl(path),
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Reads every `*.txt` file directly under `dir`; the file stem is the id.
/// Documents come back sorted by id.
pub fn load_txt_dir(dir: &Path) -> Result<Vec<(String, String)>> {
    let mut docs = Vec::new();
    for entry in fs::read_dir(dir).map_err(io_err(dir))? {
        let path = entry.map_err(io_err(dir))?.path();
        if !path.is_file() || path.extension().is_none_or(|e| e != "txt") {
            continue;
        }
        let Some(stem) = path.file_stem().and_then(|s| s.to_str()) else {
            return Err(Error::InvalidUtf8 { path });
        };
        let stem = stem.to_string();
        let bytes = fs::read(&path).map_err(io_err(&path))?;
        let text =
            String::from_utf8(bytes).map_err(|_| Error::InvalidUtf8 { path: path.clone() })?;
        docs.push((stem, text));
    }
    docs.sort();
    Ok(docs)
}

#[derive(Deserialize)]
struct JsonlRecord {
    id: String,
    text: String,
}

/// One `{"id": ..., "text": ...}` object per line. Blank lines are skipped;
/// errors carry the 1-based line number.
pub fn load_jsonl(path: &Path) -> Result<Vec<(String, String)>> {
    let bytes = fs::read(path).map_err(io_err(path))?;
    let content = String::from_utf8(bytes).map_err(|_| Error::InvalidUtf8 {
        path: path.to_path_buf(),
    })?;
    let mut docs = Vec::new();
    for (i, line) in content.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: JsonlRecord = serde_json::from_str(line).map_err(|e| Error::Jsonl {
            path: path.to_path_buf(),
            line: i + 1,
            message: e.to_string(),
        })?;
        docs.push((record.id, record.text));
    }
    Ok(docs)
}

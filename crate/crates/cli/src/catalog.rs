//! Content-addressed result files: `<input-hash>-<command>-<params-hash>.json`.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::CliError;

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Hash of the compact serialization; object keys keep their declaration
/// order, so equal inputs hash equally.
pub fn value_hash(v: &Value) -> String {
    sha256_hex(serde_json::to_string(v).expect("plain data").as_bytes())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub instance: String,
    pub content_hash: String,
    pub command: String,
    pub params: Value,
    pub result: Value,
    pub result_hash: String,
    pub tool_version: String,
    pub timestamp: u64,
}

impl CatalogEntry {
    pub fn new(
        instance: &str,
        content: &Value,
        command: &str,
        params: Value,
        result: Value,
    ) -> Self {
        CatalogEntry {
            instance: instance.to_string(),
            content_hash: value_hash(content),
            command: command.to_string(),
            result_hash: value_hash(&result),
            params,
            result,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    pub fn file_name(&self) -> String {
        format!(
            "{}-{}-{}.json",
            &self.content_hash[..16],
            self.command,
            &value_hash(&self.params)[..8]
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stored {
    New(PathBuf),
    Reproduced(PathBuf),
    /// An earlier entry for the same input and parameters holds a different result.
    Mismatch {
        path: PathBuf,
        stored: String,
    },
}

/// Write `entry` unless an entry with the same key exists; an existing entry
/// is compared by result hash and left untouched.
pub fn store(dir: &Path, entry: &CatalogEntry) -> Result<Stored, CliError> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let path = dir.join(entry.file_name());
    if path.exists() {
        let text = fs::read_to_string(&path)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let old: CatalogEntry = serde_json::from_str(&text)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        return Ok(if old.result_hash == entry.result_hash {
            Stored::Reproduced(path)
        } else {
            Stored::Mismatch {
                path,
                stored: old.result_hash,
            }
        });
    }
    let text = serde_json::to_string_pretty(entry).expect("plain data");
    fs::write(&path, text + "\n").map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(Stored::New(path))
}

pub fn load(path: &Path) -> Result<CatalogEntry, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

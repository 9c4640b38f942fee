//! On-disk cache of enumeration outputs.
//!
//! Entries are keyed by structure kind, size and record format version, and
//! each file carries a SHA-256 sidecar. A missing or mismatching sidecar makes
//! the entry a miss, so a damaged file is rebuilt rather than served.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use catalan_core::records::FORMAT_VERSION;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lookup {
    Hit,
    Miss,
    Corrupt,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn entry_path(&self, kind: &str, k: usize) -> PathBuf {
        self.dir
            .join(format!("{kind}-k{k}-v{FORMAT_VERSION}.jsonl"))
    }

    /// Returns the cached text for `(kind, k)`, building and storing it on a miss.
    pub fn get_or_build<F>(&self, kind: &str, k: usize, build: F) -> Result<(String, Lookup)>
    where
        F: FnOnce() -> Result<String>,
    {
        let path = self.entry_path(kind, k);
        let lookup = match read_verified(&path) {
            Some(Ok(text)) => return Ok((text, Lookup::Hit)),
            Some(Err(())) => Lookup::Corrupt,
            None => Lookup::Miss,
        };
        let text = build()?;
        self.store(&path, &text)?;
        Ok((text, lookup))
    }

    fn store(&self, path: &Path, text: &str) -> Result<()> {
        fs::create_dir_all(&self.dir)
            .with_context(|| format!("creating cache directory {}", self.dir.display()))?;
        write_atomic(path, text.as_bytes())?;
        write_atomic(&sidecar(path), digest(text.as_bytes()).as_bytes())?;
        Ok(())
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn sidecar(path: &Path) -> PathBuf {
    let mut name = path.as_os_str().to_owned();
    name.push(".sha256");
    PathBuf::from(name)
}

// None: no entry. Some(Err): entry present but failing its hash.
fn read_verified(path: &Path) -> Option<std::result::Result<String, ()>> {
    let text = fs::read_to_string(path).ok()?;
    let expected = match fs::read_to_string(sidecar(path)) {
        Ok(h) => h,
        Err(_) => return Some(Err(())),
    };
    if expected.trim() == digest(text.as_bytes()) {
        Some(Ok(text))
    } else {
        Some(Err(()))
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(format!(".tmp{}", std::process::id()));
    let tmp = PathBuf::from(tmp);
    let mut file = fs::File::create(&tmp).with_context(|| format!("writing {}", tmp.display()))?;
    file.write_all(bytes)?;
    file.sync_all()?;
    fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

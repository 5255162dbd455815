//! On-disk cache of fusion tables, one JSON file per `(N, k)`.

use std::env;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use fusionkit::fusion::{full_table, FusionTable};
use fusionkit::FusionContext;

pub const CACHE_ENV: &str = "FUSIONKIT_CACHE";

/// `--cache-dir`, then `$FUSIONKIT_CACHE`, then the user cache directory.
pub fn cache_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(dir) = flag {
        return Some(dir.to_path_buf());
    }
    let from_env = |var: &str| env::var_os(var).filter(|v| !v.is_empty()).map(PathBuf::from);
    from_env(CACHE_ENV)
        .or_else(|| from_env("XDG_CACHE_HOME").map(|d| d.join("fusionkit")))
        .or_else(|| from_env("HOME").map(|d| d.join(".cache").join("fusionkit")))
}

pub fn table_path(dir: &Path, ctx: &FusionContext) -> PathBuf {
    dir.join(format!("table_N{}_k{}.json", ctx.n(), ctx.k()))
}

/// Reads a cached table. Missing files are silent; unreadable, corrupt or
/// mismatched files produce a warning and `None`.
pub fn lookup(dir: &Path, ctx: &FusionContext) -> Option<FusionTable> {
    let path = table_path(dir, ctx);
    let text = match fs::read_to_string(&path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
        Err(e) => {
            eprintln!("warning: cannot read {}: {e}; recomputing", path.display());
            return None;
        }
    };
    match FusionTable::from_json(&text) {
        Ok(table) if table.ctx() == ctx => Some(table),
        Ok(_) => {
            eprintln!("warning: {} holds a different context; recomputing", path.display());
            None
        }
        Err(e) => {
            eprintln!("warning: ignoring cache file {}: {e}; recomputing", path.display());
            None
        }
    }
}

/// Writes the table through a temporary file in the same directory and
/// renames it into place.
pub fn store(dir: &Path, table: &FusionTable) -> std::io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = table_path(dir, table.ctx());
    let json = table
        .to_json()
        .map_err(|e| std::io::Error::other(e.to_string()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(json.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(&path).map_err(|e| e.error)?;
    Ok(path)
}

/// Cached table if valid, otherwise a fresh one (stored when possible).
pub fn load_or_build(dir: Option<&Path>, ctx: &FusionContext) -> fusionkit::Result<(FusionTable, Option<PathBuf>)> {
    if let Some(dir) = dir {
        if let Some(table) = lookup(dir, ctx) {
            return Ok((table, Some(table_path(dir, ctx))));
        }
    }
    let table = full_table(ctx)?;
    let stored = dir.and_then(|dir| match store(dir, &table) {
        Ok(path) => Some(path),
        Err(e) => {
            eprintln!("warning: cannot write cache in {}: {e}", dir.display());
            None
        }
    });
    Ok((table, stored))
}

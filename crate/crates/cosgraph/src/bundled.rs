//! Example generators shipped in `catalog/`, pinned by `catalog/MANIFEST`.

use cosgraph_core::catalog::{ExampleGenerators, ExampleId};
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};
use crate::format::GeneratorFile;

pub const MANIFEST: &str = include_str!("../catalog/MANIFEST");

pub fn file_name(id: ExampleId) -> String {
    format!("{}.gens", id.name())
}

pub fn bundled_text(id: ExampleId) -> &'static str {
    match id {
        ExampleId::A39 => include_str!("../catalog/a39.gens"),
        ExampleId::A117 => include_str!("../catalog/a117.gens"),
        ExampleId::A208 => include_str!("../catalog/a208.gens"),
    }
}

pub fn sha256_hex(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Digest recorded for `file` in a `sha256sum`-style manifest.
pub fn pinned_digest(manifest: &str, file: &str) -> Option<String> {
    manifest.lines().find_map(|l| {
        let (digest, name) = l.split_once(char::is_whitespace)?;
        (name.trim_start_matches([' ', '*']) == file).then(|| digest.to_string())
    })
}

/// `(pinned, actual)` digests of a bundled file.
pub fn digests(id: ExampleId) -> (Option<String>, String) {
    (pinned_digest(MANIFEST, &file_name(id)), sha256_hex(bundled_text(id)))
}

/// Generators of an example from its text; `g_printed` is optional.
pub fn generators_from(text: &str, degree: usize) -> Result<ExampleGenerators> {
    let file = GeneratorFile::parse(text).map_err(|e| CliError::DataCorrupt(e.to_string()))?;
    if file.degree != degree {
        return Err(CliError::DataCorrupt(format!(
            "degree {} instead of {degree}",
            file.degree
        )));
    }
    let get = |n: &str| {
        file.perms
            .get(n)
            .cloned()
            .ok_or_else(|| CliError::DataCorrupt(format!("missing permutation {n}")))
    };
    Ok(ExampleGenerators {
        x: get("x")?,
        y: get("y")?,
        g: get("g")?,
        g_printed: file.perms.get("g_printed").cloned(),
    })
}

pub fn load_example(id: ExampleId) -> Result<ExampleGenerators> {
    generators_from(bundled_text(id), id.entry().degree)
}

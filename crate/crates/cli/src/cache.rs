//! On-disk cache of enumerated group tables, keyed by a hash of the
//! reflection datum and the cache format version.

use std::fs;
use std::path::{Path, PathBuf};

use coxring::coxeter::{GroupTable, CACHE_VERSION, DEFAULT_ELEMENT_BOUND};
use coxring::rootdata::PairingDatum;
use coxring::scalar::Field;
use sha2::{Digest, Sha256};

pub fn cache_key<F: Field>(datum: &PairingDatum<F>) -> String {
    let f = datum.field();
    let a = datum.reflection_datum();
    let mut hasher = Sha256::new();
    hasher.update(format!("coxring group table v{CACHE_VERSION}\n"));
    hasher.update(serde_json::to_string(&f.descriptor().min_poly).expect("serializable"));
    for row in a.to_rows() {
        hasher.update(b"\n");
        for x in row {
            hasher.update(f.render(&x));
            hasher.update(b" ");
        }
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn cache_path<F: Field>(dir: &Path, datum: &PairingDatum<F>) -> PathBuf {
    dir.join(format!("{}.cxgt", cache_key(datum)))
}

/// Load the group of `datum` from `dir` if present and valid, otherwise
/// enumerate it and try to store it. Cache write failures are not fatal.
pub fn load_group<F: Field>(
    datum: &PairingDatum<F>,
    dir: Option<&Path>,
) -> coxring::Result<GroupTable<F>> {
    let Some(dir) = dir else {
        return datum.enumerate_group(DEFAULT_ELEMENT_BOUND);
    };
    let path = cache_path(dir, datum);
    if let Ok(bytes) = fs::read(&path) {
        if let Some(table) =
            GroupTable::from_cache_bytes(datum.field(), datum.reflection_datum(), &bytes)
        {
            return Ok(table);
        }
    }
    let table = datum.enumerate_group(DEFAULT_ELEMENT_BOUND)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    let stored = fs::create_dir_all(dir)
        .and_then(|_| fs::write(&tmp, table.to_cache_bytes()))
        .and_then(|_| fs::rename(&tmp, &path));
    if let Err(e) = stored {
        let _ = fs::remove_file(&tmp);
        eprintln!(
            "warning: could not write group cache {}: {e}",
            path.display()
        );
    }
    Ok(table)
}

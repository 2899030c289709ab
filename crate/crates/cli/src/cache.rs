//! On-disk JSON cache of character tables.
//!
//! Files are versioned, store every big integer as a decimal string, and carry
//! a SHA-256 checksum of their content. Writes go to a temporary file in the
//! same directory and are renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use injection_scheme::scheme::IrrepLabel;
use injection_scheme::{CharacterTable, CyclePathType, Partition};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("corrupt cache file {path}: {reason}")]
    Corrupt { path: PathBuf, reason: String },
    #[error("cache I/O on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedClass {
    pub cycles: Vec<usize>,
    pub paths: Vec<usize>,
    pub valency: String,
    pub distance: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CachedIrrep {
    pub mu: Vec<usize>,
    pub lambda: Vec<usize>,
    pub multiplicity: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableCacheFile {
    pub format_version: u32,
    pub k: usize,
    pub n: usize,
    pub classes: Vec<CachedClass>,
    pub irreps: Vec<CachedIrrep>,
    /// Row-major, rows indexed by irrep.
    pub p: Vec<String>,
    pub checksum: String,
}

#[derive(Serialize)]
struct Payload<'a> {
    format_version: u32,
    k: usize,
    n: usize,
    classes: &'a [CachedClass],
    irreps: &'a [CachedIrrep],
    p: &'a [String],
}

impl TableCacheFile {
    pub fn from_table(table: &CharacterTable) -> Self {
        let classes = table
            .classes()
            .iter()
            .zip(table.valencies())
            .map(|(c, v)| CachedClass {
                cycles: c.cycles().parts().to_vec(),
                paths: c.paths().parts().to_vec(),
                valency: v.to_string(),
                distance: c.distance(),
            })
            .collect();
        let irreps = table
            .irreps()
            .iter()
            .zip(table.multiplicities())
            .map(|(l, m)| CachedIrrep {
                mu: l.mu().parts().to_vec(),
                lambda: l.lambda().parts().to_vec(),
                multiplicity: m.to_string(),
            })
            .collect();
        let p = table.p().iter().flatten().map(BigInt::to_string).collect();
        let mut file = TableCacheFile {
            format_version: FORMAT_VERSION,
            k: table.k(),
            n: table.n(),
            classes,
            irreps,
            p,
            checksum: String::new(),
        };
        file.checksum = file.content_checksum();
        file
    }

    pub fn content_checksum(&self) -> String {
        let payload = Payload {
            format_version: self.format_version,
            k: self.k,
            n: self.n,
            classes: &self.classes,
            irreps: &self.irreps,
            p: &self.p,
        };
        let bytes = serde_json::to_vec(&payload).expect("payload serializes");
        Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut bytes = serde_json::to_vec_pretty(self).expect("cache file serializes");
        bytes.push(b'\n');
        bytes
    }

    pub fn parse(bytes: &[u8]) -> Result<Self, String> {
        serde_json::from_slice(bytes).map_err(|e| e.to_string())
    }

    /// Rebuilds the table, checking the checksum, the version, the dimensions
    /// and the stored valencies, multiplicities and distances.
    pub fn to_table(&self) -> Result<CharacterTable, String> {
        if self.format_version != FORMAT_VERSION {
            return Err(format!("format version {} is not {}", self.format_version, FORMAT_VERSION));
        }
        let expected = self.content_checksum();
        if self.checksum != expected {
            return Err(format!("checksum {} does not match content {}", self.checksum, expected));
        }
        let d = self.classes.len();
        if self.irreps.len() != d || self.p.len() != d * d {
            return Err(format!("{} classes, {} irreps and {} entries", d, self.irreps.len(), self.p.len()));
        }
        let partition = |parts: &[usize]| Partition::new(parts.to_vec()).map_err(|e| e.to_string());
        let classes = self
            .classes
            .iter()
            .map(|c| CyclePathType::new(partition(&c.cycles)?, partition(&c.paths)?, self.k, self.n).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let irreps = self
            .irreps
            .iter()
            .map(|l| IrrepLabel::new(partition(&l.mu)?, partition(&l.lambda)?).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let entries = self
            .p
            .iter()
            .map(|x| x.parse::<BigInt>().map_err(|e| format!("entry {x:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        let p = entries.chunks(d.max(1)).map(<[BigInt]>::to_vec).collect();
        let table = CharacterTable::from_parts(self.k, self.n, classes, irreps, p).map_err(|e| e.to_string())?;
        for (j, c) in self.classes.iter().enumerate() {
            if c.valency != table.valencies()[j].to_string() || c.distance != table.classes()[j].distance() {
                return Err(format!("class {} has inconsistent valency or distance", table.classes()[j]));
            }
        }
        for (i, l) in self.irreps.iter().enumerate() {
            if l.multiplicity != table.multiplicities()[i].to_string() {
                return Err(format!("irrep {} has inconsistent multiplicity", table.irreps()[i]));
            }
        }
        Ok(table)
    }
}

/// A directory of cached tables, one file per `(k, n)`.
#[derive(Debug, Clone)]
pub struct TableCache {
    dir: PathBuf,
}

static TEMP_COUNTER: AtomicU64 = AtomicU64::new(0);

impl TableCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TableCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, k: usize, n: usize) -> PathBuf {
        self.dir.join(format!("table-k{k}-n{n}.json"))
    }

    /// `Ok(None)` when no file exists; an error when one exists but is unusable.
    pub fn load(&self, k: usize, n: usize) -> Result<Option<CharacterTable>, CacheError> {
        let path = self.path(k, n);
        let bytes = match fs::read(&path) {
            Ok(b) => b,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(source) => return Err(CacheError::Io { path, source }),
        };
        let corrupt = |reason: String| CacheError::Corrupt { path: path.clone(), reason };
        let file = TableCacheFile::parse(&bytes).map_err(corrupt)?;
        if file.k != k || file.n != n {
            return Err(corrupt(format!("holds ({}, {}) instead of ({k}, {n})", file.k, file.n)));
        }
        file.to_table().map(Some).map_err(corrupt)
    }

    pub fn store(&self, table: &CharacterTable) -> Result<PathBuf, CacheError> {
        let path = self.path(table.k(), table.n());
        let io = |source| CacheError::Io { path: path.clone(), source };
        fs::create_dir_all(&self.dir).map_err(io)?;
        let tmp = self.dir.join(format!(
            ".{}.{}.{}.tmp",
            path.file_name().and_then(|s| s.to_str()).unwrap_or("table"),
            std::process::id(),
            TEMP_COUNTER.fetch_add(1, Ordering::Relaxed)
        ));
        let bytes = TableCacheFile::from_table(table).to_bytes();
        let result = fs::File::create(&tmp)
            .and_then(|mut f| f.write_all(&bytes).and_then(|()| f.sync_all()))
            .and_then(|()| fs::rename(&tmp, &path));
        if let Err(e) = result {
            let _ = fs::remove_file(&tmp);
            return Err(io(e));
        }
        Ok(path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use injection_scheme::scheme::{combinatorial_table, DEFAULT_BUDGET};

    #[test]
    fn round_trip_is_byte_stable() {
        let table = combinatorial_table(2, 4, DEFAULT_BUDGET).unwrap();
        let bytes = TableCacheFile::from_table(&table).to_bytes();
        let parsed = TableCacheFile::parse(&bytes).unwrap();
        assert_eq!(parsed.to_bytes(), bytes);
        assert_eq!(parsed.to_table().unwrap(), table);
    }

    #[test]
    fn tampering_is_detected() {
        let table = combinatorial_table(2, 4, DEFAULT_BUDGET).unwrap();
        let mut file = TableCacheFile::from_table(&table);
        file.p[7] = "5".into();
        assert!(file.to_table().unwrap_err().contains("checksum"));
        file.checksum = file.content_checksum();
        assert!(file.to_table().is_ok());
        file.classes[1].valency = "2".into();
        file.checksum = file.content_checksum();
        assert!(file.to_table().unwrap_err().contains("inconsistent"));
    }
}

//! Append-only cache of character computations.
//!
//! One JSON object per line: `{schema_version, lie_type, op, key, value}`.
//! Lines with another schema version, another Lie type, or that fail to parse
//! are skipped. Values that do parse are re-validated by the caller before use.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::charring::DominantCharacter;
use crate::rootdata::{LieType, Weight};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the directory that holds the cache file.
pub const CACHE_DIR_ENV: &str = "MINAFF_CACHE_DIR";
pub const CACHE_FILE_NAME: &str = "characters.ndjson";

const OP_SIMPLE: &str = "simple_character";
const OP_TENSOR: &str = "tensor_simple";

#[derive(Debug, Serialize, Deserialize)]
pub struct Record {
    pub schema_version: u32,
    pub lie_type: String,
    pub op: String,
    pub key: String,
    pub value: Vec<(Vec<i32>, i64)>,
}

type Entries = Vec<(Weight, i64)>;

pub struct PersistentCache {
    path: PathBuf,
    lie_type: LieType,
    simple: Vec<(Weight, BTreeMap<Weight, i64>)>,
    tensor: Vec<((Weight, Weight), BTreeMap<Weight, i64>)>,
    writer: Mutex<BufWriter<File>>,
}

impl PersistentCache {
    pub fn open(path: &Path, lie_type: LieType) -> std::io::Result<Self> {
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                std::fs::create_dir_all(dir)?;
            }
        }
        let mut simple = Vec::new();
        let mut tensor = Vec::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            for line in reader.lines() {
                let Ok(line) = line else { break };
                let Ok(rec) = serde_json::from_str::<Record>(&line) else {
                    continue;
                };
                if rec.schema_version != SCHEMA_VERSION || rec.lie_type != lie_type.to_string() {
                    continue;
                }
                let value: BTreeMap<Weight, i64> = rec
                    .value
                    .into_iter()
                    .map(|(c, m)| (Weight::new(c), m))
                    .collect();
                match rec.op.as_str() {
                    OP_SIMPLE => {
                        if let Ok(k) = rec.key.parse::<Weight>() {
                            simple.push((k, value));
                        }
                    }
                    OP_TENSOR => {
                        let mut parts = rec.key.split('|').map(|p| p.parse::<Weight>());
                        if let (Some(Ok(a)), Some(Ok(b)), None) =
                            (parts.next(), parts.next(), parts.next())
                        {
                            tensor.push(((a, b), value));
                        }
                    }
                    _ => {}
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(PersistentCache {
            path: path.to_path_buf(),
            lie_type,
            simple,
            tensor,
            writer: Mutex::new(BufWriter::new(file)),
        })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub(crate) fn simple_entries(
        &self,
    ) -> impl Iterator<Item = (Weight, BTreeMap<Weight, i64>)> + '_ {
        self.simple.iter().cloned()
    }

    pub(crate) fn tensor_entries(
        &self,
    ) -> impl Iterator<Item = ((Weight, Weight), BTreeMap<Weight, i64>)> + '_ {
        self.tensor.iter().cloned()
    }

    fn append(&self, op: &str, key: String, value: Entries) {
        let rec = Record {
            schema_version: SCHEMA_VERSION,
            lie_type: self.lie_type.to_string(),
            op: op.to_string(),
            key,
            value: value.into_iter().map(|(w, m)| (w.into_vec(), m)).collect(),
        };
        let line = serde_json::to_string(&rec).expect("record serializes");
        let mut w = self.writer.lock().unwrap();
        // a failed write only loses a cache entry
        let _ = writeln!(w, "{line}");
    }

    pub(crate) fn put_simple(&self, lambda: &Weight, dominant: &BTreeMap<Weight, i64>) {
        let value = dominant.iter().map(|(w, m)| (w.clone(), *m)).collect();
        self.append(OP_SIMPLE, lambda.to_string(), value);
    }

    pub(crate) fn put_tensor(&self, a: &Weight, b: &Weight, value: &DominantCharacter) {
        let value = value.iter().map(|(w, m)| (w.clone(), m)).collect();
        self.append(OP_TENSOR, format!("{a}|{b}"), value);
    }

    pub fn flush(&self) -> std::io::Result<()> {
        self.writer.lock().unwrap().flush()
    }
}

impl Drop for PersistentCache {
    fn drop(&mut self) {
        if let Ok(w) = self.writer.get_mut() {
            let _ = w.flush();
        }
    }
}

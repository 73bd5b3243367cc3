//! Jack expansions cached in memory and, optionally, on disk.
//!
//! One JSON file per degree, `jack_deg{n}.json`, holding a list of records
//! `{"mu": [parts], "coeffs": {"λ": ["c_0", "c_1", …]}}` with the integer
//! coefficients of `[m_λ] J_μ` in ascending powers of α. Files are replaced
//! atomically (write to a sibling temporary file, then rename) so a reader
//! never observes a partial file.

use std::collections::{BTreeMap, HashMap};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, RwLock};

use jackpos_core::symfunc::{tilde_schur_expansion, JackTable, KostkaMatrix};
use jackpos_core::{AlphaPoly, Partition, SymExpansion};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{HarnessError, Result};

/// The monomial coefficients of one `J_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub n: usize,
    pub mu: Partition,
    pub coeffs: BTreeMap<Partition, Vec<BigInt>>,
}

impl CacheEntry {
    pub fn from_expansion(mu: &Partition, e: &SymExpansion) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (lam, c) in e.terms() {
            let ints = c.integer_coeffs().ok_or_else(|| {
                jackpos_core::Error::Integrity(format!("[m_{lam}] J_{mu} has non-integer coefficients"))
            })?;
            coeffs.insert(lam.clone(), ints);
        }
        Ok(CacheEntry { n: e.degree(), mu: mu.clone(), coeffs })
    }

    pub fn polys(&self) -> BTreeMap<Partition, AlphaPoly> {
        self.coeffs
            .iter()
            .map(|(lam, c)| (lam.clone(), AlphaPoly::from_bigints(c.iter().cloned())))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct Record {
    mu: Vec<usize>,
    coeffs: BTreeMap<String, Vec<String>>,
}

impl Record {
    fn from_entry(e: &CacheEntry) -> Self {
        Record {
            mu: e.mu.parts().to_vec(),
            coeffs: e
                .coeffs
                .iter()
                .map(|(lam, c)| (lam.to_string(), c.iter().map(BigInt::to_string).collect()))
                .collect(),
        }
    }
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("jack_deg{n}.json"))
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io { path: path.to_path_buf(), source }
}

/// Read every record of one degree file. A missing file is an empty cache.
pub fn read_degree_file(dir: &Path, n: usize) -> Result<Vec<CacheEntry>> {
    let path = cache_path(dir, n);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(io_err(&path)(e)),
    };
    let corrupt = |record: String, reason: String| HarnessError::CorruptCache {
        path: path.clone(),
        record,
        reason,
    };
    let records: Vec<Record> =
        serde_json::from_str(&text).map_err(|e| corrupt("<file>".into(), e.to_string()))?;
    let mut out = Vec::with_capacity(records.len());
    for (i, rec) in records.into_iter().enumerate() {
        let label = format!("#{i} (mu = {:?})", rec.mu);
        let mu = Partition::new(rec.mu.clone()).map_err(|e| corrupt(label.clone(), e.to_string()))?;
        if mu.size() != n {
            return Err(corrupt(label, format!("mu has size {}, file holds degree {n}", mu.size())));
        }
        let mut coeffs = BTreeMap::new();
        for (key, values) in &rec.coeffs {
            let lam: Partition = key
                .parse()
                .map_err(|e: jackpos_core::Error| corrupt(label.clone(), format!("key {key:?}: {e}")))?;
            if lam.size() != n {
                return Err(corrupt(label, format!("key {key:?} is not a partition of {n}")));
            }
            let ints = values
                .iter()
                .map(|v| v.parse::<BigInt>().map_err(|_| corrupt(label.clone(), format!("bad integer {v:?} under {key:?}"))))
                .collect::<Result<Vec<_>>>()?;
            coeffs.insert(lam, ints);
        }
        out.push(CacheEntry { n, mu, coeffs });
    }
    Ok(out)
}

static TMP_COUNTER: AtomicU64 = AtomicU64::new(0);

/// Replace one degree file atomically.
pub fn write_degree_file(dir: &Path, n: usize, entries: &[CacheEntry]) -> Result<()> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let path = cache_path(dir, n);
    let records: Vec<Record> = entries.iter().map(Record::from_entry).collect();
    let text = serde_json::to_string_pretty(&records)?;
    let tmp = dir.join(format!(
        ".jack_deg{n}.json.{}.{}.tmp",
        std::process::id(),
        TMP_COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    let mut f = fs::File::create(&tmp).map_err(io_err(&tmp))?;
    f.write_all(text.as_bytes()).map_err(io_err(&tmp))?;
    f.sync_all().map_err(io_err(&tmp))?;
    drop(f);
    fs::rename(&tmp, &path).map_err(io_err(&path))?;
    Ok(())
}

/// Shared access to Jack tables and the derived Schur expansions, keyed by
/// degree.
#[derive(Debug, Default)]
pub struct JackStore {
    dir: Option<PathBuf>,
    tables: RwLock<HashMap<usize, Arc<JackTable>>>,
    schur: RwLock<HashMap<usize, Arc<SchurData>>>,
    write_lock: Mutex<()>,
}

/// `J̃_μ` in the Schur basis for every `μ ⊢ n`, descending lexicographic.
#[derive(Debug)]
pub struct SchurData {
    pub kostka: KostkaMatrix,
    pub expansions: Vec<(Partition, SymExpansion)>,
}

impl SchurData {
    pub fn get(&self, mu: &Partition) -> Option<&SymExpansion> {
        self.expansions.iter().find(|(m, _)| m == mu).map(|(_, e)| e)
    }
}

impl JackStore {
    pub fn in_memory() -> Self {
        Self::default()
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        JackStore { dir: Some(dir.into()), ..Self::default() }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// Store one entry, merging it into its degree file.
    pub fn cache_store(&self, entry: &CacheEntry) -> Result<()> {
        let Some(dir) = &self.dir else { return Ok(()) };
        let _guard = self.write_lock.lock().unwrap_or_else(|p| p.into_inner());
        let mut entries = read_degree_file(dir, entry.n)?;
        entries.retain(|e| e.mu != entry.mu);
        entries.push(entry.clone());
        entries.sort_by(|a, b| b.mu.cmp(&a.mu));
        write_degree_file(dir, entry.n, &entries)
    }

    /// Look up `J_μ` on disk; `None` on a miss.
    pub fn cache_load(&self, n: usize, mu: &Partition) -> Result<Option<CacheEntry>> {
        let Some(dir) = &self.dir else { return Ok(None) };
        Ok(read_degree_file(dir, n)?.into_iter().find(|e| &e.mu == mu))
    }

    /// The full table of degree `n`: memory, then disk, then computed (and
    /// written back).
    pub fn table(&self, n: usize) -> Result<Arc<JackTable>> {
        if let Some(t) = self.tables.read().unwrap_or_else(|p| p.into_inner()).get(&n) {
            return Ok(Arc::clone(t));
        }
        let table = Arc::new(self.load_or_build(n)?);
        let mut map = self.tables.write().unwrap_or_else(|p| p.into_inner());
        Ok(Arc::clone(map.entry(n).or_insert(table)))
    }

    fn load_or_build(&self, n: usize) -> Result<JackTable> {
        if let Some(dir) = &self.dir {
            let entries = read_degree_file(dir, n)?;
            if entries.len() == jackpos_core::all_partitions(n).len() {
                let rows: BTreeMap<Partition, BTreeMap<Partition, AlphaPoly>> =
                    entries.iter().map(|e| (e.mu.clone(), e.polys())).collect();
                return JackTable::from_entries(n, &rows).map_err(|e| HarnessError::CorruptCache {
                    path: cache_path(dir, n),
                    record: "<table>".into(),
                    reason: e.to_string(),
                });
            }
        }
        let table = JackTable::build(n)?;
        if let Some(dir) = &self.dir {
            let entries = table
                .entries()
                .map(|(mu, e)| CacheEntry::from_expansion(mu, &e))
                .collect::<Result<Vec<_>>>()?;
            let _guard = self.write_lock.lock().unwrap_or_else(|p| p.into_inner());
            write_degree_file(dir, n, &entries)?;
        }
        Ok(table)
    }

    pub fn schur(&self, n: usize) -> Result<Arc<SchurData>> {
        if let Some(s) = self.schur.read().unwrap_or_else(|p| p.into_inner()).get(&n) {
            return Ok(Arc::clone(s));
        }
        let table = self.table(n)?;
        let kostka = KostkaMatrix::new(n);
        let expansions = table
            .partitions()
            .iter()
            .map(|mu| Ok((mu.clone(), tilde_schur_expansion(&table, &kostka, mu)?)))
            .collect::<Result<Vec<_>>>()?;
        let data = Arc::new(SchurData { kostka, expansions });
        let mut map = self.schur.write().unwrap_or_else(|p| p.into_inner());
        Ok(Arc::clone(map.entry(n).or_insert(data)))
    }
}

//! Append-only file of computed values, one tab-separated record per line:
//!
//! ```text
//! n  m  k  value  exact  witness-graph6  engine-version
//! ```
//!
//! Lines starting with `#` are comments. A record is reused only when it was
//! written by the same engine version, is exact, and its witness still
//! verifies as a planar, pattern-free graph with `value` edges.

use std::fs::{self, OpenOptions};
use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};

use crate::doublestar::{is_free, DoubleStarPattern};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::planarity::is_planar;

pub const ENGINE_VERSION: &str = concat!("planar-turan-", env!("CARGO_PKG_VERSION"));

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheRecord {
    pub n: usize,
    pub pattern: DoubleStarPattern,
    pub value: usize,
    pub exact: bool,
    pub witness: String,
    pub version: String,
}

impl CacheRecord {
    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.n,
            self.pattern.m(),
            self.pattern.k(),
            self.value,
            self.exact,
            self.witness,
            self.version
        )
    }

    pub fn parse(line: &str) -> Result<CacheRecord> {
        let fields: Vec<&str> = line.split('\t').collect();
        let [n, m, k, value, exact, witness, version] = fields[..] else {
            return Err(Error::Cache(format!("expected 7 fields, found {}", fields.len())));
        };
        let num = |s: &str, what: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Cache(format!("bad {what} {s:?}")))
        };
        let exact = match exact {
            "true" => true,
            "false" => false,
            other => return Err(Error::Cache(format!("bad exact flag {other:?}"))),
        };
        Ok(CacheRecord {
            n: num(n, "n")?,
            pattern: DoubleStarPattern::new(num(m, "m")?, num(k, "k")?)?,
            value: num(value, "value")?,
            exact,
            witness: witness.to_string(),
            version: version.to_string(),
        })
    }

    /// Decodes and re-checks the witness.
    pub fn verified_witness(&self) -> Result<Graph> {
        let g = graph6::decode(&self.witness)?;
        let reject = |why: &str| Err(Error::Cache(format!("witness {}: {why}", self.witness)));
        if g.vertex_count() != self.n {
            return reject("wrong vertex count");
        }
        if g.edge_count() != self.value {
            return reject("edge count differs from value");
        }
        if !is_planar(&g) {
            return reject("not planar");
        }
        if !is_free(&g, self.pattern) {
            return reject("contains the pattern");
        }
        Ok(g)
    }
}

/// A verified cache hit.
#[derive(Clone, Debug)]
pub struct CacheHit {
    pub record: CacheRecord,
    pub witness: Graph,
}

#[derive(Clone, Debug)]
pub struct Cache {
    path: PathBuf,
}

impl Cache {
    pub fn new(path: impl Into<PathBuf>) -> Cache {
        Cache { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// All well-formed records, in file order. A missing file is empty.
    pub fn records(&self) -> Result<Vec<CacheRecord>> {
        let text = match fs::read_to_string(&self.path) {
            Ok(t) => t,
            Err(e) if e.kind() == ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", self.path.display()))),
        };
        Ok(text
            .lines()
            .map(str::trim_end)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .filter_map(|l| CacheRecord::parse(l).ok())
            .collect())
    }

    /// Latest usable record for `(n, p)`.
    pub fn lookup(&self, n: usize, p: DoubleStarPattern) -> Result<Option<CacheHit>> {
        let hit = self
            .records()?
            .into_iter()
            .rev()
            .filter(|r| r.n == n && r.pattern == p && r.exact && r.version == ENGINE_VERSION)
            .find_map(|record| {
                let witness = record.verified_witness().ok()?;
                Some(CacheHit { record, witness })
            });
        Ok(hit)
    }

    pub fn append(&self, record: &CacheRecord) -> Result<()> {
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", self.path.display()));
        let mut file = OpenOptions::new().create(true).append(true).open(&self.path).map_err(io)?;
        writeln!(file, "{}", record.to_line()).map_err(io)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(value: usize, witness: &Graph) -> CacheRecord {
        CacheRecord {
            n: witness.vertex_count(),
            pattern: DoubleStarPattern::new(2, 2).unwrap(),
            value,
            exact: true,
            witness: graph6::encode(witness).unwrap(),
            version: ENGINE_VERSION.to_string(),
        }
    }

    #[test]
    fn line_round_trip() {
        let r = record(6, &Graph::complete(4).unwrap());
        assert_eq!(r.to_line(), format!("4\t2\t2\t6\ttrue\tC~\t{ENGINE_VERSION}"));
        assert_eq!(CacheRecord::parse(&r.to_line()).unwrap(), r);
        assert!(CacheRecord::parse("4\t2\t2\t6\tyes\tC~\tv").is_err());
        assert!(CacheRecord::parse("4\t2\t2").is_err());
    }

    #[test]
    fn lookup_requires_version_exactness_and_valid_witness() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path().join("values.tsv"));
        let p = DoubleStarPattern::new(2, 2).unwrap();
        assert!(cache.lookup(4, p).unwrap().is_none());

        let k4 = Graph::complete(4).unwrap();
        let mut stale = record(6, &k4);
        stale.version = "planar-turan-0.0.0".into();
        cache.append(&stale).unwrap();
        let mut inexact = record(6, &k4);
        inexact.exact = false;
        cache.append(&inexact).unwrap();
        // claims 5 edges but the witness has 6
        cache.append(&record(5, &k4)).unwrap();
        assert!(cache.lookup(4, p).unwrap().is_none());

        cache.append(&record(6, &k4)).unwrap();
        let hit = cache.lookup(4, p).unwrap().unwrap();
        assert_eq!(hit.record.value, 6);
        assert_eq!(hit.witness, k4);
        assert_eq!(cache.records().unwrap().len(), 4);
    }

    #[test]
    fn comments_and_garbage_are_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("values.tsv");
        std::fs::write(&path, "# header\nnot a record\n\n").unwrap();
        assert!(Cache::new(&path).records().unwrap().is_empty());
    }
}

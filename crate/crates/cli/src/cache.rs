//! On-disk cache of quotient bases, one text file per degree.
//!
//! ```text
//! 4tbasis v1 degree=<m> diagrams=<k> dim=<d>
//! cd[...]            (k lines, index order)
//! row: i1=c1 i2=c2   (one line per reduced row, rationals as p/q)
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use vassiliev_core::linalg::SparseVec;
use vassiliev_core::{ChordDiagram, QuotientBasis, Rational};

pub const DEFAULT_DIR: &str = ".4tcache";

#[derive(Debug, Clone)]
pub struct BasisCache {
    dir: PathBuf,
}

impl BasisCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        BasisCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, m: usize) -> PathBuf {
        self.dir.join(format!("4tbasis-{m}.txt"))
    }

    /// The stored basis for degree `m`, if a file exists.
    pub fn load(&self, m: usize) -> Result<Option<QuotientBasis>> {
        let path = self.path(m);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e).with_context(|| format!("reading {}", path.display())),
        };
        let b = decode(&text).with_context(|| format!("corrupt cache file {}", path.display()))?;
        if b.degree() != m {
            bail!("cache file {} holds degree {}", path.display(), b.degree());
        }
        Ok(Some(b))
    }

    /// Writes the basis through a temporary file renamed into place.
    pub fn store(&self, b: &QuotientBasis) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let path = self.path(b.degree());
        let tmp = self.dir.join(format!(".4tbasis-{}.{}.tmp", b.degree(), std::process::id()));
        let mut f = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
        f.write_all(encode(b).as_bytes())?;
        f.sync_all()?;
        drop(f);
        fs::rename(&tmp, &path).with_context(|| format!("renaming into {}", path.display()))?;
        Ok(path)
    }

    /// Loads degree `m`, building and storing it on a miss. A corrupt file
    /// is reported on stderr and replaced.
    pub fn get_or_build(&self, m: usize) -> Result<QuotientBasis> {
        match self.load(m) {
            Ok(Some(b)) => return Ok(b),
            Ok(None) => {}
            Err(e) => eprintln!("warning: {e:#}; rebuilding"),
        }
        let b = QuotientBasis::build(m);
        self.store(&b)?;
        Ok(b)
    }
}

/// Bases by degree, loaded once per process and backed by an optional
/// on-disk cache.
#[derive(Debug, Default)]
pub struct Bases {
    cache: Option<BasisCache>,
    loaded: BTreeMap<usize, QuotientBasis>,
}

impl Bases {
    pub fn new(cache: Option<BasisCache>) -> Self {
        Bases { cache, loaded: BTreeMap::new() }
    }

    pub fn get(&mut self, m: usize) -> Result<QuotientBasis> {
        if let Some(b) = self.loaded.get(&m) {
            return Ok(b.clone());
        }
        let b = match &self.cache {
            Some(c) => c.get_or_build(m)?,
            None => QuotientBasis::build(m),
        };
        self.loaded.insert(m, b.clone());
        Ok(b)
    }
}

pub fn encode(b: &QuotientBasis) -> String {
    let mut out = format!("4tbasis v1 degree={} diagrams={} dim={}\n", b.degree(), b.diagrams().len(), b.dim());
    for d in b.diagrams() {
        out.push_str(&format!("{d}\n"));
    }
    for row in b.rows() {
        out.push_str("row:");
        for (i, c) in row {
            out.push_str(&format!(" {i}={c}"));
        }
        out.push('\n');
    }
    out
}

fn header_field(item: Option<&str>, key: &str) -> Result<usize> {
    let Some(v) = item.and_then(|s| s.strip_prefix(key)).and_then(|s| s.strip_prefix('=')) else {
        bail!("header lacks {key}=");
    };
    v.parse().with_context(|| format!("bad {key} value '{v}'"))
}

pub fn decode(text: &str) -> Result<QuotientBasis> {
    let mut lines = text.lines();
    let header = lines.next().context("empty file")?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("4tbasis") || fields.next() != Some("v1") {
        bail!("unknown header '{header}'");
    }
    let degree = header_field(fields.next(), "degree")?;
    let count = header_field(fields.next(), "diagrams")?;
    let dim = header_field(fields.next(), "dim")?;
    let mut diagrams = Vec::with_capacity(count);
    for k in 0..count {
        let line = lines.next().with_context(|| format!("missing diagram line {k}"))?;
        diagrams.push(ChordDiagram::parse(line.trim()).with_context(|| format!("diagram line {k}"))?);
    }
    let mut rows: Vec<SparseVec> = Vec::new();
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let body = line.strip_prefix("row:").with_context(|| format!("expected a row, found '{line}'"))?;
        let mut row = SparseVec::new();
        for item in body.split_whitespace() {
            let (i, c) = item.split_once('=').with_context(|| format!("bad row entry '{item}'"))?;
            let i: usize = i.parse().with_context(|| format!("bad column '{i}'"))?;
            let c: Rational = c.parse().map_err(|_| anyhow::anyhow!("bad rational '{c}'"))?;
            row.push((i, c));
        }
        rows.push(row);
    }
    let b = QuotientBasis::from_parts(degree, diagrams, rows)?;
    if b.dim() != dim {
        bail!("header says dim={dim} but rows give {}", b.dim());
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for m in 0..=4 {
            let b = QuotientBasis::build(m);
            let text = encode(&b);
            let c = decode(&text).unwrap();
            assert_eq!(encode(&c), text);
            assert_eq!(c.dim(), b.dim());
        }
        let text = encode(&QuotientBasis::build(3));
        assert!(text.starts_with("4tbasis v1 degree=3 diagrams=5 dim=3\n"));
        assert!(text.contains("row: "));
    }

    #[test]
    fn rejects_damage() {
        let text = encode(&QuotientBasis::build(3));
        assert!(decode(&text.replace("dim=3", "dim=4")).is_err());
        assert!(decode(&text.replace("v1", "v2")).is_err());
        assert!(decode(&text.replace("row: ", "row: 0=1 ")).is_err());
        assert!(decode("").is_err());
        let first_diagram = text.lines().nth(1).unwrap();
        assert!(decode(&text.replacen(first_diagram, "cd[0-3,1-4,2-5]", 1)).is_err());
    }

    #[test]
    fn atomic_store_and_reload() {
        let dir = tempfile::tempdir().unwrap();
        let cache = BasisCache::new(dir.path().join("nested"));
        assert!(cache.load(2).unwrap().is_none());
        let b = cache.get_or_build(2).unwrap();
        assert_eq!(b.dim(), 2);
        let names: Vec<_> = fs::read_dir(cache.dir()).unwrap().map(|e| e.unwrap().file_name()).collect();
        assert_eq!(names.len(), 1);
        assert_eq!(cache.load(2).unwrap().unwrap().dim(), 2);
        fs::write(cache.path(2), "garbage").unwrap();
        assert!(cache.load(2).is_err());
        assert_eq!(cache.get_or_build(2).unwrap().dim(), 2);
        assert!(cache.load(2).unwrap().is_some());
    }
}

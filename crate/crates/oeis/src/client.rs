//! Sequence lookup: bundled fixtures first, then the on-disk cache, then the
//! network (unless offline).

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::BigInt;

use crate::bfile;
use crate::error::{OeisError, Result};

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "TRIGPOLY_OEIS_CACHE";

/// An A-number such as `A000108`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AId(pub u32);

impl AId {
    pub fn bfile_name(self) -> String {
        format!("b{:06}.txt", self.0)
    }
}

impl fmt::Display for AId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{:06}", self.0)
    }
}

impl FromStr for AId {
    type Err = OeisError;
    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix(['A', 'a']).filter(|d| d.len() == 6 && d.bytes().all(|b| b.is_ascii_digit()));
        digits
            .and_then(|d| d.parse().ok())
            .map(AId)
            .ok_or_else(|| OeisError::BadId(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Bundled,
    Cached,
    Network,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceFixture {
    pub id: AId,
    /// OEIS index of `terms[0]`.
    pub offset: i64,
    pub terms: Vec<BigInt>,
    pub source: Source,
}

/// b-files shipped with the crate, generated from each sequence's definition
/// by `fixtures/generate.py`.
const BUNDLED: &[(u32, &str)] = &[
    (108, include_str!("../fixtures/b000108.txt")),
    (290, include_str!("../fixtures/b000290.txt")),
    (330, include_str!("../fixtures/b000330.txt")),
    (2415, include_str!("../fixtures/b002415.txt")),
    (5408, include_str!("../fixtures/b005408.txt")),
    (5585, include_str!("../fixtures/b005585.txt")),
    (14963, include_str!("../fixtures/b014963.txt")),
    (182411, include_str!("../fixtures/b182411.txt")),
];

pub fn bundled_ids() -> Vec<AId> {
    BUNDLED.iter().map(|(n, _)| AId(*n)).collect()
}

/// Raw text of a bundled b-file.
pub fn bundled_text(id: AId) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == id.0).map(|(_, t)| *t)
}

/// Fetches raw b-file text. Implemented over HTTP by [`UreqTransport`];
/// tests substitute their own.
pub trait Transport: Send + Sync {
    fn get(&self, url: &str) -> std::result::Result<String, String>;
}

pub struct UreqTransport;

impl Transport for UreqTransport {
    fn get(&self, url: &str) -> std::result::Result<String, String> {
        ureq::get(url)
            .call()
            .map_err(|e| e.to_string())?
            .body_mut()
            .read_to_string()
            .map_err(|e| e.to_string())
    }
}

pub fn default_cache_dir() -> Option<PathBuf> {
    if let Some(dir) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(dir));
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache")))?;
    Some(base.join("trigpoly").join("oeis"))
}

pub struct Client<T: Transport = UreqTransport> {
    transport: T,
    cache_dir: Option<PathBuf>,
    offline: bool,
}

impl Client<UreqTransport> {
    /// HTTP transport, cache directory from the environment.
    pub fn new(offline: bool) -> Self {
        Client::with_transport(UreqTransport, default_cache_dir(), offline)
    }
}

impl<T: Transport> Client<T> {
    pub fn with_transport(transport: T, cache_dir: Option<PathBuf>, offline: bool) -> Self {
        Client {
            transport,
            cache_dir,
            offline,
        }
    }

    pub fn offline(&self) -> bool {
        self.offline
    }

    fn cache_path(&self, id: AId) -> Option<PathBuf> {
        self.cache_dir.as_ref().map(|d| d.join(id.bfile_name()))
    }

    /// Up to `max_terms` terms of `id`, resolved bundled → cache → network.
    pub fn fetch_sequence(&self, id: AId, max_terms: usize) -> Result<SequenceFixture> {
        let (text, source) = self.resolve(id)?;
        let (offset, mut terms) = bfile::parse(&text)?;
        terms.truncate(max_terms);
        Ok(SequenceFixture {
            id,
            offset,
            terms,
            source,
        })
    }

    fn resolve(&self, id: AId) -> Result<(String, Source)> {
        if let Some(text) = bundled_text(id) {
            return Ok((text.to_string(), Source::Bundled));
        }
        if let Some(path) = self.cache_path(id) {
            if let Ok(text) = fs::read_to_string(&path) {
                return Ok((text, Source::Cached));
            }
        }
        if self.offline {
            return Err(OeisError::NotAvailableOffline(id.to_string()));
        }
        let url = format!("https://oeis.org/{id}/{}", id.bfile_name());
        let text = self.transport.get(&url).map_err(|message| OeisError::Network {
            id: id.to_string(),
            message,
        })?;
        // refuse to cache anything that does not parse
        bfile::parse(&text)?;
        if let Some(path) = self.cache_path(id) {
            write_atomic(&path, &text)?;
        }
        Ok((text, Source::Network))
    }
}

/// Write to a temporary file in the target directory, then rename over the target.
fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids() {
        assert_eq!("A000108".parse::<AId>().unwrap(), AId(108));
        assert_eq!(AId(108).to_string(), "A000108");
        assert_eq!(AId(182411).bfile_name(), "b182411.txt");
        for bad in ["A108", "B000108", "A00010x", "A0001080", ""] {
            assert!(bad.parse::<AId>().is_err(), "{bad}");
        }
    }

    #[test]
    fn bundled_fixtures_round_trip() {
        assert_eq!(bundled_ids().len(), 8);
        for id in bundled_ids() {
            let text = bundled_text(id).unwrap();
            let (off, terms) = bfile::parse(text).unwrap();
            assert_eq!(bfile::render(off, &terms), text, "{id}");
        }
    }
}

//! OEIS b-file parsing, a local cache with optional network fetch, and
//! reshaping flattened triangles into rows.

use std::fmt;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Duration;

use num_bigint::BigInt;

use crate::algebra::Rat;
use crate::error::{Error, Result};
use crate::triangles::Triangle;

/// Environment variable consulted when no cache directory flag is given.
pub const CACHE_ENV: &str = "TVERIFY_OEIS_CACHE";

const HOST: &str = "https://oeis.org";

/// Validated sequence id such as `A027907`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OeisId(String);

impl OeisId {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn digits(&self) -> &str {
        &self.0[1..]
    }

    /// `https://oeis.org/A027907/b027907.txt`
    pub fn bfile_url(&self) -> String {
        format!("{HOST}/{}/b{}.txt", self.0, self.digits())
    }
}

impl FromStr for OeisId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let ok =
            s.len() == 7 && s.starts_with(['A', 'a']) && s[1..].bytes().all(|b| b.is_ascii_digit());
        if !ok {
            return Err(Error::InvalidId(s.to_string()));
        }
        Ok(OeisId(format!("A{}", &s[1..])))
    }
}

impl fmt::Display for OeisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub id: Option<OeisId>,
    /// `(index, value)` with contiguous, increasing indices.
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn values(&self) -> impl Iterator<Item = &BigInt> {
        self.entries.iter().map(|(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|(i, v)| format!("{i} {v}\n"))
            .collect()
    }
}

/// Parses `<index> <value>` lines, skipping blanks and `#` comments.
pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let mut parts = line.split_whitespace();
        let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(format!("expected `<index> <value>`, got {line:?}")));
        };
        let index: i64 = i.parse().map_err(|_| err(format!("bad index {i:?}")))?;
        let value: BigInt = v.parse().map_err(|_| err(format!("bad value {v:?}")))?;
        if let Some((last, _)) = entries.last() {
            if index != last + 1 {
                return Err(Error::Contiguity {
                    line: line_no,
                    expected: last + 1,
                    found: index,
                });
            }
        }
        entries.push((index, value));
    }
    Ok(BFile { id: None, entries })
}

/// Flag, then [`CACHE_ENV`], then the per-user cache directory.
pub fn resolve_cache_dir(flag: Option<&Path>) -> Result<PathBuf> {
    if let Some(dir) = flag {
        return Ok(dir.to_path_buf());
    }
    if let Some(dir) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
        return Ok(PathBuf::from(dir));
    }
    dirs::cache_dir()
        .map(|d| d.join("tverify").join("oeis"))
        .ok_or_else(|| Error::Config(format!("no cache directory: pass one or set {CACHE_ENV}")))
}

pub fn cache_path(id: &OeisId, cache_dir: &Path) -> PathBuf {
    cache_dir.join(format!("{id}.txt"))
}

/// Returns the cached b-file for `id`, downloading it first on a miss
/// unless `offline` is set.
pub fn fetch_bfile(id: &OeisId, cache_dir: &Path, offline: bool) -> Result<BFile> {
    let path = cache_path(id, cache_dir);
    let text = match std::fs::read_to_string(&path) {
        Ok(text) => text,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            if offline {
                return Err(Error::OfflineCacheMiss {
                    id: id.to_string(),
                    dir: cache_dir.display().to_string(),
                });
            }
            let text = download(&id.bfile_url())?;
            // Validate before caching so a bad download is never persisted.
            parse_bfile(&text)?;
            store(&path, cache_dir, &text)?;
            text
        }
        Err(e) => return Err(e.into()),
    };
    let mut b = parse_bfile(&text)?;
    b.id = Some(id.clone());
    Ok(b)
}

fn download(url: &str) -> Result<String> {
    let agent = ureq::AgentBuilder::new()
        .timeout(Duration::from_secs(60))
        .build();
    let resp = agent
        .get(url)
        .call()
        .map_err(|e| Error::Network(e.to_string()))?;
    let mut text = String::new();
    resp.into_reader()
        .read_to_string(&mut text)
        .map_err(|e| Error::Network(format!("{url}: {e}")))?;
    Ok(text)
}

fn store(path: &Path, dir: &Path, text: &str) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(text.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

fn split_rows(b: &BFile, arity: usize) -> Result<(Vec<Vec<Rat>>, usize)> {
    if arity == 0 {
        return Err(Error::Config("arity must be positive".into()));
    }
    let values: Vec<Rat> = b.values().cloned().map(Rat::from_integer).collect();
    let mut rows = Vec::new();
    let mut pos = 0;
    loop {
        let width = arity * rows.len() + 1;
        if pos + width > values.len() {
            break;
        }
        rows.push(values[pos..pos + width].to_vec());
        pos += width;
    }
    Ok((rows, values.len() - pos))
}

/// Rows of widths `1, arity + 1, 2 arity + 1, ...`; the entry count must
/// fill a whole number of rows.
pub fn reshape(b: &BFile, arity: usize) -> Result<Triangle> {
    let (rows, residue) = split_rows(b, arity)?;
    if residue != 0 || rows.is_empty() {
        return Err(Error::Reshape {
            count: b.len(),
            arity,
            rows: rows.len(),
            residue,
        });
    }
    Triangle::new(arity, rows)
}

/// Like [`reshape`] but drops a trailing partial row. Returns the number of
/// dropped entries alongside the triangle.
pub fn reshape_truncating(b: &BFile, arity: usize) -> Result<(Triangle, usize)> {
    let (rows, residue) = split_rows(b, arity)?;
    if rows.is_empty() {
        return Err(Error::Reshape {
            count: b.len(),
            arity,
            rows: 0,
            residue,
        });
    }
    Ok((Triangle::new(arity, rows)?, residue))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::bisnomial_row;

    fn ints(b: &BFile) -> Vec<i64> {
        b.values().map(|v| i64::try_from(v).unwrap()).collect()
    }

    fn flat(n: usize) -> BFile {
        parse_bfile(
            &(0..n)
                .map(|i| format!("{i} {}\n", i + 1))
                .collect::<String>(),
        )
        .unwrap()
    }

    #[test]
    fn parse_examples() {
        let b = parse_bfile("0 1\n1 1\n2 2").unwrap();
        assert_eq!(
            b.entries.iter().map(|(i, _)| *i).collect::<Vec<_>>(),
            [0, 1, 2]
        );
        assert_eq!(ints(&b), [1, 1, 2]);
        assert_eq!(ints(&parse_bfile("# comment\n0 1").unwrap()), [1]);
        assert!(matches!(
            parse_bfile("0 1\n2 5"),
            Err(Error::Contiguity {
                line: 2,
                expected: 1,
                found: 2
            })
        ));
        assert!(matches!(
            parse_bfile("0 1\n\n1 x"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_bfile("0 1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
        let big = parse_bfile("5 -123456789012345678901234567890").unwrap();
        assert_eq!(big.entries[0].0, 5);
        assert!(big.entries[0].1 < BigInt::from(0));
    }

    #[test]
    fn ids() {
        let id: OeisId = "A027907".parse().unwrap();
        assert_eq!(id.bfile_url(), "https://oeis.org/A027907/b027907.txt");
        assert_eq!("a291082".parse::<OeisId>().unwrap().as_str(), "A291082");
        for bad in ["A12345", "B123456", "A1234567", "A12345x", ""] {
            assert!(bad.parse::<OeisId>().is_err(), "{bad}");
        }
    }

    #[test]
    fn reshape_examples() {
        let t = reshape(&flat(9), 2).unwrap();
        assert_eq!(t.rows().iter().map(Vec::len).collect::<Vec<_>>(), [1, 3, 5]);
        let t = reshape(&flat(6), 1).unwrap();
        assert_eq!(t.rows().iter().map(Vec::len).collect::<Vec<_>>(), [1, 2, 3]);
        assert!(matches!(
            reshape(&flat(7), 2),
            Err(Error::Reshape {
                count: 7,
                arity: 2,
                rows: 2,
                residue: 3
            })
        ));
        let (t, dropped) = reshape_truncating(&flat(7), 2).unwrap();
        assert_eq!((t.n_max(), dropped), (1, 3));
        assert!(reshape(&flat(3), 0).is_err());
    }

    #[test]
    fn offline_cache_contract() {
        let dir = tempfile::tempdir().unwrap();
        let id: OeisId = "A027907".parse().unwrap();
        assert!(matches!(
            fetch_bfile(&id, dir.path(), true),
            Err(Error::OfflineCacheMiss { .. })
        ));
        let text: String = (0..3)
            .flat_map(|n| bisnomial_row(n, 2))
            .enumerate()
            .map(|(i, v)| format!("{i} {v}\n"))
            .collect();
        std::fs::write(cache_path(&id, dir.path()), &text).unwrap();
        let b = fetch_bfile(&id, dir.path(), true).unwrap();
        assert_eq!(b.id.as_ref(), Some(&id));
        let t = reshape(&b, 2).unwrap();
        assert_eq!(
            t.row(2).unwrap(),
            &bisnomial_row(2, 2)
                .into_iter()
                .map(Rat::from_integer)
                .collect::<Vec<_>>()[..]
        );
        assert_eq!(b.to_text(), text);
    }

    #[test]
    fn cache_dir_prefers_flag() {
        let p = Path::new("/tmp/somewhere");
        assert_eq!(resolve_cache_dir(Some(p)).unwrap(), p);
    }
}

//! On-disk cache of minimal coset representatives.
//!
//! Layout, integers little-endian:
//!
//! ```text
//! magic      8 bytes  "FLGHTCOS"
//! format     u32
//! sha256     32 bytes over everything that follows
//! key_len    u32, then key bytes (utf-8): "<group>|<theta>|<library version>"
//! count      u64
//! records    count x (u16 length, then one byte per simple-root letter)
//! ```

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use flagheight::rootsys::RootSystem;
use flagheight::weyl::{
    coset_representatives, normalize_theta, parabolic_order, weyl_order, CosetList, WeylElement,
};
use sha2::{Digest, Sha256};
use thiserror::Error;

pub const MAGIC: [u8; 8] = *b"FLGHTCOS";
pub const FORMAT_VERSION: u32 = 1;

const HASH_LEN: usize = 32;
const HEADER_LEN: usize = 8 + 4 + HASH_LEN;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("bad magic bytes")]
    BadMagic,
    #[error("unsupported cache format {0}")]
    UnsupportedFormat(u32),
    #[error("content hash mismatch")]
    HashMismatch,
    #[error("stale cache: key {found:?}, expected {expected:?}")]
    KeyMismatch { expected: String, found: String },
    #[error("truncated or malformed record data")]
    Malformed,
    #[error("cached data is inconsistent: {0}")]
    Inconsistent(String),
}

/// How a coset list was obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Created,
    /// The existing file was unusable and has been replaced.
    Rebuilt(String),
    /// Computed, but the file could not be written.
    Unwritable(String),
}

pub fn cache_key(rs: &RootSystem, theta: &[usize]) -> String {
    let theta: Vec<String> = theta.iter().map(usize::to_string).collect();
    format!("{}|{}|{}", rs.spec(), theta.join(","), flagheight::VERSION)
}

pub fn cache_path(dir: &Path, rs: &RootSystem, theta: &[usize]) -> PathBuf {
    let theta: Vec<String> = theta.iter().map(usize::to_string).collect();
    let theta = if theta.is_empty() {
        "borel".to_string()
    } else {
        theta.join("-")
    };
    dir.join(format!("{}_{}.cosets", rs.spec(), theta))
}

pub fn encode(key: &str, list: &CosetList) -> Vec<u8> {
    let mut body = Vec::new();
    body.extend_from_slice(&(key.len() as u32).to_le_bytes());
    body.extend_from_slice(key.as_bytes());
    body.extend_from_slice(&(list.len() as u64).to_le_bytes());
    for w in list.reps() {
        body.extend_from_slice(&(w.length() as u16).to_le_bytes());
        body.extend(w.word().iter().map(|&i| u8::try_from(i).expect("rank below 256")));
    }
    let mut out = Vec::with_capacity(HEADER_LEN + body.len());
    out.extend_from_slice(&MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.extend_from_slice(&Sha256::digest(&body));
    out.extend_from_slice(&body);
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8], CacheError> {
        if self.bytes.len() < n {
            return Err(CacheError::Malformed);
        }
        let (head, tail) = self.bytes.split_at(n);
        self.bytes = tail;
        Ok(head)
    }

    fn u16(&mut self) -> Result<u16, CacheError> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().expect("2 bytes")))
    }

    fn u32(&mut self) -> Result<u32, CacheError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }

    fn u64(&mut self) -> Result<u64, CacheError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }
}

pub fn decode(
    bytes: &[u8],
    rs: &RootSystem,
    theta: &[usize],
    expected_key: &str,
) -> Result<CosetList, CacheError> {
    let mut reader = Reader { bytes };
    if reader.take(8)? != MAGIC {
        return Err(CacheError::BadMagic);
    }
    let format = reader.u32()?;
    if format != FORMAT_VERSION {
        return Err(CacheError::UnsupportedFormat(format));
    }
    let hash = reader.take(HASH_LEN)?;
    if Sha256::digest(reader.bytes).as_slice() != hash {
        return Err(CacheError::HashMismatch);
    }
    let key_len = reader.u32()? as usize;
    let key = String::from_utf8(reader.take(key_len)?.to_vec()).map_err(|_| CacheError::Malformed)?;
    if key != expected_key {
        return Err(CacheError::KeyMismatch {
            expected: expected_key.to_string(),
            found: key,
        });
    }
    let count = reader.u64()?;
    let expected_count = weyl_order(rs) / parabolic_order(rs, theta).map_err(inconsistent)?;
    if u128::from(count) != expected_count {
        return Err(CacheError::Inconsistent(format!(
            "{count} records, expected {expected_count}"
        )));
    }
    let mut reps = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let len = reader.u16()? as usize;
        let word: Vec<usize> = reader.take(len)?.iter().map(|&b| usize::from(b)).collect();
        reps.push(WeylElement::from_reduced_word(rs, &word).map_err(inconsistent)?);
    }
    if !reader.bytes.is_empty() {
        return Err(CacheError::Malformed);
    }
    let theta = normalize_theta(rs, theta).map_err(inconsistent)?;
    Ok(CosetList::new(theta, reps))
}

fn inconsistent(e: flagheight::error::Error) -> CacheError {
    CacheError::Inconsistent(e.to_string())
}

pub fn read_cache(path: &Path, rs: &RootSystem, theta: &[usize]) -> Result<CosetList, CacheError> {
    let bytes = fs::read(path)?;
    decode(&bytes, rs, theta, &cache_key(rs, theta))
}

/// Writes through a temporary file so readers never see a partial cache.
pub fn write_cache(path: &Path, rs: &RootSystem, list: &CosetList) -> io::Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("cosets.tmp");
    fs::write(&tmp, encode(&cache_key(rs, list.theta()), list))?;
    fs::rename(&tmp, path)
}

/// Coset representatives from `dir`, computing and storing them on a miss.
/// A corrupt or stale file is never trusted; it is recomputed and replaced.
pub fn cache_cosets(
    dir: &Path,
    rs: &RootSystem,
    theta: &[usize],
    cap: u128,
) -> flagheight::error::Result<(CosetList, CacheStatus)> {
    let theta = normalize_theta(rs, theta)?;
    let path = cache_path(dir, rs, &theta);
    let previous = if path.exists() {
        match read_cache(&path, rs, &theta) {
            Ok(list) => return Ok((list, CacheStatus::Hit)),
            Err(e) => Some(e.to_string()),
        }
    } else {
        None
    };
    let list = coset_representatives(rs, &theta, cap)?;
    let status = match (write_cache(&path, rs, &list), previous) {
        (Err(e), _) => CacheStatus::Unwritable(format!("{}: {e}", path.display())),
        (Ok(()), Some(reason)) => CacheStatus::Rebuilt(reason),
        (Ok(()), None) => CacheStatus::Created,
    };
    Ok((list, status))
}

#[cfg(test)]
mod tests {
    use super::*;
    use flagheight::weyl::DEFAULT_COSET_CAP;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn round_trip() {
        let r = rs("A3");
        let list = coset_representatives(&r, &[], DEFAULT_COSET_CAP).unwrap();
        let bytes = encode(&cache_key(&r, &[]), &list);
        assert_eq!(&bytes[..8], &MAGIC);
        assert_eq!(decode(&bytes, &r, &[], &cache_key(&r, &[])).unwrap(), list);
    }

    #[test]
    fn stale_key_is_a_miss() {
        let r = rs("A2");
        let list = coset_representatives(&r, &[0], DEFAULT_COSET_CAP).unwrap();
        let bytes = encode("A2|0|0.0.0-old", &list);
        assert!(matches!(
            decode(&bytes, &r, &[0], &cache_key(&r, &[0])),
            Err(CacheError::KeyMismatch { .. })
        ));
    }

    #[test]
    fn corruption_is_detected() {
        let r = rs("B2");
        let list = coset_representatives(&r, &[], DEFAULT_COSET_CAP).unwrap();
        let key = cache_key(&r, &[]);
        let mut bytes = encode(&key, &list);
        let last = bytes.len() - 1;
        bytes[last] ^= 1;
        assert!(matches!(decode(&bytes, &r, &[], &key), Err(CacheError::HashMismatch)));
        assert!(matches!(decode(&bytes[..20], &r, &[], &key), Err(CacheError::Malformed)));
        bytes[0] = b'X';
        assert!(matches!(decode(&bytes, &r, &[], &key), Err(CacheError::BadMagic)));
    }

    #[test]
    fn directory_cache_lifecycle() {
        let dir = tempfile::tempdir().unwrap();
        let r = rs("D4");
        let (list, status) = cache_cosets(dir.path(), &r, &[1, 2, 3], DEFAULT_COSET_CAP).unwrap();
        assert_eq!(status, CacheStatus::Created);
        assert_eq!(list.len(), 8);
        let (again, status) = cache_cosets(dir.path(), &r, &[3, 2, 1], DEFAULT_COSET_CAP).unwrap();
        assert_eq!(status, CacheStatus::Hit);
        assert_eq!(again, list);

        let path = cache_path(dir.path(), &r, &[1, 2, 3]);
        fs::write(&path, b"garbage").unwrap();
        let (rebuilt, status) = cache_cosets(dir.path(), &r, &[1, 2, 3], DEFAULT_COSET_CAP).unwrap();
        assert!(matches!(status, CacheStatus::Rebuilt(_)));
        assert_eq!(rebuilt, list);
    }
}

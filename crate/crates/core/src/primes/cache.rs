//! On-disk prime table: 8-byte magic `PRIMCACH`, the sieve limit as a
//! little-endian `u64`, then every prime as a little-endian `u64`.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};

pub const MAGIC: &[u8; 8] = b"PRIMCACH";
pub const CACHE_FILE: &str = "primes.bin";
pub const CACHE_ENV: &str = "PRIMORIAL_GAP_CACHE";

/// Cache directory from `PRIMORIAL_GAP_CACHE`, falling back to `./.cache`.
pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("./.cache"))
}

pub fn write_table(path: &Path, limit: u64, primes: &[u64]) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = path.with_extension("tmp");
    {
        let mut w = BufWriter::new(File::create(&tmp)?);
        w.write_all(MAGIC)?;
        w.write_all(&limit.to_le_bytes())?;
        for p in primes {
            w.write_all(&p.to_le_bytes())?;
        }
        w.flush()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Reads only the header, returning the stored limit.
pub fn read_limit(path: &Path) -> Result<u64> {
    let mut r = File::open(path)?;
    let mut header = [0u8; 16];
    r.read_exact(&mut header)?;
    check_magic(&header)?;
    Ok(u64::from_le_bytes(header[8..16].try_into().unwrap()))
}

pub fn read_table(path: &Path) -> Result<(u64, Vec<u64>)> {
    let mut r = BufReader::new(File::open(path)?);
    let mut header = [0u8; 16];
    r.read_exact(&mut header)?;
    check_magic(&header)?;
    let limit = u64::from_le_bytes(header[8..16].try_into().unwrap());
    let mut body = Vec::new();
    r.read_to_end(&mut body)?;
    if body.len() % 8 != 0 {
        return Err(Error::Cache(format!("{}: truncated prime list", path.display())));
    }
    let primes: Vec<u64> = body
        .chunks_exact(8)
        .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    let ordered = primes.windows(2).all(|w| w[0] < w[1]);
    if primes.first() != Some(&2) || !ordered || primes.last().is_some_and(|&p| p > limit) {
        return Err(Error::Cache(format!("{}: corrupt prime list", path.display())));
    }
    Ok((limit, primes))
}

fn check_magic(header: &[u8; 16]) -> Result<()> {
    if &header[..8] != MAGIC {
        return Err(Error::Cache("bad magic, expected PRIMCACH".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_layout_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(CACHE_FILE);
        write_table(&path, 10, &[2, 3, 5, 7]).unwrap();
        let bytes = fs::read(&path).unwrap();
        assert_eq!(&bytes[..8], b"PRIMCACH");
        assert_eq!(&bytes[8..16], &10u64.to_le_bytes());
        assert_eq!(bytes.len(), 16 + 4 * 8);
        assert_eq!(&bytes[16..24], &2u64.to_le_bytes());
        assert_eq!(read_limit(&path).unwrap(), 10);
        assert_eq!(read_table(&path).unwrap(), (10, vec![2, 3, 5, 7]));
    }

    #[test]
    fn rejects_bad_magic_and_truncation() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.bin");
        fs::write(&path, b"NOTCACHE\x0a\0\0\0\0\0\0\0").unwrap();
        assert!(matches!(read_table(&path), Err(Error::Cache(_))));
        write_table(&path, 10, &[2, 3, 5, 7]).unwrap();
        let mut bytes = fs::read(&path).unwrap();
        bytes.pop();
        fs::write(&path, &bytes).unwrap();
        assert!(matches!(read_table(&path), Err(Error::Cache(_))));
    }
}

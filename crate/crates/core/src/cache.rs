//! Optional on-disk persistence for the dimension-row and `P(t)·B(t)`
//! caches.
//!
//! Files are versioned and carry a SHA-256 checksum of their payload. A
//! mismatched checksum, unknown version, or malformed payload simply makes
//! the loader ignore the file: corruption triggers recomputation, never a
//! wrong answer.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use sha2::{Digest, Sha256};

use crate::combinatorics;
use crate::poly::IntPolynomial;
use crate::series;

const FORMAT_VERSION: &str = "v1";

fn file_for(dir: &Path, stem: &str) -> PathBuf {
    dir.join(format!("{stem}-{FORMAT_VERSION}.cache"))
}

fn checksum(payload: &str) -> String {
    let digest = Sha256::digest(payload.as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn write_checked(path: &Path, payload: String) -> io::Result<()> {
    let header = format!(
        "hsop-cache {FORMAT_VERSION} sha256={}\n",
        checksum(&payload)
    );
    let tmp = path.with_extension("cache.tmp");
    fs::write(&tmp, header + &payload)?;
    fs::rename(&tmp, path)
}

/// Returns the payload if the header and checksum verify, `None` otherwise.
fn read_checked(path: &Path) -> Option<String> {
    let text = fs::read_to_string(path).ok()?;
    let (header, payload) = text.split_once('\n')?;
    let expected = header
        .strip_prefix(&format!("hsop-cache {FORMAT_VERSION} sha256="))?
        .trim();
    if checksum(payload) != expected {
        return None;
    }
    Some(payload.to_string())
}

/// Persists both caches into `dir` (created if missing).
pub fn save_to_dir(dir: &Path) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut rows_payload = String::new();
    for ((n, m), row) in combinatorics::export_rows() {
        let values: Vec<String> = row.iter().map(BigUint::to_string).collect();
        rows_payload.push_str(&format!("{n} {m} : {}\n", values.join(" ")));
    }
    write_checked(&file_for(dir, "dimension-rows"), rows_payload)?;

    let mut pb_payload = String::new();
    for (n, poly) in series::export_pb() {
        let values: Vec<String> = poly.coeffs().iter().map(BigInt::to_string).collect();
        pb_payload.push_str(&format!("{n} : {}\n", values.join(" ")));
    }
    write_checked(&file_for(dir, "pb-polynomials"), pb_payload)
}

/// Which cache files were accepted by [`load_from_dir`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadOutcome {
    pub dimension_rows: bool,
    pub pb_polynomials: bool,
}

/// Seeds the in-memory caches from `dir`. Missing or corrupt files are
/// skipped silently; the caches then refill by computation.
pub fn load_from_dir(dir: &Path) -> LoadOutcome {
    let mut outcome = LoadOutcome::default();
    if let Some(payload) = read_checked(&file_for(dir, "dimension-rows")) {
        let mut rows = Vec::new();
        let mut ok = true;
        for line in payload.lines() {
            match parse_row_line(line) {
                Some(row) => rows.push(row),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            combinatorics::import_rows(rows);
            outcome.dimension_rows = true;
        }
    }
    if let Some(payload) = read_checked(&file_for(dir, "pb-polynomials")) {
        let mut entries = Vec::new();
        let mut ok = true;
        for line in payload.lines() {
            match parse_pb_line(line) {
                Some(entry) => entries.push(entry),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            series::import_pb(entries);
            outcome.pb_polynomials = true;
        }
    }
    outcome
}

fn parse_row_line(line: &str) -> Option<((u32, u32), Vec<BigUint>)> {
    let (key, values) = line.split_once(" : ")?;
    let mut key_parts = key.split_whitespace();
    let n = u32::from_str(key_parts.next()?).ok()?;
    let m = u32::from_str(key_parts.next()?).ok()?;
    if key_parts.next().is_some() {
        return None;
    }
    let row: Option<Vec<BigUint>> = values
        .split_whitespace()
        .map(|v| BigUint::from_str(v).ok())
        .collect();
    Some(((n, m), row?))
}

fn parse_pb_line(line: &str) -> Option<(u32, IntPolynomial)> {
    let (key, values) = line.split_once(" : ")?;
    let n = u32::from_str(key.trim()).ok()?;
    let coeffs: Option<Vec<BigInt>> = values
        .split_whitespace()
        .map(|v| BigInt::from_str(v).ok())
        .collect();
    Some((n, IntPolynomial::from_coeffs(coeffs?)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::invariant_dim;
    use num_traits::One;

    #[test]
    fn roundtrip_and_corruption_detection() {
        let dir = std::env::temp_dir().join(format!("hsop-cache-test-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);

        // populate both caches, then persist
        let _ = invariant_dim(6, 10);
        let _ = series::pb_polynomial(5).unwrap();
        save_to_dir(&dir).unwrap();

        let outcome = load_from_dir(&dir);
        assert!(outcome.dimension_rows);
        assert!(outcome.pb_polynomials);

        // flip one byte of the payload: the checksum must reject the file
        let path = file_for(&dir, "dimension-rows");
        let mut text = fs::read_to_string(&path).unwrap();
        let pos = text.len() - 2;
        let replacement = if &text[pos..pos + 1] == "1" { "2" } else { "1" };
        text.replace_range(pos..pos + 1, replacement);
        fs::write(&path, text).unwrap();
        let outcome = load_from_dir(&dir);
        assert!(!outcome.dimension_rows);
        assert!(outcome.pb_polynomials);

        // a garbage file is ignored too
        fs::write(&path, "not a cache").unwrap();
        assert!(!load_from_dir(&dir).dimension_rows);

        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn parse_rejects_malformed_lines() {
        assert!(parse_row_line("nonsense").is_none());
        assert!(parse_row_line("1 2 3 : 4").is_none());
        assert!(parse_pb_line("x : 1 2").is_none());
        let (key, poly) = parse_pb_line("3 : 1 0 -1").unwrap();
        assert_eq!(key, 3);
        assert!(poly.coeff(0).is_one());
    }
}

//! On-disk census cache: one file per order, one record per line, a
//! completion marker at the end. Incomplete or malformed files are treated
//! as absent, so an interrupted run simply recomputes that order.

use super::{CensusRecord, ConditionFlags};
use crate::circulant::ConnectionSet;
use crate::conditions::Verdict;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

const COMPLETE_MARKER: &str = "#complete";

pub fn order_cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("order_{n}.records"))
}

fn verdict_token(v: Verdict) -> &'static str {
    match v {
        Verdict::Stable => "stable",
        Verdict::TriviallyUnstable => "trivially-unstable",
        Verdict::NontriviallyUnstable => "nontrivially-unstable",
    }
}

fn parse_verdict(token: &str) -> Option<Verdict> {
    match token {
        "stable" => Some(Verdict::Stable),
        "trivially-unstable" => Some(Verdict::TriviallyUnstable),
        "nontrivially-unstable" => Some(Verdict::NontriviallyUnstable),
        _ => None,
    }
}

fn hex_encode(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn hex_decode(text: &str) -> Option<Vec<u8>> {
    if text.len() % 2 != 0 {
        return None;
    }
    (0..text.len())
        .step_by(2)
        .map(|i| u8::from_str_radix(&text[i..i + 2], 16).ok())
        .collect()
}

fn record_line(r: &CensusRecord) -> String {
    let set_csv: Vec<String> = r.set.members().iter().map(|v| v.to_string()).collect();
    format!(
        "{};{};{};{};{}",
        r.order,
        set_csv.join(","),
        hex_encode(&r.fingerprint),
        verdict_token(r.verdict),
        r.flags.tokens().join(",")
    )
}

fn parse_line(n: usize, line: &str) -> Option<CensusRecord> {
    let mut parts = line.split(';');
    let order: usize = parts.next()?.parse().ok()?;
    if order != n {
        return None;
    }
    let set_csv = parts.next()?;
    let values: Vec<usize> = if set_csv.is_empty() {
        Vec::new()
    } else {
        set_csv.split(',').map(|v| v.parse().ok()).collect::<Option<Vec<usize>>>()?
    };
    let set = ConnectionSet::new(n, values).ok()?;
    let fingerprint: [u8; 16] = hex_decode(parts.next()?)?.try_into().ok()?;
    let verdict = parse_verdict(parts.next()?)?;
    let flags_csv = parts.next()?;
    let flags = if flags_csv.is_empty() {
        ConditionFlags::default()
    } else {
        ConditionFlags::from_tokens(flags_csv.split(','))?
    };
    if parts.next().is_some() {
        return None;
    }
    Some(CensusRecord { order: n, set, fingerprint, verdict, flags })
}

/// Loads one order's records. Returns None unless the file exists, every
/// line parses for this order, and the completion marker is present.
pub fn load_order(dir: &Path, n: usize) -> Option<Vec<CensusRecord>> {
    let text = fs::read_to_string(order_cache_path(dir, n)).ok()?;
    let mut records = Vec::new();
    let mut complete = false;
    for line in text.lines() {
        if complete {
            return None;
        }
        if line == COMPLETE_MARKER {
            complete = true;
            continue;
        }
        records.push(parse_line(n, line)?);
    }
    complete.then_some(records)
}

/// Writes one order's records with the completion marker, via a temporary
/// file so a crash never leaves a file that passes the completeness check.
pub fn store_order(dir: &Path, n: usize, records: &[CensusRecord]) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let path = order_cache_path(dir, n);
    let tmp = path.with_extension("tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        for r in records {
            writeln!(f, "{}", record_line(r))?;
        }
        writeln!(f, "{COMPLETE_MARKER}")?;
        f.sync_all()?;
    }
    fs::rename(&tmp, &path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::enumerate_order;

    fn tmp_dir(tag: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("circstab-cache-test-{tag}-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);
        dir
    }

    #[test]
    fn round_trip() {
        let dir = tmp_dir("roundtrip");
        let records = enumerate_order(8).unwrap();
        store_order(&dir, 8, &records).unwrap();
        assert_eq!(load_order(&dir, 8), Some(records));
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn missing_or_incomplete_is_none() {
        let dir = tmp_dir("incomplete");
        assert_eq!(load_order(&dir, 8), None);
        let records = enumerate_order(8).unwrap();
        store_order(&dir, 8, &records).unwrap();
        // Truncate away the completion marker.
        let path = order_cache_path(&dir, 8);
        let text = fs::read_to_string(&path).unwrap();
        let truncated = text.trim_end_matches(&format!("{COMPLETE_MARKER}\n")).to_string();
        fs::write(&path, truncated).unwrap();
        assert_eq!(load_order(&dir, 8), None);
        // Corrupt one field.
        store_order(&dir, 8, &records).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, text.replace("nontrivially-unstable", "sideways")).unwrap();
        assert_eq!(load_order(&dir, 8), None);
        // Wrong order in the lines.
        store_order(&dir, 10, &enumerate_order(10).unwrap()).unwrap();
        let ten = fs::read_to_string(order_cache_path(&dir, 10)).unwrap();
        fs::write(&path, ten).unwrap();
        assert_eq!(load_order(&dir, 8), None);
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn census_reuses_the_cache() {
        let dir = tmp_dir("reuse");
        let fresh = crate::census::run_census(8, 10, 2, Some(&dir)).unwrap();
        assert!(order_cache_path(&dir, 9).exists());
        let reloaded = crate::census::run_census(8, 10, 2, Some(&dir)).unwrap();
        assert_eq!(fresh.summary, reloaded.summary);
        assert_eq!(fresh.nontrivial, reloaded.nontrivial);
        let _ = fs::remove_dir_all(&dir);
    }
}

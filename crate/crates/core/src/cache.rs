//! On-disk persistence of enumeration levels.
//!
//! Line-based text:
//!
//! ```text
//! cisg-enumeration-cache 1 <library version>
//! <family> <frobenius> <gens> <gens> ...
//! ```
//!
//! where each `<gens>` is a comma-separated minimal generator list. A header
//! mismatch invalidates the whole file.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::enumeration::{Family, FamilyKind};
use crate::error::{Error, Result};
use crate::scalar::Element;
use crate::semigroup::NumericalSemigroup;

const MAGIC: &str = "cisg-enumeration-cache";
const FORMAT_VERSION: u32 = 1;

fn header() -> String {
    format!("{MAGIC} {FORMAT_VERSION} {}", env!("CARGO_PKG_VERSION"))
}

/// Outcome of loading a cache file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    /// This many levels were loaded.
    Loaded(usize),
    Missing,
    /// Written by a different format or library version.
    Stale,
    /// Unparsable, or a record failed validation.
    Corrupt(String),
}

pub(crate) fn write<T: Element>(path: &Path, entries: &[(FamilyKind, T, Family<T>)]) -> Result<()> {
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
    let file = fs::File::create(path).map_err(io)?;
    let mut out = BufWriter::new(file);
    writeln!(out, "{}", header()).map_err(io)?;
    for (kind, f, list) in entries {
        write!(out, "{} {}", kind.tag(), f).map_err(io)?;
        for s in list.iter() {
            write!(out, " {}", s.generator_set()).map_err(io)?;
        }
        writeln!(out).map_err(io)?;
    }
    out.flush().map_err(io)
}

type Entry<T> = (FamilyKind, T, Vec<NumericalSemigroup<T>>);

pub(crate) fn read<T: Element>(path: &Path) -> (CacheStatus, Vec<Entry<T>>) {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
            return (CacheStatus::Missing, vec![])
        }
        Err(e) => return (CacheStatus::Corrupt(e.to_string()), vec![]),
    };
    let mut lines = text.lines();
    if lines.next() != Some(header().as_str()) {
        return (CacheStatus::Stale, vec![]);
    }
    let mut entries = Vec::new();
    for (n, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match parse_record(line) {
            Ok(e) => entries.push(e),
            Err(msg) => {
                return (
                    CacheStatus::Corrupt(format!("line {}: {msg}", n + 2)),
                    vec![],
                )
            }
        }
    }
    (CacheStatus::Loaded(entries.len()), entries)
}

fn parse_record<T: Element>(line: &str) -> std::result::Result<Entry<T>, String> {
    let mut fields = line.split_whitespace();
    let kind: FamilyKind = fields.next().ok_or("empty record")?.parse()?;
    let f: T = fields
        .next()
        .ok_or("missing frobenius")?
        .parse()
        .map_err(|_| "bad frobenius".to_string())?;
    let mut list = Vec::new();
    for tok in fields {
        let gens = tok
            .split(',')
            .map(|g| g.parse::<T>().map_err(|_| format!("bad generator '{g}'")))
            .collect::<std::result::Result<Vec<T>, _>>()?;
        let s = NumericalSemigroup::from_minimal(&gens).map_err(|e| e.to_string())?;
        if s.frobenius() != f {
            return Err(format!("{s} does not have Frobenius number {f}"));
        }
        list.push(s);
    }
    if list.windows(2).any(|w| w[0] >= w[1]) {
        return Err("semigroups not strictly sorted".into());
    }
    Ok((kind, f, list))
}

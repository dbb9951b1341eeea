//! Text, CSV and JSON renderings. CSV and JSON output depends only on the
//! computed values, never on timing or thread count (except `bench`).

use std::collections::BTreeMap;
use std::fmt::Write;

use cisg::{Enumerator, FamilyKind, Semigroup};
use serde::Serialize;

use crate::{join, Format, Result};

#[derive(Debug, Serialize)]
pub struct EnumRow {
    pub generators: Vec<i64>,
    pub frobenius: i64,
    pub genus: i64,
    pub multiplicity: i64,
    pub embedding_dimension: usize,
}

impl From<&Semigroup> for EnumRow {
    fn from(s: &Semigroup) -> Self {
        EnumRow {
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            multiplicity: s.multiplicity(),
            embedding_dimension: s.embedding_dimension(),
        }
    }
}

/// One genus of the count table. Families not requested stay `None` and
/// are left out of every format.
#[derive(Debug, Serialize)]
pub struct TableRow {
    pub genus: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ci: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub free: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub telescopic: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub planar: Option<usize>,
    /// Embedding dimension → number of complete intersections.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embdim: Option<BTreeMap<usize, usize>>,
}

impl TableRow {
    pub fn compute(
        e: &Enumerator<i64>,
        genus: u64,
        families: &[FamilyKind],
        with_embdim: bool,
    ) -> Result<Self> {
        let count = |k: FamilyKind| -> Result<Option<usize>> {
            if families.contains(&k) {
                Ok(Some(e.enumerate_by_genus(k, genus)?.len()))
            } else {
                Ok(None)
            }
        };
        let embdim = if with_embdim {
            Some(e.embdim_histogram(FamilyKind::CompleteIntersection, genus..=genus)?)
        } else {
            None
        };
        Ok(TableRow {
            genus,
            ci: count(FamilyKind::CompleteIntersection)?,
            free: count(FamilyKind::Free)?,
            telescopic: count(FamilyKind::Telescopic)?,
            planar: count(FamilyKind::Planar)?,
            embdim,
        })
    }

    fn counts(&self) -> impl Iterator<Item = usize> + '_ {
        [self.ci, self.free, self.telescopic, self.planar]
            .into_iter()
            .flatten()
    }
}

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub genus: u64,
    pub semigroups: usize,
    pub nodes: u64,
    pub candidates: u64,
    pub levels: u64,
    pub micros: u64,
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn enumeration(rows: &[EnumRow], format: Format) -> String {
    match format {
        Format::Text => rows.iter().map(|r| join(&r.generators) + "\n").collect(),
        Format::Csv => {
            let mut out =
                String::from("generators,frobenius,genus,multiplicity,embedding_dimension\n");
            for r in rows {
                writeln!(
                    out,
                    "\"{}\",{},{},{},{}",
                    join(&r.generators),
                    r.frobenius,
                    r.genus,
                    r.multiplicity,
                    r.embedding_dimension
                )
                .unwrap();
            }
            out
        }
        Format::Json => json(rows),
    }
}

/// Largest embedding dimension in any row, for fixed-width histogram
/// columns.
fn max_embdim(rows: &[TableRow]) -> usize {
    rows.iter()
        .filter_map(|r| r.embdim.as_ref())
        .filter_map(|h| h.keys().next_back().copied())
        .max()
        .unwrap_or(1)
}

pub fn table(
    rows: &[TableRow],
    families: &[FamilyKind],
    with_embdim: bool,
    format: Format,
) -> String {
    let names: Vec<&str> = FamilyKind::ALL
        .iter()
        .filter(|k| families.contains(k))
        .map(|k| k.tag())
        .collect();
    let emax = max_embdim(rows);
    let hist_cols = |r: &TableRow| -> Vec<usize> {
        let h = r.embdim.as_ref().expect("requested");
        (1..=emax)
            .map(|e| h.get(&e).copied().unwrap_or(0))
            .collect()
    };
    match format {
        Format::Json => json(rows),
        Format::Csv => {
            let mut header: Vec<String> = std::iter::once("genus".to_string())
                .chain(names.iter().map(|s| s.to_string()))
                .collect();
            if with_embdim {
                header.extend((1..=emax).map(|e| format!("ci_e{e}")));
            }
            let mut out = header.join(",") + "\n";
            for r in rows {
                let mut cells: Vec<String> = std::iter::once(r.genus)
                    .chain(r.counts().map(|c| c as u64))
                    .map(|v| v.to_string())
                    .collect();
                if with_embdim {
                    cells.extend(hist_cols(r).iter().map(ToString::to_string));
                }
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            write!(out, "{:>6}", "genus").unwrap();
            for n in &names {
                write!(out, " {n:>10}").unwrap();
            }
            out.push('\n');
            for r in rows {
                write!(out, "{:>6}", r.genus).unwrap();
                for c in r.counts() {
                    write!(out, " {c:>10}").unwrap();
                }
                out.push('\n');
            }
            if with_embdim {
                let mut total = vec![0usize; emax];
                for r in rows {
                    for (t, c) in total.iter_mut().zip(hist_cols(r)) {
                        *t += c;
                    }
                }
                let parts: Vec<String> = total
                    .iter()
                    .enumerate()
                    .filter(|(_, &n)| n > 0)
                    .map(|(i, n)| format!("e={}: {n}", i + 1))
                    .collect();
                writeln!(
                    out,
                    "complete intersections by embedding dimension: {}",
                    parts.join(", ")
                )
                .unwrap();
            }
            if let Some(line) = local_minima(rows) {
                out.push_str(&line);
            }
            out
        }
    }
}

/// Interior strict local minima of the ci column and how many fall on
/// genus ≡ 2 (mod 3). Reported, not asserted.
fn local_minima(rows: &[TableRow]) -> Option<String> {
    let ci: Vec<(u64, usize)> = rows.iter().filter_map(|r| Some((r.genus, r.ci?))).collect();
    if ci.len() < 3 {
        return None;
    }
    let minima: Vec<u64> = ci
        .windows(3)
        .filter(|w| w[1].1 < w[0].1 && w[1].1 < w[2].1)
        .map(|w| w[1].0)
        .collect();
    let hits = minima.iter().filter(|&&g| g % 3 == 2).count();
    Some(format!(
        "observation: ci has {} local minima, {hits} at genus ≡ 2 (mod 3): {:?}\n",
        minima.len(),
        minima
    ))
}

pub fn bench(rows: &[BenchRow], format: Format) -> String {
    match format {
        Format::Json => json(rows),
        Format::Csv => {
            let mut out = String::from("genus,semigroups,nodes,candidates,levels,micros\n");
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.genus, r.semigroups, r.nodes, r.candidates, r.levels, r.micros
                )
                .unwrap();
            }
            out
        }
        Format::Text => {
            let mut out = format!(
                "{:>6} {:>10} {:>10} {:>12} {:>7} {:>12}\n",
                "genus", "semigroups", "nodes", "candidates", "levels", "time"
            );
            let mut total = 0u64;
            for r in rows {
                total += r.micros;
                writeln!(
                    out,
                    "{:>6} {:>10} {:>10} {:>12} {:>7} {:>10.3}ms",
                    r.genus,
                    r.semigroups,
                    r.nodes,
                    r.candidates,
                    r.levels,
                    r.micros as f64 / 1000.0
                )
                .unwrap();
            }
            writeln!(out, "total {:.3} ms", total as f64 / 1000.0).unwrap();
            out
        }
    }
}

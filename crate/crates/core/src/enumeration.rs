//! Enumeration of every complete-intersection, free, telescopic or planar
//! numerical semigroup with a given Frobenius number.
//!
//! Each family is built top-down from the Frobenius formula of a gluing:
//!
//! * complete intersections from `f = d₁f₁ + d₂f₂ + d₁d₂`, gluing one
//!   semigroup with Frobenius number `f₁` to one with `f₂`;
//! * free (and telescopic, planar) semigroups from
//!   `f = d·f' + r(d − 1)`, gluing one semigroup with Frobenius number `f'`
//!   to ℕ.
//!
//! The sets for smaller Frobenius numbers are memoized per
//! `(family, frobenius)`. Results are deduplicated and sorted by generator
//! list, so they do not depend on iteration order or thread count.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::RangeInclusive;
use std::path::Path;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::bounds;
use crate::cache::{self, CacheStatus};
use crate::error::{Error, Result};
use crate::gluing::from_glued_union;
use crate::scalar::Element;
use crate::semigroup::NumericalSemigroup;

/// A sorted, duplicate-free list of semigroups.
pub type Family<T> = Arc<[NumericalSemigroup<T>]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    CompleteIntersection,
    Free,
    Telescopic,
    Planar,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::CompleteIntersection,
        FamilyKind::Free,
        FamilyKind::Telescopic,
        FamilyKind::Planar,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            FamilyKind::CompleteIntersection => "ci",
            FamilyKind::Free => "free",
            FamilyKind::Telescopic => "telescopic",
            FamilyKind::Planar => "planar",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ci" | "complete-intersection" => Ok(FamilyKind::CompleteIntersection),
            "free" | "fr" => Ok(FamilyKind::Free),
            "telescopic" | "tl" => Ok(FamilyKind::Telescopic),
            "planar" | "pc" => Ok(FamilyKind::Planar),
            other => Err(format!("unknown family '{other}'")),
        }
    }
}

/// Whether the analytic bounds are used to cut the search.
///
/// `None` keeps only the loops forced by `F(Γᵢ) ≥ −1`; the output is the
/// same either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pruning {
    None,
    #[default]
    Bounds,
}

impl FromStr for Pruning {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "none" => Ok(Pruning::None),
            "bounds" => Ok(Pruning::Bounds),
            other => Err(format!("unknown pruning mode '{other}'")),
        }
    }
}

/// Work counters accumulated since the enumerator was created.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Parameter tuples `(d₁, d₂, f₁, f₂)` or `(d, r, f')` visited.
    pub nodes: u64,
    /// Candidate gluings tested against the membership conditions.
    pub candidates: u64,
    /// `(family, frobenius)` sets computed rather than read from memory.
    pub levels: u64,
}

/// One row of the count table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountRow {
    pub genus: u64,
    pub ci: usize,
    pub fr: usize,
    pub tl: usize,
    pub pc: usize,
}

/// `−1` or an odd positive integer: the possible Frobenius numbers of a
/// complete intersection.
fn admissible<T: Element>(f: T) -> bool {
    f == -T::one() || (f > T::zero() && f.is_odd())
}

fn next_admissible<T: Element>(f: T) -> T {
    if f == -T::one() {
        T::one()
    } else {
        f + T::lit(2)
    }
}

pub struct Enumerator<T: Element> {
    pruning: Pruning,
    parallel: bool,
    memoize: bool,
    memo: Mutex<HashMap<(FamilyKind, T), Family<T>>>,
    nodes: AtomicU64,
    candidates: AtomicU64,
    levels: AtomicU64,
}

impl<T: Element> Default for Enumerator<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Element> Enumerator<T> {
    /// Sequential, memoized, with bound pruning.
    pub fn new() -> Self {
        Enumerator {
            pruning: Pruning::Bounds,
            parallel: false,
            memoize: true,
            memo: Mutex::new(HashMap::new()),
            nodes: AtomicU64::new(0),
            candidates: AtomicU64::new(0),
            levels: AtomicU64::new(0),
        }
    }

    pub fn with_pruning(mut self, pruning: Pruning) -> Self {
        self.pruning = pruning;
        self
    }

    /// Spread each level's parameter loop over the current rayon pool.
    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    /// With `false`, every sub-level is recomputed whenever it is needed.
    pub fn with_memo(mut self, memoize: bool) -> Self {
        self.memoize = memoize;
        self
    }

    pub fn stats(&self) -> EnumerationStats {
        EnumerationStats {
            nodes: self.nodes.load(Ordering::Relaxed),
            candidates: self.candidates.load(Ordering::Relaxed),
            levels: self.levels.load(Ordering::Relaxed),
        }
    }

    pub fn reset_stats(&self) {
        self.nodes.store(0, Ordering::Relaxed);
        self.candidates.store(0, Ordering::Relaxed);
        self.levels.store(0, Ordering::Relaxed);
    }

    /// Every semigroup of `family` with Frobenius number `frobenius`,
    /// sorted by generator list. Even or zero Frobenius numbers give the
    /// empty list; values below −1 are rejected.
    pub fn enumerate(&self, family: FamilyKind, frobenius: T) -> Result<Family<T>> {
        if frobenius < -T::one() {
            return Err(Error::InvalidFrobenius(frobenius.widen()));
        }
        self.level(family, frobenius)
    }

    /// Symmetric semigroups have conductor `2g`, so this is
    /// `enumerate(family, 2g − 1)`.
    pub fn enumerate_by_genus(&self, family: FamilyKind, genus: u64) -> Result<Family<T>> {
        let f = genus
            .checked_mul(2)
            .and_then(|c| T::from_usize(c as usize))
            .ok_or_else(|| Error::InvalidFrobenius(i128::from(genus) * 2 - 1))?;
        self.enumerate(family, f - T::one())
    }

    pub fn count_table(&self, genus: RangeInclusive<u64>) -> Result<Vec<CountRow>> {
        genus
            .map(|g| {
                let count = |family| self.enumerate_by_genus(family, g).map(|s| s.len());
                Ok(CountRow {
                    genus: g,
                    ci: count(FamilyKind::CompleteIntersection)?,
                    fr: count(FamilyKind::Free)?,
                    tl: count(FamilyKind::Telescopic)?,
                    pc: count(FamilyKind::Planar)?,
                })
            })
            .collect()
    }

    /// Embedding dimension → number of semigroups, over a genus range.
    pub fn embdim_histogram(
        &self,
        family: FamilyKind,
        genus: RangeInclusive<u64>,
    ) -> Result<BTreeMap<usize, usize>> {
        let mut hist = BTreeMap::new();
        for g in genus {
            for s in self.enumerate_by_genus(family, g)?.iter() {
                *hist.entry(s.embedding_dimension()).or_insert(0) += 1;
            }
        }
        Ok(hist)
    }

    fn level(&self, family: FamilyKind, f: T) -> Result<Family<T>> {
        if f == -T::one() {
            return Ok(Arc::from(vec![NumericalSemigroup::natural()]));
        }
        if !admissible(f) {
            return Ok(Arc::from(Vec::new()));
        }
        if self.memoize {
            if let Some(hit) = self.memo.lock().unwrap().get(&(family, f)) {
                return Ok(hit.clone());
            }
        }
        self.levels.fetch_add(1, Ordering::Relaxed);
        let computed = match family {
            FamilyKind::CompleteIntersection => self.ci_level(f)?,
            _ => self.free_level(family, f)?,
        };
        if self.memoize {
            let mut memo = self.memo.lock().unwrap();
            return Ok(memo.entry((family, f)).or_insert(computed).clone());
        }
        Ok(computed)
    }

    /// Fills the memo for every sub-level before a (possibly parallel)
    /// sweep reads them.
    fn prefetch(&self, family: FamilyKind, fs: impl IntoIterator<Item = T>) -> Result<()> {
        if !self.memoize {
            return Ok(());
        }
        let distinct: BTreeSet<T> = fs.into_iter().collect();
        for f in distinct {
            self.level(family, f)?;
        }
        Ok(())
    }

    fn sweep<I, O, F>(&self, items: &[I], work: F) -> Result<Vec<O>>
    where
        I: Sync,
        O: Send,
        F: Fn(&I) -> Result<O> + Sync + Send,
    {
        if self.parallel {
            items.par_iter().map(work).collect()
        } else {
            items.iter().map(work).collect()
        }
    }

    fn ci_level(&self, f: T) -> Result<Family<T>> {
        let one = T::one();
        let two = T::lit(2);
        let c = f + one;
        let mut found: BTreeSet<Vec<T>> = BTreeSet::new();

        // With pruning, d₁ < f except for ⟨2, f+2⟩, which is seeded. The
        // unpruned loop reaches it as d₁ = f+2, d₂ = 2.
        let d1_max = match self.pruning {
            Pruning::Bounds => {
                found.insert(vec![two, f + two]);
                f - one
            }
            Pruning::None => f + two,
        };

        let mut tasks: Vec<(T, T, T, T)> = Vec::new();
        let mut d1 = T::lit(3);
        while d1 <= d1_max {
            let d2_max = match self.pruning {
                Pruning::Bounds => (d1 - one).min(c / (d1 - one) + one),
                Pruning::None => d1 - one,
            };
            let mut d2 = two;
            while d2 <= d2_max {
                if d1.gcd(&d2) == one {
                    // f₂ ascending over −1, 1, 3, …; f₁ solved, f₁ ≥ −1.
                    let mut f2 = -one;
                    loop {
                        let rem = f - d1 * d2 - d2 * f2;
                        if rem < -d1 {
                            break;
                        }
                        if rem % d1 == T::zero() && admissible(rem / d1) {
                            tasks.push((d1, d2, rem / d1, f2));
                        }
                        f2 = next_admissible(f2);
                    }
                }
                d2 = d2 + one;
            }
            d1 = d1 + one;
        }
        self.nodes.fetch_add(tasks.len() as u64, Ordering::Relaxed);

        self.prefetch(
            FamilyKind::CompleteIntersection,
            tasks.iter().flat_map(|&(_, _, f1, f2)| [f1, f2]),
        )?;

        let batches = self.sweep(&tasks, |&(d1, d2, f1, f2)| {
            let left = self.level(FamilyKind::CompleteIntersection, f1)?;
            let right = self.level(FamilyKind::CompleteIntersection, f2)?;
            // d₂ must be a non-generator element of Γ₁, d₁ of Γ₂.
            let left: Vec<_> = left
                .iter()
                .filter(|s| s.contains(d2) && !s.is_minimal_generator(d2))
                .collect();
            let right: Vec<_> = right
                .iter()
                .filter(|s| s.contains(d1) && !s.is_minimal_generator(d1))
                .collect();
            self.candidates
                .fetch_add((left.len() * right.len()) as u64, Ordering::Relaxed);
            let mut out = Vec::with_capacity(left.len() * right.len());
            for s1 in &left {
                for s2 in &right {
                    let mut gens: Vec<T> = s1.generators().iter().map(|&g| g * d1).collect();
                    gens.extend(s2.generators().iter().map(|&g| g * d2));
                    gens.sort_unstable();
                    out.push(gens);
                }
            }
            Ok(out)
        })?;
        found.extend(batches.into_iter().flatten());
        self.materialize(found, f)
    }

    fn free_level(&self, family: FamilyKind, f: T) -> Result<Family<T>> {
        let one = T::one();
        let two = T::lit(2);
        let c = f + one;
        let nested = matches!(family, FamilyKind::Telescopic | FamilyKind::Planar);

        // f = d·f' + r(d−1) with f' ≥ −1 and r ≥ 2 forces d ≤ f + 2.
        let mut tasks: Vec<(T, T, T)> = Vec::new();
        let mut d = two;
        while d <= f + two {
            // Increasing arrangements have d_h < r_h, so F ≥ (d−1)².
            if self.pruning == Pruning::Bounds && nested && (d - one) * (d - one) >= c {
                break;
            }
            let mut fp = -one;
            loop {
                let num = f - d * fp;
                if num < two * (d - one) {
                    break;
                }
                if num % (d - one) == T::zero() {
                    let r = num / (d - one);
                    let ordered = !(nested && self.pruning == Pruning::Bounds) || r > d;
                    if d.gcd(&r) == one && ordered {
                        tasks.push((d, r, fp));
                    }
                }
                fp = next_admissible(fp);
            }
            d = d + one;
        }
        self.nodes.fetch_add(tasks.len() as u64, Ordering::Relaxed);

        self.prefetch(family, tasks.iter().map(|&(_, _, fp)| fp))?;

        let batches = self.sweep(&tasks, |&(d, r, fp)| {
            let prev = self.level(family, fp)?;
            let mut out = Vec::new();
            for s in prev.iter() {
                if !self.step_admissible(family, s, c, d, r)? {
                    continue;
                }
                self.candidates.fetch_add(1, Ordering::Relaxed);
                if s.contains(r) && !s.is_minimal_generator(r) {
                    let mut gens = s.scaled_generators(d);
                    gens.push(r);
                    gens.sort_unstable();
                    out.push(gens);
                }
            }
            Ok(out)
        })?;
        let found: BTreeSet<Vec<T>> = batches.into_iter().flatten().collect();
        self.materialize(found, f)
    }

    /// Family-specific conditions on gluing `s` (scaled by `d`) with `r·ℕ`,
    /// plus the `r_h` range when pruning.
    fn step_admissible(
        &self,
        family: FamilyKind,
        s: &NumericalSemigroup<T>,
        c: T,
        d: T,
        r: T,
    ) -> Result<bool> {
        let h = s.embedding_dimension();
        if self.pruning == Pruning::Bounds && h >= 2 {
            let range = match family {
                FamilyKind::Free | FamilyKind::CompleteIntersection => {
                    bounds::rh_range_free(h, c, d)?
                }
                FamilyKind::Telescopic => bounds::rh_range_telescopic(h, c, d)?,
                FamilyKind::Planar => bounds::rh_range_planar(h, c, d)?,
            };
            if !range.contains(r) {
                return Ok(false);
            }
        }
        let top = d * s.max_generator();
        Ok(match family {
            FamilyKind::Free | FamilyKind::CompleteIntersection => true,
            FamilyKind::Telescopic => r > top,
            FamilyKind::Planar => {
                let gens = s.generators();
                // e_{h−1} of the glued semigroup is the gcd of all but the
                // largest generator of s.
                let e_prev = gens[..gens.len() - 1]
                    .iter()
                    .fold(T::zero(), |a, &g| a.gcd(&g));
                r > top && (h < 2 || e_prev * top < r)
            }
        })
    }

    fn materialize(&self, found: BTreeSet<Vec<T>>, f: T) -> Result<Family<T>> {
        let list: Vec<Vec<T>> = found.into_iter().collect();
        let built = self.sweep(&list, |gens| {
            let s = from_glued_union(gens)?;
            debug_assert_eq!(s.frobenius(), f);
            Ok(s)
        })?;
        Ok(Arc::from(built))
    }

    /// Writes every memoized level to `path`.
    pub fn save_cache(&self, path: &Path) -> Result<()> {
        let memo = self.memo.lock().unwrap();
        let mut entries: Vec<_> = memo.iter().map(|(&(k, f), v)| (k, f, v.clone())).collect();
        entries.sort_by_key(|e| (e.0, e.1));
        cache::write(path, &entries)
    }

    /// Loads levels from `path` into the memo. Missing, stale or malformed
    /// files are ignored, as are entries that fail validation.
    pub fn load_cache(&self, path: &Path) -> CacheStatus {
        let (status, entries) = cache::read::<T>(path);
        let mut memo = self.memo.lock().unwrap();
        for (kind, f, list) in entries {
            memo.insert((kind, f), Arc::from(list));
        }
        status
    }

    pub fn memoized_levels(&self) -> usize {
        self.memo.lock().unwrap().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens(list: &Family<i64>) -> Vec<Vec<i64>> {
        list.iter().map(|s| s.generators().to_vec()).collect()
    }

    #[test]
    fn ci_worked_examples() {
        let e = Enumerator::<i64>::new();
        assert_eq!(
            gens(&e.enumerate(FamilyKind::CompleteIntersection, 11).unwrap()),
            vec![vec![2, 13], vec![3, 7], vec![4, 5], vec![4, 6, 9]]
        );
        assert_eq!(
            gens(&e.enumerate(FamilyKind::CompleteIntersection, 7).unwrap()),
            vec![vec![2, 9], vec![3, 5], vec![4, 5, 6]]
        );
    }

    #[test]
    fn trivial_and_invalid_frobenius() {
        let e = Enumerator::<i64>::new();
        for family in FamilyKind::ALL {
            assert_eq!(gens(&e.enumerate(family, -1).unwrap()), vec![vec![1]]);
            assert!(e.enumerate(family, 4).unwrap().is_empty());
            assert!(e.enumerate(family, 0).unwrap().is_empty());
            assert_eq!(
                e.enumerate(family, -3).unwrap_err(),
                Error::InvalidFrobenius(-3)
            );
            assert_eq!(
                gens(&e.enumerate_by_genus(family, 0).unwrap()),
                vec![vec![1]]
            );
        }
    }

    #[test]
    fn by_genus_examples() {
        let e = Enumerator::<i64>::new();
        assert_eq!(
            e.enumerate_by_genus(FamilyKind::CompleteIntersection, 6)
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            e.enumerate_by_genus(FamilyKind::Telescopic, 4)
                .unwrap()
                .len(),
            2
        );
        assert_eq!(e.enumerate(FamilyKind::Planar, 23).unwrap().len(), 5);
    }

    #[test]
    fn count_rows() {
        let e = Enumerator::<i64>::new();
        let rows = e.count_table(0..=12).unwrap();
        assert_eq!(
            rows[0],
            CountRow {
                genus: 0,
                ci: 1,
                fr: 1,
                tl: 1,
                pc: 1
            }
        );
        assert_eq!(
            rows[12],
            CountRow {
                genus: 12,
                ci: 11,
                fr: 11,
                tl: 8,
                pc: 5
            }
        );
    }

    #[test]
    fn histogram_small() {
        let e = Enumerator::<i64>::new();
        let h = e
            .embdim_histogram(FamilyKind::CompleteIntersection, 0..=2)
            .unwrap();
        assert_eq!(h.get(&1), Some(&1));
        assert_eq!(h.values().sum::<usize>(), 3);
    }

    #[test]
    fn pruning_memo_and_parallel_agree() {
        let reference = Enumerator::<i64>::new();
        let variants = [
            Enumerator::<i64>::new().with_pruning(Pruning::None),
            Enumerator::<i64>::new().with_memo(false),
            Enumerator::<i64>::new().with_parallel(true),
        ];
        for family in FamilyKind::ALL {
            for f in (-1..=23).step_by(2) {
                let want = gens(&reference.enumerate(family, f).unwrap());
                for v in &variants {
                    assert_eq!(
                        gens(&v.enumerate(family, f).unwrap()),
                        want,
                        "{family} f={f}"
                    );
                }
            }
        }
    }

    #[test]
    fn pruning_reduces_work() {
        let pruned = Enumerator::<i64>::new();
        let plain = Enumerator::<i64>::new().with_pruning(Pruning::None);
        pruned
            .enumerate(FamilyKind::CompleteIntersection, 61)
            .unwrap();
        plain
            .enumerate(FamilyKind::CompleteIntersection, 61)
            .unwrap();
        assert!(pruned.stats().nodes < plain.stats().nodes);
    }

    #[test]
    fn family_names_round_trip() {
        for family in FamilyKind::ALL {
            assert_eq!(family.tag().parse::<FamilyKind>().unwrap(), family);
        }
        assert!("bogus".parse::<FamilyKind>().is_err());
        assert_eq!("none".parse::<Pruning>().unwrap(), Pruning::None);
    }
}

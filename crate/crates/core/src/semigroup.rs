//! Numerical semigroups given by their minimal generators, with the Apéry
//! set with respect to the multiplicity and the invariants derived from it.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Element;

/// Largest multiplicity for which an Apéry table is allocated.
pub const MAX_MULTIPLICITY: usize = 1 << 26;

/// A minimal generating set: strictly increasing, coprime, and no element
/// in the monoid generated by the others.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSet<T>(Vec<T>);

impl<T: Element> GeneratorSet<T> {
    /// Reduces `values` to the unique minimal generating set of the monoid
    /// they generate. Order and repetitions in the input do not matter.
    pub fn canonicalize(values: &[T]) -> Result<Self> {
        canonical_with_apery(values).map(|(gens, _)| gens)
    }

    pub fn as_slice(&self) -> &[T] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<T> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<T: Element> fmt::Display for GeneratorSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0)
    }
}

/// A numerical semigroup, immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup<T> {
    gens: GeneratorSet<T>,
    apery: Vec<T>,
    frobenius: T,
    genus: T,
}

impl<T: Element> NumericalSemigroup<T> {
    /// The semigroup generated by `values`, after canonicalization.
    pub fn new(values: &[T]) -> Result<Self> {
        let (gens, apery) = canonical_with_apery(values)?;
        Ok(Self::from_parts(gens, apery))
    }

    /// Builds from an already canonical generator set.
    pub fn build(gens: GeneratorSet<T>) -> Self {
        let (gens, apery) =
            canonical_with_apery(gens.as_slice()).expect("a canonical set is valid input");
        Self::from_parts(gens, apery)
    }

    /// Builds from a list that must already be the minimal generating set
    /// (in any order). Fails with [`Error::NotMinimal`] otherwise.
    pub fn from_minimal(values: &[T]) -> Result<Self> {
        let s = Self::new(values)?;
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        if sorted != s.gens.0 {
            return Err(Error::NotMinimal(
                values.iter().map(|v| v.widen()).collect(),
            ));
        }
        Ok(s)
    }

    /// ℕ = ⟨1⟩.
    pub fn natural() -> Self {
        Self::from_parts(GeneratorSet(vec![T::one()]), vec![T::zero()])
    }

    fn from_parts(gens: GeneratorSet<T>, apery: Vec<T>) -> Self {
        let m = gens.0[0];
        let max = apery.iter().copied().fold(T::zero(), T::max);
        let frobenius = max - m;
        let sum = apery.iter().fold(T::zero(), |acc, &w| acc + w);
        // Σ ⌊w/m⌋ over the Apéry set, where w ≡ i (mod m) for slot i.
        let m_idx = m.to_index();
        let triangular = T::from_usize(m_idx * (m_idx - 1) / 2).expect("m(m-1)/2 fits");
        let genus = (sum - triangular) / m;
        NumericalSemigroup {
            gens,
            apery,
            frobenius,
            genus,
        }
    }

    pub fn generators(&self) -> &[T] {
        self.gens.as_slice()
    }

    pub fn generator_set(&self) -> &GeneratorSet<T> {
        &self.gens
    }

    /// `apery()[i]` is the least element congruent to `i` modulo the
    /// multiplicity.
    pub fn apery(&self) -> &[T] {
        &self.apery
    }

    pub fn frobenius(&self) -> T {
        self.frobenius
    }

    pub fn conductor(&self) -> T {
        self.frobenius + T::one()
    }

    pub fn genus(&self) -> T {
        self.genus
    }

    pub fn multiplicity(&self) -> T {
        self.gens.0[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.gens.len()
    }

    pub fn max_generator(&self) -> T {
        *self.gens.0.last().expect("nonempty")
    }

    pub fn is_natural(&self) -> bool {
        self.gens.0.len() == 1
    }

    pub fn contains(&self, x: T) -> bool {
        if x < T::zero() {
            return false;
        }
        let m = self.multiplicity();
        x >= self.apery[(x % m).to_index()]
    }

    /// g(Γ) = c(Γ)/2.
    pub fn is_symmetric(&self) -> bool {
        self.genus + self.genus == self.conductor()
    }

    pub fn is_minimal_generator(&self, x: T) -> bool {
        self.gens.0.binary_search(&x).is_ok()
    }

    /// The semigroup generated by `k` times the generators. Not numerical
    /// for `k > 1`, so only the scaled generator list is returned.
    pub fn scaled_generators(&self, k: T) -> Vec<T> {
        self.gens.0.iter().map(|&g| g * k).collect()
    }
}

impl<T: Element> fmt::Debug for NumericalSemigroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        write_list(f, self.generators())?;
        write!(f, "⟩")
    }
}

impl<T: Element> fmt::Display for NumericalSemigroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        write_list(f, self.generators())?;
        write!(f, ">")
    }
}

impl<T: Element> PartialOrd for NumericalSemigroup<T> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the generator lists.
impl<T: Element> Ord for NumericalSemigroup<T> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.gens.cmp(&other.gens)
    }
}

fn write_list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Canonical generators together with the Apéry set of the multiplicity.
fn canonical_with_apery<T: Element>(values: &[T]) -> Result<(GeneratorSet<T>, Vec<T>)> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(&bad) = values.iter().find(|&&v| v <= T::zero()) {
        return Err(Error::NonPositive(bad.widen()));
    }
    let g = values.iter().fold(T::zero(), |acc, &v| acc.gcd(&v));
    if g != T::one() {
        return Err(Error::NotCoprime(g.widen()));
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();

    let m = sorted[0];
    let m_idx = m
        .to_usize()
        .filter(|&m| m <= MAX_MULTIPLICITY)
        .ok_or(Error::MultiplicityTooLarge(m.widen()))?;
    let mut apery = vec![T::max_value(); m_idx];
    apery[0] = T::zero();
    let mut kept = vec![m];
    for &g in &sorted[1..] {
        if g >= apery[(g % m).to_index()] {
            continue;
        }
        add_generator(&mut apery, g);
        kept.push(g);
    }
    Ok((GeneratorSet(kept), apery))
}

/// Updates the Apéry table (w.r.t. `apery.len()`) for one new generator.
///
/// Round-robin relaxation: the residues split into cycles under `+g`, and
/// within a cycle a single pass starting at the current minimum settles
/// every entry. Unreached residues hold `T::max_value()`.
fn add_generator<T: Element>(apery: &mut [T], g: T) {
    let m = apery.len();
    let step = (g % T::from_usize(m).expect("m fits")).to_index();
    if step == 0 {
        return;
    }
    let inf = T::max_value();
    let cycles = num_integer::gcd(m, step);
    let len = m / cycles;
    for start in 0..cycles {
        let mut best = start;
        let mut idx = start;
        for _ in 0..len {
            if apery[idx] < apery[best] {
                best = idx;
            }
            idx = (idx + step) % m;
        }
        if apery[best] == inf {
            continue;
        }
        let mut cur = best;
        for _ in 1..len {
            let next = (cur + step) % m;
            let cand = apery[cur] + g;
            if cand < apery[next] {
                apery[next] = cand;
            }
            cur = next;
        }
    }
}

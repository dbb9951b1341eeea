//! Free, telescopic and plane-curve (planar) semigroups.
//!
//! For an arrangement `(r₀,…,r_h)` of the minimal generators let
//! `d_k = gcd(r₀,…,r_{k−1})` and `e_k = d_k/d_{k+1}`. The arrangement is
//! free when every step `k ≥ 1` glues `⟨r₀/d_k,…,r_{k−1}/d_k⟩` with ℕ,
//! which amounts to `e_k ≥ 2` and `e_k·r_k ∈ ⟨r₀,…,r_{k−1}⟩`.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::scalar::Element;
use crate::semigroup::NumericalSemigroup;

/// An ordering of the minimal generators with its d- and e-sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement<T> {
    order: Vec<T>,
    dseq: Vec<T>,
    eseq: Vec<T>,
}

impl<T: Element> Arrangement<T> {
    /// Fails with [`Error::NotAPermutation`] unless `order` lists the
    /// minimal generators of `s`, each exactly once.
    pub fn new(s: &NumericalSemigroup<T>, order: &[T]) -> Result<Self> {
        let mut sorted = order.to_vec();
        sorted.sort_unstable();
        if sorted != s.generators() {
            return Err(Error::NotAPermutation);
        }
        Ok(Self::from_order(order.to_vec()))
    }

    /// The increasing arrangement.
    pub fn increasing(s: &NumericalSemigroup<T>) -> Self {
        Self::from_order(s.generators().to_vec())
    }

    fn from_order(order: Vec<T>) -> Self {
        let mut dseq = Vec::with_capacity(order.len());
        let mut g = T::zero();
        for &r in &order {
            g = g.gcd(&r);
            dseq.push(g);
        }
        let eseq = dseq.windows(2).map(|w| w[0] / w[1]).collect();
        Arrangement { order, dseq, eseq }
    }

    /// `(r₀,…,r_h)`.
    pub fn order(&self) -> &[T] {
        &self.order
    }

    /// `h = e(Γ) − 1`.
    pub fn h(&self) -> usize {
        self.order.len() - 1
    }

    /// `d_k` for `k = 1,…,h+1`, stored at index `k − 1`.
    pub fn dseq(&self) -> &[T] {
        &self.dseq
    }

    /// `e_k` for `k = 1,…,h`, stored at index `k − 1`.
    pub fn eseq(&self) -> &[T] {
        &self.eseq
    }

    pub fn d(&self, k: usize) -> T {
        self.dseq[k - 1]
    }

    pub fn e(&self, k: usize) -> T {
        self.eseq[k - 1]
    }

    pub fn r(&self, k: usize) -> T {
        self.order[k]
    }

    pub fn is_free(&self) -> bool {
        (1..=self.h()).all(|k| self.step_is_gluing(k))
    }

    /// Whether `Γ_k` is the gluing of `Γ_{k−1}` and ℕ.
    fn step_is_gluing(&self, k: usize) -> bool {
        let dk = self.d(k);
        let dnext = self.dseq[k];
        if dk / dnext < T::lit(2) {
            return false;
        }
        let prefix: Vec<T> = self.order[..k].iter().map(|&r| r / dk).collect();
        let prev = NumericalSemigroup::new(&prefix).expect("prefix over its gcd is coprime");
        let target = self.order[k] / dnext;
        prev.contains(target) && !prev.is_minimal_generator(target)
    }

    /// `e_k·r_k < r_{k+1}` for `k = 1,…,h−1`.
    pub fn has_increasing_characteristic(&self) -> bool {
        (1..self.h()).all(|k| self.e(k) * self.r(k) < self.r(k + 1))
    }
}

pub fn is_free_arrangement<T: Element>(s: &NumericalSemigroup<T>, order: &[T]) -> Result<bool> {
    Ok(Arrangement::new(s, order)?.is_free())
}

/// Free for the increasing arrangement.
pub fn is_telescopic<T: Element>(s: &NumericalSemigroup<T>) -> bool {
    Arrangement::increasing(s).is_free()
}

/// Telescopic with `e_k·r_k < r_{k+1}` for every intermediate `k`.
pub fn is_planar<T: Element>(s: &NumericalSemigroup<T>) -> bool {
    let arr = Arrangement::increasing(s);
    arr.is_free() && arr.has_increasing_characteristic()
}

pub fn is_free<T: Element>(s: &NumericalSemigroup<T>) -> bool {
    FreeClassifier::new().free_arrangement(s).is_some()
}

/// Memoized search for a free arrangement.
///
/// Tries each generator as the last one, in increasing order, and recurses
/// on the quotient of the others by their gcd.
#[derive(Debug, Default)]
pub struct FreeClassifier<T> {
    // Arrangements are stored in the scale of the keyed semigroup.
    cache: HashMap<Vec<T>, Option<Vec<T>>>,
}

impl<T: Element> FreeClassifier<T> {
    pub fn new() -> Self {
        FreeClassifier {
            cache: HashMap::new(),
        }
    }

    pub fn is_free(&mut self, s: &NumericalSemigroup<T>) -> bool {
        self.free_arrangement(s).is_some()
    }

    /// A free arrangement of the generators of `s`, if one exists.
    pub fn free_arrangement(&mut self, s: &NumericalSemigroup<T>) -> Option<Vec<T>> {
        if s.is_natural() {
            return Some(vec![T::one()]);
        }
        if let Some(known) = self.cache.get(s.generators()) {
            return known.clone();
        }
        let found = self.search(s);
        self.cache.insert(s.generators().to_vec(), found.clone());
        found
    }

    fn search(&mut self, s: &NumericalSemigroup<T>) -> Option<Vec<T>> {
        let gens = s.generators();
        for (i, &r) in gens.iter().enumerate() {
            let rest: Vec<T> = gens
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &g)| g)
                .collect();
            let d = rest.iter().fold(T::zero(), |a, &g| a.gcd(&g));
            if d < T::lit(2) || d.gcd(&r) != T::one() {
                continue;
            }
            let scaled: Vec<T> = rest.iter().map(|&g| g / d).collect();
            let prev = NumericalSemigroup::new(&scaled).expect("coprime after division");
            if !prev.contains(r) || prev.is_minimal_generator(r) {
                continue;
            }
            if let Some(mut arr) = self.free_arrangement(&prev) {
                arr.iter_mut().for_each(|g| *g = *g * d);
                arr.push(r);
                return Some(arr);
            }
        }
        None
    }
}

/// F(Γ) = d_h·F(Γ_{h−1}) + r_h(d_h − 1) for a free step.
pub fn frobenius_of_free_step<T: Element>(f_prev: T, d: T, r: T) -> T {
    d * f_prev + r * (d - T::one())
}

/// Inverts [`frobenius_of_free_step`]: F(Γ_{h−1}) = (F(Γ) + r_h)/d_h − r_h.
/// `None` when `d_h` does not divide `F(Γ) + r_h`.
pub fn quotient_frobenius<T: Element>(f: T, d: T, r: T) -> Option<T> {
    let (q, rem) = (f + r).div_rem(&d);
    (rem == T::zero()).then(|| q - r)
}

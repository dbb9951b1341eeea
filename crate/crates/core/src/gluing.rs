//! Gluings of minimal generating sets and the complete-intersection test
//! built on them.
//!
//! A partition `A = A₁ ∪ A₂` of the minimal generators is a gluing when
//! `d₁ = gcd(A₁)` and `d₂ = gcd(A₂)` are coprime and `d₁d₂` lies in both
//! `⟨A₁⟩` and `⟨A₂⟩`. Then `Γ = d₁Γ₁ + d₂Γ₂` with `Γᵢ = ⟨Aᵢ/dᵢ⟩`, and Γ is a
//! complete intersection exactly when it is ℕ or a gluing of two complete
//! intersections.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, GluingViolation, Result};
use crate::scalar::Element;
use crate::semigroup::NumericalSemigroup;

/// A certified gluing split of a minimal generating set.
#[derive(Clone)]
pub struct GluingSplit<T> {
    pub left: Vec<T>,
    pub right: Vec<T>,
    pub d1: T,
    pub d2: T,
    left_quotient: NumericalSemigroup<T>,
    right_quotient: NumericalSemigroup<T>,
}

impl<T: Element> fmt::Debug for GluingSplit<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GluingSplit")
            .field("left", &self.left)
            .field("right", &self.right)
            .field("d1", &self.d1)
            .field("d2", &self.d2)
            .finish()
    }
}

impl<T: Element> GluingSplit<T> {
    pub fn glue_point(&self) -> T {
        self.d1 * self.d2
    }

    /// Γ₁ = ⟨A₁/d₁⟩.
    pub fn left_quotient(&self) -> &NumericalSemigroup<T> {
        &self.left_quotient
    }

    /// Γ₂ = ⟨A₂/d₂⟩.
    pub fn right_quotient(&self) -> &NumericalSemigroup<T> {
        &self.right_quotient
    }
}

/// Tests whether the generators selected by `mask` (bit `i` picks the
/// `i`-th generator in increasing order) and the rest form a gluing.
///
/// Returns `None` for an empty or full mask and for any partition that is
/// not a gluing.
pub fn try_split<T: Element>(s: &NumericalSemigroup<T>, mask: u64) -> Option<GluingSplit<T>> {
    let gens = s.generators();
    let e = gens.len();
    if !(2..=63).contains(&e) {
        return None;
    }
    let full = (1u64 << e) - 1;
    if mask == 0 || mask & full == full || mask & !full != 0 {
        return None;
    }
    let (left, right): (Vec<T>, Vec<T>) = {
        let mut l = Vec::new();
        let mut r = Vec::new();
        for (i, &g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l.push(g);
            } else {
                r.push(g);
            }
        }
        (l, r)
    };
    let d1 = gcd_all(&left);
    let d2 = gcd_all(&right);
    let two = T::lit(2);
    if d1 < two || d2 < two || d1.gcd(&d2) != T::one() {
        return None;
    }
    let left_quotient = quotient(&left, d1);
    if !left_quotient.contains(d2) || left_quotient.is_minimal_generator(d2) {
        return None;
    }
    let right_quotient = quotient(&right, d2);
    if !right_quotient.contains(d1) || right_quotient.is_minimal_generator(d1) {
        return None;
    }
    Some(GluingSplit {
        left,
        right,
        d1,
        d2,
        left_quotient,
        right_quotient,
    })
}

/// Every gluing split of `s`, one per unordered partition, in increasing
/// mask order over subsets containing the smallest generator.
pub fn gluing_splits<T: Element>(s: &NumericalSemigroup<T>) -> Vec<GluingSplit<T>> {
    split_masks(s.embedding_dimension())
        .filter_map(|mask| try_split(s, mask))
        .collect()
}

/// Masks of proper subsets containing generator 0, increasing.
fn split_masks(e: usize) -> impl Iterator<Item = u64> {
    let count = if (2..=63).contains(&e) {
        1u64 << (e - 1)
    } else {
        0
    };
    // Mask 2k+1 for k in 0..2^(e-1)-1 leaves out the full set.
    (0..count.saturating_sub(1)).map(|k| 2 * k + 1)
}

fn gcd_all<T: Element>(xs: &[T]) -> T {
    xs.iter().fold(T::zero(), |acc, &x| acc.gcd(&x))
}

fn quotient<T: Element>(part: &[T], d: T) -> NumericalSemigroup<T> {
    let scaled: Vec<T> = part.iter().map(|&a| a / d).collect();
    NumericalSemigroup::new(&scaled).expect("a part divided by its gcd is coprime")
}

/// Γ = d₁Γ₁ + d₂Γ₂, checking the gluing preconditions first.
///
/// The minimal generating set of the result is `d₁·gens(Γ₁) ∪ d₂·gens(Γ₂)`.
/// This is verified, and a failure is reported as
/// [`Error::GluingNotMinimal`].
pub fn glue<T: Element>(
    s1: &NumericalSemigroup<T>,
    d1: T,
    s2: &NumericalSemigroup<T>,
    d2: T,
) -> Result<NumericalSemigroup<T>> {
    use GluingViolation::*;
    let violation = if d1 <= T::zero() || d2 <= T::zero() || d1.gcd(&d2) != T::one() {
        Some(NotCoprime)
    } else if !s2.contains(d1) {
        Some(LeftFactorNotInRight)
    } else if s2.is_minimal_generator(d1) {
        Some(LeftFactorIsMinimalGenerator)
    } else if !s1.contains(d2) {
        Some(RightFactorNotInLeft)
    } else if s1.is_minimal_generator(d2) {
        Some(RightFactorIsMinimalGenerator)
    } else {
        None
    };
    if let Some(v) = violation {
        return Err(Error::GluingPreconditionViolated(v));
    }
    glue_unchecked(s1.generators(), d1, s2.generators(), d2)
}

/// Builds the glued semigroup from generator lists whose gluing
/// preconditions the caller has already established.
fn glue_unchecked<T: Element>(g1: &[T], d1: T, g2: &[T], d2: T) -> Result<NumericalSemigroup<T>> {
    let mut union: Vec<T> = g1.iter().map(|&g| g * d1).collect();
    union.extend(g2.iter().map(|&g| g * d2));
    from_glued_union(&union)
}

/// Builds a semigroup from the generator union of a gluing, which must
/// already be minimal.
pub(crate) fn from_glued_union<T: Element>(union: &[T]) -> Result<NumericalSemigroup<T>> {
    NumericalSemigroup::from_minimal(union).map_err(|err| match err {
        Error::NotMinimal(v) => Error::GluingNotMinimal(v),
        other => other,
    })
}

/// F(Γ) = d₁F(Γ₁) + d₂F(Γ₂) + d₁d₂.
pub fn frobenius_of_gluing<T: Element>(f1: T, d1: T, f2: T, d2: T) -> T {
    d1 * f1 + d2 * f2 + d1 * d2
}

/// c(Γ) = d₁c(Γ₁) + d₂c(Γ₂) + (d₁−1)(d₂−1).
pub fn conductor_of_gluing<T: Element>(c1: T, d1: T, c2: T, d2: T) -> T {
    d1 * c1 + d2 * c2 + (d1 - T::one()) * (d2 - T::one())
}

/// Memoized complete-intersection test.
///
/// The cache is keyed by the minimal generator list. One instance is meant
/// to be owned by a single worker; results do not depend on what is cached.
#[derive(Debug, Default)]
pub struct CiClassifier<T> {
    cache: HashMap<Vec<T>, bool>,
}

impl<T: Element> CiClassifier<T> {
    pub fn new() -> Self {
        CiClassifier {
            cache: HashMap::new(),
        }
    }

    pub fn is_complete_intersection(&mut self, s: &NumericalSemigroup<T>) -> bool {
        if s.is_natural() {
            return true;
        }
        if let Some(&known) = self.cache.get(s.generators()) {
            return known;
        }
        let answer = self.search(s);
        self.cache.insert(s.generators().to_vec(), answer);
        answer
    }

    fn search(&mut self, s: &NumericalSemigroup<T>) -> bool {
        // m ≥ 2^(e−1) holds for every complete intersection; it also keeps
        // the 2^(e−1) partitions below affordable.
        let e = s.embedding_dimension();
        match T::pow2(e as u32 - 1) {
            Some(bound) if s.multiplicity() >= bound => {}
            _ => return false,
        }
        split_masks(e).any(|mask| match try_split(s, mask) {
            Some(split) => {
                self.is_complete_intersection(split.left_quotient())
                    && self.is_complete_intersection(split.right_quotient())
            }
            None => false,
        })
    }

    pub fn cached_len(&self) -> usize {
        self.cache.len()
    }
}

/// Recursive gluing test with a fresh cache.
pub fn is_complete_intersection<T: Element>(s: &NumericalSemigroup<T>) -> bool {
    CiClassifier::new().is_complete_intersection(s)
}

/// A recursive record of gluings down to scaled copies of ℕ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionTree<T> {
    /// `a·ℕ`; `a` is a minimal generator of the root semigroup.
    Leaf(T),
    Node {
        glue_point: T,
        left: Box<DecompositionTree<T>>,
        right: Box<DecompositionTree<T>>,
    },
}

impl<T: Element> DecompositionTree<T> {
    fn scaled(self, k: T) -> Self {
        match self {
            DecompositionTree::Leaf(a) => DecompositionTree::Leaf(a * k),
            DecompositionTree::Node {
                glue_point,
                left,
                right,
            } => DecompositionTree::Node {
                glue_point: glue_point * k,
                left: Box::new(left.scaled(k)),
                right: Box::new(right.scaled(k)),
            },
        }
    }

    /// Leaf values, left to right.
    pub fn leaves(&self) -> Vec<T> {
        let mut out = Vec::new();
        self.walk(&mut |t| {
            if let DecompositionTree::Leaf(a) = t {
                out.push(*a)
            }
        });
        out
    }

    /// Glue points in preorder.
    pub fn glue_points(&self) -> Vec<T> {
        let mut out = Vec::new();
        self.walk(&mut |t| {
            if let DecompositionTree::Node { glue_point, .. } = t {
                out.push(*glue_point)
            }
        });
        out
    }

    fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a Self)) {
        visit(self);
        if let DecompositionTree::Node { left, right, .. } = self {
            left.walk(visit);
            right.walk(visit);
        }
    }

    /// Σ glue points − Σ leaves.
    pub fn frobenius(&self) -> T {
        let glue = self.glue_points().into_iter().fold(T::zero(), |a, b| a + b);
        let leaves = self.leaves().into_iter().fold(T::zero(), |a, b| a + b);
        glue - leaves
    }
}

impl<T: Element> fmt::Display for DecompositionTree<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionTree::Leaf(a) => write!(f, "{a}"),
            DecompositionTree::Node {
                glue_point,
                left,
                right,
            } => write!(f, "{glue_point}[{left} | {right}]"),
        }
    }
}

/// A decomposition tree witnessing that `s` is a complete intersection, or
/// `None` if it is not. The first qualifying split in mask order is used
/// at every level, so the shape is deterministic but not canonical.
pub fn decomposition_tree<T: Element>(s: &NumericalSemigroup<T>) -> Option<DecompositionTree<T>> {
    if s.is_natural() {
        return Some(DecompositionTree::Leaf(T::one()));
    }
    split_masks(s.embedding_dimension()).find_map(|mask| {
        let split = try_split(s, mask)?;
        let left = decomposition_tree(split.left_quotient())?;
        let right = decomposition_tree(split.right_quotient())?;
        Some(DecompositionTree::Node {
            glue_point: split.glue_point(),
            left: Box::new(left.scaled(split.d1)),
            right: Box::new(right.scaled(split.d2)),
        })
    })
}

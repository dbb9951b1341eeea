//! Brute-force cardinality of a minimal presentation.
//!
//! Independent of the gluing machinery: for every element `n` the
//! factorizations of `n` form a graph where two factorizations are adjacent
//! when their supports share a generator, and a minimal presentation has
//! exactly `components − 1` relations in degree `n`. Above
//! `F + 2·max(gens)` every such graph is connected: for factorizations `x`,
//! `y` using generators `rᵢ`, `rⱼ`, the element `n − rᵢ − rⱼ` exceeds `F`,
//! so some factorization of `n` uses both and links `x` to `y`.

use crate::error::{Error, Result};
use crate::scalar::Element;
use crate::semigroup::NumericalSemigroup;

/// The factorizations of one element, as coefficient vectors over the
/// minimal generators.
#[derive(Debug, Clone)]
pub struct FactorizationGraph<T> {
    pub element: T,
    pub factorizations: Vec<Vec<u64>>,
}

impl<T: Element> FactorizationGraph<T> {
    /// Fails with [`Error::OracleTooLarge`] beyond `limit` factorizations.
    pub fn new(gens: &[T], element: T, limit: usize) -> Result<Self> {
        let mut factorizations = Vec::new();
        let mut coeffs = vec![0u64; gens.len()];
        if element >= T::zero() && !gens.is_empty() {
            collect(
                gens,
                gens.len() - 1,
                element,
                &mut coeffs,
                &mut factorizations,
                limit,
            )
            .map_err(|()| Error::OracleTooLarge {
                element: element.widen(),
                limit,
            })?;
        }
        Ok(FactorizationGraph {
            element,
            factorizations,
        })
    }

    /// Connected components, joining factorizations with a common
    /// generator in their supports.
    pub fn components(&self) -> usize {
        let n = self.factorizations.len();
        if n == 0 {
            return 0;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        let e = self.factorizations[0].len();
        for j in 0..e {
            let mut first = None;
            for (i, x) in self.factorizations.iter().enumerate() {
                if x[j] == 0 {
                    continue;
                }
                match first {
                    None => first = Some(i),
                    Some(f) => union(&mut parent, f, i),
                }
            }
        }
        (0..n).filter(|&i| find(&mut parent, i) == i).count()
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Depth-first over coefficients, largest generator first.
fn collect<T: Element>(
    gens: &[T],
    i: usize,
    remaining: T,
    coeffs: &mut [u64],
    out: &mut Vec<Vec<u64>>,
    limit: usize,
) -> std::result::Result<(), ()> {
    let g = gens[i];
    if i == 0 {
        if remaining % g == T::zero() {
            coeffs[0] = (remaining / g).to_u64().expect("nonnegative");
            if out.len() >= limit {
                return Err(());
            }
            out.push(coeffs.to_vec());
        }
        return Ok(());
    }
    let max = (remaining / g).to_u64().expect("nonnegative");
    for k in (0..=max).rev() {
        coeffs[i] = k;
        let rest = remaining - g * T::from_usize(k as usize).expect("fits");
        collect(gens, i - 1, rest, coeffs, out, limit)?;
    }
    coeffs[i] = 0;
    Ok(())
}

#[derive(Debug, Clone, Copy)]
pub struct PresentationOracle {
    /// Largest number of factorizations tolerated for a single element.
    pub max_factorizations: usize,
}

impl Default for PresentationOracle {
    fn default() -> Self {
        PresentationOracle {
            max_factorizations: 200_000,
        }
    }
}

impl PresentationOracle {
    pub fn new(max_factorizations: usize) -> Self {
        PresentationOracle { max_factorizations }
    }

    /// Σ over `n ∈ Γ`, `n ≤ F + 2·max(gens)`, of (components − 1).
    pub fn minimal_presentation_cardinality<T: Element>(
        &self,
        s: &NumericalSemigroup<T>,
    ) -> Result<usize> {
        let gens = s.generators();
        let top = s.frobenius() + T::lit(2) * s.max_generator();
        let mut total = 0;
        let mut n = T::zero();
        while n <= top {
            if s.contains(n) {
                let graph = FactorizationGraph::new(gens, n, self.max_factorizations)?;
                total += graph.components() - 1;
            }
            n = n + T::one();
        }
        Ok(total)
    }

    /// Cardinality equals `e(Γ) − 1`.
    pub fn is_complete_intersection<T: Element>(&self, s: &NumericalSemigroup<T>) -> Result<bool> {
        Ok(self.minimal_presentation_cardinality(s)? == s.embedding_dimension() - 1)
    }
}

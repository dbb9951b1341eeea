//! Numerical semigroups that are complete intersections, and the free,
//! telescopic and plane-curve subfamilies.
//!
//! The library computes Apéry sets and the classical invariants, detects
//! gluings, classifies semigroups into the four families, and enumerates
//! every member of a family with a given Frobenius number (equivalently,
//! genus).
//!
//! Everything is generic over the integer type through [`Element`]; the
//! aliases at the crate root fix it to `i64`.
//!
//! ```
//! use cisg::{Enumerator, FamilyKind, Semigroup};
//!
//! let s = Semigroup::new(&[10, 14, 15, 21]).unwrap();
//! assert_eq!(s.frobenius(), 47);
//! assert!(cisg::is_complete_intersection(&s));
//!
//! let ci = Enumerator::<i64>::new()
//!     .enumerate(FamilyKind::CompleteIntersection, 11)
//!     .unwrap();
//! assert_eq!(ci.len(), 4);
//! ```

pub mod bounds;
pub mod cache;
pub mod enumeration;
pub mod error;
pub mod families;
pub mod gluing;
pub mod oracle;
pub mod scalar;
pub mod semigroup;

pub use cache::CacheStatus;
pub use enumeration::{CountRow, EnumerationStats, Enumerator, Family, FamilyKind, Pruning};
pub use error::{Error, GluingViolation, Result};
pub use families::{
    is_free, is_free_arrangement, is_planar, is_telescopic, Arrangement, FreeClassifier,
};
pub use gluing::{
    conductor_of_gluing, decomposition_tree, frobenius_of_gluing, glue, is_complete_intersection,
    try_split, CiClassifier, DecompositionTree, GluingSplit,
};
pub use oracle::PresentationOracle;
pub use scalar::Element;
pub use semigroup::{GeneratorSet, NumericalSemigroup};

/// A numerical semigroup over `i64`.
pub type Semigroup = NumericalSemigroup<i64>;
pub type Generators = GeneratorSet<i64>;
pub type Split = GluingSplit<i64>;
pub type Tree = DecompositionTree<i64>;

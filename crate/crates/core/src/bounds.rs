//! Integer bounds on multiplicity, embedding dimension, conductor and the
//! last generator for the complete-intersection families.
//!
//! Each bound is exact integer arithmetic; rational expressions are floored
//! or ceiled explicitly and no floating point is involved.

use crate::error::{Error, Result};
use crate::scalar::Element;

fn domain(function: &'static str, reason: impl Into<String>) -> Error {
    Error::DomainError {
        function,
        reason: reason.into(),
    }
}

fn pow2<T: Element>(function: &'static str, k: u32) -> Result<T> {
    T::pow2(k).ok_or_else(|| domain(function, format!("2^{k} overflows")))
}

fn checked<T: Element>(function: &'static str, v: Option<T>) -> Result<T> {
    v.ok_or_else(|| domain(function, "arithmetic overflow"))
}

/// m(Γ) ≥ 2^(e−1) for a complete intersection with embedding dimension `e`.
pub fn min_multiplicity_ci<T: Element>(e: usize) -> Result<T> {
    const F: &str = "min_multiplicity_ci";
    if e == 0 {
        return Err(domain(F, "e must be at least 1"));
    }
    pow2(F, e as u32 - 1)
}

/// e(Γ) ≤ ⌊log₂ c⌋ + 1 for a complete intersection other than ℕ.
pub fn max_embdim_ci<T: Element>(c: T) -> Result<usize> {
    if c < T::one() {
        return Err(domain("max_embdim_ci", "c must be positive"));
    }
    Ok(c.floor_log2() as usize + 1)
}

/// e(Γ) ≤ ⌊log₂(c − 4)⌋ + 1, valid outside the exception set
/// {ℕ, ⟨2,3⟩, ⟨2,5⟩, ⟨3,4⟩} (see [`is_refined_bound_exception`]).
pub fn max_embdim_ci_refined<T: Element>(c: T) -> Result<usize> {
    if c < T::lit(5) {
        return Err(domain("max_embdim_ci_refined", "c must be at least 5"));
    }
    Ok((c - T::lit(4)).floor_log2() as usize + 1)
}

/// The semigroups excluded from [`max_embdim_ci_refined`].
pub fn is_refined_bound_exception<T: Element>(gens: &[T]) -> bool {
    const EXCEPTIONS: [&[i32]; 4] = [&[1], &[2, 3], &[2, 5], &[3, 4]];
    EXCEPTIONS
        .iter()
        .any(|ex| ex.len() == gens.len() && ex.iter().zip(gens).all(|(&a, &b)| T::lit(a) == b))
}

/// c(Γ) ≥ (e−1)·2^(e−1) for a complete intersection.
pub fn min_conductor_ci<T: Element>(e: usize) -> Result<T> {
    const F: &str = "min_conductor_ci";
    if e == 0 {
        return Err(domain(F, "e must be at least 1"));
    }
    let p: T = pow2(F, e as u32 - 1)?;
    checked(F, T::from_usize(e - 1).and_then(|k| k.checked_mul(&p)))
}

/// c(Γ) ≥ (e−2)·2^e + 2 for a telescopic semigroup other than ℕ.
pub fn min_conductor_telescopic<T: Element>(e: usize) -> Result<T> {
    const F: &str = "min_conductor_telescopic";
    if e < 2 {
        return Err(domain(F, "e must be at least 2"));
    }
    let p: T = pow2(F, e as u32)?;
    checked(
        F,
        T::from_usize(e - 2)
            .and_then(|k| k.checked_mul(&p))
            .and_then(|v| v.checked_add(&T::lit(2))),
    )
}

/// c(Γ) ≥ ⌈(5/3)·2^(2h) − 3·2^h + 4/3⌉ for a planar semigroup with
/// `h = e(Γ) − 1`.
///
/// The numerator `5·4^h − 9·2^h + 4 = (5·2^h − 4)(2^h − 1)` is always a
/// multiple of 3, so the ceiling is an exact division.
pub fn min_conductor_planar<T: Element>(h: usize) -> Result<T> {
    const F: &str = "min_conductor_planar";
    let x: T = pow2(F, h as u32)?;
    let num = checked(
        F,
        x.checked_mul(&T::lit(5))
            .and_then(|v| v.checked_sub(&T::lit(4)))
            .and_then(|v| v.checked_mul(&(x - T::one()))),
    )?;
    debug_assert!(num % T::lit(3) == T::zero());
    Ok(num / T::lit(3))
}

/// ⌊log₂((√(60c+1) + 9)/10)⌋, the largest `h` a planar semigroup with
/// conductor `c` can have.
///
/// Computed with an exact integer square root: flooring `√(60c+1)` before
/// adding 9 and dividing by 10 does not change the floor, and neither does
/// flooring the quotient before taking ⌊log₂⌋.
pub fn max_h_planar<T: Element>(c: T) -> Result<usize> {
    const F: &str = "max_h_planar";
    if c < T::zero() {
        return Err(domain(F, "c must be nonnegative"));
    }
    let n = checked(
        F,
        c.checked_mul(&T::lit(60))
            .and_then(|v| v.checked_add(&T::one())),
    )?;
    let root = isqrt(n);
    Ok(((root + T::lit(9)) / T::lit(10)).floor_log2() as usize)
}

/// ⌊√n⌋ for `n ≥ 0`, verified so that `root² ≤ n < (root+1)²`.
pub fn isqrt<T: Element>(n: T) -> T {
    let mut root = num_integer::Roots::sqrt(&n);
    while root * root > n {
        root = root - T::one();
    }
    while (root + T::one()) * (root + T::one()) <= n {
        root = root + T::one();
    }
    root
}

/// Closed range `[lo, hi]` for the last generator `r_h` of an arrangement.
/// Empty when `lo > hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorRange<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Element> GeneratorRange<T> {
    pub fn contains(&self, r: T) -> bool {
        self.lo <= r && r <= self.hi
    }
}

/// `⌊(c − c_min·d)/(d − 1)⌋ + 1`, the common upper end of the three
/// `r_h` ranges, where `c_min` bounds the conductor of `Γ_{h−1}` from below.
fn rh_upper<T: Element>(function: &'static str, c: T, d: T, c_prev_min: T) -> Result<T> {
    let num = checked(
        function,
        c_prev_min.checked_mul(&d).and_then(|v| c.checked_sub(&v)),
    )?;
    Ok(num.div_floor(&(d - T::one())) + T::one())
}

fn check_rh_args<T: Element>(function: &'static str, h: usize, c: T, d: T) -> Result<()> {
    if h < 2 {
        return Err(domain(function, "h must be at least 2"));
    }
    if d < T::lit(2) {
        return Err(domain(function, "d_h must be at least 2"));
    }
    if c < T::zero() {
        return Err(domain(function, "c must be nonnegative"));
    }
    Ok(())
}

/// Range for `r_h` of a free arrangement with `h ≥ 2`, conductor `c` and
/// `d_h = d`.
///
/// The lower end is `2^h`, which follows from `r_h ≥ m(Γ) ≥ 2^h`. The
/// strict form `2^h + 1` fails for arrangements whose last
/// generator is the multiplicity (e.g. `(6, 9, 4)` for ⟨4,6,9⟩); it is
/// available separately as [`rh_lower_free_strict`] for monitoring.
pub fn rh_range_free<T: Element>(h: usize, c: T, d: T) -> Result<GeneratorRange<T>> {
    const F: &str = "rh_range_free";
    check_rh_args(F, h, c, d)?;
    let lo = pow2(F, h as u32)?;
    let c_prev = min_conductor_ci::<T>(h)?;
    Ok(GeneratorRange {
        lo,
        hi: rh_upper(F, c, d, c_prev)?,
    })
}

/// `2^h + 1`.
pub fn rh_lower_free_strict<T: Element>(h: usize) -> Result<T> {
    Ok(pow2::<T>("rh_lower_free_strict", h as u32)? + T::one())
}

/// Range for `r_h` of a telescopic semigroup with `h ≥ 2`.
pub fn rh_range_telescopic<T: Element>(h: usize, c: T, d: T) -> Result<GeneratorRange<T>> {
    const F: &str = "rh_range_telescopic";
    check_rh_args(F, h, c, d)?;
    let lo = pow2::<T>(F, h as u32 + 1)? - T::one();
    let c_prev = min_conductor_telescopic::<T>(h)?;
    Ok(GeneratorRange {
        lo,
        hi: rh_upper(F, c, d, c_prev)?,
    })
}

/// Range for `r_h` of a planar semigroup with `h ≥ 2`. The lower end
/// `(5·2^(2h−1) − 1)/3` is an integer.
pub fn rh_range_planar<T: Element>(h: usize, c: T, d: T) -> Result<GeneratorRange<T>> {
    const F: &str = "rh_range_planar";
    check_rh_args(F, h, c, d)?;
    let p = pow2::<T>(F, 2 * h as u32 - 1)?;
    let lo = checked(F, p.checked_mul(&T::lit(5)))? - T::one();
    debug_assert!(lo % T::lit(3) == T::zero());
    let c_prev = min_conductor_planar::<T>(h - 1)?;
    Ok(GeneratorRange {
        lo: lo / T::lit(3),
        hi: rh_upper(F, c, d, c_prev)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;

    #[test]
    fn multiplicity_and_conductor_examples() {
        assert_eq!(min_multiplicity_ci::<i64>(4).unwrap(), 8);
        assert_eq!(min_conductor_ci::<i64>(2).unwrap(), 2);
        assert_eq!(min_conductor_ci::<i64>(1).unwrap(), 0);
        assert_eq!(min_conductor_telescopic::<i64>(2).unwrap(), 2);
        assert_eq!(min_conductor_telescopic::<i64>(3).unwrap(), 10);
        assert_eq!(min_conductor_planar::<i64>(0).unwrap(), 0);
        assert_eq!(min_conductor_planar::<i64>(1).unwrap(), 2);
        assert_eq!(min_conductor_planar::<i64>(2).unwrap(), 16);
    }

    #[test]
    fn planar_conductor_matches_rational_ceiling() {
        for h in 0..20u32 {
            let x = Ratio::from_integer(1i128 << h);
            let exact = Ratio::new(5, 3) * x * x - Ratio::from_integer(3) * x + Ratio::new(4, 3);
            assert_eq!(
                min_conductor_planar::<i128>(h as usize).unwrap(),
                exact.ceil().to_integer()
            );
        }
    }

    #[test]
    fn max_h_planar_agrees_with_conductor_bound() {
        // Largest h with min_conductor_planar(h) ≤ c, by direct search.
        for c in 0..5000i64 {
            let mut h = 0;
            while min_conductor_planar::<i64>(h + 1).unwrap() <= c {
                h += 1;
            }
            assert_eq!(max_h_planar(c).unwrap(), h, "c = {c}");
        }
    }

    #[test]
    fn isqrt_is_exact() {
        for n in 0..10_000i64 {
            let r = isqrt(n);
            assert!(r * r <= n && (r + 1) * (r + 1) > n);
        }
        assert_eq!(isqrt(i64::MAX / 4), 1518500249);
    }

    #[test]
    fn embdim_bounds() {
        assert_eq!(max_embdim_ci(2i64).unwrap(), 2);
        assert_eq!(max_embdim_ci(8i64).unwrap(), 4);
        assert_eq!(max_embdim_ci(7i64).unwrap(), 3);
        assert_eq!(max_embdim_ci_refined(8i64).unwrap(), 3);
        assert!(max_embdim_ci(0i64).is_err());
        assert!(max_embdim_ci_refined(4i64).is_err());
        assert!(is_refined_bound_exception(&[2i64, 5]));
        assert!(is_refined_bound_exception(&[1i64]));
        assert!(!is_refined_bound_exception(&[2i64, 7]));
        assert!(!is_refined_bound_exception(&[2i64, 3, 4]));
    }

    #[test]
    fn rh_ranges() {
        assert_eq!(rh_range_telescopic(2, 16i64, 2).unwrap().lo, 7);
        assert_eq!(rh_range_planar(2, 16i64, 2).unwrap().lo, 13);
        assert_eq!(rh_range_planar(3, 100i64, 2).unwrap().lo, 53);
        assert_eq!(rh_range_free(2, 12i64, 2).unwrap().lo, 4);
        assert_eq!(rh_lower_free_strict::<i64>(2).unwrap(), 5);
        // ⟨4,6,7⟩: c = 12, d₂ = 2, hi = (12 − 2·2)/1 + 1 = 9.
        let r = rh_range_telescopic(2, 12i64, 2).unwrap();
        assert_eq!(r, GeneratorRange { lo: 7, hi: 9 });
        assert!(r.contains(7));
        // ⟨4,6,13⟩: c = 16, d₂ = 2, hi = 16 − 2·2 + 1 = 13.
        assert!(rh_range_planar(2, 16i64, 2).unwrap().contains(13));
    }

    #[test]
    fn rh_upper_matches_rational_form() {
        // hi = ⌊c/(d−1) − c_min·d/(d−1) + 1⌋
        for c in 0..200i64 {
            for d in 2..20i64 {
                for h in 2..5usize {
                    let cmin = min_conductor_ci::<i64>(h).unwrap();
                    let exact = Ratio::new(c, d - 1) - Ratio::new(cmin * d, d - 1) + 1;
                    assert_eq!(
                        rh_range_free(h, c, d).unwrap().hi,
                        exact.floor().to_integer()
                    );
                }
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(min_multiplicity_ci::<i64>(0).is_err());
        assert!(min_conductor_telescopic::<i64>(1).is_err());
        assert!(rh_range_free(1, 10i64, 2).is_err());
        assert!(rh_range_telescopic(2, 10i64, 1).is_err());
        assert!(max_h_planar(-1i64).is_err());
        assert!(min_multiplicity_ci::<i32>(40).is_err());
    }
}

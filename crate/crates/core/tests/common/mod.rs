//! Test-only oracles and checks shared by the integration suites.
//!
//! Nothing here goes through gluings, arrangements or Apéry sets except
//! where a check compares against them.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cisg::bounds;
use cisg::{
    is_planar, is_telescopic, Arrangement, CiClassifier, Enumerator, FamilyKind, FreeClassifier,
    PresentationOracle, Semigroup,
};

/// `member[n]` for `0 ≤ n ≤ limit`, by the coin-change recurrence.
pub fn dp_membership(gens: &[i64], limit: usize) -> Vec<bool> {
    let mut member = vec![false; limit + 1];
    member[0] = true;
    for n in 1..=limit {
        member[n] = gens
            .iter()
            .any(|&g| g as usize <= n && member[n - g as usize]);
    }
    member
}

/// Largest `n ≤ limit` outside the monoid, or −1.
pub fn dp_frobenius(gens: &[i64], limit: usize) -> i64 {
    dp_membership(gens, limit)
        .iter()
        .rposition(|&m| !m)
        .map_or(-1, |n| n as i64)
}

/// Minimal generators of a numerical semigroup given by its
/// membership table up to `f + m` (everything above is a non-minimal sum).
fn minimal_generators(member: &[bool]) -> Vec<i64> {
    let nonzero: Vec<usize> = (1..member.len()).filter(|&n| member[n]).collect();
    nonzero
        .iter()
        .copied()
        .filter(|&n| !nonzero.iter().any(|&a| a < n && member[n - a]))
        .map(|n| n as i64)
        .collect()
}

/// Every symmetric numerical semigroup with odd Frobenius number `f`, as
/// minimal generator lists.
///
/// A symmetric semigroup with Frobenius number `f` contains exactly one of
/// `x`, `f − x` for each `0 < x < f`; every choice is tried and kept when
/// closed under addition.
pub fn brute_symmetric(f: i64) -> Vec<Vec<i64>> {
    assert!(f > 0 && f % 2 == 1, "odd positive Frobenius number");
    let f = f as usize;
    let pairs = (f - 1) / 2;
    let top = 2 * f + 2;
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs) {
        let mut member = vec![true; top + 1];
        member[f] = false;
        for x in 1..=pairs {
            let low_in = mask >> (x - 1) & 1 == 1;
            member[x] = low_in;
            member[f - x] = !low_in;
        }
        // Sums above f are members anyway.
        let closed = (1..f)
            .filter(|&a| member[a])
            .all(|a| (a..=f.saturating_sub(a)).all(|b| !member[b] || member[a + b]));
        if closed {
            out.push(minimal_generators(&member));
        }
    }
    out.sort();
    out
}

/// Complete intersections with Frobenius number `f` by exhaustive search:
/// symmetric semigroups whose minimal presentation has `e − 1` relations.
pub fn brute_ci(f: i64) -> BTreeSet<Vec<i64>> {
    let oracle = PresentationOracle::default();
    brute_symmetric(f)
        .into_iter()
        .filter(|gens| {
            let s = Semigroup::from_minimal(gens).expect("brute force yields minimal sets");
            oracle
                .is_complete_intersection(&s)
                .expect("small semigroup")
        })
        .collect()
}

pub fn gens_of(list: &[Semigroup]) -> BTreeSet<Vec<i64>> {
    list.iter().map(|s| s.generators().to_vec()).collect()
}

/// Γ⁽¹⁾ = ⟨2,3⟩, Γ⁽ⁿ⁺¹⁾ = 2Γ⁽ⁿ⁾ + (2ⁿ⁺¹+1)ℕ.
pub fn gamma_n(n: u32) -> Semigroup {
    let mut gens = vec![2i64, 3];
    for k in 1..n {
        gens.iter_mut().for_each(|g| *g *= 2);
        gens.push((1 << (k + 1)) + 1);
    }
    Semigroup::new(&gens).unwrap()
}

/// Γ_h = ⟨(2^(k+1) − 1)·2^(h−k) : 0 ≤ k ≤ h⟩.
pub fn gamma_h(h: u32) -> Semigroup {
    let gens: Vec<i64> = (0..=h)
        .map(|k| ((1i64 << (k + 1)) - 1) << (h - k))
        .collect();
    Semigroup::new(&gens).unwrap()
}

/// Outcome of the property sweep over enumerated semigroups.
#[derive(Debug, Default)]
pub struct PropertyReport {
    pub semigroups: usize,
    pub arrangements: usize,
    pub violations: Vec<String>,
    /// Free arrangements with `h ≥ 2` and `r_h < 2^h + 1`.
    pub strict_free_bound_misses: Vec<String>,
}

impl PropertyReport {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.violations.push(what());
        }
    }
}

fn permutations(xs: &[i64]) -> Vec<Vec<i64>> {
    if xs.len() <= 1 {
        return vec![xs.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Checks the structural properties of every semigroup the enumerator
/// produces for genus `0..=max_genus`.
pub fn property_sweep(max_genus: u64) -> PropertyReport {
    let mut rep = PropertyReport::default();
    let e = Enumerator::<i64>::new();
    let mut ci_cls = CiClassifier::new();
    let mut free_cls = FreeClassifier::new();

    for g in 0..=max_genus {
        let f = 2 * g as i64 - 1;
        let fam = |k| e.enumerate_by_genus(k, g).unwrap();
        let (ci, fr, tl, pc) = (
            fam(FamilyKind::CompleteIntersection),
            fam(FamilyKind::Free),
            fam(FamilyKind::Telescopic),
            fam(FamilyKind::Planar),
        );

        for (name, list) in [
            ("ci", &ci),
            ("free", &fr),
            ("telescopic", &tl),
            ("planar", &pc),
        ] {
            rep.check(list.windows(2).all(|w| w[0] < w[1]), || {
                format!("{name} genus {g}: not strictly sorted")
            });
        }

        // Each family is exactly the classifier's cut of the previous one.
        let cut = |list: &[Semigroup], keep: &mut dyn FnMut(&Semigroup) -> bool| {
            list.iter()
                .filter(|s| keep(s))
                .map(|s| s.generators().to_vec())
                .collect::<BTreeSet<_>>()
        };
        let want_fr = cut(&ci, &mut |s| free_cls.is_free(s));
        rep.check(want_fr == gens_of(&fr), || {
            format!("genus {g}: free ≠ free-classified ci")
        });
        let want_tl = cut(&fr, &mut |s| is_telescopic(s));
        rep.check(want_tl == gens_of(&tl), || {
            format!("genus {g}: telescopic set mismatch")
        });
        let want_pc = cut(&tl, &mut |s| is_planar(s));
        rep.check(want_pc == gens_of(&pc), || {
            format!("genus {g}: planar set mismatch")
        });

        for s in ci.iter() {
            rep.semigroups += 1;
            check_ci(&mut rep, &mut ci_cls, s, f);
        }
        for s in fr.iter() {
            check_free(&mut rep, s);
        }
        for s in tl.iter() {
            check_telescopic(&mut rep, s);
        }
        for s in pc.iter() {
            check_planar(&mut rep, s);
        }
    }
    rep
}

fn check_ci(rep: &mut PropertyReport, cls: &mut CiClassifier<i64>, s: &Semigroup, f: i64) {
    let e = s.embedding_dimension();
    let c = s.conductor();
    let m = s.multiplicity();
    let gens = s.generators();
    rep.check(s.frobenius() == f, || format!("{s:?}: F ≠ {f}"));
    rep.check(dp_frobenius(gens, (2 * f + 2).max(0) as usize) == f, || {
        format!("{s:?}: DP Frobenius disagrees")
    });
    rep.check(s.is_symmetric(), || format!("{s:?}: not symmetric"));
    rep.check(e < 2 || f % 2 != 0, || format!("{s:?}: even Frobenius"));
    rep.check(cls.is_complete_intersection(s), || {
        format!("{s:?}: classifier says not ci")
    });
    rep.check(m >= bounds::min_multiplicity_ci::<i64>(e).unwrap(), || {
        format!("{s:?}: m < 2^(e-1)")
    });
    rep.check(c >= bounds::min_conductor_ci::<i64>(e).unwrap(), || {
        format!("{s:?}: c < (e-1)2^(e-1)")
    });
    if !s.is_natural() {
        rep.check(e <= bounds::max_embdim_ci(c).unwrap(), || {
            format!("{s:?}: e > log2 c + 1")
        });
    }
    if !bounds::is_refined_bound_exception(gens) {
        rep.check(e <= bounds::max_embdim_ci_refined(c).unwrap(), || {
            format!("{s:?}: e > log2(c-4) + 1")
        });
    }
    if m != 2 && !s.is_natural() {
        rep.check(gens.iter().all(|&r| r < f), || {
            format!("{s:?}: generator ≥ F with m ≠ 2")
        });
    }
}

/// Facts about the last step of one free arrangement.
fn check_free_step(rep: &mut PropertyReport, s: &Semigroup, arr: &Arrangement<i64>) {
    let h = arr.h();
    if h == 0 {
        return;
    }
    rep.arrangements += 1;
    let (d, r) = (arr.d(h), arr.r(h));
    let (f, c) = (s.frobenius(), s.conductor());
    let tag = || format!("{s:?} arranged {:?}", arr.order());
    rep.check(num_integer::gcd(d, r) == 1, || {
        format!("{}: gcd(d_h, r_h) ≠ 1", tag())
    });
    rep.check((f + r) % d == 0, || format!("{}: d_h ∤ F + r_h", tag()));
    let prefix: Vec<i64> = arr.order()[..h].iter().map(|&x| x / d).collect();
    let prev = Semigroup::new(&prefix).unwrap();
    rep.check(
        cisg::families::quotient_frobenius(f, d, r) == Some(prev.frobenius()),
        || format!("{}: quotient Frobenius", tag()),
    );
    rep.check((d - 1) * (r - 1) >= 1 << h, || {
        format!("{}: (d_h-1)(r_h-1) < 2^h", tag())
    });
    rep.check((d - 1) * (r - 1) <= c, || {
        format!("{}: d_h > c/(r_h-1) + 1", tag())
    });
    if h >= 2 {
        rep.check(bounds::rh_range_free(h, c, d).unwrap().contains(r), || {
            format!("{}: r_h outside free range", tag())
        });
        if r < bounds::rh_lower_free_strict::<i64>(h).unwrap() {
            rep.strict_free_bound_misses.push(tag());
        }
    }
}

fn check_free(rep: &mut PropertyReport, s: &Semigroup) {
    let mut any = false;
    for order in permutations(s.generators()) {
        let arr = Arrangement::new(s, &order).unwrap();
        if arr.is_free() {
            any = true;
            rep.check(arr.eseq().iter().all(|&e| e >= 2), || {
                format!("{s:?}: e_k < 2")
            });
            check_free_step(rep, s, &arr);
        }
    }
    rep.check(any, || format!("{s:?}: no free arrangement"));
}

fn check_telescopic(rep: &mut PropertyReport, s: &Semigroup) {
    let arr = Arrangement::increasing(s);
    rep.check(arr.is_free(), || {
        format!("{s:?}: increasing arrangement not free")
    });
    let (h, e, c) = (arr.h(), s.embedding_dimension(), s.conductor());
    if h >= 1 {
        rep.check(arr.d(h) < arr.r(h), || format!("{s:?}: d_h ≥ r_h"));
    }
    if e >= 2 {
        rep.check(c >= bounds::min_conductor_telescopic(e).unwrap(), || {
            format!("{s:?}: c below telescopic bound")
        });
    }
    if h >= 2 {
        rep.check(
            bounds::rh_range_telescopic(h, c, arr.d(h))
                .unwrap()
                .contains(arr.r(h)),
            || format!("{s:?}: r_h outside telescopic range"),
        );
    }
}

fn check_planar(rep: &mut PropertyReport, s: &Semigroup) {
    let arr = Arrangement::increasing(s);
    let (h, c) = (arr.h(), s.conductor());
    rep.check(arr.has_increasing_characteristic(), || {
        format!("{s:?}: e_k r_k ≥ r_(k+1)")
    });
    rep.check(c >= bounds::min_conductor_planar(h).unwrap(), || {
        format!("{s:?}: c below planar bound")
    });
    rep.check(h <= bounds::max_h_planar(c).unwrap(), || {
        format!("{s:?}: h above planar bound")
    });
    if h >= 2 {
        rep.check(
            bounds::rh_range_planar(h, c, arr.d(h))
                .unwrap()
                .contains(arr.r(h)),
            || format!("{s:?}: r_h outside planar range"),
        );
    }
}

/// Enumerates every family up to `max_genus` inside a rayon pool of
/// `threads` workers.
pub fn enumerate_in_pool(threads: usize, max_genus: u64) -> Vec<Vec<Vec<i64>>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap();
    pool.install(|| {
        let e = Enumerator::<i64>::new().with_parallel(true);
        let mut out = Vec::new();
        for g in 0..=max_genus {
            for k in FamilyKind::ALL {
                let list = e.enumerate_by_genus(k, g).unwrap();
                out.push(list.iter().map(|s| s.generators().to_vec()).collect());
            }
        }
        out
    })
}

/// Rows of the fixture table: `(genus, ci, fr, tl, pc)`.
pub fn table_fixture() -> Vec<(u64, usize, usize, usize, usize)> {
    let text = include_str!("../../../../fixtures/table_g0_56.csv");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("genus,ci,free,telescopic,planar"));
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let v: Vec<u64> = l.split(',').map(|x| x.trim().parse().unwrap()).collect();
            (
                v[0],
                v[1] as usize,
                v[2] as usize,
                v[3] as usize,
                v[4] as usize,
            )
        })
        .collect()
}

/// Generator lists in a fixture file, one comma-separated list per line.
pub fn list_fixture(text: &str) -> BTreeSet<Vec<i64>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(|x| x.trim().parse().unwrap()).collect())
        .collect()
}

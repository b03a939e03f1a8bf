//! Exhaustive enumeration of one-faced collections of a given genus.
//!
//! Rooted collections are fixed-point-free involutions on the `8g - 4` sides
//! of a labeled polygon whose vertex rotation has only 4-cycles. They are
//! produced by backtracking: the least unmatched side is paired with each
//! later unmatched side, and a partial pairing is abandoned as soon as a
//! rotation cycle closes with length other than 4 or an open rotation path
//! already has more than 4 sides.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{canonicalize, CanonicalClass};
use crate::error::{Error, Result};
use crate::moves::{curve_decomposition, is_non_simplifiable, total_trisections, type_counts, vertex_census, TypeCounts};
use crate::pattern::GluingPattern;

const UNSET: usize = usize::MAX;

/// `(4g - 2)! / (2^(2g - 1) g!)`, the number of rooted collections.
pub fn rooted_count_formula(g: usize) -> Result<u128> {
    if g == 0 {
        return Err(Error::GenusTooSmall(0));
    }
    let overflow = || Error::Overflow(g);
    let mut num: u128 = 1;
    for k in 2..=(4 * g - 2) as u128 {
        num = num.checked_mul(k).ok_or_else(overflow)?;
    }
    let mut den: u128 = 1u128.checked_shl((2 * g - 1) as u32).ok_or_else(overflow)?;
    for k in 2..=g as u128 {
        den = den.checked_mul(k).ok_or_else(overflow)?;
    }
    Ok(num / den)
}

struct Search {
    n: usize,
    alpha: Vec<usize>,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            n,
            alpha: vec![UNSET; n],
        }
    }

    #[inline]
    fn mu(&self, h: usize) -> usize {
        self.alpha[(h + 1) % self.n]
    }

    #[inline]
    fn mu_inv(&self, h: usize) -> usize {
        match self.alpha[h] {
            UNSET => UNSET,
            a => (a + self.n - 1) % self.n,
        }
    }

    /// Whether the rotation path through `s` can still become a 4-cycle.
    fn path_ok(&self, s: usize) -> bool {
        let mut fwd = 0;
        let mut h = s;
        loop {
            let next = self.mu(h);
            if next == UNSET {
                break;
            }
            if next == s {
                return fwd + 1 == 4;
            }
            fwd += 1;
            if fwd >= 4 {
                return false;
            }
            h = next;
        }
        let mut back = 0;
        let mut h = s;
        loop {
            let prev = self.mu_inv(h);
            if prev == UNSET {
                break;
            }
            back += 1;
            if back + 1 + fwd > 4 {
                return false;
            }
            h = prev;
        }
        back + 1 + fwd <= 4
    }

    fn pair(&mut self, a: usize, b: usize) -> bool {
        self.alpha[a] = b;
        self.alpha[b] = a;
        let n = self.n;
        self.path_ok((a + n - 1) % n) && self.path_ok((b + n - 1) % n)
    }

    fn unpair(&mut self, a: usize, b: usize) {
        self.alpha[a] = UNSET;
        self.alpha[b] = UNSET;
    }

    fn run<F: FnMut(&[usize])>(&mut self, from: usize, emit: &mut F) {
        let Some(u) = (from..self.n).find(|&h| self.alpha[h] == UNSET) else {
            emit(&self.alpha);
            return;
        };
        for v in (u + 1)..self.n {
            if self.alpha[v] != UNSET {
                continue;
            }
            if self.pair(u, v) {
                self.run(u + 1, emit);
            }
            self.unpair(u, v);
        }
    }
}

fn side_count(g: usize) -> Result<usize> {
    if g == 0 {
        Err(Error::GenusTooSmall(0))
    } else {
        Ok(8 * g - 4)
    }
}

/// Runs `emit` on every rooted involution descending from `0 <-> first`.
fn branch<F: FnMut(&[usize])>(n: usize, first: usize, emit: &mut F) {
    let mut s = Search::new(n);
    if s.pair(0, first) {
        s.run(1, emit);
    }
}

/// Calls `f` once per rooted pattern; branches on the partner of side 0 run
/// in parallel, so `f` sees patterns in no particular order.
pub fn for_each_rooted<F>(g: usize, f: F) -> Result<()>
where
    F: Fn(GluingPattern) + Sync,
{
    let n = side_count(g)?;
    (1..n).into_par_iter().for_each(|first| {
        branch(n, first, &mut |alpha| f(GluingPattern::from_alpha_unchecked(alpha.to_vec())));
    });
    Ok(())
}

/// Number of rooted patterns found by the search.
pub fn count_rooted(g: usize) -> Result<u64> {
    let n = side_count(g)?;
    Ok((1..n)
        .into_par_iter()
        .map(|first| {
            let mut c = 0u64;
            branch(n, first, &mut |_| c += 1);
            c
        })
        .sum())
}

/// All rooted patterns in a fixed order (by partner of side 0, then search order).
pub fn enumerate_rooted(g: usize) -> Result<Vec<GluingPattern>> {
    let n = side_count(g)?;
    let parts: Vec<Vec<GluingPattern>> = (1..n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            branch(n, first, &mut |alpha| out.push(GluingPattern::from_alpha_unchecked(alpha.to_vec())));
            out
        })
        .collect();
    Ok(parts.into_iter().flatten().collect())
}

/// Per-class summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AtlasRecord {
    pub class: CanonicalClass,
    #[serde(rename = "S")]
    pub s: usize,
    pub curve_count: usize,
    pub census: TypeCounts,
    pub trisections_total: usize,
    pub non_simplifiable: bool,
}

impl AtlasRecord {
    pub fn from_class(class: CanonicalClass) -> Self {
        let p = class.pattern();
        let curves = curve_decomposition(&p);
        let census = vertex_census(&p, 0);
        AtlasRecord {
            s: curves.one_simple_count(),
            curve_count: curves.curves.len(),
            census: type_counts(&census),
            trisections_total: total_trisections(&census),
            non_simplifiable: is_non_simplifiable(&p),
            class,
        }
    }

    pub fn pattern(&self) -> GluingPattern {
        self.class.pattern()
    }
}

/// Classes of genus `g`, sorted by canonical word.
pub fn enumerate_classes(g: usize) -> Result<Vec<AtlasRecord>> {
    let n = side_count(g)?;
    let merged = (1..n)
        .into_par_iter()
        .map(|first| {
            let mut local: HashMap<Vec<i32>, CanonicalClass> = HashMap::new();
            branch(n, first, &mut |alpha| {
                let p = GluingPattern::from_alpha_unchecked(alpha.to_vec());
                let c = canonicalize(&p);
                local.entry(c.word.clone()).or_insert(c);
            });
            local
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                a.entry(k).or_insert(v);
            }
            a
        });
    let mut classes: Vec<CanonicalClass> = merged.into_values().collect();
    classes.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(classes.into_par_iter().map(AtlasRecord::from_class).collect())
}

/// Sum of orbit sizes, which must equal the rooted count.
pub fn rooted_total(records: &[AtlasRecord]) -> usize {
    records.iter().map(|r| r.class.orbit_size).sum()
}

/// Looks up the index of a class by canonical word.
pub fn index_by_word(records: &[AtlasRecord]) -> HashMap<Vec<i32>, usize> {
    records
        .iter()
        .enumerate()
        .map(|(k, r)| (r.class.word.clone(), k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: every perfect matching, filtered by full validation.
    fn brute_force_rooted(n: usize) -> usize {
        fn rec(alpha: &mut Vec<usize>, count: &mut usize) {
            let Some(u) = alpha.iter().position(|&a| a == UNSET) else {
                if GluingPattern::from_alpha(alpha.clone()).is_ok() {
                    *count += 1;
                }
                return;
            };
            for v in (u + 1)..alpha.len() {
                if alpha[v] == UNSET {
                    alpha[u] = v;
                    alpha[v] = u;
                    rec(alpha, count);
                    alpha[u] = UNSET;
                    alpha[v] = UNSET;
                }
            }
        }
        let mut alpha = vec![UNSET; n];
        let mut c = 0;
        rec(&mut alpha, &mut c);
        c
    }

    #[test]
    fn formula_values() {
        assert_eq!(rooted_count_formula(1).unwrap(), 1);
        assert_eq!(rooted_count_formula(2).unwrap(), 45);
        // 10! / (2^5 * 3!) = 3628800 / 192
        assert_eq!(rooted_count_formula(3).unwrap(), 18900);
        assert!(matches!(rooted_count_formula(40), Err(Error::Overflow(40))));
        assert!(rooted_count_formula(0).is_err());
    }

    #[test]
    fn pruned_search_matches_brute_force() {
        assert_eq!(brute_force_rooted(4), 1);
        assert_eq!(brute_force_rooted(12), 45);
        assert_eq!(count_rooted(1).unwrap(), 1);
        assert_eq!(count_rooted(2).unwrap(), 45);
    }

    #[test]
    fn genus_one_and_two() {
        let r1 = enumerate_rooted(1).unwrap();
        assert_eq!(r1, vec![GluingPattern::torus()]);
        let c2 = enumerate_classes(2).unwrap();
        assert_eq!(c2.len(), 6);
        assert_eq!(rooted_total(&c2), 45);
        assert!(c2.iter().all(|r| [3, 6, 12].contains(&r.class.orbit_size)));
    }

    #[test]
    fn rooted_order_is_stable() {
        assert_eq!(enumerate_rooted(2).unwrap(), enumerate_rooted(2).unwrap());
    }
}

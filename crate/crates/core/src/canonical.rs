//! Canonical representatives of patterns up to rotation and relabeling.

use serde::{Deserialize, Serialize};

use crate::pattern::{GluingPattern, Pos};

/// Which symmetries are quotiented out.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Equivalence {
    /// Cyclic rotation and relabeling. This is homeomorphism of collections.
    #[default]
    Rotation,
    /// Additionally identify a word with its reversal.
    RotationReflection,
}

/// Lexicographically least relabeled rotation of a pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalClass {
    pub word: Vec<i32>,
    pub orbit_size: usize,
    pub aut_size: usize,
    pub genus: usize,
}

impl CanonicalClass {
    pub fn pattern(&self) -> GluingPattern {
        let labels: Vec<i64> = self.word.iter().map(|&v| v as i64).collect();
        GluingPattern::from_labels(&labels).expect("canonical words are valid patterns")
    }

    pub fn word_string(&self) -> String {
        self.word
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Relabels the rotation starting at `start` by first appearance.
fn encode_from(alpha: &[Pos], start: Pos, out: &mut [i32]) {
    let n = alpha.len();
    out.iter_mut().for_each(|v| *v = 0);
    let mut next = 1;
    for k in 0..n {
        if out[k] == 0 {
            let partner = (alpha[(start + k) % n] + n - start) % n;
            out[k] = next;
            out[partner] = -next;
            next += 1;
        }
    }
}

/// Minimal encoding over all rotations and the number of rotations achieving it.
fn min_rotation(alpha: &[Pos]) -> (Vec<i32>, usize) {
    let n = alpha.len();
    let mut best = vec![0; n];
    let mut buf = vec![0; n];
    encode_from(alpha, 0, &mut best);
    let mut hits = 1;
    for start in 1..n {
        encode_from(alpha, start, &mut buf);
        match buf.cmp(&best) {
            std::cmp::Ordering::Less => {
                std::mem::swap(&mut best, &mut buf);
                hits = 1;
            }
            std::cmp::Ordering::Equal => hits += 1,
            std::cmp::Ordering::Greater => {}
        }
    }
    (best, hits)
}

pub fn canonicalize(p: &GluingPattern) -> CanonicalClass {
    canonicalize_with(p, Equivalence::Rotation)
}

pub fn canonicalize_with(p: &GluingPattern, eq: Equivalence) -> CanonicalClass {
    let n = p.len();
    let (mut word, mut aut) = min_rotation(p.alpha_table());
    if eq == Equivalence::RotationReflection {
        let rev = p.reversed();
        let (rword, raut) = min_rotation(rev.alpha_table());
        match rword.cmp(&word) {
            std::cmp::Ordering::Less => {
                word = rword;
                aut = raut;
            }
            std::cmp::Ordering::Equal => aut += raut,
            std::cmp::Ordering::Greater => {}
        }
    }
    let group = match eq {
        Equivalence::Rotation => n,
        Equivalence::RotationReflection => 2 * n,
    };
    CanonicalClass {
        word,
        orbit_size: group / aut,
        aut_size: aut,
        genus: p.genus(),
    }
}

/// Canonical word only; cheaper to compare and hash than the full class.
pub fn canonical_word(p: &GluingPattern) -> Vec<i32> {
    min_rotation(p.alpha_table()).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_rotation() {
        let p = GluingPattern::parse("2 -1 -2 1").unwrap();
        let c = canonicalize(&p);
        assert_eq!(c.word, vec![1, 2, -1, -2]);
        assert_eq!(c.aut_size, 4);
        assert_eq!(c.orbit_size, 1);
        assert_eq!(c.genus, 1);
    }

    #[test]
    fn brute_force_orbit_count() {
        // Oracle: count distinct normalized rotations directly.
        let p = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6").unwrap();
        let mut words: Vec<Vec<i32>> = (0..p.len()).map(|k| p.rotated(k).word().to_vec()).collect();
        words.sort();
        words.dedup();
        let c = canonicalize(&p);
        assert_eq!(c.orbit_size, words.len());
        assert_eq!(c.orbit_size * c.aut_size, p.len());
        assert_eq!(&c.word, &words[0]);
    }

    #[test]
    fn idempotent_and_valid() {
        let p = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6").unwrap();
        let c = canonicalize(&p);
        let again = canonicalize(&c.pattern());
        assert_eq!(c, again);
        assert_eq!(c.pattern().word(), &c.word[..]);
    }

    #[test]
    fn reflection_quotient_is_coarser() {
        let p = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6").unwrap();
        let a = canonicalize_with(&p, Equivalence::RotationReflection);
        let b = canonicalize_with(&p.reversed(), Equivalence::RotationReflection);
        assert_eq!(a.word, b.word);
        assert_eq!(a.orbit_size * a.aut_size, 2 * p.len());
    }
}

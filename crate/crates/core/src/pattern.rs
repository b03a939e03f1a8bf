//! Gluing patterns: the cyclic word read off the boundary of the single face.
//!
//! A pattern of length `2E` is stored as the side-pairing involution `alpha`
//! on positions `0..2E` together with a label word normalized to
//! first-appearance order (first occurrence positive, partner negative).
//! Positions are the public handle for oriented edges; labels are only a
//! presentation of `alpha`.
//!
//! With `gamma` the cyclic shift `h -> h + 1`, the vertex rotation is
//! `mu = alpha . gamma`, and every `mu`-cycle of a valid pattern has length 4.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Index of a side in the cyclic word.
pub type Pos = usize;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GluingPattern {
    word: Vec<i32>,
    alpha: Vec<Pos>,
}

impl GluingPattern {
    /// The unique one-faced collection on the torus, `a b -a -b`.
    pub fn torus() -> Self {
        Self::from_alpha_unchecked(vec![2, 3, 0, 1])
    }

    /// Parses whitespace- or comma-separated signed labels.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == ',') {
            if tok.is_empty() {
                continue;
            }
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::InvalidToken(tok.to_string()))?;
            if v == 0 {
                return Err(Error::InvalidToken(tok.to_string()));
            }
            labels.push(v);
        }
        Self::from_labels(&labels)
    }

    /// Builds a pattern from signed labels; each absolute value must occur
    /// once positive and once negative.
    pub fn from_labels(labels: &[i64]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyWord);
        }
        // label -> (positive position, negative position)
        let mut sides: HashMap<i64, (Option<Pos>, Option<Pos>)> = HashMap::new();
        for (pos, &v) in labels.iter().enumerate() {
            if v == 0 {
                return Err(Error::InvalidToken("0".into()));
            }
            let entry = sides.entry(v.abs()).or_default();
            let slot = if v > 0 { &mut entry.0 } else { &mut entry.1 };
            if slot.is_some() {
                return Err(Error::UnpairedLabel(v.abs()));
            }
            *slot = Some(pos);
        }
        let mut alpha = vec![0; labels.len()];
        for (&label, &(plus, minus)) in &sides {
            match (plus, minus) {
                (Some(a), Some(b)) => {
                    alpha[a] = b;
                    alpha[b] = a;
                }
                _ => return Err(Error::UnpairedLabel(label)),
            }
        }
        Self::from_alpha(alpha)
    }

    /// Builds a pattern from a side-pairing involution, checking 4-valence.
    pub fn from_alpha(alpha: Vec<Pos>) -> Result<Self> {
        let n = alpha.len();
        if n == 0 {
            return Err(Error::EmptyWord);
        }
        for (h, &a) in alpha.iter().enumerate() {
            if a >= n {
                return Err(Error::PositionOutOfRange(a, n));
            }
            if a == h || alpha[a] != h {
                return Err(Error::UnpairedLabel(h as i64 + 1));
            }
        }
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut h = start;
            loop {
                seen[h] = true;
                len += 1;
                h = alpha[(h + 1) % n];
                if h == start {
                    break;
                }
            }
            if len != 4 {
                return Err(Error::NotFourValent(len));
            }
        }
        Ok(Self::from_alpha_unchecked(alpha))
    }

    /// Builds a pattern from an involution already known to be valid.
    pub(crate) fn from_alpha_unchecked(alpha: Vec<Pos>) -> Self {
        let n = alpha.len();
        let mut word = vec![0i32; n];
        let mut next = 1i32;
        for h in 0..n {
            if word[h] == 0 {
                word[h] = next;
                word[alpha[h]] = -next;
                next += 1;
            }
        }
        debug_assert!(n % 8 == 4, "one-faced 4-valent words have length 8g-4");
        GluingPattern { word, alpha }
    }

    /// Number of sides (polygon edges), `2E = 8g - 4`.
    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.len() / 2
    }

    pub fn vertex_count(&self) -> usize {
        self.len() / 4
    }

    /// Genus from `V - E + 1 = 2 - 2g`.
    pub fn genus(&self) -> usize {
        (self.edge_count() + 1 - self.vertex_count()) / 2
    }

    /// Normalized label word.
    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn alpha_table(&self) -> &[Pos] {
        &self.alpha
    }

    /// The other side of the same edge.
    #[inline]
    pub fn alpha(&self, h: Pos) -> Pos {
        self.alpha[h]
    }

    /// Face successor.
    #[inline]
    pub fn gamma(&self, h: Pos) -> Pos {
        if h + 1 == self.len() {
            0
        } else {
            h + 1
        }
    }

    #[inline]
    pub fn gamma_inv(&self, h: Pos) -> Pos {
        if h == 0 {
            self.len() - 1
        } else {
            h - 1
        }
    }

    /// Vertex rotation `alpha . gamma`.
    #[inline]
    pub fn mu(&self, h: Pos) -> Pos {
        self.alpha[self.gamma(h)]
    }

    /// Edge id `0..E`, numbered by first appearance.
    #[inline]
    pub fn edge_of(&self, h: Pos) -> usize {
        self.word[h].unsigned_abs() as usize - 1
    }

    /// `k` such that `gamma^k(root) = h`.
    #[inline]
    pub fn order_index(&self, root: Pos, h: Pos) -> usize {
        let n = self.len();
        (h + n - root) % n
    }

    pub fn check_pos(&self, h: Pos) -> Result<()> {
        if h < self.len() {
            Ok(())
        } else {
            Err(Error::PositionOutOfRange(h, self.len()))
        }
    }

    /// The `mu`-cycles, each listed in `mu` order starting from its smallest
    /// position, sorted by that smallest position.
    pub fn vertex_cycles(&self) -> Vec<[Pos; 4]> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n / 4);
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = [start; 4];
            for k in 1..4 {
                cyc[k] = self.mu(cyc[k - 1]);
            }
            for &h in &cyc {
                seen[h] = true;
            }
            out.push(cyc);
        }
        out
    }

    /// Index into `vertex_cycles()` for every position.
    pub fn vertex_of_positions(&self) -> Vec<usize> {
        let mut owner = vec![0; self.len()];
        for (v, cyc) in self.vertex_cycles().iter().enumerate() {
            for &h in cyc {
                owner[h] = v;
            }
        }
        owner
    }

    /// Same collection read from position `k`: new position 0 is old `k`.
    pub fn rotated(&self, k: Pos) -> Self {
        let n = self.len();
        let k = k % n;
        let alpha = (0..n)
            .map(|h| (self.alpha[(h + k) % n] + n - k) % n)
            .collect();
        Self::from_alpha_unchecked(alpha)
    }

    /// The word read backwards (orientation reversal of the surface).
    pub fn reversed(&self) -> Self {
        let n = self.len();
        let alpha = (0..n).map(|h| n - 1 - self.alpha[n - 1 - h]).collect();
        Self::from_alpha_unchecked(alpha)
    }

    /// Space-separated label word; parses back to the same pattern.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// Every unordered pair of sides belonging to distinct edges, as `(i, j)`
    /// with `i < j`.
    pub(crate) fn distinct_edge_pairs(&self) -> impl Iterator<Item = (Pos, Pos)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |i| ((i + 1)..n).filter(move |&j| self.alpha[i] != j).map(move |j| (i, j)))
    }
}

impl fmt::Display for GluingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for GluingPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const G2_SUM: &str = "1 2 -1 3 -2 -3 4 5 -4 6 -5 -6";

    #[test]
    fn torus_word() {
        let t = GluingPattern::parse("1 2 -1 -2").unwrap();
        assert_eq!(t, GluingPattern::torus());
        assert_eq!(t.genus(), 1);
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.edge_count(), 2);
    }

    #[test]
    fn torus_mu_cycle_matches_a_bbar_abar_b() {
        // a=0, b=1, abar=2, bbar=3
        let t = GluingPattern::torus();
        assert_eq!(t.vertex_cycles(), vec![[0, 3, 2, 1]]);
    }

    #[test]
    fn genus_two_sum_word() {
        let p = GluingPattern::parse(G2_SUM).unwrap();
        assert_eq!(p.genus(), 2);
        let cycles = p.vertex_cycles();
        assert_eq!(cycles.len(), 3);
        let mut all: Vec<Pos> = cycles.iter().flatten().copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..12).collect::<Vec<_>>());
    }

    #[test]
    fn six_letters_are_not_four_valent() {
        assert!(matches!(
            GluingPattern::parse("1 2 3 -1 -2 -3"),
            Err(Error::NotFourValent(_))
        ));
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(GluingPattern::parse("  "), Err(Error::EmptyWord));
        assert!(matches!(GluingPattern::parse("1 0 -1"), Err(Error::InvalidToken(_))));
        assert!(matches!(GluingPattern::parse("1 x -1"), Err(Error::InvalidToken(_))));
        assert_eq!(GluingPattern::parse("1 2 1 -2"), Err(Error::UnpairedLabel(1)));
        assert_eq!(GluingPattern::parse("1 2 -1"), Err(Error::UnpairedLabel(2)));
    }

    #[test]
    fn labels_are_renormalized() {
        let p = GluingPattern::parse("-7, 4, 7, -4").unwrap();
        assert_eq!(p.serialize(), "1 2 -1 -2");
        let q = GluingPattern::parse(G2_SUM).unwrap();
        assert_eq!(q.serialize(), G2_SUM);
    }

    #[test]
    fn order_index_is_the_shift() {
        let t = GluingPattern::torus();
        assert_eq!(t.order_index(0, 0), 0);
        assert_eq!(t.order_index(0, 3), 3);
        for root in 0..4 {
            for h in 0..4 {
                assert_eq!(
                    t.order_index(root, t.gamma(h)),
                    (t.order_index(root, h) + 1) % 4
                );
            }
        }
    }

    #[test]
    fn rotation_and_reversal_stay_valid() {
        let p = GluingPattern::parse(G2_SUM).unwrap();
        for k in 0..p.len() {
            let r = p.rotated(k);
            assert!(GluingPattern::from_alpha(r.alpha_table().to_vec()).is_ok());
            assert_eq!(r.rotated(p.len() - k), p);
        }
        let rev = p.reversed();
        assert!(GluingPattern::from_alpha(rev.alpha_table().to_vec()).is_ok());
        assert_eq!(rev.reversed(), p);
    }
}

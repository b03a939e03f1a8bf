use crate::error::{Error, Result};
use crate::moves::surgery::open_interval;
use crate::pattern::{GluingPattern, Pos};

/// Result of gluing two marked patterns.
#[derive(Clone, Debug)]
pub struct SumOutcome {
    pub pattern: GluingPattern,
    /// Positions of the halves `x1, x1', x2, x2'` of the first marked edge.
    pub left_halves: [Pos; 4],
    /// Positions of the halves `y1, y1', y2, y2'` of the second marked edge.
    pub right_halves: [Pos; 4],
    /// Old position in the first pattern to new position (`None` on the marked edge).
    pub left_map: Vec<Option<Pos>>,
    pub right_map: Vec<Option<Pos>>,
}

#[derive(Clone, Copy)]
enum Slot {
    Left(Pos),
    Right(Pos),
    Half(usize),
}

/// `x w1 x' w2` and `y v1 y' v2` give `x1 w1 x1' x2 w2 x2' y1 v1 y1' y2 v2 y2'`.
pub fn connected_sum(p1: &GluingPattern, i: Pos, p2: &GluingPattern, j: Pos) -> Result<GluingPattern> {
    connected_sum_detailed(p1, i, p2, j).map(|o| o.pattern)
}

pub fn connected_sum_detailed(p1: &GluingPattern, i: Pos, p2: &GluingPattern, j: Pos) -> Result<SumOutcome> {
    p1.check_pos(i)?;
    p2.check_pos(j)?;
    let mut slots = Vec::with_capacity(p1.len() + p2.len() + 4);
    let (ib, jb) = (p1.alpha(i), p2.alpha(j));
    slots.push(Slot::Half(0));
    slots.extend(open_interval(p1, i, ib).map(Slot::Left));
    slots.push(Slot::Half(1));
    slots.push(Slot::Half(2));
    slots.extend(open_interval(p1, ib, i).map(Slot::Left));
    slots.push(Slot::Half(3));
    slots.push(Slot::Half(4));
    slots.extend(open_interval(p2, j, jb).map(Slot::Right));
    slots.push(Slot::Half(5));
    slots.push(Slot::Half(6));
    slots.extend(open_interval(p2, jb, j).map(Slot::Right));
    slots.push(Slot::Half(7));

    let mut left_map = vec![None; p1.len()];
    let mut right_map = vec![None; p2.len()];
    let mut half = [0; 8];
    for (k, s) in slots.iter().enumerate() {
        match *s {
            Slot::Left(h) => left_map[h] = Some(k),
            Slot::Right(h) => right_map[h] = Some(k),
            Slot::Half(t) => half[t] = k,
        }
    }
    let alpha: Vec<Pos> = slots
        .iter()
        .map(|s| match *s {
            Slot::Left(h) => left_map[p1.alpha(h)].unwrap(),
            Slot::Right(h) => right_map[p2.alpha(h)].unwrap(),
            Slot::Half(t) => half[t ^ 1],
        })
        .collect();
    let pattern = GluingPattern::from_alpha_unchecked(alpha);
    debug_assert_eq!(pattern.genus(), p1.genus() + p2.genus());
    Ok(SumOutcome {
        pattern,
        left_halves: [half[0], half[1], half[2], half[3]],
        right_halves: [half[4], half[5], half[6], half[7]],
        left_map,
        right_map,
    })
}

/// Gluing with the torus pattern at its first side.
pub fn sum_with_torus(p: &GluingPattern, x: Pos) -> Result<SumOutcome> {
    connected_sum_detailed(p, x, &GluingPattern::torus(), 0)
}

/// Frame positions `(x1, x1', x2, x2')` around a block starting at `q`, if the
/// six sides from `q` pair as `a b a' c b' c'` and sit after
/// `x1 .. x1' x2 .. x2'`.
fn block_frame(p: &GluingPattern, q: Pos) -> Option<[Pos; 4]> {
    let n = p.len();
    if n < 12 {
        return None;
    }
    let at = |k: usize| (q + k) % n;
    if p.alpha(at(0)) != at(2) || p.alpha(at(1)) != at(4) || p.alpha(at(3)) != at(5) {
        return None;
    }
    let x2b = p.gamma_inv(q);
    let x2 = p.alpha(x2b);
    let x1b = p.gamma_inv(x2);
    let x1 = p.alpha(x1b);
    if x1 != at(6) {
        return None;
    }
    Some([x1, x1b, x2, x2b])
}

/// Start positions of every torus summand block with its gluing frame.
pub fn find_torus_blocks(p: &GluingPattern) -> Vec<Pos> {
    (0..p.len()).filter(|&q| block_frame(p, q).is_some()).collect()
}

#[derive(Clone, Debug)]
pub struct SplitOutcome {
    /// The summand, read from the merged marked edge.
    pub pattern: GluingPattern,
    /// Marked side in `pattern` (always 0).
    pub marked: Pos,
    /// Summand position to position in the original pattern. The marked side
    /// maps to `x1` and its partner to `x1'`.
    pub origin: Vec<Pos>,
    /// Positions of `x1, x1', x2, x2'` in the original pattern.
    pub halves: [Pos; 4],
}

/// Removes the block at `q` and merges the frame edges back into one edge.
pub fn split_torus_summand(p: &GluingPattern, q: Pos) -> Result<SplitOutcome> {
    p.check_pos(q)?;
    let halves = block_frame(p, q).ok_or(Error::NotABlock(q))?;
    let [x1, x1b, x2, x2b] = halves;
    // summand word: x w1 x' w2
    let mut origin = vec![x1];
    origin.extend(open_interval(p, x1, x1b));
    let xbar = origin.len();
    origin.push(x1b);
    origin.extend(open_interval(p, x2, x2b));
    let mut back = vec![usize::MAX; p.len()];
    for (k, &h) in origin.iter().enumerate() {
        back[h] = k;
    }
    let alpha: Vec<Pos> = origin
        .iter()
        .enumerate()
        .map(|(k, &h)| {
            if k == 0 {
                xbar
            } else if k == xbar {
                0
            } else {
                back[p.alpha(h)]
            }
        })
        .collect();
    let pattern = GluingPattern::from_alpha(alpha).map_err(|_| Error::NotABlock(q))?;
    Ok(SplitOutcome {
        pattern,
        marked: 0,
        origin,
        halves,
    })
}

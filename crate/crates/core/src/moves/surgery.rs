use crate::error::{Error, Result};
use crate::pattern::{GluingPattern, Pos};

/// Positions strictly between `from` and `to` going forward along the face.
pub(crate) fn open_interval(p: &GluingPattern, from: Pos, to: Pos) -> impl Iterator<Item = Pos> + '_ {
    let len = p.order_index(from, to);
    (1..len).map(move |k| (from + k) % p.len())
}

fn strictly_between(p: &GluingPattern, from: Pos, to: Pos, h: Pos) -> bool {
    let k = p.order_index(from, h);
    k > 0 && k < p.order_index(from, to)
}

fn check_pair(p: &GluingPattern, i: Pos, j: Pos) -> Result<()> {
    p.check_pos(i)?;
    p.check_pos(j)?;
    if i == j || p.alpha(i) == j {
        return Err(Error::SameEdge(i, j));
    }
    Ok(())
}

/// True iff exactly one of the partners of `i`, `j` lies strictly between
/// them, i.e. the word reads `.. x .. x' .. y .. y'` for `{x, y}` equal to
/// `{i, j}` or to their partners.
pub fn is_intertwined(p: &GluingPattern, i: Pos, j: Pos) -> Result<bool> {
    check_pair(p, i, j)?;
    Ok(intertwined_unchecked(p, i, j))
}

#[inline]
pub(crate) fn intertwined_unchecked(p: &GluingPattern, i: Pos, j: Pos) -> bool {
    strictly_between(p, i, j, p.alpha(i)) != strictly_between(p, i, j, p.alpha(j))
}

/// All intertwined pairs `(i, j)` with `i < j`, in lexicographic order.
pub fn intertwined_pairs(p: &GluingPattern) -> Vec<(Pos, Pos)> {
    p.distinct_edge_pairs()
        .filter(|&(i, j)| intertwined_unchecked(p, i, j))
        .collect()
}

/// A surgery together with where everything went.
#[derive(Clone, Debug)]
pub struct SurgeryOutcome {
    pub pattern: GluingPattern,
    /// New positions of the two sides `X` and `Y` created by the cut.
    pub new_x: Pos,
    pub new_y: Pos,
    /// Old position to new position; `None` for the four rewritten sides.
    pub map: Vec<Option<Pos>>,
}

#[derive(Clone, Copy)]
enum Slot {
    Old(Pos),
    X,
    XBar,
    Y,
    YBar,
}

/// Rewrites `w1 x w2 x' w3 y w4 y'` into `w3 X w2 X' w1 Y w4 Y'`.
///
/// When the pair reads `i .. j' .. j .. i'` the partners are used instead,
/// since the surgery between two sides equals the one between their partners.
pub fn surgery(p: &GluingPattern, i: Pos, j: Pos) -> Result<GluingPattern> {
    surgery_detailed(p, i, j).map(|o| o.pattern)
}

pub fn surgery_detailed(p: &GluingPattern, i: Pos, j: Pos) -> Result<SurgeryOutcome> {
    check_pair(p, i, j)?;
    if !intertwined_unchecked(p, i, j) {
        return Err(Error::NotIntertwined(i, j));
    }
    let (x, y) = if strictly_between(p, i, j, p.alpha(i)) {
        (i, j)
    } else {
        (p.alpha(i), p.alpha(j))
    };
    let xb = p.alpha(x);
    let yb = p.alpha(y);

    let mut slots = Vec::with_capacity(p.len());
    let old = |from, to| open_interval(p, from, to).map(Slot::Old);
    slots.extend(old(xb, y)); // w3
    slots.push(Slot::X);
    slots.extend(old(x, xb)); // w2
    slots.push(Slot::XBar);
    slots.extend(old(yb, x)); // w1
    slots.push(Slot::Y);
    slots.extend(old(y, yb)); // w4
    slots.push(Slot::YBar);
    debug_assert_eq!(slots.len(), p.len());

    let mut map = vec![None; p.len()];
    let mut special = [0; 4];
    for (k, s) in slots.iter().enumerate() {
        match *s {
            Slot::Old(h) => map[h] = Some(k),
            Slot::X => special[0] = k,
            Slot::XBar => special[1] = k,
            Slot::Y => special[2] = k,
            Slot::YBar => special[3] = k,
        }
    }
    let mut alpha = vec![0; p.len()];
    for (k, s) in slots.iter().enumerate() {
        alpha[k] = match *s {
            Slot::Old(h) => map[p.alpha(h)].expect("partner of an untouched side is untouched"),
            Slot::X => special[1],
            Slot::XBar => special[0],
            Slot::Y => special[3],
            Slot::YBar => special[2],
        };
    }
    let pattern = GluingPattern::from_alpha_unchecked(alpha);
    debug_assert!(GluingPattern::from_alpha(pattern.alpha_table().to_vec()).is_ok());
    Ok(SurgeryOutcome {
        pattern,
        new_x: special[0],
        new_y: special[2],
        map,
    })
}

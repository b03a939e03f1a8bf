use crate::moves::curves::{next_on_curve, one_simple_count};
use crate::moves::surgery::{intertwined_unchecked, surgery};
use crate::pattern::{GluingPattern, Pos};
use crate::trace::{MoveKind, MoveRecord, ReductionTrace};

/// Least side `h` off the 1-simple curves such that `h` and `C(h)` are
/// intertwined.
pub fn find_simplification(p: &GluingPattern) -> Option<Pos> {
    (0..p.len()).find(|&h| {
        let c = next_on_curve(p, h);
        c != h && p.alpha(h) != c && intertwined_unchecked(p, h, c)
    })
}

pub fn is_non_simplifiable(p: &GluingPattern) -> bool {
    find_simplification(p).is_none()
}

/// Applies simplifications until none is left. Each step adds at least one
/// 1-simple curve (two when the curve through `h` has exactly two edges), so
/// at most `E` steps run.
pub fn simplify_cascade(p: &GluingPattern) -> (GluingPattern, ReductionTrace) {
    let mut cur = p.clone();
    let mut trace = ReductionTrace::default();
    while let Some(h) = find_simplification(&cur) {
        let c = next_on_curve(&cur, h);
        let next = surgery(&cur, h, c).expect("simplification pair is intertwined");
        debug_assert!(one_simple_count(&next) > one_simple_count(&cur));
        trace.push(MoveRecord::new(MoveKind::Simplify, vec![h, c], &cur, &next));
        cur = next;
    }
    (cur, trace)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_is_stable() {
        let t = GluingPattern::torus();
        assert_eq!(find_simplification(&t), None);
        let (r, tr) = simplify_cascade(&t);
        assert_eq!(r, t);
        assert!(tr.is_empty());
    }
}

//! Named families: necklaces and the chains `X_2g`, `Y_2g` built by gluing
//! tori onto 1-simple curves of a necklace.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::moves::{curve_decomposition, sum_with_torus};
use crate::pattern::{GluingPattern, Pos};

/// Curve data that identifies necklaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Signature {
    pub one_simple: usize,
    pub curves: usize,
    /// Largest number of self-intersections of a single curve.
    pub max_self_intersections: usize,
}

pub fn signature(p: &GluingPattern) -> Signature {
    let d = curve_decomposition(p);
    Signature {
        one_simple: d.one_simple_count(),
        curves: d.curves.len(),
        max_self_intersections: d.curves.iter().map(|c| c.self_intersections).max().unwrap_or(0),
    }
}

/// Signature of `N_g` for `g >= 2`: `g` 1-simple curves and one further
/// curve with `g - 1` self-intersections.
pub fn necklace_signature(g: usize) -> Signature {
    Signature {
        one_simple: g,
        curves: g + 1,
        max_self_intersections: g - 1,
    }
}

pub fn is_necklace(p: &GluingPattern) -> bool {
    let g = p.genus();
    if g == 1 {
        return true;
    }
    let d = curve_decomposition(p);
    signature(p) == necklace_signature(g)
        && d.curves.iter().filter(|c| !c.one_simple).count() == 1
}

/// `N_1` is the torus; `N_{g+1}` is `N_g` summed with the torus at the first
/// side giving the necklace signature.
pub fn necklace(g: usize) -> Result<GluingPattern> {
    if g == 0 {
        return Err(Error::GenusTooSmall(0));
    }
    let mut cur = GluingPattern::torus();
    for next in 2..=g {
        cur = (0..cur.len())
            .map(|x| sum_with_torus(&cur, x).expect("sides are in range").pattern)
            .find(is_necklace)
            .ok_or(Error::SignatureMismatch(next))?;
    }
    Ok(cur)
}

/// One side on each of the first `k` 1-simple curves of `p`.
fn one_simple_sides(p: &GluingPattern, k: usize) -> Vec<Pos> {
    let d = curve_decomposition(p);
    let mut sides: Vec<Pos> = d
        .curves
        .iter()
        .filter(|c| c.one_simple)
        .map(|c| {
            let e = c.edges[0];
            (0..p.len()).find(|&h| p.edge_of(h) == e).unwrap()
        })
        .collect();
    sides.sort_unstable();
    sides.truncate(k);
    sides
}

/// Glues a torus at each listed side, tracking positions across sums.
fn glue_tori(base: GluingPattern, mut sites: Vec<Pos>) -> GluingPattern {
    let mut cur = base;
    while let Some(x) = sites.pop() {
        let out = sum_with_torus(&cur, x).expect("sides are in range");
        sites = sites.iter().map(|&s| out.left_map[s].expect("other edges survive")).collect();
        cur = out.pattern;
    }
    cur
}

/// `X_2g`: `g` tori glued on `N_g`, one on each of `g` distinct 1-simple curves.
pub fn chain_x(g: usize) -> Result<GluingPattern> {
    let n = necklace(g)?;
    let sites = one_simple_sides(&n, g);
    Ok(glue_tori(n, sites))
}

/// `Y_2g`: `g - 1` tori glued on `N_{g+1}`, on distinct 1-simple curves.
pub fn chain_y(g: usize) -> Result<GluingPattern> {
    if g == 0 {
        return Err(Error::GenusTooSmall(0));
    }
    let n = necklace(g + 1)?;
    let sites = one_simple_sides(&n, g - 1);
    Ok(glue_tori(n, sites))
}

/// `|S_1 - S_2| / 2`, a lower bound for the surgery distance.
pub fn s_lower_bound(p1: &GluingPattern, p2: &GluingPattern) -> f64 {
    let (a, b) = (signature(p1).one_simple, signature(p2).one_simple);
    a.abs_diff(b) as f64 / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::canonical_word;

    #[test]
    fn small_necklaces() {
        assert_eq!(necklace(1).unwrap(), GluingPattern::torus());
        let n2 = necklace(2).unwrap();
        let sum = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6").unwrap();
        assert_eq!(canonical_word(&n2), canonical_word(&sum));
        let n4 = necklace(4).unwrap();
        assert_eq!(n4.genus(), 4);
        assert_eq!(signature(&n4), necklace_signature(4));
        assert!(necklace(0).is_err());
    }

    #[test]
    fn chains_have_even_genus() {
        for g in 1..=3 {
            assert_eq!(chain_x(g).unwrap().genus(), 2 * g);
            assert_eq!(chain_y(g).unwrap().genus(), 2 * g);
        }
    }

    #[test]
    fn bound_is_symmetric() {
        let t = GluingPattern::torus();
        let n3 = necklace(3).unwrap();
        assert_eq!(s_lower_bound(&t, &t), 0.0);
        assert_eq!(s_lower_bound(&t, &n3), s_lower_bound(&n3, &t));
    }
}

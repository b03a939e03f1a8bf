use serde::Serialize;

use crate::pattern::{GluingPattern, Pos};

/// `C(h) = gamma(alpha(gamma(h)))`: the next side along the same curve.
#[inline]
pub fn next_on_curve(p: &GluingPattern, h: Pos) -> Pos {
    p.gamma(p.alpha(p.gamma(h)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Curve {
    /// Edge ids, ascending.
    pub edges: Vec<usize>,
    pub self_intersections: usize,
    pub one_simple: bool,
}

impl Curve {
    pub fn length(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveDecomposition {
    /// Sorted by smallest edge id.
    pub curves: Vec<Curve>,
    /// Index into `curves` for every edge id.
    pub curve_of_edge: Vec<usize>,
}

impl CurveDecomposition {
    pub fn one_simple_count(&self) -> usize {
        self.curves.iter().filter(|c| c.one_simple).count()
    }

    pub fn is_one_simple_edge(&self, edge: usize) -> bool {
        self.curves[self.curve_of_edge[edge]].one_simple
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn curve_decomposition(p: &GluingPattern) -> CurveDecomposition {
    let e = p.edge_count();
    let mut parent: Vec<usize> = (0..e).collect();
    for h in 0..p.len() {
        let a = find(&mut parent, p.edge_of(h));
        let b = find(&mut parent, p.edge_of(next_on_curve(p, h)));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut index_of_root = vec![usize::MAX; e];
    let mut curves: Vec<Curve> = Vec::new();
    let mut curve_of_edge = vec![0; e];
    for (edge, slot) in curve_of_edge.iter_mut().enumerate() {
        let r = find(&mut parent, edge);
        if index_of_root[r] == usize::MAX {
            index_of_root[r] = curves.len();
            curves.push(Curve {
                edges: Vec::new(),
                self_intersections: 0,
                one_simple: false,
            });
        }
        let c = index_of_root[r];
        curves[c].edges.push(edge);
        *slot = c;
    }
    // Opposite sides at a vertex lie on the same strand.
    for cyc in p.vertex_cycles() {
        let s1 = curve_of_edge[p.edge_of(cyc[0])];
        let s2 = curve_of_edge[p.edge_of(cyc[1])];
        debug_assert_eq!(s1, curve_of_edge[p.edge_of(cyc[2])]);
        debug_assert_eq!(s2, curve_of_edge[p.edge_of(cyc[3])]);
        if s1 == s2 {
            curves[s1].self_intersections += 1;
        }
    }
    for h in 0..p.len() {
        if next_on_curve(p, h) == h {
            curves[curve_of_edge[p.edge_of(h)]].one_simple = true;
        }
    }
    CurveDecomposition {
        curves,
        curve_of_edge,
    }
}

/// Number of 1-simple curves.
pub fn one_simple_count(p: &GluingPattern) -> usize {
    // A 1-simple curve is a single edge whose two sides are both fixed by C.
    (0..p.len()).filter(|&h| next_on_curve(p, h) == h).count() / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_curves_are_one_simple() {
        let t = GluingPattern::torus();
        assert_eq!(next_on_curve(&t, 0), 0);
        let d = curve_decomposition(&t);
        assert_eq!(d.curves.len(), 2);
        assert!(d.curves.iter().all(|c| c.one_simple && c.length() == 1));
        assert_eq!(one_simple_count(&t), 2);
    }

    #[test]
    fn g2_sum_word() {
        let p = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6").unwrap();
        assert_eq!(next_on_curve(&p, 1), 1);
        let fixed: Vec<usize> = (0..12).filter(|&h| next_on_curve(&p, h) == h).collect();
        // sides of edges 2 and 5
        assert_eq!(fixed, vec![1, 4, 7, 10]);
        assert_eq!(one_simple_count(&p), 2);
        assert_eq!(curve_decomposition(&p).one_simple_count(), 2);
    }

    #[test]
    fn curve_orbits_partition_edges() {
        let p = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6").unwrap();
        let d = curve_decomposition(&p);
        let mut all: Vec<usize> = d.curves.iter().flat_map(|c| c.edges.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, (0..6).collect::<Vec<_>>());
        for h in 0..12 {
            let mut k = h;
            for _ in 0..12 {
                k = next_on_curve(&p, k);
                assert_eq!(d.curve_of_edge[p.edge_of(k)], d.curve_of_edge[p.edge_of(h)]);
            }
        }
    }
}

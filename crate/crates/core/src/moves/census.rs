use serde::Serialize;

use crate::pattern::{GluingPattern, Pos};

/// How the face traversal visits the four corners of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VertexType {
    /// Visited in rotation order.
    Type1,
    /// Visited in reverse rotation order.
    Type2,
    Type3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexInfo {
    /// The rotation cycle, starting at the side with the least order index.
    pub cycle: [Pos; 4],
    pub vtype: VertexType,
    /// Non-trivial down-steps of the order indices along the cycle.
    pub trisections: u8,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TypeCounts {
    pub type1: usize,
    pub type2: usize,
    pub type3: usize,
}

pub fn classify(p: &GluingPattern, root: Pos, cycle: [Pos; 4]) -> VertexInfo {
    let ord = cycle.map(|h| p.order_index(root, h));
    let start = (0..4).min_by_key(|&k| ord[k]).unwrap();
    let cycle = [0, 1, 2, 3].map(|k| cycle[(start + k) % 4]);
    let o = [0, 1, 2, 3].map(|k| ord[(start + k) % 4]);
    let vtype = if o[1] < o[2] && o[2] < o[3] {
        VertexType::Type1
    } else if o[3] < o[2] && o[2] < o[1] {
        VertexType::Type2
    } else {
        VertexType::Type3
    };
    let trisections = (0..3).filter(|&k| o[k] > o[k + 1]).count() as u8;
    VertexInfo {
        cycle,
        vtype,
        trisections,
    }
}

/// One entry per vertex, in `vertex_cycles()` order.
pub fn vertex_census(p: &GluingPattern, root: Pos) -> Vec<VertexInfo> {
    p.vertex_cycles()
        .into_iter()
        .map(|c| classify(p, root, c))
        .collect()
}

pub fn type_counts(census: &[VertexInfo]) -> TypeCounts {
    let mut t = TypeCounts::default();
    for v in census {
        match v.vtype {
            VertexType::Type1 => t.type1 += 1,
            VertexType::Type2 => t.type2 += 1,
            VertexType::Type3 => t.type3 += 1,
        }
    }
    t
}

pub fn total_trisections(census: &[VertexInfo]) -> usize {
    census.iter().map(|v| v.trisections as usize).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_vertex_is_type_two() {
        let t = GluingPattern::torus();
        let c = vertex_census(&t, 0);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].cycle, [0, 3, 2, 1]);
        assert_eq!(c[0].vtype, VertexType::Type2);
        assert_eq!(c[0].trisections, 2);
    }

    #[test]
    fn type_fixes_trisections() {
        let p = GluingPattern::parse("1 2 -1 3 -2 -3 4 5 -4 6 -5 -6").unwrap();
        for root in 0..p.len() {
            let c = vertex_census(&p, root);
            for v in &c {
                let expect = match v.vtype {
                    VertexType::Type1 => 0,
                    VertexType::Type2 => 2,
                    VertexType::Type3 => 1,
                };
                assert_eq!(v.trisections, expect);
            }
            assert_eq!(total_trisections(&c), 4);
        }
    }
}

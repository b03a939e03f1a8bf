//! Reduction of a pattern to a connected sum with the torus.
//!
//! The pipeline runs in stages: simplify until no simplification is left,
//! raise the number of 1-simple curves until the pattern is almost toral,
//! then rearrange Type 1 vertices until it is toral, at which point a torus
//! summand can be split off.
//!
//! The local surgeries that drive each stage are found by a bounded search
//! over intertwined pairs touching the diagnosed configuration, falling back
//! to all intertwined pairs, and accepted on their postcondition. Candidates
//! are tried in lexicographic order of `(i, j)`, so traces are reproducible.
//! All stage predicates use position 0 of the current word as root.
//!
//! Local configurations are read on the rotation `h -> gamma(alpha(h))`,
//! which is `mu` conjugated by the shift: its cycles are the vertex cycles
//! of `vertex_cycles()` moved one position to the right.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::moves::{
    classify, find_torus_blocks, intertwined_pairs, is_non_simplifiable, one_simple_count, simplify_cascade,
    split_torus_summand, surgery, surgery_detailed, sum_with_torus, VertexType,
};
use crate::moves::surgery::intertwined_unchecked;
use crate::canonical::canonical_word;
use crate::pattern::{GluingPattern, Pos};
use crate::trace::{MoveKind, MoveRecord, ReductionTrace, Stage};

/// `gamma(alpha(h))`.
#[inline]
fn nu(p: &GluingPattern, h: Pos) -> Pos {
    p.gamma(p.alpha(h))
}

/// Vertex structure of a pattern on the `gamma alpha` rotation, typed from a
/// fixed root. Vertex `v` here is vertex `v` of `vertex_cycles()`.
#[derive(Clone, Debug)]
pub struct LocalStructure {
    pub cycles: Vec<[Pos; 4]>,
    pub owner: Vec<usize>,
    pub types: Vec<VertexType>,
}

impl LocalStructure {
    pub fn new(p: &GluingPattern, root: Pos) -> Self {
        let cycles: Vec<[Pos; 4]> = p.vertex_cycles().iter().map(|c| c.map(|h| p.gamma(h))).collect();
        let mut owner = vec![0; p.len()];
        for (v, c) in cycles.iter().enumerate() {
            for &h in c {
                owner[h] = v;
            }
        }
        let types = cycles.iter().map(|&c| classify(p, root, c).vtype).collect();
        LocalStructure { cycles, owner, types }
    }

    /// Distinct vertices other than `v` sharing an edge with `v`.
    pub fn neighbors(&self, p: &GluingPattern, v: usize) -> BTreeSet<usize> {
        self.cycles[v]
            .iter()
            .map(|&h| self.owner[p.alpha(h)])
            .filter(|&w| w != v)
            .collect()
    }

    fn count_neighbors(&self, p: &GluingPattern, v: usize, t: VertexType) -> usize {
        self.neighbors(p, v).into_iter().filter(|&w| self.types[w] == t).count()
    }

    /// Number of adjacent (Type 1, Type 2) vertex pairs.
    pub fn type12_adjacencies(&self, p: &GluingPattern) -> usize {
        (0..self.cycles.len())
            .filter(|&v| self.types[v] == VertexType::Type1)
            .map(|v| self.count_neighbors(p, v, VertexType::Type2))
            .sum()
    }

    /// Vertex of a cycle as listed by `vertex_cycles()`.
    fn vertex_of_cycle(&self, p: &GluingPattern, cycle: &[Pos; 4]) -> Result<usize> {
        let cycle = cycle.map(|h| p.gamma(h));
        let v = self.owner[cycle[0]];
        let mut a = self.cycles[v];
        let mut b = cycle;
        a.sort_unstable();
        b.sort_unstable();
        if a == b {
            Ok(v)
        } else {
            Err(Error::NotTyped)
        }
    }
}

/// True iff some side of `v1` has its partner in `v2`.
pub fn vertices_adjacent(p: &GluingPattern, v1: &[Pos; 4], v2: &[Pos; 4]) -> bool {
    v1.iter().any(|&h| v2.contains(&p.alpha(h)))
}

/// Local names around a Type 1 vertex `(c' d e f)` sharing the edge `c` with
/// a Type 2 vertex `(g a' b c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct AdjacentPair {
    a: Pos,
    b_bar: Pos,
    d_bar: Pos,
    e_bar: Pos,
    f_bar: Pos,
    g_bar: Pos,
}

impl AdjacentPair {
    fn at_shared_side(p: &GluingPattern, c: Pos) -> Self {
        let g = nu(p, c);
        let a_bar = nu(p, g);
        let b = nu(p, a_bar);
        let c_bar = p.alpha(c);
        let d = nu(p, c_bar);
        let e = nu(p, d);
        let f = nu(p, e);
        AdjacentPair {
            a: p.alpha(a_bar),
            b_bar: p.alpha(b),
            d_bar: p.alpha(d),
            e_bar: p.alpha(e),
            f_bar: p.alpha(f),
            g_bar: p.alpha(g),
        }
    }

    /// `g'` first among the entering sides `b', d', e', f', g'`, reading from `a`.
    fn good(&self, p: &GluingPattern) -> bool {
        let ord = |h| p.order_index(self.a, h);
        let og = ord(self.g_bar);
        [self.b_bar, self.d_bar, self.e_bar, self.f_bar]
            .iter()
            .all(|&h| og < ord(h))
    }

    /// The first of `b', d', e', f'` reading from `a`.
    fn first_exit(&self, p: &GluingPattern) -> Pos {
        *[self.b_bar, self.d_bar, self.e_bar, self.f_bar]
            .iter()
            .min_by_key(|&&h| p.order_index(self.a, h))
            .unwrap()
    }
}

fn adjacent_pairs(p: &GluingPattern, ls: &LocalStructure, v1: usize, v2: usize) -> Vec<AdjacentPair> {
    ls.cycles[v2]
        .iter()
        .filter(|&&c| ls.owner[p.alpha(c)] == v1)
        .map(|&c| AdjacentPair::at_shared_side(p, c))
        .collect()
}

/// Whether the order around an adjacent Type 1 vertex `v1` and Type 2 vertex
/// `v2` is good, for every edge they share.
pub fn good_order(p: &GluingPattern, root: Pos, v1: &[Pos; 4], v2: &[Pos; 4]) -> Result<bool> {
    p.check_pos(root)?;
    let ls = LocalStructure::new(p, root);
    let (i1, i2) = (ls.vertex_of_cycle(p, v1)?, ls.vertex_of_cycle(p, v2)?);
    if ls.types[i1] != VertexType::Type1 || ls.types[i2] != VertexType::Type2 {
        return Err(Error::NotTyped);
    }
    let pairs = adjacent_pairs(p, &ls, i1, i2);
    if pairs.is_empty() {
        return Err(Error::NotAdjacent);
    }
    Ok(pairs.iter().all(|lp| lp.good(p)))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StagePredicates {
    pub non_simplifiable: bool,
    pub almost_toral: bool,
    pub toral: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Defect {
    AdjacentType2(usize, usize),
    BadOrder(usize, usize),
    /// Almost toral, and the first exit of a (Type 1, Type 2) pair reaches
    /// another Type 2 vertex.
    HiddenStep(usize, usize, usize),
}

impl Defect {
    fn vertices(&self) -> Vec<usize> {
        match *self {
            Defect::AdjacentType2(a, b) | Defect::BadOrder(a, b) => vec![a, b],
            Defect::HiddenStep(a, b, c) => vec![a, b, c],
        }
    }
}

fn defects(p: &GluingPattern, ls: &LocalStructure) -> Vec<Defect> {
    let nv = ls.cycles.len();
    let mut adj2 = Vec::new();
    let mut bad = Vec::new();
    let mut hidden = Vec::new();
    for v in 0..nv {
        for w in ls.neighbors(p, v) {
            match (ls.types[v], ls.types[w]) {
                (VertexType::Type2, VertexType::Type2) if v < w => adj2.push(Defect::AdjacentType2(v, w)),
                (VertexType::Type1, VertexType::Type2) => {
                    for lp in adjacent_pairs(p, ls, v, w) {
                        if !lp.good(p) {
                            bad.push(Defect::BadOrder(v, w));
                        } else {
                            let u = ls.owner[lp.first_exit(p)];
                            if u != v && u != w && ls.types[u] == VertexType::Type2 {
                                hidden.push(Defect::HiddenStep(v, w, u));
                            }
                        }
                    }
                }
                _ => {}
            }
        }
    }
    adj2.into_iter().chain(bad).chain(hidden).collect()
}

pub fn stage_predicates(p: &GluingPattern) -> StagePredicates {
    let non_simplifiable = is_non_simplifiable(p);
    if !non_simplifiable {
        return StagePredicates::default();
    }
    let ls = LocalStructure::new(p, 0);
    let almost_toral = !defects(p, &ls)
        .iter()
        .any(|d| matches!(d, Defect::AdjacentType2(..) | Defect::BadOrder(..)));
    let toral = almost_toral
        && (0..ls.cycles.len())
            .filter(|&v| ls.types[v] == VertexType::Type1)
            .all(|v| ls.count_neighbors(p, v, VertexType::Type2) <= 2);
    StagePredicates {
        non_simplifiable,
        almost_toral,
        toral,
    }
}

/// Sides of the given vertices and their partners.
fn incident_sides(p: &GluingPattern, ls: &LocalStructure, vertices: &[usize]) -> BTreeSet<Pos> {
    let mut out = BTreeSet::new();
    for &v in vertices {
        for &h in &ls.cycles[v] {
            out.insert(h);
            out.insert(p.alpha(h));
        }
    }
    out
}

/// Intertwined pairs inside each side set in turn, then all remaining
/// intertwined pairs; no pair is produced twice.
fn candidate_pairs(p: &GluingPattern, local: &[BTreeSet<Pos>]) -> Vec<(Pos, Pos)> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for set in local {
        let sides: Vec<Pos> = set.iter().copied().collect();
        for (k, &i) in sides.iter().enumerate() {
            for &j in &sides[k + 1..] {
                if p.alpha(i) != j && intertwined_unchecked(p, i, j) && seen.insert((i, j)) {
                    out.push((i, j));
                }
            }
        }
    }
    for pair in intertwined_pairs(p) {
        if seen.insert(pair) {
            out.push(pair);
        }
    }
    out
}

/// Surgery followed by simplifications, returning the first result with
/// more 1-simple curves.
///
/// Applies when the pattern is not almost toral, or when an adjacent
/// (Type 1, Type 2) pair leads out to a further Type 2 vertex. Returns `None`
/// when neither holds or no such surgery exists.
pub fn boost_s(p: &GluingPattern) -> Option<(GluingPattern, ReductionTrace)> {
    if !is_non_simplifiable(p) {
        let (q, trace) = simplify_cascade(p);
        return Some((q, trace));
    }
    let ls = LocalStructure::new(p, 0);
    let found = defects(p, &ls);
    if found.is_empty() {
        return None;
    }
    let local: Vec<BTreeSet<Pos>> = found.iter().map(|d| incident_sides(p, &ls, &d.vertices())).collect();
    let s0 = one_simple_count(p);
    for (i, j) in candidate_pairs(p, &local) {
        let q = surgery(p, i, j).expect("candidate pairs are intertwined");
        let (r, cascade) = simplify_cascade(&q);
        if one_simple_count(&r) > s0 {
            let mut trace = ReductionTrace::default();
            trace.push(MoveRecord::new(MoveKind::Surgery, vec![i, j], p, &q));
            trace.extend(cascade);
            return Some((r, trace));
        }
    }
    None
}

/// One surgery that lowers the number of adjacent (Type 1, Type 2) pairs
/// without changing the number of 1-simple curves, around a Type 1 vertex
/// with three or more Type 2 neighbours.
pub fn unclutter_type1(p: &GluingPattern) -> Option<(GluingPattern, ReductionTrace)> {
    let ls = LocalStructure::new(p, 0);
    let crowded: Vec<usize> = (0..ls.cycles.len())
        .filter(|&v| ls.types[v] == VertexType::Type1 && ls.count_neighbors(p, v, VertexType::Type2) >= 3)
        .collect();
    if crowded.is_empty() {
        return None;
    }
    let local: Vec<BTreeSet<Pos>> = crowded
        .iter()
        .map(|&v| {
            let mut vs = vec![v];
            vs.extend(ls.neighbors(p, v));
            incident_sides(p, &ls, &vs)
        })
        .collect();
    let s0 = one_simple_count(p);
    let adj0 = ls.type12_adjacencies(p);
    for (i, j) in candidate_pairs(p, &local) {
        let q = surgery(p, i, j).expect("candidate pairs are intertwined");
        if one_simple_count(&q) != s0 {
            continue;
        }
        if LocalStructure::new(&q, 0).type12_adjacencies(&q) < adj0 {
            let mut trace = ReductionTrace::default();
            trace.push(MoveRecord::new(MoveKind::Surgery, vec![i, j], p, &q));
            return Some((q, trace));
        }
    }
    None
}

fn mark_stages(p: &GluingPattern, trace: &mut ReductionTrace) -> StagePredicates {
    let st = stage_predicates(p);
    if st.non_simplifiable {
        trace.mark(Stage::NonSimplifiable);
    }
    if st.almost_toral {
        trace.mark(Stage::AlmostToral);
    }
    if st.toral {
        trace.mark(Stage::Toral);
    }
    st
}

/// Surgeries from `p` to a toral pattern of the same genus.
pub fn to_toral(p: &GluingPattern) -> Result<(GluingPattern, ReductionTrace)> {
    if p.genus() < 2 {
        return Err(Error::GenusTooSmall(p.genus()));
    }
    let (mut cur, mut trace) = simplify_cascade(p);
    // Each round raises S (at most E times) or lowers the adjacency count.
    let budget = 4 * p.len();
    for _ in 0..budget {
        if mark_stages(&cur, &mut trace).toral {
            return Ok((cur, trace));
        }
        let step = boost_s(&cur).or_else(|| unclutter_type1(&cur));
        match step {
            Some((next, t)) => {
                trace.extend(t);
                cur = next;
            }
            None => return Err(Error::ReductionStalled(cur.serialize())),
        }
    }
    Err(Error::ReductionStalled(cur.serialize()))
}

/// Makes a torus block visible in a toral pattern, with at most one surgery
/// in the expected case.
pub fn make_self_intersection(p: &GluingPattern) -> Result<(GluingPattern, ReductionTrace)> {
    if p.genus() < 2 {
        return Err(Error::GenusTooSmall(p.genus()));
    }
    if !find_torus_blocks(p).is_empty() {
        return Ok((p.clone(), ReductionTrace::default()));
    }
    let ls = LocalStructure::new(p, 0);
    let witness = (0..ls.cycles.len()).find_map(|v| {
        if ls.types[v] != VertexType::Type2 {
            return None;
        }
        let ones: Vec<usize> = ls
            .neighbors(p, v)
            .into_iter()
            .filter(|&w| ls.types[w] == VertexType::Type1)
            .collect();
        (ones.len() == 1).then(|| (v, ones[0]))
    });
    let Some((v0, v1)) = witness else {
        return Err(Error::NoToralWitness(p.serialize()));
    };
    let local = vec![incident_sides(p, &ls, &[v1]), incident_sides(p, &ls, &[v0, v1])];
    for (i, j) in candidate_pairs(p, &local) {
        let q = surgery(p, i, j).expect("candidate pairs are intertwined");
        if !find_torus_blocks(&q).is_empty() {
            let mut trace = ReductionTrace::default();
            trace.push(MoveRecord::new(MoveKind::Surgery, vec![i, j], p, &q));
            return Ok((q, trace));
        }
    }
    Err(Error::NoToralWitness(p.serialize()))
}

#[derive(Clone, Debug)]
pub struct Extraction {
    /// Genus `g - 1` summand.
    pub summand: GluingPattern,
    pub marked: Pos,
    /// The genus `g` pattern the summand was split from.
    pub split_from: GluingPattern,
    pub trace: ReductionTrace,
}

/// Surgeries to a connected sum with the torus, then the split.
pub fn extract_torus_summand(p: &GluingPattern) -> Result<Extraction> {
    let (toral, mut trace) = to_toral(p)?;
    let (ready, t2) = make_self_intersection(&toral)?;
    trace.extend(t2);
    let q = find_torus_blocks(&ready)[0];
    let split = split_torus_summand(&ready, q)?;
    trace.push(MoveRecord::new(MoveKind::Split, vec![q], &ready, &split.pattern));
    Ok(Extraction {
        summand: split.pattern,
        marked: split.marked,
        split_from: ready,
        trace,
    })
}

/// Repeated extraction down to the torus. Returns the patterns reached at
/// each genus (starting with `p`) and the concatenated trace.
pub fn reduce_to_torus(p: &GluingPattern) -> Result<(Vec<GluingPattern>, ReductionTrace)> {
    let mut levels = vec![p.clone()];
    let mut trace = ReductionTrace::default();
    let mut cur = p.clone();
    while cur.genus() > 1 {
        let ex = extract_torus_summand(&cur)?;
        // Stage markers are per level; keep only the moves.
        trace.steps.extend(ex.trace.steps);
        trace.surgery_count += ex.trace.surgery_count;
        cur = ex.summand;
        levels.push(cur.clone());
    }
    Ok((levels, trace))
}

/// Lifts a surgery on the summand split off at `block` to a surgery on
/// `p_sum` whose own split is the surgered summand.
///
/// `i`, `j` are positions in `split_torus_summand(p_sum, block).pattern`. A
/// side of the marked edge is lifted to either half of the broken edge; the
/// first lift that commutes with splitting is returned.
pub fn lift_surgery(p_sum: &GluingPattern, block: Pos, i: Pos, j: Pos) -> Result<GluingPattern> {
    let split = split_torus_summand(p_sum, block)?;
    let summand = &split.pattern;
    let target = canonical_word(&surgery(summand, i, j)?);
    let [x1, x1b, x2, x2b] = split.halves;
    let marked_bar = summand.alpha(split.marked);
    let lifts = |h: Pos| -> Vec<Pos> {
        if h == split.marked {
            vec![x1, x2b]
        } else if h == marked_bar {
            vec![x1b, x2]
        } else {
            vec![split.origin[h]]
        }
    };
    for &li in &lifts(i) {
        for &lj in &lifts(j) {
            if li == lj || p_sum.alpha(li) == lj || !intertwined_unchecked(p_sum, li, lj) {
                continue;
            }
            let out = surgery_detailed(p_sum, li, lj)?;
            let Some(new_block) = out.map[block] else { continue };
            if let Ok(s) = split_torus_summand(&out.pattern, new_block) {
                if canonical_word(&s.pattern) == target {
                    return Ok(out.pattern);
                }
            }
        }
    }
    Err(Error::NotIntertwined(i, j))
}

/// `(Γ, x) # T` with the torus summand glued at `x`.
pub fn sum_at(p: &GluingPattern, x: Pos) -> Result<GluingPattern> {
    Ok(sum_with_torus(p, x)?.pattern)
}

//! Numbered acceptance checks, evaluated one genus at a time.
//!
//! `check(criterion, g)` runs one criterion restricted to genus `g`;
//! `acceptance()` combines them over the genera each criterion covers.

use std::sync::OnceLock;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::atlas::{count_rooted, enumerate_classes, enumerate_rooted, rooted_count_formula, AtlasRecord};
use crate::canonical::{canonical_word, canonicalize};
use crate::error::Result;
use crate::families::{is_necklace, necklace, necklace_signature, s_lower_bound, signature};
use crate::graph::{build_hat_graph, build_surgery_graph, SurgeryGraph};
use crate::moves::{
    intertwined_pairs, is_non_simplifiable, one_simple_count, simplify_cascade, sum_with_torus, surgery,
    surgery_detailed, total_trisections, type_counts, vertex_census,
};
use crate::pattern::GluingPattern;
use crate::reduction::extract_torus_summand;
use crate::trace::{MoveKind, ReductionTrace};

pub const CRITERIA: usize = 11;

/// Frozen results of the exhaustive computations.
pub mod frozen {
    pub const CLASSES: [usize; 3] = [1, 6, 510];
    pub const DIAMETER: [usize; 3] = [0, 3, 6];
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Check {
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub title: &'static str,
    pub passed: bool,
    /// One entry per genus checked.
    pub details: Vec<(usize, Check)>,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        let parts: Vec<String> = self.details.iter().map(|(g, c)| format!("g={g}: {}", c.detail)).collect();
        format!("[{mark}] criterion {:>2} {}: {}", self.id, self.title, parts.join("; "))
    }
}

pub fn title(criterion: usize) -> &'static str {
    match criterion {
        1 => "rooted counts match the closed formula",
        2 => "class counts and orbit sizes",
        3 => "vertex/edge counts and trisections",
        4 => "non-simplifiable census",
        5 => "surgery laws",
        6 => "simplification adds exactly one 1-simple curve",
        7 => "torus summand extraction",
        8 => "surgery graphs connected",
        9 => "diameter bound",
        10 => "distance lower bound",
        11 => "necklace signature and uniqueness",
        _ => "unknown criterion",
    }
}

/// Genera each criterion covers in the full acceptance run.
pub fn genera(criterion: usize) -> &'static [usize] {
    match criterion {
        1 | 3 | 5 | 6 => &[1, 2, 3],
        2 => &[1, 2],
        4 | 7..=11 => &[2, 3],
        _ => &[],
    }
}

/// Cached per-genus data, shared by all criteria.
struct GenusData {
    classes: OnceLock<Vec<AtlasRecord>>,
    graph: OnceLock<SurgeryGraph>,
    hat: OnceLock<SurgeryGraph>,
}

const MAX_GENUS: usize = 3;

fn data(g: usize) -> &'static GenusData {
    static DATA: OnceLock<Vec<GenusData>> = OnceLock::new();
    let all = DATA.get_or_init(|| {
        (0..=MAX_GENUS)
            .map(|_| GenusData {
                classes: OnceLock::new(),
                graph: OnceLock::new(),
                hat: OnceLock::new(),
            })
            .collect()
    });
    &all[g]
}

fn classes(g: usize) -> &'static [AtlasRecord] {
    data(g).classes.get_or_init(|| enumerate_classes(g).expect("genus is positive"))
}

fn graph(g: usize) -> &'static SurgeryGraph {
    data(g).graph.get_or_init(|| build_surgery_graph(g).expect("genus is positive"))
}

fn hat(g: usize) -> &'static SurgeryGraph {
    data(g).hat.get_or_init(|| build_hat_graph(g).expect("genus is positive"))
}

/// Runs one criterion at one genus. `None` when it says nothing at `g`.
pub fn check(criterion: usize, g: usize) -> Option<Check> {
    if g == 0 || g > MAX_GENUS {
        return None;
    }
    match criterion {
        1 => Some(rooted_counts(g)),
        2 => Some(class_counts(g)),
        3 => Some(structure(g)),
        4 => Some(census(g)),
        5 => Some(surgery_laws(g)),
        6 => Some(simplification_law(g)),
        7 if g >= 2 => Some(extraction(g)),
        8 => Some(connectivity(g)),
        9 => Some(diameter_bound(g)),
        10 => Some(distance_bound(g)),
        11 if g >= 2 => Some(necklace_check(g)),
        _ => None,
    }
}

fn report(criterion: usize, gs: &[usize]) -> CriterionReport {
    let details: Vec<(usize, Check)> = gs.iter().filter_map(|&g| check(criterion, g).map(|c| (g, c))).collect();
    CriterionReport {
        id: criterion,
        title: title(criterion),
        passed: details.iter().all(|(_, c)| c.passed),
        details,
    }
}

/// Every criterion that applies at genus `g`.
pub fn verify_genus(g: usize) -> Vec<CriterionReport> {
    (1..=CRITERIA)
        .map(|k| report(k, &[g]))
        .filter(|r| !r.details.is_empty())
        .collect()
}

/// Every criterion over its full range of genera.
pub fn acceptance() -> Vec<CriterionReport> {
    (1..=CRITERIA).map(|k| report(k, genera(k))).collect()
}

fn rooted_counts(g: usize) -> Check {
    let found = count_rooted(g).expect("genus is positive") as u128;
    match rooted_count_formula(g) {
        Ok(expected) => Check::new(found == expected, format!("search {found}, formula {expected}")),
        Err(e) => Check::new(false, e.to_string()),
    }
}

fn class_counts(g: usize) -> Check {
    let recs = classes(g);
    let total: usize = recs.iter().map(|r| r.class.orbit_size).sum();
    let n = 8 * g - 4;
    let sizes_ok = recs.iter().all(|r| r.class.orbit_size * r.class.aut_size == n);
    let mut ok = recs.len() == frozen::CLASSES[g - 1] && sizes_ok && total as u64 == count_rooted(g).unwrap_or(0);
    if g == 2 {
        ok &= recs.iter().all(|r| [3, 6, 12].contains(&r.class.orbit_size)) && total == 45;
    }
    Check::new(ok, format!("{} classes, orbit sizes sum to {total}", recs.len()))
}

fn structure(g: usize) -> Check {
    let rooted = enumerate_rooted(g).expect("genus is positive");
    let bad = rooted
        .par_iter()
        .enumerate()
        .filter(|(k, p)| {
            let mut rng = StdRng::seed_from_u64(*k as u64);
            let shape = p.vertex_count() == 2 * g - 1 && p.edge_count() == 4 * g - 2;
            shape
                && (0..5).all(|_| {
                    let root = rng.gen_range(0..p.len());
                    total_trisections(&vertex_census(p, root)) == 2 * g
                })
        })
        .count();
    let bad = rooted.len() - bad;
    Check::new(bad == 0, format!("{} patterns, {bad} violations", rooted.len()))
}

fn census(g: usize) -> Check {
    let ns: Vec<&AtlasRecord> = classes(g).iter().filter(|r| r.non_simplifiable).collect();
    let bad = ns
        .iter()
        .filter(|r| {
            let p = r.pattern();
            !(0..p.len()).all(|root| {
                let t = type_counts(&vertex_census(&p, root));
                t.type2 == g && t.type1 == g - 1 && t.type3 == 0
            })
        })
        .count();
    Check::new(bad == 0, format!("{} non-simplifiable classes, {bad} violations", ns.len()))
}

fn surgery_laws(g: usize) -> Check {
    let recs = classes(g);
    let (pairs, bad): (usize, usize) = recs
        .par_iter()
        .map(|r| {
            let p = r.pattern();
            let s0 = one_simple_count(&p) as i64;
            let own = canonical_word(&p);
            let pairs = intertwined_pairs(&p);
            let bad = pairs
                .iter()
                .filter(|&&(i, j)| {
                    let out = surgery_detailed(&p, i, j).expect("pairs are intertwined");
                    let q = &out.pattern;
                    let valid = GluingPattern::from_alpha(q.alpha_table().to_vec()).is_ok() && q.genus() == g;
                    let back = surgery(q, out.new_x, out.new_y).map(|b| canonical_word(&b) == own);
                    let bar = surgery(&p, p.alpha(i), p.alpha(j)).map(|b| canonical_word(&b) == canonical_word(q));
                    let ds = (one_simple_count(q) as i64 - s0).abs();
                    !(valid && back == Ok(true) && bar == Ok(true) && ds <= 2)
                })
                .count();
            (pairs.len(), bad)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Check::new(bad == 0, format!("{pairs} surgeries, {bad} violations"))
}

type WordPair = (Vec<i32>, Vec<i32>);

/// Simplification steps of a trace whose S gain is not exactly one.
fn simplify_violations(trace: &ReductionTrace) -> (usize, Vec<WordPair>) {
    let mut steps = 0;
    let mut bad = Vec::new();
    for m in trace.steps.iter().filter(|m| m.op == MoveKind::Simplify) {
        steps += 1;
        let lab = |w: &[i32]| GluingPattern::from_labels(&w.iter().map(|&v| v as i64).collect::<Vec<_>>()).unwrap();
        if one_simple_count(&lab(&m.after)) != one_simple_count(&lab(&m.before)) + 1 {
            bad.push((m.before.clone(), m.after.clone()));
        }
    }
    (steps, bad)
}

fn simplification_law(g: usize) -> Check {
    let recs = classes(g);
    let results: Vec<(usize, Vec<WordPair>)> = recs
        .par_iter()
        .map(|r| {
            let p = r.pattern();
            let (_, mut trace) = simplify_cascade(&p);
            if g >= 2 {
                if let Ok(ex) = extract_torus_summand(&p) {
                    trace.extend(ex.trace);
                }
            }
            simplify_violations(&trace)
        })
        .collect();
    let steps: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<_> = results.into_iter().flat_map(|r| r.1).collect();
    let mut detail = format!("{steps} steps, {} violations", bad.len());
    if let Some((b, a)) = bad.first() {
        let w = |v: &[i32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        detail.push_str(&format!(" (e.g. [{}] -> [{}])", w(b), w(a)));
    }
    Check::new(bad.is_empty(), detail)
}

fn extraction(g: usize) -> Check {
    let recs = classes(g);
    let budget = 3 * g - 1;
    let outcomes: Vec<std::result::Result<usize, String>> = recs
        .par_iter()
        .map(|r| {
            let p = r.pattern();
            let ex = extract_torus_summand(&p).map_err(|e| e.to_string())?;
            let again = sum_with_torus(&ex.summand, ex.marked).map_err(|e| e.to_string())?.pattern;
            if ex.summand.genus() != g - 1 || canonical_word(&again) != canonical_word(&ex.split_from) {
                return Err(format!("round trip failed on {}", p));
            }
            Ok(ex.trace.surgery_count)
        })
        .collect();
    let failures = outcomes.iter().filter(|o| o.is_err()).count();
    let max = outcomes.iter().filter_map(|o| o.as_ref().ok()).copied().max().unwrap_or(0);
    Check::new(
        failures == 0 && max <= budget,
        format!("{} classes, {failures} failures, max {max} surgeries (budget {budget})", recs.len()),
    )
}

fn connectivity(g: usize) -> Check {
    let (k, h) = (graph(g), hat(g));
    Check::new(
        k.is_connected() && h.is_connected(),
        format!(
            "K: {} nodes {} edges connected={}; hat: {} nodes connected={}",
            k.node_count(),
            k.edge_count(),
            k.is_connected(),
            h.node_count(),
            h.is_connected()
        ),
    )
}

fn diameter_bound(g: usize) -> Check {
    let bound = (3 * g * g + 9 * g).saturating_sub(12);
    match graph(g).diameter(g) {
        Ok(d) => Check::new(
            d <= bound && d == frozen::DIAMETER[g - 1],
            format!("diameter {d}, bound {bound}"),
        ),
        Err(e) => Check::new(false, e.to_string()),
    }
}

fn distance_bound(g: usize) -> Check {
    let k = graph(g);
    let rows: Result<Vec<Vec<usize>>> = k.level_distances(g);
    let Ok(rows) = rows else {
        return Check::new(false, "level is disconnected");
    };
    let members = k.level(g);
    let patterns: Vec<GluingPattern> = members.iter().map(|&v| k.nodes[v].pattern()).collect();
    let bad: usize = (0..patterns.len())
        .into_par_iter()
        .map(|a| {
            (0..patterns.len())
                .filter(|&b| (rows[a][b] as f64) < s_lower_bound(&patterns[a], &patterns[b]))
                .count()
        })
        .sum();
    let n = patterns.len();
    Check::new(bad == 0, format!("{} pairs, {bad} violations", n * n))
}

fn necklace_check(g: usize) -> Check {
    let Ok(n) = necklace(g) else {
        return Check::new(false, "construction failed");
    };
    let sig_ok = signature(&n) == necklace_signature(g) && is_necklace(&n) && is_non_simplifiable(&n);
    let word = canonicalize(&n).word;
    let matching: Vec<&AtlasRecord> = classes(g).iter().filter(|r| is_necklace(&r.pattern())).collect();
    let unique = matching.len() == 1 && matching[0].class.word == word;
    Check::new(
        sig_ok && unique,
        format!("signature ok={sig_ok}, {} classes with the signature", matching.len()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one_report() {
        let r = verify_genus(1);
        assert!(r.iter().all(|c| c.passed), "{:?}", r);
        assert!(r.iter().all(|c| c.id != 7 && c.id != 11));
    }

    #[test]
    fn out_of_range_is_not_applicable() {
        assert!(check(1, 0).is_none());
        assert!(check(1, 4).is_none());
        assert!(check(12, 2).is_none());
    }
}

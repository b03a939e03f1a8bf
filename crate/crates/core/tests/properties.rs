use std::sync::OnceLock;

use onefaced::atlas::enumerate_rooted;
use onefaced::canonical::{canonical_word, canonicalize};
use onefaced::moves::{
    connected_sum_detailed, find_simplification, find_torus_blocks, intertwined_pairs, is_intertwined,
    is_non_simplifiable, one_simple_count, simplify_cascade, split_torus_summand, surgery, surgery_detailed,
    total_trisections, type_counts, vertex_census, VertexType,
};
use onefaced::GluingPattern;
use proptest::prelude::*;
use proptest::sample::Index;

fn rooted(g: usize) -> &'static [GluingPattern] {
    static CELLS: [OnceLock<Vec<GluingPattern>>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CELLS[g - 1].get_or_init(|| enumerate_rooted(g).unwrap())
}

/// A rooted pattern of genus 1..=max_genus read from a random position.
fn pattern(max_genus: usize) -> impl Strategy<Value = GluingPattern> {
    (1..=max_genus, any::<Index>(), any::<usize>()).prop_map(|(g, i, k)| {
        let p = i.get(rooted(g));
        p.rotated(k % p.len())
    })
}

fn pattern_and_pair(max_genus: usize) -> impl Strategy<Value = (GluingPattern, usize, usize)> {
    (2..=max_genus, any::<Index>(), any::<usize>(), any::<Index>()).prop_map(|(g, i, k, e)| {
        let p = i.get(rooted(g));
        let p = p.rotated(k % p.len());
        let (a, b) = *e.get(&intertwined_pairs(&p));
        (p, a, b)
    })
}

fn relabel(p: &GluingPattern, perm: &[usize], flips: &[bool]) -> Vec<i64> {
    let mut order: Vec<usize> = (0..p.edge_count()).collect();
    for (k, &s) in perm.iter().enumerate().take(order.len()) {
        let len = order.len();
        order.swap(k % len, s % len);
    }
    p.word()
        .iter()
        .map(|&l| {
            let e = l.unsigned_abs() as usize - 1;
            let sign = if flips[e % flips.len()] { -l.signum() } else { l.signum() };
            sign as i64 * (order[e] as i64 + 1)
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn shape_of_valid_patterns(p in pattern(3)) {
        let g = p.genus();
        prop_assert_eq!(p.len(), 8 * g - 4);
        prop_assert_eq!(p.vertex_cycles().len(), 2 * g - 1);
        let mut seen = vec![0; p.len()];
        for c in p.vertex_cycles() {
            for h in c {
                seen[h] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn parse_normalizes_labels(p in pattern(3), perm in prop::collection::vec(any::<usize>(), 20), flips in prop::collection::vec(any::<bool>(), 20)) {
        let labels = relabel(&p, &perm, &flips);
        let q = GluingPattern::from_labels(&labels).unwrap();
        prop_assert_eq!(&q, &p);
        let firsts: Vec<i32> = q.word().iter().copied().filter(|&l| l > 0).collect();
        prop_assert_eq!(firsts, (1..=q.edge_count() as i32).collect::<Vec<_>>());
        prop_assert_eq!(GluingPattern::parse(&q.serialize()).unwrap(), q);
    }

    #[test]
    fn canonical_form_is_rotation_invariant(p in pattern(3), k in any::<usize>()) {
        let c = canonicalize(&p);
        prop_assert_eq!(&canonicalize(&p.rotated(k % p.len())), &c);
        prop_assert_eq!(canonicalize(&c.pattern()), c.clone());
        prop_assert_eq!(c.orbit_size * c.aut_size, p.len());
    }

    #[test]
    fn order_index_walks_the_face(p in pattern(3), root in any::<usize>(), h in any::<usize>()) {
        let (root, h) = (root % p.len(), h % p.len());
        let k = p.order_index(root, h);
        prop_assert!(k < p.len());
        prop_assert_eq!((0..k).fold(root, |x, _| p.gamma(x)), h);
        prop_assert_eq!(p.gamma_inv(p.gamma(h)), h);
        prop_assert_eq!(p.mu(h), p.alpha(p.gamma(h)));
    }

    #[test]
    fn trisections_and_type3_are_root_free(p in pattern(3), root in any::<usize>()) {
        let root = root % p.len();
        let census = vertex_census(&p, root);
        prop_assert_eq!(total_trisections(&census), 2 * p.genus());
        let has_type3 = census.iter().any(|v| v.vtype == VertexType::Type3);
        prop_assert_eq!(has_type3, find_simplification(&p).is_some());
    }

    #[test]
    fn surgery_laws((p, i, j) in pattern_and_pair(3)) {
        let out = surgery_detailed(&p, i, j).unwrap();
        let q = &out.pattern;
        prop_assert_eq!(q.len(), p.len());
        prop_assert_eq!(q.genus(), p.genus());
        prop_assert!(GluingPattern::from_alpha(q.alpha_table().to_vec()).is_ok());
        prop_assert_eq!(is_intertwined(&p, j, i).unwrap(), true);
        let back = surgery(q, out.new_x, out.new_y).unwrap();
        prop_assert_eq!(canonical_word(&back), canonical_word(&p));
        let barred = surgery(&p, p.alpha(i), p.alpha(j)).unwrap();
        prop_assert_eq!(canonical_word(&barred), canonical_word(q));
        prop_assert!(one_simple_count(&p).abs_diff(one_simple_count(q)) <= 2);
    }

    #[test]
    fn cascades_end_non_simplifiable(p in pattern(3)) {
        let (q, trace) = simplify_cascade(&p);
        prop_assert!(is_non_simplifiable(&q));
        prop_assert_eq!(q.genus(), p.genus());
        prop_assert_eq!(trace.steps.is_empty(), is_non_simplifiable(&p));
        prop_assert!(one_simple_count(&q) >= one_simple_count(&p) + trace.steps.len());
        for root in [0, q.len() / 2, q.len() - 1] {
            let counts = type_counts(&vertex_census(&q, root));
            prop_assert_eq!((counts.type1, counts.type2, counts.type3), (q.genus() - 1, q.genus(), 0));
        }
    }

    #[test]
    fn sums_add_genus(a in pattern(2), b in pattern(2), i in any::<usize>(), j in any::<usize>()) {
        let (i, j) = (i % a.len(), j % b.len());
        let out = connected_sum_detailed(&a, i, &b, j).unwrap();
        let s = &out.pattern;
        prop_assert_eq!(s.genus(), a.genus() + b.genus());
        prop_assert_eq!(s.vertex_count(), a.vertex_count() + b.vertex_count() + 1);
        prop_assert!(GluingPattern::from_alpha(s.alpha_table().to_vec()).is_ok());
    }

    #[test]
    fn split_undoes_a_torus_sum(a in pattern(2), x in any::<usize>()) {
        let x = x % a.len();
        let out = connected_sum_detailed(&a, x, &GluingPattern::torus(), 0).unwrap();
        let blocks = find_torus_blocks(&out.pattern);
        prop_assert!(!blocks.is_empty());
        let recovered = blocks.iter().any(|&q| {
            let sp = split_torus_summand(&out.pattern, q).unwrap();
            canonical_word(&sp.pattern) == canonical_word(&a)
        });
        prop_assert!(recovered);
    }
}

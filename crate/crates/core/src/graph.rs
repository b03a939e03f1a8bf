//! Surgery graphs: `K_g` on the classes of one genus, and the cross-genus
//! graph joining each class to its sums with the torus.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::atlas::enumerate_classes;
use crate::canonical::{canonicalize, CanonicalClass};
use crate::error::{Error, Result};
use crate::moves::{intertwined_pairs, sum_with_torus, surgery};
use crate::pattern::GluingPattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Surgery,
    Sum,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub kind: EdgeKind,
}

/// Simple undirected graph on canonical classes. Nodes are sorted by
/// `(genus, word)` and edges by `(source, target)` with `source < target`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryGraph {
    pub nodes: Vec<CanonicalClass>,
    pub edges: Vec<Edge>,
}

/// Classes reachable from `p` by one surgery, excluding the class of `p`.
pub fn neighbors(p: &GluingPattern) -> BTreeSet<CanonicalClass> {
    let own = canonicalize(p).word;
    intertwined_pairs(p)
        .into_iter()
        .map(|(i, j)| canonicalize(&surgery(p, i, j).expect("pairs are intertwined")))
        .filter(|c| c.word != own)
        .collect()
}

fn assemble(nodes: Vec<CanonicalClass>, raw: impl IntoIterator<Item = (Vec<i32>, Vec<i32>, EdgeKind)>) -> SurgeryGraph {
    let index: HashMap<&[i32], usize> = nodes.iter().enumerate().map(|(k, c)| (c.word.as_slice(), k)).collect();
    let edges: BTreeSet<Edge> = raw
        .into_iter()
        .filter_map(|(a, b, kind)| {
            let (i, j) = (index[a.as_slice()], index[b.as_slice()]);
            (i != j).then(|| Edge {
                source: i.min(j),
                target: i.max(j),
                kind,
            })
        })
        .collect();
    SurgeryGraph {
        nodes,
        edges: edges.into_iter().collect(),
    }
}

fn surgery_edges(classes: &[CanonicalClass]) -> Vec<(Vec<i32>, Vec<i32>, EdgeKind)> {
    classes
        .par_iter()
        .flat_map_iter(|c| {
            neighbors(&c.pattern())
                .into_iter()
                .map(|d| (c.word.clone(), d.word, EdgeKind::Surgery))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `K_g`.
pub fn build_surgery_graph(g: usize) -> Result<SurgeryGraph> {
    let nodes: Vec<CanonicalClass> = enumerate_classes(g)?.into_iter().map(|r| r.class).collect();
    let raw = surgery_edges(&nodes);
    Ok(assemble(nodes, raw))
}

/// Union of `K_1 .. K_g`, plus an edge from every class to each sum with the
/// torus at one of its sides.
pub fn build_hat_graph(g: usize) -> Result<SurgeryGraph> {
    if g == 0 {
        return Err(Error::GenusTooSmall(0));
    }
    let mut nodes = Vec::new();
    for i in 1..=g {
        nodes.extend(enumerate_classes(i)?.into_iter().map(|r| r.class));
    }
    let mut raw = surgery_edges(&nodes);
    let sums: Vec<_> = nodes
        .par_iter()
        .filter(|c| c.genus < g)
        .flat_map_iter(|c| {
            let p = c.pattern();
            (0..p.len())
                .map(|x| {
                    let s = sum_with_torus(&p, x).expect("sides are in range").pattern;
                    (c.word.clone(), canonicalize(&s).word, EdgeKind::Sum)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    raw.extend(sums);
    Ok(assemble(nodes, raw))
}

impl SurgeryGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, word: &[i32]) -> Option<usize> {
        self.nodes.iter().position(|c| c.word == word)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adj[e.source].push(e.target);
            adj[e.target].push(e.source);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Nodes of one genus.
    pub fn level(&self, genus: usize) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&k| self.nodes[k].genus == genus).collect()
    }

    /// Distances from `src` over the given adjacency lists.
    fn bfs_with(&self, adj: &[Vec<usize>], src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.nodes.len()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        self.bfs_with(&self.adjacency(), src)
    }

    pub fn is_connected(&self) -> bool {
        self.nodes.is_empty() || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Surgery-edge adjacency restricted to one genus, with local indices.
    fn level_adjacency(&self, genus: usize) -> (Vec<usize>, Vec<Vec<usize>>) {
        let members = self.level(genus);
        let local: HashMap<usize, usize> = members.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut adj = vec![Vec::new(); members.len()];
        for e in &self.edges {
            if let (Some(&a), Some(&b)) = (local.get(&e.source), local.get(&e.target)) {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        (members, adj)
    }

    /// All-pairs distances inside one genus level (row per level node, in
    /// `level()` order).
    pub fn level_distances(&self, genus: usize) -> Result<Vec<Vec<usize>>> {
        let (members, adj) = self.level_adjacency(genus);
        let sub = SurgeryGraph {
            nodes: members.iter().map(|&k| self.nodes[k].clone()).collect(),
            edges: Vec::new(),
        };
        (0..members.len())
            .into_par_iter()
            .map(|s| {
                sub.bfs_with(&adj, s)
                    .into_iter()
                    .collect::<Option<Vec<usize>>>()
                    .ok_or(Error::Disconnected(genus))
            })
            .collect()
    }

    /// Exact diameter of one genus level.
    pub fn diameter(&self, genus: usize) -> Result<usize> {
        let rows = self.level_distances(genus)?;
        if rows.is_empty() {
            return Err(Error::Disconnected(genus));
        }
        Ok(rows.iter().flatten().copied().max().unwrap_or(0))
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph surgery {\n");
        for (k, c) in self.nodes.iter().enumerate() {
            writeln!(out, "  n{k} [label=\"{}\", genus={}];", c.word_string(), c.genus).unwrap();
        }
        for e in &self.edges {
            let kind = match e.kind {
                EdgeKind::Surgery => "surgery",
                EdgeKind::Sum => "sum",
            };
            writeln!(out, "  n{} -- n{} [kind={kind}];", e.source, e.target).unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graphs serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let g: SurgeryGraph = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        let n = g.nodes.len();
        if g.edges.iter().any(|e| e.source >= e.target || e.target >= n) {
            return Err(Error::Malformed("edge endpoints out of order or range".into()));
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_has_no_neighbors() {
        assert!(neighbors(&GluingPattern::torus()).is_empty());
        let k1 = build_surgery_graph(1).unwrap();
        assert_eq!((k1.node_count(), k1.edge_count()), (1, 0));
        assert_eq!(k1.diameter(1).unwrap(), 0);
        assert_eq!(k1.to_dot().matches("label=").count(), 1);
    }

    #[test]
    fn k2_shape() {
        let k2 = build_surgery_graph(2).unwrap();
        assert_eq!(k2.node_count(), 6);
        assert!(k2.is_connected());
        assert!(k2.edges.iter().all(|e| e.source < e.target && e.kind == EdgeKind::Surgery));
        for c in &k2.nodes {
            assert!(!neighbors(&c.pattern()).is_empty());
        }
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let k2 = build_hat_graph(2).unwrap();
        let text = k2.to_json();
        let back = SurgeryGraph::from_json(&text).unwrap();
        assert_eq!(back, k2);
        assert_eq!(back.to_json(), text);
        assert_eq!(build_hat_graph(2).unwrap().to_dot(), k2.to_dot());
        assert!(SurgeryGraph::from_json("{\"nodes\":[],\"edges\":[{\"source\":1,\"target\":0,\"kind\":\"sum\"}]}").is_err());
    }
}

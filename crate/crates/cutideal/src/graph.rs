//! Finite simple graphs with a fixed edge labeling.
//!
//! Vertices are 1..n and the position of an edge in the list is its 1-based
//! label; that label is the contract tying edge k to the variable pair
//! (s_k, t_k). Clique sums concatenate edge lists, so the left factor owns
//! labels 1..m1.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A labeled finite simple graph with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: u32,
    edges: Vec<(u32, u32)>,
}

#[derive(Serialize, Deserialize, Clone)]
struct GraphJson {
    vertices: u32,
    edges: Vec<(u32, u32)>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(raw: GraphJson) -> Result<Graph> {
        Graph::new(raw.vertices, raw.edges)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> GraphJson {
        GraphJson {
            vertices: g.n,
            edges: g.edges,
        }
    }
}

/// Identification data for a clique sum: no shared vertices (disjoint
/// union) or exactly one shared vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexPairing(Option<(u32, u32)>);

impl VertexPairing {
    /// Empty pairing: the sum is the disjoint union.
    pub fn disjoint() -> Self {
        VertexPairing(None)
    }

    /// Identifies vertex `v1` of the left graph with `v2` of the right.
    pub fn shared(v1: u32, v2: u32) -> Self {
        VertexPairing(Some((v1, v2)))
    }

    pub fn pair(&self) -> Option<(u32, u32)> {
        self.0
    }
}

impl Graph {
    /// Validates and builds a graph: n >= 2, at least one edge, no loops,
    /// no duplicate edges, endpoints in 1..=n. Edge orientation as written
    /// is preserved so serialization round-trips exactly.
    pub fn new(n: u32, edges: Vec<(u32, u32)>) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidGraph(format!(
                "need at least 2 vertices, got {n}"
            )));
        }
        if edges.is_empty() {
            return Err(Error::InvalidGraph("need at least one edge".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u < 1 || u > n || v < 1 || v > n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) leaves the vertex range 1..={n}"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
        }
        Ok(Graph { n, edges })
    }

    /// The cycle C_n with edges e_i = {i, i+1} for i < n and e_n = {1, n}.
    pub fn cycle(n: u32) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidFamily(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut edges: Vec<(u32, u32)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((1, n));
        Graph::new(n, edges)
    }

    /// The path P_n with edges {i, i+1} in label order.
    pub fn path(n: u32) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidFamily(format!(
                "a path needs at least 2 vertices, got {n}"
            )));
        }
        Graph::new(n, (1..n).map(|i| (i, i + 1)).collect())
    }

    /// The complete graph K_n, edges labeled lexicographically.
    pub fn complete(n: u32) -> Result<Graph> {
        if n < 2 {
            return Err(Error::InvalidFamily(format!(
                "a complete graph needs at least 2 vertices, got {n}"
            )));
        }
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                edges.push((u, v));
            }
        }
        Graph::new(n, edges)
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Glues `other` onto `self` along at most one shared vertex. The
    /// resulting edge list is self's edges followed by other's, so edge
    /// labels of the left factor are unchanged and the right factor's
    /// label k becomes m1 + k.
    pub fn clique_sum(&self, other: &Graph, pairing: &VertexPairing) -> Result<Graph> {
        let map_right = |w: u32| -> u32 {
            match pairing.pair() {
                Some((a, b)) => {
                    if w == b {
                        a
                    } else if w > b {
                        self.n + w - 1
                    } else {
                        self.n + w
                    }
                }
                None => self.n + w,
            }
        };
        if let Some((a, b)) = pairing.pair() {
            if a < 1 || a > self.n {
                return Err(Error::InvalidPairing(format!(
                    "vertex {a} is not in the left graph"
                )));
            }
            if b < 1 || b > other.n {
                return Err(Error::InvalidPairing(format!(
                    "vertex {b} is not in the right graph"
                )));
            }
        }
        let n = self.n + other.n - if pairing.pair().is_some() { 1 } else { 0 };
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (map_right(u), map_right(v))));
        // a duplicate edge cannot arise from a <=1-vertex overlap of simple
        // graphs; Graph::new re-checks and reports it as a pairing defect
        Graph::new(n, edges).map_err(|e| match e {
            Error::InvalidGraph(msg) if msg.starts_with("duplicate") => {
                Error::InvalidPairing(msg)
            }
            other => other,
        })
    }

    /// Connected components as a partition of 1..=n, each part sorted and
    /// parts ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.n as usize;
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in &self.edges {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut seen = vec![false; n + 1];
        let mut parts = Vec::new();
        for start in 1..=self.n {
            if seen[start as usize] {
                continue;
            }
            let mut part = Vec::new();
            let mut stack = vec![start];
            seen[start as usize] = true;
            while let Some(v) = stack.pop() {
                part.push(v);
                for &w in &adj[v as usize] {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        parts
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Whether this graph carries exactly the standard cycle labeling:
    /// e_i = {i, i+1} for i < n and e_n = {1, n}.
    pub fn is_standard_cycle(&self) -> bool {
        match Graph::cycle(self.n) {
            Ok(c) => {
                self.edges.len() == c.edges.len()
                    && self
                        .edges
                        .iter()
                        .zip(c.edges.iter())
                        .all(|(&(a, b), &(c, d))| (a.min(b), a.max(b)) == (c, d))
            }
            Err(_) => false,
        }
    }

    /// Uniformly samples a simple graph with 2..=max_n vertices and at
    /// least one edge.
    pub fn random<R: Rng>(max_n: u32, rng: &mut R) -> Graph {
        let n = rng.gen_range(2..=max_n);
        let mut pairs = Vec::new();
        for u in 1..=n {
            for v in (u + 1)..=n {
                pairs.push((u, v));
            }
        }
        let m = rng.gen_range(1..=pairs.len());
        for i in 0..m {
            let j = rng.gen_range(i..pairs.len());
            pairs.swap(i, j);
        }
        pairs.truncate(m);
        Graph::new(n, pairs).expect("sampled edge set is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_has_paper_labeling() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!(c3.edges(), &[(1, 2), (2, 3), (1, 3)]);
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.vertex_count(), 4);
        assert_eq!(c4.edge_count(), 4);
        let mut deg = [0u32; 5];
        for &(u, v) in c4.edges() {
            deg[u as usize] += 1;
            deg[v as usize] += 1;
        }
        assert!(deg[1..].iter().all(|&d| d == 2));
    }

    #[test]
    fn too_small_families_are_rejected() {
        assert!(matches!(Graph::cycle(2), Err(Error::InvalidFamily(_))));
        assert!(matches!(Graph::path(1), Err(Error::InvalidFamily(_))));
        assert!(matches!(Graph::complete(1), Err(Error::InvalidFamily(_))));
    }

    #[test]
    fn path_and_complete_labelings() {
        assert_eq!(Graph::path(3).unwrap().edges(), &[(1, 2), (2, 3)]);
        assert_eq!(Graph::complete(2).unwrap().edges(), &[(1, 2)]);
        // K3 and C3 have the same edge set, labeled differently
        let k3: std::collections::BTreeSet<_> = Graph::complete(3)
            .unwrap()
            .edges()
            .iter()
            .copied()
            .collect();
        let c3: std::collections::BTreeSet<_> =
            Graph::cycle(3).unwrap().edges().iter().copied().collect();
        assert_eq!(k3, c3);
    }

    #[test]
    fn graph_validation() {
        assert!(Graph::new(1, vec![]).is_err());
        assert!(Graph::new(3, vec![(1, 1)]).is_err());
        assert!(Graph::new(3, vec![(1, 2), (2, 1)]).is_err());
        assert!(Graph::new(3, vec![(1, 4)]).is_err());
    }

    #[test]
    fn clique_sum_shapes() {
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let glued = k2.clique_sum(&k3, &VertexPairing::shared(1, 1)).unwrap();
        assert_eq!(glued.vertex_count(), 4);
        assert_eq!(glued.edge_count(), 4);
        assert_eq!(glued.component_count(), 1);

        let disjoint = k2.clique_sum(&k2, &VertexPairing::disjoint()).unwrap();
        assert_eq!(disjoint.vertex_count(), 4);
        assert_eq!(disjoint.edge_count(), 2);
        assert_eq!(disjoint.component_count(), 2);
    }

    #[test]
    fn clique_sum_edge_labels_are_stable() {
        let p3 = Graph::path(3).unwrap();
        let k2 = Graph::complete(2).unwrap();
        let g = p3.clique_sum(&k2, &VertexPairing::shared(3, 1)).unwrap();
        assert_eq!(g.edges()[..2], p3.edges()[..]);
        assert_eq!(g.edges()[2], (3, 4));
    }

    #[test]
    fn clique_sum_component_counts_add() {
        let g = Graph::new(4, vec![(1, 2), (3, 4)]).unwrap();
        let h = Graph::cycle(3).unwrap();
        let s = g.clique_sum(&h, &VertexPairing::disjoint()).unwrap();
        assert_eq!(s.component_count(), g.component_count() + h.component_count());
        let t = g.clique_sum(&h, &VertexPairing::shared(1, 2)).unwrap();
        assert_eq!(
            t.component_count(),
            g.component_count() + h.component_count() - 1
        );
    }

    #[test]
    fn invalid_pairing_is_rejected() {
        let k2 = Graph::complete(2).unwrap();
        assert!(matches!(
            k2.clique_sum(&k2, &VertexPairing::shared(5, 1)),
            Err(Error::InvalidPairing(_))
        ));
    }

    #[test]
    fn components_examples() {
        assert_eq!(Graph::cycle(5).unwrap().component_count(), 1);
        assert_eq!(Graph::path(4).unwrap().component_count(), 1);
        let k2k3 = Graph::complete(2)
            .unwrap()
            .clique_sum(&Graph::complete(3).unwrap(), &VertexPairing::disjoint())
            .unwrap();
        assert_eq!(
            k2k3.components(),
            vec![vec![1, 2], vec![3, 4, 5]]
        );
    }

    #[test]
    fn standard_cycle_detection() {
        assert!(Graph::cycle(6).unwrap().is_standard_cycle());
        assert!(!Graph::path(3).unwrap().is_standard_cycle());
        // same cycle, rotated labels
        let rotated = Graph::new(3, vec![(2, 3), (1, 3), (1, 2)]).unwrap();
        assert!(!rotated.is_standard_cycle());
        // reversed orientation of an edge is still the standard labeling
        let reoriented = Graph::new(3, vec![(2, 1), (2, 3), (3, 1)]).unwrap();
        assert!(reoriented.is_standard_cycle());
    }

    #[test]
    fn json_round_trip_preserves_edge_text() {
        let g = Graph::new(4, vec![(2, 1), (3, 4)]).unwrap();
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"vertices":4,"edges":[[2,1],[3,4]]}"#);
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}

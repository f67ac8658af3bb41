use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::exactnum::QuaternionQ5;

use super::PolytopeError;

/// Vertex label of a constructed graph; labels make the provenance of each
/// vertex queryable (a quaternion, an edge of a parent graph, a dart, a
/// group element, a coset).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum VertexLabel {
    Plain(u32),
    Quat(QuaternionQ5),
    /// Edge {u, v} of a parent graph, stored with u < v.
    Edge(u32, u32),
    /// Ordered adjacent pair (source, target) of a parent graph.
    Dart(u32, u32),
    /// Group element index.
    Group(u32),
    /// Coset, labelled by its minimal element index.
    Coset(u32),
}

/// Undirected simple graph with labelled vertices, sorted adjacency lists
/// and a sorted edge list.
#[derive(Clone)]
pub struct Graph {
    name: String,
    labels: Vec<VertexLabel>,
    adj: Vec<Vec<u32>>,
    edges: Vec<(u32, u32)>,
}

impl Graph {
    pub fn from_edges(
        name: impl Into<String>,
        labels: Vec<VertexLabel>,
        edge_list: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Graph, PolytopeError> {
        let n = labels.len() as u32;
        let mut set = BTreeSet::new();
        for (a, b) in edge_list {
            if a == b {
                return Err(PolytopeError::Construction(format!("self-loop at {a}")));
            }
            if a >= n || b >= n {
                return Err(PolytopeError::Construction(format!(
                    "edge ({a},{b}) out of range for {n} vertices"
                )));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(PolytopeError::Construction(format!(
                    "duplicate edge ({},{})",
                    e.0, e.1
                )));
            }
        }
        let edges: Vec<(u32, u32)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); labels.len()];
        for &(a, b) in &edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            name: name.into(),
            labels,
            adj,
            edges,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Graph {
        self.name = name.into();
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn label(&self, v: u32) -> &VertexLabel {
        &self.labels[v as usize]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Some(k) when every vertex has degree k.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn degree_histogram(&self) -> Vec<(usize, usize)> {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for l in &self.adj {
            *counts.entry(l.len()).or_default() += 1;
        }
        let mut hist: Vec<(usize, usize)> = counts.into_iter().collect();
        hist.sort_unstable();
        hist
    }

    pub fn is_connected(&self) -> bool {
        if self.labels.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.labels.len()];
        let mut queue = VecDeque::from([0u32]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.labels.len()
    }

    /// Length of a shortest cycle, or None for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.labels.len();
        let mut best: Option<usize> = None;
        for start in 0..n as u32 {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![u32::MAX; n];
            dist[start as usize] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if dist[w as usize] == usize::MAX {
                        dist[w as usize] = dist[v as usize] + 1;
                        parent[w as usize] = v;
                        queue.push_back(w);
                    } else if parent[v as usize] != w {
                        // non-tree edge closes a cycle through `start`
                        let len = dist[v as usize] + dist[w as usize] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Map from vertex label to vertex index.
    pub fn label_index(&self) -> HashMap<VertexLabel, u32> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i as u32))
            .collect()
    }

    /// Induced subgraph on a vertex subset (labels become Plain originals).
    pub fn induced(&self, verts: &[u32]) -> Graph {
        let pos: HashMap<u32, u32> = verts
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i as u32))
            .collect();
        let labels: Vec<VertexLabel> = verts.iter().map(|&v| VertexLabel::Plain(v)).collect();
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if let (Some(&x), Some(&y)) = (pos.get(&a), pos.get(&b)) {
                edges.push((x, y));
            }
        }
        Graph::from_edges(format!("{}-induced", self.name), labels, edges)
            .expect("induced subgraph of a simple graph is simple")
    }

    /// Exact isomorphism test by backtracking; intended for graphs of a
    /// dozen or so vertices (vertex-figure checks).
    pub fn isomorphic_small(&self, other: &Graph) -> bool {
        let n = self.vertex_count();
        if n != other.vertex_count() || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut d1 = self.degree_histogram();
        let mut d2 = other.degree_histogram();
        d1.sort_unstable();
        d2.sort_unstable();
        if d1 != d2 {
            return false;
        }
        let mut map = vec![u32::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, 0, &mut map, &mut used)
    }

    fn extend_iso(&self, other: &Graph, v: usize, map: &mut [u32], used: &mut [bool]) -> bool {
        let n = self.vertex_count();
        if v == n {
            return true;
        }
        for cand in 0..n as u32 {
            if used[cand as usize] || other.degree(cand) != self.degree(v as u32) {
                continue;
            }
            let ok = (0..v).all(|u| {
                self.adjacent(u as u32, v as u32) == other.adjacent(map[u], cand)
            });
            if ok {
                map[v] = cand;
                used[cand as usize] = true;
                if self.extend_iso(other, v + 1, map, used) {
                    return true;
                }
                used[cand as usize] = false;
                map[v] = u32::MAX;
            }
        }
        false
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph({}, {} vertices, {} edges)",
            self.name,
            self.vertex_count(),
            self.edge_count()
        )
    }
}

/// The pentagonal prism: two 5-cycles joined by a perfect matching.
/// This is the vertex figure of the rectified 600-cell.
pub fn pentagonal_prism() -> Graph {
    let labels = (0..10).map(VertexLabel::Plain).collect();
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 1) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges("pentagonal-prism", labels, edges).unwrap()
}

/// Complete graph on n plainly-labelled vertices.
pub fn complete_graph(n: u32) -> Graph {
    let labels = (0..n).map(VertexLabel::Plain).collect();
    let edges = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b)));
    Graph::from_edges(format!("K{n}"), labels, edges).unwrap()
}

/// Cycle graph on n plainly-labelled vertices.
pub fn cycle_graph(n: u32) -> Graph {
    let labels = (0..n).map(VertexLabel::Plain).collect();
    let edges = (0..n).map(|a| (a, (a + 1) % n));
    Graph::from_edges(format!("C{n}"), labels, edges).unwrap()
}

/// The Petersen graph, a spectral test fixture with known eigenvalues.
pub fn petersen_graph() -> Graph {
    let labels = (0..10).map(VertexLabel::Plain).collect();
    let mut edges = Vec::new();
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges("petersen", labels, edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_invariants() {
        let k4 = complete_graph(4);
        assert_eq!(k4.vertex_count(), 4);
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.regular_degree(), Some(3));
        assert!(k4.is_connected());
        assert_eq!(k4.girth(), Some(3));
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        let labels = vec![VertexLabel::Plain(0), VertexLabel::Plain(1)];
        assert!(Graph::from_edges("bad", labels.clone(), vec![(0, 0)]).is_err());
        assert!(Graph::from_edges("bad", labels, vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn girth_of_cycles_and_prism() {
        assert_eq!(cycle_graph(5).girth(), Some(5));
        assert_eq!(cycle_graph(7).girth(), Some(7));
        assert_eq!(pentagonal_prism().girth(), Some(4));
        assert_eq!(petersen_graph().girth(), Some(5));
    }

    #[test]
    fn prism_and_petersen_are_not_isomorphic() {
        // both 3-regular on 10 vertices; girth separates them
        let prism = pentagonal_prism();
        let pet = petersen_graph();
        assert!(!prism.isomorphic_small(&pet));
        assert!(prism.isomorphic_small(&prism.clone()));
        // a relabelled prism is still a prism
        let relabel = Graph::from_edges(
            "prism-relabelled",
            (0..10).map(VertexLabel::Plain).collect(),
            prism
                .edges()
                .iter()
                .map(|&(a, b)| ((a * 3) % 10, (b * 3) % 10)),
        )
        .unwrap();
        assert!(prism.isomorphic_small(&relabel));
    }
}

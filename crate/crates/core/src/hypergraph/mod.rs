//! Undirected hypergraphs and simple graphs over vertex indices.
//!
//! A [`Hypergraph`] is always held in canonical form: each edge sorted
//! ascending, the family sorted lexicographically with duplicates removed.
//! Two hypergraphs built from the same edges in any order compare equal.

mod cliques;
mod hamilton;

pub use cliques::maximal_cliques;
pub use hamilton::{
    find_hamiltonian_cycle_loose, find_hamiltonian_cycle_strict, HamiltonSearch, LooseWalk,
    SearchBudget, StrictWalk, DEFAULT_BUDGET,
};

use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HypergraphError {
    #[error("vertex {vertex} out of range for {count} vertices")]
    NoSuchVertex { vertex: usize, count: usize },
    #[error("graph has {graph} vertices but hypergraph has {hypergraph}")]
    VertexCountMismatch { graph: usize, hypergraph: usize },
}

pub type Result<T> = std::result::Result<T, HypergraphError>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    labels: Vec<String>,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(labels: Vec<String>, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let count = labels.len();
        let mut family = Vec::new();
        for mut edge in edges {
            if let Some(&vertex) = edge.iter().find(|&&v| v >= count) {
                return Err(HypergraphError::NoSuchVertex { vertex, count });
            }
            edge.sort_unstable();
            edge.dedup();
            family.push(edge);
        }
        family.sort();
        family.dedup();
        Ok(Hypergraph { labels, edges: family })
    }

    /// Vertices labelled `0..n`.
    pub fn unlabeled(n: usize, edges: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        Self::new((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(HypergraphError::NoSuchVertex { vertex: v, count: self.vertex_count() })
        }
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        self.edges.binary_search_by(|e| e.as_slice().cmp(edge)).is_ok()
    }

    /// Number of edges incident with `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }

    /// Degrees indexed by vertex.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.vertex_count()];
        for e in &self.edges {
            for &v in e {
                degrees[v] += 1;
            }
        }
        degrees
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree_sequence();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// The common edge size, if every edge has the same size. An empty
    /// family reports `None`.
    pub fn uniform_size(&self) -> Option<usize> {
        let k = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// Edge sizes, sorted ascending.
    pub fn edge_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.edges.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        let mut n = self.closed_neighborhood(v)?;
        n.retain(|&u| u != v);
        Ok(n)
    }

    /// Union of the edges containing `v`, together with `v` itself.
    pub fn closed_neighborhood(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut set = FixedBitSet::with_capacity(self.vertex_count());
        set.insert(v);
        for e in self.edges.iter().filter(|e| e.binary_search(&v).is_ok()) {
            set.extend(e.iter().copied());
        }
        Ok(set.ones().collect())
    }

    /// True when no edge is a proper subset of another.
    pub fn is_antichain(&self) -> bool {
        self.edges.iter().enumerate().all(|(i, a)| {
            self.edges
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !is_sorted_subset(a, b))
        })
    }

    /// Graph joining two vertices iff they share an edge.
    pub fn two_section(&self) -> Graph {
        let mut g = Graph::new(self.labels.clone());
        for e in &self.edges {
            for (i, &a) in e.iter().enumerate() {
                for &b in &e[i + 1..] {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    /// Components of the 2-section; vertices in no edge are singletons.
    pub fn connected_components(&self) -> ComponentPartition {
        let mut parent: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            if let Some((&first, rest)) = e.split_first() {
                for &v in rest {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, v));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut ids = vec![usize::MAX; self.vertex_count()];
        let mut component_of = Vec::with_capacity(self.vertex_count());
        let mut count = 0;
        for v in 0..self.vertex_count() {
            let root = find(&mut parent, v);
            if ids[root] == usize::MAX {
                ids[root] = count;
                count += 1;
            }
            component_of.push(ids[root]);
        }
        ComponentPartition { component_of, count }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count <= 1
    }

    /// A copy restricted to the edges satisfying `keep`.
    pub fn filter_edges(&self, keep: impl Fn(&[usize]) -> bool) -> Hypergraph {
        Hypergraph {
            labels: self.labels.clone(),
            edges: self.edges.iter().filter(|e| keep(e)).cloned().collect(),
        }
    }

    /// Edges rendered with vertex labels.
    pub fn labeled_edges(&self) -> Vec<Vec<&str>> {
        self.edges
            .iter()
            .map(|e| e.iter().map(|&v| self.labels[v].as_str()).collect())
            .collect()
    }
}

pub(crate) fn is_sorted_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() <= b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Component id per vertex, numbered in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub component_of: Vec<usize>,
    pub count: usize,
}

impl ComponentPartition {
    /// The components as sorted vertex lists, in id order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.count];
        for (v, &c) in self.component_of.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }
}

/// Simple undirected graph stored as adjacency bitsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<FixedBitSet>,
}

impl Graph {
    pub fn new(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph { labels, adjacency: vec![FixedBitSet::with_capacity(n); n] }
    }

    pub fn unlabeled(n: usize) -> Self {
        Self::new((0..n).map(|i| i.to_string()).collect())
    }

    /// Builds the graph `u ~ v ⟺ u ≠ v ∧ related(u, v)`. The relation is
    /// symmetrized.
    pub fn from_relation(labels: Vec<String>, related: impl Fn(usize, usize) -> bool) -> Self {
        let mut g = Graph::new(labels);
        let n = g.vertex_count();
        for u in 0..n {
            for v in u + 1..n {
                if related(u, v) || related(v, u) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adjacency[u].insert(v);
            self.adjacency[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &a)| vertices[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }
}

/// Whether the graph neighborhood of `v` equals its open neighborhood in `h`.
pub fn neighborhood_coincidence(g: &Graph, h: &Hypergraph, v: usize) -> Result<bool> {
    if g.vertex_count() != h.vertex_count() {
        return Err(HypergraphError::VertexCountMismatch {
            graph: g.vertex_count(),
            hypergraph: h.vertex_count(),
        });
    }
    let hyper = h.open_neighborhood(v)?;
    Ok(g.neighbors(v).ones().eq(hyper))
}

//! Simple undirected graphs, graph-family descriptors and pattern blocks.
//!
//! Vertex labels are plain non-negative integers. Complete-graph hosts use
//! the dense labels `0..v`; constructions that need extra vertices take the
//! next free labels.

mod block;
mod copies;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use block::{Block, BlockError, PatternKind};
pub use copies::{contains_block, pattern_copies};
pub(crate) use copies::for_each_subset;

pub type Vertex = u32;

/// An unordered pair of distinct vertices, stored with the smaller label first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Panics on a loop; every caller constructs edges from distinct labels.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        assert_ne!(a, b, "loop edge at vertex {a}");
        if a < b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn try_new(a: Vertex, b: Vertex) -> Option<Edge> {
        (a != b).then(|| Edge::new(a, b))
    }

    pub fn low(self) -> Vertex {
        self.0
    }

    pub fn high(self) -> Vertex {
        self.1
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn other(self, v: Vertex) -> Option<Vertex> {
        if self.0 == v {
            Some(self.1)
        } else if self.1 == v {
            Some(self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("edge {0} appears more than once")]
    RepeatedEdge(Edge),
    #[error("vertex {0} belongs to more than one part")]
    OverlappingParts(Vertex),
    #[error("join operands share vertex {0}")]
    JoinOverlap(Vertex),
    #[error("edge {0} is produced by two members of the union")]
    UnionCollision(Edge),
    #[error("edge {0} has an endpoint outside the vertex set")]
    DanglingEdge(Edge),
}

/// A simple undirected graph on an explicit vertex set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: BTreeMap<Vertex, BTreeSet<Vertex>>,
    edge_count: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn complete_on<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        let vertices: Vec<Vertex> = vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        let mut g = Graph::new();
        for &v in &vertices {
            g.add_vertex(v);
        }
        for (i, &a) in vertices.iter().enumerate() {
            for &b in &vertices[i + 1..] {
                g.insert_edge_unchecked(a, b);
            }
        }
        g
    }

    /// Builds a graph from an edge list; endpoints are added as vertices.
    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(edges: I) -> Result<Self, GraphError> {
        let mut g = Graph::new();
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        self.adjacency.entry(v).or_default();
    }

    pub fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        if self.has_edge(Edge::new(a, b)) {
            return Err(GraphError::RepeatedEdge(Edge::new(a, b)));
        }
        self.insert_edge_unchecked(a, b);
        Ok(())
    }

    fn insert_edge_unchecked(&mut self, a: Vertex, b: Vertex) {
        self.adjacency.entry(a).or_default().insert(b);
        self.adjacency.entry(b).or_default().insert(a);
        self.edge_count += 1;
    }

    pub fn remove_edge(&mut self, e: Edge) -> bool {
        let removed = self
            .adjacency
            .get_mut(&e.low())
            .map(|n| n.remove(&e.high()))
            .unwrap_or(false);
        if removed {
            if let Some(n) = self.adjacency.get_mut(&e.high()) {
                n.remove(&e.low());
            }
            self.edge_count -= 1;
        }
        removed
    }

    /// Removes a vertex and all edges through it.
    pub fn remove_vertex(&mut self, v: Vertex) {
        if let Some(neighbors) = self.adjacency.remove(&v) {
            for w in &neighbors {
                if let Some(n) = self.adjacency.get_mut(w) {
                    n.remove(&v);
                }
            }
            self.edge_count -= neighbors.len();
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adjacency.contains_key(&v)
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.adjacency
            .get(&e.low())
            .is_some_and(|n| n.contains(&e.high()))
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency.keys().copied()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .flat_map(|(&a, n)| n.range(a + 1..).map(move |&b| Edge(a, b)))
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adjacency.get(&v).into_iter().flat_map(|n| n.iter().copied())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency.get(&v).map_or(0, BTreeSet::len)
    }

    /// Vertex sets of the connected components, isolated vertices included,
    /// ordered by smallest label.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if seen.insert(w) {
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The subgraph induced by `keep`.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        let mut g = Graph::new();
        for &v in keep {
            if self.has_vertex(v) {
                g.add_vertex(v);
            }
        }
        for e in self.edges() {
            if keep.contains(&e.low()) && keep.contains(&e.high()) {
                g.insert_edge_unchecked(e.low(), e.high());
            }
        }
        g
    }

    /// Edge-disjoint union; vertex sets may overlap.
    pub fn union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        for v in other.vertices() {
            g.add_vertex(v);
        }
        for e in other.edges() {
            if g.has_edge(e) {
                return Err(GraphError::UnionCollision(e));
            }
            g.insert_edge_unchecked(e.low(), e.high());
        }
        Ok(g)
    }

    /// `self ∪ other` plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        if let Some(v) = self.vertices().find(|&v| other.has_vertex(v)) {
            return Err(GraphError::JoinOverlap(v));
        }
        let mut g = self.union(other)?;
        for a in self.vertices() {
            for b in other.vertices() {
                g.insert_edge_unchecked(a, b);
            }
        }
        Ok(g)
    }
}

/// Descriptor for the host graphs designs live on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphSpec {
    /// `K_v` on `0..v`.
    Complete { v: u32 },
    /// Complete graph on an arbitrary label set.
    CompleteOn { vertices: Vec<Vertex> },
    /// Complete multipartite graph on explicit parts.
    Multipartite { parts: Vec<Vec<Vertex>> },
    Join { left: Box<GraphSpec>, right: Box<GraphSpec> },
    /// Edge-disjoint union.
    Union { graphs: Vec<GraphSpec> },
    Explicit { vertices: Vec<Vertex>, edges: Vec<[Vertex; 2]> },
}

impl GraphSpec {
    pub fn complete(v: u32) -> Self {
        GraphSpec::Complete { v }
    }

    /// `Complete` when the labels are exactly `0..n`, `CompleteOn` otherwise.
    pub fn complete_on<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        let vertices: Vec<Vertex> = vertices.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        if vertices.iter().enumerate().all(|(i, &v)| i as Vertex == v) {
            GraphSpec::Complete { v: vertices.len() as u32 }
        } else {
            GraphSpec::CompleteOn { vertices }
        }
    }

    pub fn complete_bipartite(a: Vec<Vertex>, b: Vec<Vertex>) -> Self {
        GraphSpec::Multipartite { parts: vec![a, b] }
    }

    /// Multipartite graph with consecutive labels, e.g. `[8, 8, 8]` is `K_{3×8}`.
    pub fn multipartite_sizes(sizes: &[u32]) -> Self {
        let mut next = 0;
        let parts = sizes
            .iter()
            .map(|&s| {
                let part: Vec<Vertex> = (next..next + s).collect();
                next += s;
                part
            })
            .collect();
        GraphSpec::Multipartite { parts }
    }

    pub fn explicit(g: &Graph) -> Self {
        GraphSpec::Explicit {
            vertices: g.vertices().collect(),
            edges: g.edges().map(|e| [e.low(), e.high()]).collect(),
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            GraphSpec::Complete { v } => Ok(Graph::complete_on(0..*v)),
            GraphSpec::CompleteOn { vertices } => {
                let mut seen = BTreeSet::new();
                for &v in vertices {
                    if !seen.insert(v) {
                        return Err(GraphError::OverlappingParts(v));
                    }
                }
                Ok(Graph::complete_on(vertices.iter().copied()))
            }
            GraphSpec::Multipartite { parts } => {
                let mut seen = BTreeSet::new();
                for &v in parts.iter().flatten() {
                    if !seen.insert(v) {
                        return Err(GraphError::OverlappingParts(v));
                    }
                }
                let mut g = Graph::new();
                for &v in &seen {
                    g.add_vertex(v);
                }
                for (i, p) in parts.iter().enumerate() {
                    for q in &parts[i + 1..] {
                        for &a in p {
                            for &b in q {
                                g.insert_edge_unchecked(a, b);
                            }
                        }
                    }
                }
                Ok(g)
            }
            GraphSpec::Join { left, right } => left.build()?.join(&right.build()?),
            GraphSpec::Union { graphs } => {
                let mut g = Graph::new();
                for spec in graphs {
                    g = g.union(&spec.build()?)?;
                }
                Ok(g)
            }
            GraphSpec::Explicit { vertices, edges } => {
                let mut g = Graph::new();
                for &v in vertices {
                    g.add_vertex(v);
                }
                for &[a, b] in edges {
                    if a != b && !(g.has_vertex(a) && g.has_vertex(b)) {
                        return Err(GraphError::DanglingEdge(Edge::new(a, b)));
                    }
                    g.add_edge(a, b)?;
                }
                Ok(g)
            }
        }
    }

    /// The vertex set, without materialising edges where avoidable.
    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        match self {
            GraphSpec::Complete { v } => (0..*v).collect(),
            GraphSpec::CompleteOn { vertices } => vertices.iter().copied().collect(),
            GraphSpec::Multipartite { parts } => parts.iter().flatten().copied().collect(),
            GraphSpec::Join { left, right } => {
                let mut s = left.vertex_set();
                s.extend(right.vertex_set());
                s
            }
            GraphSpec::Union { graphs } => graphs.iter().flat_map(GraphSpec::vertex_set).collect(),
            GraphSpec::Explicit { vertices, .. } => vertices.iter().copied().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.vertex_set().len()
    }

    /// True when the descriptor denotes a complete graph on its vertex set.
    pub fn is_complete(&self) -> bool {
        matches!(self, GraphSpec::Complete { .. } | GraphSpec::CompleteOn { .. })
    }
}

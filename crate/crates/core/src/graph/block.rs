use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use super::{Edge, Graph, Vertex};

/// The shape of a block.
///
/// `Path(k)` and `Cycle(k)` count vertices, `Star(k)` counts external
/// vertices. `Complete(k)` is the clique `K_k`, used for dense patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternKind {
    Path(usize),
    Star(usize),
    Cycle(usize),
    Kite,
    Complete(usize),
}

impl PatternKind {
    pub const P3: PatternKind = PatternKind::Path(3);

    pub fn validate(self) -> Result<(), BlockError> {
        let ok = match self {
            PatternKind::Path(k) => k >= 2,
            PatternKind::Star(k) => k >= 1,
            PatternKind::Cycle(k) => k >= 3,
            PatternKind::Kite => true,
            PatternKind::Complete(k) => k >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(BlockError::InvalidPattern(self))
        }
    }

    pub fn vertex_count(self) -> usize {
        match self {
            PatternKind::Path(k) | PatternKind::Cycle(k) | PatternKind::Complete(k) => k,
            PatternKind::Star(k) => k + 1,
            PatternKind::Kite => 4,
        }
    }

    pub fn edge_count(self) -> usize {
        match self {
            PatternKind::Path(k) => k - 1,
            PatternKind::Star(k) | PatternKind::Cycle(k) => k,
            PatternKind::Kite => 4,
            PatternKind::Complete(k) => k * (k - 1) / 2,
        }
    }

    /// Vertex degrees of the pattern, in no particular order.
    pub fn degrees(self) -> Vec<usize> {
        match self {
            PatternKind::Path(2) => vec![1, 1],
            PatternKind::Path(k) => {
                let mut d = vec![2; k];
                d[0] = 1;
                d[k - 1] = 1;
                d
            }
            PatternKind::Star(k) => std::iter::once(k).chain(std::iter::repeat(1).take(k)).collect(),
            PatternKind::Cycle(k) => vec![2; k],
            PatternKind::Kite => vec![2, 2, 3, 1],
            PatternKind::Complete(k) => vec![k - 1; k],
        }
    }

    /// True when `P3` is a subgraph of the pattern.
    pub fn contains_p3(self) -> bool {
        self.degrees().into_iter().any(|d| d >= 2)
    }

    pub fn name(self) -> String {
        match self {
            PatternKind::Path(k) => format!("P{k}"),
            PatternKind::Star(k) => format!("S{k}"),
            PatternKind::Cycle(k) => format!("C{k}"),
            PatternKind::Kite => "kite".to_string(),
            PatternKind::Complete(k) => format!("K{k}"),
        }
    }

    /// Edges of a copy given in this pattern's vertex encoding.
    pub(crate) fn edges_of(self, v: &[Vertex]) -> Vec<Edge> {
        match self {
            PatternKind::Path(_) => v.windows(2).map(|w| Edge::new(w[0], w[1])).collect(),
            PatternKind::Cycle(k) => (0..k).map(|i| Edge::new(v[i], v[(i + 1) % k])).collect(),
            PatternKind::Star(_) => v[1..].iter().map(|&x| Edge::new(v[0], x)).collect(),
            PatternKind::Kite => vec![
                Edge::new(v[2], v[0]),
                Edge::new(v[2], v[1]),
                Edge::new(v[2], v[3]),
                Edge::new(v[0], v[1]),
            ],
            PatternKind::Complete(_) => {
                let mut out = Vec::new();
                for (i, &a) in v.iter().enumerate() {
                    for &b in &v[i + 1..] {
                        out.push(Edge::new(a, b));
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockError {
    #[error("invalid pattern parameter for {0:?}")]
    InvalidPattern(PatternKind),
    #[error("{kind} block needs {expected} vertices, got {got}")]
    WrongArity { kind: PatternKind, expected: usize, got: usize },
    #[error("vertex {0} repeated inside a block")]
    RepeatedVertex(Vertex),
}

/// A labelled copy of a pattern, always held in canonical encoding:
///
/// * path: first endpoint smaller than the last,
/// * cycle: smallest label first, its smaller neighbour second,
/// * star: `[center; externals ascending]`,
/// * kite `[a,b,c⋈d]` (edges `ca, cb, cd, ab`): `a < b`,
/// * clique: ascending.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    kind: PatternKind,
    vertices: Vec<Vertex>,
}

impl Block {
    pub fn new(kind: PatternKind, vertices: impl Into<Vec<Vertex>>) -> Result<Block, BlockError> {
        kind.validate()?;
        let mut v = vertices.into();
        if v.len() != kind.vertex_count() {
            return Err(BlockError::WrongArity { kind, expected: kind.vertex_count(), got: v.len() });
        }
        let mut seen = BTreeSet::new();
        for &x in &v {
            if !seen.insert(x) {
                return Err(BlockError::RepeatedVertex(x));
            }
        }
        canonicalize(kind, &mut v);
        Ok(Block { kind, vertices: v })
    }

    pub fn path(vertices: &[Vertex]) -> Result<Block, BlockError> {
        Block::new(PatternKind::Path(vertices.len()), vertices)
    }

    pub fn p3(a: Vertex, b: Vertex, c: Vertex) -> Result<Block, BlockError> {
        Block::new(PatternKind::P3, [a, b, c])
    }

    pub fn cycle(vertices: &[Vertex]) -> Result<Block, BlockError> {
        Block::new(PatternKind::Cycle(vertices.len()), vertices)
    }

    pub fn star(center: Vertex, externals: &[Vertex]) -> Result<Block, BlockError> {
        let mut v = Vec::with_capacity(externals.len() + 1);
        v.push(center);
        v.extend_from_slice(externals);
        Block::new(PatternKind::Star(externals.len()), v)
    }

    /// The kite `[a,b,c⋈d]`: triangle `abc` with pendant edge `cd`.
    pub fn kite(a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> Result<Block, BlockError> {
        Block::new(PatternKind::Kite, [a, b, c, d])
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.kind.edges_of(&self.vertices)
    }

    pub fn graph(&self) -> Graph {
        let mut g = Graph::new();
        for &v in &self.vertices {
            g.add_vertex(v);
        }
        for e in self.edges() {
            g.add_edge(e.low(), e.high()).expect("canonical blocks are simple graphs");
        }
        g
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Degree of `v` inside this block (0 when absent).
    pub fn degree_of(&self, v: Vertex) -> usize {
        self.edges().into_iter().filter(|e| e.contains(v)).count()
    }

    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Block, BlockError> {
        Block::new(self.kind, self.vertices.iter().map(|&v| f(v)).collect::<Vec<_>>())
    }

    /// The star center; `None` for other kinds.
    pub fn center(&self) -> Option<Vertex> {
        matches!(self.kind, PatternKind::Star(_)).then(|| self.vertices[0])
    }
}

fn canonicalize(kind: PatternKind, v: &mut [Vertex]) {
    match kind {
        PatternKind::Path(_) => {
            if v[0] > v[v.len() - 1] {
                v.reverse();
            }
        }
        PatternKind::Cycle(k) => {
            let min_pos = (0..k).min_by_key(|&i| v[i]).unwrap_or(0);
            v.rotate_left(min_pos);
            if v[1] > v[k - 1] {
                v[1..].reverse();
            }
        }
        PatternKind::Star(_) => v[1..].sort_unstable(),
        PatternKind::Kite => {
            if v[0] > v[1] {
                v.swap(0, 1);
            }
        }
        PatternKind::Complete(_) => v.sort_unstable(),
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = &self.vertices;
        let join = |s: &[Vertex]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self.kind {
            PatternKind::Path(_) | PatternKind::Complete(_) => write!(f, "[{}]", join(v)),
            PatternKind::Cycle(_) => write!(f, "({})", join(v)),
            PatternKind::Star(_) => write!(f, "[{};{}]", v[0], join(&v[1..])),
            PatternKind::Kite => write!(f, "[{},{},{}⋈{}]", v[0], v[1], v[2], v[3]),
        }
    }
}

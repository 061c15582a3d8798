//! Partitioning the edges of a connected graph into copies of `P3`.
//!
//! A connected graph with an even number of edges splits exactly into
//! `P3`s; with an odd number one edge is left over. The construction roots
//! a BFS tree at the smallest label, hands every non-tree edge to its deeper
//! endpoint (larger label on ties) and then pairs edges bottom-up, pushing a
//! lone edge onto the tree edge towards the parent.

use std::collections::{BTreeMap, VecDeque};

use thiserror::Error;

use crate::graph::{Block, Edge, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum P3Error {
    #[error("graph has {0} components with edges; split it first")]
    Disconnected(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct P3Partition {
    pub paths: Vec<Block>,
    /// Present iff the edge count is odd.
    pub leftover: Option<Edge>,
}

/// Partition a connected graph (isolated vertices ignored).
pub fn p3_partition(g: &Graph) -> Result<P3Partition, P3Error> {
    let active: Vec<Vertex> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let Some(&root) = active.first() else {
        return Ok(P3Partition::default());
    };

    let mut order = Vec::with_capacity(active.len());
    let mut parent: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    let mut depth: BTreeMap<Vertex, usize> = BTreeMap::from([(root, 0)]);
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for w in g.neighbors(u) {
            if !depth.contains_key(&w) {
                depth.insert(w, depth[&u] + 1);
                parent.insert(w, u);
                queue.push_back(w);
            }
        }
    }
    if order.len() < active.len() {
        let comps = g.components().into_iter().filter(|c| c.len() > 1).count();
        return Err(P3Error::Disconnected(comps));
    }

    // pending[u] holds the far endpoints of edges that must be used at u
    let mut pending: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for e in g.edges() {
        let (a, b) = (e.low(), e.high());
        if parent.get(&a) == Some(&b) || parent.get(&b) == Some(&a) {
            continue;
        }
        let owner = match depth[&a].cmp(&depth[&b]) {
            std::cmp::Ordering::Greater => a,
            std::cmp::Ordering::Less => b,
            std::cmp::Ordering::Equal => b,
        };
        pending.entry(owner).or_default().push(e.other(owner).expect("endpoint"));
    }

    let mut out = P3Partition::default();
    for &u in order.iter().rev() {
        let mut ends = pending.remove(&u).unwrap_or_default();
        ends.sort_unstable();
        if let Some(&p) = parent.get(&u) {
            if ends.len() % 2 == 1 {
                ends.push(p);
            } else {
                pending.entry(p).or_default().push(u);
            }
        }
        for pair in ends.chunks(2) {
            match *pair {
                [a, b] => out.paths.push(Block::p3(a, u, b).expect("distinct endpoints")),
                [a] => out.leftover = Some(Edge::new(a, u)),
                _ => unreachable!(),
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub vertices: Vec<Vertex>,
    pub edge_count: usize,
    pub partition: P3Partition,
}

impl ComponentReport {
    pub fn is_even(&self) -> bool {
        self.edge_count % 2 == 0
    }
}

/// Per-component partition of an arbitrary graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComponentPartition {
    pub components: Vec<ComponentReport>,
}

impl ComponentPartition {
    /// An exact `P3` partition exists iff every component is even.
    pub fn is_exact(&self) -> bool {
        self.components.iter().all(ComponentReport::is_even)
    }

    pub fn odd_components(&self) -> impl Iterator<Item = &ComponentReport> {
        self.components.iter().filter(|c| !c.is_even())
    }

    pub fn paths(&self) -> Vec<Block> {
        self.components.iter().flat_map(|c| c.partition.paths.iter().cloned()).collect()
    }
}

pub fn p3_partition_components(g: &Graph) -> ComponentPartition {
    let components = g
        .components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|vertices| {
            let sub = g.induced(&vertices.iter().copied().collect());
            let partition = p3_partition(&sub).expect("component is connected");
            ComponentReport { vertices, edge_count: sub.edge_count(), partition }
        })
        .collect();
    ComponentPartition { components }
}

//! Designs, down-link certificates and their verification.

mod admissible;
mod glue;
mod verify;

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Block, BlockError, GraphSpec, PatternKind, Vertex};

pub use admissible::{
    admissible_order, admissible_targets, eta1_lower_bound, p3_admissible, BoundError, SpectrumMode,
    SpectrumReport, Verdict,
};
pub use glue::{glue_downlinks, GlueError, GluePartition};
pub use verify::{
    verify_design, verify_downlink, CertificateReport, DesignReport, DesignViolation, LinkViolation,
};

/// A `(K, Γ)`-design: blocks claimed to partition the edges of the host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    pub host: GraphSpec,
    pub pattern: PatternKind,
    pub blocks: Vec<Block>,
}

impl Design {
    pub fn new(host: GraphSpec, pattern: PatternKind, blocks: Vec<Block>) -> Self {
        Design { host, pattern, blocks }
    }

    /// Number of host vertices.
    pub fn order(&self) -> usize {
        self.host.order()
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.host.vertex_set()
    }

    pub fn blocks_containing(&self, v: Vertex) -> impl Iterator<Item = (usize, &Block)> {
        self.blocks.iter().enumerate().filter(move |(_, b)| b.contains_vertex(v))
    }

    /// Degrees of `v` across the blocks containing it.
    pub fn degree_profile(&self, v: Vertex) -> Vec<usize> {
        self.blocks_containing(v).map(|(_, b)| b.degree_of(v)).collect()
    }

    /// How often each pair of vertices appears together in a block.
    pub fn pair_counts(&self) -> BTreeMap<(Vertex, Vertex), usize> {
        let mut counts = BTreeMap::new();
        for b in &self.blocks {
            let vs = b.vertices();
            for (i, &a) in vs.iter().enumerate() {
                for &c in &vs[i + 1..] {
                    *counts.entry((a.min(c), a.max(c))).or_insert(0) += 1;
                }
            }
        }
        counts
    }

    /// Relabel every vertex through `f`; `f` must be injective on the host.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Result<Design, BlockError> {
        let host = relabel_spec(&self.host, &f);
        let blocks = self.blocks.iter().map(|b| b.relabel(&f)).collect::<Result<_, _>>()?;
        Ok(Design { host, pattern: self.pattern, blocks })
    }
}

fn relabel_spec(spec: &GraphSpec, f: &impl Fn(Vertex) -> Vertex) -> GraphSpec {
    let map = |vs: &[Vertex]| vs.iter().map(|&v| f(v)).collect::<Vec<_>>();
    match spec {
        GraphSpec::Complete { v } => GraphSpec::complete_on((0..*v).map(f)),
        GraphSpec::CompleteOn { vertices } => GraphSpec::complete_on(map(vertices)),
        GraphSpec::Multipartite { parts } => {
            GraphSpec::Multipartite { parts: parts.iter().map(|p| map(p)).collect() }
        }
        GraphSpec::Join { left, right } => GraphSpec::Join {
            left: Box::new(relabel_spec(left, f)),
            right: Box::new(relabel_spec(right, f)),
        },
        GraphSpec::Union { graphs } => {
            GraphSpec::Union { graphs: graphs.iter().map(|g| relabel_spec(g, f)).collect() }
        }
        GraphSpec::Explicit { vertices, edges } => GraphSpec::Explicit {
            vertices: map(vertices),
            edges: edges.iter().map(|&[a, b]| [f(a), f(b)]).collect(),
        },
    }
}

/// A down-link `f: source → target` with `f(B) ≤ B`; `mapping[i]` is the
/// target index of the image of source block `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownLinkCertificate {
    pub source: Design,
    pub target: Design,
    pub mapping: Vec<usize>,
}

impl DownLinkCertificate {
    pub fn image(&self, source_index: usize) -> Option<&Block> {
        self.mapping.get(source_index).and_then(|&t| self.target.blocks.get(t))
    }

    pub fn target_order(&self) -> usize {
        self.target.order()
    }

    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> Result<DownLinkCertificate, BlockError> {
        Ok(DownLinkCertificate {
            source: self.source.relabel(&f)?,
            target: self.target.relabel(&f)?,
            mapping: self.mapping.clone(),
        })
    }
}

//! Gluing down-links on pieces of a vertex partition into one down-link.
//!
//! With `V = X ⊔ A_1 ⊔ … ⊔ A_t` and `X' ⊆ X`, the edges of `K_V` split into
//! `K_X`, the `K_{X,A_i}`, the `K_{A_i}` and the `K_{A_i,A_j}`; the edges of
//! `K_{V∖X'}` split the same way. Down-links on the pieces (whose sources
//! cover `K_V` and whose targets cover `K_{V∖X'}`) combine into a down-link
//! between the complete designs.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Edge, GraphSpec, Vertex};

use super::{verify_downlink, Design, DownLinkCertificate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluePartition {
    pub x: Vec<Vertex>,
    /// `X' ⊆ X`, the vertices dropped from the target.
    pub removed: Vec<Vertex>,
    pub parts: Vec<Vec<Vertex>>,
}

impl GluePartition {
    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.x.iter().chain(self.parts.iter().flatten()).copied().collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GlueError {
    #[error("vertex {0} appears twice in the partition")]
    OverlappingParts(Vertex),
    #[error("removed vertex {0} is not in X")]
    RemovedOutsideX(Vertex),
    #[error("no pieces to glue")]
    NoPieces,
    #[error("piece {index} does not verify: {reason}")]
    InvalidPiece { index: usize, reason: String },
    #[error("pieces disagree on patterns")]
    MixedPatterns,
    #[error("edge {edge} is covered by two {side} hosts (pieces {first} and {second})")]
    Overlap { side: &'static str, edge: Edge, first: usize, second: usize },
    #[error("edge {edge} of the {side} complete graph is in no piece")]
    Uncovered { side: &'static str, edge: Edge },
    #[error("{side} host edge {edge} of piece {index} lies outside the complete graph")]
    Stray { side: &'static str, edge: Edge, index: usize },
}

/// Combine per-piece certificates into a certificate from the `K_V` design
/// to the `K_{V∖X'}` design.
pub fn glue_downlinks(
    partition: &GluePartition,
    pieces: &[DownLinkCertificate],
) -> Result<DownLinkCertificate, GlueError> {
    let mut seen = BTreeSet::new();
    for &v in partition.x.iter().chain(partition.parts.iter().flatten()) {
        if !seen.insert(v) {
            return Err(GlueError::OverlappingParts(v));
        }
    }
    let removed: BTreeSet<Vertex> = partition.removed.iter().copied().collect();
    if let Some(&v) = removed.iter().find(|v| !partition.x.contains(v)) {
        return Err(GlueError::RemovedOutsideX(v));
    }
    let first = pieces.first().ok_or(GlueError::NoPieces)?;
    let (source_pattern, target_pattern) = (first.source.pattern, first.target.pattern);

    for (index, piece) in pieces.iter().enumerate() {
        if piece.source.pattern != source_pattern || piece.target.pattern != target_pattern {
            return Err(GlueError::MixedPatterns);
        }
        let report = verify_downlink(piece);
        if !report.is_valid() {
            let reason = report.messages().into_iter().next().unwrap_or_default();
            return Err(GlueError::InvalidPiece { index, reason });
        }
    }

    let target_vertices: BTreeSet<Vertex> = seen.difference(&removed).copied().collect();
    check_cover("source", &seen, pieces.iter().map(|p| &p.source.host))?;
    check_cover("target", &target_vertices, pieces.iter().map(|p| &p.target.host))?;

    let mut source_blocks = Vec::new();
    let mut target_blocks = Vec::new();
    let mut mapping = Vec::new();
    for piece in pieces {
        let offset = target_blocks.len();
        mapping.extend(piece.mapping.iter().map(|&t| t + offset));
        source_blocks.extend(piece.source.blocks.iter().cloned());
        target_blocks.extend(piece.target.blocks.iter().cloned());
    }
    let cert = DownLinkCertificate {
        source: Design::new(GraphSpec::complete_on(seen), source_pattern, source_blocks),
        target: Design::new(GraphSpec::complete_on(target_vertices), target_pattern, target_blocks),
        mapping,
    };
    debug_assert!(verify_downlink(&cert).is_valid());
    Ok(cert)
}

fn check_cover<'a>(
    side: &'static str,
    vertices: &BTreeSet<Vertex>,
    hosts: impl Iterator<Item = &'a GraphSpec>,
) -> Result<(), GlueError> {
    let mut owner: BTreeMap<Edge, usize> = BTreeMap::new();
    for (index, host) in hosts.enumerate() {
        let g = host.build().map_err(|e| GlueError::InvalidPiece { index, reason: e.to_string() })?;
        for edge in g.edges() {
            if !vertices.contains(&edge.low()) || !vertices.contains(&edge.high()) {
                return Err(GlueError::Stray { side, edge, index });
            }
            if let Some(&first) = owner.get(&edge) {
                return Err(GlueError::Overlap { side, edge, first, second: index });
            }
            owner.insert(edge, index);
        }
    }
    let vs: Vec<Vertex> = vertices.iter().copied().collect();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            let edge = Edge::new(a, b);
            if !owner.contains_key(&edge) {
                return Err(GlueError::Uncovered { side, edge });
            }
        }
    }
    Ok(())
}

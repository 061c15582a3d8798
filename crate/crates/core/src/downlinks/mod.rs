//! Down-links from designs to `P3`-designs.
//!
//! Every construction picks one `P3` image per source block, removes the
//! images from a complete graph on the target vertices and splits what is
//! left into `P3`s per connected component. Images are the
//! lexicographically least admissible copy unless a construction prescribes
//! otherwise; when the residual graph has a component with an odd number of
//! edges, other image choices are tried one block at a time.

mod cycle;
mod general;
mod kite;
mod path;
mod star;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::design::{verify_design, verify_downlink, Design, DownLinkCertificate};
use crate::graph::{pattern_copies, Block, Edge, Graph, GraphSpec, PatternKind, Vertex};
use crate::p3::p3_partition_components;

pub use cycle::downlink_cycle;
pub use general::{downlink_general, downlink_reduced};
pub use kite::{degree2_vertex, downlink_kite};
pub use path::downlink_path;
pub use star::downlink_star;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DownlinkError {
    #[error("source design does not verify: {0}")]
    InvalidSource(String),
    #[error("pattern {0} contains no P3")]
    NoP3(PatternKind),
    #[error("expected a {expected} design, got {got}")]
    WrongPattern { expected: &'static str, got: PatternKind },
    #[error("block {block} has no P3 avoiding {avoid:?}")]
    NoAvoidingP3 { block: usize, avoid: Vec<Vertex> },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("the triangles admit no pairing by shared vertices")]
    NoPairing,
    #[error("residual graph keeps {0} odd components")]
    OddResidual(usize),
}

/// Dispatch on the pattern of `d`.
pub fn downlink(d: &Design, minimal: bool) -> Result<DownLinkCertificate, DownlinkError> {
    match d.pattern {
        PatternKind::Path(_) => downlink_path(d),
        PatternKind::Star(_) => downlink_star(d),
        PatternKind::Cycle(_) => downlink_cycle(d),
        PatternKind::Kite => downlink_kite(d, minimal),
        PatternKind::Complete(_) => downlink_reduced(d).or_else(|_| downlink_general(d)),
    }
}

pub(crate) fn check_source(d: &Design) -> Result<(), DownlinkError> {
    let r = verify_design(d);
    if let Some(v) = r.violations.first() {
        return Err(DownlinkError::InvalidSource(v.to_string()));
    }
    if !d.pattern.contains_p3() {
        return Err(DownlinkError::NoP3(d.pattern));
    }
    Ok(())
}

/// `P3`s inside each block avoiding `avoid`, least first.
pub(crate) fn avoiding_candidates(d: &Design, avoid: &BTreeSet<Vertex>) -> Result<Vec<Vec<Block>>, DownlinkError> {
    d.blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let c = pattern_copies(&b.graph(), PatternKind::P3, avoid);
            if c.is_empty() {
                Err(DownlinkError::NoAvoidingP3 { block: i, avoid: avoid.iter().copied().collect() })
            } else {
                Ok(c)
            }
        })
        .collect()
}

/// The `n` labels above every source label.
pub(crate) fn fresh_labels(d: &Design, n: usize) -> Vec<Vertex> {
    let top = d.vertices().last().map_or(0, |&m| m + 1);
    (top..top + n as Vertex).collect()
}

fn residual(target: &BTreeSet<Vertex>, images: &[Block]) -> Graph {
    let mut g = Graph::complete_on(target.iter().copied());
    for b in images {
        for e in b.edges() {
            g.remove_edge(e);
        }
    }
    g
}

fn odd_components(g: &Graph) -> usize {
    g.components()
        .into_iter()
        .filter(|c| {
            let degree: usize = c.iter().map(|&v| g.degree(v)).sum();
            (degree / 2) % 2 == 1
        })
        .count()
}

/// Images plus a `P3` split of the residual graph on `target`.
pub(crate) fn assemble(
    d: &Design,
    images: Vec<Block>,
    target: &BTreeSet<Vertex>,
) -> Result<DownLinkCertificate, DownlinkError> {
    let r = residual(target, &images);
    let parts = p3_partition_components(&r);
    if !parts.is_exact() {
        return Err(DownlinkError::OddResidual(parts.odd_components().count()));
    }
    let mapping = (0..images.len()).collect();
    let mut blocks = images;
    blocks.extend(parts.paths());
    let cert = DownLinkCertificate {
        source: d.clone(),
        target: Design::new(GraphSpec::complete_on(target.iter().copied()), PatternKind::P3, blocks),
        mapping,
    };
    debug_assert!(verify_downlink(&cert).is_valid(), "{:?}", verify_downlink(&cert).messages());
    Ok(cert)
}

/// Images plus residual paths given by the construction itself.
pub(crate) fn assemble_direct(
    d: &Design,
    images: Vec<Block>,
    residual: Vec<Block>,
    target: &BTreeSet<Vertex>,
) -> DownLinkCertificate {
    let mapping = (0..images.len()).collect();
    let mut blocks = images;
    blocks.extend(residual);
    let cert = DownLinkCertificate {
        source: d.clone(),
        target: Design::new(GraphSpec::complete_on(target.iter().copied()), PatternKind::P3, blocks),
        mapping,
    };
    debug_assert!(verify_downlink(&cert).is_valid(), "{:?}", verify_downlink(&cert).messages());
    cert
}

/// The two edges of `block` outside the `P3` `image`, as a `P3`; for
/// patterns with four edges.
pub(crate) fn complement_p3(block: &Block, image: &Block) -> Option<Block> {
    let used = image.edges();
    let rest: Vec<Edge> = block.edges().into_iter().filter(|e| !used.contains(e)).collect();
    let [e, f] = rest[..] else { return None };
    let mid = [e.low(), e.high()].into_iter().find(|&x| f.contains(x))?;
    Block::p3(e.other(mid)?, mid, f.other(mid)?).ok()
}

/// Least candidates first; while the residual has odd components, switch
/// the first single block whose alternative lowers their number.
pub(crate) fn assemble_with_repair(
    d: &Design,
    candidates: &[Vec<Block>],
    target: &BTreeSet<Vertex>,
) -> Result<DownLinkCertificate, DownlinkError> {
    let mut choice = vec![0usize; candidates.len()];
    let pick = |choice: &[usize]| -> Vec<Block> {
        choice.iter().zip(candidates).map(|(&c, cands)| cands[c].clone()).collect()
    };
    let mut odd = odd_components(&residual(target, &pick(&choice)));
    'improve: while odd > 0 {
        for i in 0..candidates.len() {
            let current = choice[i];
            for alt in 0..candidates[i].len() {
                if alt == current {
                    continue;
                }
                choice[i] = alt;
                let now = odd_components(&residual(target, &pick(&choice)));
                if now < odd {
                    odd = now;
                    continue 'improve;
                }
            }
            choice[i] = current;
        }
        return Err(DownlinkError::OddResidual(odd));
    }
    assemble(d, pick(&choice), target)
}

/// Least admissible `P3` order `≥ n`.
pub(crate) fn admissible_at_least(n: usize) -> usize {
    (n..).find(|&m| m % 4 <= 1).expect("unbounded")
}

pub(crate) fn smallest(d: &Design, k: usize) -> Vec<Vertex> {
    d.vertices().into_iter().take(k).collect()
}

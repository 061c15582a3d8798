use std::collections::BTreeSet;

use crate::design::{p3_admissible, Design, DownLinkCertificate};
use crate::graph::{Block, PatternKind, Vertex};

use super::{assemble_direct, assemble_with_repair, avoiding_candidates, check_source, DownlinkError};

/// The least vertex of degree 2 in every block containing it.
pub fn degree2_vertex(d: &Design) -> Option<Vertex> {
    d.vertices().into_iter().find(|&x| {
        let mut blocks = d.blocks_containing(x).peekable();
        blocks.peek().is_some() && blocks.all(|(_, b)| b.degree_of(x) == 2)
    })
}

/// Non-minimal: each kite `[a,b,c⋈d]` gives the image `[a,b,c]` and the
/// residual path `[a,c,d]`, target order `v`. Minimal: images avoid a
/// degree-2 vertex `x`, which is dropped, target order `v − 1`.
pub fn downlink_kite(d: &Design, minimal: bool) -> Result<DownLinkCertificate, DownlinkError> {
    check_source(d)?;
    if d.pattern != PatternKind::Kite {
        return Err(DownlinkError::WrongPattern { expected: "kite", got: d.pattern });
    }
    if !minimal {
        let mut images = Vec::new();
        let mut residual = Vec::new();
        for b in &d.blocks {
            let [a, b_, c, e] = b.vertices()[..] else { unreachable!("kites have four vertices") };
            images.push(Block::p3(a, b_, c).expect("distinct kite vertices"));
            residual.push(Block::p3(a, c, e).expect("distinct kite vertices"));
        }
        return Ok(assemble_direct(d, images, residual, &d.vertices()));
    }
    let x = degree2_vertex(d)
        .ok_or_else(|| DownlinkError::Precondition("no vertex has degree 2 in all its blocks".into()))?;
    if !p3_admissible(d.order() - 1) {
        return Err(DownlinkError::Precondition(format!("order {} is not admissible", d.order() - 1)));
    }
    let avoid = BTreeSet::from([x]);
    let candidates = avoiding_candidates(d, &avoid)?;
    let target: BTreeSet<Vertex> = d.vertices().into_iter().filter(|&y| y != x).collect();
    assemble_with_repair(d, &candidates, &target)
}

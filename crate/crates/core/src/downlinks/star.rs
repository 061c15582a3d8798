use std::collections::BTreeSet;

use crate::design::{Design, DownLinkCertificate};
use crate::generators::center_counts;
use crate::graph::{pattern_copies, Block, Edge, PatternKind, Vertex};

use super::{
    assemble, assemble_direct, assemble_with_repair, avoiding_candidates, check_source, downlink_general,
    DownlinkError,
};

/// Down-links from star designs with `k > 3`.
///
/// With a non-centre vertex `x` and a centre `y` of exactly one star, and
/// `v ≡ 1, 2 (mod 4)`, the target drops `x` (order `v − 1`). For
/// `v ≡ 0, 1 (mod 4)` the target keeps order `v`: even stars split into
/// paths, odd stars either avoid `x` or, when every vertex is a centre, avoid
/// one edge between each pair of centres of an odd number of stars. Other
/// cases use [`downlink_general`].
pub fn downlink_star(d: &Design) -> Result<DownLinkCertificate, DownlinkError> {
    check_source(d)?;
    let PatternKind::Star(k) = d.pattern else {
        return Err(DownlinkError::WrongPattern { expected: "star", got: d.pattern });
    };
    if k <= 3 {
        return downlink_general(d);
    }
    let v = d.order();
    let counts = center_counts(d);
    let non_center = counts.iter().find(|(_, &c)| c == 0).map(|(&x, _)| x);
    let single = counts.iter().find(|(_, &c)| c == 1).map(|(&y, _)| y);
    if let (Some(x), Some(y), 1 | 2) = (non_center, single, v % 4) {
        if let Ok(c) = drop_non_center(d, x, y) {
            return Ok(c);
        }
    }
    match (v % 4, non_center) {
        (0 | 1, _) if k % 2 == 0 => Ok(split_even(d, k)),
        (0 | 1, Some(x)) => {
            let candidates = avoiding_candidates(d, &BTreeSet::from([x]))?;
            assemble_with_repair(d, &candidates, &d.vertices())
        }
        (0 | 1, None) => odd_centres(d),
        (_, Some(x)) => {
            let candidates = avoiding_candidates(d, &BTreeSet::from([x]))?;
            let target = d.vertices().into_iter().filter(|&z| z != x).collect();
            assemble_with_repair(d, &candidates, &target).or_else(|_| downlink_general(d))
        }
        _ => downlink_general(d),
    }
}

/// `P = [x1,y,x2]` from the star of `y`, a path through `x1x2` from the
/// star holding that edge, images elsewhere avoiding `x` and `y`.
fn drop_non_center(d: &Design, x: Vertex, y: Vertex) -> Result<DownLinkCertificate, DownlinkError> {
    let (s, star) = d.blocks.iter().enumerate().find(|(_, b)| b.center() == Some(y)).expect("y centres a star");
    let ext: Vec<Vertex> = star.vertices()[1..].iter().copied().filter(|&z| z != x).collect();
    let (x1, x2) = (ext[0], ext[1]);
    let link = Edge::new(x1, x2);
    let (s2, other) =
        d.blocks.iter().enumerate().find(|(_, b)| b.edges().contains(&link)).expect("every edge is covered");
    let centre = other.center().expect("star");
    let far = if centre == x1 { x2 } else { x1 };
    let z = other.vertices()[1..]
        .iter()
        .copied()
        .find(|&z| z != x && z != far)
        .ok_or_else(|| DownlinkError::Precondition("star too small to pass through x1x2".into()))?;
    let avoid = BTreeSet::from([x, y]);
    let mut candidates = avoiding_candidates_except(d, &avoid, &[s, s2])?;
    candidates[s] = vec![Block::p3(x1, y, x2).expect("distinct")];
    candidates[s2] = vec![Block::p3(far, centre, z).expect("distinct")];
    let target = d.vertices().into_iter().filter(|&w| w != x).collect();
    assemble_with_repair(d, &candidates, &target)
}

fn avoiding_candidates_except(
    d: &Design,
    avoid: &BTreeSet<Vertex>,
    skip: &[usize],
) -> Result<Vec<Vec<Block>>, DownlinkError> {
    d.blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            if skip.contains(&i) {
                return Ok(Vec::new());
            }
            let c = pattern_copies(&b.graph(), PatternKind::P3, avoid);
            if c.is_empty() {
                Err(DownlinkError::NoAvoidingP3 { block: i, avoid: avoid.iter().copied().collect() })
            } else {
                Ok(c)
            }
        })
        .collect()
}

/// Each star `[c; e1, …, ek]` becomes `[e1,c,e2]` (the image) and
/// `[e3,c,e4], …`.
fn split_even(d: &Design, k: usize) -> DownLinkCertificate {
    let mut images = Vec::new();
    let mut residual = Vec::new();
    for b in &d.blocks {
        let c = b.vertices()[0];
        let ext = &b.vertices()[1..];
        for i in (0..k).step_by(2) {
            let p = Block::p3(ext[i], c, ext[i + 1]).expect("distinct");
            if i == 0 {
                images.push(p);
            } else {
                residual.push(p);
            }
        }
    }
    residual.sort();
    assemble_direct(d, images, residual, &d.vertices())
}

/// Pair the centres of an odd number of stars, keep one edge between each
/// pair out of the images, and split what remains per group of centres.
fn odd_centres(d: &Design) -> Result<DownLinkCertificate, DownlinkError> {
    let odd: Vec<Vertex> = center_counts(d).into_iter().filter(|(_, c)| c % 2 == 1).map(|(x, _)| x).collect();
    let reserved: BTreeSet<Edge> = odd.chunks(2).filter(|p| p.len() == 2).map(|p| Edge::new(p[0], p[1])).collect();
    let images: Vec<Block> = d
        .blocks
        .iter()
        .enumerate()
        .map(|(i, b)| {
            pattern_copies(&b.graph(), PatternKind::P3, &BTreeSet::new())
                .into_iter()
                .find(|p| p.edges().iter().all(|e| !reserved.contains(e)))
                .ok_or(DownlinkError::NoAvoidingP3 { block: i, avoid: Vec::new() })
        })
        .collect::<Result<_, _>>()?;
    assemble(d, images, &d.vertices())
}

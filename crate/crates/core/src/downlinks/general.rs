use std::collections::BTreeSet;

use crate::design::{p3_admissible, Design, DownLinkCertificate};
use crate::graph::Vertex;

use super::{
    admissible_at_least, assemble_with_repair, avoiding_candidates, check_source, fresh_labels, smallest,
    DownlinkError,
};

/// Down-link to order `v` when the residual splits evenly, otherwise to the
/// least admissible order in `v+1..=v+3`. New vertices make the residual
/// connected, so the padded route always succeeds.
pub fn downlink_general(d: &Design) -> Result<DownLinkCertificate, DownlinkError> {
    check_source(d)?;
    let candidates = avoiding_candidates(d, &BTreeSet::new())?;
    let v = d.order();
    let base = d.vertices();
    if p3_admissible(v) {
        if let Ok(c) = assemble_with_repair(d, &candidates, &base) {
            return Ok(c);
        }
    }
    let w = (1..=3).find(|w| p3_admissible(v + w)).expect("one of three consecutive orders is admissible");
    let mut target = base;
    target.extend(fresh_labels(d, w));
    assemble_with_repair(d, &candidates, &target)
}

/// Down-link for dense patterns: to order `v − 1` when `v ≡ 1, 2 (mod 4)`
/// (at least 5 vertices, 3 of degree ≥ 4), to `v − 3` when
/// `v ≡ 0, 3 (mod 4)` (at least 7 vertices, 5 of degree ≥ 6). Images avoid
/// the two (four) smallest labels, which are replaced by one new vertex.
pub fn downlink_reduced(d: &Design) -> Result<DownLinkCertificate, DownlinkError> {
    check_source(d)?;
    let v = d.order();
    let degrees = d.pattern.degrees();
    let heavy = |min: usize| degrees.iter().filter(|&&x| x >= min).count();
    let drop = if v % 4 == 1 || v % 4 == 2 {
        if degrees.len() < 5 || heavy(4) < 3 {
            return Err(DownlinkError::Precondition(format!(
                "{} needs 5 vertices, 3 of degree at least 4",
                d.pattern
            )));
        }
        2
    } else {
        if degrees.len() < 7 || heavy(6) < 5 {
            return Err(DownlinkError::Precondition(format!(
                "{} needs 7 vertices, 5 of degree at least 6",
                d.pattern
            )));
        }
        4
    };
    let avoid: BTreeSet<Vertex> = smallest(d, drop).into_iter().collect();
    let candidates = avoiding_candidates(d, &avoid)?;
    let mut target: BTreeSet<Vertex> = d.vertices().difference(&avoid).copied().collect();
    target.extend(fresh_labels(d, 1));
    assemble_with_repair(d, &candidates, &target)
}

/// Drop the `t` smallest labels, keep the next one out of every image so the
/// residual stays connected, and pad to the least admissible order.
pub(crate) fn drop_with_anchor(d: &Design, t: usize) -> Result<DownLinkCertificate, DownlinkError> {
    let removed = smallest(d, t);
    let avoid: BTreeSet<Vertex> = smallest(d, t + 1).into_iter().collect();
    let candidates = avoiding_candidates(d, &avoid)?;
    let kept = d.order() - removed.len();
    let mut target: BTreeSet<Vertex> =
        d.vertices().into_iter().filter(|x| !removed.contains(x)).collect();
    target.extend(fresh_labels(d, admissible_at_least(kept) - kept));
    assemble_with_repair(d, &candidates, &target)
}

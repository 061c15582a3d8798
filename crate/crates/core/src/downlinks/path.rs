use std::collections::BTreeSet;

use crate::design::{Design, DownLinkCertificate};
use crate::generators::pendant_vertex;
use crate::graph::{PatternKind, Vertex};

use super::general::drop_with_anchor;
use super::{assemble_with_repair, avoiding_candidates, check_source, downlink_general, fresh_labels, DownlinkError};

/// `P3`: the identity. `P4` with a pendant vertex `x`: images avoid `x`,
/// target `V ∖ {x}` when `v ≡ 1, 2 (mod 4)` and `V ∖ {x} ∪ {α}` when
/// `v ≡ 0`. `P_k`, `k ≥ 6`: drop `⌊(k−6)/3⌋` vertices as for cycles.
/// Everything else goes through [`downlink_general`].
pub fn downlink_path(d: &Design) -> Result<DownLinkCertificate, DownlinkError> {
    check_source(d)?;
    let PatternKind::Path(k) = d.pattern else {
        return Err(DownlinkError::WrongPattern { expected: "path", got: d.pattern });
    };
    let v = d.order();
    match k {
        3 => Ok(DownLinkCertificate {
            source: d.clone(),
            target: d.clone(),
            mapping: (0..d.blocks.len()).collect(),
        }),
        4 => {
            let Some(x) = pendant_vertex(d) else { return downlink_general(d) };
            let avoid = BTreeSet::from([x]);
            let mut target: BTreeSet<Vertex> = d.vertices().into_iter().filter(|&y| y != x).collect();
            match v % 4 {
                1 | 2 => {}
                0 => target.extend(fresh_labels(d, 1)),
                _ => return downlink_general(d),
            }
            let candidates = avoiding_candidates(d, &avoid)?;
            assemble_with_repair(d, &candidates, &target).or_else(|_| downlink_general(d))
        }
        k if k >= 6 => drop_with_anchor(d, (k - 6) / 3),
        _ => downlink_general(d),
    }
}

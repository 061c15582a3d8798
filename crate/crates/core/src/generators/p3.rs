use crate::design::{p3_admissible, Design};
use crate::graph::{Graph, GraphSpec, PatternKind, Vertex};
use crate::p3::p3_partition;

use super::GeneratorError;

/// A `(K_v, P3)`-design, `v ≡ 0, 1 (mod 4)`, from the tree-pairing split of
/// `K_v`.
pub fn p3_design(v: u32) -> Result<Design, GeneratorError> {
    if v < 3 || !p3_admissible(v as usize) {
        return Err(GeneratorError::Unsupported { what: "P3 design", v: v as usize });
    }
    let parts = p3_partition(&Graph::complete_on(0..v as Vertex)).expect("complete graphs are connected");
    debug_assert!(parts.leftover.is_none());
    let mut blocks = parts.paths;
    blocks.sort();
    Ok(Design::new(GraphSpec::complete(v), PatternKind::P3, blocks))
}

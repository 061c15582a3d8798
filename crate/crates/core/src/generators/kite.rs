//! Kite designs: cyclic, on `K_{m×8}`, and with a vertex of degree 2 in
//! every block containing it.

use crate::design::Design;
use crate::graph::{Block, GraphSpec, PatternKind, Vertex};

use super::difference::{kite_cyclic_family, kite_multipartite_family};
use super::GeneratorError;

/// Cyclic `(K_{8t+1}, kite)`-design with `t(8t+1)` blocks.
pub fn kite_cyclic_design(t: u32) -> Result<Design, GeneratorError> {
    if t == 0 {
        return Err(GeneratorError::Unsupported { what: "kite_cyclic_design", v: 1 });
    }
    let blocks = kite_cyclic_family(t).develop()?;
    Ok(Design::new(GraphSpec::complete(8 * t + 1), PatternKind::Kite, blocks))
}

/// `(K_{m×8}, kite)`-design; part `c` is `8c..8c+7`.
pub fn kite_multipartite_design(m: u32) -> Result<Design, GeneratorError> {
    if m < 3 || m % 2 == 0 {
        return Err(GeneratorError::Unsupported { what: "kite_multipartite_design", v: m as usize });
    }
    let blocks = kite_multipartite_family(m).develop()?;
    let host = GraphSpec::multipartite_sizes(&vec![8; m as usize]);
    Ok(Design::new(host, PatternKind::Kite, blocks))
}

// Two-digit codes `ij` stand for `a_ij`; `0` is the special vertex.
const GADGET: [[u32; 4]; 9] = [
    [0, 11, 12, 16],
    [0, 14, 13, 15],
    [0, 16, 15, 17],
    [0, 17, 18, 16],
    [11, 13, 16, 17],
    [11, 17, 14, 16],
    [11, 15, 18, 14],
    [12, 18, 13, 17],
    [14, 15, 12, 17],
];

// Decomposes K_{0,A_2} ∪ K_{A_2} ∪ K_{A_1,A_2}.
const CROSS: [[u32; 4]; 25] = [
    [0, 22, 21, 18],
    [0, 24, 23, 18],
    [0, 26, 25, 18],
    [0, 28, 27, 18],
    [11, 21, 28, 18],
    [11, 27, 22, 18],
    [11, 23, 26, 18],
    [11, 25, 24, 18],
    [12, 27, 21, 17],
    [12, 26, 22, 17],
    [12, 25, 23, 17],
    [12, 28, 24, 17],
    [13, 21, 26, 17],
    [13, 22, 25, 17],
    [13, 23, 28, 17],
    [13, 24, 27, 17],
    [14, 25, 21, 16],
    [14, 24, 22, 16],
    [14, 23, 27, 16],
    [14, 26, 28, 16],
    [15, 24, 21, 23],
    [15, 23, 22, 28],
    [15, 28, 25, 16],
    [15, 26, 27, 25],
    [24, 26, 16, 23],
];

/// `a_ij ↦ 8(i−1) + j`, with the parts renamed through `part`.
fn place(list: &[[u32; 4]], part: impl Fn(u32) -> u32) -> Vec<Block> {
    let label = |code: u32| -> Vertex {
        if code == 0 {
            0
        } else {
            8 * (part(code / 10) - 1) + code % 10
        }
    };
    list.iter()
        .map(|k| Block::kite(label(k[0]), label(k[1]), label(k[2]), label(k[3])).expect("distinct labels"))
        .collect()
}

/// `(K_v, kite)`-design, `v ≡ 1 (mod 8)`, in which vertex `0` has degree 2
/// in every block containing it.
pub fn kite_degree2_design(v: u32) -> Result<Design, GeneratorError> {
    if v <= 1 || v % 8 != 1 {
        return Err(GeneratorError::Unsupported { what: "kite_degree2_design", v: v as usize });
    }
    let t = (v - 1) / 8;
    let mut blocks = Vec::new();
    match t {
        1 => blocks.extend(place(&GADGET, |i| i)),
        2 => {
            blocks.extend(place(&GADGET, |i| i));
            blocks.extend(place(&CROSS, |i| i));
        }
        _ if t % 2 == 1 => {
            for i in 1..=t {
                blocks.extend(place(&GADGET, |_| i));
            }
            blocks.extend(shifted_multipartite(t)?);
        }
        _ => {
            blocks.extend(place(&GADGET, |_| t));
            blocks.extend(shifted_multipartite(t - 1)?);
            for i in 1..t {
                blocks.extend(place(&CROSS, |p| if p == 1 { t } else { i }));
            }
        }
    }
    Ok(Design::new(GraphSpec::complete(v), PatternKind::Kite, blocks))
}

/// The `K_{m×8}` design moved onto `A_1 ⊔ … ⊔ A_m`.
fn shifted_multipartite(m: u32) -> Result<Vec<Block>, GeneratorError> {
    let d = kite_multipartite_design(m)?;
    Ok(d.blocks.iter().map(|b| b.relabel(|x| x + 1).expect("shift is injective")).collect())
}

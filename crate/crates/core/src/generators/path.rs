//! `P4` designs with a pendant vertex, glued from small pieces, and the
//! rewiring that removes the pendant vertex.
//!
//! `K_v` with `v = ℓ + 12t` is split as `X_ℓ ⊔ A_1 ⊔ … ⊔ A_t` with
//! `X_ℓ = {0..ℓ−1}` and `|A_i| = 12`. Every piece comes with a down-link
//! dropping vertex `0`, so the glued design does too.

use crate::design::{glue_downlinks, verify_design, Design, DownLinkCertificate, GluePartition};
use crate::graph::{Block, PatternKind, Vertex};

use super::fixtures::fixture_certificate;
use super::GeneratorError;

/// The glued down-link from the pendant design of order `v` to a `P3`-design
/// of order `v − 1` on `1..v−1`.
pub fn p4_pendant_downlink(v: u32) -> Result<DownLinkCertificate, GeneratorError> {
    let ell = match v % 12 {
        6 | 9 | 10 if v >= 6 => v % 12,
        1 if v >= 13 => 1,
        _ => return Err(GeneratorError::Unsupported { what: "p4_pendant_design", v: v as usize }),
    };
    let t = (v - ell) / 12;
    let parts: Vec<Vec<Vertex>> = (0..t).map(|i| (ell + 12 * i..ell + 12 * (i + 1)).collect()).collect();
    let x: Vec<Vertex> = (0..ell).collect();

    let k12 = fixture_certificate("k12-p4-metamorphosis")?;
    let k13 = fixture_certificate("p4-l13")?;
    let mu = fixture_certificate("k36-p4-metamorphosis")?;
    let delta = fixture_certificate("k36-p4-downlink")?;

    let mut pieces = Vec::new();
    if ell > 1 {
        pieces.push(fixture_certificate(&format!("p4-l{ell}"))?);
    }
    for a in &parts {
        match ell {
            6 | 9 => {
                pieces.push(k12.relabel(|z| a[z as usize - 1])?);
                for (j, triple) in x.chunks(3).enumerate() {
                    let tile = if j == 0 { &delta } else { &mu };
                    pieces.extend(tiles(tile, triple, a)?);
                }
            }
            _ => {
                pieces.push(k13.relabel(|z| if z == 0 { 0 } else { a[z as usize - 1] })?);
                for triple in x[1..].chunks(3) {
                    pieces.extend(tiles(&mu, triple, a)?);
                }
            }
        }
    }
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            for triple in a.chunks(3) {
                pieces.extend(tiles(&mu, triple, b)?);
            }
        }
    }
    let partition = GluePartition { x, removed: vec![0], parts };
    Ok(glue_downlinks(&partition, &pieces)?)
}

/// Copies of a `K_{3,6}` piece covering `K_{triple, part}`.
fn tiles(
    piece: &DownLinkCertificate,
    triple: &[Vertex],
    part: &[Vertex],
) -> Result<Vec<DownLinkCertificate>, GeneratorError> {
    part.chunks(6)
        .map(|six| Ok(piece.relabel(|z| if z < 3 { triple[z as usize] } else { six[z as usize - 3] })?))
        .collect()
}

/// `(K_v, P4)`-design in which vertex `0` has degree 1 in every block
/// containing it, for `v ≡ 1, 6, 9, 10 (mod 12)`.
pub fn p4_pendant_design(v: u32) -> Result<Design, GeneratorError> {
    Ok(p4_pendant_downlink(v)?.source)
}

/// A vertex of degree 1 in every block containing it, if any.
pub fn pendant_vertex(d: &Design) -> Option<Vertex> {
    d.vertices().into_iter().find(|&x| {
        let mut blocks = d.blocks_containing(x).peekable();
        blocks.peek().is_some() && blocks.all(|(_, b)| b.degree_of(x) == 1)
    })
}

/// True when every vertex has degree 2 in some block.
pub fn is_saturated(d: &Design) -> bool {
    d.vertices().into_iter().all(|x| d.blocks_containing(x).any(|(_, b)| b.degree_of(x) == 2))
}

/// Rewire two paths through the pendant vertex `x`: `P¹ = [x,a,b,c]` whose
/// `a` and `b` have degree 2 elsewhere and `P² = [x,c,d,e]` become
/// `[b,a,x,c], [b,c,d,e]`, or `[a,x,c,b], [c,d,b,a]` when `b = e`.
pub fn p4_saturate_design(d: &Design) -> Result<Design, GeneratorError> {
    if d.pattern != PatternKind::Path(4) || !verify_design(d).is_valid() {
        return Err(GeneratorError::Precondition("input is not a valid P4 design".into()));
    }
    let Some(x) = pendant_vertex(d) else {
        return Ok(d.clone());
    };
    let oriented = |b: &Block| -> Vec<Vertex> {
        let mut vs = b.vertices().to_vec();
        if vs[0] != x {
            vs.reverse();
        }
        vs
    };
    let interior_elsewhere = |z: Vertex, skip: usize| {
        d.blocks_containing(z).any(|(i, b)| i != skip && b.degree_of(z) == 2)
    };
    for (i1, p1) in d.blocks_containing(x) {
        let [_, a, b, c] = oriented(p1)[..] else { unreachable!() };
        if !interior_elsewhere(a, i1) || !interior_elsewhere(b, i1) {
            continue;
        }
        let Some((i2, p2)) = d.blocks_containing(x).find(|(_, q)| oriented(q)[1] == c) else {
            continue;
        };
        let [_, _, dd, e] = oriented(p2)[..] else { unreachable!() };
        let (p3, p4) = if b != e {
            (Block::path(&[b, a, x, c])?, Block::path(&[b, c, dd, e])?)
        } else {
            (Block::path(&[a, x, c, b])?, Block::path(&[c, dd, b, a])?)
        };
        let mut blocks = d.blocks.clone();
        blocks[i1] = p3;
        blocks[i2] = p4;
        let out = Design::new(d.host.clone(), d.pattern, blocks);
        if verify_design(&out).is_valid() && is_saturated(&out) {
            return Ok(out);
        }
    }
    Err(GeneratorError::Precondition(format!("no block [{x},a,b,c] admits the rewiring")))
}

//! Steiner triple systems by the Bose and Skolem constructions.

use crate::design::Design;
use crate::graph::{Block, GraphSpec, PatternKind, Vertex};

use super::GeneratorError;

/// STS(v) for `v ≡ 1, 3 (mod 6)`, as a `(K_v, C3)`-design.
pub fn steiner_triple_system(v: u32) -> Result<Design, GeneratorError> {
    let blocks = match v % 6 {
        3 => bose(v / 3),
        1 if v > 1 => skolem((v - 1) / 6),
        _ => return Err(GeneratorError::Unsupported { what: "steiner_triple_system", v: v as usize }),
    };
    Ok(Design::new(GraphSpec::complete(v), PatternKind::Cycle(3), blocks))
}

fn triangle(a: Vertex, b: Vertex, c: Vertex) -> Block {
    Block::cycle(&[a, b, c]).expect("distinct labels")
}

/// Over the idempotent commutative quasigroup `x∘y = (x+y)(n+1)/2 mod n`,
/// `n` odd; `(x, i)` is labelled `x + n·i`.
fn bose(n: u32) -> Vec<Block> {
    let op = |x: u32, y: u32| (x + y) * (n + 1) / 2 % n;
    let at = |x: u32, i: u32| x + n * (i % 3);
    let mut out: Vec<Block> = (0..n).map(|x| triangle(at(x, 0), at(x, 1), at(x, 2))).collect();
    for i in 0..3 {
        for x in 0..n {
            for y in x + 1..n {
                out.push(triangle(at(x, i), at(y, i), at(op(x, y), i + 1)));
            }
        }
    }
    out
}

/// Over the half-idempotent quasigroup on `Z_{2n}`; `(x, i)` is labelled
/// `x + 2n·i` and `∞` is `6n`.
fn skolem(n: u32) -> Vec<Block> {
    let m = 2 * n;
    let op = |x: u32, y: u32| {
        let s = (x + y) % m;
        if s % 2 == 0 {
            s / 2
        } else {
            (s - 1) / 2 + n
        }
    };
    let at = |x: u32, i: u32| x + m * (i % 3);
    let inf = 3 * m;
    let mut out: Vec<Block> = (0..n).map(|x| triangle(at(x, 0), at(x, 1), at(x, 2))).collect();
    for i in 0..3 {
        for x in 0..n {
            out.push(triangle(inf, at(x + n, i), at(x, i + 1)));
        }
        for x in 0..m {
            for y in x + 1..m {
                out.push(triangle(at(x, i), at(y, i), at(op(x, y), i + 1)));
            }
        }
    }
    out
}

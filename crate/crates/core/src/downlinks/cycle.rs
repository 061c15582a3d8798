use std::collections::BTreeSet;

use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;

use crate::design::{Design, DownLinkCertificate};
use crate::graph::{pattern_copies, Block, PatternKind, Vertex};

use super::general::drop_with_anchor;
use super::{
    assemble_direct, assemble_with_repair, avoiding_candidates, check_source, complement_p3, downlink_general,
    DownlinkError,
};

/// Down-links from `k`-cycle systems.
///
/// * `k = 3`, `v ≡ 1 (mod 4)`: triangles are paired by a shared vertex and
///   each pair splits into three paths, two of them images; order `v`.
/// * `k = 4`: drop the least vertex `x`; cycles through `x` lose its edges,
///   the others split in two; order `v − 1`.
/// * `k = 5`, `v ≡ 1 (mod 4)`: order `v − 1`, avoiding a pair that meets in
///   one block, or `0, 1` in a Steiner pentagon system.
/// * `k ≥ 6`: drop `⌊(k−4)/3⌋` vertices.
///
/// Other cases use [`downlink_general`].
pub fn downlink_cycle(d: &Design) -> Result<DownLinkCertificate, DownlinkError> {
    check_source(d)?;
    let PatternKind::Cycle(k) = d.pattern else {
        return Err(DownlinkError::WrongPattern { expected: "cycle", got: d.pattern });
    };
    let v = d.order();
    match k {
        3 if v % 4 == 1 => triangle_pairs(d),
        4 => four_cycles(d),
        5 if v % 4 == 1 => pentagons(d),
        k if k >= 6 => drop_with_anchor(d, (k - 4) / 3),
        _ => downlink_general(d),
    }
}

fn triangle_pairs(d: &Design) -> Result<DownLinkCertificate, DownlinkError> {
    let mut g = UnGraph::<(), ()>::new_undirected();
    let nodes: Vec<_> = d.blocks.iter().map(|_| g.add_node(())).collect();
    for i in 0..d.blocks.len() {
        for j in i + 1..d.blocks.len() {
            if d.blocks[i].vertices().iter().any(|&x| d.blocks[j].contains_vertex(x)) {
                g.add_edge(nodes[i], nodes[j], ());
            }
        }
    }
    let matching = maximum_matching(&g);
    if !matching.is_perfect() {
        return Err(DownlinkError::NoPairing);
    }
    let mut images: Vec<Option<Block>> = vec![None; d.blocks.len()];
    let mut residual = Vec::new();
    for (a, b) in matching.edges() {
        let (t1, t2) = (&d.blocks[a.index()], &d.blocks[b.index()]);
        let s = *t1.vertices().iter().find(|&&x| t2.contains_vertex(x)).expect("paired triangles meet");
        let rest = |t: &Block| -> (Vertex, Vertex) {
            let r: Vec<Vertex> = t.vertices().iter().copied().filter(|&x| x != s).collect();
            (r[0], r[1])
        };
        let (p, q) = rest(t1);
        let (c, e) = rest(t2);
        images[a.index()] = Some(Block::p3(s, p, q).expect("distinct"));
        images[b.index()] = Some(Block::p3(s, c, e).expect("distinct"));
        residual.push(Block::p3(q, s, e).expect("distinct"));
    }
    residual.sort();
    let images = images.into_iter().map(|b| b.expect("perfect matching")).collect();
    Ok(assemble_direct(d, images, residual, &d.vertices()))
}

fn four_cycles(d: &Design) -> Result<DownLinkCertificate, DownlinkError> {
    let x = d.vertices().into_iter().next().unwrap_or(0);
    let avoid = BTreeSet::from([x]);
    let mut images = Vec::new();
    let mut residual = Vec::new();
    for b in &d.blocks {
        let image = pattern_copies(&b.graph(), PatternKind::P3, &avoid)[0].clone();
        if !b.contains_vertex(x) {
            residual.push(complement_p3(b, &image).expect("a 4-cycle minus a P3 is a P3"));
        }
        images.push(image);
    }
    residual.sort();
    let target: BTreeSet<Vertex> = d.vertices().into_iter().filter(|&y| y != x).collect();
    Ok(assemble_direct(d, images, residual, &target))
}

fn pentagons(d: &Design) -> Result<DownLinkCertificate, DownlinkError> {
    let counts = d.pair_counts();
    let target_without = |x: Vertex| -> BTreeSet<Vertex> { d.vertices().into_iter().filter(|&y| y != x).collect() };
    if let Some((&(x, y), _)) = counts.iter().find(|(_, &c)| c == 1) {
        let candidates = avoiding_candidates(d, &BTreeSet::from([x, y]))?;
        return assemble_with_repair(d, &candidates, &target_without(x));
    }
    if counts.values().any(|&c| c != 2) {
        return Err(DownlinkError::Precondition("pair counts are neither 1 somewhere nor 2 everywhere".into()));
    }
    let (x, y) = {
        let mut vs = d.vertices().into_iter();
        (vs.next().unwrap_or(0), vs.next().unwrap_or(1))
    };
    let avoid_both = BTreeSet::from([x, y]);
    let avoid_x = BTreeSet::from([x]);
    let candidates: Vec<Vec<Block>> = d
        .blocks
        .iter()
        .map(|b| {
            let both = pattern_copies(&b.graph(), PatternKind::P3, &avoid_both);
            if both.is_empty() {
                // (x,a,b,y,c): the only path avoiding x through y is [a,b,y]
                pattern_copies(&b.graph(), PatternKind::P3, &avoid_x)
                    .into_iter()
                    .filter(|p| p.contains_vertex(y))
                    .collect()
            } else {
                both
            }
        })
        .collect();
    assemble_with_repair(d, &candidates, &target_without(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::verify_downlink;
    use crate::generators::{fixture_design, steiner_triple_system};
    use crate::graph::GraphSpec;
    use crate::oracle::{search_decomposition, DEFAULT_BUDGET};

    #[test]
    fn sts9_and_sts13_keep_their_order() {
        for v in [9, 13] {
            let c = downlink_cycle(&steiner_triple_system(v).unwrap()).unwrap();
            assert_eq!(c.target_order(), v as usize);
            assert!(verify_downlink(&c).is_valid());
        }
    }

    #[test]
    fn sts7_pads() {
        let c = downlink_cycle(&steiner_triple_system(7).unwrap()).unwrap();
        assert_eq!(c.target_order(), 8);
    }

    #[test]
    fn c4_drops_one_vertex() {
        let d = search_decomposition(&GraphSpec::complete(9), PatternKind::Cycle(4), DEFAULT_BUDGET).found().unwrap();
        let c = downlink_cycle(&d).unwrap();
        assert_eq!(c.target_order(), 8);
        assert!(verify_downlink(&c).is_valid());
    }

    #[test]
    fn c5_generic_route_on_eleven_points() {
        let d = fixture_design("c5-k11-cyclic").unwrap();
        let c = downlink_cycle(&d).unwrap();
        assert_eq!(c.target_order(), 12);
        assert!(verify_downlink(&c).is_valid());
    }

    #[test]
    fn c5_on_five_points_is_a_pentagon_system() {
        let d = search_decomposition(&GraphSpec::complete(5), PatternKind::Cycle(5), 1000).found().unwrap();
        assert!(d.pair_counts().values().all(|&c| c == 2));
        let c = downlink_cycle(&d).unwrap();
        assert_eq!(c.target_order(), 4);
        assert!(verify_downlink(&c).is_valid());
    }
}

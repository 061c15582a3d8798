//! Checks written against plain edge lists, independent of the library's
//! own verifiers.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use designlink::design::{Design, DownLinkCertificate};
use designlink::graph::{Block, GraphSpec, PatternKind};

pub type Pair = (u32, u32);

pub fn pair(a: u32, b: u32) -> Pair {
    (a.min(b), a.max(b))
}

/// Edges of a block read straight from its vertex list.
pub fn block_edges(b: &Block) -> Vec<Pair> {
    let v = b.vertices();
    match b.kind() {
        PatternKind::Path(_) => v.windows(2).map(|w| pair(w[0], w[1])).collect(),
        PatternKind::Cycle(k) => (0..k).map(|i| pair(v[i], v[(i + 1) % k])).collect(),
        PatternKind::Star(_) => v[1..].iter().map(|&x| pair(v[0], x)).collect(),
        // [a,b,c⋈d]: triangle abc with the pendant edge cd
        PatternKind::Kite => vec![pair(v[2], v[0]), pair(v[2], v[1]), pair(v[2], v[3]), pair(v[0], v[1])],
        PatternKind::Complete(_) => {
            let mut out = Vec::new();
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    out.push(pair(v[i], v[j]));
                }
            }
            out
        }
    }
}

pub fn host_edges(host: &GraphSpec) -> BTreeSet<Pair> {
    let g = host.build().expect("host builds");
    g.edges().map(|e| pair(e.low(), e.high())).collect()
}

pub fn complete_edges(vertices: &[u32]) -> BTreeSet<Pair> {
    let mut out = BTreeSet::new();
    for (i, &a) in vertices.iter().enumerate() {
        for &b in &vertices[i + 1..] {
            out.insert(pair(a, b));
        }
    }
    out
}

fn pattern_ok(b: &Block, kind: PatternKind) -> bool {
    let v = b.vertices();
    let distinct: BTreeSet<u32> = v.iter().copied().collect();
    b.kind() == kind && distinct.len() == v.len() && v.len() == kind.vertex_count()
}

/// Blocks partition the host edges.
pub fn is_design(d: &Design) -> bool {
    let host = host_edges(&d.host);
    let mut seen = BTreeSet::new();
    for b in &d.blocks {
        if !pattern_ok(b, d.pattern) {
            return false;
        }
        for e in block_edges(b) {
            if !host.contains(&e) || !seen.insert(e) {
                return false;
            }
        }
    }
    seen == host
}

/// Both designs valid, the map injective and each image inside its block.
pub fn is_downlink(c: &DownLinkCertificate) -> bool {
    if !is_design(&c.source) || !is_design(&c.target) || c.mapping.len() != c.source.blocks.len() {
        return false;
    }
    let images: BTreeSet<usize> = c.mapping.iter().copied().collect();
    if images.len() != c.mapping.len() {
        return false;
    }
    c.mapping.iter().zip(&c.source.blocks).all(|(&j, b)| {
        let Some(image) = c.target.blocks.get(j) else { return false };
        let inside: BTreeSet<Pair> = block_edges(b).into_iter().collect();
        block_edges(image).iter().all(|e| inside.contains(e))
    })
}

/// `(v−1)·sqrt(|E'|/|E|)`.
pub fn lower_bound(v: usize, edges: usize, target_edges: usize) -> f64 {
    (v as f64 - 1.0) * (target_edges as f64 / edges as f64).sqrt()
}

pub fn target_order_ok(c: &DownLinkCertificate) -> bool {
    let n = c.target.order();
    let v = c.source.order();
    n % 4 <= 1 && n as f64 > lower_bound(v, c.source.pattern.edge_count(), 2)
}

/// Degrees of `x` in the blocks containing it.
pub fn degrees_of(d: &Design, x: u32) -> Vec<usize> {
    d.blocks
        .iter()
        .filter_map(|b| {
            let n = block_edges(b).iter().filter(|e| e.0 == x || e.1 == x).count();
            (n > 0).then_some(n)
        })
        .collect()
}

/// A graph given as edge pairs, checked against a `P3` partition.
pub fn is_p3_partition(edges: &BTreeSet<Pair>, paths: &[Block], leftover: Option<Pair>) -> bool {
    let mut seen = BTreeSet::new();
    for p in paths {
        if !pattern_ok(p, PatternKind::P3) {
            return false;
        }
        for e in block_edges(p) {
            if !edges.contains(&e) || !seen.insert(e) {
                return false;
            }
        }
    }
    if let Some(e) = leftover {
        if !edges.contains(&e) || !seen.insert(e) {
            return false;
        }
    }
    seen == *edges && leftover.is_some() == (edges.len() % 2 == 1)
}

/// Simple graphs on `0..n` as adjacency bitmasks, one per isomorphism class.
pub fn graph_classes(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut classes: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    for g in graph_classes(n - 1) {
        for nbrs in 0u32..(1 << (n - 1)) {
            let mut adj = g.clone();
            for (i, a) in adj.iter_mut().enumerate() {
                if nbrs >> i & 1 == 1 {
                    *a |= 1 << (n - 1);
                }
            }
            adj.push(nbrs);
            classes.entry(canonical(&adj)).or_insert(adj);
        }
    }
    classes.into_values().collect()
}

/// Minimum relabelled adjacency over labellings that sort vertices by
/// (degree, sorted neighbour degrees).
fn canonical(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let key = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| deg[u]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut groups: BTreeMap<(u32, Vec<u32>), Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        groups.entry(key(v)).or_default().push(v);
    }
    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    let mut best: Option<Vec<u32>> = None;
    let mut order = Vec::with_capacity(n);
    fill(&groups, 0, &mut order, &mut |order| {
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut out = vec![0u32; n];
        for v in 0..n {
            for u in 0..n {
                if adj[v] >> u & 1 == 1 {
                    out[pos[v]] |= 1 << pos[u];
                }
            }
        }
        if best.as_ref().map_or(true, |b| out < *b) {
            best = Some(out);
        }
    });
    best.expect("at least one labelling")
}

fn fill(groups: &[Vec<usize>], g: usize, order: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let Some(group) = groups.get(g) else {
        f(order);
        return;
    };
    let mut items = group.clone();
    permute(&mut items, 0, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        fill(groups, g + 1, order, f);
        order.truncate(len);
    });
}

fn permute(items: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == items.len() {
        f(items);
        return;
    }
    for j in i..items.len() {
        items.swap(i, j);
        permute(items, i + 1, f);
        items.swap(i, j);
    }
}

pub fn mask_edges(adj: &[u32]) -> BTreeSet<Pair> {
    let mut out = BTreeSet::new();
    for (v, a) in adj.iter().enumerate() {
        for u in v + 1..adj.len() {
            if a >> u & 1 == 1 {
                out.insert((v as u32, u as u32));
            }
        }
    }
    out
}

pub fn is_connected(adj: &[u32]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = 1u32;
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        for u in 0..adj.len() {
            if adj[v] >> u & 1 == 1 && seen >> u & 1 == 0 {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen.count_ones() as usize == adj.len()
}

use std::collections::BTreeSet;

use super::{Block, Edge, Graph, PatternKind, Vertex};

/// True iff every edge of `b` is an edge of `host`.
pub fn contains_block(host: &Graph, b: &Block) -> bool {
    b.edges().into_iter().all(|e| host.has_edge(e))
}

/// Every copy of `kind` inside `host` that avoids `forbidden`, canonical and
/// sorted.
pub fn pattern_copies(host: &Graph, kind: PatternKind, forbidden: &BTreeSet<Vertex>) -> Vec<Block> {
    if kind.validate().is_err() {
        return Vec::new();
    }
    let allowed: Vec<Vertex> = host.vertices().filter(|v| !forbidden.contains(v)).collect();
    let ok = |v: Vertex| !forbidden.contains(&v);
    let mut out = Vec::new();
    match kind {
        PatternKind::Path(k) => {
            for &s in &allowed {
                let mut path = vec![s];
                extend_paths(host, &ok, k, &mut path, &mut |p| {
                    if p[0] < p[k - 1] {
                        out.push(Block::new(kind, p.to_vec()).expect("simple path"));
                    }
                });
            }
        }
        PatternKind::Cycle(k) => {
            for &s in &allowed {
                let mut path = vec![s];
                let above = |v: Vertex| ok(v) && v > s;
                extend_paths(host, &above, k, &mut path, &mut |p| {
                    if p[1] < p[k - 1] && host.has_edge(Edge::new(p[k - 1], s)) {
                        out.push(Block::new(kind, p.to_vec()).expect("simple cycle"));
                    }
                });
            }
        }
        PatternKind::Star(k) => {
            for &c in &allowed {
                let nbrs: Vec<Vertex> = host.neighbors(c).filter(|&v| ok(v)).collect();
                for_each_subset(&nbrs, k, &mut |ext| {
                    out.push(Block::star(c, ext).expect("simple star"));
                });
            }
        }
        PatternKind::Kite => {
            for &c in &allowed {
                let nbrs: Vec<Vertex> = host.neighbors(c).filter(|&v| ok(v)).collect();
                for (i, &a) in nbrs.iter().enumerate() {
                    for &b in &nbrs[i + 1..] {
                        if !host.has_edge(Edge::new(a, b)) {
                            continue;
                        }
                        for &d in &nbrs {
                            if d != a && d != b {
                                out.push(Block::kite(a, b, c, d).expect("simple kite"));
                            }
                        }
                    }
                }
            }
        }
        PatternKind::Complete(k) => {
            let mut clique = Vec::new();
            extend_cliques(host, &allowed, k, 0, &mut clique, &mut |c| {
                out.push(Block::new(kind, c.to_vec()).expect("clique"));
            });
        }
    }
    out.sort();
    out.dedup();
    out
}

fn extend_paths(
    host: &Graph,
    ok: &dyn Fn(Vertex) -> bool,
    k: usize,
    path: &mut Vec<Vertex>,
    emit: &mut dyn FnMut(&[Vertex]),
) {
    if path.len() == k {
        emit(path);
        return;
    }
    let last = *path.last().expect("non-empty path");
    let next: Vec<Vertex> = host.neighbors(last).filter(|&w| ok(w) && !path.contains(&w)).collect();
    for w in next {
        path.push(w);
        extend_paths(host, ok, k, path, emit);
        path.pop();
    }
}

fn extend_cliques(
    host: &Graph,
    allowed: &[Vertex],
    k: usize,
    from: usize,
    clique: &mut Vec<Vertex>,
    emit: &mut dyn FnMut(&[Vertex]),
) {
    if clique.len() == k {
        emit(clique);
        return;
    }
    for i in from..allowed.len() {
        let v = allowed[i];
        if clique.iter().all(|&u| host.has_edge(Edge::new(u, v))) {
            clique.push(v);
            extend_cliques(host, allowed, k, i + 1, clique, emit);
            clique.pop();
        }
    }
}

/// Calls `f` on every `k`-subset of `items`, in lexicographic order.
pub(crate) fn for_each_subset<T: Copy>(items: &[T], k: usize, f: &mut dyn FnMut(&[T])) {
    fn rec<T: Copy>(items: &[T], k: usize, from: usize, cur: &mut Vec<T>, f: &mut dyn FnMut(&[T])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in from..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

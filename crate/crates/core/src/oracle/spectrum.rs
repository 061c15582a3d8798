//! Least reachable `P3` orders by exhaustive search.

use std::collections::{BTreeMap, BTreeSet};

use crate::design::{
    eta1_lower_bound, p3_admissible, Design, DownLinkCertificate, SpectrumMode, SpectrumReport, Verdict,
};
use crate::graph::{pattern_copies, Block, Edge, Graph, GraphSpec, PatternKind, Vertex};

use super::{search_downlink, ExactCover, Exhaustion, SearchOutcome};

/// Candidate target orders: admissible, above the counting bound, at most `v + 3`.
fn candidates(v: usize, kind: PatternKind) -> (f64, Vec<usize>) {
    let bound = eta1_lower_bound(v.max(2), kind.edge_count(), 2).unwrap_or(0.0);
    let list = (3..=v + 3).filter(|&n| p3_admissible(n) && n as f64 > bound).collect();
    (bound, list)
}

/// A design of order `v` together with a down-link to order `n`, found by
/// one joint exact cover. By symmetry of `K_v` the dropped vertices are the
/// largest labels and new vertices take labels from `v` up.
pub fn search_design_with_downlink(
    v: usize,
    kind: PatternKind,
    n: usize,
    budget: &mut u64,
) -> SearchOutcome<DownLinkCertificate> {
    let blocks = v * (v - 1) / 2 / kind.edge_count();
    if v * (v - 1) / 2 % kind.edge_count() != 0 || blocks > n * (n - 1) / 4 {
        return SearchOutcome::None;
    }
    let kv = Graph::complete_on(0..v as Vertex);
    let target: Vec<Vertex> = (0..v.min(n) as Vertex).chain(v as Vertex..n.max(v) as Vertex).collect();
    let kt = Graph::complete_on(target.iter().copied());
    let dropped: BTreeSet<Vertex> = (n.min(v) as Vertex..v as Vertex).collect();

    let src: BTreeMap<Edge, usize> = kv.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let tgt: BTreeMap<Edge, usize> = kt.edges().enumerate().map(|(i, e)| (e, i + src.len())).collect();
    let mut x = ExactCover::new(src.len() + tgt.len(), 0);
    let mut options: Vec<(Option<Block>, Block)> = Vec::new();
    for b in pattern_copies(&kv, kind, &BTreeSet::new()) {
        for p in pattern_copies(&b.graph(), PatternKind::P3, &dropped) {
            let items: Vec<usize> =
                b.edges().iter().map(|e| src[e]).chain(p.edges().iter().map(|e| tgt[e])).collect();
            x.add_option(&items);
            options.push((Some(b.clone()), p));
        }
    }
    for p in pattern_copies(&kt, PatternKind::P3, &BTreeSet::new()) {
        x.add_option(&p.edges().iter().map(|e| tgt[e]).collect::<Vec<_>>());
        options.push((None, p));
    }
    match x.first_solution(budget) {
        Ok(Some(rows)) => {
            let mut pairs = Vec::new();
            let mut rest = Vec::new();
            for r in rows {
                match &options[r] {
                    (Some(b), p) => pairs.push((b.clone(), p.clone())),
                    (None, p) => rest.push(p.clone()),
                }
            }
            pairs.sort();
            rest.sort();
            let (source, mut images): (Vec<Block>, Vec<Block>) = pairs.into_iter().unzip();
            let mapping = (0..images.len()).collect();
            images.extend(rest);
            SearchOutcome::Found(DownLinkCertificate {
                source: Design::new(GraphSpec::complete(v as u32), kind, source),
                target: Design::new(GraphSpec::complete_on(target), PatternKind::P3, images),
                mapping,
            })
        }
        Ok(None) => SearchOutcome::None,
        Err(()) => SearchOutcome::Unknown,
    }
}

/// The block list under the relabelling minimising it, among relabellings
/// that order vertices by an isomorphism invariant (the sorted degrees of a
/// vertex across its blocks). Exact: isomorphic designs get equal forms.
pub fn canonical_form(d: &Design) -> Vec<Block> {
    let verts: Vec<Vertex> = d.vertices().into_iter().collect();
    let mut classes: BTreeMap<Vec<usize>, Vec<Vertex>> = BTreeMap::new();
    for &x in &verts {
        let mut profile = d.degree_profile(x);
        profile.sort_unstable();
        classes.entry(profile).or_default().push(x);
    }
    let groups: Vec<Vec<Vertex>> = classes.into_values().collect();
    let mut best: Option<Vec<Block>> = None;
    let mut assignment: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    permute_groups(&groups, 0, 0, &mut assignment, &mut |map| {
        let mut blocks: Vec<Block> =
            d.blocks.iter().map(|b| b.relabel(|x| map[&x]).expect("bijective relabelling")).collect();
        blocks.sort();
        if best.as_ref().map_or(true, |b| blocks < *b) {
            best = Some(blocks);
        }
    });
    best.unwrap_or_default()
}

fn permute_groups(
    groups: &[Vec<Vertex>],
    g: usize,
    next: Vertex,
    map: &mut BTreeMap<Vertex, Vertex>,
    f: &mut dyn FnMut(&BTreeMap<Vertex, Vertex>),
) {
    let Some(group) = groups.get(g) else {
        f(map);
        return;
    };
    let mut order = group.clone();
    heap_permutations(&mut order, group.len(), &mut |perm| {
        for (i, &x) in perm.iter().enumerate() {
            map.insert(x, next + i as Vertex);
        }
        permute_groups(groups, g + 1, next + perm.len() as Vertex, map, f);
    });
}

fn heap_permutations(items: &mut Vec<Vertex>, k: usize, f: &mut dyn FnMut(&[Vertex])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(items, k - 1, f);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    heap_permutations(items, k - 1, f);
}

/// All `(K_v, kind)`-designs up to isomorphism, or `None` when the budget
/// runs out.
pub fn enumerate_designs(v: usize, kind: PatternKind, budget: &mut u64) -> Option<Vec<Design>> {
    let kv = Graph::complete_on(0..v as Vertex);
    if kv.edge_count() % kind.edge_count() != 0 {
        return Some(Vec::new());
    }
    let copies = pattern_copies(&kv, kind, &BTreeSet::new());
    let index: BTreeMap<Edge, usize> = kv.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let mut x = ExactCover::new(index.len(), 0);
    for b in &copies {
        x.add_option(&b.edges().iter().map(|e| index[e]).collect::<Vec<_>>());
    }
    let mut seen: BTreeMap<Vec<Block>, Design> = BTreeMap::new();
    let status = x.for_each_solution(budget, &mut |rows| {
        let mut blocks: Vec<Block> = rows.iter().map(|&r| copies[r].clone()).collect();
        blocks.sort();
        let d = Design::new(GraphSpec::complete(v as u32), kind, blocks);
        seen.entry(canonical_form(&d)).or_insert(d);
        true
    });
    (status == Exhaustion::Complete).then(|| seen.into_values().collect())
}

/// `η1` (mode `some`) or `η2` (mode `every`) for `(K_v, kind)` by search.
///
/// Candidates run upwards from the counting bound; once an order is reached
/// every larger admissible order is too, by trivial embedding.
pub fn exact_eta(v: usize, kind: PatternKind, mode: SpectrumMode, budget: u64) -> SpectrumReport {
    let (lower_bound, cands) = candidates(v, kind);
    let mut budget = budget;
    let verdicts: Vec<(usize, Verdict)> = match mode {
        SpectrumMode::Some => {
            let mut out = Vec::new();
            let mut reached = false;
            for &n in &cands {
                let verdict = if reached {
                    Verdict::Reachable
                } else {
                    match search_design_with_downlink(v, kind, n, &mut budget) {
                        SearchOutcome::Found(_) => {
                            reached = true;
                            Verdict::Reachable
                        }
                        SearchOutcome::None => Verdict::Unreachable,
                        SearchOutcome::Unknown => Verdict::Unknown,
                    }
                };
                out.push((n, verdict));
            }
            out
        }
        SpectrumMode::Every => every_verdicts(v, kind, &cands, &mut budget),
    };
    let eta = verdicts
        .iter()
        .take_while(|(_, v)| *v != Verdict::Unknown)
        .find(|(_, v)| *v == Verdict::Reachable)
        .map(|(n, _)| *n);
    SpectrumReport { v, pattern: kind, mode, lower_bound, verdicts, eta }
}

fn every_verdicts(v: usize, kind: PatternKind, cands: &[usize], budget: &mut u64) -> Vec<(usize, Verdict)> {
    let Some(designs) = enumerate_designs(v, kind, budget) else {
        return cands.iter().map(|&n| (n, Verdict::Unknown)).collect();
    };
    // per design: outcome at each candidate until the first success
    let per_design: Vec<Vec<Verdict>> = designs
        .iter()
        .map(|d| {
            let mut row = Vec::new();
            let mut reached = false;
            for &n in cands {
                let verdict = if reached {
                    Verdict::Reachable
                } else {
                    let r = search_downlink(d, n, *budget);
                    match r {
                        SearchOutcome::Found(_) => {
                            reached = true;
                            Verdict::Reachable
                        }
                        SearchOutcome::None => Verdict::Unreachable,
                        SearchOutcome::Unknown => Verdict::Unknown,
                    }
                };
                row.push(verdict);
            }
            row
        })
        .collect();
    cands
        .iter()
        .enumerate()
        .map(|(i, &n)| {
            let column = per_design.iter().map(|row| row[i]);
            let verdict = if designs.is_empty() {
                Verdict::Unknown
            } else if column.clone().any(|x| x == Verdict::Unreachable) {
                Verdict::Unreachable
            } else if column.clone().all(|x| x == Verdict::Reachable) {
                Verdict::Reachable
            } else {
                Verdict::Unknown
            };
            (n, verdict)
        })
        .collect()
}

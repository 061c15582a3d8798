//! Exhaustive search at desk scale: decompositions, down-links and the
//! least reachable target orders.
//!
//! Every search takes a node budget. Running out of budget yields
//! [`SearchOutcome::Unknown`], never a claim of nonexistence.

mod dlx;
mod spectrum;

use std::collections::{BTreeMap, BTreeSet};

use crate::design::{p3_admissible, verify_downlink, Design, DownLinkCertificate};
use crate::graph::{pattern_copies, Block, Edge, Graph, GraphSpec, PatternKind, Vertex};

pub use dlx::{ExactCover, Exhaustion};
pub use spectrum::{enumerate_designs, exact_eta, canonical_form};

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// Proven not to exist.
    None,
    /// The budget ran out first.
    Unknown,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Counting obstructions: the edge count and every vertex degree must be
/// compatible with the pattern.
fn counting_rules_out(g: &Graph, kind: PatternKind) -> bool {
    if g.edge_count() % kind.edge_count() != 0 {
        return true;
    }
    let step = kind.degrees().into_iter().fold(0, gcd);
    g.vertices().any(|v| g.degree(v) % step != 0)
}

/// A decomposition of `host` into copies of `kind`.
pub fn search_decomposition(host: &GraphSpec, kind: PatternKind, budget: u64) -> SearchOutcome<Design> {
    search_decomposition_filtered(host, kind, |_| true, budget)
}

/// As [`search_decomposition`], using only the copies accepted by `keep`.
pub fn search_decomposition_filtered(
    host: &GraphSpec,
    kind: PatternKind,
    keep: impl Fn(&Block) -> bool,
    budget: u64,
) -> SearchOutcome<Design> {
    let Ok(g) = host.build() else { return SearchOutcome::None };
    if kind.validate().is_err() || counting_rules_out(&g, kind) {
        return SearchOutcome::None;
    }
    let copies: Vec<Block> = pattern_copies(&g, kind, &BTreeSet::new()).into_iter().filter(|b| keep(b)).collect();
    let (mut x, _) = edge_cover(&g, &copies);
    let mut budget = budget;
    match x.first_solution(&mut budget) {
        Ok(Some(rows)) => {
            let mut blocks: Vec<Block> = rows.into_iter().map(|r| copies[r].clone()).collect();
            blocks.sort();
            SearchOutcome::Found(Design::new(host.clone(), kind, blocks))
        }
        Ok(None) => SearchOutcome::None,
        Err(()) => SearchOutcome::Unknown,
    }
}

/// Exact cover instance with one primary item per edge of `g`.
fn edge_cover(g: &Graph, options: &[Block]) -> (ExactCover, BTreeMap<Edge, usize>) {
    let index: BTreeMap<Edge, usize> = g.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let mut x = ExactCover::new(index.len(), 0);
    for b in options {
        let items: Vec<usize> = b.edges().iter().map(|e| index[e]).collect();
        x.add_option(&items);
    }
    (x, index)
}

/// Join search for a down-link from `d` to a `P3`-design on `target`.
///
/// Items: one per source block (its image) and one per edge of `K_target`.
/// Options: an image `P3` inside a block, or a free `P3` of `K_target`.
fn downlink_on_target(
    d: &Design,
    target: &[Vertex],
    candidates: &[Vec<Block>],
    budget: &mut u64,
) -> SearchOutcome<DownLinkCertificate> {
    let k = Graph::complete_on(target.iter().copied());
    let index: BTreeMap<Edge, usize> = k.edges().enumerate().map(|(i, e)| (e, i)).collect();
    let nb = d.blocks.len();
    let mut x = ExactCover::new(nb + index.len(), 0);
    let mut options: Vec<(Option<usize>, Block)> = Vec::new();
    for (i, cands) in candidates.iter().enumerate() {
        for p in cands {
            let mut items = vec![i];
            items.extend(p.edges().iter().map(|e| nb + index[e]));
            x.add_option(&items);
            options.push((Some(i), p.clone()));
        }
    }
    for p in pattern_copies(&k, PatternKind::P3, &BTreeSet::new()) {
        let items: Vec<usize> = p.edges().iter().map(|e| nb + index[e]).collect();
        x.add_option(&items);
        options.push((None, p));
    }
    match x.first_solution(budget) {
        Ok(Some(rows)) => {
            let mut images: Vec<Option<Block>> = vec![None; nb];
            let mut rest = Vec::new();
            for r in rows {
                match &options[r] {
                    (Some(i), p) => images[*i] = Some(p.clone()),
                    (None, p) => rest.push(p.clone()),
                }
            }
            rest.sort();
            let mut blocks: Vec<Block> = images.into_iter().map(|b| b.expect("every block has an image")).collect();
            blocks.extend(rest);
            let cert = DownLinkCertificate {
                source: d.clone(),
                target: Design::new(GraphSpec::complete_on(target.iter().copied()), PatternKind::P3, blocks),
                mapping: (0..nb).collect(),
            };
            debug_assert!(verify_downlink(&cert).is_valid());
            SearchOutcome::Found(cert)
        }
        Ok(None) => SearchOutcome::None,
        Err(()) => SearchOutcome::Unknown,
    }
}

/// A down-link from `d` to some `P3`-design of order `n`.
///
/// The target keeps all source vertices but a dropped set `D` (tried in
/// increasing lexicographic order) and adds new labels above the source
/// labels when `n` exceeds the source order.
pub fn search_downlink(d: &Design, n: usize, budget: u64) -> SearchOutcome<DownLinkCertificate> {
    let verts: Vec<Vertex> = d.vertices().into_iter().collect();
    let v = verts.len();
    if !p3_admissible(n) || n < 3 || d.blocks.len() > n * (n - 1) / 4 {
        return SearchOutcome::None;
    }
    let drop = v.saturating_sub(n);
    let fresh: Vec<Vertex> = {
        let top = verts.last().map_or(0, |&m| m + 1);
        (top..top + n.saturating_sub(v) as Vertex).collect()
    };
    let mut budget = budget;
    let mut unknown = false;
    let mut result = SearchOutcome::None;
    crate::graph::for_each_subset(&verts, drop, &mut |dropped: &[Vertex]| {
        if result.is_found() {
            return;
        }
        let forbidden: BTreeSet<Vertex> = dropped.iter().copied().collect();
        let candidates: Vec<Vec<Block>> =
            d.blocks.iter().map(|b| pattern_copies(&b.graph(), PatternKind::P3, &forbidden)).collect();
        if candidates.iter().any(Vec::is_empty) {
            return;
        }
        let target: Vec<Vertex> =
            verts.iter().copied().filter(|x| !forbidden.contains(x)).chain(fresh.iter().copied()).collect();
        match downlink_on_target(d, &target, &candidates, &mut budget) {
            SearchOutcome::Found(c) => result = SearchOutcome::Found(c),
            SearchOutcome::Unknown => unknown = true,
            SearchOutcome::None => {}
        }
    });
    match result {
        SearchOutcome::None if unknown => SearchOutcome::Unknown,
        r => r,
    }
}

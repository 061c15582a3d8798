//! Star designs as orientations of `K_v` whose out-degrees are multiples of `k`.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::design::{admissible_order, verify_design, Design};
use crate::graph::{Block, Edge, GraphSpec, PatternKind, Vertex};
use crate::oracle::{search_decomposition_filtered, SearchOutcome};

use super::GeneratorError;

/// Requested multiset of star centres.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarProfile {
    Any,
    /// Vertex `0` centres no star and every other vertex centres one.
    OneNonCenter,
    /// As above, and vertex `1` centres exactly one star.
    OneNonCenterOneSingle,
}

const ORACLE_LIMIT: u32 = 12;
const ORACLE_BUDGET: u64 = 2_000_000;

pub fn star_design(v: u32, k: usize, profile: StarProfile) -> Result<Design, GeneratorError> {
    let pattern = PatternKind::Star(k);
    if k == 0 || !admissible_order(pattern, v as usize) {
        return Err(GeneratorError::Unsupported { what: "star_design", v: v as usize });
    }
    let blocks_total = v as usize * (v as usize - 1) / (2 * k);
    let counts = star_counts(v as usize, blocks_total, profile);
    let scores: Vec<usize> = counts.iter().map(|c| c * k).collect();
    if let Some(out) = orient(v as usize, &scores) {
        let mut blocks = Vec::with_capacity(blocks_total);
        for (c, heads) in out.iter().enumerate() {
            for chunk in heads.chunks(k) {
                blocks.push(Block::star(c as Vertex, chunk)?);
            }
        }
        let d = Design::new(GraphSpec::complete(v), pattern, blocks);
        debug_assert!(verify_design(&d).is_valid());
        return Ok(d);
    }
    if v <= ORACLE_LIMIT {
        let avoid: BTreeSet<Vertex> =
            if profile == StarProfile::Any { BTreeSet::new() } else { BTreeSet::from([0]) };
        let keep = |b: &Block| b.center().map_or(true, |c| !avoid.contains(&c));
        if let SearchOutcome::Found(d) =
            search_decomposition_filtered(&GraphSpec::complete(v), pattern, keep, ORACLE_BUDGET)
        {
            if profile_holds(&d, profile) {
                return Ok(d);
            }
        }
    }
    Err(GeneratorError::InfeasibleProfile { v: v as usize, k })
}

/// Counts spread as evenly as possible over the free vertices; when there
/// are fewer stars than free vertices the largest labels get none.
fn star_counts(v: usize, b: usize, profile: StarProfile) -> Vec<usize> {
    let mut counts = vec![0; v];
    let (pinned, mut left) = match profile {
        StarProfile::Any => (0, b),
        StarProfile::OneNonCenter => (1, b),
        StarProfile::OneNonCenterOneSingle => {
            counts[1] = 1;
            (2, b.saturating_sub(1))
        }
    };
    let free = v - pinned;
    for i in (pinned..v).rev() {
        let slots = i - pinned + 1;
        let c = left / slots;
        counts[i] = c;
        left -= c;
    }
    debug_assert_eq!(left, 0);
    debug_assert!(free > 0);
    counts
}

/// Orientation of `K_n` with the given out-degrees, as sorted out-neighbour
/// lists. Starts from `i → j` for `i < j` and reverses directed paths from
/// surplus to deficit vertices; `None` when Landau's condition fails.
fn orient(n: usize, scores: &[usize]) -> Option<Vec<Vec<Vertex>>> {
    let mut sorted = scores.to_vec();
    sorted.sort_unstable();
    let mut sum = 0;
    for (j, s) in sorted.iter().enumerate() {
        sum += s;
        if sum < (j + 1) * j / 2 {
            return None;
        }
    }
    if sum != n * (n - 1) / 2 {
        return None;
    }

    let mut out: Vec<BTreeSet<usize>> = (0..n).map(|i| (i + 1..n).collect()).collect();
    loop {
        let Some(u) = (0..n).find(|&i| out[i].len() > scores[i]) else { break };
        let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
        let mut queue = VecDeque::from([u]);
        let mut seen = vec![false; n];
        seen[u] = true;
        let mut end = None;
        while let Some(x) = queue.pop_front() {
            if out[x].len() < scores[x] {
                end = Some(x);
                break;
            }
            for &y in &out[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev.insert(y, x);
                    queue.push_back(y);
                }
            }
        }
        // Landau guarantees a deficit vertex is reachable
        let mut y = end?;
        while let Some(&x) = prev.get(&y) {
            out[x].remove(&y);
            out[y].insert(x);
            y = x;
        }
    }
    Some(out.into_iter().map(|s| s.into_iter().map(|x| x as Vertex).collect()).collect())
}

/// Number of stars centred at each vertex of the host.
pub fn center_counts(d: &Design) -> BTreeMap<Vertex, usize> {
    let mut counts: BTreeMap<Vertex, usize> = d.vertices().into_iter().map(|v| (v, 0)).collect();
    for b in &d.blocks {
        if let Some(c) = b.center() {
            *counts.entry(c).or_insert(0) += 1;
        }
    }
    counts
}

pub fn profile_holds(d: &Design, profile: StarProfile) -> bool {
    let counts = center_counts(d);
    let zeros = counts.values().filter(|&&c| c == 0).count();
    match profile {
        StarProfile::Any => true,
        StarProfile::OneNonCenter => zeros == 1,
        StarProfile::OneNonCenterOneSingle => zeros == 1 && counts.values().any(|&c| c == 1),
    }
}

/// Move a star onto the vertex that centres none, so that every vertex
/// centres at least one star. Designs without a non-centre vertex are
/// returned unchanged.
pub fn recenter_star_design(d: &Design) -> Result<Design, GeneratorError> {
    let PatternKind::Star(k) = d.pattern else {
        return Err(GeneratorError::Precondition("recentering needs a star design".into()));
    };
    if !verify_design(d).is_valid() {
        return Err(GeneratorError::Precondition("input design does not verify".into()));
    }
    let counts = center_counts(d);
    let Some((&x, _)) = counts.iter().find(|(_, &c)| c == 0) else {
        return Ok(d.clone());
    };
    if d.order() <= 2 * k {
        return Err(GeneratorError::Precondition(format!(
            "order {} is not above 2k = {}",
            d.order(),
            2 * k
        )));
    }
    // y: a vertex centring at least two stars, one of which contains x
    let found = counts.iter().filter(|(_, &c)| c >= 2).find_map(|(&y, _)| {
        d.blocks.iter().position(|b| b.center() == Some(y) && b.contains_vertex(x)).map(|s| (y, s))
    });
    let Some((y, s)) = found else {
        return Err(GeneratorError::Precondition(format!("no vertex with two stars covers {x}")));
    };
    let others: Vec<Vertex> = d.blocks[s].vertices()[1..].iter().copied().filter(|&a| a != x).collect();
    let mut blocks = d.blocks.clone();
    let mut externals = others.clone();
    externals.push(y);
    blocks[s] = Block::star(x, &externals)?;
    for &a in &others {
        let i = blocks
            .iter()
            .position(|b| b.center() == Some(a) && b.edges().contains(&Edge::new(a, x)))
            .ok_or_else(|| GeneratorError::Precondition(format!("edge {a}-{x} is not in a star of {a}")))?;
        let ext: Vec<Vertex> = blocks[i].vertices()[1..].iter().map(|&z| if z == x { y } else { z }).collect();
        blocks[i] = Block::star(a, &ext)?;
    }
    Ok(Design::new(d.host.clone(), d.pattern, blocks))
}

//! Difference families over `Z_p × Z_q` and their development.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{Block, BlockError, PatternKind, Vertex};

/// `Z_p × Z_q`. Element `(a, b)` carries the label `b·p + a`; a cyclic group
/// `Z_n` is `Z_n × Z_1`, so its labels are the residues themselves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductGroup {
    pub p: u32,
    pub q: u32,
}

pub type Element = (u32, u32);

impl ProductGroup {
    pub fn cyclic(n: u32) -> Self {
        ProductGroup { p: n, q: 1 }
    }

    pub fn order(self) -> u32 {
        self.p * self.q
    }

    pub fn elements(self) -> impl Iterator<Item = Element> {
        (0..self.q).flat_map(move |b| (0..self.p).map(move |a| (a, b)))
    }

    /// Reduce signed coordinates into the group.
    pub fn element(self, a: i64, b: i64) -> Element {
        (a.rem_euclid(self.p as i64) as u32, b.rem_euclid(self.q as i64) as u32)
    }

    pub fn add(self, x: Element, y: Element) -> Element {
        ((x.0 + y.0) % self.p, (x.1 + y.1) % self.q)
    }

    pub fn sub(self, x: Element, y: Element) -> Element {
        ((x.0 + self.p - y.0) % self.p, (x.1 + self.q - y.1) % self.q)
    }

    pub fn label(self, x: Element) -> Vertex {
        x.1 * self.p + x.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subgroup {
    Trivial,
    /// `Z_p × {0}`.
    FirstFactor,
}

impl Subgroup {
    pub fn contains(self, x: Element) -> bool {
        match self {
            Subgroup::Trivial => x == (0, 0),
            Subgroup::FirstFactor => x.1 == 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DifferenceError {
    #[error("difference family is invalid: {0:?}")]
    Invalid(DifferenceReport),
    #[error(transparent)]
    Block(#[from] BlockError),
}

/// Elementwise comparison of `ΔF` against `G ∖ H`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DifferenceReport {
    pub missing: Vec<Element>,
    /// Elements produced more than once, with their multiplicity.
    pub repeated: Vec<(Element, usize)>,
    pub in_subgroup: Vec<Element>,
}

impl DifferenceReport {
    pub fn is_valid(&self) -> bool {
        self.missing.is_empty() && self.repeated.is_empty() && self.in_subgroup.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceFamily {
    pub group: ProductGroup,
    pub subgroup: Subgroup,
    pub pattern: PatternKind,
    /// Base blocks in the pattern's vertex encoding.
    pub base: Vec<Vec<Element>>,
}

impl DifferenceFamily {
    /// The list `ΔF` of `x − y` over ordered pairs of adjacent vertices.
    pub fn differences(&self) -> Vec<Element> {
        let mut out = Vec::new();
        for block in &self.base {
            let idx: Vec<Vertex> = (0..block.len() as Vertex).collect();
            for e in self.pattern.edges_of(&idx) {
                let (x, y) = (block[e.low() as usize], block[e.high() as usize]);
                out.push(self.group.sub(x, y));
                out.push(self.group.sub(y, x));
            }
        }
        out
    }

    pub fn validate(&self) -> DifferenceReport {
        let mut counts: BTreeMap<Element, usize> = BTreeMap::new();
        for d in self.differences() {
            *counts.entry(d).or_insert(0) += 1;
        }
        let mut report = DifferenceReport::default();
        for g in self.group.elements() {
            let c = counts.get(&g).copied().unwrap_or(0);
            if self.subgroup.contains(g) {
                if c > 0 {
                    report.in_subgroup.push(g);
                }
            } else if c == 0 {
                report.missing.push(g);
            } else if c > 1 {
                report.repeated.push((g, c));
            }
        }
        report
    }

    /// All translates of the base blocks, base block outermost.
    pub fn develop(&self) -> Result<Vec<Block>, DifferenceError> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(DifferenceError::Invalid(report));
        }
        let mut blocks = Vec::with_capacity(self.base.len() * self.group.order() as usize);
        for base in &self.base {
            for g in self.group.elements() {
                let labels: Vec<Vertex> =
                    base.iter().map(|&x| self.group.label(self.group.add(x, g))).collect();
                blocks.push(Block::new(self.pattern, labels)?);
            }
        }
        Ok(blocks)
    }
}

/// `{[2i−1, 3t+i, 0 ⋈ 2i] : i = 1..t}` over `Z_{8t+1}`.
pub fn kite_cyclic_family(t: u32) -> DifferenceFamily {
    let group = ProductGroup::cyclic(8 * t + 1);
    let base = (1..=t as i64)
        .map(|i| {
            let t = t as i64;
            vec![group.element(2 * i - 1, 0), group.element(3 * t + i, 0), (0, 0), group.element(2 * i, 0)]
        })
        .collect();
    DifferenceFamily { group, subgroup: Subgroup::Trivial, pattern: PatternKind::Kite, base }
}

/// The kite family over `Z_8 × Z_m` relative to `Z_8 × {0}`, `m = 2n+1`:
/// `[(0,0),(0,2i),(2,i) ⋈ (1,0)]` and `[(0,0),(4,i),(1,−i) ⋈ (6,i)]`.
pub fn kite_multipartite_family(m: u32) -> DifferenceFamily {
    let group = ProductGroup { p: 8, q: m };
    let n = (m as i64 - 1) / 2;
    let mut base = Vec::new();
    for i in 1..=n {
        base.push(vec![(0, 0), group.element(0, 2 * i), group.element(2, i), (1, 0)]);
        base.push(vec![(0, 0), group.element(4, i), group.element(1, -i), group.element(6, i)]);
    }
    DifferenceFamily { group, subgroup: Subgroup::FirstFactor, pattern: PatternKind::Kite, base }
}

/// A planar difference set developed into cliques, e.g. `{0,1,4,14,16}` mod 21.
pub fn clique_family(n: u32, base: &[u32]) -> DifferenceFamily {
    let group = ProductGroup::cyclic(n);
    DifferenceFamily {
        group,
        subgroup: Subgroup::Trivial,
        pattern: PatternKind::Complete(base.len()),
        base: vec![base.iter().map(|&x| (x % n, 0)).collect()],
    }
}

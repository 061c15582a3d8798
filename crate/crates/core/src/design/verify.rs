use std::collections::BTreeMap;
use std::fmt;

use crate::graph::{contains_block, Edge, GraphError, PatternKind};

use super::{Design, DownLinkCertificate};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DesignViolation {
    InvalidHost(GraphError),
    WrongPattern { block: usize, found: PatternKind },
    EdgeOutsideHost { block: usize, edge: Edge },
    DuplicateEdge { edge: Edge, first: usize, second: usize },
    Uncovered(Edge),
}

impl fmt::Display for DesignViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DesignViolation::InvalidHost(e) => write!(f, "host graph is invalid: {e}"),
            DesignViolation::WrongPattern { block, found } => {
                write!(f, "block {block} is a {found}, not the design pattern")
            }
            DesignViolation::EdgeOutsideHost { block, edge } => {
                write!(f, "block {block} uses {edge}, which is not a host edge")
            }
            DesignViolation::DuplicateEdge { edge, first, second } => {
                write!(f, "edge {edge} is covered by blocks {first} and {second}")
            }
            DesignViolation::Uncovered(edge) => write!(f, "edge {edge} is not covered"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignReport {
    pub block_count: usize,
    pub violations: Vec<DesignViolation>,
}

impl DesignReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that the blocks partition the host edges. Never fails; problems
/// are listed in the report.
pub fn verify_design(d: &Design) -> DesignReport {
    let mut violations = Vec::new();
    let host = match d.host.build() {
        Ok(g) => Some(g),
        Err(e) => {
            violations.push(DesignViolation::InvalidHost(e));
            None
        }
    };
    let mut owner: BTreeMap<Edge, usize> = BTreeMap::new();
    for (i, b) in d.blocks.iter().enumerate() {
        if b.kind() != d.pattern {
            violations.push(DesignViolation::WrongPattern { block: i, found: b.kind() });
        }
        for e in b.edges() {
            if let Some(h) = &host {
                if !h.has_edge(e) {
                    violations.push(DesignViolation::EdgeOutsideHost { block: i, edge: e });
                }
            }
            if let Some(&first) = owner.get(&e) {
                violations.push(DesignViolation::DuplicateEdge { edge: e, first, second: i });
            } else {
                owner.insert(e, i);
            }
        }
    }
    if let Some(h) = &host {
        violations.extend(h.edges().filter(|e| !owner.contains_key(e)).map(DesignViolation::Uncovered));
    }
    DesignReport { block_count: d.blocks.len(), violations }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinkViolation {
    MappingLength { expected: usize, got: usize },
    TargetOutOfRange { source: usize, target: usize },
    NotInjective { target: usize, first: usize, second: usize },
    NotContained { source: usize, target: usize },
}

impl fmt::Display for LinkViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkViolation::MappingLength { expected, got } => {
                write!(f, "map has {got} entries for {expected} source blocks")
            }
            LinkViolation::TargetOutOfRange { source, target } => {
                write!(f, "source block {source} maps to missing target block {target}")
            }
            LinkViolation::NotInjective { target, first, second } => {
                write!(f, "source blocks {first} and {second} both map to target block {target}")
            }
            LinkViolation::NotContained { source, target } => {
                write!(f, "target block {target} is not a subgraph of source block {source}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub source: DesignReport,
    pub target: DesignReport,
    pub link: Vec<LinkViolation>,
}

impl CertificateReport {
    pub fn is_valid(&self) -> bool {
        self.source.is_valid() && self.target.is_valid() && self.link.is_empty()
    }

    /// All problems as display lines, prefixed by where they occur.
    pub fn messages(&self) -> Vec<String> {
        let mut out: Vec<String> =
            self.source.violations.iter().map(|v| format!("source: {v}")).collect();
        out.extend(self.target.violations.iter().map(|v| format!("target: {v}")));
        out.extend(self.link.iter().map(|v| format!("map: {v}")));
        out
    }
}

pub fn verify_downlink(c: &DownLinkCertificate) -> CertificateReport {
    let source = verify_design(&c.source);
    let target = verify_design(&c.target);
    let mut link = Vec::new();
    if c.mapping.len() != c.source.blocks.len() {
        link.push(LinkViolation::MappingLength { expected: c.source.blocks.len(), got: c.mapping.len() });
    }
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    for (s, &t) in c.mapping.iter().enumerate() {
        let Some(image) = c.target.blocks.get(t) else {
            link.push(LinkViolation::TargetOutOfRange { source: s, target: t });
            continue;
        };
        if let Some(&first) = seen.get(&t) {
            link.push(LinkViolation::NotInjective { target: t, first, second: s });
        } else {
            seen.insert(t, s);
        }
        if let Some(src) = c.source.blocks.get(s) {
            if !contains_block(&src.graph(), image) {
                link.push(LinkViolation::NotContained { source: s, target: t });
            }
        }
    }
    CertificateReport { source, target, link }
}

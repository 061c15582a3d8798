use std::fmt;

use thiserror::Error;

use crate::graph::PatternKind;

/// `P3`-designs exist exactly for `n ≡ 0, 1 (mod 4)`.
pub fn p3_admissible(n: usize) -> bool {
    n % 4 <= 1
}

/// Arithmetic existence conditions for a `(K_v, Γ)`-design.
pub fn admissible_order(pattern: PatternKind, v: usize) -> bool {
    let pairs = v * v.saturating_sub(1);
    match pattern {
        PatternKind::Path(3) => p3_admissible(v),
        PatternKind::Path(2) => true,
        PatternKind::Path(k) => v >= k && pairs % (2 * (k - 1)) == 0,
        PatternKind::Star(k) => v >= 2 * k && pairs % (2 * k) == 0,
        PatternKind::Kite => v > 1 && v % 8 <= 1,
        PatternKind::Cycle(k) => v % 2 == 1 && v >= k && pairs % (2 * k) == 0,
        // necessary conditions only: divisibility of degree and edge count
        PatternKind::Complete(k) => {
            v == k || (v > k && (v - 1) % (k - 1) == 0 && pairs % (k * (k - 1)) == 0)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("edge counts must be positive")]
    ZeroEdges,
    #[error("the sub-pattern has more edges ({sub}) than the pattern ({whole})")]
    NotSubpattern { whole: usize, sub: usize },
    #[error("order must be at least 2")]
    TinyOrder,
}

/// `η1(v; Γ, Γ')` is strictly greater than the returned value.
pub fn eta1_lower_bound(v: usize, gamma_edges: usize, gamma_prime_edges: usize) -> Result<f64, BoundError> {
    if gamma_edges == 0 || gamma_prime_edges == 0 {
        return Err(BoundError::ZeroEdges);
    }
    if gamma_prime_edges > gamma_edges {
        return Err(BoundError::NotSubpattern { whole: gamma_edges, sub: gamma_prime_edges });
    }
    if v < 2 {
        return Err(BoundError::TinyOrder);
    }
    Ok((v - 1) as f64 * (gamma_prime_edges as f64 / gamma_edges as f64).sqrt())
}

/// Admissible `P3` orders `m` with `eta ≤ m ≤ upto`. Any `P3`-design of
/// order `n` embeds trivially in every admissible larger order, so this is
/// the full spectrum once `eta` is known.
pub fn admissible_targets(eta: usize, upto: usize) -> Vec<usize> {
    (eta..=upto).filter(|&m| p3_admissible(m)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpectrumMode {
    /// Some design of order `v` reaches `n`.
    Some,
    /// Every design of order `v` reaches `n`.
    Every,
}

impl fmt::Display for SpectrumMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectrumMode::Some => "some",
            SpectrumMode::Every => "every",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Reachable,
    Unreachable,
    Unknown,
}

/// Which target orders are reachable from designs of order `v`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub v: usize,
    pub pattern: PatternKind,
    pub mode: SpectrumMode,
    pub lower_bound: f64,
    /// Admissible candidate orders, ascending.
    pub verdicts: Vec<(usize, Verdict)>,
    /// The least reachable order, when every smaller candidate is settled.
    pub eta: Option<usize>,
}

impl SpectrumReport {
    pub fn has_unknowns(&self) -> bool {
        self.verdicts.iter().any(|(_, v)| *v == Verdict::Unknown)
    }
}

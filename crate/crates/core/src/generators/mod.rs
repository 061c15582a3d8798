//! Concrete designs with the structural profiles minimal down-links need.

mod difference;
mod fixtures;
mod kite;
mod p3;
mod path;
mod star;
mod sts;

use thiserror::Error;

use crate::design::GlueError;
use crate::graph::BlockError;

pub use difference::{
    clique_family, kite_cyclic_family, kite_multipartite_family, DifferenceError, DifferenceFamily,
    DifferenceReport, Element, ProductGroup, Subgroup,
};
pub use fixtures::{fixture, fixture_certificate, fixture_design, fixture_names, fixture_text};
pub use kite::{kite_cyclic_design, kite_degree2_design, kite_multipartite_design};
pub use p3::p3_design;
pub use path::{is_saturated, p4_pendant_design, p4_pendant_downlink, p4_saturate_design, pendant_vertex};
pub use star::{center_counts, profile_holds, recenter_star_design, star_design, StarProfile};
pub use sts::steiner_triple_system;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("{what} does not support order {v}")]
    Unsupported { what: &'static str, v: usize },
    #[error("no star design of order {v} with k = {k} realises the requested centre profile")]
    InfeasibleProfile { v: usize, k: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("fixture {name}: {reason}")]
    Fixture { name: String, reason: String },
    #[error(transparent)]
    Block(#[from] BlockError),
    #[error(transparent)]
    Difference(#[from] DifferenceError),
    #[error(transparent)]
    Glue(#[from] GlueError),
}

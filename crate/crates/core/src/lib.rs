//! Graph designs, down-links to `P3`-designs, verification and exact search.

pub mod cli;
pub mod design;
pub mod downlinks;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod p3;

//! Split a connected graph into paths on three vertices.

use std::error::Error;

use designlink::graph::Graph;
use designlink::p3::{p3_partition, p3_partition_components};

pub fn run() -> Result<(), Box<dyn Error>> {
    // the Petersen graph: 15 edges, so one edge is left over
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    let petersen = Graph::from_edges(outer.chain(spokes).chain(inner))?;
    let p = p3_partition(&petersen)?;
    println!("{} paths, leftover {:?}", p.paths.len(), p.leftover);
    for path in &p.paths {
        println!("  {path}");
    }

    // two triangles sharing nothing: each component is split on its own
    let g = Graph::from_edges([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])?;
    let parts = p3_partition_components(&g);
    println!("exact: {}, odd components: {}", parts.is_exact(), parts.odd_components().count());
    Ok(())
}

fn main() {
    run().expect("example failed");
}

//! Dense patterns lose vertices: the projective plane of order 4 as K_5-design.

use std::error::Error;

use designlink::design::Design;
use designlink::downlinks::{downlink_general, downlink_reduced};
use designlink::generators::clique_family;
use designlink::graph::{GraphSpec, PatternKind};

pub fn run() -> Result<(), Box<dyn Error>> {
    let lines = clique_family(21, &[0, 1, 4, 14, 16]).develop()?;
    let plane = Design::new(GraphSpec::complete(21), PatternKind::Complete(5), lines);
    let reduced = downlink_reduced(&plane)?;
    let general = downlink_general(&plane)?;
    println!("order 21 -> {} (reduced), {} (general)", reduced.target_order(), general.target_order());
    Ok(())
}

fn main() {
    run().expect("example failed");
}

//! Kite designs: the cyclic family, the degree-2 family and both down-links.

use std::error::Error;

use designlink::design::{verify_design, verify_downlink};
use designlink::downlinks::{degree2_vertex, downlink_kite};
use designlink::generators::{kite_cyclic_design, kite_degree2_design, kite_multipartite_design};

pub fn run() -> Result<(), Box<dyn Error>> {
    for t in 1..=3 {
        let d = kite_degree2_design(8 * t + 1)?;
        let x = degree2_vertex(&d).expect("the construction keeps vertex 0 at degree 2");
        let c = downlink_kite(&d, true)?;
        assert!(verify_downlink(&c).is_valid());
        println!("order {} (x = {x}) -> order {}", d.order(), c.target_order());
    }

    let cyclic = kite_cyclic_design(2)?;
    assert!(degree2_vertex(&cyclic).is_none());
    let c = downlink_kite(&cyclic, false)?;
    println!("cyclic order {} -> order {} by splitting every kite", cyclic.order(), c.target_order());

    let m = kite_multipartite_design(3)?;
    println!("{} kites on {} parts of 8, valid: {}", m.blocks.len(), 3, verify_design(&m).is_valid());
    Ok(())
}

fn main() {
    run().expect("example failed");
}

//! P4-designs with a pendant vertex, glued from small pieces.

use std::error::Error;

use designlink::design::verify_downlink;
use designlink::downlinks::downlink_path;
use designlink::generators::{is_saturated, p4_pendant_downlink, p4_saturate_design, pendant_vertex};

pub fn run() -> Result<(), Box<dyn Error>> {
    for v in [6, 9, 10, 13, 18, 21, 22, 25, 30] {
        let glued = p4_pendant_downlink(v)?;
        assert!(verify_downlink(&glued).is_valid());
        let again = downlink_path(&glued.source)?;
        println!(
            "v = {v}: pendant {:?}, glued certificate to order {}, generic route to order {}",
            pendant_vertex(&glued.source),
            glued.target_order(),
            again.target_order()
        );
    }

    // rewiring two paths gives every vertex degree 2 somewhere
    let d = p4_saturate_design(&p4_pendant_downlink(13)?.source)?;
    println!("saturated: {}, pendant: {:?}", is_saturated(&d), pendant_vertex(&d));
    Ok(())
}

fn main() {
    run().expect("example failed");
}

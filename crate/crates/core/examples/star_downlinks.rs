//! Star designs with prescribed centres, recentring and down-links.

use std::error::Error;

use designlink::downlinks::downlink_star;
use designlink::generators::{center_counts, recenter_star_design, star_design, StarProfile};

pub fn run() -> Result<(), Box<dyn Error>> {
    let cases = [
        (10, 5, StarProfile::OneNonCenterOneSingle),
        (16, 5, StarProfile::Any),
        (8, 4, StarProfile::Any),
        (9, 4, StarProfile::OneNonCenter),
    ];
    for (v, k, profile) in cases {
        let d = star_design(v, k, profile)?;
        let c = downlink_star(&d)?;
        println!("S{k} on {v} points ({profile:?}) -> order {}", c.target_order());
    }

    let d = star_design(16, 5, StarProfile::OneNonCenter)?;
    let before = center_counts(&d).values().filter(|&&c| c == 0).count();
    let after = recenter_star_design(&d)?;
    let left = center_counts(&after).values().filter(|&&c| c == 0).count();
    println!("non-centres before recentring: {before}, after: {left}");
    Ok(())
}

fn main() {
    run().expect("example failed");
}

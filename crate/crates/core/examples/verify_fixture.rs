//! Load a bundled certificate and check it.

use std::error::Error;

use designlink::design::verify_downlink;
use designlink::generators::{fixture_certificate, fixture_names};

pub fn run() -> Result<(), Box<dyn Error>> {
    let c = fixture_certificate("c5-k11-order9")?;
    let report = verify_downlink(&c);
    println!(
        "{} blocks of order {} -> {} paths of order {}: {}",
        c.source.blocks.len(),
        c.source.order(),
        c.target.blocks.len(),
        c.target_order(),
        if report.is_valid() { "valid" } else { "invalid" }
    );
    for (i, b) in c.source.blocks.iter().enumerate().take(3) {
        println!("  {b} -> {}", c.image(i).expect("mapped"));
    }
    println!("bundled: {}", fixture_names().collect::<Vec<_>>().join(", "));
    Ok(())
}

fn main() {
    run().expect("example failed");
}

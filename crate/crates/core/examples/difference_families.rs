//! Develop base blocks over Z_p x Z_q into designs.

use std::error::Error;

use designlink::generators::{clique_family, kite_cyclic_family, kite_multipartite_family};

pub fn run() -> Result<(), Box<dyn Error>> {
    let f = kite_cyclic_family(2);
    println!("kites over Z_17: base {:?}, valid family: {}", f.base, f.validate().is_valid());
    println!("{} developed blocks", f.develop()?.len());

    let m = kite_multipartite_family(5);
    let report = m.validate();
    println!("kites over Z_8 x Z_5: missing {}, repeated {}", report.missing.len(), report.repeated.len());

    // a planar difference set gives the projective plane of order 4
    let plane = clique_family(21, &[0, 1, 4, 14, 16]);
    let blocks = plane.develop()?;
    println!("{} lines, first {}", blocks.len(), blocks[0]);

    let broken = clique_family(21, &[0, 1, 2, 3, 4]);
    let report = broken.validate();
    println!("[0,1,2,3,4] repeats {} differences", report.repeated.len());
    Ok(())
}

fn main() {
    run().expect("example failed");
}

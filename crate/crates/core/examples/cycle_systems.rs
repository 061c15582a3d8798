//! Triangle, 4-cycle and 5-cycle systems down-linked to P3-designs.

use std::error::Error;

use designlink::downlinks::downlink_cycle;
use designlink::generators::{fixture_design, steiner_triple_system};
use designlink::graph::{GraphSpec, PatternKind};
use designlink::oracle::{search_decomposition, DEFAULT_BUDGET};

pub fn run() -> Result<(), Box<dyn Error>> {
    for v in [7, 9, 13, 15] {
        let sts = steiner_triple_system(v)?;
        let c = downlink_cycle(&sts)?;
        println!("STS({v}) -> order {}", c.target_order());
    }

    let c4 = search_decomposition(&GraphSpec::complete(9), PatternKind::Cycle(4), DEFAULT_BUDGET)
        .found()
        .ok_or("no 4-cycle system found")?;
    println!("C4 on 9 points -> order {}", downlink_cycle(&c4)?.target_order());

    let c5 = fixture_design("c5-k11-cyclic")?;
    println!("cyclic C5 on 11 points -> order {}", downlink_cycle(&c5)?.target_order());
    Ok(())
}

fn main() {
    run().expect("example failed");
}

//! Exact search: decompositions, down-links and least reachable orders.

use std::error::Error;

use designlink::design::SpectrumMode;
use designlink::generators::steiner_triple_system;
use designlink::graph::{GraphSpec, PatternKind};
use designlink::oracle::{enumerate_designs, exact_eta, search_decomposition, search_downlink, SearchOutcome};

pub fn run() -> Result<(), Box<dyn Error>> {
    match search_decomposition(&GraphSpec::complete(8), PatternKind::Kite, 1_000_000) {
        SearchOutcome::Found(d) => println!("kite design on 8 points: {} blocks", d.blocks.len()),
        other => println!("kite design on 8 points: {other:?}"),
    }
    // a budget of one node settles nothing
    let r = search_decomposition(&GraphSpec::complete(9), PatternKind::Cycle(4), 1);
    println!("with budget 1: {r:?}");

    let sts = steiner_triple_system(7)?;
    for n in [5, 8] {
        let found = search_downlink(&sts, n, 1_000_000).is_found();
        println!("STS(7) down-links to order {n}: {found}");
    }

    let mut budget = 1_000_000;
    let classes = enumerate_designs(7, PatternKind::Cycle(3), &mut budget).ok_or("budget")?;
    println!("Steiner triple systems of order 7 up to isomorphism: {}", classes.len());

    for (v, kind, mode) in [(4, PatternKind::Path(4), SpectrumMode::Some), (5, PatternKind::P3, SpectrumMode::Every)] {
        let r = exact_eta(v, kind, mode, 10_000_000);
        println!("{kind} at v = {v}, mode {mode}: least order {:?} (bound {:.2})", r.eta, r.lower_bound);
    }
    Ok(())
}

fn main() {
    run().expect("example failed");
}

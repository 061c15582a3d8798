//! One line per acceptance criterion. Runs without the libtest harness so the
//! report is always printed.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use designlink::cli::run_cli;
use designlink::design::{DownLinkCertificate, SpectrumMode};
use designlink::downlinks::{downlink_cycle, downlink_kite, downlink_path, downlink_star};
use designlink::generators::{
    center_counts, fixture_certificate, fixture_design, fixture_names, fixture_text, kite_cyclic_design,
    kite_degree2_design, kite_multipartite_design, p3_design, p4_pendant_design, recenter_star_design, star_design,
    steiner_triple_system, StarProfile,
};
use designlink::graph::{Block, Graph, GraphSpec, PatternKind};
use designlink::io::{decode_document, encode_document};
use designlink::oracle::{exact_eta, search_decomposition, search_downlink, SearchOutcome, DEFAULT_BUDGET};
use designlink::p3::p3_partition;

use common::*;

/// Criteria that cannot hold as stated, with the sub-check expected to fail.
const UNATTAINABLE: &[(usize, &str)] = &[(4, "(12,4)")];

#[derive(Default)]
struct Report {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Report {
    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }
}

/// Certificates produced so far, for the bound and oracle criteria.
#[derive(Default)]
struct Pool {
    certs: Vec<(String, DownLinkCertificate)>,
}

impl Pool {
    fn add(&mut self, name: impl Into<String>, c: &DownLinkCertificate) {
        self.certs.push((name.into(), c.clone()));
    }
}

fn main() -> ExitCode {
    let mut pool = Pool::default();
    type Check = fn(&mut Report, &mut Pool);
    let criteria: [(usize, &str, u64, Check); 9] = [
        (1, "P3 partitions of all small connected graphs and 500 random ones", 10, p3_partitions),
        (2, "P3 designs exist exactly for n = 0,1 mod 4, n <= 13", 60, p3_spectrum),
        (3, "kite family", 30, kites),
        (4, "star family", 30, stars),
        (5, "cycle family", 120, cycles),
        (6, "path family", 60, paths),
        (7, "target orders admissible and above the counting bound", 60, bounds),
        (8, "exhaustive search agrees with the constructions", 300, oracle_agreement),
        (9, "document round trips and CLI pipelines", 60, round_trips),
    ];
    let mut unexpected = 0;
    for (n, title, limit, check) in criteria {
        let mut report = Report::default();
        let start = Instant::now();
        check(&mut report, &mut pool);
        let elapsed = start.elapsed();
        report.check(elapsed <= Duration::from_secs(limit), format!("took {elapsed:.1?}, limit {limit} s"));
        let pass = report.failures.is_empty();
        println!(
            "criterion {n}: {} | {title} | {:.2?}{}",
            if pass { "PASS" } else { "FAIL" },
            elapsed,
            report.notes.iter().map(|s| format!(" | {s}")).collect::<String>()
        );
        for f in &report.failures {
            println!("    failed: {f}");
        }
        let expected: Vec<&str> = UNATTAINABLE.iter().filter(|(c, _)| *c == n).map(|(_, s)| *s).collect();
        let as_expected = if expected.is_empty() {
            pass
        } else {
            report.failures.len() == expected.len()
                && report.failures.iter().zip(&expected).all(|(f, e)| f.starts_with(e))
        };
        if !as_expected {
            unexpected += 1;
        } else if !pass {
            println!("    (known unattainable as stated; see README)");
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criterion result(s) differ from the expected outcome");
        ExitCode::FAILURE
    }
}

fn graph_of(n: usize, edges: &BTreeSet<Pair>) -> Graph {
    let mut g = Graph::new();
    for v in 0..n as u32 {
        g.add_vertex(v);
    }
    for &(a, b) in edges {
        g.add_edge(a, b).expect("simple graph");
    }
    g
}

fn partition_ok(n: usize, edges: &BTreeSet<Pair>) -> bool {
    match p3_partition(&graph_of(n, edges)) {
        Ok(p) => is_p3_partition(edges, &p.paths, p.leftover.map(|e| pair(e.low(), e.high()))),
        Err(_) => false,
    }
}

fn p3_partitions(r: &mut Report, _: &mut Pool) {
    const ALL: [usize; 7] = [1, 2, 4, 11, 34, 156, 1044];
    const CONNECTED: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];
    let mut checked = 0;
    for n in 1..=7 {
        let classes = graph_classes(n);
        let connected: Vec<_> = classes.iter().filter(|g| is_connected(g)).collect();
        r.check(classes.len() == ALL[n - 1], format!("{} graphs on {n} vertices", classes.len()));
        r.check(connected.len() == CONNECTED[n - 1], format!("{} connected graphs on {n} vertices", connected.len()));
        for g in connected {
            let edges = mask_edges(g);
            r.check(partition_ok(n, &edges), format!("graph {edges:?}"));
            checked += 1;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for _ in 0..500 {
        let n = rng.gen_range(2..=16usize);
        let density: f64 = rng.gen();
        let mut edges = BTreeSet::new();
        for v in 1..n as u32 {
            edges.insert(pair(v, rng.gen_range(0..v)));
        }
        for a in 0..n as u32 {
            for b in a + 1..n as u32 {
                if rng.gen_bool(density) {
                    edges.insert((a, b));
                }
            }
        }
        r.check(partition_ok(n, &edges), format!("random graph {edges:?}"));
        checked += 1;
    }
    r.notes.push(format!("{checked} graphs"));
}

fn p3_spectrum(r: &mut Report, _: &mut Pool) {
    for n in 2..=13u32 {
        let admissible = n % 4 <= 1;
        let built = p3_design(n).map(|d| is_design(&d)).unwrap_or(false);
        r.check(built == admissible, format!("construction at n = {n}"));
        let searched = if admissible && n > 9 {
            None
        } else {
            Some(search_decomposition(&GraphSpec::complete(n), PatternKind::P3, DEFAULT_BUDGET))
        };
        match searched {
            Some(SearchOutcome::Found(d)) => r.check(admissible && is_design(&d), format!("search at n = {n}")),
            Some(SearchOutcome::None) => r.check(!admissible, format!("search at n = {n}")),
            Some(SearchOutcome::Unknown) => r.check(false, format!("search at n = {n} ran out of budget")),
            None => {}
        }
    }
}

fn kites(r: &mut Report, pool: &mut Pool) {
    for t in 1..=4u32 {
        let v = 8 * t + 1;
        match kite_cyclic_design(t) {
            Ok(d) => {
                r.check(is_design(&d), format!("cyclic design t = {t}"));
                r.check(d.blocks.len() == (t * (8 * t + 1)) as usize, format!("cyclic block count t = {t}"));
            }
            Err(e) => r.check(false, format!("cyclic design t = {t}: {e}")),
        }
        let d = match kite_degree2_design(v) {
            Ok(d) => d,
            Err(e) => {
                r.check(false, format!("degree-2 design v = {v}: {e}"));
                continue;
            }
        };
        r.check(is_design(&d), format!("degree-2 design v = {v}"));
        let audited = (0..v).any(|x| {
            let deg = degrees_of(&d, x);
            !deg.is_empty() && deg.iter().all(|&k| k == 2)
        });
        r.check(audited, format!("degree-2 audit v = {v}"));
        match downlink_kite(&d, true) {
            Ok(c) => {
                r.check(is_downlink(&c), format!("minimal down-link v = {v}"));
                r.check(c.target_order() == v as usize - 1, format!("minimal order v = {v}: {}", c.target_order()));
                pool.add(format!("kite minimal {v}"), &c);
            }
            Err(e) => r.check(false, format!("minimal down-link v = {v}: {e}")),
        }
    }
    if let Ok(c) = downlink_kite(&kite_cyclic_design(1).expect("t = 1"), false) {
        pool.add("kite cyclic 9", &c);
    }
    for m in [3, 5] {
        let ok = kite_multipartite_design(m).map(|d| is_design(&d)).unwrap_or(false);
        r.check(ok, format!("multipartite design m = {m}"));
    }
}

fn stars(r: &mut Report, pool: &mut Pool) {
    let cases = [
        (10u32, 5usize, StarProfile::OneNonCenterOneSingle, 9usize),
        (16, 5, StarProfile::Any, 16),
        (8, 4, StarProfile::Any, 8),
        (12, 4, StarProfile::Any, 12),
    ];
    for (v, k, profile, order) in cases {
        let d = match star_design(v, k, profile) {
            Ok(d) => d,
            Err(e) => {
                r.check(false, format!("({v},{k}): {e}"));
                continue;
            }
        };
        r.check(is_design(&d), format!("({v},{k}) design"));
        match downlink_star(&d) {
            Ok(c) => {
                r.check(is_downlink(&c), format!("({v},{k}) down-link"));
                r.check(c.target_order() == order, format!("({v},{k}) order {}", c.target_order()));
                pool.add(format!("star ({v},{k})"), &c);
            }
            Err(e) => r.check(false, format!("({v},{k}) down-link: {e}")),
        }
        if v as usize > 2 * k {
            let with_gap = star_design(v, k, StarProfile::OneNonCenter);
            match with_gap.and_then(|d| recenter_star_design(&d)) {
                Ok(d) => {
                    r.check(is_design(&d), format!("({v},{k}) recentred design"));
                    r.check(center_counts(&d).values().all(|&c| c > 0), format!("({v},{k}) recentred centres"));
                }
                Err(e) => r.check(false, format!("({v},{k}) recentring: {e}")),
            }
        }
    }
}

/// The cyclic `C5` design on 11 points and its order-9 image, as printed.
const C5_BLOCKS: [[u32; 5]; 11] = [
    [0, 8, 7, 3, 5],
    [1, 9, 8, 4, 6],
    [2, 10, 9, 5, 7],
    [3, 0, 10, 6, 8],
    [4, 1, 0, 7, 9],
    [5, 2, 1, 8, 10],
    [6, 3, 2, 9, 0],
    [7, 4, 3, 10, 1],
    [8, 5, 4, 0, 2],
    [9, 6, 5, 1, 3],
    [10, 7, 6, 2, 4],
];
const C5_TARGET: [[u32; 3]; 18] = [
    [8, 7, 3],
    [8, 4, 6],
    [9, 5, 7],
    [10, 6, 8],
    [7, 9, 4],
    [8, 10, 5],
    [6, 3, 2],
    [4, 3, 10],
    [8, 5, 4],
    [3, 9, 6],
    [4, 10, 7],
    [3, 5, 2],
    [3, 8, 9],
    [7, 2, 10],
    [10, 9, 2],
    [6, 7, 4],
    [4, 2, 8],
    [2, 6, 5],
];

fn same_blocks<const N: usize>(kind: PatternKind, listed: &[[u32; N]], blocks: &[Block]) -> bool {
    listed.len() == blocks.len()
        && listed.iter().zip(blocks).all(|(l, b)| Block::new(kind, l.to_vec()).ok().as_ref() == Some(b))
}

fn cycles(r: &mut Report, pool: &mut Pool) {
    for (v, order) in [(9u32, 9usize), (7, 8)] {
        let d = steiner_triple_system(v).expect("admissible");
        match downlink_cycle(&d) {
            Ok(c) => {
                r.check(is_downlink(&c) && c.target_order() == order, format!("STS({v}) to order {}", c.target_order()));
                pool.add(format!("STS({v})"), &c);
            }
            Err(e) => r.check(false, format!("STS({v}): {e}")),
        }
    }
    match search_decomposition(&GraphSpec::complete(9), PatternKind::Cycle(4), DEFAULT_BUDGET) {
        SearchOutcome::Found(d) => match downlink_cycle(&d) {
            Ok(c) => {
                r.check(is_downlink(&c) && c.target_order() == 8, format!("C4 on 9 points to {}", c.target_order()));
                pool.add("C4 on 9 points", &c);
            }
            Err(e) => r.check(false, format!("C4 on 9 points: {e}")),
        },
        _ => r.check(false, "no C4 design on 9 points found"),
    }
    match fixture_certificate("c5-k11-order9") {
        Ok(c) => {
            r.check(same_blocks(PatternKind::Cycle(5), &C5_BLOCKS, &c.source.blocks), "C5 fixture source blocks");
            r.check(same_blocks(PatternKind::P3, &C5_TARGET, &c.target.blocks), "C5 fixture target blocks");
            r.check(c.mapping == (0..11).collect::<Vec<_>>(), "C5 fixture map");
            r.check(is_downlink(&c) && c.target_order() == 9, "C5 fixture certificate");
            pool.add("C5 fixture", &c);
        }
        Err(e) => r.check(false, format!("C5 fixture: {e}")),
    }
    match fixture_design("c5-k11-cyclic").map(|d| downlink_cycle(&d)) {
        Ok(Ok(c)) => {
            r.check(is_downlink(&c) && c.target_order() == 12, format!("generic C5 route to {}", c.target_order()));
            pool.add("C5 generic", &c);
        }
        _ => r.check(false, "generic C5 route"),
    }
}

/// Base designs for `ℓ = 6, 9, 10, 13` and their down-links, as printed.
fn base_lists() -> Vec<(u32, Vec<[u32; 4]>, Vec<[u32; 3]>)> {
    vec![
        (
            6,
            vec![[0, 1, 2, 4], [0, 2, 3, 5], [0, 3, 4, 1], [0, 4, 5, 2], [0, 5, 1, 3]],
            vec![[1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]],
        ),
        (
            9,
            vec![
                [0, 1, 2, 4], [0, 2, 3, 5], [0, 3, 4, 6], [0, 4, 5, 7], [0, 5, 6, 8], [0, 6, 7, 1],
                [0, 7, 8, 2], [0, 8, 1, 3], [5, 8, 4, 1], [2, 5, 1, 6], [3, 6, 2, 7], [4, 7, 3, 8],
            ],
            vec![
                [1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 8], [6, 7, 1], [7, 8, 2], [8, 1, 3], [8, 4, 1],
                [5, 1, 6], [3, 6, 2], [7, 3, 8], [2, 5, 8], [2, 7, 4],
            ],
        ),
        (
            10,
            vec![
                [0, 1, 2, 4], [0, 2, 3, 5], [0, 3, 4, 6], [0, 4, 5, 7], [0, 5, 6, 8], [0, 6, 7, 9],
                [0, 7, 8, 1], [0, 8, 9, 2], [0, 9, 1, 3], [1, 4, 8, 2], [2, 6, 9, 4], [4, 7, 2, 5],
                [5, 9, 3, 7], [7, 1, 5, 8], [8, 3, 6, 1],
            ],
            vec![
                [1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 8], [6, 7, 9], [7, 8, 1], [8, 9, 2], [9, 1, 3],
                [1, 4, 8], [6, 9, 4], [4, 7, 2], [9, 3, 7], [7, 1, 5], [3, 6, 1], [8, 2, 6], [2, 5, 9], [5, 8, 3],
            ],
        ),
        (
            13,
            vec![
                [0, 1, 2, 4], [0, 2, 3, 5], [0, 3, 4, 6], [0, 4, 5, 7], [0, 5, 6, 8], [0, 6, 7, 9],
                [0, 7, 8, 10], [0, 8, 9, 11], [0, 9, 10, 12], [0, 10, 11, 1], [0, 11, 12, 2], [0, 12, 1, 3],
                [1, 4, 9, 5], [2, 5, 10, 6], [3, 6, 11, 7], [4, 7, 12, 8], [5, 8, 1, 9], [6, 9, 2, 10],
                [5, 11, 3, 10], [10, 7, 1, 5], [5, 12, 9, 3], [3, 7, 2, 11], [6, 12, 4, 11], [11, 8, 2, 6],
                [6, 1, 10, 4], [4, 8, 3, 12],
            ],
            vec![
                [1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 8], [6, 7, 9], [7, 8, 10], [8, 9, 11],
                [9, 10, 12], [10, 11, 1], [11, 12, 2], [12, 1, 3], [1, 4, 9], [5, 10, 6], [3, 6, 11], [7, 12, 8],
                [5, 8, 1], [9, 2, 10], [5, 11, 3], [7, 1, 5], [5, 12, 9], [7, 2, 11], [6, 12, 4], [8, 2, 6],
                [6, 1, 10], [8, 3, 12], [9, 5, 2], [11, 7, 4], [1, 9, 6], [3, 10, 7], [9, 3, 7], [4, 11, 8],
                [10, 4, 8],
            ],
        ),
    ]
}

fn paths(r: &mut Report, pool: &mut Pool) {
    for v in [6u32, 9, 10, 13, 18, 21, 22, 25] {
        let d = match p4_pendant_design(v) {
            Ok(d) => d,
            Err(e) => {
                r.check(false, format!("pendant design v = {v}: {e}"));
                continue;
            }
        };
        r.check(is_design(&d), format!("pendant design v = {v}"));
        let pendant = (0..v).any(|x| {
            let deg = degrees_of(&d, x);
            !deg.is_empty() && deg.iter().all(|&k| k == 1)
        });
        r.check(pendant, format!("pendant audit v = {v}"));
        match downlink_path(&d) {
            Ok(c) => {
                r.check(is_downlink(&c), format!("down-link v = {v}"));
                if v % 4 == 1 || v % 4 == 2 {
                    r.check(c.target_order() == v as usize - 1, format!("v = {v} reached {}", c.target_order()));
                }
                pool.add(format!("P4 pendant {v}"), &c);
            }
            Err(e) => r.check(false, format!("down-link v = {v}: {e}")),
        }
    }
    for (l, source, target) in base_lists() {
        match fixture_certificate(&format!("p4-l{l}")) {
            Ok(c) => {
                r.check(same_blocks(PatternKind::Path(4), &source, &c.source.blocks), format!("base {l} source"));
                r.check(same_blocks(PatternKind::P3, &target, &c.target.blocks), format!("base {l} target"));
                r.check(is_downlink(&c) && c.target_order() == l as usize - 1, format!("base {l} certificate"));
                pool.add(format!("base {l}"), &c);
            }
            Err(e) => r.check(false, format!("base {l}: {e}")),
        }
    }
    for name in ["k12-p4-metamorphosis", "k36-p4-metamorphosis", "k36-p4-downlink"] {
        match fixture_certificate(name) {
            Ok(c) => {
                r.check(is_downlink(&c), format!("{name} verifies"));
                if name.contains("metamorphosis") {
                    r.check(host_edges(&c.source.host) == host_edges(&c.target.host), format!("{name} host"));
                }
            }
            Err(e) => r.check(false, format!("{name}: {e}")),
        }
    }
    match search_decomposition(&GraphSpec::complete(4), PatternKind::Path(4), DEFAULT_BUDGET)
        .found()
        .map(|d| downlink_path(&d))
    {
        Some(Ok(c)) => {
            r.check(is_downlink(&c) && c.target_order() == 4, "P4 on 4 points");
            pool.add("P4 on 4 points", &c);
        }
        _ => r.check(false, "P4 on 4 points"),
    }
}

fn bounds(r: &mut Report, pool: &mut Pool) {
    for name in fixture_names() {
        if let Ok(c) = fixture_certificate(name) {
            if c.source.pattern != PatternKind::P3 && c.target.host.is_complete() {
                pool.add(name, &c);
            }
        }
    }
    for (name, c) in &pool.certs {
        r.check(target_order_ok(c), format!("{name}: order {}", c.target_order()));
    }
    r.notes.push(format!("{} certificates", pool.certs.len()));
}

fn oracle_agreement(r: &mut Report, pool: &mut Pool) {
    let mut checked = 0;
    for (name, c) in &pool.certs {
        if c.source.order() > 9 || !c.source.host.is_complete() {
            continue;
        }
        checked += 1;
        match search_downlink(&c.source, c.target_order(), DEFAULT_BUDGET) {
            SearchOutcome::Found(found) => r.check(is_downlink(&found), format!("{name}: search result")),
            SearchOutcome::None => r.check(false, format!("{name}: search says none at {}", c.target_order())),
            SearchOutcome::Unknown => r.check(false, format!("{name}: search ran out of budget")),
        }
    }
    let eta = exact_eta(4, PatternKind::Path(4), SpectrumMode::Some, DEFAULT_BUDGET).eta;
    r.check(eta == Some(4), format!("eta(4, P4) = {eta:?}"));
    let eta = exact_eta(9, PatternKind::Cycle(3), SpectrumMode::Some, DEFAULT_BUDGET).eta;
    r.check(eta == Some(9), format!("eta(9, C3) = {eta:?}"));
    r.notes.push(format!("{checked} certificates searched"));
}

fn run(args: &[&str]) -> i32 {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["designlink"];
    argv.extend_from_slice(args);
    run_cli(argv, &mut out, &mut err)
}

fn round_trips(r: &mut Report, _: &mut Pool) {
    for name in fixture_names() {
        let text = fixture_text(name).expect("listed");
        match decode_document(text) {
            Ok(doc) => {
                let again = decode_document(&encode_document(&doc));
                r.check(again.ok().as_ref() == Some(&doc), format!("{name} round trip"));
            }
            Err(e) => r.check(false, format!("{name}: {e}")),
        }
    }
    let dir = tempfile::tempdir().expect("temp dir");
    let design = dir.path().join("d.json");
    let cert = dir.path().join("c.json");
    let (d, c) = (design.to_str().expect("utf-8"), cert.to_str().expect("utf-8"));
    let families: [&[&str]; 8] = [
        &["--pattern", "p3", "--order", "8"],
        &["--pattern", "p4", "--order", "13"],
        &["--pattern", "star", "--order", "10", "--k", "5", "--profile", "one-single"],
        &["--pattern", "star", "--order", "16", "--k", "5"],
        &["--pattern", "star", "--order", "8", "--k", "4"],
        &["--pattern", "kite", "--order", "17", "--profile", "degree2"],
        &["--pattern", "c3", "--order", "9"],
        &["--pattern", "c3", "--order", "7"],
    ];
    for family in families {
        let mut gen = vec!["gen"];
        gen.extend_from_slice(family);
        gen.extend_from_slice(&["-o", d]);
        let codes = [run(&gen), run(&["downlink", d, "-o", c, "--minimal"]), run(&["verify", c])];
        r.check(codes == [0, 0, 0], format!("pipeline {}: exit codes {codes:?}", family.join(" ")));
    }
}

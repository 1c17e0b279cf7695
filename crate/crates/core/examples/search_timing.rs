//! Times a few representative searches; handy when tuning the enumeration.
//!
//!     cargo run --release -p minorspex-core --example search_timing

use minorspex_core::{constructions as cons, invariants::FamilySpec, search::*};
use std::time::Instant;

fn run(label: &str, n: usize, family: FamilySpec, mode: SearchMode) {
    let t = Instant::now();
    let q = SearchQuery::new(n, family, mode);
    let report = match mode {
        SearchMode::Spex | SearchMode::SpexConnected => spex_search(&q).unwrap(),
        SearchMode::Ex | SearchMode::ExConnected => ex_search(&q).unwrap(),
        SearchMode::SatList => sat_list(&q).unwrap(),
    };
    println!(
        "{label:>24} n={n}: value={:>12} classes={:>7} extremal={} in {:.2}s",
        format!("{:?}", report.value),
        report.total_minor_free,
        report.extremal.len(),
        t.elapsed().as_secs_f64()
    );
}

fn main() {
    run(
        "ex-connected {K_1,4}",
        9,
        FamilySpec::new(vec![cons::book(1, 4).unwrap()]).unwrap(),
        SearchMode::ExConnected,
    );
    run(
        "spex {K_3}",
        8,
        FamilySpec::new(vec![cons::complete(3).unwrap()]).unwrap(),
        SearchMode::Spex,
    );
    run(
        "spex {W_5}",
        8,
        FamilySpec::new(vec![cons::wheel(4).unwrap()]).unwrap(),
        SearchMode::Spex,
    );
    run(
        "spex {K_2,3, K_4}",
        9,
        FamilySpec::new(vec![
            cons::complete_multipartite_parts(&[3, 2]).unwrap(),
            cons::complete(4).unwrap(),
        ])
        .unwrap(),
        SearchMode::Spex,
    );
    run(
        "sat {K_1,3, K_2,2, K_3}",
        7,
        FamilySpec::new(vec![
            cons::book(1, 3).unwrap(),
            cons::complete_multipartite_parts(&[2, 2]).unwrap(),
            cons::complete(3).unwrap(),
        ])
        .unwrap(),
        SearchMode::SatList,
    );
}

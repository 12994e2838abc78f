//! A full certificate for AG(3,2) under PSL(2,7), written and re-read as text.

use std::time::Instant;

use pairwise_designs::constructions::catalog;
use pairwise_designs::data::DataSource;
use pairwise_designs::verify::{brute_verify, certificate, classify_block_action, fast_verify, parse_certificate, verify, Mode};

fn main() -> pairwise_designs::Result<()> {
    let row = catalog().into_iter().find(|r| r.tag == "Table2:line4").expect("row exists");
    let built = row.build(&DataSource::from_env())?;
    let group = built.group.expect("PSL(2,7) is bundled");
    let start = Instant::now();
    let report = verify(&built.design, &group, Mode::Both)?;
    let blocks = classify_block_action(&built.design, &group, None)?;
    let cert = certificate(&built.design, &group, &report, Some(&blocks), start.elapsed());
    print!("{cert}");

    let back = parse_certificate(&cert.to_string())?;
    assert_eq!(back.body(), cert.body());
    let fast = fast_verify(&built.design, &group)?.verdict;
    let brute = brute_verify(&built.design, &group)?.verdict;
    println!("round trip ok; fast {fast}, brute {brute}");
    Ok(())
}

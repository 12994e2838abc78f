//! Designs from the Golay codes: H(12), H(11), the S(3,6,22) hexads and D176.

use pairwise_designs::constructions::golay_designs;
use pairwise_designs::data::DataSource;
use pairwise_designs::verify::{verify, Mode};

fn main() -> pairwise_designs::Result<()> {
    let all = golay_designs(&DataSource::from_env())?;
    for c in [&all.h12, &all.h11, &all.m22] {
        let p = c.design.parameters();
        println!(
            "{:<24} {} b = {:<3} t = {}  mu {:?}  {} order {}  pairwise transitive: {}",
            c.design.label(),
            p,
            p.b,
            p.t_max,
            p.mu,
            c.group.label(),
            c.group.order(),
            verify(&c.design, &c.group, Mode::Both)?.verdict
        );
    }
    let residual = all.m22.design.residual(0)?;
    println!("residual of the hexads at a point: {} mu {:?}", residual.design.parameters(), residual.design.parameters().mu);

    let d = &all.d176;
    println!("D176: {}", d.design.parameters());
    match &d.group {
        Some(hs) => println!("  {} order {}: pairwise transitive {}", hs.label(), hs.order(), verify(&d.design, hs, Mode::Both)?.verdict),
        None => println!("  HS data absent, group check skipped"),
    }
    Ok(())
}

//! Point-hyperplane and point-line designs of PG(d-1, q) under their collineation groups.

use pairwise_designs::constructions::{pg_design, GroupLevel, PgKind};
use pairwise_designs::verify::{verify, Mode};

fn main() -> pairwise_designs::Result<()> {
    let cases = [
        (3, 2, PgKind::Hyperplanes, GroupLevel::Special),
        (3, 3, PgKind::Hyperplanes, GroupLevel::Special),
        (4, 2, PgKind::Hyperplanes, GroupLevel::Special),
        (3, 4, PgKind::Hyperplanes, GroupLevel::Semilinear),
        (4, 2, PgKind::Lines, GroupLevel::Special),
        (4, 3, PgKind::Lines, GroupLevel::Special),
    ];
    for (d, q, kind, level) in cases {
        let c = pg_design(d, q, kind, level)?;
        let p = c.design.parameters();
        let report = verify(&c.design, &c.group, Mode::Both)?;
        println!(
            "{:<22} {:<12} |G| = {:<8} {}  b = {:<4} intersections {:?}  pairwise transitive: {}",
            c.design.label(),
            c.group.label(),
            c.group.order(),
            p,
            p.b,
            p.intersection_numbers(),
            report.verdict
        );
        let comp = c.complement()?;
        let report = verify(&comp.design, &comp.group, Mode::Both)?;
        println!("  complement {}  pairwise transitive: {}", comp.design.parameters(), report.verdict);
    }
    Ok(())
}

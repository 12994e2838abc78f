//! Alt(7) acting on the 15 points of PG(3,2), built from a coset action on degree 7.

use pairwise_designs::constructions::{alt7_coset_pg32, alt7_matrix_pg32};
use pairwise_designs::data::DataSource;
use pairwise_designs::permgroup::action_report;
use pairwise_designs::verify::{classify_block_action, verify, Mode};

fn main() -> pairwise_designs::Result<()> {
    let coset = alt7_coset_pg32()?;
    let c = &coset.construction;
    let report = action_report(&c.group)?;
    println!("{} on {} points, order {}", c.group.label(), c.group.degree(), c.group.order());
    println!("  point stabilizer order {}", coset.point_stabilizer_order);
    println!("  rank {} suborbits {:?}", report.rank, report.suborbit_sizes);
    println!("  design {}", c.design.parameters());
    println!("  block stabilizer orbits {:?}", coset.block_stabilizer_orbits);
    println!("  pairwise transitive: {}", verify(&c.design, &c.group, Mode::Both)?.verdict);

    let matrix = alt7_matrix_pg32(&DataSource::from_env())?;
    let blocks = classify_block_action(&matrix.design, &matrix.group, None)?;
    println!(
        "matrix Alt(7): order {}, rank on blocks {}, block stabilizer orbits {:?}",
        matrix.group.order(),
        blocks.rank_on_blocks,
        blocks.block_stabilizer_orbits
    );
    Ok(())
}

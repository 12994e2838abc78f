//! Which verified catalog rows are nicely affine with respect to their translations.

use pairwise_designs::constructions::catalog;
use pairwise_designs::data::DataSource;
use pairwise_designs::design::nicely_affine;
use pairwise_designs::verify::{classify_block_action, verify, Mode};

fn main() -> pairwise_designs::Result<()> {
    let data = DataSource::from_env();
    for row in catalog() {
        let built = row.build(&data)?;
        let (Some(group), Some(n)) = (&built.group, &built.translations) else {
            continue;
        };
        if !verify(&built.design, group, Mode::Both)?.verdict {
            continue;
        }
        let report = nicely_affine(&built.design, n)?;
        let case = classify_block_action(&built.design, group, Some(n))?.imprimitive_case;
        println!(
            "{:<28} {:<14} nicely affine: {:<5} classes {:>3}  mu {:?}  block action: {:?}",
            row.tag,
            built.design.parameters().to_string(),
            report.holds,
            report.orbit_partition.len(),
            report.mu,
            case
        );
    }
    Ok(())
}

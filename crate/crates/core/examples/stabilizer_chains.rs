//! Orders, transitivity and suborbits of the bundled sporadic groups.

use pairwise_designs::constructions::{load_sporadic, Sporadic};
use pairwise_designs::data::DataSource;
use pairwise_designs::permgroup::{action_report, transitivity_degree};

fn main() -> pairwise_designs::Result<()> {
    let data = DataSource::from_env();
    for which in Sporadic::ALL {
        let file = match load_sporadic(which, &data) {
            Ok(f) => f,
            Err(e) => {
                println!("{}: {e}", which.file_name());
                continue;
            }
        };
        let g = &file.group;
        let report = action_report(g)?;
        println!(
            "{:<10} degree {:>3}  order {:>12}  {}-transitive  rank {}  suborbits {:?}  primitive {}",
            g.label(),
            g.degree(),
            g.order(),
            transitivity_degree(g, 5),
            report.rank,
            report.suborbit_sizes,
            report.primitive,
        );
    }

    // M22 as the pointwise stabilizer of two points in M24
    let m24 = load_sporadic(Sporadic::M24, &data)?.group;
    let m22 = m24.pointwise_stabilizer(&[22, 23])?;
    println!("M24 fixing 22 and 23: order {}", m22.order());
    Ok(())
}

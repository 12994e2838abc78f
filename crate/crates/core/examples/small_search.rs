//! Orbit designs of small 2-transitive groups, and the table lines they match.

use pairwise_designs::constructions::{load_sporadic, rows_matching, Sporadic};
use pairwise_designs::data::DataSource;
use pairwise_designs::harness::search_small;
use pairwise_designs::permgroup::GeneratedGroup;

fn main() -> pairwise_designs::Result<()> {
    let data = DataSource::from_env();
    let mut groups: Vec<GeneratedGroup> = (5..=8).map(GeneratedGroup::symmetric).collect();
    for which in [Sporadic::Psl27Degree8, Sporadic::M11Degree11, Sporadic::M11Degree12] {
        groups.push(load_sporadic(which, &data)?.group);
    }
    for g in &groups {
        let results = search_small(g, 3..=g.degree() / 2)?;
        let designs = results.len();
        let hits: Vec<_> = results.iter().filter(|r| r.verdict).collect();
        println!("{} (degree {}): {designs} orbit 2-designs, {} pairwise transitive", g.label(), g.degree(), hits.len());
        for h in hits {
            let rows: Vec<String> = rows_matching(h.degree, h.k, h.lambda).iter().map(ToString::to_string).collect();
            println!("  {h}  -> {}", rows.join(", "));
        }
    }
    Ok(())
}

//! Transitive subgroups of ΓL(1, p^d) and primitive prime divisors.

use pairwise_designs::constructions::{gammal1_group, gammal1_is_transitive, gammal1_orbit_is_transitive, standard_triples, zsigmondy_ppd, GammaL1Subgroup};

fn main() -> pairwise_designs::Result<()> {
    for (p, d) in [(2u64, 4u32), (3, 3), (5, 2), (2, 6)] {
        let triples = standard_triples(p, d)?;
        let transitive: Vec<_> = triples.iter().filter(|s| gammal1_is_transitive(s)).collect();
        let agree = triples
            .iter()
            .map(|s| gammal1_orbit_is_transitive(s).map(|o| o == gammal1_is_transitive(s)))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .all(|x| x);
        println!(
            "GF({p}^{d}): {} standard triples, {} transitive, criterion matches orbits: {agree}, ppd {:?}",
            triples.len(),
            transitive.len(),
            zsigmondy_ppd(p, d)?
        );
        for s in transitive.iter().filter(|s| s.i() > 1) {
            println!("  {s}  order {}", s.order());
        }
    }

    let s = GammaL1Subgroup::new(2, 4, 5, 0, 1)?;
    let mut sizes: Vec<usize> = gammal1_group(&s)?.orbits().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    println!("{s}: orbit sizes {sizes:?}");
    Ok(())
}

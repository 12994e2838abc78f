//! Designs whose blocks are all cosets of an orbit of subspaces, checked condition by condition.

use pairwise_designs::constructions::{construction_regn, regn_alt7_input, regn_gammal116_input, regn_gl32_input, ConstructionInput};
use pairwise_designs::data::DataSource;
use pairwise_designs::design::nicely_affine;
use pairwise_designs::verify::{verify, Mode};

fn show(input: pairwise_designs::Result<ConstructionInput>) -> pairwise_designs::Result<()> {
    let input = input?;
    let label = input.label.clone();
    match construction_regn(&input) {
        Ok(c) => {
            let n = c.translations.as_ref().expect("translations are recorded");
            println!(
                "{label:<10} {} subspaces  {}  mu {:?}  order {}  nicely affine {}  pairwise transitive {}",
                input.subspaces.len(),
                c.design.parameters(),
                c.design.parameters().mu,
                c.group.order(),
                nicely_affine(&c.design, n)?.holds,
                verify(&c.design, &c.group, Mode::Both)?.verdict
            );
        }
        Err(e) => println!("{label:<10} {e}"),
    }
    Ok(())
}

fn main() -> pairwise_designs::Result<()> {
    show(regn_gl32_input())?;
    show(regn_alt7_input(&DataSource::from_env()))?;
    show(regn_gammal116_input())?;
    let mut too_few = regn_gl32_input()?;
    too_few.subspaces.truncate(2);
    show(Ok(too_few))
}

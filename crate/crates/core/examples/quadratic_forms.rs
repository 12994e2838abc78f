//! Quadratic forms over GF(2) polarising to the standard symplectic form.

use pairwise_designs::algebra::FormType;
use pairwise_designs::constructions::{quadratic_forms_design, sp62_negative_fixture, FormsSign, SpVariant};
use pairwise_designs::verify::{verify, Mode};

fn main() -> pairwise_designs::Result<()> {
    let variants = [
        (2, SpVariant::Full),
        (2, SpVariant::Derived),
        (2, SpVariant::Subfield(2)),
        (3, SpVariant::Full),
        (3, SpVariant::Subfield(3)),
    ];
    for (m, variant) in variants {
        for sign in [FormsSign::Minus, FormsSign::Plus] {
            let c = quadratic_forms_design(m, sign, variant)?;
            let p = c.design.parameters();
            println!(
                "{:<8} {:<18} order {:>10}  {}  symmetric {}  pairwise transitive: {}",
                c.design.label(),
                c.group.label(),
                c.group.order(),
                p,
                p.is_symmetric(),
                verify(&c.design, &c.group, Mode::Both)?.verdict
            );
        }
    }
    for kind in [FormType::Elliptic, FormType::Hyperbolic] {
        let f = sp62_negative_fixture(kind)?;
        let p = f.construction.design.parameters();
        println!(
            "Sp(6,2) on {:?} forms vs non-zero vectors: {} b = {} intersections {:?}",
            f.kind,
            p,
            p.b,
            p.intersection_numbers()
        );
    }
    Ok(())
}

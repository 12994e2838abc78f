use pairwise_designs::constructions::{catalog, RowKind};
use pairwise_designs::data::DataSource;
use pairwise_designs::design::{structural_checks, Design};
use pairwise_designs::permgroup::{GeneratedGroup, Permutation};
use pairwise_designs::verify::{brute_verify, classify_block_action, fast_verify, symmetric_shortcut, verify, Mode};
use proptest::prelude::*;

fn relabel(design: &Design, group: &GeneratedGroup, sigma: &Permutation) -> (Design, GeneratedGroup) {
    let blocks = design.blocks().iter().map(|b| sigma.image_of_set(b)).collect();
    let d = Design::new(design.v(), blocks, "relabelled").unwrap();
    let inv = sigma.inverse();
    let gens = group.generators().iter().map(|g| inv.compose(g).compose(sigma)).collect();
    (d, GeneratedGroup::new(group.degree(), gens, "conjugate").unwrap())
}

fn small_rows() -> Vec<(String, Design, GeneratedGroup)> {
    catalog()
        .into_iter()
        .filter(|r| r.expected.v <= 16 && r.kind != RowKind::Trivial)
        .map(|r| {
            let b = r.build(&DataSource::Embedded).unwrap();
            (r.tag, b.design, b.group.unwrap())
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn orbit_counts_survive_relabelling(
        row in 0usize..20,
        shuffled in Just((0..16u32).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let rows = small_rows();
        let (_, design, group) = &rows[row % rows.len()];
        let images: Vec<u32> = shuffled.into_iter().filter(|&x| (x as usize) < design.v()).collect();
        let sigma = Permutation::from_images(images).unwrap();
        let (d2, g2) = relabel(design, group, &sigma);
        let a = brute_verify(design, group).unwrap();
        let b = brute_verify(&d2, &g2).unwrap();
        prop_assert_eq!(a.orbit_counts, b.orbit_counts);
        prop_assert_eq!(d2.parameters().lambda, design.parameters().lambda);
    }
}

#[test]
fn fast_agrees_with_brute_on_every_row() {
    let mut pairs = 0;
    for row in catalog() {
        let b = row.build(&DataSource::Embedded).unwrap();
        let Some(g) = b.group else { continue };
        let brute = brute_verify(&b.design, &g).unwrap();
        match fast_verify(&b.design, &g) {
            Ok(fast) => {
                assert_eq!(fast.verdict, brute.verdict, "{}", row.tag);
                pairs += 1;
            }
            Err(pairwise_designs::Error::FastRefused(_)) => assert_eq!(row.kind, RowKind::Trivial, "{}", row.tag),
            Err(e) => panic!("{}: {e}", row.tag),
        }
        if b.design.parameters().is_symmetric() && row.kind != RowKind::Trivial {
            assert_eq!(symmetric_shortcut(&b.design, &g).unwrap(), brute.verdict, "{}", row.tag);
        }
    }
    assert!(pairs >= 25);
}

#[test]
fn verified_rows_satisfy_structure_facts() {
    for row in catalog() {
        let b = row.build(&DataSource::Embedded).unwrap();
        let Some(g) = b.group else { continue };
        let report = verify(&b.design, &g, Mode::Both).unwrap();
        let p = b.design.parameters();
        assert!(p.identities_hold() && p.fisher_holds(), "{}", row.tag);
        if !report.verdict || p.is_trivial() {
            continue;
        }
        let s = structural_checks(&b.design);
        assert!(s.connected && !s.repeated_blocks && !s.repeated_points, "{}", row.tag);
        let c = classify_block_action(&b.design, &g, None).unwrap();
        assert!(c.faithful_on_points && c.faithful_on_blocks, "{}", row.tag);
        match c.rank_on_blocks {
            2 => assert_eq!(p.b, p.v, "{}", row.tag),
            3 => {
                let numbers = p.intersection_numbers();
                assert_eq!(numbers.len(), 2, "{}", row.tag);
                assert_eq!(numbers[0], 0, "{}", row.tag);
                let (k, r) = (p.k.unwrap(), p.r.unwrap());
                assert!(3 <= k && 2 * k <= p.v, "{}", row.tag);
                assert!(3 <= r && 2 * r <= p.b, "{}", row.tag);
            }
            other => panic!("{}: rank {other}", row.tag),
        }
    }
}

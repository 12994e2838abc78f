use pairwise_designs::constructions::{load_sporadic, rows_matching, Sporadic};
use pairwise_designs::data::DataSource;
use pairwise_designs::design::Design;
use pairwise_designs::harness::{search_small, subset_orbits};
use pairwise_designs::permgroup::GeneratedGroup;
use pairwise_designs::verify::brute_verify;

fn group(which: Sporadic) -> GeneratedGroup {
    load_sporadic(which, &DataSource::Embedded).unwrap().group
}

/// Heap's algorithm over all relabellings of `0..n`.
fn isomorphic(a: &Design, b: &Design) -> bool {
    let n = a.v();
    let mut target: Vec<Vec<u32>> = b.blocks().to_vec();
    target.sort();
    let mut perm: Vec<u32> = (0..n as u32).collect();
    let mut c = vec![0usize; n];
    let matches = |perm: &[u32]| {
        let mut img: Vec<Vec<u32>> = a
            .blocks()
            .iter()
            .map(|blk| {
                let mut s: Vec<u32> = blk.iter().map(|&x| perm[x as usize]).collect();
                s.sort_unstable();
                s
            })
            .collect();
        img.sort();
        img == target
    };
    if matches(&perm) {
        return true;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            perm.swap(if i % 2 == 0 { 0 } else { c[i] }, i);
            if matches(&perm) {
                return true;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

#[test]
fn psl27_degree_8_gives_ag32_up_to_isomorphism() {
    let g = group(Sporadic::Psl27Degree8);
    let hits: Vec<_> = search_small(&g, 3..=4).unwrap().into_iter().filter(|r| r.verdict).collect();
    assert!(hits.iter().all(|h| (h.k, h.lambda, h.b, h.mu) == (4, 3, 14, Some(2))));
    assert_eq!(hits.len(), 2);
    let designs: Vec<Design> = subset_orbits(&g, 4)
        .unwrap()
        .into_iter()
        .filter(|o| hits.iter().any(|h| o[0] == h.representative))
        .map(|o| Design::new(8, o, "orbit").unwrap())
        .collect();
    let ag32 = pairwise_designs::constructions::ag_design(3, 2, Default::default()).unwrap().design;
    assert!(designs.iter().all(|d| isomorphic(d, &ag32)));
}

#[test]
fn m11_degree_12_gives_h12() {
    let hits: Vec<_> = search_small(&group(Sporadic::M11Degree12), 6..=6)
        .unwrap()
        .into_iter()
        .filter(|r| r.verdict)
        .collect();
    assert_eq!(hits.len(), 1);
    assert_eq!((hits[0].b, hits[0].lambda, hits[0].mu), (22, 5, Some(3)));
}

#[test]
fn sym6_has_no_pairwise_transitive_hit() {
    assert!(search_small(&GeneratedGroup::symmetric(6), 3..=3).unwrap().iter().all(|r| !r.verdict));
}

#[test]
fn hits_reverify_and_match_table_rows() {
    for g in [group(Sporadic::Psl27Degree8), group(Sporadic::M11Degree12), GeneratedGroup::alternating(7)] {
        for hit in search_small(&g, 3..=g.degree() / 2).unwrap().into_iter().filter(|r| r.verdict) {
            let orbit = subset_orbits(&g, hit.k)
                .unwrap()
                .into_iter()
                .find(|o| o[0] == hit.representative)
                .unwrap();
            let design = Design::new(g.degree(), orbit, "hit").unwrap();
            assert!(brute_verify(&design, &g).unwrap().verdict);
            assert!(!rows_matching(hit.degree, hit.k, hit.lambda).is_empty(), "{hit}");
        }
    }
}

#[test]
fn search_is_deterministic() {
    let g = group(Sporadic::M11Degree11);
    assert_eq!(search_small(&g, 3..=5).unwrap(), search_small(&g, 3..=5).unwrap());
}

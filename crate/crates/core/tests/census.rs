use proptest::prelude::*;

use hermitian_mixed::census::{dedup_classes, derive_scattered_catalog, enumerate_orientations, verify_main_theorem, CensusConfig};
use hermitian_mixed::classifier::Catalog;
use hermitian_mixed::gaussian::Unit;
use hermitian_mixed::graph::MixedGraph;
use hermitian_mixed::switching::{apply_switch, SwitchDiagonal};

const PINNED: &str = include_str!("../data/scattered_catalog.txt");

#[test]
fn pinned_catalog_matches_fresh_derivation() {
    let first = derive_scattered_catalog().unwrap().catalog.to_text();
    let second = derive_scattered_catalog().unwrap().catalog.to_text();
    assert_eq!(first, second);
    assert_eq!(first, PINNED, "regenerate with `hmix catalog --out crates/core/data/scattered_catalog.txt`");
    assert_eq!(Catalog::parse(PINNED).unwrap().to_text(), PINNED);
}

#[test]
fn census_reports_are_deterministic() {
    let config = CensusConfig { n_max: 4, ..CensusConfig::default() };
    let a = verify_main_theorem(&config).unwrap();
    let b = verify_main_theorem(&CensusConfig { jobs: 3, ..config }).unwrap();
    assert_eq!(a.to_text(), b.to_text());
    assert!(a.verified());
    let rows: u64 = a.rows.iter().map(|r| r.tally.scanned).sum();
    assert_eq!(rows, a.totals.scanned);
    assert_eq!(a.totals.accepted + a.totals.rejected(), a.totals.scanned);
    assert_eq!(a.totals.families.iter().sum::<u64>(), a.totals.accepted);
}

#[test]
fn orientation_counts_are_powers_of_three() {
    for n in 2..=5 {
        for g in [MixedGraph::complete(n), MixedGraph::path(n), MixedGraph::star(n - 1)] {
            let m = g.edge_count() as u32;
            assert_eq!(enumerate_orientations(&g).unwrap().count() as u64, 3u64.pow(m));
        }
    }
}

fn orientation_family() -> impl Strategy<Value = Vec<MixedGraph>> {
    let bases = vec![
        MixedGraph::complete(4),
        MixedGraph::cycle(4),
        MixedGraph::cycle(5),
        MixedGraph::undirected(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]),
    ];
    prop::sample::select(bases).prop_flat_map(|base| {
        let total = 3u64.pow(base.edge_count() as u32);
        prop::collection::vec(0..total, 1..24).prop_map(move |idx| {
            idx.iter()
                .map(|&i| hermitian_mixed::census::orientation_at(&base, i).unwrap())
                .collect()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dedup_is_a_partition_with_witnesses(graphs in orientation_family()) {
        let classes = dedup_classes(&graphs).unwrap();
        let mut seen: Vec<usize> = classes.iter().flat_map(|c| c.members.iter().copied()).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..graphs.len()).collect::<Vec<_>>());
        for c in &classes {
            for (&m, (perm, d)) in c.members.iter().zip(&c.witnesses) {
                prop_assert_eq!(graphs[m].induced(perm), apply_switch(&c.representative, d).unwrap());
            }
        }
    }

    #[test]
    fn switched_copies_share_a_class(g in orientation_family(), k in prop::collection::vec(0usize..4, 5)) {
        let g = &g[0];
        let d = SwitchDiagonal::new(k[..g.n()].iter().map(|&i| Unit::ALL[i]).collect());
        if let Ok(h) = apply_switch(g, &d) {
            let classes = dedup_classes(&[g.clone(), h]).unwrap();
            prop_assert_eq!(classes.len(), 1);
        }
    }
}

mod common;

use amds_core::bounds::is_amds;
use amds_core::systematic::is_systematic;
use amds_core::{enumerate_systematic_amds, SearchMode};

use common::{small_cases, unpruned_tables};

#[test]
fn pruned_matches_unpruned_on_small_spaces() {
    let cases = small_cases(2_000_000);
    for needed in [(4, 3), (5, 3), (5, 4), (6, 4)] {
        assert!(cases.contains(&needed), "{needed:?} missing from {cases:?}");
    }
    for (n, d) in cases {
        let pruned = enumerate_systematic_amds(n, d, SearchMode::Collect).unwrap();
        let raw: Vec<Vec<u64>> = pruned.tables.iter().map(|t| t.raw().to_vec()).collect();
        let oracle = unpruned_tables(n, d);
        assert_eq!(raw, oracle, "(n, d) = ({n}, {d})");
        assert_eq!(pruned.count as usize, oracle.len());
    }
}

#[test]
fn every_result_round_trips() {
    for (n, d) in [(5, 3), (6, 3), (6, 4), (7, 3), (7, 4), (8, 4), (6, 2), (5, 1)] {
        let res = enumerate_systematic_amds(n, d, SearchMode::Collect).unwrap();
        assert!(res.count > 0);
        for c in res.codes() {
            assert!(is_systematic(&c, n - d).unwrap());
            assert!(is_amds(&c).unwrap());
            assert_eq!(c.min_distance().unwrap(), d);
        }
    }
}

#[test]
fn identical_across_worker_counts() {
    let run = |threads: usize, n: usize, d: usize| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| enumerate_systematic_amds(n, d, SearchMode::Collect).unwrap())
    };
    for (n, d) in [(7, 3), (8, 4), (6, 2)] {
        let a = run(1, n, d);
        let b = run(4, n, d);
        assert_eq!(a, b);
    }
}

#[test]
fn negative_cases_are_empty() {
    for (n, d) in [(9, 5), (8, 5), (7, 5), (8, 3), (9, 3), (9, 4), (8, 6), (9, 6), (9, 7)] {
        let res = enumerate_systematic_amds(n, d, SearchMode::CountOnly).unwrap();
        assert_eq!(res.count, 0, "({n}, {d})");
    }
}

mod common;

use amds_core::bounds::{
    hamming_max, plotkin_max, singleton_max, size_passes_classical_bounds, MaxSize,
};

#[test]
fn no_small_code_beats_any_bound() {
    for n in 1..=5 {
        for d in 1..=n {
            let best = common::brute_max_code(n, d as u32) as u128;
            assert!(best <= singleton_max(n, d).unwrap(), "Singleton at ({n},{d})");
            assert!(best <= hamming_max(n, d).unwrap(), "Hamming at ({n},{d})");
            if let MaxSize::Bounded(p) = plotkin_max(n, d).unwrap() {
                assert!(best <= p, "Plotkin at ({n},{d}): {best} > {p}");
            }
        }
    }
}

#[test]
fn small_amds_dimensions_only_allow_distance_three_or_four() {
    let mut admitted = Vec::new();
    for k in 1..=4usize {
        for d in 3..=60usize {
            if size_passes_classical_bounds(k + d, d, k).unwrap() {
                admitted.push((k, d));
            }
        }
    }
    let (k1, rest): (Vec<_>, Vec<_>) = admitted.into_iter().partition(|&(k, _)| k == 1);
    assert_eq!(k1.len(), 58, "k = 1 must pass for every d");
    assert_eq!(rest, vec![(2, 3), (2, 4), (3, 3), (3, 4), (4, 3), (4, 4)]);
}

mod common;

use common::*;
use lsc_core::centrality::{
    betweenness_centrality, closeness_centrality, eigenvector_centrality, ClosenessConvention, Measure,
    MeasureConfig,
};
use lsc_core::graph::k_shell;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn betweenness_matches_path_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rand::Rng::random_range(&mut rng, 3..=8);
        let g = random_connected(&mut rng, n, 0.3);
        for normalized in [false, true] {
            let ours = betweenness_centrality::<f64>(&g, normalized).unwrap().scores;
            let oracle = betweenness_oracle(&g, normalized);
            assert!(max_abs_diff(&ours, &oracle) < 1e-12, "{ours:?} vs {oracle:?}");
        }
    }
}

#[test]
fn betweenness_on_disconnected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let g = random_graph(&mut rng, 8, 0.2);
        let ours = betweenness_centrality::<f64>(&g, false).unwrap().scores;
        assert!(max_abs_diff(&ours, &betweenness_oracle(&g, false)) < 1e-12);
    }
}

#[test]
fn eigenvector_matches_dense_eigendecomposition() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let n = rand::Rng::random_range(&mut rng, 2..=8);
        let g = random_connected(&mut rng, n, 0.3);
        let ours = eigenvector_centrality::<f64>(&g, 1e-12, 100_000).unwrap();
        let (lambda, oracle) = eigenvector_oracle(&g);
        assert!(max_abs_diff(&ours.scores, &oracle) < 1e-6, "{:?} vs {oracle:?}", ours.scores);
        if let lsc_core::centrality::MeasureParams::Eigenvector { eigenvalue, .. } = ours.params {
            assert!((eigenvalue - lambda).abs() < 1e-6);
        } else {
            panic!("wrong params");
        }
    }
}

#[test]
fn eigenvector_in_single_precision() {
    let g = karate();
    let ours = eigenvector_centrality::<f32>(&g, 1e-6, 10_000).unwrap();
    let (_, oracle) = eigenvector_oracle(&g);
    let ours: Vec<f64> = ours.scores.iter().map(|&x| x as f64).collect();
    assert!(max_abs_diff(&ours, &oracle) < 1e-4);
}

#[test]
fn k_shell_matches_peeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..300 {
        let n = rand::Rng::random_range(&mut rng, 1..=12);
        let g = random_graph(&mut rng, n, 0.4);
        assert_eq!(k_shell(&g), peeling_oracle(&g));
    }
    assert_eq!(k_shell(&karate()), peeling_oracle(&karate()));
}

#[test]
fn closeness_literal_form() {
    let g = karate();
    let literal = closeness_centrality::<f64>(&g, ClosenessConvention::InverseSum).unwrap();
    let scaled = closeness_centrality::<f64>(&g, ClosenessConvention::ComponentScaled).unwrap();
    // connected graph: the two conventions differ by the factor n / (n - 1)
    for (a, b) in literal.scores.iter().zip(&scaled.scores) {
        assert!((a * 33.0 / 34.0 - b).abs() < 1e-12);
    }
}

#[test]
fn every_measure_is_permutation_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let config = MeasureConfig::default();
    for _ in 0..20 {
        let g = random_connected(&mut rng, 30, 0.1);
        let mut perm: Vec<usize> = (0..30).collect();
        perm.shuffle(&mut rng);
        let h = g.permuted(&perm).unwrap();
        for m in Measure::ALL {
            let a = config.compute::<f64>(m, &g).unwrap().scores;
            let b = config.compute::<f64>(m, &h).unwrap().scores;
            for v in 0..30 {
                assert!((a[v] - b[perm[v]]).abs() < 1e-6, "{m} node {v}");
            }
        }
    }
}

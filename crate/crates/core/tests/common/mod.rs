#![allow(dead_code)]

use std::collections::VecDeque;

use lsc_core::graph::{load_edge_list, Graph};
use nalgebra::{DMatrix, SymmetricEigen};
use rand::Rng;

pub fn karate() -> Graph {
    let text = include_str!("../data/karate.txt");
    load_edge_list(text, false).unwrap().graph
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap().0
}

/// Arbitrary graph (possibly disconnected) from a pair mask.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.random::<f64>() < p)
        .collect();
    Graph::from_simple_edges(n, edges).unwrap()
}

fn distances(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(dist[u].unwrap() + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn all_shortest_paths(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    let dist = distances(g, s);
    let Some(target) = dist[t] else { return Vec::new() };
    let mut paths = Vec::new();
    let mut stack = vec![vec![s]];
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        if last == t {
            paths.push(path);
            continue;
        }
        for &v in g.neighbors(last) {
            if dist[v] == Some(path.len()) && path.len() <= target {
                let mut next = path.clone();
                next.push(v);
                stack.push(next);
            }
        }
    }
    paths.retain(|p| p.len() == target + 1);
    paths
}

/// Betweenness by listing every shortest path of every unordered pair.
pub fn betweenness_oracle(g: &Graph, normalized: bool) -> Vec<f64> {
    let n = g.node_count();
    let mut score = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            let paths = all_shortest_paths(g, s, t);
            if paths.is_empty() {
                continue;
            }
            for v in 0..n {
                if v == s || v == t {
                    continue;
                }
                let through = paths.iter().filter(|p| p.contains(&v)).count();
                score[v] += through as f64 / paths.len() as f64;
            }
        }
    }
    if normalized {
        let scale = 2.0 / ((n - 1) as f64 * (n - 2) as f64);
        score.iter_mut().for_each(|x| *x *= scale);
    }
    score
}

/// Unit-norm, nonnegative eigenvector of the largest adjacency eigenvalue.
pub fn eigenvector_oracle(g: &Graph) -> (f64, Vec<f64>) {
    let n = g.node_count();
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let eig = SymmetricEigen::new(a);
    let top = eig.eigenvalues.imax();
    let mut v: Vec<f64> = eig.eigenvectors.column(top).iter().copied().collect();
    if v.iter().sum::<f64>() < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
    (eig.eigenvalues[top], v)
}

/// Repeatedly delete every node of remaining degree <= k, for k = 0, 1, ...
pub fn peeling_oracle(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut alive = vec![true; n];
    let mut shell = vec![0; n];
    let mut remaining = n;
    let mut k = 0;
    while remaining > 0 {
        loop {
            let doomed: Vec<usize> = (0..n)
                .filter(|&v| alive[v] && g.neighbors(v).iter().filter(|&&u| alive[u]).count() <= k)
                .collect();
            if doomed.is_empty() {
                break;
            }
            for v in doomed {
                alive[v] = false;
                shell[v] = k;
                remaining -= 1;
            }
        }
        k += 1;
    }
    shell
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

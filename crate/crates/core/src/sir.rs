//! Discrete-time SIR spreading on a graph.
//!
//! One step, applied synchronously:
//! 1. every infectious node tries to infect each susceptible neighbor,
//!    independently with probability `beta` (several successful contacts on
//!    the same node still infect it once);
//! 2. every node that was infectious when the step began recovers with
//!    probability `gamma`.
//!
//! Nodes infected during a step start transmitting in the next one, so with
//! `gamma = 1` each infected node gets exactly one round of contacts.
//!
//! Randomness is drawn from a ChaCha8 stream derived from
//! `(rng_seed, seed node, replication)`; a node's score never depends on
//! which other nodes were scored, in what order, or on how many threads.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::centrality::format_significant;
use crate::error::{invalid, Result};
use crate::graph::{Graph, NodeLabels};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SirParams {
    /// Per contact, per step infection probability.
    pub beta: f64,
    /// Per step recovery probability.
    pub gamma: f64,
    /// Step cap; `None` runs until no node is infectious.
    pub max_steps: Option<usize>,
    pub replications: usize,
    pub rng_seed: u64,
}

impl SirParams {
    pub fn new(beta: f64, gamma: f64, replications: usize, rng_seed: u64) -> Result<Self> {
        let params = Self {
            beta,
            gamma,
            max_steps: None,
            replications,
            rng_seed,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn with_max_steps(mut self, steps: usize) -> Self {
        self.max_steps = Some(steps);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.beta) {
            return Err(invalid(format!("beta must lie in [0, 1], got {}", self.beta)));
        }
        if !(self.gamma > 0.0 && self.gamma <= 1.0) {
            return Err(invalid(format!("gamma must lie in (0, 1], got {}", self.gamma)));
        }
        if self.replications == 0 {
            return Err(invalid("at least one replication is required"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NodeState {
    Susceptible,
    Infectious,
    Recovered,
}

/// Outcome of one simulated outbreak.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SirRun {
    /// Nodes ever infected (recovered plus still infectious at the end).
    pub final_count: usize,
    /// Steps executed before extinction or the cap.
    pub steps: usize,
    /// Cumulative ever-infected count after each step; `curve[0]` is the seed count.
    pub curve: Vec<usize>,
}

/// Aggregate over replications.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SirResult {
    pub mean_score: f64,
    pub score_std: f64,
    pub replications: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_replication_scores: Option<Vec<usize>>,
    /// Mean cumulative ever-infected count for `t = 0..=max_steps`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<Vec<f64>>,
}

/// Reusable buffers for repeated runs on one graph.
pub struct SirSimulator<'g> {
    graph: &'g Graph,
    state: Vec<NodeState>,
    infectious: Vec<usize>,
    next_infectious: Vec<usize>,
    newly_infected: Vec<usize>,
    ever_infected: Vec<usize>,
}

impl<'g> SirSimulator<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self {
            graph,
            state: vec![NodeState::Susceptible; graph.node_count()],
            infectious: Vec::new(),
            next_infectious: Vec::new(),
            newly_infected: Vec::new(),
            ever_infected: Vec::new(),
        }
    }

    pub fn run<R: Rng>(&mut self, seeds: &[usize], params: &SirParams, rng: &mut R) -> Result<SirRun> {
        self.run_observed(seeds, params, rng, |_, _| {})
    }

    /// Like [`SirSimulator::run`], calling `observe(t, states)` after the
    /// initial seeding (`t = 0`) and after every step.
    pub fn run_observed<R, F>(
        &mut self,
        seeds: &[usize],
        params: &SirParams,
        rng: &mut R,
        mut observe: F,
    ) -> Result<SirRun>
    where
        R: Rng,
        F: FnMut(usize, &[NodeState]),
    {
        if seeds.is_empty() {
            return Err(invalid("at least one seed node is required"));
        }
        for &s in seeds {
            self.graph.check_node(s)?;
        }
        self.reset();
        for &s in seeds {
            if self.state[s] == NodeState::Susceptible {
                self.state[s] = NodeState::Infectious;
                self.infectious.push(s);
                self.ever_infected.push(s);
            }
        }

        let mut curve = vec![self.ever_infected.len()];
        observe(0, &self.state);
        let mut step = 0;
        while !self.infectious.is_empty() && params.max_steps.is_none_or(|cap| step < cap) {
            step += 1;
            for &u in &self.infectious {
                for &v in self.graph.neighbors(u) {
                    if self.state[v] == NodeState::Susceptible && rng.random::<f64>() < params.beta {
                        self.state[v] = NodeState::Infectious;
                        self.newly_infected.push(v);
                    }
                }
            }
            for &u in &self.infectious {
                if params.gamma >= 1.0 || rng.random::<f64>() < params.gamma {
                    self.state[u] = NodeState::Recovered;
                } else {
                    self.next_infectious.push(u);
                }
            }
            self.ever_infected.extend_from_slice(&self.newly_infected);
            self.next_infectious.append(&mut self.newly_infected);
            std::mem::swap(&mut self.infectious, &mut self.next_infectious);
            self.next_infectious.clear();

            curve.push(self.ever_infected.len());
            observe(step, &self.state);
        }

        Ok(SirRun {
            final_count: self.ever_infected.len(),
            steps: step,
            curve,
        })
    }

    fn reset(&mut self) {
        for &v in &self.ever_infected {
            self.state[v] = NodeState::Susceptible;
        }
        self.ever_infected.clear();
        self.infectious.clear();
        self.next_infectious.clear();
        self.newly_infected.clear();
    }
}

/// One outbreak from `seeds` using the caller's random stream.
pub fn run_single<R: Rng>(graph: &Graph, seeds: &[usize], params: &SirParams, rng: &mut R) -> Result<SirRun> {
    SirSimulator::new(graph).run(seeds, params, rng)
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Random stream for replication `replication` of the outbreak identified by `key`.
pub fn replication_rng(rng_seed: u64, key: u64, replication: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(rng_seed ^ splitmix64(key)));
    rng.set_stream(replication);
    rng
}

/// Stream key of a seed set. A single seed `v` uses `v`, so a one-node curve
/// replays exactly the outbreaks behind that node's spreading score.
pub fn seed_set_key(seeds: &[usize]) -> u64 {
    let mut sorted = seeds.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    match sorted.as_slice() {
        [single] => *single as u64,
        many => many
            .iter()
            .fold(0xA076_1D64_78BD_642F, |h, &s| splitmix64(h ^ s as u64)),
    }
}

struct Tally {
    sum: u64,
    sum_sq: u128,
}

impl Tally {
    fn summarize(&self, replications: usize) -> (f64, f64) {
        let r = replications as f64;
        let mean = self.sum as f64 / r;
        let std = if replications > 1 {
            let sq = self.sum_sq as f64 - (self.sum as f64) * (self.sum as f64) / r;
            (sq.max(0.0) / (r - 1.0)).sqrt()
        } else {
            0.0
        };
        (mean, std)
    }
}

fn replicate(graph: &Graph, seeds: &[usize], params: &SirParams) -> Result<Vec<SirRun>> {
    params.validate()?;
    let key = seed_set_key(seeds);
    (0..params.replications as u64)
        .into_par_iter()
        .map_init(
            || SirSimulator::new(graph),
            |sim, r| sim.run(seeds, params, &mut replication_rng(params.rng_seed, key, r)),
        )
        .collect()
}

/// Mean outbreak size when `seed` is the only initially infected node.
pub fn spreading_score(graph: &Graph, seed: usize, params: &SirParams) -> Result<SirResult> {
    let runs = replicate(graph, &[seed], params)?;
    let scores: Vec<usize> = runs.iter().map(|r| r.final_count).collect();
    let tally = Tally {
        sum: scores.iter().map(|&s| s as u64).sum(),
        sum_sq: scores.iter().map(|&s| (s as u128) * (s as u128)).sum(),
    };
    let (mean_score, score_std) = tally.summarize(params.replications);
    Ok(SirResult {
        mean_score,
        score_std,
        replications: params.replications,
        per_replication_scores: Some(scores),
        curve: None,
    })
}

/// Mean cumulative ever-infected count over `t = 0..=max_steps` for an
/// outbreak started from `seeds`.
pub fn spread_curve(graph: &Graph, seeds: &[usize], params: &SirParams) -> Result<SirResult> {
    let steps = params
        .max_steps
        .ok_or_else(|| invalid("a spread curve needs max_steps"))?;
    let runs = replicate(graph, seeds, params)?;
    let mut totals = vec![0u64; steps + 1];
    for run in &runs {
        let last = *run.curve.last().expect("curve holds the seed count");
        for (t, slot) in totals.iter_mut().enumerate() {
            // extinct outbreaks stay at their final size
            *slot += *run.curve.get(t).unwrap_or(&last) as u64;
        }
    }
    let tally = Tally {
        sum: runs.iter().map(|r| r.final_count as u64).sum(),
        sum_sq: runs.iter().map(|r| (r.final_count as u128).pow(2)).sum(),
    };
    let (mean_score, score_std) = tally.summarize(params.replications);
    let r = params.replications as f64;
    Ok(SirResult {
        mean_score,
        score_std,
        replications: params.replications,
        per_replication_scores: None,
        curve: Some(totals.into_iter().map(|t| t as f64 / r).collect()),
    })
}

/// Spreading score of every node, each from its own random streams.
pub fn score_all_nodes(graph: &Graph, params: &SirParams) -> Result<Vec<SirResult>> {
    params.validate()?;
    (0..graph.node_count())
        .into_par_iter()
        .map_init(
            || SirSimulator::new(graph),
            |sim, node| {
                let mut tally = Tally { sum: 0, sum_sq: 0 };
                for r in 0..params.replications as u64 {
                    let mut rng = replication_rng(params.rng_seed, node as u64, r);
                    let size = sim.run(&[node], params, &mut rng)?.final_count;
                    tally.sum += size as u64;
                    tally.sum_sq += (size as u128) * (size as u128);
                }
                let (mean_score, score_std) = tally.summarize(params.replications);
                Ok(SirResult {
                    mean_score,
                    score_std,
                    replications: params.replications,
                    per_replication_scores: None,
                    curve: None,
                })
            },
        )
        .collect()
}

pub fn mean_scores(results: &[SirResult]) -> Vec<f64> {
    results.iter().map(|r| r.mean_score).collect()
}

/// `node,mean_score,std` CSV.
pub fn write_scores_csv<W: Write>(results: &[SirResult], labels: Option<&NodeLabels>, mut out: W) -> Result<()> {
    writeln!(out, "node,mean_score,std")?;
    for (node, r) in results.iter().enumerate() {
        let mean = format_significant(r.mean_score, 12);
        let std = format_significant(r.score_std, 12);
        match labels {
            Some(l) => writeln!(out, "{},{mean},{std}", l.label(node))?,
            None => writeln!(out, "{node},{mean},{std}")?,
        }
    }
    Ok(())
}

/// `t,mean_cumulative_infected` CSV.
pub fn write_curve_csv<W: Write>(curve: &[f64], mut out: W) -> Result<()> {
    writeln!(out, "t,mean_cumulative_infected")?;
    for (t, value) in curve.iter().enumerate() {
        writeln!(out, "{t},{}", format_significant(*value, 12))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{cycle, path};
    use crate::graph::generate_barabasi_albert;
    use proptest::prelude::*;

    fn params(beta: f64, gamma: f64, reps: usize) -> SirParams {
        SirParams::new(beta, gamma, reps, 17).unwrap()
    }

    #[test]
    fn no_transmission_ends_after_one_step() {
        let run = run_single(&path(4), &[1], &params(0.0, 1.0, 1), &mut replication_rng(1, 1, 0)).unwrap();
        assert_eq!((run.final_count, run.steps), (1, 1));
        assert_eq!(run.curve, vec![1, 1]);
    }

    #[test]
    fn certain_transmission_floods_component() {
        let g = Graph::from_simple_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5)]).unwrap();
        let p = params(1.0, 1.0, 1);
        let mut rng = replication_rng(3, 0, 0);
        assert_eq!(run_single(&g, &[0], &p, &mut rng).unwrap().final_count, 3);
        assert_eq!(run_single(&g, &[5], &p, &mut rng).unwrap().final_count, 3);
        let connected = cycle(9);
        for s in 0..9 {
            assert_eq!(run_single(&connected, &[s], &p, &mut rng).unwrap().final_count, 9);
        }
    }

    #[test]
    fn deterministic_cascade_curve() {
        let p = params(1.0, 1.0, 3).with_max_steps(6);
        let result = spread_curve(&path(4), &[0], &p).unwrap();
        assert_eq!(result.curve.unwrap(), vec![1.0, 2.0, 3.0, 4.0, 4.0, 4.0, 4.0]);
    }

    #[test]
    fn step_cap_counts_still_infectious_nodes() {
        let p = params(1.0, 1.0, 1).with_max_steps(2);
        let run = run_single(&path(6), &[0], &p, &mut replication_rng(0, 0, 0)).unwrap();
        assert_eq!((run.final_count, run.steps), (3, 2));
    }

    #[test]
    fn rejects_bad_input() {
        let g = path(3);
        let p = params(0.5, 1.0, 1);
        let mut rng = replication_rng(0, 0, 0);
        assert!(run_single(&g, &[], &p, &mut rng).is_err());
        assert!(run_single(&g, &[3], &p, &mut rng).is_err());
        assert!(SirParams::new(1.5, 1.0, 1, 0).is_err());
        assert!(SirParams::new(0.5, 0.0, 1, 0).is_err());
        assert!(SirParams::new(0.5, 1.0, 0, 0).is_err());
        assert!(spread_curve(&g, &[0], &p).is_err());
    }

    #[test]
    fn zero_beta_scores_exactly_one() {
        let g = generate_barabasi_albert(30, 2, 4).unwrap();
        let r = spreading_score(&g, 0, &params(0.0, 0.3, 50)).unwrap();
        assert_eq!((r.mean_score, r.score_std), (1.0, 0.0));
        let all = score_all_nodes(&g, &params(0.0, 1.0, 20)).unwrap();
        assert!(all.iter().all(|r| r.mean_score == 1.0));
    }

    #[test]
    fn isolated_seed_scores_one() {
        let g = Graph::from_simple_edges(3, [(0, 1)]).unwrap();
        let r = spreading_score(&g, 2, &params(0.9, 0.5, 40)).unwrap();
        assert_eq!(r.mean_score, 1.0);
    }

    #[test]
    fn single_node_curve_replays_its_score() {
        let g = generate_barabasi_albert(40, 2, 8).unwrap();
        let p = params(0.3, 1.0, 200).with_max_steps(1000);
        let score = spreading_score(&g, 5, &p).unwrap();
        let curve = spread_curve(&g, &[5], &p).unwrap();
        assert_eq!(score.mean_score, curve.mean_score);
        assert_eq!(*curve.curve.unwrap().last().unwrap(), score.mean_score);
    }

    #[test]
    fn all_node_scores_match_individual_scores() {
        let g = generate_barabasi_albert(25, 2, 5).unwrap();
        let p = params(0.2, 0.7, 30);
        let all = score_all_nodes(&g, &p).unwrap();
        for node in [0, 7, 24] {
            let single = spreading_score(&g, node, &p).unwrap();
            assert_eq!(all[node].mean_score, single.mean_score);
            assert_eq!(all[node].score_std, single.score_std);
        }
    }

    #[test]
    fn csv_writers() {
        let results = vec![SirResult {
            mean_score: 1.5,
            score_std: 0.5,
            replications: 2,
            per_replication_scores: None,
            curve: None,
        }];
        let mut buf = Vec::new();
        write_scores_csv(&results, None, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "node,mean_score,std\n0,1.50000000000,0.500000000000\n");
        let mut buf = Vec::new();
        write_curve_csv(&[1.0, 2.25], &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "t,mean_cumulative_infected\n0,1.00000000000\n1,2.25000000000\n");
    }

    proptest! {
        #[test]
        fn states_are_conserved_and_monotone(
            seed: u64,
            beta in 0.0f64..=1.0,
            gamma in 0.05f64..=1.0,
            source in 0usize..50,
        ) {
            let g = generate_barabasi_albert(50, 2, seed).unwrap();
            let p = SirParams::new(beta, gamma, 1, seed).unwrap();
            let mut sim = SirSimulator::new(&g);
            let mut previous: Vec<NodeState> = Vec::new();
            let mut recovered_before = 0;
            let mut violations = Vec::new();
            sim.run_observed(&[source], &p, &mut replication_rng(seed, 0, 0), |t, states| {
                let recovered = states.iter().filter(|&&s| s == NodeState::Recovered).count();
                if recovered < recovered_before {
                    violations.push(format!("R decreased at t={t}"));
                }
                recovered_before = recovered;
                for (v, (&now, &before)) in states.iter().zip(&previous).enumerate() {
                    let ok = matches!(
                        (before, now),
                        (NodeState::Susceptible, NodeState::Susceptible | NodeState::Infectious)
                            | (NodeState::Infectious, NodeState::Infectious | NodeState::Recovered)
                            | (NodeState::Recovered, NodeState::Recovered)
                    );
                    if !ok {
                        violations.push(format!("node {v}: {before:?} -> {now:?} at t={t}"));
                    }
                }
                previous = states.to_vec();
            }).unwrap();
            prop_assert!(violations.is_empty(), "{:?}", violations);
            prop_assert_eq!(previous.len(), 50);
        }

        #[test]
        fn unit_recovery_means_one_infectious_step(seed: u64, beta in 0.0f64..=1.0) {
            let g = generate_barabasi_albert(40, 3, seed).unwrap();
            let p = SirParams::new(beta, 1.0, 1, seed).unwrap();
            let mut infectious_steps = vec![0usize; 40];
            let run = SirSimulator::new(&g).run_observed(&[0], &p, &mut replication_rng(seed, 1, 0), |_, states| {
                for (v, s) in states.iter().enumerate() {
                    if *s == NodeState::Infectious {
                        infectious_steps[v] += 1;
                    }
                }
            }).unwrap();
            prop_assert!(infectious_steps.iter().all(|&c| c <= 1));
            prop_assert_eq!(infectious_steps.iter().sum::<usize>(), run.final_count);
            // each step can push the cascade at most one hop further
            let depth = crate::graph::bfs_distances(&g, 0).unwrap();
            let reached_depth = infectious_steps
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(v, _)| depth[v].unwrap())
                .max()
                .unwrap();
            prop_assert!(reached_depth < run.steps.max(1));
        }

        #[test]
        fn curves_are_monotone_and_start_at_seed_count(
            seed: u64,
            beta in 0.0f64..=1.0,
            seeds in proptest::collection::btree_set(0usize..60, 1..6),
        ) {
            let g = generate_barabasi_albert(60, 2, seed).unwrap();
            let seeds: Vec<usize> = seeds.into_iter().collect();
            let p = SirParams::new(beta, 0.5, 8, seed).unwrap().with_max_steps(25);
            let curve = spread_curve(&g, &seeds, &p).unwrap().curve.unwrap();
            prop_assert_eq!(curve.len(), 26);
            prop_assert_eq!(curve[0], seeds.len() as f64);
            prop_assert!(curve.windows(2).all(|w| w[0] <= w[1]));
            prop_assert!(curve.iter().all(|&c| c <= 60.0));
        }
    }
}

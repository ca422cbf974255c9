use rayon::prelude::*;
use serde::Serialize;

use super::{objective, ExtremalRecord, Family, Method, Scorer, TieSet, TIE_TOL};
use crate::constructions::{extremal_graph, witness_s};
use crate::error::{Error, Result};
use crate::graph::{generate, Graph, GraphKind};
use crate::limits::check_order;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocalSearchConfig {
    pub seed: u64,
    /// Maximum number of accepted flips per start.
    pub iterations: usize,
    /// Number of random starts; start `r` is seeded with `seed + r`.
    pub restarts: usize,
}

impl LocalSearchConfig {
    pub fn new(seed: u64, iterations: usize, restarts: usize) -> Result<Self> {
        let config = LocalSearchConfig { seed, iterations, restarts };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<()> {
        if self.iterations == 0 || self.restarts == 0 {
            return Err(Error::param("iterations and restarts must be at least 1"));
        }
        Ok(())
    }
}

impl Default for LocalSearchConfig {
    fn default() -> Self {
        LocalSearchConfig { seed: 0, iterations: 200, restarts: 8 }
    }
}

/// Constructive starts `extremal_graph(k, t)` with `2^{k+1} t = n` and
/// `s = 2^{k-1} + 1`.
fn constructive_starts(n: usize, s: usize) -> Result<Vec<Graph>> {
    let mut starts = Vec::new();
    let mut k = 1;
    while (1usize << (k + 1)) <= n && k < usize::BITS as usize - 2 {
        let block = 1usize << (k + 1);
        if n.is_multiple_of(block) && witness_s(k) == s {
            starts.push(extremal_graph(k, n / block)?);
        }
        k += 1;
    }
    Ok(starts)
}

struct Climb {
    value: f64,
    graph: Graph,
    evaluations: u64,
}

/// Steepest ascent over all single-edge flips. The first best flip in pair
/// order wins; a flip is taken only if it improves by more than the tie tolerance.
fn climb(mut graph: Graph, s: usize, family: Family, iterations: usize) -> Result<Climb> {
    let n = graph.order();
    let mut scorer = Scorer::new(n, s, family);
    scorer.load(&graph);
    let mut value = scorer.score()?;
    let mut evaluations = 1u64;
    for _ in 0..iterations {
        let mut best: Option<(f64, usize, usize)> = None;
        for j in 1..n {
            for i in 0..j {
                scorer.flip(i, j);
                let v = scorer.score()?;
                scorer.flip(i, j);
                evaluations += 1;
                if v > value + TIE_TOL && best.is_none_or(|(b, _, _)| v > b) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((v, i, j)) = best else { break };
        scorer.flip(i, j);
        graph.toggle0(i, j);
        value = v;
    }
    Ok(Climb { value, graph, evaluations })
}

/// Heuristic lower bound on the extremal value by hill climbing from
/// `config.restarts` random `G(n, 1/2)` starts plus any constructive starts.
///
/// The result is deterministic for a fixed config. The reported value is the
/// witness rescored from scratch, so it is a certified lower bound.
pub fn local_search_f(n: usize, s: usize, family: Family, config: &LocalSearchConfig) -> Result<ExtremalRecord> {
    check_order(n)?;
    family.validate(n, s)?;
    config.validate()?;

    let mut starts = constructive_starts(n, s)?;
    for r in 0..config.restarts {
        let seed = config.seed.wrapping_add(r as u64);
        starts.push(generate(&GraphKind::ErdosRenyi { n, p: 0.5 }, seed)?);
    }

    let climbs = starts
        .into_par_iter()
        .map(|g| climb(g, s, family, config.iterations))
        .collect::<Result<Vec<_>>>()?;

    let evaluations = climbs.iter().map(|c| c.evaluations).sum();
    let mut ties = TieSet::new();
    for c in climbs {
        ties.offer(c.value, c.graph.to_graph6());
    }
    let (_, candidates) = ties.finish();
    let witness = candidates
        .into_iter()
        .min()
        .ok_or_else(|| Error::Internal("local search produced no candidates".into()))?;
    let value = objective(&Graph::from_graph6(&witness)?, s, family)?;

    Ok(ExtremalRecord {
        n,
        s,
        family,
        value,
        witness,
        method: Method::LocalSearch,
        exact: false,
        evaluations,
        seed: Some(config.seed),
    })
}
